#pragma once

#include <complex>
#include <initializer_list>
#include <vector>

namespace mfold {

using Complex = std::complex<double>;

/// Power series truncated at a fixed degree N. coeff(k) is the coefficient
/// of z^k for 0 <= k <= N. Coefficients above N are unknown, not zero:
/// every binary operation truncates its result to the smaller input order,
/// and reading past the order throws.
class TruncatedSeries {
 public:
  TruncatedSeries() : coeffs_(1) {}
  explicit TruncatedSeries(std::vector<Complex> coeffs);
  TruncatedSeries(std::initializer_list<Complex> coeffs);

  static TruncatedSeries zero(int order);
  static TruncatedSeries constant(Complex value, int order);
  static TruncatedSeries identity(int order);  // z
  static TruncatedSeries monomial(Complex value, int degree, int order);

  int order() const { return static_cast<int>(coeffs_.size()) - 1; }
  Complex coeff(int k) const;
  void set_coeff(int k, Complex v);
  const std::vector<Complex>& coeffs() const { return coeffs_; }

  TruncatedSeries truncated(int order) const;

  // a0 = 0 and a1 = 1 within tol.
  bool is_normalized(double tol = 1e-9) const;

  // Horner evaluation of the truncation (a polynomial statement about the
  // first N+1 terms, not a claim about the underlying function).
  Complex eval(Complex z) const;

  friend TruncatedSeries operator+(const TruncatedSeries& a, const TruncatedSeries& b);
  friend TruncatedSeries operator-(const TruncatedSeries& a, const TruncatedSeries& b);
  friend TruncatedSeries operator*(const TruncatedSeries& a, const TruncatedSeries& b);
  friend TruncatedSeries operator*(Complex s, const TruncatedSeries& a);
  friend TruncatedSeries operator-(const TruncatedSeries& a);

 private:
  std::vector<Complex> coeffs_;
};

/// Termwise k*a_k shifted down one degree; result order N-1. Throws on an
/// order-0 input (nothing is known about the derivative's constant term).
TruncatedSeries derivative(const TruncatedSeries& a);

/// Termwise a_k/(k+1) shifted up one degree, constant term 0; order N+1.
TruncatedSeries integral(const TruncatedSeries& a);

/// outer(inner(z)) truncated to min(orders). inner must have zero constant
/// term, otherwise the truncated coefficients would not be well defined.
TruncatedSeries compose(const TruncatedSeries& outer, const TruncatedSeries& inner);

/// 1/a by the convolution recurrence; requires a0 != 0.
TruncatedSeries reciprocal(const TruncatedSeries& a);

/// log(a) with a0 = 1 (principal branch), via integral(a'/a).
TruncatedSeries log1(const TruncatedSeries& a);

/// exp(a) with a0 = 0, via the recurrence n*e_n = sum_{j=1..n} j*a_j*e_{n-j}.
TruncatedSeries exp0(const TruncatedSeries& a);

/// a^e for real e with a0 = 1 (principal branch), as exp0(e*log1(a)).
/// e = 1 returns a unchanged and e = 0 returns the constant 1.
TruncatedSeries pow_real(const TruncatedSeries& a, double exponent);

/// Multiply by z: shifts known coefficients up, order N+1.
TruncatedSeries times_z(const TruncatedSeries& a);

/// Divide by z: requires a0 = 0 (within 1e-9); order N-1.
TruncatedSeries over_z(const TruncatedSeries& a);

/// max |a_k - b_k| over k up to min(orders).
double max_coeff_distance(const TruncatedSeries& a, const TruncatedSeries& b);

/// Normalized m-fold symmetric function truncated at symmetric index K:
/// f(z) = z + sum_{k=1..K} a_{mk+1} z^{mk+1}. coeff(k) is a_{mk+1}.
class MFoldFn {
 public:
  MFoldFn(int m, std::vector<Complex> coeffs);

  int m() const { return m_; }
  int index_count() const { return static_cast<int>(coeffs_.size()); }  // K
  Complex coeff(int k) const;  // a_{mk+1}, 1 <= k <= K
  const std::vector<Complex>& coeffs() const { return coeffs_; }

  /// TruncatedSeries of order m*K+1 with support {1, m+1, ..., mK+1}.
  TruncatedSeries embed() const;

  /// Extracts the m-fold support of a normalized series. Throws if any
  /// off-support coefficient exceeds tol.
  static MFoldFn from_series(const TruncatedSeries& f, int m, double tol = 1e-8);

 private:
  int m_;
  std::vector<Complex> coeffs_;
};

/// h(z) = (f(z^m))^{1/m} for normalized f, truncated at symmetric index K.
/// Computed by factoring f(t) = t*u(t) with u(0) = 1 and taking u^{1/m},
/// so only the principal branch is ever involved. Requires f.order() >= K+1.
MFoldFn symmetrize(const TruncatedSeries& f, int m, int K);

}  // namespace mfold
