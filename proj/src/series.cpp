#include "mfold/series.hpp"

#include <algorithm>
#include <cmath>
#include <stdexcept>
#include <string>

namespace mfold {

namespace {
constexpr double kConstantTol = 1e-9;
}

TruncatedSeries::TruncatedSeries(std::vector<Complex> coeffs) : coeffs_(std::move(coeffs)) {
  if (coeffs_.empty()) throw std::invalid_argument("series: need at least the constant term");
}

TruncatedSeries::TruncatedSeries(std::initializer_list<Complex> coeffs)
    : TruncatedSeries(std::vector<Complex>(coeffs)) {}

TruncatedSeries TruncatedSeries::zero(int order) {
  if (order < 0) throw std::invalid_argument("series: negative order");
  return TruncatedSeries(std::vector<Complex>(order + 1));
}

TruncatedSeries TruncatedSeries::constant(Complex value, int order) {
  TruncatedSeries s = zero(order);
  s.coeffs_[0] = value;
  return s;
}

TruncatedSeries TruncatedSeries::identity(int order) {
  return monomial(1.0, 1, order);
}

TruncatedSeries TruncatedSeries::monomial(Complex value, int degree, int order) {
  if (degree < 0 || degree > order)
    throw std::invalid_argument("series: monomial degree outside [0, order]");
  TruncatedSeries s = zero(order);
  s.coeffs_[degree] = value;
  return s;
}

Complex TruncatedSeries::coeff(int k) const {
  if (k < 0 || k > order())
    throw std::out_of_range("series: coefficient index " + std::to_string(k) +
                            " beyond truncation order " + std::to_string(order()));
  return coeffs_[k];
}

void TruncatedSeries::set_coeff(int k, Complex v) {
  if (k < 0 || k > order())
    throw std::out_of_range("series: coefficient index beyond truncation order");
  coeffs_[k] = v;
}

TruncatedSeries TruncatedSeries::truncated(int order) const {
  if (order < 0 || order > this->order())
    throw std::invalid_argument("series: truncation order outside [0, N]");
  return TruncatedSeries(std::vector<Complex>(coeffs_.begin(), coeffs_.begin() + order + 1));
}

bool TruncatedSeries::is_normalized(double tol) const {
  return order() >= 1 && std::abs(coeffs_[0]) <= tol && std::abs(coeffs_[1] - 1.0) <= tol;
}

Complex TruncatedSeries::eval(Complex z) const {
  Complex acc = coeffs_.back();
  for (int k = order() - 1; k >= 0; --k) acc = acc * z + coeffs_[k];
  return acc;
}

TruncatedSeries operator+(const TruncatedSeries& a, const TruncatedSeries& b) {
  const int n = std::min(a.order(), b.order());
  TruncatedSeries r = TruncatedSeries::zero(n);
  for (int k = 0; k <= n; ++k) r.coeffs_[k] = a.coeffs_[k] + b.coeffs_[k];
  return r;
}

TruncatedSeries operator-(const TruncatedSeries& a, const TruncatedSeries& b) {
  const int n = std::min(a.order(), b.order());
  TruncatedSeries r = TruncatedSeries::zero(n);
  for (int k = 0; k <= n; ++k) r.coeffs_[k] = a.coeffs_[k] - b.coeffs_[k];
  return r;
}

TruncatedSeries operator*(const TruncatedSeries& a, const TruncatedSeries& b) {
  const int n = std::min(a.order(), b.order());
  TruncatedSeries r = TruncatedSeries::zero(n);
  for (int i = 0; i <= n; ++i) {
    if (a.coeffs_[i] == Complex{}) continue;
    for (int j = 0; i + j <= n; ++j) r.coeffs_[i + j] += a.coeffs_[i] * b.coeffs_[j];
  }
  return r;
}

TruncatedSeries operator*(Complex s, const TruncatedSeries& a) {
  TruncatedSeries r = a;
  for (auto& c : r.coeffs_) c *= s;
  return r;
}

TruncatedSeries operator-(const TruncatedSeries& a) { return Complex{-1.0} * a; }

TruncatedSeries derivative(const TruncatedSeries& a) {
  if (a.order() < 1)
    throw std::invalid_argument("derivative: order-0 series carries no derivative information");
  TruncatedSeries r = TruncatedSeries::zero(a.order() - 1);
  for (int k = 1; k <= a.order(); ++k) r.set_coeff(k - 1, static_cast<double>(k) * a.coeff(k));
  return r;
}

TruncatedSeries integral(const TruncatedSeries& a) {
  TruncatedSeries r = TruncatedSeries::zero(a.order() + 1);
  for (int k = 0; k <= a.order(); ++k) r.set_coeff(k + 1, a.coeff(k) / static_cast<double>(k + 1));
  return r;
}

TruncatedSeries compose(const TruncatedSeries& outer, const TruncatedSeries& inner) {
  if (std::abs(inner.coeff(0)) > kConstantTol)
    throw std::invalid_argument("compose: inner series must have zero constant term");
  const int n = std::min(outer.order(), inner.order());
  const TruncatedSeries in = inner.truncated(n);
  // Horner over the outer coefficients; every product stays at order n.
  TruncatedSeries acc = TruncatedSeries::constant(outer.coeff(n), n);
  for (int k = n - 1; k >= 0; --k) {
    acc = acc * in;
    acc.set_coeff(0, acc.coeff(0) + outer.coeff(k));
  }
  return acc;
}

TruncatedSeries reciprocal(const TruncatedSeries& a) {
  const Complex a0 = a.coeff(0);
  if (std::abs(a0) < 1e-14)
    throw std::invalid_argument("reciprocal: zero constant term");
  TruncatedSeries r = TruncatedSeries::zero(a.order());
  r.set_coeff(0, 1.0 / a0);
  for (int n = 1; n <= a.order(); ++n) {
    Complex s{};
    for (int k = 1; k <= n; ++k) s += a.coeff(k) * r.coeff(n - k);
    r.set_coeff(n, -s / a0);
  }
  return r;
}

TruncatedSeries log1(const TruncatedSeries& a) {
  const Complex a0 = a.coeff(0);
  if (std::abs(a0 - 1.0) > kConstantTol)
    throw std::invalid_argument("log1: constant term must be 1");
  if (a.order() == 0) return TruncatedSeries::constant(std::log(a0), 0);
  TruncatedSeries r = integral(derivative(a) * reciprocal(a));
  r.set_coeff(0, std::log(a0));
  return r;
}

TruncatedSeries exp0(const TruncatedSeries& a) {
  const Complex a0 = a.coeff(0);
  if (std::abs(a0) > 1e-8)
    throw std::invalid_argument("exp0: constant term must be 0");
  TruncatedSeries r = TruncatedSeries::zero(a.order());
  r.set_coeff(0, std::exp(a0));
  for (int n = 1; n <= a.order(); ++n) {
    Complex s{};
    for (int j = 1; j <= n; ++j) s += static_cast<double>(j) * a.coeff(j) * r.coeff(n - j);
    r.set_coeff(n, s / static_cast<double>(n));
  }
  return r;
}

TruncatedSeries pow_real(const TruncatedSeries& a, double exponent) {
  if (std::abs(a.coeff(0) - 1.0) > kConstantTol)
    throw std::invalid_argument("pow_real: constant term must be 1 (principal branch)");
  if (exponent == 1.0) return a;
  if (exponent == 0.0) return TruncatedSeries::constant(1.0, a.order());
  return exp0(Complex{exponent} * log1(a));
}

TruncatedSeries times_z(const TruncatedSeries& a) {
  TruncatedSeries r = TruncatedSeries::zero(a.order() + 1);
  for (int k = 0; k <= a.order(); ++k) r.set_coeff(k + 1, a.coeff(k));
  return r;
}

TruncatedSeries over_z(const TruncatedSeries& a) {
  if (a.order() < 1) throw std::invalid_argument("over_z: order-0 series");
  if (std::abs(a.coeff(0)) > kConstantTol)
    throw std::invalid_argument("over_z: constant term must be 0");
  TruncatedSeries r = TruncatedSeries::zero(a.order() - 1);
  for (int k = 1; k <= a.order(); ++k) r.set_coeff(k - 1, a.coeff(k));
  return r;
}

double max_coeff_distance(const TruncatedSeries& a, const TruncatedSeries& b) {
  const int n = std::min(a.order(), b.order());
  double d = 0.0;
  for (int k = 0; k <= n; ++k) d = std::max(d, std::abs(a.coeff(k) - b.coeff(k)));
  return d;
}

MFoldFn::MFoldFn(int m, std::vector<Complex> coeffs) : m_(m), coeffs_(std::move(coeffs)) {
  if (m_ < 1) throw std::invalid_argument("mfold: m must be >= 1");
  if (coeffs_.empty()) throw std::invalid_argument("mfold: need at least one coefficient");
}

Complex MFoldFn::coeff(int k) const {
  if (k < 1 || k > index_count())
    throw std::out_of_range("mfold: symmetric index outside [1, K]");
  return coeffs_[k - 1];
}

TruncatedSeries MFoldFn::embed() const {
  TruncatedSeries s = TruncatedSeries::zero(m_ * index_count() + 1);
  s.set_coeff(1, 1.0);
  for (int k = 1; k <= index_count(); ++k) s.set_coeff(m_ * k + 1, coeffs_[k - 1]);
  return s;
}

MFoldFn MFoldFn::from_series(const TruncatedSeries& f, int m, double tol) {
  if (m < 1) throw std::invalid_argument("mfold: m must be >= 1");
  if (!f.is_normalized(tol))
    throw std::invalid_argument("mfold: series not normalized (a0 = 0, a1 = 1)");
  const int K = (f.order() - 1) / m;
  if (K < 1) throw std::invalid_argument("mfold: order too small to hold a_{m+1}");
  std::vector<Complex> coeffs(K);
  for (int k = 2; k <= f.order(); ++k) {
    if ((k - 1) % m == 0 && (k - 1) / m <= K) {
      coeffs[(k - 1) / m - 1] = f.coeff(k);
    } else if (std::abs(f.coeff(k)) > tol) {
      throw std::invalid_argument("mfold: nonzero coefficient off the m-fold support at degree " +
                                  std::to_string(k));
    }
  }
  return MFoldFn(m, std::move(coeffs));
}

MFoldFn symmetrize(const TruncatedSeries& f, int m, int K) {
  if (m < 1) throw std::invalid_argument("symmetrize: m must be >= 1");
  if (K < 1) throw std::invalid_argument("symmetrize: K must be >= 1");
  if (!f.is_normalized())
    throw std::invalid_argument("symmetrize: series not normalized");
  if (f.order() < K + 1)
    throw std::invalid_argument("symmetrize: need input order >= K+1");
  // f(t) = t*u(t) with u(0) = 1; h(z) = z * u(z^m)^{1/m}, so the symmetric
  // coefficients are just those of u^{1/m} read off in the sector variable.
  const TruncatedSeries u = over_z(f.truncated(K + 1));
  const TruncatedSeries p = pow_real(u, 1.0 / static_cast<double>(m));
  std::vector<Complex> coeffs(K);
  for (int k = 1; k <= K; ++k) coeffs[k - 1] = p.coeff(k);
  return MFoldFn(m, std::move(coeffs));
}

}  // namespace mfold
