#include "mfold/exemplars.hpp"

#include <cmath>
#include <limits>
#include <stdexcept>

namespace mfold {

namespace {

TruncatedSeries one_minus_t(int order) {
  TruncatedSeries s = TruncatedSeries::constant(1.0, order);
  s.set_coeff(1, -1.0);
  return s;
}

TruncatedSeries one_plus_t(int order) {
  TruncatedSeries s = TruncatedSeries::constant(1.0, order);
  s.set_coeff(1, 1.0);
  return s;
}

// Unit-constant cofactor u with base(t) = t*u(t), at order K.
TruncatedSeries forward_cofactor(ExemplarName name, int K) {
  switch (name) {
    case ExemplarName::KoebeLike:
      // t/(1-t) = t * 1/(1-t)
      return reciprocal(one_minus_t(K));
    case ExemplarName::Log:
      // -log(1-t) = t * (1 + t/2 + t^2/3 + ...)
      return over_z(-log1(one_minus_t(K + 1)));
    case ExemplarName::Atanh:
      // log((1+t)/(1-t))/2 = t * (1 + t^2/3 + ...)
      return over_z(Complex{0.5} * (log1(one_plus_t(K + 1)) - log1(one_minus_t(K + 1))));
  }
  throw std::invalid_argument("exemplar: unknown name");
}

TruncatedSeries inverse_cofactor(ExemplarName name, int K) {
  switch (name) {
    case ExemplarName::KoebeLike:
      // t/(1+t) = t * 1/(1+t)
      return reciprocal(one_plus_t(K));
    case ExemplarName::Log: {
      // (e^t-1)/e^t = 1 - e^{-t} = t * (1 - t/2 + t^2/6 - ...)
      const TruncatedSeries e = exp0(-TruncatedSeries::identity(K + 1));
      return over_z(TruncatedSeries::constant(1.0, K + 1) - e);
    }
    case ExemplarName::Atanh: {
      // tanh(t) = (e^{2t}-1)/(e^{2t}+1)
      const TruncatedSeries e = exp0(Complex{2.0} * TruncatedSeries::identity(K + 1));
      const TruncatedSeries num = e - TruncatedSeries::constant(1.0, K + 1);
      const TruncatedSeries den = e + TruncatedSeries::constant(1.0, K + 1);
      return over_z(num) * reciprocal(den.truncated(K));
    }
  }
  throw std::invalid_argument("exemplar: unknown name");
}

MFoldFn from_cofactor(const TruncatedSeries& u, int m, int K) {
  const TruncatedSeries p = pow_real(u, 1.0 / static_cast<double>(m));
  std::vector<Complex> coeffs(K);
  for (int k = 1; k <= K; ++k) coeffs[k - 1] = p.coeff(k);
  return MFoldFn(m, std::move(coeffs));
}

}  // namespace

std::string exemplar_label(ExemplarName name) {
  switch (name) {
    case ExemplarName::KoebeLike: return "koebe-like";
    case ExemplarName::Log: return "log";
    case ExemplarName::Atanh: return "atanh";
  }
  throw std::invalid_argument("exemplar: unknown name");
}

double composition_residual(const TruncatedSeries& f, const TruncatedSeries& g) {
  const TruncatedSeries c = compose(f, g);
  double worst = 0.0;
  for (int k = 0; k <= c.order(); ++k) {
    const Complex want = (k == 1) ? Complex{1.0} : Complex{};
    worst = std::max(worst, std::abs(c.coeff(k) - want));
  }
  return worst;
}

ExemplarPair build_exemplar(ExemplarName name, int m, int K) {
  if (m < 1) throw std::invalid_argument("exemplar: m must be >= 1");
  if (K < 3) throw std::invalid_argument("exemplar: need K >= 3 to carry the catalog coefficients");
  ExemplarPair pair;
  pair.name = exemplar_label(name);
  pair.m = m;
  pair.order = m * K + 1;
  pair.forward = from_cofactor(forward_cofactor(name, K), m, K);
  pair.inverse = from_cofactor(inverse_cofactor(name, K), m, K);
  pair.composition_residual = composition_residual(pair.forward.embed(), pair.inverse.embed());
  pair.pairing_verified = pair.composition_residual <= 1e-10;
  return pair;
}

std::vector<PairingAuditRow> audit_1fold_pairings(int order) {
  if (order < 4) throw std::invalid_argument("audit: order must be >= 4");
  const std::vector<std::string> fwd_names = {"z/(1-z)", "-log(1-z)", "log((1+z)/(1-z))/2"};
  const std::vector<std::string> inv_names = {"(e^w-1)/e^w", "w/(1+w)", "(e^{2w}-1)/(e^{2w}+1)"};

  std::vector<TruncatedSeries> fwd;
  fwd.push_back(times_z(reciprocal(one_minus_t(order - 1))));
  fwd.push_back(-log1(one_minus_t(order)));
  fwd.push_back(Complex{0.5} * (log1(one_plus_t(order)) - log1(one_minus_t(order))));

  std::vector<TruncatedSeries> inv;
  inv.push_back(TruncatedSeries::constant(1.0, order) - exp0(-TruncatedSeries::identity(order)));
  inv.push_back(times_z(reciprocal(one_plus_t(order - 1))));
  {
    const TruncatedSeries e = exp0(Complex{2.0} * TruncatedSeries::identity(order));
    inv.push_back((e - TruncatedSeries::constant(1.0, order)) *
                  reciprocal(e + TruncatedSeries::constant(1.0, order)));
  }

  std::vector<PairingAuditRow> rows;
  for (std::size_t i = 0; i < fwd.size(); ++i) {
    PairingAuditRow row;
    row.forward_name = fwd_names[i];
    row.listed_inverse = inv_names[i];
    row.listed_residual = composition_residual(fwd[i], inv[i]);
    row.best_residual = std::numeric_limits<double>::infinity();
    for (std::size_t j = 0; j < inv.size(); ++j) {
      const double res = composition_residual(fwd[i], inv[j]);
      if (res < row.best_residual) {
        row.best_residual = res;
        row.best_inverse = inv_names[j];
      }
    }
    rows.push_back(row);
  }
  return rows;
}

}  // namespace mfold
