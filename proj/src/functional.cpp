#include "mfold/functional.hpp"

#include <algorithm>
#include <cmath>
#include <limits>
#include <stdexcept>

#include "mfold/inversion.hpp"
#include "mfold/ruscheweyh.hpp"

namespace mfold {

namespace {

const char* kNormalizationNote =
    "normalization: each side divides the operator image by its own variable "
    "(forward F(z)/z, inverse G(w)/w)";

}  // namespace

FunctionalSeries functional_series(const MFoldFn& f, const ClassParams& p, Side side) {
  p.validate();
  if (f.m() != p.m) throw std::invalid_argument("functional: f and params disagree on m");
  if (f.index_count() < 2)
    throw std::invalid_argument("functional: need coefficients through a_{2m+1}");

  MFoldFn base = f;
  if (side == Side::Inverse)
    base = MFoldFn::from_series(invert(f.embed()), f.m());

  const TruncatedSeries F = ruscheweyh_mfold(base, p.delta).embed();
  const TruncatedSeries Fp = derivative(F);
  const TruncatedSeries Fpp = derivative(Fp);
  const double l = p.lambda, g = p.gamma;

  TruncatedSeries t = Complex{(1.0 - l) * (1.0 - g)} * over_z(F) +
                      Complex{l * (g + 1.0) + g} * Fp + Complex{l * g} * times_z(Fpp);
  t.set_coeff(0, t.coeff(0) - 2.0 * l * g - 1.0);
  TruncatedSeries d = (1.0 / p.tau) * t;
  if (std::abs(d.coeff(0)) > 1e-12)
    throw std::logic_error("functional: constant term failed to cancel");
  // The cancellation is structural; pin the verified constant so downstream
  // comparisons can rely on it exactly.
  d.set_coeff(0, Complex{1.0, 0.0});
  return {std::move(d), side};
}

FunctionalCoeffs closed_coeffs(const ClassParams& p, Complex a_m1, Complex a_2m1) {
  p.validate();
  const double m = static_cast<double>(p.m);
  const double l = p.lambda, g = p.gamma;
  const double w1 = 1.0 + m * (l + g) + l * g * ((m + 1.0) * (m + 1.0) + 1.0);
  const double w2 = 1.0 + 2.0 * m * (l + g) + l * g * ((2.0 * m + 1.0) * (2.0 * m + 1.0) + 1.0);
  const double d1 = static_cast<double>(p.delta) + 1.0;
  const double d12 = d1 * (static_cast<double>(p.delta) + 2.0);

  FunctionalCoeffs c;
  c.forward_m = (w1 * d1 / p.tau) * a_m1;
  c.forward_2m = (w2 * d12 / (2.0 * p.tau)) * a_2m1;
  c.inverse_m = -(w1 * d1 / p.tau) * a_m1;
  c.inverse_2m = (w2 * d12 / (2.0 * p.tau)) * ((m + 1.0) * (a_m1 * a_m1) - a_2m1);
  return c;
}

namespace {

// Margin of one functional over the radius/sector sample set.
double circle_margin(const TruncatedSeries& d, const ClassParams& p, double r, int angles) {
  const double sector = 2.0 * 3.14159265358979323846 / static_cast<double>(p.m);
  double worst_arg = 0.0;
  double min_re = std::numeric_limits<double>::infinity();
  for (int j = 0; j < angles; ++j) {
    const double th = sector * static_cast<double>(j) / static_cast<double>(angles);
    const Complex z{r * std::cos(th), r * std::sin(th)};
    const Complex v = d.eval(z);
    if (p.kind == ClassKind::Q) {
      if (std::abs(v) < 1e-12)
        throw std::domain_error("membership: functional vanished at a sample; argument undefined");
      worst_arg = std::max(worst_arg, std::abs(std::arg(v)));
    } else {
      min_re = std::min(min_re, v.real());
    }
  }
  if (p.kind == ClassKind::Q) return p.alpha() * 3.14159265358979323846 / 2.0 - worst_arg;
  return min_re - p.beta();
}

}  // namespace

MembershipReport membership_margin(const MFoldFn& f, const ClassParams& p,
                                   const std::vector<double>& radii, int angles_per_sector) {
  if (radii.empty()) throw std::invalid_argument("membership: empty radius grid");
  if (angles_per_sector < 1) throw std::invalid_argument("membership: need at least one angle");
  for (double r : radii)
    if (!(r > 0.0 && r < 1.0))
      throw std::invalid_argument("membership: radii must lie in (0,1)");

  const TruncatedSeries fwd = functional_series(f, p, Side::Forward).series;
  const TruncatedSeries inv = functional_series(f, p, Side::Inverse).series;

  MembershipReport rep;
  rep.angles_per_sector = angles_per_sector;
  rep.forward_margin = std::numeric_limits<double>::infinity();
  rep.inverse_margin = std::numeric_limits<double>::infinity();
  for (double r : radii) {
    RadiusMargin rm;
    rm.radius = r;
    rm.forward = circle_margin(fwd, p, r, angles_per_sector);
    rm.inverse = circle_margin(inv, p, r, angles_per_sector);
    rep.forward_margin = std::min(rep.forward_margin, rm.forward);
    rep.inverse_margin = std::min(rep.inverse_margin, rm.inverse);
    rep.per_radius.push_back(rm);
  }
  rep.notes.push_back(kNormalizationNote);
  rep.notes.push_back("margins are statements about the truncated polynomial, not the full function");
  return rep;
}

}  // namespace mfold
