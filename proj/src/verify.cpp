#include "mfold/verify.hpp"

#include <cmath>

#include "mfold/bounds.hpp"
#include "mfold/functional.hpp"
#include "mfold/inversion.hpp"
#include "mfold/rng.hpp"
#include "mfold/ruscheweyh.hpp"
#include "mfold/series.hpp"

namespace mfold {

namespace {

double mixed_dev(Complex got, Complex want) {
  return std::abs(got - want) / std::max(1.0, std::abs(want));
}

double mixed_dev(double got, double want) {
  return std::abs(got - want) / std::max(1.0, std::abs(want));
}

SuiteResult suite_operator_weights(const VerifyOptions& opt) {
  SuiteResult s{"operator-weights", 0, 0.0, 1e-10, false, {}};
  for (int delta = 0; delta <= 8; ++delta) {
    for (int k = 1; k <= 16; ++k) {
      double exact = static_cast<double>(omega(delta, k).value);
      if (opt.inject_fault && delta == 2 && k == 3) exact *= 1.0 + 1e-6;
      const double oracle =
          std::exp(std::lgamma(delta + k) - std::lgamma(k) - std::lgamma(delta + 1.0));
      s.max_deviation = std::max(s.max_deviation, std::abs(exact - oracle) / oracle);
      ++s.cases;
    }
  }
  if (opt.inject_fault) s.notes.push_back("fault injection active: one weight perturbed by 1e-6");
  s.pass = s.max_deviation <= s.tolerance;
  return s;
}

SuiteResult suite_operator_embedding(const VerifyOptions& opt) {
  SuiteResult s{"operator-embedding", 0, 0.0, 0.0, false, {}};
  for (int i = 0; i < 50; ++i) {
    auto rng = SplitMix64::stream(opt.seed, 7000u + i);
    std::vector<Complex> coeffs(6);
    for (auto& c : coeffs) c = rng.disk(1.0);
    const MFoldFn f(1, coeffs);
    const int delta = rng.uniform_int(0, 6);
    const TruncatedSeries via_mfold = ruscheweyh_mfold(f, delta).embed();
    const TruncatedSeries via_plain = ruscheweyh(f.embed(), delta);
    s.max_deviation = std::max(s.max_deviation, max_coeff_distance(via_mfold, via_plain));
    ++s.cases;
  }
  s.pass = s.max_deviation <= s.tolerance;
  return s;
}

SuiteResult suite_inverse_closed_form(const VerifyOptions& opt) {
  SuiteResult s{"inverse-closed-form", 0, 0.0, 1e-10, false, {}};
  const int ms[] = {1, 2, 3, 4, 5};
  for (int i = 0; i < opt.inversion_points; ++i) {
    auto rng = SplitMix64::stream(opt.seed, 1000000u + i);
    const int m = ms[i % 5];
    const Complex a1 = rng.disk(1.0), a2 = rng.disk(1.0), a3 = rng.disk(1.0);
    const MFoldFn f(m, {a1, a2, a3});
    const TruncatedSeries g = invert(f.embed());
    const InverseCoeffs c = closed_inverse_mfold(m, a1, a2, a3);
    s.max_deviation = std::max({s.max_deviation, mixed_dev(g.coeff(m + 1), c.b_m1),
                                mixed_dev(g.coeff(2 * m + 1), c.b_2m1),
                                mixed_dev(g.coeff(3 * m + 1), c.b_3m1)});
    ++s.cases;
  }
  s.pass = s.max_deviation <= s.tolerance;
  return s;
}

SuiteResult suite_functional_closed_form(const VerifyOptions& opt) {
  SuiteResult s{"functional-closed-form", 0, 0.0, 1e-10, false, {}};
  const int ms[] = {1, 2, 3, 5};
  for (int i = 0; i < opt.functional_points; ++i) {
    auto rng = SplitMix64::stream(opt.seed, 2000000u + i);
    const int m = ms[i % 4];
    const Complex tau = rng.uniform(0.3, 3.0) * rng.unit_circle();
    const double l = rng.uniform(0.0, 3.0);
    const double g = rng.uniform(0.0, 1.0);
    const int delta = rng.uniform_int(0, 4);
    const ClassParams p = ClassParams::theta(tau, l, g, delta, m, 0.0);
    const Complex a1 = rng.disk(1.0), a2 = rng.disk(1.0);
    const MFoldFn f(m, {a1, a2});

    const FunctionalCoeffs want = closed_coeffs(p, a1, a2);
    const TruncatedSeries fwd = functional_series(f, p, Side::Forward).series;
    const TruncatedSeries inv = functional_series(f, p, Side::Inverse).series;
    s.max_deviation = std::max({s.max_deviation, mixed_dev(fwd.coeff(m), want.forward_m),
                                mixed_dev(fwd.coeff(2 * m), want.forward_2m),
                                mixed_dev(inv.coeff(m), want.inverse_m),
                                mixed_dev(inv.coeff(2 * m), want.inverse_2m)});
    ++s.cases;
  }
  s.notes.push_back(
      "normalization: each side divides the operator image by its own variable "
      "(forward F(z)/z, inverse G(w)/w)");
  s.pass = s.max_deviation <= s.tolerance;
  return s;
}

SuiteResult suite_bound_bridge(const VerifyOptions& opt) {
  SuiteResult s{"bound-bridge", 0, 0.0, 1e-12, false, {}};
  for (int i = 0; i < opt.bridge_points; ++i) {
    auto rng = SplitMix64::stream(opt.seed, 3000000u + i);
    const Complex tau = rng.uniform(0.25, 2.5) * rng.unit_circle();
    const double l = rng.uniform(0.0, 3.0);
    const double g = rng.uniform(0.0, 1.0);
    const int delta = rng.uniform_int(0, 4);
    const int m = rng.uniform_int(1, 5);
    const BoundReport q = theorem1_bounds(ClassParams::q(tau, l, g, delta, m, 1.0));
    const BoundReport t = theorem2_bounds(ClassParams::theta(tau, l, g, delta, m, 0.0));
    s.max_deviation = std::max(s.max_deviation, mixed_dev(q.bound_am1, *t.branch_sqrt));
    ++s.cases;
  }
  s.pass = s.max_deviation <= s.tolerance;
  return s;
}

SuiteResult suite_reduction_matrix(const VerifyOptions& opt) {
  SuiteResult s{"reduction-matrix", 0, 0.0, 1e-12, false, {}};
  for (const auto& row : reduction_matrix(opt.reduction_points, opt.seed)) {
    s.max_deviation = std::max({s.max_deviation, row.dev_parent, row.dev_theorem});
    s.cases += row.points;
  }
  s.pass = s.max_deviation <= s.tolerance;
  return s;
}

}  // namespace

std::vector<SuiteResult> run_verify_suites(const VerifyOptions& opt) {
  return {suite_operator_weights(opt),    suite_operator_embedding(opt),
          suite_inverse_closed_form(opt), suite_functional_closed_form(opt),
          suite_bound_bridge(opt),        suite_reduction_matrix(opt)};
}

}  // namespace mfold
