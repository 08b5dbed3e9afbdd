#include "mfold/bounds.hpp"

#include <cmath>
#include <limits>
#include <stdexcept>
#include <string>

#include "mfold/rng.hpp"

namespace mfold {

namespace {

constexpr double kDegenerateTol = 1e-14;

double require_q(const ClassParams& p) {
  if (p.kind != ClassKind::Q)
    throw std::invalid_argument("bounds: Q-class parameters required");
  return p.alpha();
}

double require_theta(const ClassParams& p) {
  if (p.kind != ClassKind::Theta)
    throw std::invalid_argument("bounds: Theta-class parameters required");
  return p.beta();
}

void require_fixed(bool ok, const std::string& what) {
  if (!ok) throw std::invalid_argument("corollary: fixed variable violated: " + what);
}

bool near(double x, double v) { return std::abs(x - v) <= 1e-12; }

}  // namespace

PhiValues phi(double lambda, double gamma, int m) {
  if (m < 1) throw std::invalid_argument("phi: m must be >= 1");
  const double md = static_cast<double>(m);
  const double p1 =
      1.0 + 2.0 * (lambda + gamma) * md + lambda * gamma * ((2.0 * md + 1.0) * (2.0 * md + 1.0) + 1.0);
  const double base = phi2_base(lambda, gamma, m);
  return {p1, base * base};
}

double phi2_base(double lambda, double gamma, int m) {
  const double md = static_cast<double>(m);
  return 1.0 + (lambda + gamma) * md + lambda * gamma * ((md + 1.0) * (md + 1.0) + 1.0);
}

BoundReport theorem1_bounds(const ClassParams& p) {
  const double a = require_q(p);
  const auto [p1, p2] = phi(p.lambda, p.gamma, p.m);
  const double d1 = static_cast<double>(p.delta) + 1.0;
  const double d2 = static_cast<double>(p.delta) + 2.0;
  const double md = static_cast<double>(p.m);
  const double ta = std::abs(p.tau);

  BoundReport r;
  r.params = p;
  r.active_branch = "single";

  const Complex combo = p.tau * (a * d2 * (md + 1.0) * p1) + Complex{2.0 * (1.0 - a) * d1 * p2};
  const double cm = std::abs(combo);
  if (cm < kDegenerateTol) {
    r.bound_am1 = std::numeric_limits<double>::infinity();
    r.active_branch = "degenerate";
    r.notes.push_back("first-coefficient denominator modulus below 1e-14; reported as unbounded");
  } else {
    r.bound_am1 = 2.0 * std::sqrt(2.0) * ta * a / std::sqrt(d1 * cm);
  }
  r.bound_a2m1 = 2.0 * ta * a / (d1 * d2 * p1) + 2.0 * ta * ta * a * a * (md + 1.0) / (d1 * d1 * p2);
  return r;
}

BoundReport theorem2_bounds(const ClassParams& p) {
  const double b = require_theta(p);
  const auto [p1, p2] = phi(p.lambda, p.gamma, p.m);
  const double base = phi2_base(p.lambda, p.gamma, p.m);
  const double d1 = static_cast<double>(p.delta) + 1.0;
  const double d2 = static_cast<double>(p.delta) + 2.0;
  const double md = static_cast<double>(p.m);
  const double ta = std::abs(p.tau);
  const double om = 1.0 - b;

  BoundReport r;
  r.params = p;
  const double lin = 2.0 * ta * om / (d1 * base);
  const double sq = 2.0 * std::sqrt(2.0 * ta * om / (d1 * d2 * (md + 1.0) * p1));
  r.branch_linear = lin;
  r.branch_sqrt = sq;
  r.bound_am1 = std::min(lin, sq);
  if (lin == sq)
    r.active_branch = "tie";
  else
    r.active_branch = lin < sq ? "linear" : "sqrt";
  r.bound_a2m1 = 4.0 * ta * om / (d1 * d2 * p1);
  r.alt_a2m1 = 2.0 * ta * ta * om * om * (md + 1.0) / (d1 * d1 * p2) + r.bound_a2m1;
  r.notes.push_back(
      "sqrt branch divides by the aggregate weight unsquared; the squared variant fails "
      "empirical certification and is not used");
  r.notes.push_back("alt_a2m1 is informational; bound_a2m1 is the headline bound");
  return r;
}

BoundReport corollary_bounds(int id, const ClassParams& p) {
  const double ta = std::abs(p.tau);
  const double l = p.lambda, g = p.gamma;
  const double md = static_cast<double>(p.m);
  const double d1 = static_cast<double>(p.delta) + 1.0;
  const double d2 = static_cast<double>(p.delta) + 2.0;
  const bool tau_is_one = near(p.tau.real(), 1.0) && near(p.tau.imag(), 0.0);

  BoundReport r;
  r.params = p;
  r.active_branch = "single";

  auto set_min = [&r](double lin, double sq) {
    r.branch_linear = lin;
    r.branch_sqrt = sq;
    r.bound_am1 = std::min(lin, sq);
    r.active_branch = lin == sq ? "tie" : (lin < sq ? "linear" : "sqrt");
  };

  switch (id) {
    case 1: {
      const double b = require_theta(p);
      require_fixed(p.delta == 0, "delta=0");
      const double om = 1.0 - b;
      const double w1 = 1.0 + md * (l + g) + l * g * ((md + 1.0) * (md + 1.0) + 1.0);
      const double w2 = 1.0 + 2.0 * md * (l + g) + l * g * ((2.0 * md + 1.0) * (2.0 * md + 1.0) + 1.0);
      set_min(2.0 * ta * om / w1, 2.0 * std::sqrt(ta * om / ((md + 1.0) * w2)));
      r.bound_a2m1 = 2.0 * ta * om / w2;
      break;
    }
    case 2: {
      const double b = require_theta(p);
      require_fixed(p.delta == 0, "delta=0");
      require_fixed(near(g, 0.0), "gamma=0");
      const double om = 1.0 - b;
      set_min(2.0 * ta * om / (1.0 + md * l),
              2.0 * std::sqrt(ta * om / ((md + 1.0) * (1.0 + 2.0 * md * l))));
      r.bound_a2m1 = 2.0 * ta * om / (1.0 + 2.0 * md * l);
      break;
    }
    case 3: {
      const double b = require_theta(p);
      require_fixed(p.delta == 0, "delta=0");
      require_fixed(near(g, 0.0), "gamma=0");
      require_fixed(tau_is_one, "tau=1");
      const double om = 1.0 - b;
      set_min(2.0 * om / (1.0 + md * l),
              2.0 * std::sqrt(om / ((md + 1.0) * (1.0 + 2.0 * md * l))));
      r.bound_a2m1 = 2.0 * om / (1.0 + 2.0 * md * l);
      break;
    }
    case 4: {
      const double b = require_theta(p);
      require_fixed(p.delta == 0, "delta=0");
      require_fixed(near(g, 0.0), "gamma=0");
      require_fixed(near(l, 1.0), "lambda=1");
      require_fixed(tau_is_one, "tau=1");
      const double om = 1.0 - b;
      set_min(2.0 * om / (1.0 + md),
              2.0 * std::sqrt(om / ((md + 1.0) * (1.0 + 2.0 * md))));
      r.bound_a2m1 = 2.0 * om / (1.0 + 2.0 * md);
      break;
    }
    case 5: {
      const double a = require_q(p);
      require_fixed(p.m == 1, "m=1");
      const double g5 = l + g + 5.0 * l * g;
      const Complex combo =
          p.tau * (a * d2 * (1.0 + 2.0 * g5)) + Complex{(1.0 - a) * d1 * (1.0 + g5) * (1.0 + g5)};
      const double cm = std::abs(combo);
      if (cm < kDegenerateTol) {
        r.bound_am1 = std::numeric_limits<double>::infinity();
        r.active_branch = "degenerate";
        r.notes.push_back("first-coefficient denominator modulus below 1e-14; reported as unbounded");
      } else {
        r.bound_am1 = 2.0 * ta * a / std::sqrt(d1 * cm);
      }
      r.bound_a2m1 = 2.0 * ta * a / (d1 * d2 * (1.0 + 2.0 * g5)) +
                     4.0 * ta * ta * a * a / (d1 * d1 * (1.0 + g5) * (1.0 + g5));
      break;
    }
    case 6: {
      const double b = require_theta(p);
      require_fixed(p.m == 1, "m=1");
      const double om = 1.0 - b;
      const double g5 = l + g + 5.0 * l * g;
      set_min(2.0 * ta * om / (d1 * (1.0 + g5)),
              2.0 * std::sqrt(ta * om / (d1 * d2 * (1.0 + 2.0 * g5))));
      r.bound_a2m1 = 4.0 * ta * om / (d1 * d2 * (1.0 + 2.0 * g5));
      break;
    }
    case 7: {
      const double b = require_theta(p);
      require_fixed(p.m == 1, "m=1");
      require_fixed(p.delta == 0, "delta=0");
      const double om = 1.0 - b;
      const double g5 = l + g + 5.0 * l * g;
      set_min(2.0 * ta * om / (1.0 + g5), std::sqrt(2.0 * ta * om / (1.0 + 2.0 * g5)));
      r.bound_a2m1 = 2.0 * ta * om / (1.0 + 2.0 * g5);
      break;
    }
    case 8: {
      const double b = require_theta(p);
      require_fixed(p.m == 1, "m=1");
      require_fixed(p.delta == 0, "delta=0");
      require_fixed(near(g, 0.0), "gamma=0");
      require_fixed(tau_is_one, "tau=1");
      const double om = 1.0 - b;
      set_min(2.0 * om / (1.0 + l), std::sqrt(2.0 * om / (1.0 + 2.0 * l)));
      r.bound_a2m1 = 2.0 * om / (1.0 + 2.0 * l);
      break;
    }
    case 9: {
      const double b = require_theta(p);
      require_fixed(p.m == 1, "m=1");
      require_fixed(p.delta == 0, "delta=0");
      require_fixed(near(g, 0.0), "gamma=0");
      require_fixed(near(l, 1.0), "lambda=1");
      require_fixed(tau_is_one, "tau=1");
      const double om = 1.0 - b;
      set_min(om, std::sqrt(2.0 * om / 3.0));
      r.bound_a2m1 = 2.0 * om / 3.0;
      break;
    }
    default:
      throw std::invalid_argument("corollary: id must be in [1, 9]");
  }
  return r;
}

namespace {

struct CorollarySpec {
  int id;
  std::string parent;
  std::string substitution;
};

double report_dev(const BoundReport& a, const BoundReport& b) {
  return std::max(std::abs(a.bound_am1 - b.bound_am1), std::abs(a.bound_a2m1 - b.bound_a2m1));
}

// Draw the free variables for one corollary row; fixed variables are pinned.
ClassParams draw_params(int id, SplitMix64& rng) {
  const double l = rng.uniform(0.0, 3.0);
  const double g = rng.uniform(0.0, 1.0);
  const int delta = rng.uniform_int(0, 4);
  const int m = rng.uniform_int(1, 5);
  const double mag = rng.uniform(0.25, 2.5);
  const Complex tau = mag * rng.unit_circle();
  const double alpha = rng.uniform(0.05, 1.0);
  const double beta = rng.uniform(0.0, 0.95);

  switch (id) {
    case 1: return ClassParams::theta(tau, l, g, 0, m, beta);
    case 2: return ClassParams::theta(tau, l, 0.0, 0, m, beta);
    case 3: return ClassParams::theta(1.0, l, 0.0, 0, m, beta);
    case 4: return ClassParams::theta(1.0, 1.0, 0.0, 0, m, beta);
    case 5: return ClassParams::q(tau, l, g, delta, 1, alpha);
    case 6: return ClassParams::theta(tau, l, g, delta, 1, beta);
    case 7: return ClassParams::theta(tau, l, g, 0, 1, beta);
    case 8: return ClassParams::theta(1.0, l, 0.0, 0, 1, beta);
    case 9: return ClassParams::theta(1.0, 1.0, 0.0, 0, 1, beta);
    default: throw std::invalid_argument("corollary: id must be in [1, 9]");
  }
}

BoundReport parent_report(int id, const ClassParams& p) {
  switch (id) {
    case 1: return theorem2_bounds(p);
    case 2: return corollary_bounds(1, p);
    case 3: return corollary_bounds(2, p);
    case 4: return corollary_bounds(1, p);
    case 5: return theorem1_bounds(p);
    case 6: return theorem2_bounds(p);
    case 7: return corollary_bounds(6, p);
    case 8: return corollary_bounds(6, p);
    case 9: return corollary_bounds(6, p);
    default: throw std::invalid_argument("corollary: id must be in [1, 9]");
  }
}

BoundReport root_report(int id, const ClassParams& p) {
  return id == 5 ? theorem1_bounds(p) : theorem2_bounds(p);
}

}  // namespace

std::vector<ReductionRow> reduction_matrix(int points_per_corollary, std::uint64_t seed) {
  if (points_per_corollary < 1)
    throw std::invalid_argument("reduction: need at least one grid point");
  static const CorollarySpec specs[] = {
      {1, "theorem2", "delta=0"},
      {2, "corollary 1", "gamma=0"},
      {3, "corollary 2", "tau=1"},
      {4, "corollary 1", "gamma=0, lambda=1, tau=1"},
      {5, "theorem1", "m=1"},
      {6, "theorem2", "m=1"},
      {7, "corollary 6", "delta=0"},
      {8, "corollary 6", "delta=0, gamma=0, tau=1"},
      {9, "corollary 6", "delta=0, gamma=0, lambda=1, tau=1"},
  };
  std::vector<ReductionRow> rows;
  for (const auto& spec : specs) {
    ReductionRow row{spec.id, spec.parent, spec.substitution, points_per_corollary, 0.0, 0.0};
    for (int i = 0; i < points_per_corollary; ++i) {
      auto rng = SplitMix64::stream(seed, static_cast<std::uint64_t>(spec.id) * 1000003u + i);
      const ClassParams p = draw_params(spec.id, rng);
      const BoundReport cor = corollary_bounds(spec.id, p);
      row.dev_parent = std::max(row.dev_parent, report_dev(cor, parent_report(spec.id, p)));
      row.dev_theorem = std::max(row.dev_theorem, report_dev(cor, root_report(spec.id, p)));
    }
    rows.push_back(row);
  }
  return rows;
}

std::vector<double> Range::values() const {
  if (count < 1) throw std::invalid_argument("range: count must be >= 1");
  std::vector<double> v;
  v.reserve(count);
  if (count == 1) {
    v.push_back(start);
    return v;
  }
  for (int i = 0; i < count; ++i)
    v.push_back(start + (stop - start) * static_cast<double>(i) / static_cast<double>(count - 1));
  return v;
}

std::vector<MinBranchRow> min_branch_report(const MinBranchSpec& spec) {
  if (spec.ms.empty() || spec.deltas.empty())
    throw std::invalid_argument("min_branch: empty m or delta list");
  std::vector<MinBranchRow> rows;
  for (int m : spec.ms)
    for (int delta : spec.deltas)
      for (double l : spec.lambda.values())
        for (double g : spec.gamma.values())
          for (double b : spec.beta.values())
            for (double t : spec.tau_abs.values()) {
              const BoundReport r = theorem2_bounds(ClassParams::theta(t, l, g, delta, m, b));
              rows.push_back({m, delta, l, g, b, t, *r.branch_linear, *r.branch_sqrt,
                              *r.branch_linear / *r.branch_sqrt, r.active_branch});
            }
  return rows;
}

}  // namespace mfold
