#include "mfold/sampling.hpp"

#include <algorithm>
#include <cmath>
#include <stdexcept>

#include "mfold/rng.hpp"

namespace mfold {

HerglotzFn::HerglotzFn(std::vector<HerglotzAtom> atoms, int m) : atoms_(std::move(atoms)), m_(m) {
  if (m_ < 1) throw std::invalid_argument("herglotz: m must be >= 1");
  if (atoms_.empty()) throw std::invalid_argument("herglotz: need at least one atom");
  double total = 0.0;
  for (const auto& a : atoms_) {
    if (!(a.weight >= 0.0)) throw std::invalid_argument("herglotz: weights must be >= 0");
    if (std::abs(std::abs(a.point) - 1.0) > 1e-9)
      throw std::invalid_argument("herglotz: atom points must be unimodular");
    total += a.weight;
  }
  if (std::abs(total - 1.0) > 1e-9)
    throw std::invalid_argument("herglotz: weights must sum to 1");
}

Complex HerglotzFn::p(int k) const {
  if (k < 1) throw std::invalid_argument("herglotz: coefficient index must be >= 1");
  Complex s{};
  for (const auto& a : atoms_) {
    Complex pw{1.0};
    for (int i = 0; i < k; ++i) pw *= a.point;
    s += a.weight * pw;
  }
  return 2.0 * s;
}

TruncatedSeries HerglotzFn::series(int K) const {
  if (K < 1) throw std::invalid_argument("herglotz: K must be >= 1");
  TruncatedSeries s = TruncatedSeries::zero(m_ * K);
  s.set_coeff(0, 1.0);
  std::vector<Complex> pw(atoms_.size(), Complex{1.0});
  for (int k = 1; k <= K; ++k) {
    Complex acc{};
    for (std::size_t j = 0; j < atoms_.size(); ++j) {
      pw[j] *= atoms_[j].point;
      acc += atoms_[j].weight * pw[j];
    }
    s.set_coeff(m_ * k, 2.0 * acc);
  }
  return s;
}

HerglotzFn sample_herglotz(std::uint64_t seed, int atom_count, int m) {
  if (atom_count < 1) throw std::invalid_argument("herglotz: atom count must be >= 1");
  auto rng = SplitMix64::stream(seed, 0);
  std::vector<double> raw(atom_count);
  double total = 0.0;
  for (auto& e : raw) {
    e = -std::log(1.0 - rng.next_double());
    total += e;
  }
  if (!(total > 0.0)) {
    std::fill(raw.begin(), raw.end(), 1.0);
    total = static_cast<double>(atom_count);
  }
  std::vector<HerglotzAtom> atoms(atom_count);
  double partial = 0.0;
  for (int j = 0; j < atom_count; ++j) {
    // Last weight closes the simplex so the sum lands on 1 exactly.
    const double w = (j + 1 == atom_count) ? std::max(0.0, 1.0 - partial) : raw[j] / total;
    partial += w;
    atoms[j] = {w, rng.unit_circle()};
  }
  return HerglotzFn(std::move(atoms), m);
}

double lemma1_check(const HerglotzFn& h, int K) {
  if (K < 1) throw std::invalid_argument("lemma1_check: K must be >= 1");
  double worst = 0.0;
  std::vector<Complex> pw(h.atoms().size(), Complex{1.0});
  for (int k = 1; k <= K; ++k) {
    Complex acc{};
    for (std::size_t j = 0; j < h.atoms().size(); ++j) {
      pw[j] *= h.atoms()[j].point;
      acc += h.atoms()[j].weight * pw[j];
    }
    worst = std::max(worst, std::abs(2.0 * acc));
  }
  return worst;
}

ConstraintSample random_constraint_sample(std::uint64_t seed, std::uint64_t index) {
  auto rng = SplitMix64::stream(seed, index);
  ConstraintSample s;
  s.p_m = rng.disk(2.0);
  s.p_2m = rng.disk(2.0);
  s.q_2m = rng.disk(2.0);
  s.q_m = -s.p_m;
  return s;
}

std::vector<ConstraintSample> boundary_grid_samples() {
  std::vector<Complex> vals;
  vals.push_back({0.0, 0.0});
  for (double r : {1.0, 2.0})
    for (const Complex ph : {Complex{1, 0}, Complex{0, 1}, Complex{-1, 0}, Complex{0, -1}})
      vals.push_back(r * ph);
  std::vector<ConstraintSample> out;
  out.reserve(vals.size() * vals.size() * vals.size());
  for (const Complex& pm : vals)
    for (const Complex& p2m : vals)
      for (const Complex& q2m : vals) out.push_back({pm, p2m, -pm, q2m});
  return out;
}

QReconstruction reconstruct_q(const ConstraintSample& s, const ClassParams& p) {
  if (p.kind != ClassKind::Q) throw std::invalid_argument("reconstruct_q: Q-class parameters required");
  const double a = p.alpha();
  const auto [p1, p2] = phi(p.lambda, p.gamma, p.m);
  const double d1 = static_cast<double>(p.delta) + 1.0;
  const double d2 = static_cast<double>(p.delta) + 2.0;
  const double md = static_cast<double>(p.m);

  const Complex den = d1 * (p.tau * (a * d2 * (md + 1.0) * p1) + Complex{2.0 * (1.0 - a) * d1 * p2});
  if (std::abs(den) < 1e-14)
    throw std::domain_error("reconstruct_q: degenerate first-coefficient denominator");

  QReconstruction r;
  r.a_m1_squared = 2.0 * (p.tau * p.tau) * (a * a) * (s.p_2m + s.q_2m) / den;
  r.a_2m1 = p.tau * a * (s.p_2m - s.q_2m) / (2.0 * d1 * d2 * p1) +
            (p.tau * p.tau) * (a * a) * (md + 1.0) * (s.p_m * s.p_m + s.q_m * s.q_m) /
                (4.0 * d1 * d1 * p2);
  return r;
}

ThetaReconstruction reconstruct_theta(const ConstraintSample& s, const ClassParams& p) {
  if (p.kind != ClassKind::Theta)
    throw std::invalid_argument("reconstruct_theta: Theta-class parameters required");
  const double b = p.beta();
  const auto [p1, p2] = phi(p.lambda, p.gamma, p.m);
  const double d1 = static_cast<double>(p.delta) + 1.0;
  const double d2 = static_cast<double>(p.delta) + 2.0;
  const double md = static_cast<double>(p.m);
  const double om = 1.0 - b;
  const Complex psq = s.p_m * s.p_m + s.q_m * s.q_m;

  ThetaReconstruction r;
  r.a_m1_sq_from_pm = (p.tau * p.tau) * (om * om) * psq / (2.0 * d1 * d1 * p2);
  r.a_m1_sq_from_p2m = 2.0 * p.tau * om * (s.p_2m + s.q_2m) / (d1 * d2 * (md + 1.0) * p1);
  r.a_2m1_two_term = (p.tau * p.tau) * (om * om) * (md + 1.0) * psq / (4.0 * d1 * d1 * p2) +
                     p.tau * om * (s.p_2m - s.q_2m) / (d1 * d2 * p1);
  r.a_2m1_direct = 2.0 * p.tau * om * s.p_2m / (d1 * d2 * p1);
  return r;
}

double CertificationReport::max_am1_ratio() const {
  double worst = 0.0;
  for (const auto& r : ratios)
    if (r.name.rfind("am1", 0) == 0) worst = std::max(worst, r.max_ratio);
  return worst;
}

CertificationReport probe_bounds(const ClassParams& p, SampleStrategy strategy, int n,
                                 std::uint64_t seed) {
  if (n < 1) throw std::invalid_argument("probe: need at least one sample");
  p.validate();

  CertificationReport rep;
  rep.params = p;
  rep.strategy = strategy;
  rep.requested = n;
  rep.seed = seed;
  rep.bounds = (p.kind == ClassKind::Q) ? theorem1_bounds(p) : theorem2_bounds(p);

  if (p.kind == ClassKind::Q) {
    rep.ratios = {{"am1", 0.0, -1}, {"a2m1", 0.0, -1}};
  } else {
    rep.ratios = {{"am1_linear_route", 0.0, -1},
                  {"am1_sqrt_route", 0.0, -1},
                  {"a2m1", 0.0, -1},
                  {"a2m1_two_term", 0.0, -1}};
  }
  auto score = [&rep](std::size_t slot, double value, double bound, long idx) {
    const double ratio = value / bound;  // bound may be +inf; ratio 0 then
    if (ratio > rep.ratios[slot].max_ratio) {
      rep.ratios[slot].max_ratio = ratio;
      rep.ratios[slot].argmax = idx;
    }
  };

  std::vector<ConstraintSample> grid;
  long count = n;
  if (strategy == SampleStrategy::Grid) {
    grid = boundary_grid_samples();
    count = std::min<long>(n, static_cast<long>(grid.size()));
  }

  for (long i = 0; i < count; ++i) {
    const ConstraintSample s = (strategy == SampleStrategy::Grid)
                                   ? grid[static_cast<std::size_t>(i)]
                                   : random_constraint_sample(seed, static_cast<std::uint64_t>(i));
    try {
      if (p.kind == ClassKind::Q) {
        const QReconstruction q = reconstruct_q(s, p);
        score(0, std::sqrt(std::abs(q.a_m1_squared)), rep.bounds.bound_am1, i);
        score(1, std::abs(q.a_2m1), rep.bounds.bound_a2m1, i);
      } else {
        const ThetaReconstruction t = reconstruct_theta(s, p);
        score(0, std::sqrt(std::abs(t.a_m1_sq_from_pm)), *rep.bounds.branch_linear, i);
        score(1, std::sqrt(std::abs(t.a_m1_sq_from_p2m)), *rep.bounds.branch_sqrt, i);
        score(2, std::abs(t.a_2m1_direct), rep.bounds.bound_a2m1, i);
        score(3, std::abs(t.a_2m1_two_term), *rep.bounds.alt_a2m1, i);
        rep.route_residual_max = std::max(
            rep.route_residual_max, std::abs(t.a_m1_sq_from_pm - t.a_m1_sq_from_p2m));
      }
      ++rep.evaluated;
    } catch (const std::domain_error&) {
      ++rep.skipped;
    }
  }

  rep.pass = true;
  for (const auto& r : rep.ratios)
    if (!(r.max_ratio <= 1.0 + rep.slack)) rep.pass = false;
  if (rep.evaluated == 0) {
    rep.pass = false;
    rep.notes.push_back("no sample could be evaluated");
  }
  if (rep.skipped > 0)
    rep.notes.push_back("skipped samples had a degenerate reconstruction denominator");
  if (p.kind == ClassKind::Theta)
    rep.notes.push_back(
        "each route is compared against its matching branch; route_residual_max tracks the "
        "unasserted gap between the two first-coefficient routes");
  return rep;
}

}  // namespace mfold
