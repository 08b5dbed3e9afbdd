#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include <cmath>
#include <stdexcept>

#include "mfold/rng.hpp"
#include "mfold/sampling.hpp"

using mfold::ClassParams;
using mfold::Complex;
using mfold::ConstraintSample;
using mfold::HerglotzAtom;
using mfold::HerglotzFn;
using mfold::SampleStrategy;
using mfold::SplitMix64;

TEST_CASE("counter-based rng streams are pure functions of (seed, index)") {
  SplitMix64 a = SplitMix64::stream(42, 7);
  SplitMix64 b = SplitMix64::stream(42, 7);
  for (int i = 0; i < 16; ++i) CHECK(a.next_u64() == b.next_u64());

  SplitMix64 c = SplitMix64::stream(42, 8);
  CHECK(SplitMix64::stream(42, 7).next_u64() != c.next_u64());

  SplitMix64 d = SplitMix64::stream(42, 0);
  for (int i = 0; i < 1000; ++i) {
    const double u = d.next_double();
    CHECK(u >= 0.0);
    CHECK(u < 1.0);
    const Complex z = d.disk(2.0);
    CHECK(std::abs(z) <= 2.0 + 1e-12);
    CHECK(std::abs(std::abs(d.unit_circle()) - 1.0) < 1e-12);
    const std::int64_t k = d.uniform_int(3, 9);
    CHECK(k >= 3);
    CHECK(k <= 9);
  }
}

TEST_CASE("single-atom mixture attains the coefficient wall exactly") {
  const HerglotzFn h({{1.0, Complex{1.0, 0.0}}}, 1);
  for (int k = 1; k <= 20; ++k) CHECK(h.p(k) == Complex{2.0, 0.0});
  CHECK(mfold::lemma1_check(h, 20) == 2.0);

  const auto s = h.series(3);
  CHECK(s.coeff(0) == Complex{1.0, 0.0});
  CHECK(s.coeff(1) == Complex{2.0, 0.0});
  CHECK(s.coeff(3) == Complex{2.0, 0.0});
}

TEST_CASE("an atom at -1 alternates the coefficient signs") {
  const HerglotzFn h({HerglotzAtom{1.0, Complex{-1.0, 0.0}}}, 1);
  for (int k = 1; k <= 15; ++k) CHECK(h.p(k) == Complex{k % 2 == 0 ? 2.0 : -2.0, 0.0});
}

TEST_CASE("mixture coefficients respect the sector support") {
  const HerglotzFn h({{0.5, Complex{0.0, 1.0}}, {0.5, Complex{0.0, -1.0}}}, 2);
  const auto s = h.series(2);
  CHECK(s.order() == 4);
  CHECK(std::abs(s.coeff(1)) < 1e-15);
  CHECK(std::abs(s.coeff(3)) < 1e-15);
  // p_1 = 2*(i/2 - i/2) = 0, p_2 = 2*(-1/2 - 1/2) = -2.
  CHECK(std::abs(s.coeff(2)) < 1e-15);
  CHECK(std::abs(s.coeff(4) + 2.0) < 1e-15);
}

TEST_CASE("mixture validation") {
  CHECK_THROWS_AS(HerglotzFn({}, 1), std::invalid_argument);
  CHECK_THROWS_AS(HerglotzFn({{1.0, Complex{0.5, 0.0}}}, 1), std::invalid_argument);
  CHECK_THROWS_AS(HerglotzFn({{-0.2, Complex{1.0, 0.0}}, {1.2, Complex{1.0, 0.0}}}, 1),
                  std::invalid_argument);
  CHECK_THROWS_AS(HerglotzFn({{0.7, Complex{1.0, 0.0}}}, 1), std::invalid_argument);
  CHECK_THROWS_AS(HerglotzFn({{1.0, Complex{1.0, 0.0}}}, 0), std::invalid_argument);
}

TEST_CASE("sampled mixtures are deterministic and stay inside the wall") {
  const HerglotzFn a = mfold::sample_herglotz(5, 4, 2);
  const HerglotzFn b = mfold::sample_herglotz(5, 4, 2);
  REQUIRE(a.atoms().size() == b.atoms().size());
  for (std::size_t i = 0; i < a.atoms().size(); ++i) {
    CHECK(a.atoms()[i].weight == b.atoms()[i].weight);
    CHECK(a.atoms()[i].point == b.atoms()[i].point);
  }

  for (std::uint64_t seed = 0; seed < 200; ++seed) {
    const HerglotzFn h = mfold::sample_herglotz(seed, 1 + static_cast<int>(seed % 6), 1);
    double sum = 0.0;
    for (const auto& atom : h.atoms()) sum += atom.weight;
    CHECK(std::abs(sum - 1.0) < 1e-12);
    CHECK(mfold::lemma1_check(h, 20) <= 2.0 + 1e-12);
  }
}

TEST_CASE("random constraint samples enforce the coupling") {
  for (std::uint64_t i = 0; i < 500; ++i) {
    const ConstraintSample s = mfold::random_constraint_sample(42, i);
    CHECK(std::abs(s.p_m) <= 2.0 + 1e-12);
    CHECK(std::abs(s.p_2m) <= 2.0 + 1e-12);
    CHECK(std::abs(s.q_2m) <= 2.0 + 1e-12);
    CHECK(s.q_m == -s.p_m);
  }
  const ConstraintSample a = mfold::random_constraint_sample(42, 3);
  const ConstraintSample b = mfold::random_constraint_sample(42, 3);
  CHECK(a.p_m == b.p_m);
  CHECK(a.p_2m == b.p_2m);
  CHECK(a.q_2m == b.q_2m);
}

TEST_CASE("boundary lattice shape") {
  const auto grid = mfold::boundary_grid_samples();
  REQUIRE(grid.size() == 729);
  CHECK(grid[0].p_m == Complex{0.0, 0.0});
  CHECK(grid[0].p_2m == Complex{0.0, 0.0});
  CHECK(grid[0].q_2m == Complex{0.0, 0.0});
  for (const auto& s : grid) {
    CHECK(s.q_m == -s.p_m);
    CHECK(std::abs(s.p_m) <= 2.0);
    CHECK(std::abs(s.p_2m) <= 2.0);
    CHECK(std::abs(s.q_2m) <= 2.0);
  }
}

TEST_CASE("first-class reconstruction at extremal data meets the bound exactly") {
  const ClassParams p =
      ClassParams::q(Complex{0.7, 0.3}, 0.8, 0.3, 1, 2, 0.6);
  const mfold::BoundReport bound = mfold::theorem1_bounds(p);

  // p_2m = q_2m on the wall makes |a_{m+1}| hit the first bound for any
  // tau and alpha; the modulus of the combination cancels exactly.
  const ConstraintSample s{Complex{0.0, 0.0}, Complex{2.0, 0.0}, Complex{0.0, 0.0},
                           Complex{2.0, 0.0}};
  const auto r = mfold::reconstruct_q(s, p);
  const double ratio = std::sqrt(std::abs(r.a_m1_squared)) / bound.bound_am1;
  CHECK(std::abs(ratio - 1.0) < 1e-12);

  const ConstraintSample zero{};
  const auto rz = mfold::reconstruct_q(zero, p);
  CHECK(std::abs(rz.a_m1_squared) == 0.0);
  CHECK(std::abs(rz.a_2m1) == 0.0);
}

TEST_CASE("first-class second coefficient from the sector wall alone") {
  const ClassParams p = ClassParams::q(Complex{1.1, -0.6}, 0.4, 0.9, 2, 3, 0.75);
  const ConstraintSample s{Complex{2.0, 0.0}, Complex{}, Complex{-2.0, 0.0}, Complex{}};
  const auto r = mfold::reconstruct_q(s, p);
  CHECK(std::abs(r.a_m1_squared) == 0.0);

  const double alpha = p.alpha();
  const double d1 = p.delta + 1.0;
  const Complex want = 2.0 * p.tau * p.tau * alpha * alpha * (p.m + 1.0) /
                       (d1 * d1 * mfold::phi(p.lambda, p.gamma, p.m).phi2);
  CHECK(std::abs(r.a_2m1 - want) < 1e-13 * std::abs(want));
}

TEST_CASE("first-class reconstruction refuses a degenerate denominator") {
  const ClassParams p = ClassParams::q(Complex{-0.5, 0.0}, 0.0, 0.0, 0, 1, 0.5);
  const ConstraintSample s{Complex{2.0, 0.0}, Complex{2.0, 0.0}, Complex{-2.0, 0.0},
                           Complex{2.0, 0.0}};
  CHECK_THROWS_AS(mfold::reconstruct_q(s, p), std::domain_error);

  const ClassParams theta = ClassParams::theta(Complex{1.0, 0.0}, 0.0, 0.0, 0, 1, 0.5);
  CHECK_THROWS_AS(mfold::reconstruct_q(s, theta), std::invalid_argument);
  CHECK_THROWS_AS(mfold::reconstruct_theta(s, p), std::invalid_argument);
}

TEST_CASE("second-class routes land on their matching branches at the wall") {
  const ClassParams p = ClassParams::theta(Complex{1.3, -0.4}, 0.5, 0.7, 2, 3, 0.35);
  const mfold::BoundReport bound = mfold::theorem2_bounds(p);

  // |p_m| = 2 with q_m = -p_m drives the pm-route to the linear branch.
  const ConstraintSample pm_wall{Complex{0.0, 2.0}, Complex{}, Complex{0.0, -2.0}, Complex{}};
  const auto r1 = mfold::reconstruct_theta(pm_wall, p);
  CHECK(std::abs(std::sqrt(std::abs(r1.a_m1_sq_from_pm)) / *bound.branch_linear - 1.0) < 1e-12);

  // p_2m = q_2m on the wall drives the p2m-route to the sqrt branch.
  const ConstraintSample p2m_wall{Complex{}, Complex{0.0, -2.0}, Complex{}, Complex{0.0, -2.0}};
  const auto r2 = mfold::reconstruct_theta(p2m_wall, p);
  CHECK(std::abs(std::sqrt(std::abs(r2.a_m1_sq_from_p2m)) / *bound.branch_sqrt - 1.0) < 1e-12);

  // |p_2m| = 2 alone drives the direct form to the headline second bound.
  const ConstraintSample direct_wall{Complex{}, Complex{-2.0, 0.0}, Complex{}, Complex{}};
  const auto r3 = mfold::reconstruct_theta(direct_wall, p);
  CHECK(std::abs(std::abs(r3.a_2m1_direct) / bound.bound_a2m1 - 1.0) < 1e-12);
}

TEST_CASE("probing the first-class bounds passes and attains the wall on the grid") {
  const ClassParams p = ClassParams::q(Complex{0.9, 0.5}, 1.2, 0.4, 1, 2, 1.0);

  const auto random_rep = mfold::probe_bounds(p, SampleStrategy::Random, 2000, 42);
  CHECK(random_rep.pass);
  CHECK(random_rep.evaluated + random_rep.skipped == random_rep.requested);
  REQUIRE(random_rep.ratios.size() == 2);
  CHECK(random_rep.ratios[0].name == "am1");
  CHECK(random_rep.ratios[1].name == "a2m1");
  for (const auto& r : random_rep.ratios) CHECK(r.max_ratio <= 1.0 + random_rep.slack);

  const auto grid_rep = mfold::probe_bounds(p, SampleStrategy::Grid, 1000000, 42);
  CHECK(grid_rep.pass);
  CHECK(grid_rep.evaluated <= 729);
  CHECK(grid_rep.max_am1_ratio() >= 1.0 - 1e-9);
}

TEST_CASE("a single grid sample is the all-zero corner") {
  const ClassParams p = ClassParams::q(Complex{0.9, 0.5}, 1.2, 0.4, 1, 2, 0.7);
  const auto rep = mfold::probe_bounds(p, SampleStrategy::Grid, 1, 99);
  CHECK(rep.requested == 1);
  CHECK(rep.evaluated == 1);
  CHECK(rep.pass);
  for (const auto& r : rep.ratios) CHECK(r.max_ratio == 0.0);
}

TEST_CASE("with real tau the first-class grid attains both walls") {
  // tau real positive aligns the phases of the two second-coefficient
  // terms, so the a_{2m+1} wall is reached as well as the a_{m+1} wall.
  const ClassParams p = ClassParams::q(Complex{1.3, 0.0}, 0.4, 0.2, 1, 2, 0.7);
  const auto rep = mfold::probe_bounds(p, SampleStrategy::Grid, 1000000, 5);
  CHECK(rep.pass);
  for (const auto& r : rep.ratios) CHECK(r.max_ratio >= 1.0 - 1e-9);
}

TEST_CASE("probing the second-class bounds attains every branch on the grid") {
  // Real positive tau keeps the two-term phase aligned on the lattice, so
  // all four ratios reach the wall.
  const ClassParams p = ClassParams::theta(Complex{1.7, 0.0}, 0.9, 0.2, 1, 2, 0.3);
  const auto rep = mfold::probe_bounds(p, SampleStrategy::Grid, 1000000, 7);
  CHECK(rep.pass);
  REQUIRE(rep.ratios.size() == 4);
  CHECK(rep.ratios[0].name == "am1_linear_route");
  CHECK(rep.ratios[1].name == "am1_sqrt_route");
  CHECK(rep.ratios[2].name == "a2m1");
  CHECK(rep.ratios[3].name == "a2m1_two_term");
  for (const auto& r : rep.ratios) {
    CHECK(r.max_ratio >= 1.0 - 1e-9);
    CHECK(r.max_ratio <= 1.0 + rep.slack);
  }
  CHECK(rep.route_residual_max >= 0.0);
}

TEST_CASE("probe reports are deterministic in the seed") {
  const ClassParams p = ClassParams::theta(Complex{0.8, 0.1}, 0.4, 0.6, 0, 1, 0.2);
  const auto a = mfold::probe_bounds(p, SampleStrategy::Random, 500, 11);
  const auto b = mfold::probe_bounds(p, SampleStrategy::Random, 500, 11);
  REQUIRE(a.ratios.size() == b.ratios.size());
  for (std::size_t i = 0; i < a.ratios.size(); ++i) {
    CHECK(a.ratios[i].max_ratio == b.ratios[i].max_ratio);
    CHECK(a.ratios[i].argmax == b.ratios[i].argmax);
  }
  const auto c = mfold::probe_bounds(p, SampleStrategy::Random, 500, 12);
  CHECK(a.ratios[0].max_ratio != c.ratios[0].max_ratio);

  CHECK_THROWS_AS(mfold::probe_bounds(p, SampleStrategy::Random, 0, 1), std::invalid_argument);
}
