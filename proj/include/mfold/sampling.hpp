#pragma once

#include <cstdint>
#include <string>
#include <vector>

#include "mfold/bounds.hpp"
#include "mfold/params.hpp"
#include "mfold/series.hpp"

namespace mfold {

/// Atom of a positive-real-part function: weight c >= 0 at a unimodular
/// point u. A convex combination of atoms (1+u z^m)/(1-u z^m) has
/// coefficients p_k = 2 sum_j c_j u_j^k in the sector variable, so every
/// |p_k| <= 2 with equality at a single atom.
struct HerglotzAtom {
  double weight;
  Complex point;
};

class HerglotzFn {
 public:
  HerglotzFn(std::vector<HerglotzAtom> atoms, int m);

  int m() const { return m_; }
  const std::vector<HerglotzAtom>& atoms() const { return atoms_; }

  /// p_k = 2 sum_j c_j u_j^k, powers taken by repeated multiplication.
  Complex p(int k) const;

  /// 1 + sum_{k=1..K} p_k z^{mk}, order m*K.
  TruncatedSeries series(int K) const;

 private:
  std::vector<HerglotzAtom> atoms_;
  int m_;
};

/// Deterministic draw: weights from a normalized exponential simplex draw,
/// points uniform on the unit circle. Pure function of the seed.
HerglotzFn sample_herglotz(std::uint64_t seed, int atom_count, int m);

/// max |p_k| over 1 <= k <= K.
double lemma1_check(const HerglotzFn& h, int K);

/// Coefficient data extracted from a pair of positive-real-part functions in
/// the proof chain: p's from the forward side, q's from the inverse side,
/// all moduli <= 2 and q_m = -p_m.
struct ConstraintSample {
  Complex p_m;
  Complex p_2m;
  Complex q_m;
  Complex q_2m;
};

ConstraintSample random_constraint_sample(std::uint64_t seed, std::uint64_t index);

/// Boundary-biased lattice: each disk variable runs over {0} and
/// {r e^{i pi j/2} : r in {1,2}, j=0..3}; q_m is forced to -p_m. The all-zero
/// triple comes first. 9^3 = 729 samples, covering the extremal corners.
std::vector<ConstraintSample> boundary_grid_samples();

/// Q-class reconstruction:
///   a_{m+1}^2 = 2 tau^2 alpha^2 (p_2m + q_2m)
///               / ((delta+1)(tau alpha (delta+2)(m+1) phi1 + 2(1-alpha)(delta+1) phi2))
///   a_{2m+1}  = tau alpha (p_2m - q_2m)/(2(delta+1)(delta+2) phi1)
///               + tau^2 alpha^2 (m+1)(p_m^2 + q_m^2)/(4(delta+1)^2 phi2)
/// Throws std::domain_error when the first denominator is degenerate.
struct QReconstruction {
  Complex a_m1_squared;
  Complex a_2m1;
};

QReconstruction reconstruct_q(const ConstraintSample& s, const ClassParams& p);

/// Theta-class reconstructions, named by the data they use:
///   from_pm:  a^2 = tau^2 (1-beta)^2 (p_m^2+q_m^2) / (2 (delta+1)^2 phi2)
///   from_p2m: a^2 = 2 tau (1-beta)(p_2m+q_2m) / ((delta+1)(delta+2)(m+1) phi1)
///   two_term: a_{2m+1} = tau^2 (1-beta)^2 (m+1)(p_m^2+q_m^2)/(4(delta+1)^2 phi2)
///                        + tau (1-beta)(p_2m-q_2m)/((delta+1)(delta+2) phi1)
///   direct:   a_{2m+1} = 2 tau (1-beta) p_2m / ((delta+1)(delta+2) phi1)
struct ThetaReconstruction {
  Complex a_m1_sq_from_pm;
  Complex a_m1_sq_from_p2m;
  Complex a_2m1_two_term;
  Complex a_2m1_direct;
};

ThetaReconstruction reconstruct_theta(const ConstraintSample& s, const ClassParams& p);

enum class SampleStrategy { Grid, Random };

struct RatioStat {
  std::string name;
  double max_ratio = 0.0;
  long argmax = -1;
};

/// Empirical certification of the bounds: reconstruct coefficients from
/// sampled constraint data and compare each against its matching bound.
/// Q ratios: am1 (vs the first bound), a2m1 (vs the second).
/// Theta ratios: am1_linear_route (from_pm vs linear branch),
/// am1_sqrt_route (from_p2m vs sqrt branch), a2m1 (direct vs headline),
/// a2m1_two_term (vs alt_a2m1). pass means every ratio <= 1 + slack.
struct CertificationReport {
  ClassParams params;
  SampleStrategy strategy = SampleStrategy::Random;
  int requested = 0;
  int evaluated = 0;
  int skipped = 0;
  std::uint64_t seed = 0;
  double slack = 1e-9;
  std::vector<RatioStat> ratios;
  double route_residual_max = 0.0;  // Theta: max |from_pm - from_p2m|
  bool pass = false;
  BoundReport bounds;
  std::vector<std::string> notes;

  double max_am1_ratio() const;
};

/// Grid strategy enumerates the boundary lattice (capped at n); Random draws
/// n independent samples from the (seed, index) streams. n must be >= 1.
CertificationReport probe_bounds(const ClassParams& p, SampleStrategy strategy, int n,
                                 std::uint64_t seed);

}  // namespace mfold
