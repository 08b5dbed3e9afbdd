#pragma once

#include <cstdint>
#include <optional>
#include <string>
#include <vector>

#include "mfold/params.hpp"

namespace mfold {

/// The two aggregate weights that appear in every bound denominator:
///   phi1 = 1 + 2m(lambda+gamma) + lambda*gamma((2m+1)^2 + 1)
///   phi2 = (1 + m(lambda+gamma) + lambda*gamma((m+1)^2 + 1))^2
struct PhiValues {
  double phi1;
  double phi2;
};

PhiValues phi(double lambda, double gamma, int m);

/// sqrt(phi2) before squaring; the weight on the first coefficient.
double phi2_base(double lambda, double gamma, int m);

/// Evaluated coefficient bounds at one parameter point.
struct BoundReport {
  ClassParams params;
  double bound_am1 = 0.0;   // headline bound on |a_{m+1}|
  double bound_a2m1 = 0.0;  // headline bound on |a_{2m+1}|
  std::string active_branch;  // "single", "linear", "sqrt", "tie", "degenerate"
  std::optional<double> branch_linear;  // Theta only
  std::optional<double> branch_sqrt;    // Theta only
  std::optional<double> alt_a2m1;       // Theta only, informational
  std::vector<std::string> notes;
};

/// Q-class bounds. The complex combination
///   tau*alpha*(delta+2)(m+1)*phi1 + 2(1-alpha)(delta+1)*phi2
/// is kept inside a single modulus; if that modulus falls below 1e-14 the
/// first bound is reported as unbounded (+inf) rather than divided through.
///   |a_{m+1}|  <= 2 sqrt(2) |tau| alpha / sqrt((delta+1) |combo|)
///   |a_{2m+1}| <= 2|tau|alpha/((delta+1)(delta+2)phi1)
///                 + 2|tau|^2 alpha^2 (m+1)/((delta+1)^2 phi2)
BoundReport theorem1_bounds(const ClassParams& p);

/// Theta-class bounds. The first bound is the smaller of
///   linear: 2|tau|(1-beta) / ((delta+1) * phi2_base)
///   sqrt:   2 sqrt( 2|tau|(1-beta) / ((delta+1)(delta+2)(m+1) phi1) )
/// and the second is 4|tau|(1-beta)/((delta+1)(delta+2)phi1). alt_a2m1 adds
/// the two-term variant 2|tau|^2(1-beta)^2(m+1)/((delta+1)^2 phi2) + that
/// same direct form; it is reported, never the headline.
BoundReport theorem2_bounds(const ClassParams& p);

/// The nine specialized bound sets, evaluated from their own displayed
/// formulas (not by delegating to the theorems). Fixed variables must match:
///   1: Theta, delta=0            2: Theta, delta=0, gamma=0
///   3: Theta, delta=0, gamma=0, tau=1
///   4: Theta, delta=0, gamma=0, lambda=1, tau=1
///   5: Q, m=1                    6: Theta, m=1
///   7: Theta, m=1, delta=0       8: Theta, m=1, delta=0, gamma=0, tau=1
///   9: Theta, m=1, delta=0, gamma=0, lambda=1, tau=1
BoundReport corollary_bounds(int id, const ClassParams& p);

/// One corollary checked against its parent on a random parameter grid.
struct ReductionRow {
  int id;
  std::string parent;        // "theorem1", "theorem2", or "corollary k"
  std::string substitution;  // fixed variables, e.g. "delta=0, gamma=0"
  int points;
  double dev_parent;   // max |corollary - immediate parent|
  double dev_theorem;  // max |corollary - root theorem|
};

/// Seeded random grids over each corollary's free variables; deviations of
/// both bounds against the immediate parent and against the root theorem.
std::vector<ReductionRow> reduction_matrix(int points_per_corollary = 100,
                                           std::uint64_t seed = 1);

/// Inclusive linear range; count = 1 means the single value {start}.
struct Range {
  double start = 0.0;
  double stop = 0.0;
  int count = 1;
  std::vector<double> values() const;
};

struct MinBranchSpec {
  Range lambda;
  Range gamma;
  Range beta;
  Range tau_abs;
  std::vector<int> ms{1};
  std::vector<int> deltas{0};
};

struct MinBranchRow {
  int m;
  int delta;
  double lambda;
  double gamma;
  double beta;
  double tau_abs;
  double linear;
  double sqrt_branch;
  double ratio;  // linear / sqrt
  std::string active;
};

/// Which branch of the Theta first-coefficient bound wins across a grid.
std::vector<MinBranchRow> min_branch_report(const MinBranchSpec& spec);

}  // namespace mfold
