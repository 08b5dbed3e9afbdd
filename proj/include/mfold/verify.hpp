#pragma once

#include <cstdint>
#include <string>
#include <vector>

namespace mfold {

/// One identity suite: a family of dual-route comparisons with a pinned
/// tolerance. Deviations are mixed relative: |got - want| / max(1, |want|).
struct SuiteResult {
  std::string name;
  int cases = 0;
  double max_deviation = 0.0;
  double tolerance = 0.0;
  bool pass = false;
  std::vector<std::string> notes;
};

struct VerifyOptions {
  int inversion_points = 200;
  int functional_points = 500;
  int bridge_points = 200;
  int reduction_points = 100;
  std::uint64_t seed = 42;
  /// Test hook: perturbs one convolution weight in the weight suite so the
  /// failure path (nonzero exit) can be exercised deliberately.
  bool inject_fault = false;
};

/// Runs every identity suite:
///   operator-weights: exact binomial weights vs a Gamma-quotient oracle
///   operator-embedding: m=1 symmetric operator vs plain operator (exact)
///   inverse-closed-form: generic inversion vs the closed three coefficients
///   functional-closed-form: series pipeline vs closed coefficients, both sides
///   bound-bridge: Q-class at alpha=1 vs Theta-class sqrt branch at beta=0
///   reduction-matrix: nine specializations vs parents and root theorems
std::vector<SuiteResult> run_verify_suites(const VerifyOptions& opt);

}  // namespace mfold
