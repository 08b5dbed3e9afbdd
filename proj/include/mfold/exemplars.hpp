#pragma once

#include <string>
#include <vector>

#include "mfold/series.hpp"

namespace mfold {

enum class ExemplarName { KoebeLike, Log, Atanh };

/// Catalog entry: an m-fold function, its inverse candidate, and the
/// composition residual max_k |[f(g(w))]_k - [w]_k| through order m*K+1.
struct ExemplarPair {
  std::string name;
  int m = 1;
  int order = 0;  // m*K + 1
  MFoldFn forward{1, {Complex{}}};
  MFoldFn inverse{1, {Complex{}}};
  double composition_residual = 0.0;
  bool pairing_verified = false;  // residual <= 1e-10
};

/// The three catalog families, in the sector variable t = z^m:
///   koebe-like: (t/(1-t))^{1/m} packaging    <-> (t/(1+t))^{1/m}
///   log:        (-log(1-t))^{1/m}            <-> ((e^t-1)/e^t)^{1/m}
///   atanh:      (log((1+t)/(1-t))/2)^{1/m}   <-> ((e^{2t}-1)/(e^{2t}+1))^{1/m}
/// Built by factoring out t and taking the 1/m power of the unit-constant
/// cofactor. Requires m >= 1 and K >= 3.
ExemplarPair build_exemplar(ExemplarName name, int m, int K);

std::string exemplar_label(ExemplarName name);

/// Residual of a candidate pair through min(orders).
double composition_residual(const TruncatedSeries& f, const TruncatedSeries& g);

/// The 1-fold catalog as commonly listed pairs the three forward functions
/// with the three inverses in a fixed order. This audit computes the full
/// residual matrix and reports, per forward function, the listed partner's
/// residual and the actual best partner. The first two listed partners are
/// swapped relative to the true pairing.
struct PairingAuditRow {
  std::string forward_name;
  std::string listed_inverse;
  double listed_residual;
  std::string best_inverse;
  double best_residual;
};

std::vector<PairingAuditRow> audit_1fold_pairings(int order = 8);

}  // namespace mfold
