#pragma once

#include <cstdint>

#include "mfold/series.hpp"

namespace mfold {

/// Exact binomial C(n, k) in 64 bits; throws std::overflow_error when the
/// value does not fit.
std::uint64_t binomial(int n, int k);

/// Convolution weight applied to a coefficient by the order-delta operator.
struct RuscheweyhFactor {
  int delta;
  int k;
  std::uint64_t value;
};

/// 1-fold factor at coefficient degree k >= 1: C(delta+k-1, delta).
/// Equals 1 at k = 1, k at delta = 1, and 1 for all k at delta = 0.
RuscheweyhFactor omega(int delta, int k);

/// m-fold factor at symmetric index k >= 0: C(delta+k, delta). This is the
/// 1-fold factor shifted by one degree, matching how the operator acts on
/// the support points mk+1.
RuscheweyhFactor omega_mfold(int delta, int k);

/// Termwise a_k -> omega(delta, k) * a_k on a normalized series.
TruncatedSeries ruscheweyh(const TruncatedSeries& f, int delta);

/// Termwise a_{mk+1} -> omega_mfold(delta, k) * a_{mk+1}.
/// For m = 1 this agrees exactly with ruscheweyh on the embedding.
MFoldFn ruscheweyh_mfold(const MFoldFn& f, int delta);

}  // namespace mfold
