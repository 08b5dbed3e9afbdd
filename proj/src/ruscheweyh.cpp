#include "mfold/ruscheweyh.hpp"

#include <stdexcept>
#include <string>

namespace mfold {

std::uint64_t binomial(int n, int k) {
  if (n < 0 || k < 0 || k > n) throw std::invalid_argument("binomial: need 0 <= k <= n");
  if (k > n - k) k = n - k;
  std::uint64_t r = 1;
  for (int i = 1; i <= k; ++i) {
    // r * (n-k+i) is divisible by i at every step, so the division is exact.
    const std::uint64_t num = static_cast<std::uint64_t>(n - k + i);
    std::uint64_t prod = 0;
    if (__builtin_mul_overflow(r, num, &prod))
      throw std::overflow_error("binomial: C(" + std::to_string(n) + "," + std::to_string(k) +
                                ") exceeds 64 bits");
    r = prod / static_cast<std::uint64_t>(i);
  }
  return r;
}

RuscheweyhFactor omega(int delta, int k) {
  if (delta < 0) throw std::invalid_argument("omega: delta must be >= 0");
  if (k < 1) throw std::invalid_argument("omega: coefficient degree must be >= 1");
  return {delta, k, binomial(delta + k - 1, delta)};
}

RuscheweyhFactor omega_mfold(int delta, int k) {
  if (delta < 0) throw std::invalid_argument("omega_mfold: delta must be >= 0");
  if (k < 0) throw std::invalid_argument("omega_mfold: symmetric index must be >= 0");
  return {delta, k, binomial(delta + k, delta)};
}

TruncatedSeries ruscheweyh(const TruncatedSeries& f, int delta) {
  if (!f.is_normalized())
    throw std::invalid_argument("ruscheweyh: input not normalized");
  TruncatedSeries r = f;
  // omega(delta, 1) = 1, so normalization is preserved.
  for (int k = 2; k <= f.order(); ++k)
    r.set_coeff(k, static_cast<double>(omega(delta, k).value) * f.coeff(k));
  return r;
}

MFoldFn ruscheweyh_mfold(const MFoldFn& f, int delta) {
  std::vector<Complex> c = f.coeffs();
  for (int k = 1; k <= f.index_count(); ++k)
    c[k - 1] = static_cast<double>(omega_mfold(delta, k).value) * c[k - 1];
  return MFoldFn(f.m(), std::move(c));
}

}  // namespace mfold
