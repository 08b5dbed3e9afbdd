#include "mfold/inversion.hpp"

#include <stdexcept>

namespace mfold {

TruncatedSeries invert(const TruncatedSeries& f, int order) {
  if (order < 1) throw std::invalid_argument("invert: order must be >= 1");
  if (f.order() < order)
    throw std::invalid_argument("invert: input order below requested inverse order");
  if (!f.is_normalized())
    throw std::invalid_argument("invert: input not normalized (a0 = 0, a1 = 1)");
  const TruncatedSeries ft = f.truncated(order);
  TruncatedSeries g = TruncatedSeries::identity(order);
  // After step n, (f o g) matches w through degree n. Adding b_n w^n moves
  // the degree-n composition coefficient by exactly a1 * b_n = b_n.
  for (int n = 2; n <= order; ++n) {
    const Complex resid = compose(ft, g).coeff(n);
    g.set_coeff(n, g.coeff(n) - resid);
  }
  return g;
}

TruncatedSeries invert(const TruncatedSeries& f) { return invert(f, f.order()); }

InverseCoeffs closed_inverse_1fold(Complex a2, Complex a3, Complex a4) {
  InverseCoeffs r;
  r.b_m1 = -a2;
  r.b_2m1 = 2.0 * (a2 * a2) - a3;
  r.b_3m1 = -(5.0 * (a2 * a2 * a2) - 5.0 * (a2 * a3) + a4);
  return r;
}

InverseCoeffs closed_inverse_mfold(int m, Complex a_m1, Complex a_2m1, Complex a_3m1) {
  if (m < 1) throw std::invalid_argument("closed_inverse_mfold: m must be >= 1");
  // Small integer factors are exact in double, so the m = 1 case lands on
  // the same expressions as closed_inverse_1fold bit for bit.
  const double c2 = static_cast<double>(m + 1);
  const double c3a = 0.5 * static_cast<double>(m + 1) * static_cast<double>(3 * m + 2);
  const double c3b = static_cast<double>(3 * m + 2);
  InverseCoeffs r;
  r.b_m1 = -a_m1;
  r.b_2m1 = c2 * (a_m1 * a_m1) - a_2m1;
  r.b_3m1 = -(c3a * (a_m1 * a_m1 * a_m1) - c3b * (a_m1 * a_2m1) + a_3m1);
  return r;
}

}  // namespace mfold
