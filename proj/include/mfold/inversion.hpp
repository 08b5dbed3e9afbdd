#pragma once

#include "mfold/series.hpp"

namespace mfold {

/// Compositional inverse g of a normalized series f (f(g(w)) = w), solved
/// coefficient by coefficient: at each degree n the unknown b_n enters the
/// composition coefficient linearly with unit weight, so it is read off
/// directly. Requires f normalized and f.order() >= order.
TruncatedSeries invert(const TruncatedSeries& f, int order);
TruncatedSeries invert(const TruncatedSeries& f);

/// First three inverse coefficients of an m-fold function, at the symmetric
/// indices m+1, 2m+1, 3m+1 of the inverse.
struct InverseCoeffs {
  Complex b_m1;
  Complex b_2m1;
  Complex b_3m1;
};

/// Closed forms for the 1-fold case:
///   b2 = -a2,  b3 = 2 a2^2 - a3,  b4 = -(5 a2^3 - 5 a2 a3 + a4).
InverseCoeffs closed_inverse_1fold(Complex a2, Complex a3, Complex a4);

/// Closed forms for the m-fold case:
///   b_{m+1}  = -a_{m+1}
///   b_{2m+1} = (m+1) a_{m+1}^2 - a_{2m+1}
///   b_{3m+1} = -( (m+1)(3m+2)/2 * a_{m+1}^3 - (3m+2) a_{m+1} a_{2m+1} + a_{3m+1} ).
/// At m = 1 this reproduces closed_inverse_1fold exactly (bitwise).
InverseCoeffs closed_inverse_mfold(int m, Complex a_m1, Complex a_2m1, Complex a_3m1);

}  // namespace mfold
