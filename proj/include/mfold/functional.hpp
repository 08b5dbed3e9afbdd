#pragma once

#include <string>
#include <vector>

#include "mfold/params.hpp"
#include "mfold/series.hpp"

namespace mfold {

enum class Side { Forward, Inverse };

/// The class-defining expression
///   D = 1 + ( (1-lambda)(1-gamma) F/z + (lambda(gamma+1)+gamma) F'
///             + lambda*gamma (z F'' - 2) - 1 ) / tau,
/// where F is the order-delta operator applied to f (Forward) or to the
/// compositional inverse of f (Inverse, in the variable w). Each side divides
/// the operator image by its own variable. The constant term is identically 1;
/// all support sits at multiples of m.
struct FunctionalSeries {
  TruncatedSeries series;
  Side side;
};

FunctionalSeries functional_series(const MFoldFn& f, const ClassParams& p, Side side);

/// Closed forms of the first two functional coefficients on both sides.
/// Forward, at z^m and z^{2m}:
///   c_m  = (1 + m(lambda+gamma) + lambda*gamma((m+1)^2+1)) (delta+1) a_{m+1} / tau
///   c_2m = (1 + 2m(lambda+gamma) + lambda*gamma((2m+1)^2+1)) (delta+1)(delta+2) a_{2m+1} / (2 tau)
/// Inverse: same multipliers applied to the inverse coefficients -a_{m+1}
/// and (m+1)a_{m+1}^2 - a_{2m+1}.
struct FunctionalCoeffs {
  Complex forward_m;
  Complex forward_2m;
  Complex inverse_m;
  Complex inverse_2m;
};

FunctionalCoeffs closed_coeffs(const ClassParams& p, Complex a_m1, Complex a_2m1);

struct RadiusMargin {
  double radius;
  double forward;
  double inverse;
};

/// Margin of class membership at the truncation: for Q,
/// alpha*pi/2 - max |arg D| over the sample set; for Theta, min Re D - beta.
/// Positive means the sampled inequality holds with room. Samples cover one
/// symmetry sector [0, 2*pi/m) at each radius; by m-fold support the margins
/// are invariant under sector rotation.
struct MembershipReport {
  double forward_margin;
  double inverse_margin;
  std::vector<RadiusMargin> per_radius;
  int angles_per_sector;
  std::vector<std::string> notes;
};

/// radii must be nonempty, each in (0,1); angles_per_sector >= 1. For the
/// Q class a sample with |D| < 1e-12 has no usable argument and throws
/// std::domain_error rather than being scored.
MembershipReport membership_margin(const MFoldFn& f, const ClassParams& p,
                                   const std::vector<double>& radii, int angles_per_sector);

}  // namespace mfold
