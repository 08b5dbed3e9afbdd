#pragma once

#include <complex>
#include <stdexcept>

namespace mfold {

using Complex = std::complex<double>;

enum class ClassKind { Q, Theta };

/// Parameter tuple of the two function classes. Q carries an angle fraction
/// alpha in (0,1]; Theta carries an order beta in [0,1). tau is complex and
/// nonzero, lambda >= 0, gamma in [0,1], delta a nonnegative integer, m >= 1.
struct ClassParams {
  std::complex<double> tau{1.0, 0.0};
  double lambda = 0.0;
  double gamma = 0.0;
  int delta = 0;
  int m = 1;
  ClassKind kind = ClassKind::Q;
  double order_param = 1.0;  // alpha for Q, beta for Theta

  static ClassParams q(std::complex<double> tau, double lambda, double gamma, int delta, int m,
                       double alpha) {
    ClassParams p{tau, lambda, gamma, delta, m, ClassKind::Q, alpha};
    p.validate();
    return p;
  }

  static ClassParams theta(std::complex<double> tau, double lambda, double gamma, int delta, int m,
                           double beta) {
    ClassParams p{tau, lambda, gamma, delta, m, ClassKind::Theta, beta};
    p.validate();
    return p;
  }

  double alpha() const {
    if (kind != ClassKind::Q) throw std::logic_error("params: alpha requested on a Theta-class set");
    return order_param;
  }

  double beta() const {
    if (kind != ClassKind::Theta) throw std::logic_error("params: beta requested on a Q-class set");
    return order_param;
  }

  void validate() const {
    if (!(std::abs(tau) > 0.0)) throw std::invalid_argument("params: tau must be nonzero");
    if (!(lambda >= 0.0)) throw std::invalid_argument("params: lambda must be >= 0");
    if (!(gamma >= 0.0 && gamma <= 1.0)) throw std::invalid_argument("params: gamma must be in [0,1]");
    if (delta < 0) throw std::invalid_argument("params: delta must be a nonnegative integer");
    if (m < 1) throw std::invalid_argument("params: m must be >= 1");
    if (kind == ClassKind::Q) {
      if (!(order_param > 0.0 && order_param <= 1.0))
        throw std::invalid_argument("params: alpha must be in (0,1]");
    } else {
      if (!(order_param >= 0.0 && order_param < 1.0))
        throw std::invalid_argument("params: beta must be in [0,1)");
    }
  }
};

}  // namespace mfold
