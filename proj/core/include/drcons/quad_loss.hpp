#pragma once

#include "drcons/types.hpp"

namespace drcons {

// Time-varying quadratic loss l(v) = (v - g)^T Q (v - g), Q symmetric
// positive-definite. Strong convexity alpha = 2 eig_min(Q) and smoothness
// 2 op_norm(Q) are computed at construction.
class QuadLoss {
  public:
    QuadLoss(Matrix Q, Vector g);

    double eval(const Vector& v) const;
    Vector grad(const Vector& v) const;

    const Matrix& Q() const { return q_; }
    const Vector& target() const { return g_; }
    Eigen::Index dim() const { return g_.size(); }

    // Strong convexity of the Hessian 2Q.
    double alpha() const { return alpha_; }
    // Smoothness (largest Hessian eigenvalue).
    double smoothness() const { return smooth_; }

  private:
    Matrix q_;
    Vector g_;
    double alpha_ = 0.0;
    double smooth_ = 0.0;
};

}  // namespace drcons
