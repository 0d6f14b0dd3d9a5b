#include "drcons/quad_loss.hpp"

#include "drcons/linalg.hpp"

namespace drcons {

QuadLoss::QuadLoss(Matrix Q, Vector g) : q_(std::move(Q)), g_(std::move(g)) {
    if (q_.rows() != q_.cols() || q_.rows() != g_.size())
        throw InvalidInputError("QuadLoss: dimension mismatch");
    require_finite(q_, "QuadLoss Q");
    require_finite(g_, "QuadLoss g");
    const double emin = eig_min_sym(q_);
    if (!(emin > 0.0))
        throw InvalidInputError("QuadLoss: Q must be positive definite");
    alpha_ = 2.0 * emin;
    smooth_ = 2.0 * op_norm(q_);
}

double QuadLoss::eval(const Vector& v) const {
    const Vector d = v - g_;
    return d.dot(q_ * d);
}

Vector QuadLoss::grad(const Vector& v) const {
    return 2.0 * (q_ * (v - g_));
}

}  // namespace drcons
