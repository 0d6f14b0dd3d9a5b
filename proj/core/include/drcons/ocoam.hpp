#pragma once

#include <optional>
#include <span>
#include <vector>

#include "drcons/linalg.hpp"
#include "drcons/markov.hpp"
#include "drcons/quad_loss.hpp"

namespace drcons {

// Per-round context revealed by the adversary: the matrix Y_t, the offset
// v_t, and (in the approximate setting) the offset estimate v_hat_t.
struct AffineContext {
    Matrix Y;
    Vector v;
    std::optional<Vector> v_hat;
};

// H_t = sum_{i=0}^{h} G^[i] Y_{t-i}. Contexts are ordered newest first
// (Y_t, Y_{t-1}, ...); histories shorter than h+1 are zero-padded, matching
// zero contexts before the start of the round sequence.
Matrix make_H(const MarkovOperator& g, std::span<const Matrix> ys_newest_first);

// f_t(z) = l(v + H z)
double unary_eval(const QuadLoss& loss, const Vector& v, const Matrix& H, const Vector& z);

// grad f_t(z) = H^T grad l(v + H z)
Vector unary_grad(const QuadLoss& loss, const Vector& v, const Matrix& H, const Vector& z);

// F_t(z_t, ..., z_{t-h}) = l(v + sum_i G^[i] Y_{t-i} z_{t-i}); iterates and
// contexts ordered newest first, zero-padded like make_H.
double memory_eval(const QuadLoss& loss, const MarkovOperator& g,
                   std::span<const Matrix> ys_newest_first,
                   std::span<const Vector> zs_newest_first, const Vector& v);

// Grid estimate of the convolution invertibility-modulus: min over a
// uniform unit-circle grid of sigma_min(G(e^{i theta}))^2, capped at 1.
// The grid minimum upper-bounds the circle minimum, so any analytic lower
// bound on kappa must fall at or below this value.
double kappa_lower_bound(const MarkovOperator& g, int grid_points);

// max{1, t psi_G(h+1)^2 / (h R_G^2)} with R_G = max{1, |G|_l1op}.
double c_psi_factor(const MarkovOperator& g, int h, long t);

// Smallest eigenvalue of
//   sum_s H_s^T H_s - (kappa/2) sum_s Y_s^T Y_s + 5 h R_H^2 c_psi I.
// Nonnegative output certifies the covariance domination on this instance.
// R_H is the assumed radius bound R_G * R_Y, not measured from the input.
double covariance_domination_gap(std::span<const Matrix> h_seq, std::span<const Matrix> y_seq,
                                 double kappa, int h, double r_h, double c_psi);

struct UnaryLossTerm {
    QuadLoss loss;
    Vector v;
    Matrix H;
};

// Exact constrained minimizer of sum_t f_t(z) over |z| <= radius, with the
// optimal value. Flat directions tie-break to the minimum-norm point.
BallQuadraticSolution best_in_hindsight(std::span<const UnaryLossTerm> losses, double radius);

// Incremental accumulator for the same quadratic; used by long runs so the
// per-step loss terms need not be stored.
class HindsightAccumulator {
  public:
    explicit HindsightAccumulator(Eigen::Index dim)
        : p_(Matrix::Zero(dim, dim)), q_(Vector::Zero(dim)) {}

    void add(const QuadLoss& loss, const Vector& v, const Matrix& H);
    BallQuadraticSolution solve(double radius) const;
    long count() const { return n_; }

  private:
    Matrix p_;
    Vector q_;
    double r_ = 0.0;
    long n_ = 0;
};

}  // namespace drcons
