#pragma once

#include <vector>

#include "drcons/ocoam.hpp"

namespace drcons {

// Which offset the gradient uses: the exact v_t or the estimate v_hat_t.
// The update rule is otherwise identical in both modes.
enum class SemiOnsMode { kExact, kApproximate };

struct SemiOnsParams {
    double eta = 1.0;
    double lambda = 1.0;
    double radius = 1.0;
    SemiOnsMode mode = SemiOnsMode::kExact;
};

struct SemiOnsStepInfo {
    Matrix H;
    Vector grad;
};

// Online Newton-style learner whose preconditioner accumulates context
// Gram matrices H_t^T H_t rather than gradient outer products. The step at
// round t uses Lambda_t = lambda I + sum_{s<=t} H_s^T H_s (the increment is
// applied before the step), then projects in the Lambda_t-norm onto the
// Euclidean ball of the configured radius.
class SemiOnsState {
  public:
    SemiOnsState(Eigen::Index dim, const SemiOnsParams& params);

    // Consumes the revealed (loss, context) pair and advances the iterate.
    // g_used is G in exact mode or G_hat in approximate mode.
    SemiOnsStepInfo step(const QuadLoss& loss, const AffineContext& ctx,
                         const MarkovOperator& g_used);

    const Vector& iterate() const { return z_; }
    const Matrix& preconditioner() const { return lambda_mat_; }
    long t() const { return t_; }
    double eta() const { return params_.eta; }
    double lambda_reg() const { return params_.lambda; }
    double radius() const { return params_.radius; }
    const std::vector<Matrix>& context_history() const { return y_hist_; }

  private:
    SemiOnsParams params_;
    Vector z_;
    Matrix lambda_mat_;
    long t_ = 0;
    std::vector<Matrix> y_hist_;  // oldest first; Y_{t-i} = y_hist_[t-1-i]
};

}  // namespace drcons
