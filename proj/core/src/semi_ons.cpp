#include "drcons/semi_ons.hpp"

namespace drcons {

SemiOnsState::SemiOnsState(Eigen::Index dim, const SemiOnsParams& params)
    : params_(params),
      z_(Vector::Zero(dim)),
      lambda_mat_(params.lambda * Matrix::Identity(dim, dim)) {
    if (!(params.eta > 0.0)) throw InvalidInputError("SemiOnsState: eta must be positive");
    if (!(params.lambda > 0.0)) throw InvalidInputError("SemiOnsState: lambda must be positive");
    if (!(params.radius > 0.0)) throw InvalidInputError("SemiOnsState: radius must be positive");
}

SemiOnsStepInfo SemiOnsState::step(const QuadLoss& loss, const AffineContext& ctx,
                                   const MarkovOperator& g_used) {
    if (ctx.Y.cols() != z_.size())
        throw InvalidInputError("SemiOnsState::step: context width mismatch");
    if (params_.mode == SemiOnsMode::kApproximate && !ctx.v_hat.has_value())
        throw InvalidInputError("SemiOnsState::step: approximate mode needs v_hat");

    y_hist_.push_back(ctx.Y);

    // H_t over the last h+1 contexts (zero-padded before the start).
    std::vector<Matrix> recent;
    const int lags = std::min<int>(g_used.h_len(), static_cast<int>(y_hist_.size()) - 1);
    recent.reserve(static_cast<std::size_t>(lags) + 1);
    for (int i = 0; i <= lags; ++i)
        recent.push_back(y_hist_[y_hist_.size() - 1 - static_cast<std::size_t>(i)]);
    Matrix h = make_H(g_used, recent);

    lambda_mat_.noalias() += h.transpose() * h;

    const Vector& v = params_.mode == SemiOnsMode::kApproximate ? *ctx.v_hat : ctx.v;
    Vector grad = unary_grad(loss, v, h, z_);

    const SpdMatrix lam(lambda_mat_);
    const Vector z_tilde = z_ - params_.eta * spd_solve(lam, grad);
    z_ = proj_weighted_ball(lam, z_tilde, params_.radius);
    ++t_;
    return {std::move(h), std::move(grad)};
}

}  // namespace drcons
