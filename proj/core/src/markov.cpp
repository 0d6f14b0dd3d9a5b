#include "drcons/markov.hpp"

#include <algorithm>

#include "drcons/linalg.hpp"

namespace drcons {

MarkovOperator::MarkovOperator(std::vector<Matrix> blocks) : blocks_(std::move(blocks)) {
    if (blocks_.empty())
        throw InvalidInputError("MarkovOperator: needs at least one block");
    const Eigen::Index rows = blocks_[0].rows();
    const Eigen::Index cols = blocks_[0].cols();
    block_norms_.reserve(blocks_.size());
    for (const Matrix& b : blocks_) {
        if (b.rows() != rows || b.cols() != cols)
            throw InvalidInputError("MarkovOperator: inconsistent block shapes");
        require_finite(b, "MarkovOperator block");
        block_norms_.push_back(op_norm(b));
        l1_op_ += block_norms_.back();
    }
    zero_ = Matrix::Zero(rows, cols);
}

const Matrix& MarkovOperator::block(int i) const {
    if (i < 0) throw InvalidInputError("MarkovOperator: negative index");
    if (i >= static_cast<int>(blocks_.size())) return zero_;
    return blocks_[static_cast<std::size_t>(i)];
}

double MarkovOperator::block_op_norm(int i) const {
    if (i < 0 || i >= static_cast<int>(block_norms_.size())) return 0.0;
    return block_norms_[static_cast<std::size_t>(i)];
}

double MarkovOperator::decay_psi(int n) const {
    if (n < 0) throw InvalidInputError("decay_psi: n must be >= 0");
    double s = 0.0;
    for (int i = std::max(n, 0); i < static_cast<int>(block_norms_.size()); ++i)
        s += block_norms_[static_cast<std::size_t>(i)];
    return s;
}

double markov_error(const MarkovOperator& g_hat, const MarkovOperator& g_true) {
    if (g_hat.p() != g_true.p() || g_hat.d_in() != g_true.d_in())
        throw InvalidInputError("markov_error: block shapes differ");
    const int len = std::max(g_hat.h_len(), g_true.h_len());
    double s = 0.0;
    for (int i = 0; i <= len; ++i) s += op_norm(g_hat.block(i) - g_true.block(i));
    return s;
}

}  // namespace drcons
