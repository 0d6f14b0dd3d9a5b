#pragma once

#include <vector>

#include "drcons/types.hpp"

namespace drcons {

// Finite impulse-response sequence (G^[0], ..., G^[h]): the convolution
// kernel of an LTI response. Blocks share a common shape p x d_in; the
// per-block operator norms and the l1,op norm are cached at construction.
class MarkovOperator {
  public:
    explicit MarkovOperator(std::vector<Matrix> blocks);

    int h_len() const { return static_cast<int>(blocks_.size()) - 1; }
    Eigen::Index p() const { return blocks_[0].rows(); }
    Eigen::Index d_in() const { return blocks_[0].cols(); }

    // Zero beyond the stored length.
    const Matrix& block(int i) const;
    const std::vector<Matrix>& blocks() const { return blocks_; }

    // sum_i |G^[i]|_op
    double l1_op() const { return l1_op_; }
    double block_op_norm(int i) const;

    // Tail sum psi_G(n) = sum_{i >= n} |G^[i]|_op (zero beyond h_len).
    double decay_psi(int n) const;

  private:
    std::vector<Matrix> blocks_;
    std::vector<double> block_norms_;
    Matrix zero_;
    double l1_op_ = 0.0;
};

// sum_i |Ghat^[i] - G^[i]|_op, the shorter operand zero-padded.
double markov_error(const MarkovOperator& g_hat, const MarkovOperator& g_true);

}  // namespace drcons
