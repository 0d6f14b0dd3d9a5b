#pragma once

#include <vector>

#include "drcons/types.hpp"

namespace drcons {

struct LedgerSummary {
    double memory_reg = 0.0;  // sum F_t - comparator value
    double oco_reg = 0.0;     // sum f_t(z_t) - comparator value
    double move_diff = 0.0;   // memory_reg - oco_reg = sum (F_t - f_t)
    double euc_cost = 0.0;    // sum |z_t - z_{t-1}|
    double adap_cost = 0.0;   // sum_i sum_t |Y_t (z_{t-i} - z_{t-i-1})|
    long steps = 0;
};

// Per-step bookkeeping for with-memory losses, unary losses, and iterate
// movement in both the Euclidean and the Y_t-weighted geometry.
class RegretLedger {
  public:
    void add_step(double with_memory_loss, double unary_loss, double euc_increment,
                  double adap_increment);

    double sum_with_memory() const { return sum_F_; }
    double sum_unary() const { return sum_f_; }
    long steps() const { return static_cast<long>(with_memory_.size()); }
    const std::vector<double>& with_memory_losses() const { return with_memory_; }
    const std::vector<double>& unary_losses() const { return unary_; }

    LedgerSummary finalize(double comparator_value) const;

  private:
    std::vector<double> with_memory_;
    std::vector<double> unary_;
    double sum_F_ = 0.0;
    double sum_f_ = 0.0;
    double euc_ = 0.0;
    double adap_ = 0.0;
};

}  // namespace drcons
