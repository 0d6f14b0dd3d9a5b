#include "drcons/ledger.hpp"

namespace drcons {

void RegretLedger::add_step(double with_memory_loss, double unary_loss, double euc_increment,
                            double adap_increment) {
    with_memory_.push_back(with_memory_loss);
    unary_.push_back(unary_loss);
    sum_F_ += with_memory_loss;
    sum_f_ += unary_loss;
    euc_ += euc_increment;
    adap_ += adap_increment;
}

LedgerSummary RegretLedger::finalize(double comparator_value) const {
    LedgerSummary s;
    s.memory_reg = sum_F_ - comparator_value;
    s.oco_reg = sum_f_ - comparator_value;
    s.move_diff = sum_F_ - sum_f_;
    s.euc_cost = euc_;
    s.adap_cost = adap_;
    s.steps = steps();
    return s;
}

}  // namespace drcons
