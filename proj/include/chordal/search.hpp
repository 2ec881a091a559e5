#pragma once

#include <cstddef>
#include <stdexcept>

namespace chordal {

/// Thrown by compound checks whose nested searches ran out of budget; plain
/// decision procedures report Outcome::Budget instead.
struct BudgetError : std::runtime_error {
    BudgetError() : std::runtime_error("search budget exhausted") {}
};

/// Three-valued result of a budgeted decision search.  Budget exhaustion is
/// a distinct outcome and is never collapsed into a negative answer.
enum class Outcome { True, False, Budget };

inline const char* outcome_name(Outcome o) {
    switch (o) {
        case Outcome::True: return "true";
        case Outcome::False: return "false";
        default: return "budget-exhausted";
    }
}

struct SearchBudget {
    std::size_t max_nodes = 10'000'000;  // memo entries / search nodes
    int max_cycle_space_dim = 20;        // 2^k cycle-space enumeration cap
};

/// Per-call node meter.  charge() returns false once the budget is spent.
class BudgetMeter {
public:
    explicit BudgetMeter(const SearchBudget& b) : budget_(b) {}
    bool charge(std::size_t k = 1) {
        used_ += k;
        return used_ <= budget_.max_nodes;
    }
    bool exhausted() const { return used_ > budget_.max_nodes; }
    std::size_t used() const { return used_; }
    const SearchBudget& limits() const { return budget_; }

private:
    SearchBudget budget_;
    std::size_t used_ = 0;
};

}  // namespace chordal
