#pragma once

#include <map>
#include <string>
#include <utility>

#include "edgeideal/errors.hpp"

namespace edgeideal {

struct ResolutionSummary {
    int pdim = 0;     // ring convention: max i with a nonzero entry
    int reg_ring = 0; // max j - i
    int depth = 0;    // n - pdim
    bool linear = true;
};

/// Sparse graded Betti numbers of the Stanley-Reisner ring, with the
/// resolution-of-the-quotient convention: beta(0,0) = 1 and no other beta(0,j).
class BettiTable {
public:
    BettiTable() = default;

    explicit BettiTable(int n) : n_(n) { entries_[{0, 0}] = 1; }

    int ambient() const { return n_; }

    void add(int i, int j, unsigned long long mult) {
        if (mult == 0) return;
        if (i < 0 || i > j || j > n_) throw InternalError("BettiTable: entry out of range");
        if (i == 0 && j != 0) throw InternalError("BettiTable: illegal homological degree 0 entry");
        entries_[{i, j}] += mult;
    }

    unsigned long long at(int i, int j) const {
        auto it = entries_.find({i, j});
        return it == entries_.end() ? 0 : it->second;
    }

    const std::map<std::pair<int, int>, unsigned long long>& entries() const { return entries_; }

    bool operator==(const BettiTable& o) const { return n_ == o.n_ && entries_ == o.entries_; }
    bool operator!=(const BettiTable& o) const { return !(*this == o); }

private:
    int n_ = 0;
    std::map<std::pair<int, int>, unsigned long long> entries_;
};

ResolutionSummary summarize(const BettiTable& t);

/// Macaulay2-style grid: columns are homological degrees, rows are j - i,
/// with a leading "total" row; zero entries print as dots.
std::string render_betti_table(const BettiTable& t);

std::string betti_table_csv(const BettiTable& t);

} // namespace edgeideal
