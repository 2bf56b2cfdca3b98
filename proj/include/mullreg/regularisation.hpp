#pragma once

#include "mullreg/partition.hpp"

namespace mullreg {

/// Node tally per ladder. For a fixed e, ladder l is the set of nodes (i,j)
/// with i + (e-1)(j-1) = l; counts[l-1] is the number of nodes of the
/// partition in ladder l, with trailing zero ladders trimmed so equal
/// tallies compare equal.
struct LadderCounts {
    int e = 2;
    std::vector<int> counts;

    int count(int ladder) const
    {
        if (ladder < 1 || ladder > static_cast<int>(counts.size()))
            return 0;
        return counts[static_cast<std::size_t>(ladder) - 1];
    }

    int max_ladder() const { return static_cast<int>(counts.size()); }

    bool operator==(const LadderCounts&) const = default;
};

/// i + (e-1)(j-1) for node (i,j). Requires row, col >= 1.
int ladder_index(Node node, int e);

/// The smallest row index among nodes of ladder l with row >= 1, i.e. the
/// row of the topmost slot a node of that ladder can occupy. Equals
/// l - (e-1)*floor((l-1)/(e-1)); regularisation fills ladders downward
/// from this slot, so this arithmetic is exposed for direct testing.
int ladder_top_row(int ladder, int e);

LadderCounts ladder_counts(const Partition& p, int e);

/// e-regularisation: moves the nodes of each ladder to the topmost slots
/// of that ladder. Preserves size and ladder counts; the result is
/// e-regular, and equals p when p is already e-regular.
Partition regularise(const Partition& p, int e);

} // namespace mullreg
