#include "mullreg/regularisation.hpp"

#include <stdexcept>

namespace mullreg {

int ladder_index(Node node, int e)
{
    detail::require_e(e);
    if (node.row < 1 || node.col < 1)
        throw std::invalid_argument("node coordinates must be >= 1");
    return node.row + (e - 1) * (node.col - 1);
}

int ladder_top_row(int ladder, int e)
{
    detail::require_e(e);
    if (ladder < 1)
        throw std::invalid_argument("ladder index must be >= 1");
    return ladder - (e - 1) * ((ladder - 1) / (e - 1));
}

LadderCounts ladder_counts(const Partition& p, int e)
{
    detail::require_e(e);
    LadderCounts lc;
    lc.e = e;
    if (p.empty())
        return lc;
    int max_ladder = p.num_parts() + (e - 1) * (p.part_at(1) - 1);
    lc.counts.assign(static_cast<std::size_t>(max_ladder), 0);
    for (int i = 1; i <= p.num_parts(); ++i)
        for (int j = 1; j <= p.part_at(i); ++j)
            ++lc.counts[static_cast<std::size_t>(i + (e - 1) * (j - 1)) - 1];
    while (!lc.counts.empty() && lc.counts.back() == 0)
        lc.counts.pop_back();
    return lc;
}

Partition regularise(const Partition& p, int e)
{
    LadderCounts lc = ladder_counts(p, e);
    if (p.empty())
        return p;

    // Fill each ladder from its topmost slot downward, then read off row
    // lengths. Within ladder l the slots are (l-(e-1)(j-1), j) for
    // decreasing j starting at the largest j with positive row.
    std::size_t max_rows = static_cast<std::size_t>(lc.max_ladder());
    std::vector<int> row_count(max_rows + 1, 0);
    std::vector<int> row_max_col(max_rows + 1, 0);
    for (int l = 1; l <= lc.max_ladder(); ++l) {
        int n = lc.count(l);
        int j = (l - 1) / (e - 1) + 1; // topmost slot; see ladder_top_row
        for (int k = 0; k < n; ++k, --j) {
            int i = l - (e - 1) * (j - 1);
            ++row_count[static_cast<std::size_t>(i)];
            row_max_col[static_cast<std::size_t>(i)] =
                std::max(row_max_col[static_cast<std::size_t>(i)], j);
        }
    }

    std::vector<int> parts;
    for (std::size_t i = 1; i <= max_rows; ++i) {
        if (row_count[i] == 0)
            break;
        if (row_max_col[i] != row_count[i])
            throw std::logic_error("regularisation produced a row with gaps");
        parts.push_back(row_count[i]);
    }
    int placed = 0;
    for (int part : parts)
        placed += part;
    if (placed != p.size())
        throw std::logic_error("regularisation dropped nodes below an empty row");
    return Partition(std::move(parts)); // ctor re-asserts weak decrease
}

} // namespace mullreg
