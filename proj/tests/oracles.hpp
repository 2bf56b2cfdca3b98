#pragma once

// Brute-force oracles used only by the tests. Each one recomputes a
// quantity from the raw Young-diagram grid, independently of the library
// path it is checking.

#include "mullreg/partition.hpp"

#include <stdexcept>
#include <vector>

namespace oracle {

// p(n) via the parts-bounded recurrence p(n,k) = p(n,k-1) + p(n-k,k).
inline long long partition_count(int n)
{
    if (n < 0)
        return 0;
    std::vector<std::vector<long long>> table(
        static_cast<std::size_t>(n) + 1,
        std::vector<long long>(static_cast<std::size_t>(n) + 1, 0));
    for (std::size_t k = 0; k <= static_cast<std::size_t>(n); ++k)
        table[0][k] = 1;
    for (std::size_t m = 1; m <= static_cast<std::size_t>(n); ++m)
        for (std::size_t k = 1; k <= static_cast<std::size_t>(n); ++k) {
            table[m][k] = table[m][k - 1];
            if (m >= k)
                table[m][k] += table[m - k][k];
        }
    return table[static_cast<std::size_t>(n)][static_cast<std::size_t>(n)];
}

// grid[i-1][j-1] == true iff (i,j) is a node of p.
inline std::vector<std::vector<bool>> grid(const mullreg::Partition& p)
{
    std::vector<std::vector<bool>> cells;
    for (int part : p.parts())
        cells.emplace_back(static_cast<std::size_t>(part), true);
    return cells;
}

inline mullreg::Partition conjugate_by_columns(const mullreg::Partition& p)
{
    std::vector<int> cols;
    for (int j = 1; j <= (p.empty() ? 0 : p.part_at(1)); ++j) {
        int height = 0;
        for (int i = 1; i <= p.num_parts(); ++i)
            if (p.part_at(i) >= j)
                ++height;
        cols.push_back(height);
    }
    return mullreg::Partition(cols);
}

inline int arm_by_scan(const mullreg::Partition& p, int i, int j)
{
    int arm = 0;
    while (p.part_at(i) >= j + arm + 1)
        ++arm;
    return arm;
}

inline int leg_by_scan(const mullreg::Partition& p, int i, int j)
{
    int leg = 0;
    while (p.part_at(i + leg + 1) >= j)
        ++leg;
    return leg;
}

inline int hook_length_by_scan(const mullreg::Partition& p, int i, int j)
{
    return arm_by_scan(p, i, j) + leg_by_scan(p, i, j) + 1;
}

// Removes an explicit node set from the diagram; the remaining cells must
// be left-justified rows forming a partition, otherwise this throws.
inline mullreg::Partition remove_nodes(const mullreg::Partition& p,
                                       const std::vector<mullreg::Node>& nodes)
{
    auto cells = grid(p);
    for (const mullreg::Node& node : nodes) {
        if (node.row < 1 || node.row > static_cast<int>(cells.size())
            || node.col < 1
            || node.col > static_cast<int>(cells[static_cast<std::size_t>(node.row) - 1].size())
            || !cells[static_cast<std::size_t>(node.row) - 1]
                     [static_cast<std::size_t>(node.col) - 1])
            throw std::runtime_error("removing a node that is absent from the diagram");
        cells[static_cast<std::size_t>(node.row) - 1]
             [static_cast<std::size_t>(node.col) - 1] = false;
    }
    std::vector<int> lengths;
    for (const auto& row : cells) {
        int length = 0;
        while (length < static_cast<int>(row.size()) && row[static_cast<std::size_t>(length)])
            ++length;
        for (int j = length; j < static_cast<int>(row.size()); ++j)
            if (row[static_cast<std::size_t>(j)])
                throw std::runtime_error("node removal left a gap inside a row");
        lengths.push_back(length);
    }
    while (!lengths.empty() && lengths.back() == 0)
        lengths.pop_back();
    for (int length : lengths)
        if (length == 0)
            throw std::runtime_error("node removal emptied a row above a non-empty one");
    return mullreg::Partition(lengths);
}

// Number of nodes (i,j) with (i+1,j+1) outside the diagram.
inline int rim_size(const mullreg::Partition& p)
{
    int count = 0;
    for (int i = 1; i <= p.num_parts(); ++i)
        for (int j = 1; j <= p.part_at(i); ++j)
            if (p.part_at(i + 1) < j + 1)
                ++count;
    return count;
}

} // namespace oracle
