#include "mullreg/mullineux.hpp"

#include <algorithm>
#include <stdexcept>

namespace mullreg {

namespace {

void require_regular(const Partition& p, int e, const char* op)
{
    if (!is_e_regular(p, e))
        throw std::invalid_argument(std::string(op) + " requires an e-regular partition; "
                                    + format_partition(p) + " is " + std::to_string(e)
                                    + "-singular");
}

} // namespace

RimData e_rim(const Partition& p, int e)
{
    detail::require_e(e);
    require_regular(p, e, "the e-rim walk");

    RimData rim;
    rim.e = e;
    if (p.empty())
        return rim;

    const int rows = p.num_parts();
    // Walk the rim top-right to bottom-left. From (i,j) the next rim node
    // is (i+1,j) when row i+1 still reaches column j, else (i,j-1); after
    // every e-th node the walk restarts at the end of the next row.
    Node cur{1, p.part_at(1)};
    int k = 1;
    const int cap = p.size() + rows + 1;
    for (;;) {
        rim.rim_nodes.push_back(cur);
        if (cur.row == rows && (cur.col == 1 || k % e == 0))
            break;
        if (k >= cap)
            throw std::logic_error("e-rim walk failed to terminate on "
                                   + format_partition(p));
        if (k % e == 0)
            cur = Node{cur.row + 1, p.part_at(cur.row + 1)};
        else if (p.part_at(cur.row + 1) >= cur.col)
            cur = Node{cur.row + 1, cur.col};
        else
            cur = Node{cur.row, cur.col - 1};
        ++k;
    }

    rim.r = static_cast<int>(rim.rim_nodes.size());
    const bool divides = rim.r % e == 0;
    rim.m = rim.r - rows + (divides ? 0 : 1);
    rim.l_prime = rows - (divides ? 0 : 1);

    // Truncated rim: rim nodes whose left neighbour is on the rim too,
    // plus the bottom-left corner when e does not divide r. Consecutive
    // walk steps move left exactly when they stay in one row.
    for (std::size_t t = 1; t < rim.rim_nodes.size(); ++t)
        if (rim.rim_nodes[t].row == rim.rim_nodes[t - 1].row)
            rim.truncated_rim.push_back(rim.rim_nodes[t - 1]);
    if (!divides)
        rim.truncated_rim.push_back(Node{rows, 1});
    std::sort(rim.truncated_rim.begin(), rim.truncated_rim.end());

    if (static_cast<int>(rim.truncated_rim.size()) != rim.r - rim.l_prime)
        throw std::logic_error("truncated e-rim has the wrong size on "
                               + format_partition(p));
    return rim;
}

Partition strip_rim(const Partition& p, int e)
{
    const RimData rim = e_rim(p, e);
    std::vector<int> removed(static_cast<std::size_t>(p.num_parts()) + 1, 0);
    for (const Node& node : rim.rim_nodes)
        ++removed[static_cast<std::size_t>(node.row)];
    std::vector<int> out;
    for (int i = 1; i <= p.num_parts(); ++i) {
        int len = p.part_at(i) - removed[static_cast<std::size_t>(i)];
        if (len > 0)
            out.push_back(len);
    }
    return Partition(std::move(out));
}

Partition strip_truncated_rim(const Partition& p, int e)
{
    const RimData rim = e_rim(p, e);
    return add_column(strip_rim(p, e), rim.l_prime);
}

Partition mullineux(const Partition& p, int e)
{
    detail::require_e(e);
    require_regular(p, e, "the Mullineux map");

    // Peel truncated rims down to the empty partition, recording how many
    // nodes each layer removed, then rebuild by adding columns of those
    // lengths innermost-first.
    std::vector<int> layer_sizes;
    Partition cur = p;
    while (!cur.empty()) {
        Partition next = strip_truncated_rim(cur, e);
        if (next.size() >= cur.size())
            throw std::logic_error("truncated-rim peel failed to shrink "
                                   + format_partition(cur));
        layer_sizes.push_back(cur.size() - next.size());
        cur = std::move(next);
    }

    Partition image;
    for (auto it = layer_sizes.rbegin(); it != layer_sizes.rend(); ++it)
        image = add_column(image, *it);
    return image;
}

bool mullineux_characterization_check(const Partition& p, int e)
{
    detail::require_e(e);
    require_regular(p, e, "the characterization check");
    if (p.empty())
        throw std::invalid_argument("the characterization check requires a non-empty partition");

    const RimData rim = e_rim(p, e);
    const Partition image = mullineux(p, e);
    const RimData image_rim = e_rim(image, e);
    return image_rim.r == rim.r
        && image.num_parts() == rim.m
        && strip_rim(image, e) == mullineux(strip_rim(p, e), e);
}

} // namespace mullreg
