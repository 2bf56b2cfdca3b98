#pragma once

#include "mullreg/partition.hpp"

namespace mullreg {

/// The e-rim of a partition and the scalars derived from it.
///
/// rim_nodes lists the e-rim in walk order, from the top-right corner of
/// the diagram towards the bottom-left; r is its length. The walk drops to
/// the end of the next row after every e-th node, so consecutive rim cells
/// are skipped exactly where the count rolls over a multiple of e.
///
///   m       = r - num_parts      (+1 when e does not divide r)
///   l_prime = num_parts          (-1 when e does not divide r)
///
/// truncated_rim holds the e-rim nodes whose left neighbour is also in the
/// e-rim, plus the bottom-left corner cell when e does not divide r; it has
/// exactly r - l_prime nodes and is kept sorted by (row, col).
struct RimData {
    int e = 2;
    std::vector<Node> rim_nodes;
    std::vector<Node> truncated_rim;
    int r = 0;
    int m = 0;
    int l_prime = 0;
};

/// Walks the e-rim. Defined for e-regular partitions (the walk is not
/// well-founded on e-singular input, which is rejected); the empty
/// partition yields the empty rim with r = 0.
RimData e_rim(const Partition& p, int e);

/// Removes the e-rim. Strictly decreases the size of a non-empty
/// partition and preserves e-regularity.
Partition strip_rim(const Partition& p, int e);

/// Removes only the truncated e-rim: strips the full e-rim and restores a
/// first column of length l_prime. Same preconditions as strip_rim.
Partition strip_truncated_rim(const Partition& p, int e);

/// The Mullineux map on e-regular partitions, computed by peeling
/// truncated e-rims down to the empty partition and rebuilding with the
/// peeled sizes as column lengths in reverse order. An involution that
/// preserves size and e-regularity; the identity when e = 2, and plain
/// conjugation when e exceeds the rim of every layer.
Partition mullineux(const Partition& p, int e);

/// Checks mullineux(p) against the characterizing data of the map: the
/// image must have the same e-rim length r as p, exactly m(p) parts, and
/// its rim-stripped form must be the image of the rim-stripped p.
/// Requires a non-empty e-regular p; true on every input unless the
/// implementation is broken.
bool mullineux_characterization_check(const Partition& p, int e);

} // namespace mullreg
