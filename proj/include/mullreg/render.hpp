#pragma once

#include "mullreg/partition.hpp"

namespace mullreg {

/// What to overlay on a Young diagram. Everything except `none` needs e.
enum class Annotation { none, ladders, e_rim, truncated_rim, hook_classes };

struct RenderOptions {
    Annotation annotation = Annotation::none;
    int e = 0;
};

/// Renders the Young diagram in the English convention (row 1 on top,
/// columns growing rightward), one text line per row, each line ending in
/// '\n'. Cells read:
///   none           '.'
///   ladders        the ladder index of the cell (single digits are packed,
///                  wider labels are space-separated and right-aligned)
///   e_rim          'x' on the e-rim, '.' elsewhere
///   truncated_rim  'x' on the truncated e-rim, '.' elsewhere
///   hook_classes   for cells whose hook length e divides: '>' shallow,
///                  'v' steep, 'x' neither; '.' elsewhere
std::string render_diagram(const Partition& p, const RenderOptions& options);

} // namespace mullreg
