#include "mullreg/render.hpp"

#include "mullreg/hooks.hpp"
#include "mullreg/mullineux.hpp"
#include "mullreg/regularisation.hpp"

#include <algorithm>
#include <stdexcept>

namespace mullreg {

namespace {

std::string render_marks(const Partition& p, const std::vector<Node>& marked, char mark)
{
    std::string out;
    for (int i = 1; i <= p.num_parts(); ++i) {
        for (int j = 1; j <= p.part_at(i); ++j)
            out += std::find(marked.begin(), marked.end(), Node{i, j}) != marked.end()
                       ? mark
                       : '.';
        out += '\n';
    }
    return out;
}

std::string render_ladders(const Partition& p, int e)
{
    int max_label = 0; // the deepest ladder ends a row, so row ends suffice
    for (int i = 1; i <= p.num_parts(); ++i)
        max_label = std::max(max_label, ladder_index(Node{i, p.part_at(i)}, e));
    int width = 1;
    for (int v = max_label; v >= 10; v /= 10)
        ++width;
    std::string out;
    for (int i = 1; i <= p.num_parts(); ++i) {
        for (int j = 1; j <= p.part_at(i); ++j) {
            std::string label = std::to_string(ladder_index(Node{i, j}, e));
            if (width > 1) {
                if (j > 1)
                    out += ' ';
                out.append(static_cast<std::size_t>(width) - label.size(), ' ');
            }
            out += label;
        }
        out += '\n';
    }
    return out;
}

std::string render_hook_classes(const Partition& p, int e)
{
    const HookProfile profile = hook_profile(p, e);
    std::string out;
    std::size_t idx = 0;
    for (int i = 1; i <= p.num_parts(); ++i) {
        for (int j = 1; j <= p.part_at(i); ++j, ++idx) {
            const HookRecord& rec = profile.records[idx];
            if (!rec.divisible)
                out += '.';
            else if (rec.cls == HookClass::shallow)
                out += '>';
            else if (rec.cls == HookClass::steep)
                out += 'v';
            else
                out += 'x';
        }
        out += '\n';
    }
    return out;
}

} // namespace

std::string render_diagram(const Partition& p, const RenderOptions& options)
{
    if (options.annotation == Annotation::none)
        return render_marks(p, {}, '.');
    detail::require_e(options.e);
    switch (options.annotation) {
    case Annotation::ladders:
        return render_ladders(p, options.e);
    case Annotation::e_rim:
        return render_marks(p, e_rim(p, options.e).rim_nodes, 'x');
    case Annotation::truncated_rim:
        return render_marks(p, e_rim(p, options.e).truncated_rim, 'x');
    case Annotation::hook_classes:
        return render_hook_classes(p, options.e);
    default:
        throw std::logic_error("unknown annotation");
    }
}

} // namespace mullreg
