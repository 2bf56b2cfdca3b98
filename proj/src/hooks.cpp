#include "mullreg/hooks.hpp"

#include <stdexcept>

namespace mullreg {

HookProfile hook_profile(const Partition& p, int e)
{
    detail::require_e(e);
    HookProfile profile;
    profile.e = e;
    profile.records.reserve(static_cast<std::size_t>(p.size()));
    const Partition conj = conjugate(p); // one pass; legs are (Tp)_j - i
    for (int i = 1; i <= p.num_parts(); ++i) {
        for (int j = 1; j <= p.part_at(i); ++j) {
            HookRecord rec;
            rec.node = Node{i, j};
            rec.arm = p.part_at(i) - j;
            rec.leg = conj.part_at(j) - i;
            rec.hook_length = rec.arm + rec.leg + 1;
            rec.divisible = rec.hook_length % e == 0;
            const bool shallow = rec.arm >= (e - 1) * rec.leg;
            const bool steep = rec.leg >= (e - 1) * rec.arm;
            rec.cls = shallow && steep ? HookClass::both
                    : shallow          ? HookClass::shallow
                    : steep            ? HookClass::steep
                                       : HookClass::neither;
            if (rec.divisible) {
                ++profile.w;
                if (rec.cls == HookClass::both)
                    // a >= (e-1)l and l >= (e-1)a force a = l = 0, so the
                    // hook length is 1 and cannot be divisible by e >= 2
                    throw std::logic_error("divisible hook classified as both "
                                           "shallow and steep; hook arithmetic is broken");
                if (rec.cls == HookClass::steep)
                    ++profile.z;
                if (rec.cls == HookClass::shallow)
                    ++profile.z_conj;
            }
            profile.records.push_back(rec);
        }
    }
    return profile;
}

int e_weight(const Partition& p, int e)
{
    return hook_profile(p, e).w;
}

int z_value(const Partition& p, int e)
{
    return hook_profile(p, e).z;
}

int z_conj_value(const Partition& p, int e)
{
    return hook_profile(p, e).z_conj;
}

bool is_L_partition(const Partition& p, int e)
{
    const HookProfile profile = hook_profile(p, e);
    return profile.w == profile.z + profile.z_conj;
}

int s_value(const Partition& p, int e)
{
    detail::require_e(e);
    int s = 0;
    for (int i = 1; i <= p.num_parts(); ++i)
        if (p.part_at(i) - p.part_at(i + 1) >= e)
            s = i;
    return s;
}

int t_value(const Partition& p, int e)
{
    return s_value(conjugate(p), e);
}

Partition s_operator(const Partition& p, int e)
{
    if (!is_L_partition(p, e))
        throw std::invalid_argument(
            "the S operator requires an L-partition: some hook of "
            + format_partition(p) + " divisible by " + std::to_string(e)
            + " is neither shallow nor steep");
    const int s = s_value(p, e);
    std::vector<int> out;
    for (int i = 1; i <= s; ++i)
        out.push_back(p.part_at(i) - e + 1);
    for (int i = s + 2; i <= p.num_parts(); ++i)
        out.push_back(p.part_at(i));
    return Partition(std::move(out)); // ctor asserts the rows still nest
}

} // namespace mullreg
