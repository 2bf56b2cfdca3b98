#pragma once

#include "mullreg/partition.hpp"

namespace mullreg {

/// Classification of a hook relative to e. A hook with arm a and leg l is
/// shallow when a >= (e-1)l and steep when l >= (e-1)a; short hooks can be
/// both (a = l = 0 always is), but a hook of length divisible by e never is.
enum class HookClass { neither, shallow, steep, both };

struct HookRecord {
    Node node;
    int arm = 0;
    int leg = 0;
    int hook_length = 0; // arm + leg + 1
    bool divisible = false;
    HookClass cls = HookClass::neither;
};

/// Per-node hook data for a fixed e, plus the aggregate counts:
///   w      -- number of nodes whose hook length is divisible by e
///   z      -- divisible hooks that are steep
///   z_conj -- divisible hooks that are shallow (this is z of the conjugate)
struct HookProfile {
    int e = 2;
    std::vector<HookRecord> records; // row-major over the diagram
    int w = 0;
    int z = 0;
    int z_conj = 0;
};

HookProfile hook_profile(const Partition& p, int e);

int e_weight(const Partition& p, int e);
int z_value(const Partition& p, int e);
int z_conj_value(const Partition& p, int e);

/// True iff every hook of length divisible by e is shallow or steep.
/// Equivalently e_weight == z_value + z_conj_value.
bool is_L_partition(const Partition& p, int e);

/// Largest i with lambda_i - lambda_{i+1} >= e, or 0 when p is
/// e-restricted (no such drop exists).
int s_value(const Partition& p, int e);

/// s_value of the conjugate; 0 exactly when p is e-regular.
int t_value(const Partition& p, int e);

/// Trims e-1 cells from each of the first s = s_value(p, e) rows and
/// deletes row s+1. Defined on L-partitions only (rejects others); maps
/// L-partitions to L-partitions and degenerates to remove_first_row when
/// s = 0.
Partition s_operator(const Partition& p, int e);

} // namespace mullreg
