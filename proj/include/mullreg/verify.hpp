#pragma once

#include "mullreg/partition.hpp"

#include <string>
#include <vector>

namespace mullreg {

/// A partition (or pair/instance) that violated a check, with enough
/// intermediate data rendered into `details` to debug the operators.
struct Counterexample {
    Partition partition;
    std::string details;
};

/// Outcome of one exhaustive check for one value of e.
///
/// instances_checked counts exactly the hypothesis-satisfying instances
/// the check asserted, and is identical across serial and parallel runs;
/// counterexamples are reported in enumeration order. elapsed_ms is wall
/// time and is the only field that varies between runs.
struct VerificationReport {
    std::string check_id;
    int e = 0;
    int n_min = 0;
    int n_max = 0;
    long long instances_checked = 0;
    std::vector<Counterexample> counterexamples;
    double elapsed_ms = 0.0;
    bool pass = true;
};

struct CheckOptions {
    int n_max = 12;
    std::vector<int> e_values = {2, 3, 4, 5, 6};
    bool parallel = true; // false selects the serial reference driver
    int threads = 0;      // OpenMP worker count; 0 keeps the runtime default
};

/// The central correspondence: for every partition of every n <= n_max,
///   mullineux(regularise(p)) == regularise(conjugate(p))
/// holds exactly when p is an L-partition. One report per e.
std::vector<VerificationReport> check_main_theorem(const CheckOptions& options);

/// The e-regular special case: for e-regular p,
///   mullineux(p) == regularise(conjugate(p))
/// holds exactly when every hook divisible by e is shallow.
std::vector<VerificationReport> check_regular_shallow(const CheckOptions& options);

/// The supporting identities, one sub-check per lemma. Sub-checks about
/// L-partition structure (lpartition_gaps, class_boundaries, s_closure,
/// s_conj_reg, jg_eq_gs, reg_top_row) run for e >= 3 only; the rest run
/// for every e in the option set. The pair-based checks cap their size at
/// min(n_max, 10) to bound the quadratic pair enumeration.
std::vector<VerificationReport> check_lemma_suite(const CheckOptions& options);

/// Counts, per n, the partitions with MG = GT and the L-partitions; the
/// two-sided counting form of the main correspondence.
struct CensusRow {
    int n = 0;
    long long mullineux_reg_count = 0; // |{p of n : MGp == GTp}|
    long long l_partition_count = 0;   // |{p of n : p is an L-partition}|
};

std::vector<CensusRow> census_table(int n_max, int e, const CheckOptions& options);

/// Wraps census_table as reports: a row with differing counts is a
/// counterexample (its details carry both counts).
std::vector<VerificationReport> check_census(const CheckOptions& options);

/// Canonical JSON for a batch of reports: an array of objects with fields
/// check_id, e, n_range, instances_checked, counterexamples, elapsed,
/// pass. elapsed is null unless include_timings is set, so canonical
/// output is byte-identical across runs and worker counts.
std::string reports_to_json(const std::vector<VerificationReport>& reports,
                            bool include_timings = false);

/// One fixed-width summary line per report, plus a totals line.
std::string reports_to_text(const std::vector<VerificationReport>& reports);

inline bool all_pass(const std::vector<VerificationReport>& reports)
{
    for (const VerificationReport& report : reports)
        if (!report.pass)
            return false;
    return true;
}

} // namespace mullreg
