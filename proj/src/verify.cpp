#include "mullreg/verify.hpp"

#include "mullreg/hooks.hpp"
#include "mullreg/mullineux.hpp"
#include "mullreg/regularisation.hpp"
#include "mullreg/render.hpp"

#include <json.hpp>

#include <algorithm>
#include <chrono>
#include <sstream>
#include <utility>

#ifdef _OPENMP
#include <omp.h>
#endif

namespace mullreg {

namespace {

enum class Outcome { skipped, passed, failed };

struct SweepHit {
    long long index = 0;
    Counterexample ce;
};

// Runs eval over [0, count) and collects failures in index order. The
// serial loop is the reference driver; the OpenMP driver must be
// indistinguishable from it (same instance count, same ordered failures),
// which the determinism tests assert. Exceptions thrown by operators
// under test become counterexamples rather than aborting the sweep.
template <class Eval>
void sweep(long long count, const CheckOptions& options, VerificationReport& report,
           Eval&& eval)
{
    long long checked = 0;
    std::vector<SweepHit> hits;

    auto body = [&eval](long long idx, long long& local_checked,
                        std::vector<SweepHit>& local_hits) {
        Counterexample ce;
        Outcome outcome = Outcome::failed;
        try {
            outcome = eval(idx, ce);
        } catch (const std::exception& ex) {
            ce.details = std::string("operator error at instance ") + std::to_string(idx)
                         + ": " + ex.what();
        }
        if (outcome == Outcome::skipped)
            return;
        ++local_checked;
        if (outcome == Outcome::failed)
            local_hits.push_back(SweepHit{idx, std::move(ce)});
    };

#ifdef _OPENMP
    if (options.parallel) {
        const int threads =
            options.threads > 0 ? options.threads : omp_get_max_threads();
#pragma omp parallel num_threads(threads)
        {
            long long local_checked = 0;
            std::vector<SweepHit> local_hits;
            // Instance cost grows with n and the pool is sorted by n, so a
            // blocked static split would leave the tail thread with nearly
            // all the work; interleave small fixed chunks instead.
#pragma omp for schedule(static, 32) nowait
            for (long long idx = 0; idx < count; ++idx)
                body(idx, local_checked, local_hits);
#pragma omp critical
            {
                checked += local_checked;
                hits.insert(hits.end(), std::make_move_iterator(local_hits.begin()),
                            std::make_move_iterator(local_hits.end()));
            }
        }
    } else
#endif
    {
        for (long long idx = 0; idx < count; ++idx)
            body(idx, checked, hits);
    }

    std::sort(hits.begin(), hits.end(),
              [](const SweepHit& a, const SweepHit& b) { return a.index < b.index; });
    report.instances_checked = checked;
    report.counterexamples.reserve(hits.size());
    for (SweepHit& hit : hits)
        report.counterexamples.push_back(std::move(hit.ce));
}

template <class Eval>
VerificationReport run_check(std::string check_id, int e, int n_min, int n_max,
                             long long count, const CheckOptions& options, Eval&& eval)
{
    VerificationReport report;
    report.check_id = std::move(check_id);
    report.e = e;
    report.n_min = n_min;
    report.n_max = n_max;
    const auto start = std::chrono::steady_clock::now();
    sweep(count, options, report, std::forward<Eval>(eval));
    report.elapsed_ms =
        std::chrono::duration<double, std::milli>(std::chrono::steady_clock::now() - start)
            .count();
    report.pass = report.counterexamples.empty();
    return report;
}

// All partitions of 0..n_max: ascending in n, descending lexicographic
// within each n. Every lambda-sweep indexes into this pool.
std::vector<Partition> partition_pool(int n_max)
{
    std::vector<Partition> pool;
    for (int n = 0; n <= n_max; ++n) {
        std::vector<Partition> layer = enumerate_partitions(n);
        pool.insert(pool.end(), std::make_move_iterator(layer.begin()),
                    std::make_move_iterator(layer.end()));
    }
    return pool;
}

std::string hook_class_table(const Partition& p, int e)
{
    if (p.empty())
        return "(empty diagram)\n";
    RenderOptions options;
    options.annotation = Annotation::hook_classes;
    options.e = e;
    return render_diagram(p, options);
}

std::string fmt(const Partition& p)
{
    return format_partition(p);
}

} // namespace

std::vector<VerificationReport> check_main_theorem(const CheckOptions& options)
{
    const std::vector<Partition> pool = partition_pool(options.n_max);
    std::vector<VerificationReport> reports;
    for (int e : options.e_values) {
        auto eval = [&pool, e](long long idx, Counterexample& ce) {
            const Partition& p = pool[static_cast<std::size_t>(idx)];
            const Partition reg = regularise(p, e);
            const Partition mull_reg = mullineux(reg, e);
            const Partition conj = conjugate(p);
            const Partition reg_conj = regularise(conj, e);
            const bool image_matches = mull_reg == reg_conj;
            const bool l_part = is_L_partition(p, e);
            if (image_matches == l_part)
                return Outcome::passed;
            ce.partition = p;
            std::ostringstream os;
            os << "G=" << fmt(reg) << " MG=" << fmt(mull_reg) << " T=" << fmt(conj)
               << " GT=" << fmt(reg_conj) << "; MG" << (image_matches ? "=" : "!=")
               << "GT but the partition is " << (l_part ? "" : "not ")
               << "an L-partition\nhook classes:\n" << hook_class_table(p, e);
            ce.details = os.str();
            return Outcome::failed;
        };
        reports.push_back(run_check("main", e, 0, options.n_max,
                                    static_cast<long long>(pool.size()), options, eval));
    }
    return reports;
}

std::vector<VerificationReport> check_regular_shallow(const CheckOptions& options)
{
    const std::vector<Partition> pool = partition_pool(options.n_max);
    std::vector<VerificationReport> reports;
    for (int e : options.e_values) {
        auto eval = [&pool, e](long long idx, Counterexample& ce) {
            const Partition& p = pool[static_cast<std::size_t>(idx)];
            if (!is_e_regular(p, e))
                return Outcome::skipped;
            const Partition image = mullineux(p, e);
            const Partition reg_conj = regularise(conjugate(p), e);
            const HookProfile profile = hook_profile(p, e);
            const bool image_matches = image == reg_conj;
            const bool all_shallow = profile.w == profile.z_conj;
            if (image_matches == all_shallow)
                return Outcome::passed;
            ce.partition = p;
            std::ostringstream os;
            os << "M=" << fmt(image) << " GT=" << fmt(reg_conj) << " w=" << profile.w
               << " shallow=" << profile.z_conj << " steep=" << profile.z
               << "\nhook classes:\n" << hook_class_table(p, e);
            ce.details = os.str();
            return Outcome::failed;
        };
        reports.push_back(run_check("regular_shallow", e, 0, options.n_max,
                                    static_cast<long long>(pool.size()), options, eval));
    }
    return reports;
}

namespace {

VerificationReport lemma_rg_commute(const std::vector<Partition>& pool, int e,
                                    const CheckOptions& options)
{
    auto eval = [&pool, e](long long idx, Counterexample& ce) {
        const Partition& p = pool[static_cast<std::size_t>(idx)];
        const Partition reg = regularise(p, e);
        if (reg.part_at(1) != p.part_at(1))
            return Outcome::skipped;
        const Partition lhs = remove_first_row(reg);
        const Partition rhs = regularise(remove_first_row(p), e);
        if (lhs == rhs)
            return Outcome::passed;
        ce.partition = p;
        ce.details = "RG=" + fmt(lhs) + " GR=" + fmt(rhs);
        return Outcome::failed;
    };
    return run_check("rg_commute", e, 0, options.n_max,
                     static_cast<long long>(pool.size()), options, eval);
}

VerificationReport lemma_cg_lift(const std::vector<std::pair<Partition, Partition>>& pairs,
                                 int e, int pair_cap, const CheckOptions& options)
{
    auto eval = [&pairs, e](long long idx, Counterexample& ce) {
        const auto& [a, b] = pairs[static_cast<std::size_t>(idx)];
        if (regularise(remove_first_column(a), e) != remove_first_column(b))
            return Outcome::skipped;
        const Partition ga = regularise(a, e);
        const Partition gb = regularise(b, e);
        if (ga == gb)
            return Outcome::passed;
        ce.partition = a;
        ce.details = "mu=" + fmt(b) + " G(lambda)=" + fmt(ga) + " G(mu)=" + fmt(gb);
        return Outcome::failed;
    };
    return run_check("cg_lift", e, 0, pair_cap, static_cast<long long>(pairs.size()),
                     options, eval);
}

VerificationReport lemma_add_column_reg(const std::vector<Partition>& pool, int e,
                                        const CheckOptions& options)
{
    // Domain: e-regular zeta and the five column lengths
    // l(zeta)+e-1 .. l(zeta)+e+3.
    std::vector<const Partition*> regular;
    for (const Partition& p : pool)
        if (is_e_regular(p, e))
            regular.push_back(&p);
    constexpr int kColumnChoices = 5;
    const long long count = static_cast<long long>(regular.size()) * kColumnChoices;
    auto eval = [&regular, e](long long idx, Counterexample& ce) {
        const Partition& zeta = *regular[static_cast<std::size_t>(idx / kColumnChoices)];
        const int x = zeta.num_parts() + e - 1 + static_cast<int>(idx % kColumnChoices);
        const Partition xi = add_column(zeta, x);
        const Partition eta = add_column(remove_first_column(zeta), x - e + 1);
        const Partition lhs = regularise(eta, e);
        const Partition rhs = remove_first_column(regularise(xi, e));
        if (lhs == rhs)
            return Outcome::passed;
        ce.partition = zeta;
        ce.details = "x=" + std::to_string(x) + " xi=" + fmt(xi) + " eta=" + fmt(eta)
                     + " G(eta)=" + fmt(lhs) + " CG(xi)=" + fmt(rhs);
        return Outcome::failed;
    };
    return run_check("add_column_reg", e, 0, options.n_max, count, options, eval);
}

VerificationReport lemma_lpartition_gaps(const std::vector<Partition>& pool, int e,
                                         const CheckOptions& options)
{
    auto eval = [&pool, e](long long idx, Counterexample& ce) {
        const Partition& p = pool[static_cast<std::size_t>(idx)];
        if (!is_L_partition(p, e))
            return Outcome::skipped;
        const Partition conj = conjugate(p);
        const int s = s_value(p, e);
        const int t = t_value(p, e);
        for (int i = 1; i <= s; ++i)
            if (p.part_at(i) - p.part_at(i + 1) < e - 1) {
                ce.partition = p;
                ce.details = "row gap at i=" + std::to_string(i) + " is "
                             + std::to_string(p.part_at(i) - p.part_at(i + 1))
                             + " with s=" + std::to_string(s);
                return Outcome::failed;
            }
        for (int j = 1; j <= t; ++j)
            if (conj.part_at(j) - conj.part_at(j + 1) < e - 1) {
                ce.partition = p;
                ce.details = "column gap at j=" + std::to_string(j) + " is "
                             + std::to_string(conj.part_at(j) - conj.part_at(j + 1))
                             + " with t=" + std::to_string(t);
                return Outcome::failed;
            }
        return Outcome::passed;
    };
    return run_check("lpartition_gaps", e, 0, options.n_max,
                     static_cast<long long>(pool.size()), options, eval);
}

VerificationReport lemma_class_boundaries(const std::vector<Partition>& pool, int e,
                                          const CheckOptions& options)
{
    auto eval = [&pool, e](long long idx, Counterexample& ce) {
        const Partition& p = pool[static_cast<std::size_t>(idx)];
        if (!is_L_partition(p, e))
            return Outcome::skipped;
        const HookProfile profile = hook_profile(p, e);
        const int s = s_value(p, e);
        const int t = t_value(p, e);
        for (const HookRecord& rec : profile.records) {
            if (!rec.divisible)
                continue;
            if (rec.node.row > s && rec.cls != HookClass::steep) {
                ce.partition = p;
                ce.details = "divisible hook at row " + std::to_string(rec.node.row)
                             + " > s=" + std::to_string(s) + " is not steep";
                return Outcome::failed;
            }
            if (rec.node.col > t && rec.cls != HookClass::shallow) {
                ce.partition = p;
                ce.details = "divisible hook at column " + std::to_string(rec.node.col)
                             + " > t=" + std::to_string(t) + " is not shallow";
                return Outcome::failed;
            }
        }
        return Outcome::passed;
    };
    return run_check("class_boundaries", e, 0, options.n_max,
                     static_cast<long long>(pool.size()), options, eval);
}

VerificationReport lemma_s_closure(const std::vector<Partition>& pool, int e,
                                   const CheckOptions& options)
{
    auto eval = [&pool, e](long long idx, Counterexample& ce) {
        const Partition& p = pool[static_cast<std::size_t>(idx)];
        if (!is_L_partition(p, e))
            return Outcome::skipped;
        const Partition trimmed = s_operator(p, e);
        if (is_L_partition(trimmed, e))
            return Outcome::passed;
        ce.partition = p;
        ce.details = "S=" + fmt(trimmed) + " is not an L-partition\nhook classes:\n"
                     + hook_class_table(trimmed, e);
        return Outcome::failed;
    };
    return run_check("s_closure", e, 0, options.n_max,
                     static_cast<long long>(pool.size()), options, eval);
}

VerificationReport lemma_s_conj_reg(const std::vector<Partition>& pool, int e,
                                    const CheckOptions& options)
{
    auto eval = [&pool, e](long long idx, Counterexample& ce) {
        const Partition& p = pool[static_cast<std::size_t>(idx)];
        if (!is_L_partition(p, e))
            return Outcome::skipped;
        const Partition lhs = regularise(conjugate(s_operator(p, e)), e);
        const Partition rhs = remove_first_column(regularise(conjugate(p), e));
        if (lhs == rhs)
            return Outcome::passed;
        ce.partition = p;
        ce.details = "GTS=" + fmt(lhs) + " CGT=" + fmt(rhs);
        return Outcome::failed;
    };
    return run_check("s_conj_reg", e, 0, options.n_max,
                     static_cast<long long>(pool.size()), options, eval);
}

VerificationReport lemma_jg_eq_gs(const std::vector<Partition>& pool, int e,
                                  const CheckOptions& options)
{
    auto eval = [&pool, e](long long idx, Counterexample& ce) {
        const Partition& p = pool[static_cast<std::size_t>(idx)];
        if (!is_L_partition(p, e))
            return Outcome::skipped;
        const Partition lhs = strip_truncated_rim(regularise(p, e), e);
        const Partition rhs = regularise(s_operator(p, e), e);
        if (lhs == rhs)
            return Outcome::passed;
        ce.partition = p;
        ce.details = "JG=" + fmt(lhs) + " GS=" + fmt(rhs);
        return Outcome::failed;
    };
    return run_check("jg_eq_gs", e, 0, options.n_max,
                     static_cast<long long>(pool.size()), options, eval);
}

VerificationReport lemma_reg_top_row(const std::vector<Partition>& pool, int e,
                                     const CheckOptions& options)
{
    auto eval = [&pool, e](long long idx, Counterexample& ce) {
        const Partition& p = pool[static_cast<std::size_t>(idx)];
        if (!is_L_partition(p, e) || s_value(p, e) == 0
            || p.part_at(1) < p.num_parts())
            return Outcome::skipped;
        const Partition reg = regularise(p, e);
        const Partition trimmed = s_operator(p, e);
        const Partition reg_trimmed = regularise(trimmed, e);
        std::string problem;
        if (reg.part_at(1) != p.part_at(1))
            problem = "(G)_1=" + std::to_string(reg.part_at(1));
        else if (reg.part_at(1) - reg.part_at(2) < e - 1)
            problem = "(G)_1-(G)_2=" + std::to_string(reg.part_at(1) - reg.part_at(2));
        else if (reg_trimmed.part_at(1) != trimmed.part_at(1))
            problem = "(GS)_1=" + std::to_string(reg_trimmed.part_at(1)) + " vs (S)_1="
                      + std::to_string(trimmed.part_at(1));
        if (problem.empty())
            return Outcome::passed;
        ce.partition = p;
        ce.details = problem + "; G=" + fmt(reg) + " S=" + fmt(trimmed) + " GS="
                     + fmt(reg_trimmed);
        return Outcome::failed;
    };
    return run_check("reg_top_row", e, 0, options.n_max,
                     static_cast<long long>(pool.size()), options, eval);
}

VerificationReport lemma_weight_split(const std::vector<Partition>& pool, int e,
                                      const CheckOptions& options)
{
    auto eval = [&pool, e](long long idx, Counterexample& ce) {
        const Partition& p = pool[static_cast<std::size_t>(idx)];
        const HookProfile profile = hook_profile(p, e);
        const HookProfile conj_profile = hook_profile(conjugate(p), e);
        const bool weights_equal = profile.w == conj_profile.w;
        const bool steep_swap = conj_profile.z == profile.z_conj;
        const bool split = (profile.w == profile.z + conj_profile.z)
                           == is_L_partition(p, e);
        if (weights_equal && steep_swap && split)
            return Outcome::passed;
        ce.partition = p;
        std::ostringstream os;
        os << "w=" << profile.w << " w(T)=" << conj_profile.w << " z=" << profile.z
           << " z(T)=" << conj_profile.z << " shallow-count=" << profile.z_conj;
        ce.details = os.str();
        return Outcome::failed;
    };
    return run_check("weight_split", e, 0, options.n_max,
                     static_cast<long long>(pool.size()), options, eval);
}

VerificationReport lemma_mj_eq_cm(const std::vector<Partition>& pool, int e,
                                  const CheckOptions& options)
{
    auto eval = [&pool, e](long long idx, Counterexample& ce) {
        const Partition& p = pool[static_cast<std::size_t>(idx)];
        if (!is_e_regular(p, e))
            return Outcome::skipped;
        const Partition lhs = mullineux(strip_truncated_rim(p, e), e);
        const Partition rhs = remove_first_column(mullineux(p, e));
        if (lhs == rhs)
            return Outcome::passed;
        ce.partition = p;
        ce.details = "MJ=" + fmt(lhs) + " CM=" + fmt(rhs);
        return Outcome::failed;
    };
    return run_check("mj_eq_cm", e, 0, options.n_max,
                     static_cast<long long>(pool.size()), options, eval);
}

VerificationReport lemma_characterization(const std::vector<Partition>& pool, int e,
                                          const CheckOptions& options)
{
    auto eval = [&pool, e](long long idx, Counterexample& ce) {
        const Partition& p = pool[static_cast<std::size_t>(idx)];
        if (p.empty() || !is_e_regular(p, e))
            return Outcome::skipped;
        if (mullineux_characterization_check(p, e))
            return Outcome::passed;
        ce.partition = p;
        const RimData rim = e_rim(p, e);
        const Partition image = mullineux(p, e);
        const RimData image_rim = e_rim(image, e);
        std::ostringstream os;
        os << "M=" << fmt(image) << " r=" << rim.r << " r(M)=" << image_rim.r
           << " m=" << rim.m << " l(M)=" << image.num_parts() << " I(M)="
           << fmt(strip_rim(image, e)) << " M(I)=" << fmt(mullineux(strip_rim(p, e), e));
        ce.details = os.str();
        return Outcome::failed;
    };
    return run_check("characterization", e, 0, options.n_max,
                     static_cast<long long>(pool.size()), options, eval);
}

} // namespace

std::vector<VerificationReport> check_lemma_suite(const CheckOptions& options)
{
    const std::vector<Partition> pool = partition_pool(options.n_max);

    // Pair domain for cg_lift, capped to keep the quadratic enumeration
    // small: ordered pairs of equal size and equal part count.
    const int pair_cap = std::min(options.n_max, 10);
    std::vector<std::pair<Partition, Partition>> pairs;
    for (int n = 0; n <= pair_cap; ++n) {
        const std::vector<Partition> layer = enumerate_partitions(n);
        for (const Partition& a : layer)
            for (const Partition& b : layer)
                if (a.num_parts() == b.num_parts())
                    pairs.emplace_back(a, b);
    }

    std::vector<VerificationReport> reports;
    for (int e : options.e_values) {
        reports.push_back(lemma_rg_commute(pool, e, options));
        reports.push_back(lemma_cg_lift(pairs, e, pair_cap, options));
        reports.push_back(lemma_add_column_reg(pool, e, options));
        if (e >= 3) {
            reports.push_back(lemma_lpartition_gaps(pool, e, options));
            reports.push_back(lemma_class_boundaries(pool, e, options));
            reports.push_back(lemma_s_closure(pool, e, options));
            reports.push_back(lemma_s_conj_reg(pool, e, options));
            reports.push_back(lemma_jg_eq_gs(pool, e, options));
            reports.push_back(lemma_reg_top_row(pool, e, options));
        }
        reports.push_back(lemma_weight_split(pool, e, options));
        reports.push_back(lemma_mj_eq_cm(pool, e, options));
        reports.push_back(lemma_characterization(pool, e, options));
    }
    return reports;
}

std::vector<CensusRow> census_table(int n_max, int e, const CheckOptions& options)
{
    detail::require_e(e);
    std::vector<CensusRow> rows;
    for (int n = 0; n <= n_max; ++n) {
        const std::vector<Partition> layer = enumerate_partitions(n);
        const long long count = static_cast<long long>(layer.size());
        long long image_matches = 0;
        long long l_partitions = 0;

        auto tally = [&layer, e](long long idx, long long& matches, long long& lparts) {
            const Partition& p = layer[static_cast<std::size_t>(idx)];
            if (mullineux(regularise(p, e), e) == regularise(conjugate(p), e))
                ++matches;
            if (is_L_partition(p, e))
                ++lparts;
        };

#ifdef _OPENMP
        if (options.parallel) {
            const int threads =
                options.threads > 0 ? options.threads : omp_get_max_threads();
#pragma omp parallel for schedule(static) num_threads(threads) \
    reduction(+ : image_matches, l_partitions)
            for (long long idx = 0; idx < count; ++idx)
                tally(idx, image_matches, l_partitions);
        } else
#endif
        {
            for (long long idx = 0; idx < count; ++idx)
                tally(idx, image_matches, l_partitions);
        }
        rows.push_back(CensusRow{n, image_matches, l_partitions});
    }
    return rows;
}

std::vector<VerificationReport> check_census(const CheckOptions& options)
{
    std::vector<VerificationReport> reports;
    for (int e : options.e_values) {
        VerificationReport report;
        report.check_id = "census";
        report.e = e;
        report.n_min = 0;
        report.n_max = options.n_max;
        const auto start = std::chrono::steady_clock::now();
        const std::vector<CensusRow> rows = census_table(options.n_max, e, options);
        for (const CensusRow& row : rows) {
            report.instances_checked +=
                static_cast<long long>(enumerate_partitions(row.n).size());
            if (row.mullineux_reg_count != row.l_partition_count) {
                Counterexample ce;
                ce.details = "n=" + std::to_string(row.n) + ": |{MG=GT}|="
                             + std::to_string(row.mullineux_reg_count) + " but |{L}|="
                             + std::to_string(row.l_partition_count);
                report.counterexamples.push_back(std::move(ce));
            }
        }
        report.elapsed_ms = std::chrono::duration<double, std::milli>(
                                std::chrono::steady_clock::now() - start)
                                .count();
        report.pass = report.counterexamples.empty();
        reports.push_back(std::move(report));
    }
    return reports;
}

std::string reports_to_json(const std::vector<VerificationReport>& reports,
                            bool include_timings)
{
    nlohmann::ordered_json out = nlohmann::ordered_json::array();
    for (const VerificationReport& report : reports) {
        nlohmann::ordered_json entry;
        entry["check_id"] = report.check_id;
        entry["e"] = report.e;
        entry["n_range"] = {report.n_min, report.n_max};
        entry["instances_checked"] = report.instances_checked;
        nlohmann::ordered_json ces = nlohmann::ordered_json::array();
        for (const Counterexample& ce : report.counterexamples) {
            nlohmann::ordered_json item;
            item["partition"] = ce.partition.parts();
            item["details"] = ce.details;
            ces.push_back(std::move(item));
        }
        entry["counterexamples"] = std::move(ces);
        if (include_timings)
            entry["elapsed"] = report.elapsed_ms;
        else
            entry["elapsed"] = nullptr;
        entry["pass"] = report.pass;
        out.push_back(std::move(entry));
    }
    return out.dump(2) + "\n";
}

std::string reports_to_text(const std::vector<VerificationReport>& reports)
{
    std::ostringstream os;
    os << "check             e   n      instances  counterexamples  elapsed     result\n";
    long long total_instances = 0;
    double total_ms = 0.0;
    int failures = 0;
    for (const VerificationReport& report : reports) {
        char line[160];
        std::snprintf(line, sizeof line,
                      "%-17s %-3d %d..%-4d %9lld  %15zu  %8.1fms  %s\n",
                      report.check_id.c_str(), report.e, report.n_min, report.n_max,
                      report.instances_checked, report.counterexamples.size(),
                      report.elapsed_ms, report.pass ? "pass" : "FAIL");
        os << line;
        total_instances += report.instances_checked;
        total_ms += report.elapsed_ms;
        if (!report.pass)
            ++failures;
    }
    os << reports.size() << " checks, " << failures << " failing, " << total_instances
       << " instances, " << static_cast<long long>(total_ms) << " ms\n";
    for (const VerificationReport& report : reports)
        for (const Counterexample& ce : report.counterexamples)
            os << "counterexample [" << report.check_id << ", e=" << report.e
               << "]: " << format_partition(ce.partition) << "\n  " << ce.details << "\n";
    return os.str();
}

} // namespace mullreg
