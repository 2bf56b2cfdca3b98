#include "mullreg/hooks.hpp"
#include "mullreg/mullineux.hpp"
#include "mullreg/partition.hpp"
#include "mullreg/regularisation.hpp"
#include "mullreg/render.hpp"
#include "mullreg/verify.hpp"

#include <CLI11.hpp>
#include <json.hpp>

#include <iostream>
#include <map>
#include <string>

namespace {

using mullreg::Partition;

nlohmann::json partition_json(const Partition& p)
{
    return nlohmann::json(p.parts());
}

void print_partition(const Partition& p, bool as_json)
{
    if (as_json)
        std::cout << partition_json(p).dump() << "\n";
    else
        std::cout << mullreg::format_partition(p) << "\n";
}

const char* class_name(mullreg::HookClass cls)
{
    switch (cls) {
    case mullreg::HookClass::shallow: return "shallow";
    case mullreg::HookClass::steep: return "steep";
    case mullreg::HookClass::both: return "both";
    default: return "neither";
    }
}

std::vector<int> parse_e_range(const std::string& text)
{
    const auto dots = text.find("..");
    int lo = 0;
    int hi = 0;
    try {
        if (dots == std::string::npos) {
            lo = hi = std::stoi(text);
        } else {
            lo = std::stoi(text.substr(0, dots));
            hi = std::stoi(text.substr(dots + 2));
        }
    } catch (const std::exception&) {
        throw std::invalid_argument("--e-range expects E or LO..HI, got '" + text + "'");
    }
    if (lo < 2 || hi < lo)
        throw std::invalid_argument("--e-range bounds must satisfy 2 <= LO <= HI");
    std::vector<int> out;
    for (int e = lo; e <= hi; ++e)
        out.push_back(e);
    return out;
}

void run_rim(const Partition& p, int e, bool as_json)
{
    const mullreg::RimData rim = mullreg::e_rim(p, e);
    if (as_json) {
        nlohmann::ordered_json out;
        out["e"] = rim.e;
        out["r"] = rim.r;
        out["m"] = rim.m;
        out["l_prime"] = rim.l_prime;
        auto nodes = nlohmann::ordered_json::array();
        for (const mullreg::Node& node : rim.rim_nodes)
            nodes.push_back({node.row, node.col});
        out["rim"] = std::move(nodes);
        auto truncated = nlohmann::ordered_json::array();
        for (const mullreg::Node& node : rim.truncated_rim)
            truncated.push_back({node.row, node.col});
        out["truncated_rim"] = std::move(truncated);
        std::cout << out.dump() << "\n";
        return;
    }
    std::cout << "r = " << rim.r << "\nm = " << rim.m << "\nl' = " << rim.l_prime
              << "\ne-rim:";
    for (const mullreg::Node& node : rim.rim_nodes)
        std::cout << " (" << node.row << "," << node.col << ")";
    std::cout << "\ntruncated e-rim:";
    for (const mullreg::Node& node : rim.truncated_rim)
        std::cout << " (" << node.row << "," << node.col << ")";
    std::cout << "\n";
}

void run_hooks(const Partition& p, int e, bool as_json)
{
    const mullreg::HookProfile profile = mullreg::hook_profile(p, e);
    if (as_json) {
        nlohmann::ordered_json out;
        out["e"] = profile.e;
        out["w"] = profile.w;
        out["z"] = profile.z;
        out["z_conj"] = profile.z_conj;
        auto nodes = nlohmann::ordered_json::array();
        for (const mullreg::HookRecord& rec : profile.records) {
            nlohmann::ordered_json item;
            item["row"] = rec.node.row;
            item["col"] = rec.node.col;
            item["arm"] = rec.arm;
            item["leg"] = rec.leg;
            item["hook"] = rec.hook_length;
            item["divisible"] = rec.divisible;
            item["class"] = class_name(rec.cls);
            nodes.push_back(std::move(item));
        }
        out["nodes"] = std::move(nodes);
        std::cout << out.dump() << "\n";
        return;
    }
    std::cout << "node    arm  leg  hook  divisible  class\n";
    for (const mullreg::HookRecord& rec : profile.records) {
        char line[96];
        std::snprintf(line, sizeof line, "(%d,%d)%*s %4d %4d %5d  %-9s  %s\n",
                      rec.node.row, rec.node.col,
                      rec.node.row > 9 || rec.node.col > 9 ? 0 : 2, "",
                      rec.arm, rec.leg, rec.hook_length,
                      rec.divisible ? "yes" : "no", class_name(rec.cls));
        std::cout << line;
    }
    std::cout << "w = " << profile.w << "  z = " << profile.z
              << "  z_conj = " << profile.z_conj << "\n";
}

void run_lpart(const Partition& p, int e, bool as_json)
{
    const mullreg::HookProfile profile = mullreg::hook_profile(p, e);
    const mullreg::HookRecord* witness = nullptr;
    for (const mullreg::HookRecord& rec : profile.records)
        if (rec.divisible && rec.cls == mullreg::HookClass::neither) {
            witness = &rec;
            break;
        }
    if (as_json) {
        nlohmann::ordered_json out;
        out["is_l_partition"] = witness == nullptr;
        if (witness == nullptr) {
            out["witness"] = nullptr;
        } else {
            nlohmann::ordered_json item;
            item["row"] = witness->node.row;
            item["col"] = witness->node.col;
            item["arm"] = witness->arm;
            item["leg"] = witness->leg;
            item["hook"] = witness->hook_length;
            out["witness"] = std::move(item);
        }
        std::cout << out.dump() << "\n";
        return;
    }
    if (witness == nullptr) {
        std::cout << "true\n";
    } else {
        std::cout << "false (node (" << witness->node.row << "," << witness->node.col
                  << "): arm=" << witness->arm << " leg=" << witness->leg << " hook="
                  << witness->hook_length << " is divisible by " << e
                  << " but neither shallow nor steep)\n";
    }
}

int run_suite(const std::string& suite, const mullreg::CheckOptions& options,
              bool as_json, bool timings)
{
    std::vector<mullreg::VerificationReport> reports;
    auto append = [&reports](std::vector<mullreg::VerificationReport> batch) {
        for (auto& report : batch)
            reports.push_back(std::move(report));
    };
    if (suite == "main" || suite == "all")
        append(mullreg::check_main_theorem(options));
    if (suite == "regular" || suite == "all")
        append(mullreg::check_regular_shallow(options));
    if (suite == "lemmas" || suite == "all")
        append(mullreg::check_lemma_suite(options));
    if (suite == "census" || suite == "all")
        append(mullreg::check_census(options));

    if (as_json) {
        std::cout << mullreg::reports_to_json(reports, timings);
    } else {
        if (suite == "census" || suite == "all") {
            for (int e : options.e_values) {
                std::cout << "census e=" << e << " (n : |{MG=GT}| = |{L}|)\n";
                for (const mullreg::CensusRow& row :
                     mullreg::census_table(options.n_max, e, options))
                    std::cout << "  " << row.n << " : " << row.mullineux_reg_count
                              << " = " << row.l_partition_count << "\n";
            }
        }
        std::cout << mullreg::reports_to_text(reports);
    }
    return mullreg::all_pass(reports) ? 0 : 1;
}

} // namespace

int main(int argc, char** argv)
{
    CLI::App app{"partition regularisation, the Mullineux map, and an exhaustive "
                 "checker for the identities relating them"};
    app.require_subcommand(1);

    std::string partition_text;
    int e = 0;
    bool as_json = false;
    int exit_code = 0;

    auto add_common = [&](CLI::App* cmd, bool needs_e) {
        cmd->add_option("--partition", partition_text, "partition in exponent notation")
            ->required();
        auto* opt = cmd->add_option("--e", e, "the integer e (at least 2)");
        if (needs_e)
            opt->required();
        cmd->add_flag("--json", as_json, "emit JSON instead of text");
        return cmd;
    };

    // show
    auto* show = app.add_subcommand("show", "render the Young diagram");
    std::string annotate = "none";
    show->add_option("--partition", partition_text)->required();
    show->add_option("--annotate", annotate,
                     "none|ladders|e-rim|truncated-rim|hook-classes")
        ->check(CLI::IsMember({"none", "ladders", "e-rim", "truncated-rim",
                               "hook-classes"}));
    show->add_option("--e", e, "required for every annotation except none");
    show->callback([&] {
        static const std::map<std::string, mullreg::Annotation> kinds = {
            {"none", mullreg::Annotation::none},
            {"ladders", mullreg::Annotation::ladders},
            {"e-rim", mullreg::Annotation::e_rim},
            {"truncated-rim", mullreg::Annotation::truncated_rim},
            {"hook-classes", mullreg::Annotation::hook_classes},
        };
        mullreg::RenderOptions options;
        options.annotation = kinds.at(annotate);
        options.e = e;
        if (options.annotation != mullreg::Annotation::none && e == 0)
            throw std::invalid_argument("--annotate " + annotate + " requires --e");
        std::cout << mullreg::render_diagram(mullreg::parse_partition(partition_text),
                                             options);
    });

    auto* conj = app.add_subcommand("conjugate", "transpose the diagram");
    add_common(conj, false);
    conj->callback([&] {
        print_partition(mullreg::conjugate(mullreg::parse_partition(partition_text)),
                        as_json);
    });

    auto* reg = app.add_subcommand("reg", "e-regularise");
    add_common(reg, true);
    reg->callback([&] {
        print_partition(
            mullreg::regularise(mullreg::parse_partition(partition_text), e), as_json);
    });

    auto* rim = app.add_subcommand("rim", "e-rim data: r, m, l', node lists");
    add_common(rim, true);
    rim->callback([&] { run_rim(mullreg::parse_partition(partition_text), e, as_json); });

    auto* strip_i = app.add_subcommand("strip-i", "remove the e-rim");
    add_common(strip_i, true);
    strip_i->callback([&] {
        print_partition(mullreg::strip_rim(mullreg::parse_partition(partition_text), e),
                        as_json);
    });

    auto* strip_j = app.add_subcommand("strip-j", "remove the truncated e-rim");
    add_common(strip_j, true);
    strip_j->callback([&] {
        print_partition(
            mullreg::strip_truncated_rim(mullreg::parse_partition(partition_text), e),
            as_json);
    });

    auto* mull = app.add_subcommand("mull", "apply the Mullineux map");
    add_common(mull, true);
    mull->callback([&] {
        print_partition(mullreg::mullineux(mullreg::parse_partition(partition_text), e),
                        as_json);
    });

    auto* hooks = app.add_subcommand("hooks", "hook table with e-divisibility and class");
    add_common(hooks, true);
    hooks->callback([&] { run_hooks(mullreg::parse_partition(partition_text), e, as_json); });

    auto* lpart = app.add_subcommand("lpart", "is every divisible hook shallow or steep?");
    add_common(lpart, true);
    lpart->callback([&] { run_lpart(mullreg::parse_partition(partition_text), e, as_json); });

    auto* s_op = app.add_subcommand("s-op", "apply the S operator (L-partitions only)");
    add_common(s_op, true);
    s_op->callback([&] {
        print_partition(mullreg::s_operator(mullreg::parse_partition(partition_text), e),
                        as_json);
    });

    auto* check = app.add_subcommand("check", "run the exhaustive verification suites");
    std::string suite = "all";
    std::string e_range = "2..6";
    mullreg::CheckOptions options;
    bool serial = false;
    bool timings = false;
    check->add_option("--suite", suite, "main|regular|lemmas|census|all")
        ->check(CLI::IsMember({"main", "regular", "lemmas", "census", "all"}));
    check->add_option("--max-n", options.n_max, "largest partition size (default 12)")
        ->check(CLI::NonNegativeNumber);
    check->add_option("--e-range", e_range, "E or LO..HI (default 2..6)");
    check->add_option("--threads", options.threads, "OpenMP worker count (0 = default)");
    check->add_flag("--serial", serial, "use the serial reference driver");
    check->add_flag("--json", as_json, "emit the report array as JSON");
    check->add_flag("--timings", timings,
                    "include elapsed milliseconds in JSON reports (breaks "
                    "byte-for-byte reproducibility)");
    check->callback([&] {
        options.e_values = parse_e_range(e_range);
        options.parallel = !serial;
        exit_code = run_suite(suite, options, as_json, timings);
    });

    try {
        app.parse(argc, argv);
    } catch (const CLI::CallForHelp& err) {
        return app.exit(err);
    } catch (const CLI::ParseError& err) {
        app.exit(err);
        return 2;
    } catch (const std::exception& ex) {
        std::cerr << "error: " << ex.what() << "\n";
        return 2;
    }
    return exit_code;
}
