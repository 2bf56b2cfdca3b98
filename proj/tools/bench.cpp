// Times the exhaustive sweeps with the serial reference driver and with
// the OpenMP driver, and checks that both produce identical reports.

#include "mullreg/verify.hpp"

#include <CLI11.hpp>

#include <chrono>
#include <cstdio>
#include <iostream>

#ifdef _OPENMP
#include <omp.h>
#endif

namespace {

std::vector<mullreg::VerificationReport> run_all(const mullreg::CheckOptions& options)
{
    std::vector<mullreg::VerificationReport> reports = mullreg::check_main_theorem(options);
    std::vector<mullreg::VerificationReport> regular = mullreg::check_regular_shallow(options);
    reports.insert(reports.end(), std::make_move_iterator(regular.begin()),
                   std::make_move_iterator(regular.end()));
    return reports;
}

double run_timed(const mullreg::CheckOptions& options, std::string& json)
{
    const auto start = std::chrono::steady_clock::now();
    const auto reports = run_all(options);
    const double seconds =
        std::chrono::duration<double>(std::chrono::steady_clock::now() - start).count();
    json = mullreg::reports_to_json(reports);
    if (!mullreg::all_pass(reports)) {
        std::cerr << mullreg::reports_to_text(reports);
        std::exit(1);
    }
    return seconds;
}

} // namespace

int main(int argc, char** argv)
{
    CLI::App app{"serial vs OpenMP timing for the exhaustive sweeps"};
    int n_max = 24;
    int lo = 2;
    int hi = 6;
    int threads = 0;
    app.add_option("--max-n", n_max, "largest partition size (default 24)");
    app.add_option("--e-min", lo, "smallest e (default 2)");
    app.add_option("--e-max", hi, "largest e (default 6)");
    app.add_option("--threads", threads, "OpenMP worker count (0 = default)");
    CLI11_PARSE(app, argc, argv);

    mullreg::CheckOptions options;
    options.n_max = n_max;
    options.e_values.clear();
    for (int e = lo; e <= hi; ++e)
        options.e_values.push_back(e);
    options.threads = threads;

#ifdef _OPENMP
    const int workers = threads > 0 ? threads : omp_get_max_threads();
#else
    const int workers = 1;
    std::cout << "built without OpenMP; both drivers run serially\n";
#endif

    std::printf("sweeps: main + regular_shallow, n <= %d, e = %d..%d\n", n_max, lo, hi);

    std::string serial_json;
    options.parallel = false;
    const double serial_s = run_timed(options, serial_json);
    std::printf("serial reference: %8.3f s\n", serial_s);

    std::string parallel_json;
    options.parallel = true;
    const double parallel_s = run_timed(options, parallel_json);
    std::printf("openmp (%d workers): %6.3f s\n", workers, parallel_s);
    std::printf("speedup: %.2fx\n", serial_s / parallel_s);

    if (serial_json != parallel_json) {
        std::cerr << "drivers disagree: serial and OpenMP reports differ\n";
        return 1;
    }
    std::printf("reports: byte-identical across drivers\n");
    return 0;
}
