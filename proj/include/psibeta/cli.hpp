#pragma once

#include "psibeta/best_approx.hpp"

#include <cstddef>
#include <string>
#include <vector>

namespace psibeta::cli {

enum class Command { Bound, Table, Verify, Best, Kernel, Compare };

struct RunConfig {
    Command command = Command::Bound;
    std::string method_kind = "fourier"; ///< bound: fourier | vdp | method
    std::string psi_spec;
    std::string beta_spec = "const:0";
    std::string method_spec;             ///< inline JSON, path, or fourier/vdp for verify
    std::size_t n = 0;
    long long m = 0;
    NormExponent p = NormExponent::Two;
    std::size_t grid = 4096;
    double tol = 1e-12;
    std::string out; ///< empty: standard output

    // table
    std::size_t n_from = 0;
    std::size_t n_to = 10;
    std::vector<long long> m_list;
    bool all_m = false;
    std::vector<double> q_list;

    // verify
    std::vector<std::size_t> fejer_orders{4, 16, 64, 256, 1024};

    // kernel
    std::size_t samples = 256;

    // best
    bool show_method = false;
    std::size_t max_iter = 100'000;
};

struct RunResult {
    int exit_code = 0;
    std::string report;
    std::string error;
};

/// Exit codes: 0 success, 1 NoConvergence or failed verification, 2 parse or
/// validation error.
RunResult run(const RunConfig& config);

/// Worker count for sweeps: hardware concurrency capped by PSIBETA_THREADS.
std::size_t worker_count();

/// %.17g
std::string format_real(double x);

} // namespace psibeta::cli
