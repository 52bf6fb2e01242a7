#include "psibeta/cli.hpp"

#include "psibeta/bounds.hpp"
#include "psibeta/io.hpp"
#include "psibeta/kernels.hpp"
#include "psibeta/oracle.hpp"

#include <algorithm>
#include <atomic>
#include <cmath>
#include <cstdio>
#include <cstdlib>
#include <functional>
#include <numbers>
#include <sstream>
#include <thread>

namespace psibeta::cli {

namespace {

bool is_geometric(const PsiSequence& psi) { return std::holds_alternative<GeometricPsi>(psi.parameters()); }

double geometric_q(const PsiSequence& psi) { return std::get<GeometricPsi>(psi.parameters()).q; }

KernelSpec load_spec(const RunConfig& c) {
    if (c.psi_spec.empty())
        throw Error(ErrorKind::Parse, "psi: required");
    return KernelSpec{parse_psi(c.psi_spec), parse_beta(c.beta_spec)};
}

TriangularMethod resolve_method(const RunConfig& c) {
    if (c.method_spec.empty() || c.method_spec == "fourier")
        return fourier_method(c.n);
    if (c.method_spec == "vdp")
        return vdp_method(c.n, c.m);
    return parse_method(c.method_spec);
}

// Runs fn(i) for i in [0, count) on a small pool; results are written by index.
void parallel_for(std::size_t count, const std::function<void(std::size_t)>& fn) {
    const std::size_t workers = std::min(worker_count(), std::max<std::size_t>(count, 1));
    if (workers <= 1) {
        for (std::size_t i = 0; i < count; ++i)
            fn(i);
        return;
    }
    std::atomic<std::size_t> next{0};
    std::exception_ptr failure;
    std::atomic<bool> failed{false};
    std::vector<std::thread> pool;
    pool.reserve(workers);
    for (std::size_t w = 0; w < workers; ++w)
        pool.emplace_back([&] {
            for (std::size_t i = next++; i < count && !failed; i = next++) {
                try {
                    fn(i);
                } catch (...) {
                    if (!failed.exchange(true))
                        failure = std::current_exception();
                }
            }
        });
    for (auto& t : pool)
        t.join();
    if (failure)
        std::rethrow_exception(failure);
}

std::string run_bound(const RunConfig& c) {
    const KernelSpec spec = load_spec(c);
    double value = 0.0;
    if (c.method_kind == "fourier") {
        value = is_geometric(spec.psi) ? error_fourier_geometric(geometric_q(spec.psi), c.n)
                                       : error_fourier(spec.psi, c.n, c.tol);
    } else if (c.method_kind == "vdp") {
        value = is_geometric(spec.psi) ? error_vdp_geometric(geometric_q(spec.psi), c.n, c.m)
                                       : error_vdp(spec.psi, c.n, c.m, c.tol);
    } else if (c.method_kind == "method") {
        if (c.method_spec.empty())
            throw Error(ErrorKind::Parse, "method: required for 'bound method'");
        value = error_triangular(spec.psi, parse_method(c.method_spec), c.tol);
    } else {
        throw Error(ErrorKind::Parse, "method kind: expected fourier, vdp or method, got '" + c.method_kind + "'");
    }
    return format_real(value) + "\n";
}

struct TableCell {
    std::size_t n;
    long long m;
    std::string label;
    PsiSequence psi;
    bool vdp;
    double value = 0.0;
};

std::string run_table(const RunConfig& c) {
    if (c.n_from > c.n_to)
        throw Error(ErrorKind::InvalidRange, "n-from must not exceed n-to");
    std::vector<std::pair<std::string, PsiSequence>> sequences;
    if (c.q_list.empty()) {
        sequences.emplace_back("", load_spec(c).psi);
    } else {
        for (double q : c.q_list) {
            std::string label = "[q=" + format_real(q) + "]";
            try {
                sequences.emplace_back(std::move(label), PsiSequence::geometric(q));
            } catch (const Error& e) {
                throw Error(ErrorKind::Parse, std::string("q: ") + e.what());
            }
        }
    }

    std::vector<TableCell> cells;
    for (const auto& [suffix, psi] : sequences)
        for (std::size_t n = c.n_from; n <= c.n_to; ++n) {
            cells.push_back({n, 0, "fourier" + suffix, psi, false});
            std::vector<long long> ms = c.m_list;
            if (c.all_m) {
                ms.clear();
                for (long long m = 0; m <= static_cast<long long>(n); ++m)
                    ms.push_back(m);
            }
            for (long long m : ms)
                if (m >= 0 && m <= static_cast<long long>(n))
                    cells.push_back({n, m, "vdp" + suffix, psi, true});
        }

    parallel_for(cells.size(), [&](std::size_t i) {
        TableCell& cell = cells[i];
        cell.value = cell.vdp ? error_vdp(cell.psi, cell.n, cell.m, c.tol) : error_fourier(cell.psi, cell.n, c.tol);
    });

    std::ostringstream os;
    os << "n,m,method,value\n";
    for (const auto& cell : cells)
        os << cell.n << ',' << cell.m << ',' << cell.label << ',' << format_real(cell.value) << '\n';
    return os.str();
}

RunResult run_verify(const RunConfig& c) {
    const KernelSpec spec = load_spec(c);
    const TriangularMethod method = resolve_method(c);
    const double closed = error_triangular(spec.psi, method, 1e-15);

    std::ostringstream os;
    os << "N,oracle_value,closed_form,abs_diff\n";
    bool ok = true;
    const auto lower = fejer_lower_bounds(spec, method, c.fejer_orders, 0.0);
    double previous = 0.0;
    for (std::size_t i = 0; i < lower.size(); ++i) {
        const double v = lower[i];
        ok = ok && v <= closed + c.tol && v + c.tol >= previous;
        previous = v;
        os << c.fejer_orders[i] << ',' << format_real(v) << ',' << format_real(closed) << ','
           << format_real(std::abs(closed - v)) << '\n';
    }

    const std::size_t K = std::max<std::size_t>({method.n, 1, std::min<std::size_t>(oracle_truncation(spec.psi), 2048)});
    std::size_t N = 8;
    while (N <= 2 * K)
        N *= 2;
    const double quad = kernel_difference_norm_quadrature(spec, method, N, K);
    const double diff = std::abs(quad - closed);
    ok = ok && diff <= c.tol;
    os << "parseval," << format_real(quad) << ',' << format_real(closed) << ',' << format_real(diff) << '\n';

    RunResult r;
    r.report = os.str();
    if (!ok) {
        r.exit_code = 1;
        r.error = "verification failed at tolerance " + format_real(c.tol);
    }
    return r;
}

std::string run_best(const RunConfig& c) {
    const KernelSpec spec = load_spec(c);
    BestApproxOptions opts;
    opts.p = c.p;
    opts.grid_size = c.grid;
    opts.conv_tol = c.tol;
    opts.max_iter = c.max_iter;
    const double bound = best_linear_error(spec, c.n, opts);
    const BestApproximation best = best_trig_poly(spec, c.n, opts);
    std::ostringstream os;
    os << "p=" << to_string(c.p) << '\n'
       << "n=" << c.n << '\n'
       << "E_n=" << format_real(best.error) << '\n'
       << "class_bound=" << format_real(bound) << '\n'
       << "certificate=" << format_real(best.certificate) << '\n';
    if (c.show_method) {
        TrigPolynomial T = best.poly.resized(c.n);
        T.set_a0(0.0);
        os << "method=" << method_to_json(method_from_poly(T, spec, c.n)) << '\n';
    }
    return os.str();
}

std::string run_kernel(const RunConfig& c) {
    const KernelSpec spec = load_spec(c);
    if (c.samples == 0)
        throw Error(ErrorKind::InvalidRange, "samples must be positive");
    const auto t = periodic_grid(c.samples);
    std::ostringstream os;
    os << "t,psi_beta\n";
    for (double x : t)
        os << format_real(x) << ',' << format_real(kernel_eval(spec, x, c.tol)) << '\n';
    return os.str();
}

std::string run_compare(const RunConfig& c) {
    const KernelSpec spec = load_spec(c);
    std::ostringstream os;
    os << "n,m,fourier,vdp";
    const bool user = !c.method_spec.empty();
    if (user)
        os << ",method";
    os << '\n' << c.n << ',' << c.m << ',' << format_real(error_fourier(spec.psi, c.n, c.tol)) << ','
       << format_real(error_vdp(spec.psi, c.n, c.m, c.tol));
    if (user)
        os << ',' << format_real(error_triangular(spec.psi, parse_method(c.method_spec), c.tol));
    os << '\n';
    return os.str();
}

} // namespace

std::size_t worker_count() {
    std::size_t n = std::max(1u, std::thread::hardware_concurrency());
    if (const char* env = std::getenv("PSIBETA_THREADS")) {
        char* end = nullptr;
        const long cap = std::strtol(env, &end, 10);
        if (end != env && cap >= 1)
            n = std::min(n, static_cast<std::size_t>(cap));
    }
    return n;
}

std::string format_real(double x) {
    char buf[64];
    std::snprintf(buf, sizeof buf, "%.17g", x);
    return buf;
}

RunResult run(const RunConfig& config) {
    RunResult result;
    try {
        switch (config.command) {
        case Command::Bound: result.report = run_bound(config); break;
        case Command::Table: result.report = run_table(config); break;
        case Command::Verify: result = run_verify(config); break;
        case Command::Best: result.report = run_best(config); break;
        case Command::Kernel: result.report = run_kernel(config); break;
        case Command::Compare: result.report = run_compare(config); break;
        }
    } catch (const NoConvergenceError& e) {
        result.exit_code = 1;
        result.error = e.what();
    } catch (const Error& e) {
        result.exit_code = e.kind() == ErrorKind::NoConvergence ? 1 : 2;
        result.error = e.what();
    }
    return result;
}

} // namespace psibeta::cli
