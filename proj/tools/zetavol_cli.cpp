// Command-line front end: JSON report on stdout, short summary on stderr.
// Exit codes: 0 ok, 1 identity check failed, 2 invalid arguments,
// 3 tolerance not met.

#include <chrono>
#include <cstdio>
#include <fstream>
#include <iostream>
#include <map>
#include <numbers>
#include <optional>
#include <random>
#include <string>
#include <vector>

#include "CLI11.hpp"
#include "json.hpp"

#include "zetavol/geometry_maps.hpp"
#include "zetavol/kernel.hpp"
#include "zetavol/montecarlo.hpp"
#include "zetavol/verification.hpp"
#include "zetavol/version.hpp"
#include "zetavol/zeta.hpp"

using nlohmann::json;
using namespace zetavol;

namespace {

enum Exit { kOk = 0, kVerifyFailed = 1, kInvalidArgs = 2, kToleranceNotMet = 3 };

constexpr unsigned kMaxKernelOrder = 24;

struct Report {
    json inputs = json::object();
    json result;
    int exit_code = kOk;
};

struct ZetaArgs {
    std::string kind;
    unsigned n = 0;
    std::string method;
    double tol = 1e-12;
};

struct KernelArgs {
    unsigned n = 0;
    std::string format = "json";
};

struct McArgs {
    std::string target;
    unsigned dim = 2;
    std::uint64_t samples = 1'000'000;
    std::optional<std::uint64_t> seed;
    double truncation = 10.0;
    unsigned threads = 0;
    std::string dump_chunks;
};

struct VerifyArgs {
    unsigned max_order = 8;
    int corrupt_euler = -1;
};

std::string fmt(double x) {
    char buf[32];
    std::snprintf(buf, sizeof buf, "%.16g", x);
    return buf;
}

Report run_zeta(const ZetaArgs& a) {
    Report r;
    const bool even = a.kind == "even";
    const std::string method = a.method.empty() ? (even ? "trace" : "euler-integral") : a.method;
    r.inputs = {{"kind", a.kind}, {"n", a.n}, {"method", method}};
    ZetaValue z;
    if (even) {
        if (method == "trace")
            z = zeta_even_trace(a.n);
        else if (method == "bernoulli")
            z = zeta_even_bernoulli(a.n);
        else
            throw std::invalid_argument("method " + method + " does not apply to even arguments");
    } else {
        r.inputs["tol"] = a.tol;
        if (method == "euler-integral")
            z = zeta_odd_euler_integral(a.n, a.tol);
        else if (method == "log-tan")
            z = zeta_odd_logtan(a.n, a.tol);
        else
            throw std::invalid_argument("method " + method + " does not apply to odd arguments");
    }
    r.result = to_json(z);
    const unsigned s = even ? 2 * a.n : 2 * a.n + 1;
    if (z.kind == ZetaKind::ExactPiPower)
        std::cerr << "zeta(" << s << ") = " << z.coefficient.str() << " * pi^" << z.pi_power << " = " << fmt(z.value)
                  << " [" << z.method << "]\n";
    else
        std::cerr << "zeta(" << s << ") = " << fmt(z.value) << " +- " << z.error_bound << " [" << z.method << "]\n";
    return r;
}

Report run_kernel(const KernelArgs& a) {
    if (a.n < 1 || a.n > kMaxKernelOrder)
        throw std::invalid_argument("kernel order must lie in 1.." + std::to_string(kMaxKernelOrder));
    Report r;
    r.inputs = {{"n", a.n}, {"format", a.format}};
    const PiecewiseKernel closed = kernel_closed_form(a.n);
    const bool verified = kernels_equal(closed, recurrence_kernel(a.n));
    r.result = kernel_to_json(closed);
    r.result["verified_against_recurrence"] = verified;
    if (a.format == "text") r.result["text"] = kernel_to_text(closed);
    std::cerr << "K_" << a.n << ": " << to_string(closed.breakline) << " breakline, "
              << (verified ? "matches" : "DIFFERS FROM") << " the recurrence\n";
    if (!verified) r.exit_code = kVerifyFailed;
    return r;
}

const std::map<std::string, mc::RegionKind> kRegions{{"delta", mc::RegionKind::Delta},
                                                     {"delta-scaled", mc::RegionKind::DeltaScaled},
                                                     {"u-region", mc::RegionKind::URegion},
                                                     {"amoeba", mc::RegionKind::Amoeba}};

const std::map<std::string, mc::CubeFamily> kFamilies{{"direct", mc::CubeFamily::Direct},
                                                      {"plus", mc::CubeFamily::Plus},
                                                      {"squared", mc::CubeFamily::Squared},
                                                      {"log", mc::CubeFamily::Log},
                                                      {"log-symmetric", mc::CubeFamily::LogSymmetric}};

void write_chunks(const std::string& path, const std::vector<mc::ChunkSummary>& chunks) {
    std::ofstream out(path);
    if (!out) throw std::invalid_argument("cannot open chunk dump file " + path);
    out << "chunk_index,mean,count\n";
    char buf[64];
    for (const auto& c : chunks) {
        std::snprintf(buf, sizeof buf, "%.17g", c.mean);
        out << c.index << ',' << buf << ',' << c.count << '\n';
    }
}

Report run_mc(const McArgs& a) {
    Report r;
    std::uint64_t seed;
    if (a.seed) {
        seed = *a.seed;
    } else {
        std::random_device rd;
        seed = (std::uint64_t{rd()} << 32) | rd();
    }
    r.inputs = {{"target", a.target},   {"dim", a.dim},         {"samples", a.samples},
                {"seed", seed},         {"seed_chosen", !a.seed}, {"truncation", a.truncation},
                {"threads", a.threads}};
    std::vector<mc::ChunkSummary> chunks;
    mc::RunOptions options{a.threads, a.dump_chunks.empty() ? nullptr : &chunks};
    mc::MCEstimate e;
    if (auto it = kRegions.find(a.target); it != kRegions.end()) {
        e = mc::mc_volume({it->second, a.dim, a.truncation}, a.samples, seed, options);
    } else if (auto f = kFamilies.find(a.target); f != kFamilies.end()) {
        e = mc::mc_cube_integral(f->second, a.dim, a.samples, seed, options);
    } else {
        throw std::invalid_argument("unknown Monte Carlo target " + a.target);
    }
    if (!a.dump_chunks.empty()) write_chunks(a.dump_chunks, chunks);
    r.result = mc::to_json(e);
    std::cerr << a.target << " (dim " << a.dim << "): " << fmt(e.mean) << " +- " << e.std_error << " from "
              << e.samples << " samples, seed " << seed << "\n";
    if (e.truncation_note) std::cerr << "  " << *e.truncation_note << "\n";
    return r;
}

Report run_verify(const VerifyArgs& a) {
    Report r;
    r.inputs = {{"max_order", a.max_order}};
    EulerTable euler;
    const EulerTable* table = &shared_euler_table();
    if (a.corrupt_euler >= 0) {
        const auto n = static_cast<unsigned>(a.corrupt_euler);
        euler.replace_for_testing(n, euler(n) + UniPoly::constant(1));
        table = &euler;
        r.inputs["corrupt_euler"] = n;
    }
    const auto checks = run_identity_suite(a.max_order, *table);
    r.result = to_json(checks);
    std::size_t failed = 0;
    for (const auto& c : checks) {
        if (c.passed) continue;
        ++failed;
        std::cerr << "FAIL " << c.name << ": " << c.detail << "\n";
    }
    std::cerr << checks.size() - failed << "/" << checks.size() << " identity checks passed\n";
    if (failed) r.exit_code = kVerifyFailed;
    return r;
}

}  // namespace

int main(int argc, char** argv) {
    CLI::App app{"Exact and numeric zeta values through polytope volumes and kernels"};
    app.set_version_flag("--version", kVersion);
    app.require_subcommand(1);

    ZetaArgs za;
    auto* zeta = app.add_subcommand("zeta", "zeta(2n) exactly or zeta(2n+1) numerically");
    zeta->add_option("kind", za.kind, "even | odd")->required()->check(CLI::IsMember({"even", "odd"}));
    zeta->add_option("n", za.n, "index: zeta(2n) or zeta(2n+1)")->required();
    zeta->add_option("--method", za.method, "trace | bernoulli | euler-integral | log-tan")
        ->check(CLI::IsMember({"trace", "bernoulli", "euler-integral", "log-tan"}));
    zeta->add_option("--tol", za.tol, "absolute tolerance for odd arguments");

    KernelArgs ka;
    auto* kernel = app.add_subcommand("kernel", "closed-form kernel K_n, checked against the recurrence");
    kernel->add_option("n", ka.n, "order, 1..24")->required();
    kernel->add_option("--format", ka.format, "json | text")->check(CLI::IsMember({"json", "text"}));

    McArgs ma;
    auto* mcc = app.add_subcommand("mc", "seeded Monte Carlo volume or cube integral");
    mcc->add_option("target", ma.target,
                    "delta | delta-scaled | u-region | amoeba | direct | plus | squared | log | log-symmetric")
        ->required();
    mcc->add_option("--dim", ma.dim, "dimension");
    mcc->add_option("--samples", ma.samples, "sample count (>= 10000)");
    mcc->add_option("--seed", ma.seed, "64-bit seed; random and echoed when omitted");
    mcc->add_option("--truncation", ma.truncation, "sampling box radius for unbounded regions");
    mcc->add_option("--threads", ma.threads, "worker threads, 0 = all cores; results do not depend on it");
    mcc->add_option("--dump-chunks", ma.dump_chunks, "write per-chunk means as CSV");

    VerifyArgs va;
    auto* verify = app.add_subcommand("verify", "run the identity suite");
    verify->add_option("--max-order", va.max_order, "largest kernel order, <= 12");
    verify->add_option("--corrupt-euler", va.corrupt_euler, "test hook: perturb E_n before verifying")
        ->group("");

    try {
        app.parse(argc, argv);
    } catch (const CLI::ParseError& e) {
        const int code = app.exit(e);
        return code == 0 ? kOk : kInvalidArgs;
    }

    const auto start = std::chrono::steady_clock::now();
    Report report;
    std::string name;
    try {
        if (zeta->parsed()) {
            name = "zeta";
            report = run_zeta(za);
        } else if (kernel->parsed()) {
            name = "kernel";
            report = run_kernel(ka);
        } else if (mcc->parsed()) {
            name = "mc";
            report = run_mc(ma);
        } else {
            name = "verify";
            report = run_verify(va);
        }
    } catch (const ToleranceNotMet& e) {
        std::cerr << "error: " << e.what() << "\n";
        return kToleranceNotMet;
    } catch (const std::invalid_argument& e) {
        std::cerr << "error: " << e.what() << "\n";
        return kInvalidArgs;
    } catch (const std::domain_error& e) {
        std::cerr << "error: " << e.what() << "\n";
        return kInvalidArgs;
    } catch (const std::exception& e) {
        std::cerr << "internal error: " << e.what() << "\n";
        return kVerifyFailed;
    }
    const double ms = std::chrono::duration<double, std::milli>(std::chrono::steady_clock::now() - start).count();

    json command = json::array();
    for (int i = 1; i < argc; ++i) command.push_back(argv[i]);
    if (name == "kernel" && ka.format == "text") {
        std::cout << report.result["text"].get<std::string>();
        std::cout << "verified_against_recurrence: " << (report.result["verified_against_recurrence"] ? "true" : "false")
                  << "\n";
    } else {
        const json out{{"command", name},   {"argv", command},       {"inputs", report.inputs},
                       {"result", report.result}, {"wall_time_ms", ms}, {"version", kVersion}};
        std::cout << out.dump(2) << "\n";
    }
    return report.exit_code;
}
