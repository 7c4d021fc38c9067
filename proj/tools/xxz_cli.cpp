// Copyright 2026 The xxz-droplets Authors
// SPDX-License-Identifier: Apache-2.0

// xxz: command-line driver for the kink and droplet expansions.
//
//   xxz <kink|droplet|oracle|verify|scaling|stability|enumerate> [flags]
//
// Exit status: 0 ok, 1 numerical failure, 2 usage error, 3 verification FAIL.

#include <xxz/config_space.hpp>
#include <xxz/droplet_solver.hpp>
#include <xxz/error.hpp>
#include <xxz/json_io.hpp>
#include <xxz/kink_solver.hpp>
#include <xxz/oracle.hpp>
#include <xxz/verification.hpp>

#include <CLI11.hpp>

#include <cstdint>
#include <cstdio>
#include <cstdlib>
#include <ctime>
#include <filesystem>
#include <fstream>
#include <iomanip>
#include <iostream>
#include <limits>
#include <numeric>
#include <optional>
#include <sstream>
#include <stdexcept>
#include <string>
#include <vector>

namespace {

using namespace xxz;

constexpr int kExitNumerical = 1;
constexpr int kExitUsage = 2;
constexpr int kExitVerifyFail = 3;
constexpr int kDigits = std::numeric_limits<double>::max_digits10;

struct RunConfig {
    std::string subcommand;
    std::optional<int> sites;
    std::optional<int> down;
    double epsilon = 0.05;
    double boundary_a = 1.0;
    double boundary_b = 1.0;
    std::optional<int> w_max;
    double tol = 1e-13;
    int max_iter = 1000;
    double weight_k = 10.0;
    std::size_t cap = kDefaultSectorCap;
    std::vector<int> k_indices;
    std::vector<double> epsilons{0.02, 0.04, 0.08};
    std::vector<int> sizes{12, 16, 20};
    std::uint64_t seed = 20260101;
    double delta = 0.1;
    int samples = 0;
    std::string topology = "periodic";
    std::string source = "oracle";
    std::string output;
    std::string format = "json";
    bool no_timestamp = false;
    bool no_oracle = false;
};

/// Bad flag values discovered after parsing.
struct UsageError : std::runtime_error {
    using std::runtime_error::runtime_error;
};

KinkParams kink_params(const RunConfig& c) {
    KinkParams p;
    p.n_sites = c.sites.value_or(12);
    p.down = c.down.value_or(p.n_sites / 2);
    p.epsilon = c.epsilon;
    p.fields = {c.boundary_a, c.boundary_b};
    p.w_max = c.w_max.value_or(8);
    p.tol = c.tol;
    p.max_iter = c.max_iter;
    p.weight_k = c.weight_k;
    p.validate();
    return p;
}

DropletParams droplet_params(const RunConfig& c) {
    DropletParams p;
    p.n_sites = c.sites.value_or(10);
    p.down = c.down.value_or(3);
    p.epsilon = c.epsilon;
    p.w_max = c.w_max.value_or(7);
    p.tol = c.tol;
    p.max_iter = c.max_iter;
    p.weight_k = c.weight_k;
    p.validate();
    return p;
}

std::vector<int> k_indices(const RunConfig& c, int n_sites) {
    if (c.k_indices.empty()) {
        std::vector<int> all(static_cast<std::size_t>(n_sites));
        std::iota(all.begin(), all.end(), 0);
        return all;
    }
    for (const int j : c.k_indices) {
        if (j < 0 || j >= n_sites) {
            throw UsageError("k index " + std::to_string(j) + " outside 0.." +
                             std::to_string(n_sites - 1));
        }
    }
    return c.k_indices;
}

std::string utc_timestamp() {
    const std::time_t now = std::time(nullptr);
    std::tm tm{};
    gmtime_r(&now, &tm);
    char buf[32];
    std::strftime(buf, sizeof buf, "%Y-%m-%dT%H:%M:%SZ", &tm);
    return buf;
}

json header(const RunConfig& c) {
    json j;
    j["subcommand"] = c.subcommand;
    if (!c.no_timestamp) {
        j["generated_at"] = utc_timestamp();
    }
    return j;
}

void merge(json& into, const json& from) {
    for (const auto& [key, value] : from.items()) {
        into[key] = value;
    }
}

std::string csv_sites(SiteSet s) {
    std::string out;
    for (const int site : s.members()) {
        out += (out.empty() ? "" : " ") + std::to_string(site);
    }
    return out;
}

// Artifact plus a human summary.
struct Result {
    json document;
    std::string csv;
    std::string summary;
    int status = 0;
};

Result run_kink(const RunConfig& c) {
    const KinkSystem sys(kink_params(c));
    Result r;
    r.document = header(c);
    std::ostringstream summary;
    summary << std::setprecision(kDigits);

    KinkSolution sol;
    if (c.no_oracle) {
        sol = solve_kink(sys);
        merge(r.document, to_json(sol, sys));
    } else {
        const KinkCheck check = check_kink(sys, c.cap);
        sol = check.solution;
        merge(r.document, to_json(sol, sys));
        r.document["oracle"] = {{"energy", check.oracle_energy},
                                {"abs_diff", check.abs_diff},
                                {"residual", check.residual}};
        summary << "oracle energy  " << check.oracle_energy << "  |diff| " << check.abs_diff
                << "  residual " << check.residual << '\n';
    }
    if (sys.params().epsilon != 0.0) {
        const DecayReport d = kink_decay(sol.coefficients, sys);
        r.document["decay"] = {{"coefficient_constant", d.coefficient_constant},
                               {"shift_constant", d.shift_constant}};
    }
    if (c.samples > 0) {
        const double worst = certify_contraction_kink(sys, c.delta, c.samples, c.seed);
        const double bound = 3.0 * std::abs(sys.params().epsilon) + c.delta / 4.0;
        r.document["certificate"] = {{"delta", c.delta}, {"samples", c.samples},
                                     {"seed", c.seed},   {"max_ratio", worst},
                                     {"bound", bound}};
        summary << "lipschitz      " << worst << " (bound " << bound << ")\n";
    }
    summary << "energy         " << sol.energy() << "  (" << sol.iterations << " sweeps, "
            << sys.space().size() << " configurations)\n";
    r.summary = summary.str();

    std::ostringstream csv;
    csv << "sites,w,lambda,value\n" << std::setprecision(kDigits);
    const ConfigSpace& space = sys.space();
    csv << ",0," << space[0].diagonal << ",1\n";
    for (std::size_t i = 1; i < space.size(); ++i) {
        csv << csv_sites(space[i].sites) << ',' << space[i].order << ',' << space[i].diagonal
            << ',' << sol.coefficients.values[i - 1] << '\n';
    }
    r.csv = csv.str();
    return r;
}

Result run_droplet(const RunConfig& c) {
    const DropletSystem sys(droplet_params(c));
    const DropletSolution sol = solve_droplet(sys);
    const DispersionResult disp = dispersion(sol.coefficients, sys);
    Result r;
    r.document = header(c);
    merge(r.document, to_json(sol, sys));
    json samples = json::array();
    for (const DispersionSample& s : disp.samples) {
        samples.push_back({{"k_index", s.k_index}, {"k", s.k}, {"E", s.energy}});
    }
    r.document["dispersion"] = std::move(samples);
    r.document["bandwidth"] = disp.bandwidth;

    std::ostringstream summary;
    summary << std::setprecision(kDigits);
    if (sys.params().epsilon != 0.0) {
        const DecayReport d = droplet_decay(sol.coefficients, sys);
        r.document["decay"] = {{"coefficient_constant", d.coefficient_constant},
                               {"fourier_constant", d.fourier_constant}};
    }
    if (c.samples > 0) {
        const double worst = certify_contraction_droplet(sys, c.delta, c.samples, c.seed);
        const double bound = 4.0 * std::abs(sys.params().epsilon) + c.delta;
        r.document["certificate"] = {{"delta", c.delta}, {"samples", c.samples},
                                     {"seed", c.seed},   {"max_ratio", worst},
                                     {"bound", bound}};
        summary << "lipschitz  " << worst << " (bound " << bound << ")\n";
    }
    summary << "sweeps     " << sol.iterations << "\n"
            << "e_1        " << sol.coefficients.fourier[0] << "\n"
            << "bandwidth  " << disp.bandwidth << "\n";
    r.summary = summary.str();

    std::ostringstream csv;
    write_dispersion_csv(csv, disp);
    r.csv = csv.str();
    return r;
}

Result run_oracle(const RunConfig& c) {
    Result r;
    r.document = header(c);
    std::ostringstream csv;
    std::ostringstream summary;
    csv << std::setprecision(kDigits);
    summary << std::setprecision(kDigits);
    const Topology topology = parse_topology(c.topology);
    if (topology == Topology::open) {
        // The oracle has no smallness condition on epsilon.
        KinkParams p;
        p.n_sites = c.sites.value_or(12);
        p.down = c.down.value_or(p.n_sites / 2);
        p.epsilon = c.epsilon;
        p.fields = {c.boundary_a, c.boundary_b};
        p.fields.validate();
        const SectorBasis basis(p.n_sites, p.down, c.cap);
        const std::vector<double> spectrum =
            symmetric_spectrum(build_open_hamiltonian(basis, p.epsilon, p.fields));
        r.document["topology"] = "open";
        r.document["N"] = p.n_sites;
        r.document["m"] = p.down;
        r.document["epsilon"] = p.epsilon;
        r.document["A"] = p.fields.a;
        r.document["B"] = p.fields.b;
        r.document["eigenvalues"] = spectrum;
        csv << "level,E\n";
        for (std::size_t i = 0; i < spectrum.size(); ++i) {
            csv << i << ',' << spectrum[i] << '\n';
        }
        summary << "dim     " << basis.size() << "\nlowest  " << spectrum.front() << '\n';
    } else {
        DropletParams p;
        p.n_sites = c.sites.value_or(10);
        p.down = c.down.value_or(3);
        p.epsilon = c.epsilon;
        p.geometry().validate();
        const auto blocks = build_periodic_blocks(p.n_sites, p.down, p.epsilon, {.cap = c.cap});
        r.document["topology"] = "periodic";
        merge(r.document, spectrum_json(p.n_sites, p.down, p.epsilon, blocks));
        csv << "k_index,level,E\n";
        for (const SpectrumBlock& b : blocks) {
            for (std::size_t i = 0; i < b.eigenvalues.size(); ++i) {
                csv << b.k_index << ',' << i << ',' << b.eigenvalues[i] << '\n';
            }
        }
        const LowestBand band = lowest_band(blocks);
        summary << "lowest band width  " << band.width << "\nmin gap            "
                << band.min_gap << '\n';
    }
    r.csv = csv.str();
    r.summary = summary.str();
    return r;
}

Result run_verify(const RunConfig& c) {
    const DropletParams p = droplet_params(c);
    const ComparisonReport report = compare_droplet_band(p, c.cap);
    const std::vector<int> ks = k_indices(c, p.n_sites);
    const ResidualSweep sweep = residual_sweep(p, ks, c.cap);
    Result r;
    r.document = header(c);
    merge(r.document, to_json(report));
    json rows = json::array();
    for (const ResidualRow& row : sweep.rows) {
        rows.push_back({{"k_index", row.k_index},
                        {"E", row.energy},
                        {"residual", row.residual},
                        {"momentum_defect", row.momentum_defect}});
    }
    r.document["residuals"] = {{"rows", std::move(rows)},
                               {"max_residual", sweep.max_residual},
                               {"max_momentum_defect", sweep.max_momentum_defect}};
    std::ostringstream table;
    write_comparison_table(table, report);
    table << std::scientific << std::setprecision(3) << "max residual " << sweep.max_residual
          << "  max momentum defect " << sweep.max_momentum_defect << '\n'
          << (report.passed() ? "PASS" : "FAIL") << '\n';
    r.summary = table.str();
    std::ostringstream csv;
    write_comparison_csv(csv, report);
    r.csv = csv.str();
    r.status = report.passed() ? 0 : kExitVerifyFail;
    return r;
}

Result run_scaling(const RunConfig& c) {
    const DropletParams base = droplet_params(c);
    BandSource source = BandSource::oracle;
    if (c.source == "expansion") {
        source = BandSource::expansion;
    } else if (c.source != "oracle") {
        throw UsageError("--source must be oracle or expansion");
    }
    const ScalingFit fit = bandwidth_scaling(base, c.epsilons, source, c.cap);
    Result r;
    r.document = header(c);
    r.document["N"] = base.n_sites;
    r.document["m"] = base.down;
    r.document["source"] = c.source;
    merge(r.document, to_json(fit));
    std::ostringstream csv;
    csv << "epsilon,bandwidth\n" << std::setprecision(kDigits);
    for (std::size_t i = 0; i < fit.epsilons.size(); ++i) {
        csv << fit.epsilons[i] << ',' << fit.bandwidths[i] << '\n';
    }
    r.csv = csv.str();
    std::ostringstream summary;
    summary << std::fixed << std::setprecision(4) << "slope " << fit.slope << " (m = "
            << base.down << ")\n";
    r.summary = summary.str();
    return r;
}

Result run_stability(const RunConfig& c) {
    const DropletParams base = droplet_params(c);
    for (const int n : c.sizes) {
        DropletParams p = base;
        p.n_sites = n;
        p.validate();
    }
    const FourierStability st = fourier_stability(base, c.sizes);
    Result r;
    r.document = header(c);
    r.document["m"] = base.down;
    r.document["epsilon"] = base.epsilon;
    r.document["w_max"] = base.w_max;
    merge(r.document, to_json(st));
    std::ostringstream csv;
    csv << "N,n,e_n,abs_diff\n" << std::setprecision(kDigits);
    for (std::size_t i = 0; i < st.sizes.size(); ++i) {
        for (std::size_t n = 0; n < st.head[i].size(); ++n) {
            csv << st.sizes[i] << ',' << n + 1 << ',' << st.head[i][n] << ',';
            if (i > 0 && n < st.differences[i - 1].size()) {
                csv << st.differences[i - 1][n];
            }
            csv << '\n';
        }
    }
    r.csv = csv.str();
    std::ostringstream summary;
    summary << std::scientific << std::setprecision(3);
    for (std::size_t i = 0; i < st.differences.size(); ++i) {
        summary << "|de_1| N=" << st.sizes[i] << "->" << st.sizes[i + 1] << "  "
                << st.differences[i][0] << '\n';
    }
    summary << (st.tail_nonincreasing() ? "nonincreasing\n" : "not monotone\n");
    r.summary = summary.str();
    return r;
}

Result run_enumerate(const RunConfig& c) {
    const Topology topology = parse_topology(c.topology);
    const bool open = topology == Topology::open;
    const int n_sites = c.sites.value_or(open ? 12 : 10);
    const int m = c.down.value_or(open ? n_sites / 2 : 3);
    const int w_max = c.w_max.value_or(open ? 8 : 7);
    const ChainGeometry g{n_sites, topology};
    g.validate();
    const BoundaryFields fields{c.boundary_a, c.boundary_b};
    fields.validate();
    const ConfigSpace space(g, m, w_max, fields);
    Result r;
    r.document = header(c);
    merge(r.document, to_json(space));
    std::ostringstream csv;
    csv << "index,sites,w,walls,diagonal\n" << std::setprecision(kDigits);
    for (std::size_t i = 0; i < space.size(); ++i) {
        csv << i << ',' << csv_sites(space[i].sites) << ',' << space[i].order << ','
            << space[i].walls << ',' << space[i].diagonal << '\n';
    }
    r.csv = csv.str();
    std::ostringstream summary;
    summary << space.size() << " configurations; per order:";
    for (const std::size_t n : space.counts_per_order()) {
        summary << ' ' << n;
    }
    summary << '\n';
    r.summary = summary.str();
    return r;
}

Result dispatch(const RunConfig& c) {
    if (c.subcommand == "kink") {
        return run_kink(c);
    }
    if (c.subcommand == "droplet") {
        return run_droplet(c);
    }
    if (c.subcommand == "oracle") {
        return run_oracle(c);
    }
    if (c.subcommand == "verify") {
        return run_verify(c);
    }
    if (c.subcommand == "scaling") {
        return run_scaling(c);
    }
    if (c.subcommand == "stability") {
        return run_stability(c);
    }
    return run_enumerate(c);
}

std::filesystem::path output_path(const RunConfig& c) {
    if (!c.output.empty()) {
        return c.output;
    }
    std::filesystem::path dir = ".";
    if (const char* env = std::getenv("XXZ_OUTPUT_DIR"); env != nullptr && *env != '\0') {
        dir = env;
    }
    return dir / (c.subcommand + "." + c.format);
}

void write_artifact(const RunConfig& c, const Result& r) {
    const std::string body = c.format == "csv" ? r.csv : r.document.dump(2) + "\n";
    if (c.output == "-") {
        std::cout << body;
        return;
    }
    const std::filesystem::path path = output_path(c);
    if (path.has_parent_path()) {
        std::filesystem::create_directories(path.parent_path());
    }
    std::ofstream os(path, std::ios::binary);
    if (!os) {
        throw std::runtime_error("cannot open " + path.string() + " for writing");
    }
    os << body;
    std::cout << r.summary << "wrote " << path.string() << '\n';
}

void report_numerical(const RunConfig& c, const NumericalError& e) {
    json record = {{"error", e.kind()}, {"message", e.what()}, {"subcommand", c.subcommand}};
    if (const auto* nc = dynamic_cast<const NonConvergence*>(&e)) {
        record["iterations"] = nc->iterations();
        record["residual"] = nc->residual();
    }
    std::cerr << record.dump() << '\n';
}

} // namespace

int main(int argc, char** argv) {
    RunConfig c;
    CLI::App app{"Kink and droplet expansions of the ferromagnetic XXZ chain", "xxz"};
    app.set_config("--config", "", "Flat key = value file; keys are long flag names");
    app.allow_config_extras(CLI::config_extras_mode::error);
    app.fallthrough();
    app.require_subcommand(1);
    app.option_defaults()->always_capture_default();

    app.add_option("--sites,-N", c.sites, "Chain length N");
    app.add_option("--down,-m", c.down, "Number of down spins m");
    app.add_option("--epsilon,-e", c.epsilon, "Transverse coupling epsilon");
    app.add_option("--boundary-a", c.boundary_a, "Boundary field A (open chain, >= 1)");
    app.add_option("--boundary-b", c.boundary_b, "Boundary field B (open chain, >= 1)");
    app.add_option("--wmax", c.w_max, "Truncation order w_max");
    app.add_option("--tol", c.tol, "Fixed-point tolerance");
    app.add_option("--max-iter", c.max_iter, "Iteration cap");
    app.add_option("--weight-k", c.weight_k, "K of the weighted norm");
    app.add_option("--cap", c.cap, "Largest sector dimension the oracle builds");
    app.add_option("--k-indices", c.k_indices, "Momentum indices j (k = 2 pi j / N)")->delimiter(',');
    app.add_option("--epsilons", c.epsilons, "Epsilon grid for scaling")->delimiter(',');
    app.add_option("--sizes", c.sizes, "Chain lengths for stability")->delimiter(',');
    app.add_option("--seed", c.seed, "Seed for contraction sampling");
    app.add_option("--delta", c.delta, "Radius of the sampled ball");
    app.add_option("--samples", c.samples, "Contraction sample pairs (0 disables)");
    app.add_option("--topology", c.topology, "open or periodic (oracle, enumerate)")
        ->check(CLI::IsMember({"open", "periodic"}));
    app.add_option("--source", c.source, "Bandwidth source for scaling")
        ->check(CLI::IsMember({"oracle", "expansion"}));
    app.add_option("--output,-o", c.output, "Artifact path ('-' for stdout)");
    app.add_option("--format", c.format, "Artifact format")->check(CLI::IsMember({"json", "csv"}));
    app.add_flag("--no-timestamp", c.no_timestamp, "Omit generated_at from JSON artifacts");
    app.add_flag("--no-oracle", c.no_oracle, "kink: skip the exact-diagonalisation check");

    const std::vector<std::pair<const char*, const char*>> subcommands{
        {"kink", "Open-chain kink ground state and oracle check"},
        {"droplet", "Periodic-chain droplet band and dispersion"},
        {"oracle", "Exact spectrum (momentum blocks, or dense for --topology open)"},
        {"verify", "Droplet band against the oracle, with eigenvector residuals"},
        {"scaling", "Log-log bandwidth slope over --epsilons"},
        {"stability", "Fourier coefficients e_n across --sizes"},
        {"enumerate", "Dump the truncated configuration space"},
    };
    for (const auto& [name, help] : subcommands) {
        app.add_subcommand(name, help)->callback([&c, n = name] { c.subcommand = n; });
    }

    try {
        app.parse(argc, argv);
    } catch (const CLI::CallForHelp& e) {
        return app.exit(e);
    } catch (const CLI::CallForAllHelp& e) {
        return app.exit(e);
    } catch (const CLI::ParseError& e) {
        (void)app.exit(e);
        return kExitUsage;
    }

    try {
        const Result r = dispatch(c);
        write_artifact(c, r);
        return r.status;
    } catch (const NumericalError& e) {
        report_numerical(c, e);
        return kExitNumerical;
    } catch (const std::invalid_argument& e) {
        std::cerr << "xxz: " << e.what() << '\n';
        return kExitUsage;
    } catch (const UsageError& e) {
        std::cerr << "xxz: " << e.what() << '\n';
        return kExitUsage;
    } catch (const std::exception& e) {
        std::cerr << "xxz: " << e.what() << '\n';
        return kExitNumerical;
    }
}
