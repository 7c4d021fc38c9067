// Copyright 2026 The xxz-droplets Authors
// SPDX-License-Identifier: Apache-2.0

#include <xxz/json_io.hpp>

#include <cmath>
#include <iomanip>
#include <limits>

namespace xxz {

namespace {

// JSON has no infinity; single-state blocks report their second level as null.
json finite_or_null(double v) {
    return std::isfinite(v) ? json(v) : json(nullptr);
}

constexpr int kDigits = std::numeric_limits<double>::max_digits10;

} // namespace

json sites_json(SiteSet s) {
    return s.members();
}

json to_json(const ConfigSpace& space) {
    json j;
    j["geometry"] = {{"N", space.geometry().n_sites},
                     {"topology", to_string(space.geometry().topology)}};
    j["m"] = space.down();
    j["w_max"] = space.w_max();
    j["counts_per_order"] = space.counts_per_order();
    json entries = json::array();
    for (const ConfigEntry& e : space.entries()) {
        entries.push_back({{"sites", sites_json(e.sites)}, {"w", e.order}, {"walls", e.walls}});
    }
    j["entries"] = std::move(entries);
    return j;
}

json to_json(const KinkParams& p) {
    return {{"N", p.n_sites}, {"m", p.down},       {"epsilon", p.epsilon},
            {"A", p.fields.a}, {"B", p.fields.b},   {"w_max", p.w_max},
            {"tol", p.tol},    {"max_iter", p.max_iter}, {"K", p.weight_k}};
}

json to_json(const DropletParams& p) {
    return {{"N", p.n_sites}, {"m", p.down},         {"epsilon", p.epsilon}, {"w_max", p.w_max},
            {"tol", p.tol},   {"max_iter", p.max_iter}, {"K", p.weight_k}};
}

json to_json(const KinkSolution& sol, const KinkSystem& sys) {
    json j;
    j["params"] = to_json(sys.params());
    j["energy"] = sol.energy();
    j["E"] = sol.coefficients.shift;
    j["iterations"] = sol.iterations;
    j["residual"] = sol.residual;
    json coeffs = json::array();
    const ConfigSpace& space = sys.space();
    for (std::size_t i = 1; i < space.size(); ++i) {
        coeffs.push_back({{"sites", sites_json(space[i].sites)},
                          {"w", space[i].order},
                          {"value", sol.coefficients.values[i - 1]}});
    }
    j["coefficients"] = std::move(coeffs);
    return j;
}

json to_json(const DropletSolution& sol, const DropletSystem& sys) {
    json j;
    j["params"] = to_json(sys.params());
    j["baseline"] = kDropletBaseline;
    j["e_n"] = sol.coefficients.fourier;
    json coeffs = json::array();
    const ConfigSpace& space = sys.space();
    for (std::size_t slot = 0; slot < sys.stored(); ++slot) {
        const ConfigEntry& x = space[static_cast<std::size_t>(sys.entry_of_slot(slot))];
        coeffs.push_back({{"sites", sites_json(x.sites)},
                          {"w", x.order},
                          {"walls", x.walls},
                          {"value", sol.coefficients.values[slot]}});
    }
    j["coefficients"] = std::move(coeffs);
    j["iterations"] = sol.iterations;
    j["residual"] = sol.residual;
    return j;
}

json spectrum_json(int n_sites, int m, double epsilon, const std::vector<SpectrumBlock>& blocks) {
    json j;
    j["N"] = n_sites;
    j["m"] = m;
    j["epsilon"] = epsilon;
    json arr = json::array();
    for (const SpectrumBlock& b : blocks) {
        arr.push_back({{"k_index", b.k_index}, {"dim", b.dim()}, {"eigenvalues", b.eigenvalues}});
    }
    j["blocks"] = std::move(arr);
    return j;
}

json to_json(const ComparisonReport& r) {
    json j;
    j["params"] = to_json(r.params);
    j["iterations"] = r.iterations;
    j["residual"] = r.residual;
    j["tolerance"] = r.tolerance;
    json rows = json::array();
    for (const ComparisonRow& row : r.rows) {
        rows.push_back({{"k_index", row.k_index},
                        {"k", row.k},
                        {"E_expansion", row.expansion},
                        {"E_oracle_min", row.oracle_lowest},
                        {"E_oracle_2nd", finite_or_null(row.oracle_second)},
                        {"abs_diff", row.abs_diff},
                        {"rank", row.rank},
                        {"status", to_string(row.status)}});
    }
    j["rows"] = std::move(rows);
    j["max_abs_diff"] = r.max_abs_diff;
    j["bandwidth_expansion"] = r.bandwidth_expansion;
    j["bandwidth_oracle"] = r.bandwidth_oracle;
    j["passed"] = r.passed();
    return j;
}

json to_json(const ScalingFit& fit) {
    return {{"epsilons", fit.epsilons},
            {"bandwidths", fit.bandwidths},
            {"slope", fit.slope},
            {"intercept", fit.intercept}};
}

json to_json(const FourierStability& st) {
    return {{"sizes", st.sizes},
            {"e_head", st.head},
            {"differences", st.differences},
            {"symmetry_defect", st.symmetry_defect},
            {"iterations", st.iterations},
            {"tail_nonincreasing", st.tail_nonincreasing()}};
}

void write_dispersion_csv(std::ostream& os, const DispersionResult& d) {
    os << "k_index,k,E\n" << std::setprecision(kDigits);
    for (const DispersionSample& s : d.samples) {
        os << s.k_index << ',' << s.k << ',' << s.energy << '\n';
    }
}

void write_comparison_csv(std::ostream& os, const ComparisonReport& report) {
    os << "k_index,k,E,E_oracle,abs_diff,rank\n" << std::setprecision(kDigits);
    for (const ComparisonRow& r : report.rows) {
        os << r.k_index << ',' << r.k << ',' << r.expansion << ',' << r.oracle_lowest << ','
           << r.abs_diff << ',' << r.rank << '\n';
    }
}

void write_comparison_table(std::ostream& os, const ComparisonReport& report) {
    const auto flags = os.flags();
    os << std::setw(4) << "j" << std::setw(10) << "k" << std::setw(22) << "E_expansion"
       << std::setw(22) << "E_oracle_min" << std::setw(12) << "abs_diff" << std::setw(6) << "rank"
       << "  status\n";
    for (const ComparisonRow& r : report.rows) {
        os << std::setw(4) << r.k_index << std::setw(10) << std::fixed << std::setprecision(5)
           << r.k << std::setw(22) << std::setprecision(15) << r.expansion << std::setw(22)
           << r.oracle_lowest << std::setw(12) << std::scientific << std::setprecision(2)
           << r.abs_diff << std::setw(6) << r.rank << "  " << to_string(r.status) << '\n';
        os.flags(flags);
    }
    os << std::scientific << std::setprecision(3) << "max_abs_diff " << report.max_abs_diff
       << "  tolerance " << report.tolerance << "  bandwidth expansion "
       << report.bandwidth_expansion << " oracle " << report.bandwidth_oracle << '\n';
    os.flags(flags);
}

} // namespace xxz
