// Copyright 2026 The bewit Authors
//
// Licensed under the Apache License, Version 2.0 (the "License");
// you may not use this file except in compliance with the License.
// You may obtain a copy of the License at
//
//      http://www.apache.org/licenses/LICENSE-2.0
//
// Unless required by applicable law or agreed to in writing, software
// distributed under the License is distributed on an "AS IS" BASIS,
// WITHOUT WARRANTIES OR CONDITIONS OF ANY KIND, either express or implied.
// See the License for the specific language governing permissions and
// limitations under the License.


#include "cli.hpp"

#include <cmath>
#include <cstdio>
#include <filesystem>
#include <fstream>
#include <iostream>
#include <sstream>

#include "CLI11.hpp"
#include "json.hpp"

#include "bewit/bewit.hpp"

namespace bewit::cli {

namespace {

using nlohmann::json;
using K = StateId::Kind;

class IoError : public Error {
   public:
    using Error::Error;
};

std::string fixed(double v, int digits) {
    char buf[64];
    std::snprintf(buf, sizeof buf, "%.*f", digits, v);
    return buf;
}

// Enough digits to read the same double back.
std::string exact(double v) {
    char buf[64];
    std::snprintf(buf, sizeof buf, "%.17g", v);
    return buf;
}

struct LoadedState {
    std::string name;
    DensityMatrix rho;
    Permutation permutation;
    double slack = tol::kPsdSlack;
};

LoadedState load_state(const std::string& spec) {
    try {
        const StateId id = parse_state_id(spec);
        return {to_string(id), catalog(id), catalog_permutation(id), catalog_psd_slack(id)};
    } catch (const UnknownStateId&) {
        if (!std::filesystem::is_regular_file(spec)) {
            throw;
        }
    }
    std::ifstream in(spec);
    if (!in) {
        throw IoError("cannot read state file '" + spec + "'");
    }
    std::stringstream text;
    text << in.rdbuf();
    return {spec, state_from_json(text.str()), Permutation(), tol::kPsdSlack};
}

std::vector<LoadedState> selected_states(const RunConfig& config) {
    if (!config.state.empty()) {
        return {load_state(config.state)};
    }
    std::vector<LoadedState> all;
    for (const StateId& id : bloch_catalog_ids()) {
        all.push_back(load_state(to_string(id)));
    }
    all.push_back(load_state("rho3x3"));
    return all;
}

WitnessCoefficients load_witness(const std::string& spec) {
    if (spec == "canonical") {
        return canonical_coefficients();
    }
    if (spec.rfind("state:", 0) == 0) {
        const LoadedState s = load_state(spec.substr(6));
        return witness_for_state(s.rho, s.permutation);
    }
    std::ifstream in(spec);
    if (!in) {
        throw IoError("cannot read witness file '" + spec + "'");
    }
    return read_witness_csv(in);
}

std::string cell(const std::optional<double>& v, int digits = 4) {
    return v ? fixed(*v, digits) : "-";
}

json cell_json(const std::optional<double>& v) { return v ? json(*v) : json(nullptr); }

}  // namespace

std::vector<double> parse_v_grid(const std::string& text) {
    auto number = [&](const std::string& s) {
        std::size_t used = 0;
        double v = 0.0;
        try {
            v = std::stod(s, &used);
        } catch (const std::exception&) {
            used = std::string::npos;
        }
        if (used != s.size()) {
            throw DomainError("bad v-grid entry '" + s + "'");
        }
        return v;
    };
    std::vector<double> grid;
    if (text.find(':') != std::string::npos) {
        std::vector<std::string> parts;
        std::stringstream ss(text);
        for (std::string p; std::getline(ss, p, ':');) parts.push_back(p);
        if (parts.size() != 3) {
            throw DomainError("v-grid range must be lo:hi:count");
        }
        const double lo = number(parts[0]), hi = number(parts[1]);
        const double count = number(parts[2]);
        if (count < 2 || count != std::floor(count)) {
            throw DomainError("v-grid count must be an integer >= 2");
        }
        const int n = static_cast<int>(count);
        for (int i = 0; i < n; ++i) grid.push_back(lo + (hi - lo) * i / (n - 1));
    } else {
        std::stringstream ss(text);
        for (std::string p; std::getline(ss, p, ',');) grid.push_back(number(p));
    }
    if (grid.empty()) {
        throw DomainError("empty v-grid");
    }
    for (double v : grid) {
        if (!(v >= 0.0 && v <= 1.0)) {
            throw DomainError("v-grid entries must lie in [0, 1]");
        }
    }
    return grid;
}

std::vector<std::optional<int>> parse_dims(const std::string& text) {
    std::vector<std::optional<int>> dims;
    std::stringstream ss(text);
    for (std::string p; std::getline(ss, p, ',');) {
        if (p == "inf") {
            dims.emplace_back(std::nullopt);
            continue;
        }
        std::size_t used = 0;
        int d = 0;
        try {
            d = std::stoi(p, &used);
        } catch (const std::exception&) {
            used = std::string::npos;
        }
        if (used != p.size() || d < 4) {
            throw DomainError("dims entries must be integers >= 4 or 'inf', got '" + p + "'");
        }
        dims.emplace_back(d);
    }
    if (dims.empty()) {
        throw DomainError("empty dims list");
    }
    return dims;
}

void cmd_states(const RunConfig& config, std::ostream& out) {
    const std::vector<LoadedState> states = selected_states(config);
    if (config.format == Format::json) {
        if (states.size() == 1) {
            out << state_to_json(states.front().rho) << '\n';
            return;
        }
        json doc = json::object();
        for (const LoadedState& s : states) doc[s.name] = json::parse(state_to_json(s.rho));
        out << doc.dump(2) << '\n';
        return;
    }
    out << "state,row,col,re,im\n";
    for (const LoadedState& s : states) {
        const ComplexMatrix& m = s.rho.matrix();
        for (Eigen::Index r = 0; r < m.rows(); ++r)
            for (Eigen::Index c = 0; c < m.cols(); ++c)
                out << s.name << ',' << r << ',' << c << ',' << exact(m(r, c).real()) << ','
                    << exact(m(r, c).imag()) << '\n';
    }
}

void cmd_criteria(const RunConfig& config, std::ostream& out) {
    json rows = json::array();
    if (config.format == Format::csv) {
        out << "state,valid,negativity,min_pt_eigenvalue,ppt,ccnr,S,max_qfi,qfi_generator\n";
    }
    for (const LoadedState& s : selected_states(config)) {
        const bool valid = validate_state(s.rho, s.slack).pass;
        const double neg = negativity(s.rho);
        const double min_pt = min_partial_transpose_eigenvalue(s.rho);
        const bool ppt = is_ppt(s.rho, s.slack);
        const double c = ccnr(s.rho);
        std::optional<double> S;
        std::optional<MaxQfi> best;
        if (s.rho.dim_a() == kLocalDim && s.rho.dim_b() == kLocalDim) {
            S = trace_criterion_S(s.rho, s.permutation);
            best = max_qfi(s.rho);
        }
        const std::string gen = best ? local_generators()[best->generator].name : "-";
        if (config.format == Format::csv) {
            out << s.name << ',' << (valid ? "yes" : "no") << ',' << exact(neg) << ',' << exact(min_pt) << ','
                << (ppt ? "yes" : "no") << ',' << exact(c) << ',' << (S ? exact(*S) : "-") << ','
                << (best ? exact(best->value) : "-") << ',' << gen << '\n';
        } else {
            rows.push_back({{"state", s.name},
                            {"valid", valid},
                            {"negativity", neg},
                            {"min_pt_eigenvalue", min_pt},
                            {"ppt", ppt},
                            {"ccnr", c},
                            {"S", cell_json(S)},
                            {"max_qfi", best ? json(best->value) : json(nullptr)},
                            {"qfi_generator", gen}});
        }
    }
    if (config.format == Format::json) out << rows.dump(2) << '\n';
}

void cmd_witness_gen(const RunConfig& config, std::ostream& out) {
    const WitnessCoefficients w = config.state.empty() ? load_witness(config.witness)
                                                       : load_witness("state:" + config.state);
    if (config.format == Format::csv) {
        write_witness_csv(out, w);
        return;
    }
    json doc = {{"denominator", 16},
                {"permutation", w.permutation().images()},
                {"numerators", std::vector<int>(w.numerators().begin(), w.numerators().end())}};
    out << doc.dump() << '\n';
}

void cmd_simulate(const RunConfig& config, std::ostream& out) {
    if (config.state.empty()) {
        throw DomainError("simulate needs --state");
    }
    const LoadedState s = load_state(config.state);
    require_valid_state(s.rho, s.slack);
    const WitnessCoefficients w = witness_for_state(s.rho, s.permutation);
    const std::vector<double> e = pauli_strategy_correlators(s.rho, s.permutation);
    const double value = entangled_value(s.rho, w);
    double closed = 0.0;
    for (double t : correlation_diagonal(s.rho, s.permutation)) closed += std::abs(t);
    closed *= 64.0;
    if (config.format == Format::json) {
        json doc = {{"state", s.name}, {"correlators", e}, {"sum_wE", value}, {"closed_form", closed}};
        out << doc.dump() << '\n';
        return;
    }
    out << "x,y,z,E\n";
    for (int x = 1; x <= kBasisSize; ++x)
        for (int y = 1; y <= kBasisSize; ++y)
            for (int z = 1; z <= kBasisSize; ++z)
                out << x << ',' << y << ',' << z << ','
                    << exact(e[static_cast<std::size_t>(WitnessCoefficients::flat_index(x, y, z))]) << '\n';
    out << "# sum_wE=" << fixed(value, 9) << " closed_form=" << fixed(closed, 9) << '\n';
}

void cmd_seesaw(const RunConfig& config, std::ostream& out) {
    SeeSawOptions options;
    options.seed = config.seed;
    options.restarts = config.restarts;
    options.max_iter = config.max_iter;
    options.tol = config.tol;
    options.classical = config.classical;
    const SeeSawRun run = run_seesaw(load_witness(config.witness), options);
    out << seesaw_report_json(run, options);
}

void cmd_table2(const RunConfig& config, std::ostream& out) {
    auto not_ppt = [](const DensityMatrix& r) { return !is_ppt(r); };
    auto useful = [](const DensityMatrix& r) { return max_qfi(r).value > kSeparableQfi; };
    auto ccnr_detects = [](const DensityMatrix& r) { return ccnr(r) > 1.0; };
    json rows = json::array();
    if (config.format == Format::csv) {
        out << "state,negativity,ccnr,v_pm,v_metro,v_sep_ppt,v_sep_method,v_loc,v_loc_source,v_sep_nonppt,"
               "v_sep_nonppt_source\n";
    }
    for (const StateId& id : bloch_catalog_ids()) {
        const DensityMatrix rho = catalog(id);
        auto family = [&](double v) { return isotropic_mix(rho, v); };
        const double neg = negativity(rho);
        const double c = ccnr(rho);
        const double v_pm = v_pm_closed_form(c);
        std::optional<double> v_metro;
        if (useful(rho)) v_metro = v_threshold(family, useful, 0.0, 1.0).v_star;
        const auto v_loc = reference_v_loc(id.kind);
        const auto v_sep_ref = reference_v_sep(id.kind);
        std::optional<double> v_sep;
        std::string method = "-";
        if (!is_ppt(rho, catalog_psd_slack(id))) {
            v_sep = v_threshold(family, not_ppt, 0.0, 1.0).v_star;
            method = "ppt";
        } else if (!v_sep_ref && c > 1.0) {
            // PPT throughout; below the CCNR edge the mixture is taken as separable.
            v_sep = v_threshold(family, ccnr_detects, 0.0, 1.0).v_star;
            method = "ccnr";
        }
        const std::string loc_src = v_loc ? "reference: " + std::string(v_loc->source) : "-";
        const std::string sep_src = v_sep_ref ? "reference: " + std::string(v_sep_ref->source) : "-";
        if (config.format == Format::csv) {
            out << to_string(id) << ',' << fixed(neg, 4) << ',' << fixed(c, 4) << ',' << fixed(v_pm, 4) << ','
                << cell(v_metro) << ',' << cell(v_sep) << ',' << method << ','
                << cell(v_loc ? std::optional<double>(v_loc->value) : std::nullopt) << ",\"" << loc_src << "\","
                << cell(v_sep_ref ? std::optional<double>(v_sep_ref->value) : std::nullopt) << ",\"" << sep_src
                << "\"\n";
        } else {
            rows.push_back({{"state", to_string(id)},
                            {"negativity", neg},
                            {"ccnr", c},
                            {"v_pm", v_pm},
                            {"v_metro", cell_json(v_metro)},
                            {"v_sep_ppt", cell_json(v_sep)},
                            {"v_sep_method", method},
                            {"v_loc", v_loc ? json(v_loc->value) : json(nullptr)},
                            {"v_loc_source", loc_src},
                            {"v_sep_nonppt", v_sep_ref ? json(v_sep_ref->value) : json(nullptr)},
                            {"v_sep_nonppt_source", sep_src}});
        }
    }
    if (config.format == Format::json) out << rows.dump(2) << '\n';
}

bool cmd_highdim(const RunConfig& config, std::ostream& out) {
    const std::vector<double> grid = parse_v_grid(config.v_grid);
    const std::vector<std::optional<int>> dims = parse_dims(config.dims);
    const DensityMatrix bpd = catalog({K::BPD});
    const double c = ccnr(bpd);
    ComplexMatrix k0 = ComplexMatrix::Zero(kLocalDim, kLocalDim);
    k0(0, 0) = 1.0;
    bool agree = true;
    json rows = json::array();
    if (config.format == Format::csv) out << "v,D,S_formula,S_direct,ccnr_formula,ccnr_direct\n";
    for (const std::optional<int>& dim : dims) {
        for (double v : grid) {
            const double s_formula = highdim_S(v, dim);
            const double c_formula = highdim_ccnr(c, v, dim);
            std::optional<double> s_direct, c_direct;
            if (dim) {
                const DensityMatrix mixed = isotropic_mix(bpd, v, *dim);
                s_direct = trace_criterion_S(reprepare_channel(mixed, k0, k0));
                c_direct = ccnr(mixed);
                if (*dim <= 6 && (std::abs(*s_direct - s_formula) >= 1e-8 || std::abs(*c_direct - c_formula) >= 1e-8)) {
                    agree = false;
                }
            }
            const std::string d = dim ? std::to_string(*dim) : "inf";
            if (config.format == Format::csv) {
                out << fixed(v, 6) << ',' << d << ',' << fixed(s_formula, 12) << ',' << cell(s_direct, 12) << ','
                    << fixed(c_formula, 12) << ',' << cell(c_direct, 12) << '\n';
            } else {
                rows.push_back({{"v", v},
                                {"D", d},
                                {"S_formula", s_formula},
                                {"S_direct", cell_json(s_direct)},
                                {"ccnr_formula", c_formula},
                                {"ccnr_direct", cell_json(c_direct)}});
            }
        }
    }
    if (config.format == Format::json) out << rows.dump(2) << '\n';
    return agree;
}

int run(int argc, const char* const* argv, std::ostream& out, std::ostream& err) {
    RunConfig config;
    CLI::App app{"Prepare-and-measure entanglement witness toolkit"};
    app.fallthrough();
    app.require_subcommand(1);
    std::string format = "csv";
    std::string out_path;
    app.add_option("--seed", config.seed, "RNG seed")->capture_default_str();
    app.add_option("--restarts", config.restarts, "See-saw restarts")->capture_default_str()->check(CLI::PositiveNumber);
    app.add_option("--tol", config.tol, "See-saw relative convergence tolerance")->capture_default_str()->check(CLI::NonNegativeNumber);
    app.add_option("--max-iter", config.max_iter, "See-saw sweeps per restart")->capture_default_str()->check(CLI::PositiveNumber);
    app.add_option("--out", out_path, "Write the report here instead of stdout");
    app.add_option("--format", format, "csv or json")->capture_default_str()->check(CLI::IsMember({"csv", "json"}));
    app.add_flag("--classical", config.classical, "Classical (diagonal) see-saw");
    app.add_option("--state", config.state, "State id (me, werner-as, werner-loc, r6, r8, bpd, sentis, rho3x3, asym:<v>) or JSON file");
    app.add_option("--witness", config.witness, "canonical, state:<id> or a witness CSV file")->capture_default_str();
    app.add_option("--v-grid", config.v_grid, "lo:hi:count or comma list")->capture_default_str();
    app.add_option("--dims", config.dims, "Comma list of D >= 4 or inf")->capture_default_str();

    for (const char* name : {"states", "criteria", "witness-gen", "simulate", "seesaw", "table2", "highdim"}) {
        app.add_subcommand(name)->callback([&config, name] { config.command = name; });
    }
    app.get_subcommand("states")->description("Dump catalog density matrices");
    app.get_subcommand("criteria")->description("Negativity, PPT, CCNR, trace criterion and QFI per state");
    app.get_subcommand("witness-gen")->description("Witness coefficients as CSV");
    app.get_subcommand("simulate")->description("Correlators of the Pauli strategy on a state");
    app.get_subcommand("seesaw")->description("See-saw search for the separable bound");
    app.get_subcommand("table2")->description("Entanglement and critical noise parameters of the catalog");
    app.get_subcommand("highdim")->description("High-dimensional noise closed forms vs direct computation");

    try {
        app.parse(argc, argv);
    } catch (const CLI::ParseError& e) {
        return app.exit(e, out, err) == 0 ? 0 : 2;
    }
    config.format = format == "json" ? Format::json : Format::csv;
    if (!out_path.empty()) config.out_path = out_path;

    try {
        std::ofstream file;
        std::ostream* sink = &out;
        if (config.out_path) {
            file.open(*config.out_path);
            if (!file) throw IoError("cannot write '" + *config.out_path + "'");
            sink = &file;
        }
        bool ok = true;
        const std::string& cmd = config.command;
        if (cmd == "states") cmd_states(config, *sink);
        else if (cmd == "criteria") cmd_criteria(config, *sink);
        else if (cmd == "witness-gen") cmd_witness_gen(config, *sink);
        else if (cmd == "simulate") cmd_simulate(config, *sink);
        else if (cmd == "seesaw") cmd_seesaw(config, *sink);
        else if (cmd == "table2") cmd_table2(config, *sink);
        else if (cmd == "highdim") ok = cmd_highdim(config, *sink);
        sink->flush();
        if (!*sink) throw IoError("write failed");
        if (!ok) {
            err << "error: formula and direct computation disagree\n";
            return 1;
        }
    } catch (const Error& e) {
        err << "error: " << e.what() << '\n';
        return 1;
    }
    return 0;
}

}  // namespace bewit::cli
