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

#include "bewit/io.hpp"

#include <map>
#include <sstream>

#include "bewit/errors.hpp"
#include "json.hpp"

namespace bewit {

using nlohmann::json;

namespace {

json parse(std::string_view text, const char* what) {
    try {
        return json::parse(text);
    } catch (const json::parse_error& e) {
        throw ParseError(std::string(what) + ": " + e.what());
    }
}

std::string trim(const std::string& s) {
    const auto first = s.find_first_not_of(" \t\r\n");
    if (first == std::string::npos) {
        return {};
    }
    const auto last = s.find_last_not_of(" \t\r\n");
    return s.substr(first, last - first + 1);
}

int parse_index(const std::string& field, int line) {
    try {
        std::size_t used = 0;
        const int v = std::stoi(field, &used);
        if (used != field.size()) {
            throw std::invalid_argument(field);
        }
        return v;
    } catch (const std::exception&) {
        throw ParseError("witness csv line " + std::to_string(line) + ": bad index '" + field + "'");
    }
}

int parse_weight(const std::string& field, int line) {
    if (field == "1/16" || field == "+1/16") return 1;
    if (field == "-1/16") return -1;
    if (field == "0") return 0;
    throw ParseError("witness csv line " + std::to_string(line) + ": bad weight '" + field + "'");
}

}  // namespace

std::string state_to_json(const DensityMatrix& rho) {
    json matrix = json::array();
    const ComplexMatrix& m = rho.matrix();
    for (Eigen::Index r = 0; r < m.rows(); ++r) {
        json row = json::array();
        for (Eigen::Index c = 0; c < m.cols(); ++c) {
            row.push_back({m(r, c).real(), m(r, c).imag()});
        }
        matrix.push_back(std::move(row));
    }
    json doc = {{"dim_a", rho.dim_a()}, {"dim_b", rho.dim_b()}, {"matrix", std::move(matrix)}};
    return doc.dump();
}

DensityMatrix state_from_json(std::string_view text) {
    const json doc = parse(text, "state json");
    try {
        const int dim_a = doc.at("dim_a").get<int>();
        const int dim_b = doc.at("dim_b").get<int>();
        const json& rows = doc.at("matrix");
        const auto n = static_cast<Eigen::Index>(rows.size());
        if (dim_a <= 0 || dim_b <= 0 || n != static_cast<Eigen::Index>(dim_a) * dim_b) {
            throw DimensionMismatch("state json: matrix has " + std::to_string(n) +
                                    " rows, expected dim_a*dim_b");
        }
        ComplexMatrix m(n, n);
        for (Eigen::Index r = 0; r < n; ++r) {
            const json& row = rows.at(static_cast<std::size_t>(r));
            if (static_cast<Eigen::Index>(row.size()) != n) {
                throw DimensionMismatch("state json: ragged matrix row " + std::to_string(r));
            }
            for (Eigen::Index c = 0; c < n; ++c) {
                const json& entry = row.at(static_cast<std::size_t>(c));
                if (!entry.is_array() || entry.size() != 2) {
                    throw ParseError("state json: entries must be [re, im] pairs");
                }
                m(r, c) = Complex(entry[0].get<double>(), entry[1].get<double>());
            }
        }
        return DensityMatrix(std::move(m), dim_a, dim_b);
    } catch (const json::exception& e) {
        throw ParseError(std::string("state json: ") + e.what());
    }
}

std::string bloch_spec_to_json(const BlochDiagonalSpec& spec) {
    json doc = {{"lambdas", spec.lambdas}, {"permutation", spec.permutation.images()}};
    return doc.dump();
}

BlochDiagonalSpec bloch_spec_from_json(std::string_view text) {
    const json doc = parse(text, "bloch json");
    try {
        const auto lambdas = doc.at("lambdas").get<std::vector<double>>();
        if (lambdas.size() != kBasisSize) {
            throw ParseError("bloch json: expected 16 lambdas");
        }
        BlochDiagonalSpec spec;
        std::copy(lambdas.begin(), lambdas.end(), spec.lambdas.begin());
        if (doc.contains("permutation")) {
            spec.permutation = Permutation(doc.at("permutation").get<std::vector<int>>());
        }
        return spec;
    } catch (const json::exception& e) {
        throw ParseError(std::string("bloch json: ") + e.what());
    }
}

void write_witness_csv(std::ostream& out, const WitnessCoefficients& w) {
    out << "x,y,z,w\n";
    for (int x = 1; x <= kBasisSize; ++x) {
        for (int y = 1; y <= kBasisSize; ++y) {
            for (int z = 1; z <= kBasisSize; ++z) {
                const int n = w.numerator(x, y, z);
                out << x << ',' << y << ',' << z << ','
                    << (n == 0 ? "0" : (n > 0 ? "1/16" : "-1/16")) << '\n';
            }
        }
    }
}

WitnessCoefficients read_witness_csv(std::istream& in) {
    std::string line;
    int line_no = 0;
    bool header_seen = false;
    std::array<std::int8_t, kWitnessSize> numerators{};
    std::array<bool, kWitnessSize> seen{};
    int rows = 0;
    while (std::getline(in, line)) {
        ++line_no;
        line = trim(line);
        if (line.empty()) {
            continue;
        }
        if (!header_seen) {
            if (line != "x,y,z,w") {
                throw ParseError("witness csv: expected header 'x,y,z,w'");
            }
            header_seen = true;
            continue;
        }
        std::vector<std::string> fields;
        std::stringstream ss(line);
        for (std::string field; std::getline(ss, field, ',');) {
            fields.push_back(trim(field));
        }
        if (fields.size() != 4) {
            throw ParseError("witness csv line " + std::to_string(line_no) + ": expected 4 fields");
        }
        const int x = parse_index(fields[0], line_no);
        const int y = parse_index(fields[1], line_no);
        const int z = parse_index(fields[2], line_no);
        if (x < 1 || x > 16 || y < 1 || y > 16 || z < 1 || z > 16) {
            throw ParseError("witness csv line " + std::to_string(line_no) +
                             ": index outside 1..16");
        }
        const auto idx = static_cast<std::size_t>(WitnessCoefficients::flat_index(x, y, z));
        if (seen[idx]) {
            throw ParseError("witness csv line " + std::to_string(line_no) + ": duplicate entry");
        }
        seen[idx] = true;
        numerators[idx] = static_cast<std::int8_t>(parse_weight(fields[3], line_no));
        ++rows;
    }
    if (!header_seen) {
        throw ParseError("witness csv: empty input");
    }
    if (rows != kWitnessSize) {
        throw ParseError("witness csv: expected 4096 rows, got " + std::to_string(rows));
    }
    return WitnessCoefficients(numerators, Permutation());
}

std::string seesaw_report_json(const SeeSawRun& run, const SeeSawOptions& options) {
    std::map<std::string, int> histogram;
    for (const RestartSummary& r : run.restarts) {
        ++histogram[std::to_string(r.iterations)];
    }
    json restarts = json::array();
    for (const RestartSummary& r : run.restarts) {
        restarts.push_back({{"restart", r.restart_index},
                            {"value", r.value},
                            {"iterations", r.iterations},
                            {"converged", r.converged}});
    }
    json doc = {
        {"seed", options.seed},
        {"restarts", options.restarts},
        {"mode", options.classical ? "classical" : "quantum"},
        {"max_iter", options.max_iter},
        {"tol", options.tol},
        {"best_value", run.best.value},
        {"best_restart", run.best.restart_index},
        {"converged_fraction", run.converged_fraction()},
        {"iterations_histogram", histogram},
        {"restart_values", std::move(restarts)},
    };
    return doc.dump(2) + "\n";
}

}  // namespace bewit
