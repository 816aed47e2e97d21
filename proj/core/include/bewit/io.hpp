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

#pragma once

#include <istream>
#include <ostream>
#include <string>
#include <string_view>

#include "bewit/seesaw.hpp"
#include "bewit/states.hpp"
#include "bewit/witness.hpp"

namespace bewit {

/// {"dim_a": n, "dim_b": n, "matrix": [[[re, im], ...], ...]}, row-major.
std::string state_to_json(const DensityMatrix& rho);
/// Throws ParseError on malformed input and DimensionMismatch on inconsistent shapes.
DensityMatrix state_from_json(std::string_view text);

/// {"lambdas": [16 reals], "permutation": [16 one-based integers]}
std::string bloch_spec_to_json(const BlochDiagonalSpec& spec);
BlochDiagonalSpec bloch_spec_from_json(std::string_view text);

/// Header x,y,z,w followed by 4096 rows; w is written as "-1/16", "0" or "1/16".
void write_witness_csv(std::ostream& out, const WitnessCoefficients& w);
/// The file does not carry a permutation; the result uses the identity.
WitnessCoefficients read_witness_csv(std::istream& in);

/// {seed, restarts, best_value, converged_fraction, iterations_histogram, ...}
std::string seesaw_report_json(const SeeSawRun& run, const SeeSawOptions& options);

}  // namespace bewit
