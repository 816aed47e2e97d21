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

#include <cstdint>
#include <iosfwd>
#include <optional>
#include <string>
#include <vector>

namespace bewit::cli {

enum class Format { csv, json };

struct RunConfig {
    std::string command;
    std::uint64_t seed = 42;
    int restarts = 200;
    double tol = 1e-10;
    int max_iter = 500;
    std::optional<std::string> out_path;
    Format format = Format::csv;
    bool classical = false;
    std::string state;               // state id or path to a state JSON file
    std::string witness = "canonical";  // "canonical", "state:<id>" or a CSV path
    std::string v_grid = "0:1:21";   // lo:hi:count or comma list
    std::string dims = "4,5,6,inf";
};

/// Parses argv and runs one command. Returns the process exit code; usage errors give 2,
/// library errors 1.
int run(int argc, const char* const* argv, std::ostream& out, std::ostream& err);

/// Individual commands write their report to `out`.
void cmd_states(const RunConfig& config, std::ostream& out);
void cmd_criteria(const RunConfig& config, std::ostream& out);
void cmd_witness_gen(const RunConfig& config, std::ostream& out);
void cmd_simulate(const RunConfig& config, std::ostream& out);
void cmd_seesaw(const RunConfig& config, std::ostream& out);
void cmd_table2(const RunConfig& config, std::ostream& out);
/// Returns false if a finite-D formula disagrees with the direct computation.
bool cmd_highdim(const RunConfig& config, std::ostream& out);

std::vector<double> parse_v_grid(const std::string& text);
/// Entries >= 4; "inf" maps to nullopt.
std::vector<std::optional<int>> parse_dims(const std::string& text);

}  // namespace bewit::cli
