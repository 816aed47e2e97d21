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
#include <vector>

#include "bewit/witness.hpp"

namespace bewit {

struct SeeSawOptions {
    std::uint64_t seed = 42;
    int restarts = 200;
    int max_iter = 500;
    double tol = 1e-10;  // relative change of the witness value between sweeps
    bool classical = false;
    // Every this many sweeps, try stepping the preparations further along their
    // recent drift; the step is kept only if it raises the value. 0 disables.
    int extrapolate_every = 4;
    int threads = 0;  // 0: default_thread_count()
};

struct SeeSawOutcome {
    double value = 0.0;
    PMStrategy strategy;
    int iterations = 0;
    bool converged = false;
    std::uint64_t seed = 0;
    int restart_index = 0;
    /// Witness value after every observable, Alice and Bob update, in that order.
    std::vector<double> history;
};

struct RestartSummary {
    int restart_index = 0;
    double value = 0.0;
    int iterations = 0;
    bool converged = false;
};

struct SeeSawRun {
    SeeSawOutcome best;
    std::vector<RestartSummary> restarts;  // ordered by restart_index

    double converged_fraction() const;
};

/// Hardware concurrency, capped by the BEWIT_THREADS environment variable.
int default_thread_count();

/// One alternating optimization from a seeded random start. Quantum mode starts
/// from Haar-random pure states; classical mode from random basis states, keeping
/// preparations diagonal and observables diagonal +-1.
/// One restart; seeded from (options.seed, restart_index) only.
SeeSawOutcome seesaw_restart(const WitnessCoefficients& w, const SeeSawOptions& options,
                             int restart_index);

/// All restarts, best chosen by value with ties going to the lower restart index.
SeeSawRun run_seesaw(const WitnessCoefficients& w, const SeeSawOptions& options);

SeeSawOutcome seesaw_separable(const WitnessCoefficients& w, std::uint64_t seed, int restarts,
                               int max_iter = 500, double tol = 1e-10);
SeeSawOutcome seesaw_classical(const WitnessCoefficients& w, std::uint64_t seed, int restarts,
                               int max_iter = 500, double tol = 1e-10);

}  // namespace bewit
