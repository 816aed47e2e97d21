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

// Numerical tolerances shared by every module. Table constants are quoted to
// 6-7 digits, so nothing here is tighter than 1e-12.
namespace bewit::tol {

inline constexpr double kHermitian = 1e-10;
inline constexpr double kPsdSlack = 1e-9;
inline constexpr double kEquality = 1e-9;
inline constexpr double kUnitary = 1e-9;

// The Sentis coefficients are 7-digit truncations.
inline constexpr double kTruncatedPsdSlack = 1e-6;

// Eigenvalue pairs with lambda_i + lambda_j below this are dropped from the QFI sum.
inline constexpr double kQfiCutoff = 1e-12;

inline constexpr double kBisection = 1e-6;
inline constexpr int kBisectionMaxIter = 60;

}  // namespace bewit::tol
