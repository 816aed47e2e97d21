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

#include <stdexcept>
#include <string>

namespace bewit {

/// Base class for every error raised by the library.
class Error : public std::runtime_error {
   public:
    using std::runtime_error::runtime_error;
};

#define BEWIT_DEFINE_ERROR(Name)              \
    class Name : public Error {               \
       public:                                \
        using Error::Error;                   \
    }

BEWIT_DEFINE_ERROR(NotHermitian);
BEWIT_DEFINE_ERROR(NotUnitary);
BEWIT_DEFINE_ERROR(DimensionMismatch);
BEWIT_DEFINE_ERROR(IndexOutOfRange);
BEWIT_DEFINE_ERROR(InvalidPermutation);
BEWIT_DEFINE_ERROR(InvalidDimension);
BEWIT_DEFINE_ERROR(InvalidState);
BEWIT_DEFINE_ERROR(InvalidStrategy);
BEWIT_DEFINE_ERROR(SpectrumOutOfRange);
BEWIT_DEFINE_ERROR(DomainError);
BEWIT_DEFINE_ERROR(BracketError);
BEWIT_DEFINE_ERROR(UnknownStateId);
BEWIT_DEFINE_ERROR(ParseError);

#undef BEWIT_DEFINE_ERROR

}  // namespace bewit
