// Copyright 2026 The nvgates Authors
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

namespace nvgates {

/// Out-of-domain physical or numerical parameter.
struct InvalidParameter : std::invalid_argument {
    using std::invalid_argument::invalid_argument;
};

/// A state with (numerically) zero norm was asked to be normalized.
struct DegenerateState : std::domain_error {
    using std::domain_error::domain_error;
};

/// Spin index or spin-count mismatch between states and operations.
struct ShapeError : std::invalid_argument {
    using std::invalid_argument::invalid_argument;
};

/// A PBS was handed an amplitude on a (polarization, path) it has no route for.
struct IncompleteRouting : std::invalid_argument {
    using std::invalid_argument::invalid_argument;
};

}  // namespace nvgates
