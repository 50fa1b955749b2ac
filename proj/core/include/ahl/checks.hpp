// Copyright 2026 The AHL Simulator Authors
//
// Licensed under the Apache License, Version 2.0 (the "License");
// you may not use this file except in compliance with the License.
// You may obtain a copy of the License at
//
//     http://www.apache.org/licenses/LICENSE-2.0
//
// Unless required by applicable law or agreed to in writing, software
// distributed under the License is distributed on an "AS IS" BASIS,
// WITHOUT WARRANTIES OR CONDITIONS OF ANY KIND, either express or implied.
// See the License for the specific language governing permissions and
// limitations under the License.
/**
 * @file checks.hpp
 * Fast self-checks of the simulator's invariants, run by `ahl-sim check`.
 */
#pragma once

#include <string>
#include <vector>

namespace ahl {

struct CheckResult {
    std::string name;
    bool passed = false;
    std::string detail;
};

/// Each check runs in well under a second and catches its own exceptions.
std::vector<CheckResult> run_invariant_checks();

} // namespace ahl
