// Copyright 2026 The pingpong-sim Authors
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

#ifndef PINGPONG_VERIFY_H
#define PINGPONG_VERIFY_H

#include <cstdint>
#include <iosfwd>
#include <string>
#include <vector>

namespace pingpong {

enum class CheckGroup { Property, Oracle };

struct Check {
    CheckGroup group;
    std::string name;
    std::string measured;
    std::string expected;
    bool pass;
};

enum class Suite { All, Properties, Oracles };

struct VerifyOptions {
    Suite suite = Suite::All;
    uint64_t seed = 0;
    /// Rounds per Monte Carlo consistency check.
    uint64_t rounds = 100000;
};

/// Runs the invariant checks of every module.
///
/// Property checks cover gate algebra, reachability of every protocol path
/// and Monte Carlo consistency with the exact engine. Oracle checks compare
/// engine output with the target states and values of the attack.
std::vector<Check> run_checks(const VerifyOptions &options);

/// "name: PASS (measured ..., expected ...)" per check.
void print_checks(std::ostream &out, const std::vector<Check> &checks);

bool all_pass(const std::vector<Check> &checks);

}  // namespace pingpong

#endif
