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

#ifndef PINGPONG_CLI_H
#define PINGPONG_CLI_H

#include <cstdint>
#include <iosfwd>
#include <string>
#include <vector>

#include "pingpong/attack.h"
#include "pingpong/verify.h"

namespace pingpong::cli {

constexpr int kExitOk = 0;
constexpr int kExitUsage = 1;
constexpr int kExitVerifyFailed = 2;

enum class Command { Exact, Simulate, Sweep, Verify };

struct EtaGridSpec {
    double start = 0.0;
    double stop = 1.0;
    int steps = 101;
};

struct RunConfig {
    Command command = Command::Exact;
    AttackKind variant = AttackKind::Improved;
    bool symmetrize = false;
    double eta = 1.0;
    uint64_t rounds = 100000;
    uint64_t seed = 0;
    double control_probability = 0.5;
    bool two_basis = false;
    double attack_fraction = 1.0;
    EtaGridSpec eta_grid;
    /// Data file (JSON for exact/simulate, CSV for sweep); empty for none.
    std::string output;
    Suite suite = Suite::All;

    /// Throws std::invalid_argument on out-of-range values.
    void validate() const;
};

/// Overlays fields of a JSON config document (lower_snake_case keys) onto
/// `base`. Unknown keys and wrong types throw std::invalid_argument.
RunConfig apply_json_config(const std::string &json_text, RunConfig base);

int cmd_exact(const RunConfig &config, std::ostream &out);
int cmd_simulate(const RunConfig &config, std::ostream &out);
int cmd_sweep(const RunConfig &config, std::ostream &out);
int cmd_verify(const RunConfig &config, std::ostream &out);

/// Sweep CSV with the header eta,variant,f_star,I_AE_eff,I_AB_eff,induced_loss.
void write_sweep_csv(const RunConfig &config, std::ostream &out);

/// Parses arguments (excluding argv[0]) and runs the selected command.
int run(const std::vector<std::string> &args, std::ostream &out, std::ostream &err);

}  // namespace pingpong::cli

#endif
