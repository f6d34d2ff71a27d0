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

#include "pingpong/cli.h"

#include <CLI11.hpp>
#include <algorithm>
#include <cmath>
#include <fstream>
#include <iomanip>
#include <json.hpp>
#include <ostream>
#include <sstream>

#include "pingpong/analysis.h"
#include "pingpong/protocol.h"

namespace pingpong::cli {

namespace {

using nlohmann::json;

std::string fixed(double v) {
    std::ostringstream ss;
    ss << std::fixed << std::setprecision(15) << v;
    return ss.str();
}

std::string k_name(KSymbol k) {
    switch (k) {
        case KSymbol::Zero:
            return "0";
        case KSymbol::One:
            return "1";
        case KSymbol::None:
            break;
    }
    return "none";
}

std::string m_name(BellOutcome m) {
    switch (m) {
        case BellOutcome::PsiPlus:
            return "0";
        case BellOutcome::PsiMinus:
            return "1";
        default:
            return std::string(outcome_name(m));
    }
}

std::string_view command_name(Command c) {
    switch (c) {
        case Command::Exact:
            return "exact";
        case Command::Simulate:
            return "simulate";
        case Command::Sweep:
            return "sweep";
        case Command::Verify:
            return "verify";
    }
    return "?";
}

Command parse_command(std::string_view name) {
    for (auto c : {Command::Exact, Command::Simulate, Command::Sweep, Command::Verify}) {
        if (command_name(c) == name) return c;
    }
    throw std::invalid_argument("unknown command '" + std::string(name) + "'");
}

Suite parse_suite(std::string_view name) {
    if (name == "all") return Suite::All;
    if (name == "properties") return Suite::Properties;
    if (name == "oracles") return Suite::Oracles;
    throw std::invalid_argument("unknown suite '" + std::string(name) + "'");
}

double standard_error(double p, double n) { return n > 0 ? std::sqrt(p * (1.0 - p) / n) : 0.0; }

// Opens `path` for writing; throws std::runtime_error when it cannot.
std::ofstream open_output(const std::string &path) {
    std::ofstream f(path);
    if (!f) throw std::runtime_error("cannot write '" + path + "'");
    return f;
}

ProtocolConfig protocol_config(const RunConfig &c) {
    ProtocolConfig p;
    p.control_probability = c.control_probability;
    p.attack = {c.variant, c.symmetrize};
    p.attack_fraction = c.attack_fraction;
    p.two_basis_control = c.two_basis;
    p.rounds = c.rounds;
    p.seed = c.seed;
    return p;
}

json joint_json(const JointDistribution &joint) {
    json rows = json::array();
    joint.for_each([&](int j, KSymbol k, BellOutcome m, int coin, double p) {
        if (p <= 1e-15) return;
        rows.push_back({{"j", j}, {"k", k_name(k)}, {"m", m_name(m)}, {"coin", coin}, {"p", p}});
    });
    return rows;
}

}  // namespace

void RunConfig::validate() const {
    auto unit = [](double v, const char *name) {
        if (!(v >= 0.0 && v <= 1.0)) throw std::invalid_argument(std::string(name) + " must lie in [0, 1]");
    };
    unit(eta, "eta");
    unit(control_probability, "control_probability");
    unit(attack_fraction, "attack_fraction");
    unit(eta_grid.start, "eta_grid.start");
    unit(eta_grid.stop, "eta_grid.stop");
    if (eta_grid.steps < 1) throw std::invalid_argument("eta_grid.steps must be at least 1");
    if (rounds < 1) throw std::invalid_argument("rounds must be at least 1");
}

RunConfig apply_json_config(const std::string &json_text, RunConfig c) {
    json doc;
    try {
        doc = json::parse(json_text);
    } catch (const json::parse_error &e) {
        throw std::invalid_argument(std::string("config is not valid JSON: ") + e.what());
    }
    if (!doc.is_object()) throw std::invalid_argument("config must be a JSON object");
    try {
        for (const auto &[key, value] : doc.items()) {
            if (key == "command") {
                c.command = parse_command(value.get<std::string>());
            } else if (key == "variant") {
                c.variant = parse_attack_kind(value.get<std::string>());
            } else if (key == "symmetrize") {
                c.symmetrize = value.get<bool>();
            } else if (key == "eta") {
                c.eta = value.get<double>();
            } else if (key == "rounds") {
                c.rounds = value.get<uint64_t>();
            } else if (key == "seed") {
                c.seed = value.get<uint64_t>();
            } else if (key == "control_probability") {
                c.control_probability = value.get<double>();
            } else if (key == "two_basis") {
                c.two_basis = value.get<bool>();
            } else if (key == "attack_fraction") {
                c.attack_fraction = value.get<double>();
            } else if (key == "output") {
                c.output = value.get<std::string>();
            } else if (key == "suite") {
                c.suite = parse_suite(value.get<std::string>());
            } else if (key == "eta_grid") {
                for (const auto &[gk, gv] : value.items()) {
                    if (gk == "start") {
                        c.eta_grid.start = gv.get<double>();
                    } else if (gk == "stop") {
                        c.eta_grid.stop = gv.get<double>();
                    } else if (gk == "steps") {
                        c.eta_grid.steps = gv.get<int>();
                    } else {
                        throw std::invalid_argument("unknown eta_grid key '" + gk + "'");
                    }
                }
            } else {
                throw std::invalid_argument("unknown config key '" + key + "'");
            }
        }
    } catch (const json::exception &e) {
        throw std::invalid_argument(std::string("config has a wrong type: ") + e.what());
    }
    return c;
}

int cmd_exact(const RunConfig &config, std::ostream &out) {
    const AttackVariant variant{config.variant, config.symmetrize};
    const JointDistribution joint = exact_joint(variant);
    const InfoReport r = info_report(variant);

    out << "variant: " << variant.name() << "\n";
    out << "joint distribution p(j,k,m" << (variant.symmetrize ? ",coin" : "") << "), nonzero entries:\n";
    joint.for_each([&](int j, KSymbol k, BellOutcome m, int coin, double p) {
        if (p <= 1e-15) return;
        out << "  p(" << j << "," << k_name(k) << "," << m_name(m);
        if (variant.symmetrize) out << "," << coin;
        out << ") = " << fixed(p) << "\n";
    });
    out << "I_AE = " << fixed(r.I_AE) << "\n";
    out << "I_AB = " << fixed(r.I_AB) << "\n";
    out << "I_BE = " << fixed(r.I_BE) << "\n";
    out << "QBER = " << fixed(r.qber) << "\n";
    out << "induced_loss = " << fixed(r.induced_loss) << "\n";
    out << "detection_z = " << fixed(r.detection_z) << "\n";
    out << "detection_two_basis = " << fixed(r.detection_two_basis) << "\n";

    if (!config.output.empty()) {
        json doc = {{"variant", std::string(attack_name(config.variant))},
                    {"symmetrize", config.symmetrize},
                    {"joint", joint_json(joint)},
                    {"I_AE", r.I_AE},
                    {"I_AB", r.I_AB},
                    {"I_BE", r.I_BE},
                    {"qber", r.qber},
                    {"induced_loss", r.induced_loss},
                    {"detection_z", r.detection_z},
                    {"detection_two_basis", r.detection_two_basis}};
        open_output(config.output) << doc.dump(2) << "\n";
    }
    return kExitOk;
}

int cmd_simulate(const RunConfig &config, std::ostream &out) {
    const ProtocolConfig pc = protocol_config(config);
    const SessionStats stats = run_session(pc, {config.eta});

    out << "variant: " << pc.attack.name() << "  eta: " << config.eta << "  rounds: " << config.rounds
        << "  seed: " << config.seed << "  control_probability: " << config.control_probability
        << "  two_basis: " << (config.two_basis ? "yes" : "no") << "  attack_fraction: " << config.attack_fraction
        << "\n";

    const double messages = static_cast<double>(stats.message_rounds);
    out << "message rounds: " << stats.message_rounds << "\n";
    json rows = json::array();
    if (stats.message_rounds > 0) {
        const JointDistribution joint = stats.message_joint();
        out << "empirical joint p(j,k,m" << (pc.attack.symmetrize ? ",coin" : "") << ") +/- standard error:\n";
        joint.for_each([&](int j, KSymbol k, BellOutcome m, int coin, double p) {
            if (p <= 0) return;
            out << "  p(" << j << "," << k_name(k) << "," << m_name(m);
            if (pc.attack.symmetrize) out << "," << coin;
            out << ") = " << fixed(p) << " +/- " << fixed(standard_error(p, messages)) << "\n";
        });
        rows = joint_json(joint);
        const double q = qber(joint);
        out << "QBER = " << fixed(q) << "\n";
    }

    const double control = static_cast<double>(stats.total_control());
    const double found = control > 0 ? static_cast<double>(stats.total_found()) / control : 0.0;
    const double detected = control > 0 ? static_cast<double>(stats.total_detections()) / control : 0.0;
    out << "control rounds: " << stats.total_control() << " (z: " << stats.control_rounds[0]
        << ", x: " << stats.control_rounds[1] << ")\n";
    out << "photon-found rate = " << fixed(found) << " +/- " << fixed(standard_error(found, control)) << "\n";
    out << "detection rate = " << fixed(detected) << " +/- " << fixed(standard_error(detected, control)) << "\n";
    for (size_t b = 0; b < 2; b++) {
        if (stats.control_rounds[b] == 0) continue;
        const double n = static_cast<double>(stats.control_rounds[b]);
        const double d = static_cast<double>(stats.control_detections[b]) / n;
        out << "  " << (b == 0 ? "z" : "x") << "-basis detection rate = " << fixed(d) << " +/- "
            << fixed(standard_error(d, n)) << "\n";
    }
    out << "photons removed before Alice: " << stats.photons_lost << "\n";
    out << "attacked rounds: " << stats.attacked_rounds << "\n";

    if (!config.output.empty()) {
        json doc = {{"variant", std::string(attack_name(config.variant))},
                    {"symmetrize", config.symmetrize},
                    {"eta", config.eta},
                    {"rounds", config.rounds},
                    {"seed", config.seed},
                    {"message_rounds", stats.message_rounds},
                    {"joint", rows},
                    {"control_rounds", stats.control_rounds},
                    {"control_found", stats.control_found},
                    {"control_detections", stats.control_detections},
                    {"photons_lost", stats.photons_lost},
                    {"attacked_rounds", stats.attacked_rounds}};
        open_output(config.output) << doc.dump(2) << "\n";
    }
    return kExitOk;
}

void write_sweep_csv(const RunConfig &config, std::ostream &out) {
    const auto grid = eta_grid(config.eta_grid.start, config.eta_grid.stop, config.eta_grid.steps);
    out << "eta,variant,f_star,I_AE_eff,I_AB_eff,induced_loss\n";
    for (const SweepPoint &p : sweep(grid, config.symmetrize)) {
        out << fixed(p.eta) << "," << attack_name(p.kind) << "," << fixed(p.f_star) << "," << fixed(p.I_AE_eff) << ","
            << fixed(p.I_AB_eff) << "," << fixed(p.induced_loss) << "\n";
    }
}

int cmd_sweep(const RunConfig &config, std::ostream &out) {
    if (config.output.empty()) {
        write_sweep_csv(config, out);
        return kExitOk;
    }
    std::ofstream f = open_output(config.output);
    write_sweep_csv(config, f);
    if (!f) throw std::runtime_error("failed writing '" + config.output + "'");
    out << "wrote " << config.eta_grid.steps * 2 << " rows to " << config.output << "\n";
    return kExitOk;
}

int cmd_verify(const RunConfig &config, std::ostream &out) {
    VerifyOptions options;
    options.suite = config.suite;
    options.seed = config.seed;
    options.rounds = config.rounds;
    const auto checks = run_checks(options);
    print_checks(out, checks);
    const auto failed = std::count_if(checks.begin(), checks.end(), [](const Check &c) { return !c.pass; });
    out << checks.size() - static_cast<size_t>(failed) << "/" << checks.size() << " checks passed\n";
    return failed == 0 ? kExitOk : kExitVerifyFailed;
}

int run(const std::vector<std::string> &args, std::ostream &out, std::ostream &err) {
    CLI::App app{"Ping-pong protocol eavesdropping simulator", "pingpong"};
    app.require_subcommand(1);
    app.fallthrough();

    RunConfig defaults;
    std::string config_path, variant, suite;
    RunConfig flags;
    bool symmetrize = false, two_basis = false;

    app.add_option("--config", config_path, "JSON config file; command-line flags take precedence");
    auto *o_variant = app.add_option("--variant", variant, "Attack: none | wojcik | improved (default improved)");
    auto *o_sym = app.add_flag("--symmetrize", symmetrize, "Eve applies S_ty with probability 1/2");
    auto *o_eta = app.add_option("--eta", flags.eta, "Channel transmission efficiency (default 1.0)");
    auto *o_rounds = app.add_option("--rounds", flags.rounds, "Monte Carlo rounds (default 100000)");
    auto *o_seed = app.add_option("--seed", flags.seed, "RNG seed (default 0)");
    auto *o_control =
        app.add_option("--control-probability", flags.control_probability, "Probability of a control round (default 0.5)");
    auto *o_two = app.add_flag("--two-basis", two_basis, "Alice picks the z or x basis at random in control rounds");
    auto *o_fraction =
        app.add_option("--attack-fraction", flags.attack_fraction, "Fraction of rounds Eve attacks (default 1.0)");
    auto *o_start = app.add_option("--eta-start", flags.eta_grid.start, "Sweep grid start (default 0)");
    auto *o_stop = app.add_option("--eta-stop", flags.eta_grid.stop, "Sweep grid stop (default 1)");
    auto *o_steps = app.add_option("--eta-steps", flags.eta_grid.steps, "Sweep grid points (default 101)");
    auto *o_output = app.add_option("--output", flags.output, "Data file: JSON (exact, simulate) or CSV (sweep)");
    auto *o_suite = app.add_option("--suite", suite, "verify: all | properties | oracles (default all)");

    Command command = Command::Exact;
    app.add_subcommand("exact", "Exact joint distribution, information gains, QBER, loss and detection")
        ->callback([&] { command = Command::Exact; });
    app.add_subcommand("simulate", "Monte Carlo session with empirical rates and standard errors")
        ->callback([&] { command = Command::Simulate; });
    app.add_subcommand("sweep", "Attack fraction and effective information over an eta grid (CSV)")
        ->callback([&] { command = Command::Sweep; });
    app.add_subcommand("verify", "Run every invariant check; exit 2 on failure")
        ->callback([&] { command = Command::Verify; });

    try {
        std::vector<std::string> reversed(args.rbegin(), args.rend());
        app.parse(reversed);
    } catch (const CLI::CallForHelp &) {
        out << app.help();
        return kExitOk;
    } catch (const CLI::CallForAllHelp &) {
        out << app.help("", CLI::AppFormatMode::All);
        return kExitOk;
    } catch (const CLI::ParseError &e) {
        err << "error: " << e.what() << "\n";
        return kExitUsage;
    }

    RunConfig config = defaults;
    try {
        if (!config_path.empty()) {
            std::ifstream f(config_path);
            if (!f) throw std::invalid_argument("cannot read config '" + config_path + "'");
            std::stringstream text;
            text << f.rdbuf();
            config = apply_json_config(text.str(), config);
        }
        config.command = command;
        if (o_variant->count()) config.variant = parse_attack_kind(variant);
        if (o_sym->count()) config.symmetrize = symmetrize;
        if (o_eta->count()) config.eta = flags.eta;
        if (o_rounds->count()) config.rounds = flags.rounds;
        if (o_seed->count()) config.seed = flags.seed;
        if (o_control->count()) config.control_probability = flags.control_probability;
        if (o_two->count()) config.two_basis = two_basis;
        if (o_fraction->count()) config.attack_fraction = flags.attack_fraction;
        if (o_start->count()) config.eta_grid.start = flags.eta_grid.start;
        if (o_stop->count()) config.eta_grid.stop = flags.eta_grid.stop;
        if (o_steps->count()) config.eta_grid.steps = flags.eta_grid.steps;
        if (o_output->count()) config.output = flags.output;
        if (o_suite->count()) config.suite = parse_suite(suite);
        config.validate();
    } catch (const std::exception &e) {
        err << "error: " << e.what() << "\n";
        return kExitUsage;
    }

    try {
        switch (config.command) {
            case Command::Exact:
                return cmd_exact(config, out);
            case Command::Simulate:
                return cmd_simulate(config, out);
            case Command::Sweep:
                return cmd_sweep(config, out);
            case Command::Verify:
                return cmd_verify(config, out);
        }
    } catch (const std::exception &e) {
        err << "error: " << e.what() << "\n";
        return kExitUsage;
    }
    return kExitOk;
}

}  // namespace pingpong::cli
