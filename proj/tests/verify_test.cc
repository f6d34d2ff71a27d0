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


#include "pingpong/verify.h"

#include <gtest/gtest.h>

#include <algorithm>
#include <sstream>

namespace pingpong {
namespace {

const Check *find(const std::vector<Check> &checks, const std::string &name) {
    auto it = std::find_if(checks.begin(), checks.end(), [&](const Check &c) { return c.name == name; });
    return it == checks.end() ? nullptr : &*it;
}

TEST(Verify, PropertySuitePasses) {
    VerifyOptions options;
    options.suite = Suite::Properties;
    auto checks = run_checks(options);
    EXPECT_GT(checks.size(), 40u);
    for (const auto &c : checks) {
        EXPECT_EQ(c.group, CheckGroup::Property);
        EXPECT_TRUE(c.pass) << c.name << ": " << c.measured;
    }
    EXPECT_TRUE(all_pass(checks));
}

TEST(Verify, PropertySuiteCoversEachInvariant) {
    VerifyOptions options;
    options.suite = Suite::Properties;
    options.rounds = 1000;
    auto checks = run_checks(options);
    for (const char *name : {"unitarity W", "involution U", "photon conservation S_ty", "inverse W^-1 W on domain of W",
                             "CPBS convention search", "reachability of every protocol path",
                             "monte carlo vs exact joint improved+sym"}) {
        EXPECT_NE(find(checks, name), nullptr) << name;
    }
}

TEST(Verify, OraclesThatHold) {
    VerifyOptions options;
    options.suite = Suite::Oracles;
    auto checks = run_checks(options);
    for (const char *name : {"forward-attack state matches target form", "induced loss improved",
                             "induced loss wojcik", "return-attack state j=0 matches target form",
                             "detection two-basis improved", "joint distribution wojcik baseline",
                             "I_AB improved+sym", "joint distribution of target return states"}) {
        const Check *c = find(checks, name);
        ASSERT_NE(c, nullptr) << name;
        EXPECT_EQ(c->group, CheckGroup::Oracle);
        EXPECT_TRUE(c->pass) << name << ": " << c->measured;
    }
}

TEST(Verify, PrintFormat) {
    std::ostringstream out;
    print_checks(out, {{CheckGroup::Property, "x", "1", "<= 2", true}, {CheckGroup::Oracle, "y", "3", "4", false}});
    EXPECT_EQ(out.str(), "[property] x: PASS (measured 1, expected <= 2)\n[oracle]   y: FAIL (measured 3, expected 4)\n");
    EXPECT_FALSE(all_pass({{CheckGroup::Oracle, "y", "3", "4", false}}));
    EXPECT_TRUE(all_pass({}));
}

}  // namespace
}  // namespace pingpong
