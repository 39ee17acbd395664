// Copyright 2026 The mzv Authors. All Rights Reserved.
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

#include <sys/wait.h>

#include <cstdio>
#include <fstream>
#include <string>

#include <gtest/gtest.h>
#include <json.hpp>

namespace {

using nlohmann::json;

struct CliRun {
    int rc = -1;
    std::string out;
};

/// Runs the CLI with `args` (shell syntax); stderr is discarded.
CliRun cli(const std::string& args) {
    const std::string cmd = std::string("\"") + MZV_CLI_PATH + "\" " + args + " 2>/dev/null";
    CliRun r;
    FILE* p = popen(cmd.c_str(), "r");
    if (!p) return r;
    char buf[4096];
    std::size_t n;
    while ((n = fread(buf, 1, sizeof buf, p)) > 0) r.out.append(buf, n);
    const int status = pclose(p);
    r.rc = WIFEXITED(status) ? WEXITSTATUS(status) : -1;
    return r;
}

std::string sample(const char* name) { return std::string("\"") + MZV_SAMPLES_DIR + "/" + name + "\""; }

/// Drops run-dependent fields: timings, radii, stated operands, and digits
/// past the 16th significant place.
json normalise(const json& j) {
    if (j.is_array()) {
        json out = json::array();
        for (const auto& x : j) out.push_back(normalise(x));
        return out;
    }
    if (!j.is_object()) return j;
    json out = json::object();
    for (const auto& [k, v] : j.items()) {
        if (k == "timing_s" || k == "radius" || k == "lhs" || k == "rhs" || k == "diff" || k == "approx") continue;
        if (k == "file") {
            const std::string s = v.get<std::string>();
            out[k] = s.substr(s.find_last_of('/') + 1);
        } else if (k == "value" && v.is_string()) {
            out[k] = v.get<std::string>().substr(0, 18);
        } else {
            out[k] = normalise(v);
        }
    }
    return out;
}

json golden(const char* name) {
    std::ifstream in(std::string(MZV_GOLDEN_DIR) + "/" + name + ".json");
    return json::parse(in);
}

void expect_golden(const std::string& args, const char* name) {
    const CliRun r = cli("--json " + args);
    ASSERT_EQ(r.rc, 0) << args;
    EXPECT_EQ(normalise(json::parse(r.out)), golden(name)) << args;
}

TEST(Cli, GoldenOutputs) {
    expect_golden("value zeta 3", "value_zeta_3");
    expect_golden("sum T 1,1 2", "sum_T_11_2");
    expect_golden("poset eval " + sample("ky-122.json"), "poset_ky122");
    expect_golden("poset eval --symbolic " + sample("vee-alternating.json"), "poset_vee_symbolic");
    expect_golden("schur eval --bound 10 " + sample("antihook-mod2.json"), "schur_antihook_mod2");
    expect_golden("verify POSET-522 --quiet", "verify_poset522");
}

TEST(Cli, SettingsAreEchoed) {
    const json j = json::parse(cli("--json --bits 96 --terms 4096 --tol 1e-8 value zeta 2").out);
    EXPECT_EQ(j["settings"]["bits"], 96);
    EXPECT_EQ(j["settings"]["terms"], 4096);
    EXPECT_DOUBLE_EQ(j["settings"]["tol"].get<double>(), 1e-8);
    EXPECT_EQ(j["result"]["value"].get<std::string>().substr(0, 12), "1.6449340668");
    EXPECT_GT(j["result"]["radius"].get<double>(), 0.0);
    EXPECT_GE(j["timing_s"].get<double>(), 0.0);
}

TEST(Cli, PlainTextValues) {
    EXPECT_NE(cli("value zeta 3").out.find("1.2020569031"), std::string::npos);
    EXPECT_NE(cli("value zeta -1").out.find("-0.6931471805"), std::string::npos);
    EXPECT_NE(cli("value A 1 --x 1/2").out.find("1.0986122886"), std::string::npos);
    EXPECT_NE(cli("schur eval --bound 5 " + sample("single-box-odd.json")).out.find("518/225"), std::string::npos);
    EXPECT_NE(cli("poset eval " + sample("chain-z2.json")).out.find("1.6449340668"), std::string::npos);
}

TEST(Cli, VerifyExitCodes) {
    EXPECT_EQ(cli("verify POSET-522 --quiet").rc, 0);
    const CliRun bad = cli("--json verify AONES --params '{\"r\": 1}'");
    EXPECT_EQ(bad.rc, 1);
    const json j = json::parse(bad.out);
    EXPECT_EQ(j["failed"], 1);
    EXPECT_EQ(j["passed"], 0);
    EXPECT_FALSE(j["results"][0]["pass"].get<bool>());
}

TEST(Cli, ErrorExitCodes) {
    EXPECT_EQ(cli("verify NOSUCH").rc, 2);
    EXPECT_EQ(cli("value zeta 1,x").rc, 2);
    EXPECT_EQ(cli("value zeta 2 --x 0.5").rc, 2);
    EXPECT_EQ(cli("verify AONES --params '{}'").rc, 2);
    EXPECT_EQ(cli("poset eval /nonexistent/file.json").rc, 2);
    EXPECT_EQ(cli("--bogus-flag value zeta 2").rc, 2);
    EXPECT_EQ(cli("value zeta 1").rc, 3);
    EXPECT_EQ(cli("value Li 1,2 --x 2").rc, 3);
}

}  // namespace
