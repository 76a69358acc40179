// Copyright 2026 The tcc-lab Authors
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

#include <gtest/gtest.h>
#include <sys/wait.h>

#include <cstdio>
#include <fstream>
#include <set>
#include <sstream>

#include "tcc/phasepoly.h"
#include "tcc/scenarios.h"

namespace tcc {
namespace {

struct CliRun {
    int code = -1;
    std::string out;
};

CliRun tcclab(const std::string &args) {
    const std::string cmd = std::string(TCCLAB_BIN) + " " + args + " 2>/dev/null";
    FILE *p = popen(cmd.c_str(), "r");
    CliRun r;
    char buf[4096];
    for (size_t n; (n = fread(buf, 1, sizeof buf, p)) > 0;) r.out.append(buf, n);
    const int status = pclose(p);
    r.code = WIFEXITED(status) ? WEXITSTATUS(status) : -1;
    return r;
}

json strip_timing(json j) {
    if (j.contains("reports")) {
        for (auto &r : j["reports"]) r.erase("timing");
    }
    j.erase("timing");
    return j;
}

TEST(Catalog, IncludesCoreScenarios) {
    std::set<std::string> names;
    for (const ScenarioInfo &s : list_scenarios()) names.insert(s.name);
    for (const char *n : {"cluster-boundary-2d", "r3-transversality-16cell", "walls-72", "three-loop-table", "empty"}) {
        EXPECT_TRUE(names.count(n)) << n;
    }
}

TEST(Catalog, TagFilter) {
    auto braiding = list_scenarios(std::string("braiding"));
    ASSERT_FALSE(braiding.empty());
    for (const ScenarioInfo &s : braiding) {
        EXPECT_NE(std::find(s.tags.begin(), s.tags.end(), "braiding"), s.tags.end()) << s.name;
    }
    EXPECT_TRUE(list_scenarios(std::string("no-such-tag")).empty());
}

TEST(Scenario, EmptyPasses) {
    Report r = run_scenario("empty");
    EXPECT_TRUE(r.passed());
    EXPECT_EQ(r.exit_code(), 0);
    EXPECT_TRUE(r.expectations.empty());
}

TEST(Scenario, UnknownNameThrows) { EXPECT_THROW(run_scenario("nope"), std::out_of_range); }

TEST(Scenario, WallsReportCarriesCount) {
    Report r = run_scenario("walls-72");
    ASSERT_TRUE(r.passed()) << r.to_text();
    bool found = false;
    for (const Expectation &e : r.expectations) {
        if (e.name == "color-code transparent walls") {
            EXPECT_EQ(e.observed, 72);
            EXPECT_EQ(e.kind, "reference");
            found = true;
        }
    }
    EXPECT_TRUE(found);
}

TEST(Scenario, ThreeLoopPhasesAreExactFractions) {
    Report r = run_scenario("three-loop-table");
    ASSERT_TRUE(r.passed()) << r.to_text();
    for (const Expectation &e : r.expectations) {
        if (e.name.find("theta(") != std::string::npos) {
            EXPECT_TRUE(e.observed.contains("pi_num"));
            EXPECT_TRUE(e.observed["pi_num"].is_number_integer());
        }
    }
}

TEST(Report, JsonRoundTrip) {
    Report r = run_scenario("single-qubit-excitation");
    const json j = r.to_json();
    EXPECT_EQ(j["schema"], "tcclab.report");
    EXPECT_EQ(j["version"], kReportVersion);
    EXPECT_EQ(Report::from_json(j).to_json(), j);
    Report broken = run_pipeline("x", "", [](Report &) { throw ResourceError("too big"); });
    EXPECT_EQ(Report::from_json(broken.to_json()).to_json(), broken.to_json());
    json bad = j;
    bad["version"] = kReportVersion + 1;
    EXPECT_THROW(Report::from_json(bad), std::invalid_argument);
}

TEST(Report, ExitCodeContract) {
    Report ok = run_pipeline("ok", "", [](Report &r) { expect(r, "fine", "sanity", true, 1, 1); });
    EXPECT_EQ(ok.exit_code(), 0);
    Report fail = run_pipeline("fail", "", [](Report &r) { expect(r, "off", "oracle", false, 1, 2, "offending: 2"); });
    EXPECT_EQ(fail.exit_code(), 1);
    EXPECT_EQ(fail.expectations[0].detail, "offending: 2");
    Report res = run_pipeline("res", "", [](Report &) { throw ResourceError("2^40 terms"); });
    EXPECT_EQ(res.exit_code(), 2);
    EXPECT_TRUE(res.resource_error);
    EXPECT_EQ(res.error, "2^40 terms");
}

TEST(Report, DeterministicModuloTiming) {
    for (const char *name : {"three-loop-table", "walls-72", "braid-deformation"}) {
        EXPECT_EQ(run_scenario(name).to_json(false).dump(), run_scenario(name).to_json(false).dump()) << name;
    }
}

TEST(Report, SeedIsRecorded) {
    Report r = run_scenario("braid-deformation", RunOptions{7});
    EXPECT_TRUE(r.passed()) << r.to_text();
    EXPECT_EQ(r.values["seed"], 7);
}

TEST(Cli, ListAndTags) {
    CliRun all = tcclab("list");
    EXPECT_EQ(all.code, 0);
    EXPECT_NE(all.out.find("walls-72"), std::string::npos);
    CliRun braiding = tcclab("list --tag braiding");
    EXPECT_EQ(braiding.code, 0);
    EXPECT_NE(braiding.out.find("three-loop-table"), std::string::npos);
    EXPECT_EQ(braiding.out.find("walls-72\t"), std::string::npos);
    CliRun none = tcclab("list --tag no-such-tag");
    EXPECT_EQ(none.code, 0);
    EXPECT_TRUE(none.out.empty());
}

TEST(Cli, RunEmitsStructuredReport) {
    CliRun r = tcclab("run walls-72");
    ASSERT_EQ(r.code, 0);
    json j = json::parse(r.out);
    EXPECT_EQ(j["scenario"], "walls-72");
    EXPECT_TRUE(j["passed"].get<bool>());
    EXPECT_EQ(j["values"]["candidates"], 20160);
}

TEST(Cli, RunTextFormat) {
    CliRun r = tcclab("run empty --format text");
    EXPECT_EQ(r.code, 0);
    EXPECT_EQ(r.out.rfind("empty: PASS", 0), 0u);
}

TEST(Cli, UsageErrorsExitTwo) {
    EXPECT_EQ(tcclab("").code, 2);
    EXPECT_EQ(tcclab("run no-such-scenario").code, 2);
    EXPECT_EQ(tcclab("run empty --format yaml").code, 2);
    EXPECT_EQ(tcclab("frobnicate").code, 2);
    EXPECT_EQ(tcclab("check-code --lattice klein-bottle").code, 2);
    EXPECT_EQ(tcclab("braid e_A --lattice 16cell").code, 2);
}

TEST(Cli, JobsDoNotChangeResults) {
    const std::string names = "walls-72 cocycles commutator-identity empty";
    json one = strip_timing(json::parse(tcclab("run " + names + " --jobs 1").out));
    json three = strip_timing(json::parse(tcclab("run " + names + " --jobs 3").out));
    EXPECT_EQ(one, three);
    EXPECT_EQ(one["reports"].size(), 4u);
}

TEST(Cli, OutFlagWritesFile) {
    const std::string path = ::testing::TempDir() + "tcclab_out.json";
    CliRun r = tcclab("check-code --lattice hex-torus:2,2 --out " + path);
    EXPECT_EQ(r.code, 0);
    EXPECT_TRUE(r.out.empty());
    std::ifstream f(path);
    json j = json::parse(f);
    EXPECT_EQ(j["values"]["k"], 4);
}

TEST(Cli, Subcommands) {
    CliRun b = tcclab("braid e_A m_BC --lattice 16cell");
    ASSERT_EQ(b.code, 0);
    EXPECT_EQ(json::parse(b.out)["values"]["phase"]["pi_num"], 1);
    CliRun t = tcclab("transversal-check --lattice octa-sphere:0 --level 3");
    ASSERT_EQ(t.code, 0);
    EXPECT_FALSE(json::parse(t.out)["values"]["preserves_codespace"].get<bool>());
    CliRun s = tcclab("verify-spt --lattice 16cell");
    EXPECT_EQ(s.code, 0);
    CliRun w = tcclab("enumerate-walls --model toric");
    ASSERT_EQ(w.code, 0);
    EXPECT_EQ(json::parse(w.out)["values"]["count"], 2);
    CliRun e = tcclab("excite --lattice octa-sphere:0");
    EXPECT_EQ(e.code, 0);
    EXPECT_EQ(tcclab("excite --lattice octa-sphere:0 --region nonsense").code, 2);
    CliRun l = tcclab("build-lattice --lattice octa-sphere:0 --format text");
    EXPECT_EQ(l.code, 0);
    EXPECT_FALSE(l.out.empty());
}

}  // namespace
}  // namespace tcc
