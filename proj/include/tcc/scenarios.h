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

#ifndef TCC_SCENARIOS_H
#define TCC_SCENARIOS_H

#include <cstdint>
#include <functional>
#include <nlohmann/json.hpp>
#include <optional>
#include <string>
#include <vector>

#include "tcc/cyclo.h"

namespace tcc {

using json = nlohmann::ordered_json;

constexpr int kReportVersion = 1;

/// One checked claim. kind is "reference" for fixed expected values, "oracle" for values computed
/// independently here and "sanity" for structural checks.
struct Expectation {
    std::string name;
    std::string kind;
    bool pass = false;
    json expected;
    json observed;
    std::string detail;
};

struct Report {
    std::string scenario;
    std::string lattice;
    std::vector<Expectation> expectations;
    json values = json::object();
    double seconds = 0;
    /// Set when the scenario stopped on an exception; counts as a usage/resource failure.
    std::string error;
    bool resource_error = false;

    bool passed() const;
    /// 0 all pass, 1 some expectation failed, 2 error.
    int exit_code() const;
    json to_json(bool with_timing = true) const;
    static Report from_json(const json &j);
    std::string to_text() const;
};

/// Exact phase w8^k as {"pi_num", "pi_den_log2"}.
json phase_json(uint32_t phase8);
/// Exact ring element as its coefficient form plus an informational float pair.
json cyclo_json(const Cyclo &c);

struct ScenarioInfo {
    std::string name;
    std::string description;
    std::vector<std::string> tags;
    std::string lattice;
};

struct RunOptions {
    uint64_t seed = 20260101;
};

/// Bundled scenarios in catalog order; `tag` filters (unknown tag gives an empty list).
std::vector<ScenarioInfo> list_scenarios(const std::optional<std::string> &tag = std::nullopt);

/// Runs a bundled scenario. Unknown names throw std::out_of_range; errors raised by the
/// pipeline are caught and recorded in the report.
Report run_scenario(const std::string &name, const RunOptions &opts = {});

/// Builds a report around `body`, timing it and turning exceptions into report errors.
Report run_pipeline(const std::string &name, const std::string &lattice, const std::function<void(Report &)> &body);

/// Appends an expectation and returns its pass flag.
bool expect(Report &r, const std::string &name, const std::string &kind, bool pass, json expected, json observed,
            std::string detail = "");

}  // namespace tcc

#endif
