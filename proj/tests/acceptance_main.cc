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

// Acceptance run: one PASS/FAIL line per criterion, each backed by bundled scenarios and a
// wall-clock budget.

#include <chrono>
#include <iomanip>
#include <iostream>
#include <string>
#include <vector>

#include "tcc/scenarios.h"

namespace {

struct Criterion {
    int id;
    std::string title;
    std::vector<std::string> scenarios;
    double budget_seconds;
};

const std::vector<Criterion> kCriteria = {
    {1, "stabilizer consistency", {"stabilizer-consistency"}, 1},
    {2,
     "transversality",
     {"r2-transversality", "r3-transversality-16cell", "r3-transversality-bcc", "r3-cube-negative"},
     10},
    {3, "single-qubit excitation spectrum", {"single-qubit-excitation"}, 1},
    {4, "cluster boundary state", {"cluster-boundary-2d"}, 10},
    {5, "3D SPT boundary state", {"spt-boundary-3d"}, 60},
    {6, "wall census", {"walls-72"}, 5},
    {7, "gate automorphisms", {"gate-automorphisms"}, 10},
    {8, "braiding tables", {"two-excitation-braiding", "three-loop-table", "r3-wall-braiding"}, 60},
    {9, "commutator identity", {"commutator-identity"}, 10},
    {10, "property suites", {"cocycles", "braid-deformation", "excitation-oracle", "f2-exhaustive"}, 300},
};

}  // namespace

int main() {
    int failed = 0;
    for (const Criterion &c : kCriteria) {
        const auto t0 = std::chrono::steady_clock::now();
        std::vector<std::string> problems;
        for (const std::string &name : c.scenarios) {
            tcc::Report r = tcc::run_scenario(name);
            if (!r.error.empty()) {
                problems.push_back(name + ": " + r.error);
            }
            for (const tcc::Expectation &e : r.expectations) {
                if (!e.pass) {
                    problems.push_back(name + ": " + e.name + " (observed " + e.observed.dump() + ", expected " +
                                       e.expected.dump() + ")");
                }
            }
        }
        const double secs = std::chrono::duration<double>(std::chrono::steady_clock::now() - t0).count();
        if (secs > c.budget_seconds) {
            problems.push_back("took longer than the " + std::to_string(int(c.budget_seconds)) + " s budget");
        }
        const bool pass = problems.empty();
        failed += !pass;
        std::cout << (pass ? "PASS" : "FAIL") << " criterion " << c.id << ": " << c.title << " (" << std::fixed
                  << std::setprecision(3) << secs << " s)\n";
        for (const std::string &p : problems) {
            std::cout << "    " << p << "\n";
        }
    }
    std::cout << (failed ? std::to_string(failed) + " criteria failed" : "all criteria passed") << "\n";
    return failed ? 1 : 0;
}
