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

// tcclab: build color-code lattices, run checks and bundled scenarios, emit reports.

#include <CLI11.hpp>
#include <algorithm>
#include <atomic>
#include <fstream>
#include <iostream>
#include <memory>
#include <sstream>
#include <thread>

#include "tcc/anyons.h"
#include "tcc/braid.h"
#include "tcc/excite.h"
#include "tcc/scenarios.h"

using namespace tcc;

namespace {

struct Common {
    std::string lattice = "16cell";
    std::string region;
    int level = 0;
    std::string out;
    std::string format = "structured";
    int jobs = 1;
    uint64_t seed = RunOptions{}.seed;
};

struct UsageError : std::runtime_error {
    using std::runtime_error::runtime_error;
};

struct Built {
    std::shared_ptr<Colex> colex;
    std::shared_ptr<ColorCode> code;
};

Built build(const std::string &spec) {
    Built b;
    b.colex = std::make_shared<Colex>(build_colex(spec));
    b.code = std::make_shared<ColorCode>(build_color_code(*b.colex));
    return b;
}

// "C:4,7" selects top cells 4 and 7 of color C; an empty spec takes the first cell of the last color.
std::pair<Region, BoundaryLattice> parse_region(const Colex &colex, const std::string &spec) {
    const ColorSet last = ColorSet(1) << colex.dim;
    if (spec.empty()) {
        const auto &top = colex.top_cells();
        for (uint32_t i = 0; i < top.size(); i++) {
            if (top[i].colors == last) {
                return region_and_boundary(colex, last, {i});
            }
        }
        throw UsageError("lattice has no top cell of color " + color_name(last));
    }
    const auto colon = spec.find(':');
    if (colon == std::string::npos) {
        throw UsageError("region must look like COLOR:ID[,ID...], got '" + spec + "'");
    }
    const ColorSet color = parse_colors(spec.substr(0, colon));
    std::vector<uint32_t> ids;
    std::stringstream ss(spec.substr(colon + 1));
    for (std::string tok; std::getline(ss, tok, ',');) {
        try {
            ids.push_back(static_cast<uint32_t>(std::stoul(tok)));
        } catch (const std::exception &) {
            throw UsageError("bad cell id '" + tok + "' in region '" + spec + "'");
        }
    }
    return region_and_boundary(colex, color, ids);
}

json state_json(const ExcitationState &s) {
    json amps = json::array();
    for (const auto &[p, a] : s.amplitudes) {
        amps.push_back({{"pattern", p.str()}, {"amplitude", cyclo_json(a)}});
    }
    return {{"modes", s.modes}, {"amplitudes", amps}};
}

void write_out(const std::string &text, const Common &c) {
    if (c.out.empty()) {
        std::cout << text;
        return;
    }
    std::ofstream f(c.out);
    if (!f) {
        throw UsageError("cannot write " + c.out);
    }
    f << text;
}

void emit(const std::vector<Report> &reports, const Common &c, bool wrap) {
    std::ostringstream os;
    if (c.format == "text") {
        for (const Report &r : reports) {
            os << r.to_text();
        }
    } else {
        json j;
        if (wrap) {
            j = {{"schema", "tcclab.run"},
                 {"version", kReportVersion},
                 {"passed", std::all_of(reports.begin(), reports.end(), [](const Report &r) { return r.passed(); })},
                 {"reports", json::array()}};
            for (const Report &r : reports) {
                j["reports"].push_back(r.to_json());
            }
        } else {
            j = reports.front().to_json();
        }
        os << j.dump(2) << "\n";
    }
    write_out(os.str(), c);
}

int finish(const std::vector<Report> &reports, const Common &c, bool wrap = false) {
    emit(reports, c, wrap);
    int code = 0;
    for (const Report &r : reports) {
        if (!r.error.empty()) {
            std::cerr << "tcclab: " << r.scenario << ": " << r.error << "\n";
        }
        code = std::max(code, r.exit_code());
    }
    return code;
}

Report build_lattice(const Common &c) {
    return run_pipeline("build-lattice", c.lattice, [&](Report &r) {
        Colex cx = build_colex(c.lattice);
        cx.validate();
        r.values = {{"dim", cx.dim},
                    {"manifold", manifold_name(cx.manifold)},
                    {"vertices", cx.num_vertices},
                    {"edges", cx.edges.size()},
                    {"plaquettes", cx.plaquettes.size()},
                    {"volumes", cx.volumes.size()}};
        expect(r, "Euler characteristic", "sanity", cx.euler() == euler_characteristic(cx.manifold),
               euler_characteristic(cx.manifold), cx.euler());
        std::ostringstream os;
        write_colex(os, cx);
        r.values["colex"] = os.str();
    });
}

Report check_code(const Common &c) {
    return run_pipeline("check-code", c.lattice, [&](Report &r) {
        Built b = build(c.lattice);
        size_t odd = 0;
        for (const BinVec &x : b.code->hx.rows()) {
            for (const BinVec &z : b.code->hz.rows()) {
                odd += x.dot(z);
            }
        }
        expect(r, "X and Z checks commute", "sanity", odd == 0, 0, odd);
        CodeParameters p = code_parameters(*b.code);
        r.values = {{"n", p.n}, {"k", p.k}, {"rank_x", p.rank_x}, {"rank_z", p.rank_z}};
    });
}

Report transversal_check(const Common &c) {
    return run_pipeline("transversal-check", c.lattice, [&](Report &r) {
        Built b = build(c.lattice);
        const int level = c.level ? c.level : b.colex->dim;
        BinVec region;
        if (!c.region.empty()) {
            region = parse_region(*b.colex, c.region).first.V;
        }
        Codespace cs(*b.code);
        PhasePolynomial D = transversal_phase_poly(*b.code, level, region);
        r.values = {{"level", level}, {"preserves_codespace", preserves_codespace(cs, D)}};
    });
}

Report excite(const Common &c) {
    return run_pipeline("excite", c.lattice, [&](Report &r) {
        Built b = build(c.lattice);
        const int level = c.level ? c.level : b.colex->dim;
        auto [region, boundary] = parse_region(*b.colex, c.region);
        ExcitationState s = boundary_wavefunction(*b.code, region, boundary, level);
        expect(r, "color parity", "sanity", satisfies_color_parity(s, b.colex->dim), true,
               satisfies_color_parity(s, b.colex->dim));
        r.values = {{"level", level}, {"state", state_json(s)}};
    });
}

Report verify_spt(const Common &c) {
    return run_pipeline("verify-spt", c.lattice, [&](Report &r) {
        Built b = build(c.lattice);
        auto [region, boundary] = parse_region(*b.colex, c.region);
        ExcitationState s = boundary_wavefunction(*b.code, region, boundary, b.colex->dim);
        if (b.colex->dim == 2) {
            ClusterReport rep = verify_cluster_state_2d(s, boundary);
            for (size_t j = 0; j < rep.stabilizers.size(); j++) {
                expect(r, "cluster term " + std::to_string(j), "reference", rep.stabilizers[j] == Cyclo(1), "1",
                       rep.stabilizers[j].str());
            }
            expect(r, "sublattice symmetry a", "reference", rep.symmetry_a == Cyclo(1), "1", rep.symmetry_a.str());
            expect(r, "sublattice symmetry b", "reference", rep.symmetry_b == Cyclo(1), "1", rep.symmetry_b.str());
            r.values["note"] = rep.note;
        } else {
            SptReport rep = verify_spt_state_3d(s, boundary);
            for (size_t j = 0; j < rep.q_values.size(); j++) {
                expect(r, "Q_" + std::to_string(j), "reference", rep.q_values[j] == Cyclo(1), "1", rep.q_values[j].str());
            }
            for (int k = 0; k < 3; k++) {
                const std::string col = color_name(ColorSet(1) << k);
                expect(r, "S_" + col, "reference", rep.symmetry_values[k] == Cyclo(1), "1", rep.symmetry_values[k].str());
                expect(r, "product of Q over " + col + " equals S_" + col, "oracle", rep.product_identity[k], true,
                       rep.product_identity[k]);
            }
        }
        r.values["modes"] = s.modes;
    });
}

Report enumerate_walls(const Common &c, const std::string &model_name) {
    return run_pipeline("enumerate-walls", "", [&](Report &r) {
        AnyonModel model = model_name == "color"       ? color_code_anyon_model(2)
                           : model_name == "toric"     ? toric_code_anyon_model()
                           : model_name == "two-toric" ? two_toric_code_anyon_model()
                           : model_name == "sanity"   ? trivial_anyon_model()
                                                       : throw UsageError("unknown model '" + model_name + "'");
        auto walls = enumerate_transparent_walls(model);
        r.values["model"] = model_name;
        r.values["count"] = walls.size();
        r.values["group"] = {{"order", walls.size()}, {"abelian", is_abelian(walls)}};
        json list = json::array();
        for (const Wall &w : walls) {
            list.push_back(action_list(model, w));
        }
        r.values["walls"] = list;
        (void)c;
    });
}

Report braid(const Common &c, const std::vector<std::string> &labels, uint32_t vertex, bool enclose) {
    return run_pipeline("braid", c.lattice, [&](Report &r) {
        if (labels.size() != 2 && labels.size() != 3) {
            throw UsageError("braid takes two or three excitation labels");
        }
        Built b = build(c.lattice);
        if (b.colex->dim != 3) {
            throw UsageError("braid needs a 3D lattice");
        }
        Codespace cs(*b.code);
        CornerFixture fx = corner_fixture(*b.colex, vertex);
        std::vector<LoopProcess> p;
        for (size_t i = 0; i < labels.size(); i++) {
            const bool outer = enclose && i == 0 && labels.size() == 2;
            p.push_back(corner_process(*b.code, fx, labels[i], outer ? Placement::kEnclosing : Placement::kLocal));
        }
        BraidResult res = labels.size() == 2 ? braid_two(cs, p[0], p[1]) : braid_three_loop(cs, p[0], p[1], p[2]);
        r.values = {{"participants", res.participants},
                    {"vertex", vertex},
                    {"phase", phase_json(res.phase8)},
                    {"phase_str", phase8_as_pi(res.phase8).str()},
                    {"trace", res.trace}};
    });
}

std::vector<Report> run_many(const std::vector<std::string> &names, const Common &c) {
    std::vector<Report> out(names.size());
    std::atomic<size_t> next{0};
    auto worker = [&] {
        for (size_t i; (i = next++) < names.size();) {
            out[i] = run_scenario(names[i], RunOptions{c.seed});
        }
    };
    const size_t threads = std::clamp<size_t>(static_cast<size_t>(std::max(c.jobs, 1)), 1, names.size());
    std::vector<std::thread> pool;
    for (size_t t = 1; t < threads; t++) {
        pool.emplace_back(worker);
    }
    worker();
    for (auto &t : pool) {
        t.join();
    }
    return out;
}

}  // namespace

int main(int argc, char **argv) {
    CLI::App app{"Transversal gates and topological excitations in color codes"};
    app.require_subcommand(1);
    Common c;
    auto common = [&](CLI::App *s, bool lattice) {
        if (lattice) {
            s->add_option("--lattice", c.lattice, "hex-torus:D1,D2 | octa-sphere:R | 16cell | bcc-torus:L1,L2,L3")
                ->capture_default_str();
        }
        s->add_option("--out", c.out, "Write the report here instead of stdout");
        s->add_option("--format", c.format, "Report format")->check(CLI::IsMember({"structured", "text"}));
    };

    auto *build_cmd = app.add_subcommand("build-lattice", "Build and validate a colex");
    common(build_cmd, true);
    auto *check_cmd = app.add_subcommand("check-code", "Code parameters and check commutation");
    common(check_cmd, true);
    auto *trans_cmd = app.add_subcommand("transversal-check", "Does R_level on T (inverse on the rest) preserve the codespace");
    common(trans_cmd, true);
    trans_cmd->add_option("--level", c.level, "Phase level (default: lattice dimension)");
    trans_cmd->add_option("--region", c.region, "Restrict to region COLOR:ID[,ID...]");
    auto *excite_cmd = app.add_subcommand("excite", "Excitation spectrum left by a restricted gate");
    common(excite_cmd, true);
    excite_cmd->add_option("--level", c.level, "Phase level (default: lattice dimension)");
    excite_cmd->add_option("--region", c.region, "Region COLOR:ID[,ID...] (default: first top cell of the last color)");
    auto *spt_cmd = app.add_subcommand("verify-spt", "Check the boundary cluster / SPT stabilizers");
    common(spt_cmd, true);
    spt_cmd->add_option("--region", c.region, "Region COLOR:ID[,ID...]");
    std::string model = "color";
    auto *walls_cmd = app.add_subcommand("enumerate-walls", "Transparent domain walls of an abelian anyon model");
    common(walls_cmd, false);
    walls_cmd->add_option("--model", model, "color | toric | two-toric | trivial")->capture_default_str();
    std::vector<std::string> labels;
    uint32_t vertex = 0;
    bool enclose = false;
    auto *braid_cmd = app.add_subcommand("braid", "Braiding phase of two or three excitations at a corner");
    common(braid_cmd, true);
    braid_cmd->add_option("labels", labels, "e.g. e_A m_BC, or m_AB s_BC m_CA")->required();
    braid_cmd->add_option("--vertex", vertex, "Corner vertex")->capture_default_str();
    braid_cmd->add_flag("--enclose", enclose, "First loop of a pair encloses a whole volume");
    std::vector<std::string> names;
    auto *run_cmd = app.add_subcommand("run", "Run bundled scenarios ('all' for every one)");
    common(run_cmd, false);
    run_cmd->add_option("scenarios", names, "Scenario names")->required();
    run_cmd->add_option("--jobs", c.jobs, "Scenarios run concurrently")->check(CLI::PositiveNumber);
    run_cmd->add_option("--seed", c.seed, "Seed for randomized property scenarios")->capture_default_str();
    std::string tag;
    auto *list_cmd = app.add_subcommand("list", "List bundled scenarios");
    list_cmd->add_option("--tag", tag, "Only scenarios with this tag");

    try {
        app.parse(argc, argv);
    } catch (const CLI::ParseError &e) {
        const int rc = app.exit(e);
        return rc == 0 ? 0 : 2;
    }

    try {
        if (list_cmd->parsed()) {
            for (const ScenarioInfo &s : list_scenarios(tag.empty() ? std::nullopt : std::optional(tag))) {
                std::cout << s.name << "\t" << s.description << "\n";
            }
            return 0;
        }
        if (build_cmd->parsed()) {
            Report r = build_lattice(c);
            if (c.format == "text" && r.error.empty()) {
                // Plain colex file, readable back with read_colex.
                write_out(r.values["colex"].get<std::string>(), c);
                return r.exit_code();
            }
            return finish({r}, c);
        }
        if (check_cmd->parsed()) return finish({check_code(c)}, c);
        if (trans_cmd->parsed()) return finish({transversal_check(c)}, c);
        if (excite_cmd->parsed()) return finish({excite(c)}, c);
        if (spt_cmd->parsed()) return finish({verify_spt(c)}, c);
        if (walls_cmd->parsed()) return finish({enumerate_walls(c, model)}, c);
        if (braid_cmd->parsed()) return finish({braid(c, labels, vertex, enclose)}, c);
        if (run_cmd->parsed()) {
            if (names.size() == 1 && names[0] == "all") {
                names.clear();
                for (const ScenarioInfo &s : list_scenarios()) {
                    names.push_back(s.name);
                }
            }
            std::vector<std::string> known;
            for (const ScenarioInfo &s : list_scenarios()) {
                known.push_back(s.name);
            }
            for (const std::string &n : names) {
                if (std::find(known.begin(), known.end(), n) == known.end()) {
                    throw UsageError("unknown scenario '" + n + "' (see 'tcclab list')");
                }
            }
            return finish(run_many(names, c), c, names.size() > 1);
        }
    } catch (const std::exception &e) {
        std::cerr << "tcclab: " << e.what() << "\n";
        return 2;
    }
    return 2;
}
