/*
 *  Copyright (C) 2026  minmod contributors
 *
 *  Licensed under the Apache License, Version 2.0 (the "License");
 *  you may not use this file except in compliance with the License.
 *  You may obtain a copy of the License at
 *
 *    http://www.apache.org/licenses/LICENSE-2.0
 *
 *  Unless required by applicable law or agreed to in writing, software
 *  distributed under the License is distributed on an "AS IS" BASIS,
 *  WITHOUT WARRANTIES OR CONDITIONS OF ANY KIND, either express or implied.
 *  See the License for the specific language governing permissions and
 *  limitations under the License.
 *
 */

#include <minmod/elimination.hpp>
#include <minmod/gen.hpp>
#include <minmod/graphs.hpp>
#include <minmod/io.hpp>
#include <minmod/oracle.hpp>
#include <minmod/transforms.hpp>

#include <CLI11.hpp>
#include <json.hpp>

#include <chrono>
#include <filesystem>
#include <fstream>
#include <iostream>
#include <sstream>

namespace fs = std::filesystem;
using namespace minmod;

namespace {

// Exit codes are a total function of the JSON status.
int exit_code_for(std::string_view status) {
    if (status == "minimal" || status == "inconsistent")
        return 0;
    if (status == "failure" || status == "unknown")
        return 2;
    if (status == "model")
        return 3;
    return 1;
}

std::string read_file(const std::string& path) {
    std::ifstream in(path, std::ios::binary);
    if (!in)
        throw Error("cannot open " + path);
    std::ostringstream os;
    os << in.rdbuf();
    return os.str();
}

struct Emit {
    bool quiet = false; // drop the run statistics from the output

    int result(std::string_view status, const Theory& theory, const AtomSet& model,
               const RunStats& stats, const std::vector<std::string>* witness = nullptr,
               const std::string* reduct_text = nullptr) const {
        std::vector<std::string> names = theory.names_of(model);
        if (quiet) {
            nlohmann::ordered_json j;
            j["status"] = status;
            j["model"]  = names;
            if (witness)
                j["witness"] = *witness;
            std::cout << j.dump() << "\n";
        } else {
            std::cout << serialize_result_ext(status, names, stats.iterations,
                                              operator_name(stats.op), witness, reduct_text)
                      << "\n";
        }
        return exit_code_for(status);
    }
};

Operator parse_operator(const std::string& name) {
    auto op = operator_from_name(name);
    if (!op)
        throw CLI::ValidationError("--operator", "expected one of: exp, hcf, hef");
    return *op;
}

int cmd_find(const std::string& path, const std::string& op_name, const std::string& fallback,
             int fallback_max_atoms, bool quiet) {
    Theory theory = parse_theory(read_file(path));
    if (!theory.positive()) {
        std::cerr << "error: " << path
                  << " contains constraints; use `minmod positive-form` instead\n";
        return 1;
    }
    Operator    op  = parse_operator(op_name);
    IgeaOutcome out = find_minimal(theory, op);
    if (out.status == IgeaStatus::Failure && fallback == "exp") {
        if (static_cast<int>(atoms_of(theory).size()) <= fallback_max_atoms) {
            out = find_minimal(theory, Operator::Exp);
        } else {
            std::cerr << "note: fallback skipped, theory exceeds --fallback-max-atoms\n";
        }
    }
    Emit emit{quiet};
    return emit.result(out.status == IgeaStatus::Success ? "minimal" : "failure", theory,
                       out.model, out.stats);
}

int cmd_check(const std::string& path, const std::string& model_path, const std::string& op_name,
              bool always_witness, bool quiet) {
    Theory parsed = parse_theory(read_file(path));
    auto [theory, candidate] =
        resolve_interpretation(parsed, parse_atom_names(read_file(model_path)));
    Operator op = parse_operator(op_name);

    if (!is_model(theory, candidate)) {
        std::cerr << "error: the candidate interpretation is not a model\n";
        return 4;
    }
    CheckOutcome out = check_minimal(theory, candidate, op);
    Emit         emit{quiet};
    switch (out.kind) {
    case CheckOutcome::Kind::Minimal: {
        if (always_witness) {
            std::vector<std::string> names = theory.names_of(candidate);
            return emit.result("minimal", theory, candidate, out.stats, &names);
        }
        return emit.result("minimal", theory, candidate, out.stats);
    }
    case CheckOutcome::Kind::NotMinimal: {
        std::vector<std::string> witness = theory.names_of(out.witness);
        return emit.result("model", theory, candidate, out.stats, &witness);
    }
    case CheckOutcome::Kind::Unknown:
    default:
        return emit.result("unknown", theory, candidate, out.stats);
    }
}

int cmd_stable(const std::string& program_path, const std::string& model_path,
               const std::string& op_name, bool emit_reduct, bool quiet) {
    LogicProgram program = parse_program(read_file(program_path));
    Theory       shell(program.atoms, {});
    auto [extended, candidate] =
        resolve_interpretation(shell, parse_atom_names(read_file(model_path)));
    LogicProgram resolved(extended.atoms_ptr(), program.rules);
    Operator     op = parse_operator(op_name);

    if (!is_program_model(resolved, candidate)) {
        std::cerr << "error: the candidate interpretation does not satisfy the program\n";
        return 4;
    }
    Theory        red = reduct(resolved, candidate);
    StableOutcome out = check_stable(resolved, candidate, op);
    Emit          emit{quiet};

    std::string reduct_text;
    const std::string* reduct_ptr = nullptr;
    if (emit_reduct) {
        reduct_text = serialize_theory(red);
        reduct_ptr  = &reduct_text;
    }
    switch (out.kind) {
    case StableKind::Stable:
        return emit.result("minimal", red, candidate, out.stats, nullptr, reduct_ptr);
    case StableKind::NotStable: {
        std::vector<std::string> witness = red.names_of(out.witness);
        return emit.result("model", red, candidate, out.stats, &witness, reduct_ptr);
    }
    case StableKind::Unknown:
    default:
        return emit.result("unknown", red, candidate, out.stats, nullptr, reduct_ptr);
    }
}

int cmd_positive_form(const std::string& path, const std::string& op_name, bool emit_theory,
                      bool quiet) {
    Theory theory = parse_theory(read_file(path));
    Theory pf     = positive_form(theory);
    if (emit_theory)
        std::cerr << serialize_theory(pf);
    SolveOutcome out = solve_via_positive_form(theory, parse_operator(op_name));
    Emit         emit{quiet};
    switch (out.kind) {
    case SolveKind::Inconsistent:
        return emit.result("inconsistent", pf, {}, out.stats);
    case SolveKind::MinimalModel:
        return emit.result("minimal", pf, out.model, out.stats);
    case SolveKind::FailureModel:
    default:
        return emit.result("failure", pf, out.model, out.stats);
    }
}

int cmd_gen(const std::string& out_dir, int count, GenSpec spec, bool certify) {
    fs::create_directories(out_dir);
    for (int i = 0; i < count; ++i) {
        GenSpec file_spec = spec;
        file_spec.seed    = spec.seed + static_cast<uint64_t>(i);
        Theory theory     = generate_theory(file_spec);

        std::ostringstream name;
        name << "theory_" << file_spec.seed << ".cnft";
        std::ofstream out(fs::path(out_dir) / name.str(), std::ios::binary);
        out << "# seed=" << file_spec.seed << " atoms=" << file_spec.atoms
            << " clauses=" << file_spec.clauses << "\n";
        if (certify) {
            out << "# hcf=" << (is_hcf(theory) ? "true" : "false") << "\n";
            out << "# hef=" << (oracle::is_hef_oracle(theory) ? "true" : "false") << "\n";
        }
        out << serialize_theory(theory);
    }
    return 0;
}

int cmd_bench(const std::string& dir, const std::string& op_name) {
    Operator op = parse_operator(op_name);
    std::vector<fs::path> files;
    for (const auto& entry : fs::directory_iterator(dir))
        if (entry.is_regular_file() && entry.path().extension() == ".cnft")
            files.push_back(entry.path());
    std::sort(files.begin(), files.end());

    std::cout << "file,atoms,clauses,operator,status,iterations,micros\n";
    long   total_atoms = 0, total_clauses = 0, total_iters = 0, total_micros = 0;
    int    ok = 0;
    for (const fs::path& f : files) {
        try {
            Theory theory = parse_theory(read_file(f.string()));
            auto   t0     = std::chrono::steady_clock::now();
            IgeaOutcome out = find_minimal(theory, op);
            auto   t1     = std::chrono::steady_clock::now();
            long micros =
                std::chrono::duration_cast<std::chrono::microseconds>(t1 - t0).count();
            bool success = out.status == IgeaStatus::Success;
            std::cout << f.filename().string() << "," << atoms_of(theory).size() << ","
                      << theory.size() << "," << operator_name(op) << ","
                      << (success ? "minimal" : "failure") << "," << out.stats.iterations << ","
                      << micros << "\n";
            total_atoms += atoms_of(theory).size();
            total_clauses += theory.size();
            total_iters += out.stats.iterations;
            total_micros += micros;
            ok += success;
        } catch (const Error& e) {
            std::cout << f.filename().string() << ",0,0," << operator_name(op) << ",error,0,0\n";
            std::cerr << "error: " << f.string() << ": " << e.what() << "\n";
        }
    }
    std::cout << "summary," << total_atoms << "," << total_clauses << "," << operator_name(op)
              << ",success=" << ok << "/" << files.size() << "," << total_iters << ","
              << total_micros << "\n";
    return 0;
}

int cmd_graph(const std::string& path, bool emit_dot, bool elementary) {
    Theory theory = parse_theory(read_file(path));
    if (elementary) {
        ElementaryGraph eg = elementary_subgraph(theory, atoms_of(theory));
        if (emit_dot) {
            std::cout << to_dot(eg.graph, theory.atoms());
        } else {
            std::cout << "nodes=" << eg.graph.nodes.size() << " arcs=" << eg.graph.arcs.size()
                      << " sccs=" << eg.condensation.components.size()
                      << " rounds=" << eg.rounds.size()
                      << " strongly_connected=" << (eg.strongly_connected() ? "true" : "false")
                      << "\n";
        }
        return 0;
    }
    Digraph g = dependency_graph(theory);
    if (emit_dot) {
        std::cout << to_dot(g, theory.atoms());
    } else {
        Condensation cond = scc_condensation(g);
        std::cout << "nodes=" << g.nodes.size() << " arcs=" << g.arcs.size()
                  << " sccs=" << cond.components.size()
                  << " hcf=" << (is_hcf(theory) ? "true" : "false") << "\n";
    }
    return 0;
}

} // namespace

int main(int argc, char** argv) {
    CLI::App app{"minimal model computation, minimization and checking for CNF theories"};
    app.require_subcommand(1);

    std::string path, model_path, op_name = "hef", fallback, out_dir = ".";
    int         fallback_max_atoms = 20;
    bool        quiet = false, emit_reduct = false, emit_theory = false, emit_dot = false;
    bool        elementary = false, certify = false;
    int         count = 1;
    GenSpec     spec;

    auto* find = app.add_subcommand("find", "compute a minimal model of a positive theory");
    find->add_option("file", path)->required();
    find->add_option("--operator", op_name);
    find->add_option("--fallback", fallback)->check(CLI::IsMember({"exp"}));
    find->add_option("--fallback-max-atoms", fallback_max_atoms);
    find->add_flag("--quiet", quiet);

    auto* check = app.add_subcommand("check", "decide whether a model is minimal");
    check->add_option("file", path)->required();
    check->add_option("model", model_path)->required();
    check->add_option("--operator", op_name);
    check->add_flag("--quiet", quiet);

    auto* minimize = app.add_subcommand("minimize", "like check, always printing the witness");
    minimize->add_option("file", path)->required();
    minimize->add_option("model", model_path)->required();
    minimize->add_option("--operator", op_name);
    minimize->add_flag("--quiet", quiet);

    auto* stable = app.add_subcommand("stable", "stable-model check via the reduct");
    stable->add_option("program", path)->required();
    stable->add_option("model", model_path)->required();
    stable->add_option("--operator", op_name);
    stable->add_flag("--emit-reduct", emit_reduct);
    stable->add_flag("--quiet", quiet);

    auto* posform = app.add_subcommand("positive-form", "solve any CNF via its positive form");
    posform->add_option("file", path)->required();
    posform->add_option("--operator", op_name);
    posform->add_flag("--emit-theory", emit_theory);
    posform->add_flag("--quiet", quiet);

    auto* gen = app.add_subcommand("gen", "generate a seeded random corpus");
    gen->add_option("--out", out_dir);
    gen->add_option("--count", count);
    gen->add_option("--atoms", spec.atoms);
    gen->add_option("--clauses", spec.clauses);
    gen->add_option("--max-head", spec.max_head);
    gen->add_option("--max-body", spec.max_body);
    gen->add_option("--fact-prob", spec.fact_prob);
    gen->add_option("--seed", spec.seed);
    gen->add_flag("--certify", certify);

    auto* bench = app.add_subcommand("bench", "run find over a corpus, emit CSV");
    bench->add_option("dir", path)->required();
    bench->add_option("--operator", op_name);

    auto* graph = app.add_subcommand("graph", "dependency or elementary graph of a theory");
    graph->add_option("file", path)->required();
    graph->add_flag("--emit-dot", emit_dot);
    graph->add_flag("--elementary", elementary);

    CLI11_PARSE(app, argc, argv);

    try {
        if (find->parsed())
            return cmd_find(path, op_name, fallback, fallback_max_atoms, quiet);
        if (check->parsed())
            return cmd_check(path, model_path, op_name, false, quiet);
        if (minimize->parsed())
            return cmd_check(path, model_path, op_name, true, quiet);
        if (stable->parsed())
            return cmd_stable(path, model_path, op_name, emit_reduct, quiet);
        if (posform->parsed())
            return cmd_positive_form(path, op_name, emit_theory, quiet);
        if (gen->parsed())
            return cmd_gen(out_dir, count, spec, certify);
        if (bench->parsed())
            return cmd_bench(path, op_name);
        if (graph->parsed())
            return cmd_graph(path, emit_dot, elementary);
    } catch (const ParseError& e) {
        std::cerr << "parse error: " << e.what() << "\n";
        return 1;
    } catch (const NotAModel& e) {
        std::cerr << "error: " << e.what() << "\n";
        return 4;
    } catch (const NotAModelOfProgram& e) {
        std::cerr << "error: " << e.what() << "\n";
        return 4;
    } catch (const Error& e) {
        std::cerr << "error: " << e.what() << "\n";
        return 1;
    }
    return 1;
}
