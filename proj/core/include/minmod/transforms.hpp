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

#pragma once

#include <minmod/core.hpp>
#include <minmod/elimination.hpp>

#include <string_view>

namespace minmod {

// Sentinel atom of the positive-form transform; rejected in input.
inline constexpr std::string_view kPhiAtom = "_phi";

// ------------------------------------------------------------------ programs

// Rule with positive head, positive body and negative body ('not' literals).
struct Rule {
    AtomSet head;
    AtomSet body;
    AtomSet neg_body;

    friend bool operator==(const Rule&, const Rule&) = default;
};

struct LogicProgram {
    std::shared_ptr<const AtomTable> atoms;
    std::vector<Rule>                rules;

    LogicProgram() : atoms(std::make_shared<AtomTable>()) {}
    LogicProgram(std::shared_ptr<const AtomTable> a, std::vector<Rule> r)
        : atoms(std::move(a)), rules(std::move(r)) {}
};

// Answer-set satisfaction: head true, or positive body false, or some
// negative-body atom in the interpretation.
bool is_program_model(const LogicProgram& program, const AtomSet& interp);

// ------------------------------------------------------------------ positive form

// Copies non-constraint clauses, turns each constraint <-B into _phi<-B and
// adds a<-_phi for every atom. The result is positive.
Theory positive_form(const Theory& theory);

enum class SolveKind { Inconsistent, MinimalModel, FailureModel };

struct SolveOutcome {
    SolveKind kind;
    AtomSet   model;
    RunStats  stats;
};

// find_minimal on the positive form; _phi in a certified-minimal result
// signals inconsistency, an uncertified failure is reported as such.
SolveOutcome solve_via_positive_form(const Theory& theory, Operator op);

// ------------------------------------------------------------------ stable models

// Drops rules blocked by the model, strips the remaining negative bodies.
Theory reduct(const LogicProgram& program, const AtomSet& model);

enum class StableKind { Stable, NotStable, Unknown };

struct StableOutcome {
    StableKind kind;
    AtomSet    witness; // smaller reduct model when NotStable
    RunStats   stats;
};

StableOutcome check_stable(const LogicProgram& program, const AtomSet& model, Operator op);

} // namespace minmod
