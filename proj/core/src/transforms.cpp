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

#include <minmod/transforms.hpp>

#include <cassert>

namespace minmod {

bool is_program_model(const LogicProgram& program, const AtomSet& interp) {
    for (const Rule& r : program.rules) {
        if (r.head.intersects(interp))
            continue;
        if (!r.body.subset_of(interp))
            continue;
        if (r.neg_body.intersects(interp))
            continue;
        return false;
    }
    return true;
}

Theory positive_form(const Theory& theory) {
    AtomSet used = atoms_of(theory);
    if (auto phi = theory.atoms().find(kPhiAtom); phi && used.contains(*phi))
        throw ReservedAtomPresent("positive_form: input already uses _phi");

    auto table = std::make_shared<AtomTable>();
    for (AtomId a = 0; a < theory.atoms().size(); ++a)
        table->intern(theory.atoms().name(a)); // ids preserved
    AtomId phi = table->intern(kPhiAtom);

    std::vector<Clause> out;
    for (const Clause& c : theory.clauses())
        if (!c.is_constraint())
            out.push_back(c);
    for (const Clause& c : theory.clauses())
        if (c.is_constraint())
            out.push_back(Clause{AtomSet({phi}), c.body});
    for (AtomId a : used)
        out.push_back(Clause{AtomSet({a}), AtomSet({phi})});

    return Theory(std::move(table), std::move(out));
}

SolveOutcome solve_via_positive_form(const Theory& theory, Operator op) {
    Theory      pf  = positive_form(theory);
    IgeaOutcome out = find_minimal(pf, op);
    AtomId      phi = *pf.atoms().find(kPhiAtom);

    bool has_phi = out.model.contains(phi);
    if (out.status == IgeaStatus::Success && has_phi)
        return {SolveKind::Inconsistent, std::move(out.model), std::move(out.stats)};
    if (out.status == IgeaStatus::Success)
        return {SolveKind::MinimalModel, std::move(out.model), std::move(out.stats)};
    // Uncertified: without phi the set is still a model of the input theory,
    // with phi not even that; never claim inconsistency here.
    return {SolveKind::FailureModel, std::move(out.model), std::move(out.stats)};
}

Theory reduct(const LogicProgram& program, const AtomSet& model) {
    std::vector<Clause> out;
    for (const Rule& r : program.rules) {
        if (r.neg_body.intersects(model))
            continue;
        out.push_back(Clause{r.head, r.body});
    }
    return Theory(program.atoms, std::move(out));
}

StableOutcome check_stable(const LogicProgram& program, const AtomSet& model, Operator op) {
    if (!is_program_model(program, model))
        throw NotAModelOfProgram("check_stable: the candidate does not satisfy the program");

    Theory red = reduct(program, model);
    // A model of the program is always a model of its own reduct.
    if (!is_model(red, model))
        throw Error("check_stable: reduct invariant violated");

    CheckOutcome out = check_minimal(red, model, op);
    switch (out.kind) {
    case CheckOutcome::Kind::Minimal:
        return {StableKind::Stable, {}, std::move(out.stats)};
    case CheckOutcome::Kind::NotMinimal:
        return {StableKind::NotStable, std::move(out.witness), std::move(out.stats)};
    case CheckOutcome::Kind::Unknown:
    default:
        return {StableKind::Unknown, {}, std::move(out.stats)};
    }
}

} // namespace minmod
