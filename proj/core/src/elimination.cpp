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

#include <minmod/horn.hpp>

namespace minmod {

namespace {

void note_removed(RunStats& stats, const AtomSet& e) {
    stats.removed_total += static_cast<int>(e.size());
    stats.removed.push_back(e);
}

// Guarded shrinking loop shared by igea and igea_from. The caller has
// already established that `m` is a model of the positive theory.
IgeaOutcome guarded_loop(const Theory& theory, AtomSet m, Operator op) {
    RunStats stats;
    stats.op = op;
    while (true) {
        ++stats.iterations;
        AtomSet steady = steady_set_unchecked(theory, m);
        if (is_model(theory, steady))
            return {IgeaStatus::Success, std::move(steady), std::move(stats)};
        AtomSet e = apply_operator(op, theory, m);
        if (e.empty())
            return {IgeaStatus::Success, std::move(m), std::move(stats)};
        AtomSet next = m.minus(e);
        if (!is_model(theory, next))
            return {IgeaStatus::Failure, std::move(m), std::move(stats)};
        note_removed(stats, e);
        m = std::move(next);
    }
}

} // namespace

std::pair<AtomSet, RunStats> gea(const Theory& theory, const AtomSet& model, Operator op) {
    if (!is_model(theory, model))
        throw NotAModel("gea: the given interpretation is not a model");
    Theory   positive = remove_constraints(theory);
    AtomSet  m        = model;
    RunStats stats;
    stats.op = op;
    while (true) {
        ++stats.iterations;
        AtomSet steady = steady_set_unchecked(positive, m);
        if (is_model(positive, steady))
            return {std::move(steady), std::move(stats)};
        AtomSet e = apply_operator(op, positive, m);
        if (e.empty())
            return {std::move(m), std::move(stats)};
        note_removed(stats, e);
        m = m.minus(e);
    }
}

IgeaOutcome igea(const Theory& theory, Operator op) {
    if (!theory.positive())
        throw NonPositiveInput("igea: constraints in input");
    AtomSet heads;
    for (const Clause& c : theory.clauses())
        heads = heads.union_with(c.head);
    return guarded_loop(theory, std::move(heads), op);
}

IgeaOutcome igea_from(const Theory& theory, const AtomSet& model, Operator op) {
    if (!is_model(theory, model))
        throw NotAModel("igea_from: the given interpretation is not a model");
    // Constraints stay satisfied in every subset of a model; drop them so
    // the loop runs on a positive theory, as the elimination machinery assumes.
    return guarded_loop(remove_constraints(theory), model, op);
}

CheckOutcome check_minimal(const Theory& theory, const AtomSet& model, Operator op) {
    IgeaOutcome out = igea_from(theory, model, op);
    if (out.status == IgeaStatus::Failure)
        return {CheckOutcome::Kind::Unknown, {}, std::move(out.stats)};
    if (out.model == model)
        return {CheckOutcome::Kind::Minimal, {}, std::move(out.stats)};
    return {CheckOutcome::Kind::NotMinimal, std::move(out.model), std::move(out.stats)};
}

IgeaOutcome find_minimal(const Theory& theory, Operator op) {
    return igea(theory, op);
}

} // namespace minmod
