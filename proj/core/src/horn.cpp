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

#include <minmod/horn.hpp>

#include <algorithm>

namespace minmod {

// Pebble-marking unit propagation: a counter of unsatisfied body atoms per
// clause and, per atom, the list of clause bodies it occurs in. Every atom
// enters the queue at most once and every clause counter is decremented at
// most |body| times, so the fixpoint costs O(total theory size).
AtomSet horn_minimal_model(const Theory& theory, PropagationTrace* trace) {
    const auto& clauses = theory.clauses();
    for (std::size_t i = 0; i < clauses.size(); ++i) {
        if (clauses[i].head.size() != 1)
            throw NonHornInput(clauses[i].head.empty()
                                   ? "horn_minimal_model: constraint in input"
                                   : "horn_minimal_model: disjunctive clause in input");
    }

    std::size_t max_id = 0;
    for (const Clause& c : clauses) {
        if (!c.head.empty())
            max_id = std::max<std::size_t>(max_id, c.head.ids().back());
        if (!c.body.empty())
            max_id = std::max<std::size_t>(max_id, c.body.ids().back());
    }

    std::vector<std::size_t>              remaining(clauses.size());
    std::vector<std::vector<std::size_t>> watchers(max_id + 1);
    std::vector<bool>                     derived(max_id + 1, false);
    std::vector<AtomId>                   queue;

    for (std::size_t i = 0; i < clauses.size(); ++i) {
        remaining[i] = clauses[i].body.size();
        for (AtomId a : clauses[i].body)
            watchers[a].push_back(i);
    }

    auto fire = [&](std::size_t clause_idx) {
        AtomId h = clauses[clause_idx].head.ids().front();
        if (!derived[h]) {
            derived[h] = true;
            queue.push_back(h);
            if (trace)
                trace->fired.emplace_back(clause_idx, h);
        }
    };

    for (std::size_t i = 0; i < clauses.size(); ++i)
        if (remaining[i] == 0)
            fire(i);

    for (std::size_t qi = 0; qi < queue.size(); ++qi) {
        for (std::size_t ci : watchers[queue[qi]]) {
            if (--remaining[ci] == 0)
                fire(ci);
        }
    }

    std::sort(queue.begin(), queue.end());
    return AtomSet::from_sorted(std::move(queue));
}

AtomSet steady_set_unchecked(const Theory& theory, const AtomSet& model) {
    Theory head_projected = project_theory(theory, model, ProjectionMode::HeadOnly);
    Theory horn           = project_theory(head_projected, model, ProjectionMode::HornFragment);
    return horn_minimal_model(horn);
}

AtomSet steady_set(const Theory& theory, const AtomSet& model) {
    if (!is_model(theory, model))
        throw NotAModel("steady_set: the given interpretation is not a model");
    return steady_set_unchecked(theory, model);
}

} // namespace minmod
