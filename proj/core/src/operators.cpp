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

#include <minmod/operators.hpp>

#include <minmod/graphs.hpp>
#include <minmod/horn.hpp>

#include <cassert>

namespace minmod {

std::string_view operator_name(Operator op) {
    switch (op) {
    case Operator::Exp: return "exp";
    case Operator::Hcf: return "hcf";
    case Operator::Hef: return "hef";
    }
    return "?";
}

std::optional<Operator> operator_from_name(std::string_view name) {
    if (name == "exp")
        return Operator::Exp;
    if (name == "hcf")
        return Operator::Hcf;
    if (name == "hef")
        return Operator::Hef;
    return std::nullopt;
}

SimplifiedTheory simplified_theory(const Theory& theory, const AtomSet& model) {
    AtomSet steady  = steady_set_unchecked(theory, model);
    AtomSet carrier = model.minus(steady);

    const auto&         clauses = theory.clauses();
    std::vector<Clause> kept;
    std::vector<std::size_t> origin;
    for (std::size_t i = 0; i < clauses.size(); ++i) {
        const Clause& c = clauses[i];
        if (c.head.intersects(steady) || !c.body.subset_of(model))
            continue;
        AtomSet h = c.head.intersect(carrier);
        if (h.empty())
            continue;
        kept.push_back(Clause{std::move(h), c.body.intersect(carrier)});
        origin.push_back(i);
    }

    SimplifiedTheory out{Theory(theory.atoms_ptr(), std::move(kept)), std::move(carrier),
                         std::move(steady), std::move(origin)};
    for (const Clause& c : out.theory.clauses()) {
        if (c.is_fact() || c.is_constraint())
            throw Error("simplified_theory: construction produced a fact or constraint");
    }
    return out;
}

AtomSet find_sel_set(const Theory& theory, std::vector<AtomSet>* removals) {
    if (theory.empty())
        throw PreconditionViolated("find_sel_set: empty theory");
    AtomSet all  = atoms_of(theory);
    AtomSet horn = atoms_of(project_theory(theory, all, ProjectionMode::HornFragment));
    if (!(all == horn))
        throw PreconditionViolated("find_sel_set: atoms(theory) != atoms(theory^nd)");

    AtomSet x = all;
    while (true) {
        ElementaryGraph eg = elementary_subgraph(theory, x);
        if (eg.strongly_connected())
            return x;
        const AtomSet& component = eg.condensation.pick_last_level_component();
        if (removals)
            removals->push_back(component);
        x = x.minus(component);
    }
}

AtomSet xi_hef(const Theory& theory, const AtomSet& model) {
    // Worthless-atom loop of the operator figure: first drop everything the
    // simplified theory never mentions, then single atoms outside its Horn
    // fragment, until the two atom sets agree with the carrier.
    AtomSet m = model;
    AtomSet accumulated;
    SimplifiedTheory simp = simplified_theory(theory, m);
    while (true) {
        AtomSet delta;
        AtomSet simp_atoms = atoms_of(simp.theory);
        if (simp_atoms.proper_subset_of(simp.carrier)) {
            delta = simp.carrier.minus(simp_atoms);
        } else {
            AtomSet horn_atoms = atoms_of(
                project_theory(simp.theory, simp.carrier, ProjectionMode::HornFragment));
            if (horn_atoms.proper_subset_of(simp.carrier)) {
                delta = AtomSet({simp.carrier.minus(horn_atoms).min_id()});
            }
        }
        if (delta.empty())
            break;
        accumulated = accumulated.union_with(delta);
        m           = m.minus(delta);
        simp        = simplified_theory(theory, m);
    }

    AtomSet tail;
    if (!is_disjunctive_set(simp.theory, simp.carrier)) {
        tail = simp.carrier; // non-disjunctive: empty set is its minimal model
    } else {
        tail = find_sel_set(simp.theory);
    }
    return accumulated.union_with(tail);
}

AtomSet xi_hcf(const Theory& theory, const AtomSet& model) {
    if (!is_hcf(theory))
        throw NotHcf("xi_hcf: theory is not head-cycle-free");
    if (!is_model(theory, model))
        throw NotAModel("xi_hcf: the given interpretation is not a model");

    SimplifiedTheory simp = simplified_theory(theory, model);
    if (is_model(theory, simp.steady))
        return model.minus(simp.steady); // empty exactly when the model is minimal

    AtomSet worthless = simp.carrier.minus(atoms_of(simp.theory));
    if (!worthless.empty())
        return worthless;

    // A source component of the simplified theory's dependency graph is
    // erasable: any clause it could falsify would either put an arc into
    // the component or concentrate a disjunctive head inside one SCC,
    // which head-cycle-freeness rules out.
    Digraph           g    = dependency_graph(simp.theory);
    Condensation      cond = scc_condensation(g);
    std::vector<bool> has_incoming(cond.components.size(), false);
    for (const Arc& arc : g.arcs) {
        std::size_t cu = cond.component_index(arc.first);
        std::size_t cv = cond.component_index(arc.second);
        if (cu != cv)
            has_incoming[cv] = true;
    }
    const AtomSet* best = nullptr;
    for (std::size_t i = 0; i < cond.components.size(); ++i) {
        if (!has_incoming[i] && (!best || cond.components[i].min_id() < best->min_id()))
            best = &cond.components[i];
    }
    assert(best != nullptr);
    return *best;
}

AtomSet xi_exp(const Theory& theory, const AtomSet& model) {
    if (!is_model(theory, model))
        throw NotAModel("xi_exp: the given interpretation is not a model");

    // Erasable sets never meet the steady set, so enumerate within M \ S
    // by cardinality, lexicographic within each cardinality.
    AtomSet steady     = steady_set_unchecked(theory, model);
    AtomSet candidates = model.minus(steady);
    const std::vector<AtomId>& pool = candidates.ids();
    const std::size_t          n    = pool.size();

    std::vector<std::size_t> pick;
    for (std::size_t k = 1; k <= n; ++k) {
        pick.resize(k);
        for (std::size_t i = 0; i < k; ++i)
            pick[i] = i;
        while (true) {
            std::vector<AtomId> ids(k);
            for (std::size_t i = 0; i < k; ++i)
                ids[i] = pool[pick[i]];
            AtomSet e = AtomSet::from_sorted(std::move(ids));
            if (is_model(theory, model.minus(e)))
                return e;
            // next combination
            std::size_t i = k;
            while (i > 0 && pick[i - 1] == n - k + i - 1)
                --i;
            if (i == 0)
                break;
            ++pick[i - 1];
            for (std::size_t j = i; j < k; ++j)
                pick[j] = pick[j - 1] + 1;
        }
    }
    return {};
}

AtomSet apply_operator(Operator op, const Theory& theory, const AtomSet& model) {
    switch (op) {
    case Operator::Exp: return xi_exp(theory, model);
    case Operator::Hcf: return xi_hcf(theory, model);
    case Operator::Hef: return xi_hef(theory, model);
    }
    throw Error("apply_operator: unknown operator");
}

} // namespace minmod
