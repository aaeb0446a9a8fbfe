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

#include <minmod/oracle.hpp>

namespace minmod::oracle {

namespace {

// Calls fn(AtomSet) for every subset of pool, cardinality-ascending,
// lexicographic within a cardinality; stops when fn returns true.
template <typename Fn>
void for_each_subset_by_size(const std::vector<AtomId>& pool, std::size_t min_size,
                             std::size_t max_size, Fn&& fn) {
    const std::size_t n = pool.size();
    std::vector<std::size_t> pick;
    for (std::size_t k = min_size; k <= max_size && k <= n; ++k) {
        if (k == 0) {
            if (fn(AtomSet{}))
                return;
            continue;
        }
        pick.resize(k);
        for (std::size_t i = 0; i < k; ++i)
            pick[i] = i;
        while (true) {
            std::vector<AtomId> ids(k);
            for (std::size_t i = 0; i < k; ++i)
                ids[i] = pool[pick[i]];
            if (fn(AtomSet::from_sorted(std::move(ids))))
                return;
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
}

void check_budget(std::size_t atoms, int limit, const char* what) {
    if (atoms > static_cast<std::size_t>(limit))
        throw BudgetExceeded(std::string(what) + ": input exceeds the oracle budget");
}

} // namespace

std::vector<AtomSet> enumerate_minimal_models(const Theory& theory, const OracleBudget& budget) {
    AtomSet atoms = atoms_of(theory);
    check_budget(atoms.size(), budget.max_model_atoms, "enumerate_minimal_models");

    std::vector<AtomSet> found;
    for_each_subset_by_size(atoms.ids(), 0, atoms.size(), [&](AtomSet s) {
        for (const AtomSet& m : found)
            if (m.subset_of(s))
                return false; // dominated, skip
        if (is_model(theory, s))
            found.push_back(std::move(s));
        return false;
    });
    return found;
}

bool is_minimal_oracle(const Theory& theory, const AtomSet& model, const OracleBudget& budget) {
    check_budget(model.size(), budget.max_model_atoms, "is_minimal_oracle");
    if (!is_model(theory, model))
        throw NotAModel("is_minimal_oracle: the given interpretation is not a model");

    bool smaller = false;
    for_each_subset_by_size(model.ids(), 0, model.size() - (model.empty() ? 0 : 1),
                            [&](AtomSet s) {
                                if (s.size() < model.size() && is_model(theory, s)) {
                                    smaller = true;
                                    return true;
                                }
                                return false;
                            });
    return !smaller;
}

bool is_outbound(const AtomSet& z, const AtomSet& y, const Theory& theory) {
    if (!z.subset_of(y))
        throw PreconditionViolated("is_outbound: z must be a subset of y");
    AtomSet rest = y.minus(z);
    for (const Clause& c : theory.clauses()) {
        if (c.head.intersects(z) && c.body.intersects(rest) && !c.body.intersects(z) &&
            !c.head.intersects(rest))
            return true;
    }
    return false;
}

bool is_elementary_oracle(const AtomSet& y, const Theory& theory, const OracleBudget& budget) {
    if (y.empty())
        return false;
    check_budget(y.size(), budget.max_model_atoms, "is_elementary_oracle");
    bool all_outbound = true;
    for_each_subset_by_size(y.ids(), 1, y.size() - 1, [&](AtomSet z) {
        if (!is_outbound(z, y, theory)) {
            all_outbound = false;
            return true;
        }
        return false;
    });
    return all_outbound;
}

bool is_sel_oracle(const AtomSet& x, const Theory& theory, const OracleBudget& budget) {
    if (!is_elementary_oracle(x, theory, budget))
        return false;
    return !is_outbound(x, atoms_of(theory).union_with(x), theory);
}

bool is_hef_oracle(const Theory& theory, const OracleBudget& budget) {
    AtomSet atoms = atoms_of(theory);
    check_budget(atoms.size(), budget.max_hef_atoms, "is_hef_oracle");

    // Only sets holding two atoms of one head can witness non-HEF-ness.
    bool hef = true;
    for_each_subset_by_size(atoms.ids(), 2, atoms.size(), [&](AtomSet y) {
        if (!is_disjunctive_set(theory, y))
            return false;
        if (is_elementary_oracle(y, theory, budget)) {
            hef = false;
            return true;
        }
        return false;
    });
    return hef;
}

bool is_erasable_oracle(const AtomSet& e, const AtomSet& model, const Theory& theory) {
    if (e.empty() || !e.subset_of(model))
        throw PreconditionViolated("is_erasable_oracle: e must be a non-empty subset of model");
    return is_model(theory, model.minus(e));
}

} // namespace minmod::oracle
