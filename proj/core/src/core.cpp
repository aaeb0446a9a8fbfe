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

#include <minmod/core.hpp>

#include <algorithm>

namespace minmod {

// ------------------------------------------------------------------ AtomSet

AtomSet::AtomSet(std::vector<AtomId> ids) : ids_(std::move(ids)) {
    std::sort(ids_.begin(), ids_.end());
    ids_.erase(std::unique(ids_.begin(), ids_.end()), ids_.end());
}

AtomSet AtomSet::from_sorted(std::vector<AtomId> ids) {
    AtomSet s;
    s.ids_ = std::move(ids);
    return s;
}

bool AtomSet::contains(AtomId a) const {
    return std::binary_search(ids_.begin(), ids_.end(), a);
}

bool AtomSet::subset_of(const AtomSet& other) const {
    return std::includes(other.ids_.begin(), other.ids_.end(), ids_.begin(), ids_.end());
}

bool AtomSet::proper_subset_of(const AtomSet& other) const {
    return size() < other.size() && subset_of(other);
}

bool AtomSet::intersects(const AtomSet& other) const {
    auto a = ids_.begin();
    auto b = other.ids_.begin();
    while (a != ids_.end() && b != other.ids_.end()) {
        if (*a < *b)
            ++a;
        else if (*b < *a)
            ++b;
        else
            return true;
    }
    return false;
}

AtomSet AtomSet::union_with(const AtomSet& other) const {
    std::vector<AtomId> out;
    out.reserve(size() + other.size());
    std::set_union(ids_.begin(), ids_.end(), other.ids_.begin(), other.ids_.end(),
                   std::back_inserter(out));
    return from_sorted(std::move(out));
}

AtomSet AtomSet::intersect(const AtomSet& other) const {
    std::vector<AtomId> out;
    std::set_intersection(ids_.begin(), ids_.end(), other.ids_.begin(), other.ids_.end(),
                          std::back_inserter(out));
    return from_sorted(std::move(out));
}

AtomSet AtomSet::minus(const AtomSet& other) const {
    std::vector<AtomId> out;
    std::set_difference(ids_.begin(), ids_.end(), other.ids_.begin(), other.ids_.end(),
                        std::back_inserter(out));
    return from_sorted(std::move(out));
}

void AtomSet::insert(AtomId a) {
    auto it = std::lower_bound(ids_.begin(), ids_.end(), a);
    if (it == ids_.end() || *it != a)
        ids_.insert(it, a);
}

AtomId AtomSet::min_id() const {
    if (ids_.empty())
        throw Error("min_id of empty atom set");
    return ids_.front();
}

// ------------------------------------------------------------------ AtomTable

AtomId AtomTable::intern(std::string_view name) {
    auto it = ids_.find(std::string(name));
    if (it != ids_.end())
        return it->second;
    AtomId id = static_cast<AtomId>(names_.size());
    names_.emplace_back(name);
    ids_.emplace(names_.back(), id);
    return id;
}

std::optional<AtomId> AtomTable::find(std::string_view name) const {
    auto it = ids_.find(std::string(name));
    if (it == ids_.end())
        return std::nullopt;
    return it->second;
}

const std::string& AtomTable::name(AtomId id) const {
    return names_.at(id);
}

// ------------------------------------------------------------------ Theory

Theory::Theory() : atoms_(std::make_shared<AtomTable>()) {}

Theory::Theory(std::shared_ptr<const AtomTable> atoms, std::vector<Clause> clauses)
    : atoms_(std::move(atoms)), clauses_(std::move(clauses)) {}

bool Theory::positive() const {
    return std::none_of(clauses_.begin(), clauses_.end(),
                        [](const Clause& c) { return c.is_constraint(); });
}

AtomSet Theory::set_of(std::initializer_list<std::string_view> names) const {
    std::vector<AtomId> ids;
    ids.reserve(names.size());
    for (auto n : names) {
        auto id = atoms_->find(n);
        if (!id)
            throw Error("unknown atom: " + std::string(n));
        ids.push_back(*id);
    }
    return AtomSet(std::move(ids));
}

std::vector<std::string> Theory::names_of(const AtomSet& set) const {
    std::vector<std::string> out;
    out.reserve(set.size());
    for (AtomId a : set)
        out.push_back(atoms_->name(a));
    std::sort(out.begin(), out.end());
    return out;
}

// ------------------------------------------------------------------ operations

AtomSet atoms_of(const Theory& theory) {
    AtomSet out;
    for (const Clause& c : theory.clauses()) {
        out = out.union_with(c.head);
        out = out.union_with(c.body);
    }
    return out;
}

bool is_model(const Theory& theory, const AtomSet& interp) {
    for (const Clause& c : theory.clauses()) {
        if (c.body.subset_of(interp) && !c.head.intersects(interp))
            return false;
    }
    return true;
}

Theory project_theory(const Theory& theory, const AtomSet& x, ProjectionMode mode) {
    std::vector<Clause> out;
    for (const Clause& c : theory.clauses()) {
        switch (mode) {
        case ProjectionMode::HeadAndBody: {
            AtomSet h = c.head.intersect(x);
            if (!h.empty())
                out.push_back(Clause{std::move(h), c.body.intersect(x)});
            break;
        }
        case ProjectionMode::HeadOnly: {
            AtomSet h = c.head.intersect(x);
            if (!h.empty())
                out.push_back(Clause{std::move(h), c.body});
            break;
        }
        case ProjectionMode::HornFragment:
            if (c.head.size() == 1)
                out.push_back(c);
            break;
        }
    }
    return Theory(theory.atoms_ptr(), std::move(out));
}

Theory remove_constraints(const Theory& theory) {
    std::vector<Clause> out;
    out.reserve(theory.size());
    for (const Clause& c : theory.clauses())
        if (!c.is_constraint())
            out.push_back(c);
    return Theory(theory.atoms_ptr(), std::move(out));
}

bool is_disjunctive_set(const Theory& theory, const AtomSet& s) {
    for (const Clause& c : theory.clauses())
        if (c.head.intersect(s).size() > 1)
            return true;
    return false;
}

} // namespace minmod
