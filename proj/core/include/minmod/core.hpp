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

#include <cstdint>
#include <memory>
#include <optional>
#include <stdexcept>
#include <string>
#include <string_view>
#include <unordered_map>
#include <vector>

namespace minmod {

using AtomId = uint32_t;

// ------------------------------------------------------------------ errors

struct Error : std::runtime_error {
    using std::runtime_error::runtime_error;
};

struct NotAModel : Error {
    using Error::Error;
};
struct NonHornInput : Error {
    using Error::Error;
};
struct NonPositiveInput : Error {
    using Error::Error;
};
struct NotHcf : Error {
    using Error::Error;
};
struct PreconditionViolated : Error {
    using Error::Error;
};
struct ReservedAtomPresent : Error {
    using Error::Error;
};
struct NotAModelOfProgram : Error {
    using Error::Error;
};
struct BudgetExceeded : Error {
    using Error::Error;
};

// ------------------------------------------------------------------ AtomSet

// Canonical sorted duplicate-free sequence of atom ids. Doubles as
// interpretation, model, steady set, erasable set and sel set.
class AtomSet {
  public:
    AtomSet() = default;
    explicit AtomSet(std::vector<AtomId> ids);

    static AtomSet from_sorted(std::vector<AtomId> ids);

    bool        empty() const { return ids_.empty(); }
    std::size_t size() const { return ids_.size(); }
    bool        contains(AtomId a) const;
    bool        subset_of(const AtomSet& other) const;
    bool        proper_subset_of(const AtomSet& other) const;
    bool        intersects(const AtomSet& other) const;

    AtomSet union_with(const AtomSet& other) const;
    AtomSet intersect(const AtomSet& other) const;
    AtomSet minus(const AtomSet& other) const;

    void insert(AtomId a);

    const std::vector<AtomId>& ids() const { return ids_; }
    auto begin() const { return ids_.begin(); }
    auto end() const { return ids_.end(); }

    AtomId min_id() const;

    friend bool operator==(const AtomSet&, const AtomSet&) = default;
    friend auto operator<=>(const AtomSet& a, const AtomSet& b) { return a.ids_ <=> b.ids_; }

  private:
    std::vector<AtomId> ids_;
};

// ------------------------------------------------------------------ AtomTable

// Bijective name <-> id interner. Ids are dense and assigned in order of
// first occurrence, which fixes every deterministic tie-break downstream.
class AtomTable {
  public:
    AtomId                intern(std::string_view name);
    std::optional<AtomId> find(std::string_view name) const;
    const std::string&    name(AtomId id) const;
    std::size_t           size() const { return names_.size(); }

  private:
    std::vector<std::string>                names_;
    std::unordered_map<std::string, AtomId> ids_;
};

// ------------------------------------------------------------------ Clause

// H <- B with head and body duplicate-free atom sets. Tautologies
// (head intersecting body) are legal and always true.
struct Clause {
    AtomSet head;
    AtomSet body;

    bool is_constraint() const { return head.empty(); }
    bool is_fact() const { return head.size() == 1 && body.empty(); }
    bool is_horn() const { return head.size() == 1; }
    bool is_disjunctive() const { return head.size() > 1; }

    friend bool operator==(const Clause&, const Clause&) = default;
};

// ------------------------------------------------------------------ Theory

// An ordered collection of clauses over interned atoms. Clause order is
// preserved from input; derived theories share the interner.
class Theory {
  public:
    Theory();
    Theory(std::shared_ptr<const AtomTable> atoms, std::vector<Clause> clauses);

    const std::vector<Clause>&             clauses() const { return clauses_; }
    const AtomTable&                       atoms() const { return *atoms_; }
    const std::shared_ptr<const AtomTable>& atoms_ptr() const { return atoms_; }

    std::size_t size() const { return clauses_.size(); }
    bool        empty() const { return clauses_.empty(); }
    bool        positive() const;

    // Resolves names to an AtomSet; unknown names are an error.
    AtomSet set_of(std::initializer_list<std::string_view> names) const;
    std::vector<std::string> names_of(const AtomSet& set) const;

    friend bool operator==(const Theory& a, const Theory& b) { return a.clauses_ == b.clauses_; }

  private:
    std::shared_ptr<const AtomTable> atoms_;
    std::vector<Clause>              clauses_;
};

enum class ProjectionMode {
    HeadAndBody,  // Pi_X: H&X <- B&X, dropped when the head projects away
    HeadOnly,     // Pi_{X<-}: H&X <- B, dropped when the head projects away
    HornFragment, // Pi^nd: keep |H| == 1 clauses only (the set argument is unused)
};

// ------------------------------------------------------------------ operations

AtomSet atoms_of(const Theory& theory);

// True iff every clause has a true head atom in interp or a false body atom.
bool is_model(const Theory& theory, const AtomSet& interp);

Theory project_theory(const Theory& theory, const AtomSet& x, ProjectionMode mode);

Theory remove_constraints(const Theory& theory);

// True iff some clause head meets s in more than one atom.
bool is_disjunctive_set(const Theory& theory, const AtomSet& s);

} // namespace minmod
