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

#include <cstddef>
#include <optional>
#include <string_view>
#include <vector>

namespace minmod {

enum class Operator { Exp, Hcf, Hef };

std::string_view        operator_name(Operator op);
std::optional<Operator> operator_from_name(std::string_view name);

// The value of (Pi complement M) projected onto M \ S: the clauses that
// could still be falsified by shrinking the model, over the carrier of
// still-disposable atoms. Contains no facts and is positive.
struct SimplifiedTheory {
    Theory                   theory;
    AtomSet                  carrier; // M \ S
    AtomSet                  steady;  // S
    std::vector<std::size_t> origin;  // per clause, index of its source in the input
};

SimplifiedTheory simplified_theory(const Theory& theory, const AtomSet& model);

// Shrinks X = atoms(Pi) by last-level components of the elementary
// subgraph of Pi^nd_X until the graph is strongly connected. On HEF
// input the result is a sel set; it is always non-empty. Requires
// atoms(Pi) = atoms(Pi^nd) and a non-empty theory.
AtomSet find_sel_set(const Theory& theory, std::vector<AtomSet>* removals = nullptr);

// Fallible eliminating operator: erasable on HEF theories, always a
// subset of M \ S, non-empty whenever the steady set is not a model.
AtomSet xi_hef(const Theory& theory, const AtomSet& model);

// Eliminating operator for positive HCF theories. Throws NotHcf / NotAModel.
AtomSet xi_hcf(const Theory& theory, const AtomSet& model);

// Exponential reference operator: lexicographically first erasable set of
// minimum cardinality, or empty when the model is minimal.
AtomSet xi_exp(const Theory& theory, const AtomSet& model);

AtomSet apply_operator(Operator op, const Theory& theory, const AtomSet& model);

} // namespace minmod
