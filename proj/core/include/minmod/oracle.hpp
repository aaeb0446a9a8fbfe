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

#include <vector>

namespace minmod::oracle {

// Definition-level exponential algorithms: the ground truth every
// polynomial-time claim is tested against. Budgets make the exponential
// cost explicit; exceeding one is an error, never an approximation.
struct OracleBudget {
    int max_model_atoms = 14; // subset enumeration over atoms / model
    int max_hef_atoms   = 10; // HEF recognition
};

// All subset-minimal models, by cardinality-ascending enumeration with
// superset pruning.
std::vector<AtomSet> enumerate_minimal_models(const Theory& theory,
                                              const OracleBudget& budget = {});

bool is_minimal_oracle(const Theory& theory, const AtomSet& model,
                       const OracleBudget& budget = {});

// The four separation conditions of an outbound subset z of y.
bool is_outbound(const AtomSet& z, const AtomSet& y, const Theory& theory);

// Every non-empty proper subset of y is outbound in y.
bool is_elementary_oracle(const AtomSet& y, const Theory& theory,
                          const OracleBudget& budget = {});

// Elementary for the theory and non-outbound in its atom set.
bool is_sel_oracle(const AtomSet& x, const Theory& theory, const OracleBudget& budget = {});

// No atom set is both disjunctive and elementary.
bool is_hef_oracle(const Theory& theory, const OracleBudget& budget = {});

bool is_erasable_oracle(const AtomSet& e, const AtomSet& model, const Theory& theory);

} // namespace minmod::oracle
