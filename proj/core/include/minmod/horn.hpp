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
#include <utility>
#include <vector>

namespace minmod {

// Order in which unit propagation fired clauses and derived atoms.
// Each atom is derived at most once; each fired clause had its body
// fully derived earlier.
struct PropagationTrace {
    std::vector<std::pair<std::size_t, AtomId>> fired; // (clause index, derived atom)
};

// Least fixpoint of unit propagation over a positive Horn theory, via
// body-remaining counters and a worklist; linear in total theory size.
// Throws NonHornInput on disjunctive clauses or constraints.
AtomSet horn_minimal_model(const Theory& theory, PropagationTrace* trace = nullptr);

// Unique minimal model of Pi^nd_{M<-}; contained in every model of a
// positive theory that is contained in `model`. Validates that `model`
// is a model of `theory`.
AtomSet steady_set(const Theory& theory, const AtomSet& model);

// Same computation without the model check; the elimination loops call
// this on intermediate sets that a misbehaving operator may have broken.
AtomSet steady_set_unchecked(const Theory& theory, const AtomSet& model);

} // namespace minmod
