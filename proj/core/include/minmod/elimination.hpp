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
#include <minmod/operators.hpp>

#include <utility>
#include <vector>

namespace minmod {

struct RunStats {
    int                  iterations    = 0; // loop passes including the final exit
    int                  removed_total = 0;
    Operator             op            = Operator::Hef;
    std::vector<AtomSet> removed;           // per-iteration eliminated sets
};

enum class IgeaStatus { Success, Failure };

struct IgeaOutcome {
    IgeaStatus status;
    AtomSet    model; // Success: minimal model; Failure: last model that held
    RunStats   stats;
};

// Unguarded shrinking loop: compute the steady set, exit early when it is
// a model, otherwise eliminate. The operator's output is not checked, so
// with xi_hef on non-HEF input the result may be non-minimal or not a model.
std::pair<AtomSet, RunStats> gea(const Theory& theory, const AtomSet& model, Operator op);

// Guarded variant seeded with all head atoms; requires a positive theory.
// Failure is declared the moment an elimination would break the model.
IgeaOutcome igea(const Theory& theory, Operator op);

// The same guarded loop from a caller-supplied start model.
IgeaOutcome igea_from(const Theory& theory, const AtomSet& model, Operator op);

struct CheckOutcome {
    enum class Kind { Minimal, NotMinimal, Unknown };
    Kind     kind;
    AtomSet  witness; // smaller model when NotMinimal
    RunStats stats;
};

// Minimal iff the guarded loop returns the model unchanged; a strict
// sub-model is reported as witness; Failure maps to Unknown (never with
// op Exp, never on HEF theories with op Hef).
CheckOutcome check_minimal(const Theory& theory, const AtomSet& model, Operator op);

// igea over a positive theory: Success carries a minimal model.
IgeaOutcome find_minimal(const Theory& theory, Operator op);

} // namespace minmod
