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

#include <minmod/gen.hpp>

#include <string>

namespace minmod {

Theory generate_theory(const GenSpec& spec) {
    SplitMix64 rng(spec.seed);
    auto       table = std::make_shared<AtomTable>();
    std::vector<AtomId> ids;
    ids.reserve(spec.atoms);
    for (int i = 0; i < spec.atoms; ++i)
        ids.push_back(table->intern("x" + std::to_string(i)));

    auto draw_distinct = [&](int count) {
        AtomSet s;
        for (int i = 0; i < count; ++i)
            s.insert(ids[rng.below(ids.size())]);
        return s;
    };

    std::vector<Clause> clauses;
    clauses.reserve(spec.clauses);
    for (int i = 0; i < spec.clauses; ++i) {
        if (rng.unit() < spec.fact_prob) {
            clauses.push_back(Clause{draw_distinct(1), {}});
            continue;
        }
        int head_n = 1 + static_cast<int>(rng.below(spec.max_head));
        int body_n = static_cast<int>(rng.below(spec.max_body + 1));
        clauses.push_back(Clause{draw_distinct(head_n), draw_distinct(body_n)});
    }
    return Theory(std::move(table), std::move(clauses));
}

Theory hef_chain_family(int atoms) {
    auto                table = std::make_shared<AtomTable>();
    std::vector<Clause> clauses;
    int gadgets = (atoms + 1) / 2;
    for (int k = 0; k < gadgets; ++k) {
        AtomId p = table->intern("p" + std::to_string(k));
        AtomId q = table->intern("q" + std::to_string(k));
        clauses.push_back(Clause{AtomSet({p, q}), {}});
        clauses.push_back(Clause{AtomSet({q}), AtomSet({p})});
    }
    return Theory(std::move(table), std::move(clauses));
}

} // namespace minmod
