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

#include <cstdint>

namespace minmod {

// splitmix64; self-contained so that identical seeds give identical
// theories on every platform and standard library.
struct SplitMix64 {
    uint64_t state;

    explicit SplitMix64(uint64_t seed) : state(seed) {}

    uint64_t next() {
        uint64_t z = (state += 0x9e3779b97f4a7c15ULL);
        z          = (z ^ (z >> 30)) * 0xbf58476d1ce4e5b9ULL;
        z          = (z ^ (z >> 27)) * 0x94d049bb133111ebULL;
        return z ^ (z >> 31);
    }

    // uniform in [0, n)
    uint64_t below(uint64_t n) { return n ? next() % n : 0; }

    double unit() { return static_cast<double>(next() >> 11) * 0x1.0p-53; }
};

// Identical GenSpec => identical theory, byte for byte once serialized.
struct GenSpec {
    int      atoms     = 5;
    int      clauses   = 6;
    int      max_head  = 2;
    int      max_body  = 2;
    double   fact_prob = 0.2;
    uint64_t seed      = 0;
};

// Random positive theory over atoms x0..x{n-1}.
Theory generate_theory(const GenSpec& spec);

// Scalable HEF family: disjoint two-atom gadgets {p|q <-, q <- p}, one
// elimination step per atom. `atoms` is rounded up to the next even count.
Theory hef_chain_family(int atoms);

} // namespace minmod
