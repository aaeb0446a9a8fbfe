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

#include <minmod/elimination.hpp>
#include <minmod/gen.hpp>
#include <minmod/graphs.hpp>
#include <minmod/horn.hpp>
#include <minmod/io.hpp>

#include <benchmark/benchmark.h>

using namespace minmod;

namespace {

Theory random_theory(uint64_t seed, int atoms, int clauses) {
    GenSpec spec;
    spec.atoms     = atoms;
    spec.clauses   = clauses;
    spec.max_head  = 2;
    spec.max_body  = 3;
    spec.fact_prob = 0.15;
    spec.seed      = seed;
    return generate_theory(spec);
}

void BM_horn_propagation(benchmark::State& state) {
    GenSpec spec;
    spec.atoms     = static_cast<int>(state.range(0));
    spec.clauses   = spec.atoms * 4;
    spec.max_head  = 1;
    spec.max_body  = 3;
    spec.fact_prob = 0.1;
    spec.seed      = 11;
    Theory t = generate_theory(spec);
    for (auto _ : state)
        benchmark::DoNotOptimize(horn_minimal_model(t));
}
BENCHMARK(BM_horn_propagation)->Arg(100)->Arg(1000)->Arg(10000);

void BM_scc_condensation(benchmark::State& state) {
    Theory  t = random_theory(5, static_cast<int>(state.range(0)), state.range(0) * 3);
    Digraph g = dependency_graph(t);
    for (auto _ : state)
        benchmark::DoNotOptimize(scc_condensation(g));
}
BENCHMARK(BM_scc_condensation)->Arg(100)->Arg(1000);

void BM_igea_hef_family(benchmark::State& state) {
    Theory family = hef_chain_family(static_cast<int>(state.range(0)));
    for (auto _ : state) {
        IgeaOutcome out = igea(family, Operator::Hef);
        benchmark::DoNotOptimize(out);
    }
    state.SetComplexityN(state.range(0));
}
BENCHMARK(BM_igea_hef_family)->RangeMultiplier(2)->Range(16, 256)->Complexity();

void BM_igea_random(benchmark::State& state) {
    Theory t = random_theory(17, static_cast<int>(state.range(0)), state.range(0) * 2);
    for (auto _ : state) {
        IgeaOutcome out = igea(t, Operator::Hef);
        benchmark::DoNotOptimize(out);
    }
}
BENCHMARK(BM_igea_random)->Arg(20)->Arg(50)->Arg(100);

void BM_parse_fig1_style(benchmark::State& state) {
    Theory      t    = hef_chain_family(static_cast<int>(state.range(0)));
    std::string text = serialize_theory(t);
    for (auto _ : state)
        benchmark::DoNotOptimize(parse_theory(text));
}
BENCHMARK(BM_parse_fig1_style)->Arg(100)->Arg(1000);

} // namespace

BENCHMARK_MAIN();
