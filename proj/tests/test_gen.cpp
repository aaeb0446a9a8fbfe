#include "helpers.hpp"

#include <minmod/gen.hpp>
#include <minmod/graphs.hpp>
#include <minmod/oracle.hpp>

#include <doctest.h>

using namespace minmod;

TEST_CASE("identical spec, identical theory") {
    GenSpec spec;
    spec.atoms   = 7;
    spec.clauses = 9;
    spec.seed    = 42;
    Theory a = generate_theory(spec);
    Theory b = generate_theory(spec);
    CHECK(serialize_theory(a) == serialize_theory(b));

    spec.seed = 43;
    CHECK(serialize_theory(a) != serialize_theory(generate_theory(spec)));
}

TEST_CASE("generated theories honour the requested bounds and stay positive") {
    for (uint64_t seed = 0; seed < 200; ++seed) {
        GenSpec spec;
        spec.atoms    = 3 + seed % 8;
        spec.clauses  = 1 + seed % 10;
        spec.max_head = 2;
        spec.max_body = 3;
        spec.seed     = seed;
        Theory t = generate_theory(spec);
        CHECK(t.size() == static_cast<std::size_t>(spec.clauses));
        CHECK(t.positive());
        for (const Clause& c : t.clauses()) {
            CHECK(c.head.size() >= 1);
            CHECK(c.head.size() <= static_cast<std::size_t>(spec.max_head));
            CHECK(c.body.size() <= static_cast<std::size_t>(spec.max_body));
        }
    }
}

TEST_CASE("hef chain family is head-cycle-free, hence HEF") {
    Theory t10 = hef_chain_family(10);
    CHECK(atoms_of(t10).size() == 10);
    CHECK(is_hcf(t10));
    CHECK(oracle::is_hef_oracle(t10));
}
