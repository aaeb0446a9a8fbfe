#include "helpers.hpp"

#include <minmod/core.hpp>
#include <minmod/oracle.hpp>

#include <doctest.h>

#include <algorithm>

using namespace minmod;
using testutil::S;
using testutil::T;

TEST_CASE("atom sets are canonical") {
    AtomSet a({3, 1, 2, 1});
    CHECK(a.ids() == std::vector<AtomId>{1, 2, 3});
    CHECK(a == AtomSet({2, 3, 1}));
    CHECK(a.contains(2));
    CHECK(!a.contains(4));
    CHECK(AtomSet({1}).proper_subset_of(a));
    CHECK(!a.proper_subset_of(a));
    CHECK(a.minus(AtomSet({2})) == AtomSet({1, 3}));
    CHECK(a.intersect(AtomSet({2, 5})) == AtomSet({2}));
    CHECK(a.union_with(AtomSet({0, 5})) == AtomSet({0, 1, 2, 3, 5}));
}

TEST_CASE("interning is bijective per theory") {
    Theory t = T("a <- b.\nb <- a.\n");
    CHECK(t.atoms().size() == 2);
    CHECK(t.atoms().find("a").has_value());
    CHECK(*t.atoms().find("a") == *t.atoms().find("a"));
    CHECK(t.atoms().name(*t.atoms().find("b")) == "b");
}

TEST_CASE("clause classification derives from head and body") {
    Theory t = T("a | b <- c.\nd <- e.\nf.\n<- g.\n");
    CHECK(t.clauses()[0].is_disjunctive());
    CHECK(t.clauses()[1].is_horn());
    CHECK(t.clauses()[2].is_fact());
    CHECK(t.clauses()[2].is_horn());
    CHECK(t.clauses()[3].is_constraint());
    CHECK(!t.clauses()[3].is_horn());
    CHECK(!t.clauses()[3].is_disjunctive());
    CHECK(!t.positive());
    CHECK(T("a <- b.").positive());
}

TEST_CASE("atoms_of") {
    Theory hef_ex = testutil::load_theory("hef_example.cnft");
    CHECK(atoms_of(hef_ex) == S(hef_ex, {"a", "b", "c", "d", "e", "f", "g", "h", "i", "j"}));
    CHECK(atoms_of(Theory{}) == AtomSet{});
    Theory t = T("a <- b.");
    CHECK(atoms_of(t) == S(t, {"a", "b"}));
}

TEST_CASE("is_model") {
    Theory hef_ex = testutil::load_theory("hef_example.cnft");
    CHECK(is_model(hef_ex, S(hef_ex, {"h", "j"})));
    CHECK(is_model(hef_ex, atoms_of(hef_ex)));

    Theory p = testutil::load_theory("nonhef_p.cnft");
    CHECK(!is_model(p, S(p, {"a"})));

    // empty theory has exactly one model worth its name: the empty set
    CHECK(is_model(Theory{}, AtomSet{}));
}

TEST_CASE("positive theories: the full atom set is a model, fresh atoms never hurt") {
    for (uint64_t seed = 0; seed < 200; ++seed) {
        Theory t = testutil::random_theory(seed, 5, 6);
        REQUIRE(t.positive());
        AtomSet all = atoms_of(t);
        CHECK(is_model(t, all));
        // atoms outside the theory are permitted and change nothing
        AtomId fresh = static_cast<AtomId>(t.atoms().size() + 5);
        testutil::for_each_subset(all, [&](AtomSet m) {
            CHECK(is_model(t, m.union_with(AtomSet({fresh}))) == is_model(t, m));
        });
    }
}

TEST_CASE("is_model invariant under clause permutation and atom renaming") {
    for (uint64_t seed = 0; seed < 100; ++seed) {
        Theory t = testutil::random_theory(seed, 5, 6);

        std::vector<Clause> reversed(t.clauses().rbegin(), t.clauses().rend());
        Theory permuted(t.atoms_ptr(), std::move(reversed));

        // rename atom i -> i with a shifted table (ids reversed)
        auto renamed_table = std::make_shared<AtomTable>();
        std::vector<AtomId> map(t.atoms().size());
        for (std::size_t i = 0; i < t.atoms().size(); ++i)
            map[t.atoms().size() - 1 - i] = renamed_table->intern("r" + std::to_string(i));
        auto rename_set = [&](const AtomSet& s) {
            std::vector<AtomId> ids;
            for (AtomId a : s)
                ids.push_back(map[a]);
            return AtomSet(std::move(ids));
        };
        std::vector<Clause> renamed_clauses;
        for (const Clause& c : t.clauses())
            renamed_clauses.push_back(Clause{rename_set(c.head), rename_set(c.body)});
        Theory renamed(std::move(renamed_table), std::move(renamed_clauses));

        testutil::for_each_subset(atoms_of(t), [&](const AtomSet& m) {
            bool expected = is_model(t, m);
            CHECK(is_model(permuted, m) == expected);
            CHECK(is_model(renamed, rename_set(m)) == expected);
        });
    }
}

TEST_CASE("project_theory: head-only projection of the reduct") {
    Theory red = testutil::load_theory("stable_example_reduct.cnft");
    Theory projected = project_theory(red, S(red, {"a", "d"}), ProjectionMode::HeadOnly);
    Theory expected  = T("d <-.\na <- c.\na <-.\n");
    REQUIRE(projected.size() == 3);
    CHECK(serialize_theory(projected) == serialize_theory(expected));
}

TEST_CASE("project_theory: horn fragment of hef_ex drops the two disjunctive facts") {
    Theory hef_ex = testutil::load_theory("hef_example.cnft");
    Theory horn = project_theory(hef_ex, atoms_of(hef_ex), ProjectionMode::HornFragment);
    CHECK(horn.size() == hef_ex.size() - 2);
    for (const Clause& c : horn.clauses())
        CHECK(c.head.size() == 1);
}

TEST_CASE("project_theory: empty projection set erases everything") {
    Theory hef_ex = testutil::load_theory("hef_example.cnft");
    CHECK(project_theory(hef_ex, AtomSet{}, ProjectionMode::HeadAndBody).empty());
}

TEST_CASE("project_theory is idempotent per mode") {
    for (uint64_t seed = 0; seed < 100; ++seed) {
        Theory  t = testutil::random_theory(seed, 6, 7);
        AtomSet x = atoms_of(t).minus(AtomSet({0, 3}));
        for (auto mode : {ProjectionMode::HeadAndBody, ProjectionMode::HeadOnly,
                          ProjectionMode::HornFragment}) {
            Theory once  = project_theory(t, x, mode);
            Theory twice = project_theory(once, x, mode);
            CHECK(once == twice);
        }
    }
}

TEST_CASE("remove_constraints") {
    Theory cnf_ex = testutil::load_theory("posform_example.cnft");
    Theory cut  = remove_constraints(cnf_ex);
    CHECK(cut.size() == cnf_ex.size() - 1);
    CHECK(cut.positive());

    Theory pos = T("a <- b.\nc.\n");
    CHECK(remove_constraints(pos) == pos);
    CHECK(remove_constraints(T("<- a.\n<- b, c.\n")).empty());
}

TEST_CASE("is_disjunctive_set") {
    Theory red = testutil::load_theory("stable_example_reduct.cnft");
    CHECK(is_disjunctive_set(red, S(red, {"a", "b", "c"})));

    Theory horn = T("a <- b.\nb <- c.\nc.\n");
    CHECK(!is_disjunctive_set(horn, atoms_of(horn)));

    Theory hef_ex = testutil::load_theory("hef_example.cnft");
    CHECK(is_disjunctive_set(hef_ex, S(hef_ex, {"g", "j"})));
    CHECK(!is_disjunctive_set(hef_ex, S(hef_ex, {"g", "h"})));
}

TEST_CASE("tautological clauses are legal and always true") {
    Theory t = T("a <- a, b.\n");
    testutil::for_each_subset(atoms_of(t), [&](const AtomSet& m) { CHECK(is_model(t, m)); });
}

TEST_CASE("duplicate clauses are retained") {
    Theory t = T("a <- b.\na <- b.\n");
    CHECK(t.size() == 2);
}
