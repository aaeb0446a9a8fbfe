#pragma once

#include <minmod/gen.hpp>
#include <minmod/io.hpp>

#include <fstream>
#include <sstream>
#include <string>
#include <vector>

namespace testutil {

inline minmod::Theory T(std::string_view text) {
    return minmod::parse_theory(text);
}

inline minmod::AtomSet S(const minmod::Theory& t,
                         std::initializer_list<std::string_view> names) {
    return t.set_of(names);
}

inline std::string read_file(const std::string& path) {
    std::ifstream in(path, std::ios::binary);
    std::ostringstream os;
    os << in.rdbuf();
    return os.str();
}

inline minmod::Theory load_theory(const std::string& name) {
    return minmod::parse_theory(read_file(std::string(MINMOD_DATA_DIR) + "/" + name));
}

inline minmod::LogicProgram load_program(const std::string& name) {
    return minmod::parse_program(read_file(std::string(MINMOD_DATA_DIR) + "/" + name));
}

// Random positive theory; head size 1..2, body size 0..2 over n atoms.
inline minmod::Theory random_theory(uint64_t seed, int atoms, int clauses) {
    minmod::GenSpec spec;
    spec.atoms     = atoms;
    spec.clauses   = clauses;
    spec.max_head  = 2;
    spec.max_body  = 2;
    spec.fact_prob = 0.2;
    spec.seed      = seed;
    return minmod::generate_theory(spec);
}

// A fixed pool of clauses over a shared atom table; exhaustive sweeps draw
// all subsets of bounded size from it.
struct ClauseUniverse {
    minmod::Theory base; // all pool clauses as one theory

    explicit ClauseUniverse(const std::string& clause_text) : base(T(clause_text)) {}

    std::size_t size() const { return base.size(); }

    minmod::Theory pick(const std::vector<std::size_t>& indices) const {
        std::vector<minmod::Clause> clauses;
        clauses.reserve(indices.size());
        for (std::size_t i : indices)
            clauses.push_back(base.clauses()[i]);
        return minmod::Theory(base.atoms_ptr(), std::move(clauses));
    }

    // fn(theory) over every subset of the pool with size in [1, max_clauses]
    template <typename Fn>
    void for_each_theory(std::size_t max_clauses, Fn&& fn) const {
        const std::size_t n = size();
        std::vector<std::size_t> pick_ix;
        for (std::size_t k = 1; k <= max_clauses && k <= n; ++k) {
            pick_ix.resize(k);
            for (std::size_t i = 0; i < k; ++i)
                pick_ix[i] = i;
            while (true) {
                fn(pick(pick_ix));
                std::size_t i = k;
                while (i > 0 && pick_ix[i - 1] == n - k + i - 1)
                    --i;
                if (i == 0)
                    break;
                ++pick_ix[i - 1];
                for (std::size_t j = i; j < k; ++j)
                    pick_ix[j] = pick_ix[j - 1] + 1;
            }
        }
    }
};

// fn(subset) over every subset of the given set (including empty and full).
template <typename Fn>
void for_each_subset(const minmod::AtomSet& set, Fn&& fn) {
    const auto& ids = set.ids();
    const std::size_t n = ids.size();
    for (std::size_t mask = 0; mask < (std::size_t{1} << n); ++mask) {
        std::vector<minmod::AtomId> picked;
        for (std::size_t i = 0; i < n; ++i)
            if (mask & (std::size_t{1} << i))
                picked.push_back(ids[i]);
        fn(minmod::AtomSet::from_sorted(std::move(picked)));
    }
}

} // namespace testutil
