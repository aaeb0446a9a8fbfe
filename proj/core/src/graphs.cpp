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

#include <minmod/graphs.hpp>

#include <algorithm>
#include <cassert>
#include <sstream>
#include <unordered_map>

namespace minmod {

bool Digraph::has_arc(AtomId from, AtomId to) const {
    return std::binary_search(arcs.begin(), arcs.end(), Arc{from, to});
}

namespace {

void sort_unique(std::vector<Arc>& arcs) {
    std::sort(arcs.begin(), arcs.end());
    arcs.erase(std::unique(arcs.begin(), arcs.end()), arcs.end());
}

// Iterative Tarjan over node indices 0..n-1.
struct Tarjan {
    const std::vector<std::vector<int>>& adj;
    std::vector<int>                     index, low, comp;
    std::vector<bool>                    on_stack;
    std::vector<int>                     stack;
    int                                  next_index = 0;
    int                                  n_comps    = 0;
    std::vector<std::vector<int>>        members;

    explicit Tarjan(const std::vector<std::vector<int>>& a)
        : adj(a), index(a.size(), -1), low(a.size(), 0), comp(a.size(), -1),
          on_stack(a.size(), false) {}

    void run(int root) {
        // explicit DFS frames: (node, next child position)
        std::vector<std::pair<int, std::size_t>> frames;
        frames.emplace_back(root, 0);
        index[root] = low[root] = next_index++;
        stack.push_back(root);
        on_stack[root] = true;
        while (!frames.empty()) {
            auto& [v, child] = frames.back();
            if (child < adj[v].size()) {
                int w = adj[v][child++];
                if (index[w] == -1) {
                    index[w] = low[w] = next_index++;
                    stack.push_back(w);
                    on_stack[w] = true;
                    frames.emplace_back(w, 0);
                } else if (on_stack[w]) {
                    low[v] = std::min(low[v], index[w]);
                }
            } else {
                if (low[v] == index[v]) {
                    members.emplace_back();
                    int w;
                    do {
                        w = stack.back();
                        stack.pop_back();
                        on_stack[w] = false;
                        comp[w]     = n_comps;
                        members.back().push_back(w);
                    } while (w != v);
                    ++n_comps;
                }
                int finished = v;
                frames.pop_back();
                if (!frames.empty())
                    low[frames.back().first] =
                        std::min(low[frames.back().first], low[finished]);
            }
        }
    }
};

} // namespace

Condensation scc_condensation(const Digraph& g) {
    const auto& node_ids = g.nodes.ids();
    const int   n        = static_cast<int>(node_ids.size());

    std::unordered_map<AtomId, int> pos;
    pos.reserve(n);
    for (int i = 0; i < n; ++i)
        pos.emplace(node_ids[i], i);

    std::vector<std::vector<int>> adj(n);
    for (const Arc& a : g.arcs)
        adj[pos.at(a.first)].push_back(pos.at(a.second));

    Tarjan t(adj);
    for (int i = 0; i < n; ++i)
        if (t.index[i] == -1)
            t.run(i);

    Condensation out;
    out.components.resize(t.n_comps);
    for (int c = 0; c < t.n_comps; ++c) {
        std::vector<AtomId> ids;
        ids.reserve(t.members[c].size());
        for (int i : t.members[c])
            ids.push_back(node_ids[i]);
        out.components[c] = AtomSet(std::move(ids));
    }

    // Tarjan emits components in reverse topological order: an arc between
    // distinct components always goes from a later-emitted one to an
    // earlier-emitted one. Longest-path levels follow in one backward scan.
    std::vector<std::vector<int>> succ(t.n_comps);
    out.sink.assign(t.n_comps, true);
    for (const Arc& a : g.arcs) {
        int cu = t.comp[pos.at(a.first)];
        int cv = t.comp[pos.at(a.second)];
        if (cu != cv) {
            succ[cu].push_back(cv);
            out.sink[cu] = false;
        }
    }

    // Reverse completion order is topological, so one pass pushes longest-path
    // levels from predecessors to successors.
    out.levels.assign(t.n_comps, 1);
    for (int c = t.n_comps - 1; c >= 0; --c) {
        for (int s : succ[c])
            out.levels[s] = std::max(out.levels[s], out.levels[c] + 1);
    }
    out.max_level = 1;
    for (int c = 0; c < t.n_comps; ++c)
        out.max_level = std::max(out.max_level, out.levels[c]);
    for (int c = 0; c < t.n_comps; ++c)
        if (out.sink[c])
            out.levels[c] = out.max_level;

    return out;
}

std::size_t Condensation::component_index(AtomId a) const {
    for (std::size_t i = 0; i < components.size(); ++i)
        if (components[i].contains(a))
            return i;
    throw Error("component_index: atom is not a node of the graph");
}

std::vector<std::size_t> Condensation::last_level() const {
    std::vector<std::size_t> out;
    for (std::size_t i = 0; i < components.size(); ++i)
        if (levels[i] == max_level)
            out.push_back(i);
    return out;
}

const AtomSet& Condensation::pick_last_level_component() const {
    const AtomSet* best = nullptr;
    for (std::size_t i : last_level()) {
        if (!best || components[i].min_id() < best->min_id())
            best = &components[i];
    }
    if (!best)
        throw Error("pick_last_level_component: empty condensation");
    return *best;
}

Digraph dependency_graph(const Theory& theory) {
    Digraph g;
    g.nodes = atoms_of(theory);
    for (const Clause& c : theory.clauses())
        for (AtomId b : c.body)
            for (AtomId h : c.head)
                g.arcs.emplace_back(b, h);
    sort_unique(g.arcs);
    return g;
}

bool is_hcf(const Theory& theory) {
    Condensation cond = scc_condensation(dependency_graph(theory));
    for (const Clause& c : theory.clauses()) {
        if (!c.is_disjunctive())
            continue;
        for (const AtomSet& comp : cond.components)
            if (c.head.intersect(comp).size() > 1)
                return false;
    }
    return true;
}

ElementaryGraph elementary_subgraph(const Theory& theory, const AtomSet& x) {
    Theory projected = project_theory(theory, x, ProjectionMode::HeadAndBody);
    Theory horn      = project_theory(projected, x, ProjectionMode::HornFragment);

    ElementaryGraph eg;
    eg.graph.nodes = x;
    eg.rounds.push_back({}); // G_0 has no arcs

    std::vector<const Clause*> remaining;
    remaining.reserve(horn.size());
    for (const Clause& c : horn.clauses())
        remaining.push_back(&c);

    while (!remaining.empty()) {
        Condensation cond = scc_condensation(eg.graph);

        std::vector<const Clause*> rest;
        std::vector<Arc>           new_arcs;
        for (const Clause* c : remaining) {
            bool fires;
            if (c->body.empty()) {
                fires = true; // projected-away body: consumed, contributes nothing
            } else {
                std::size_t comp = cond.component_index(c->body.ids().front());
                fires            = c->body.subset_of(cond.components[comp]);
            }
            if (fires) {
                AtomId h = c->head.ids().front();
                for (AtomId b : c->body)
                    new_arcs.emplace_back(b, h);
            } else {
                rest.push_back(c);
            }
        }
        if (rest.size() == remaining.size())
            break;
        remaining.swap(rest);

        std::vector<Arc> merged = eg.graph.arcs;
        merged.insert(merged.end(), new_arcs.begin(), new_arcs.end());
        sort_unique(merged);
        eg.graph.arcs = std::move(merged);
        eg.rounds.push_back(eg.graph.arcs);
    }

    eg.condensation = scc_condensation(eg.graph);
    return eg;
}

bool is_elementary_via_graph(const Theory& theory, const AtomSet& x) {
    for (const Clause& c : theory.clauses())
        if (c.is_disjunctive())
            throw NonHornInput("is_elementary_via_graph: disjunctive clause in input");
    if (x.empty())
        return false;
    return elementary_subgraph(theory, x).strongly_connected();
}

std::string to_dot(const Digraph& g, const AtomTable& atoms) {
    std::ostringstream os;
    os << "digraph g {\n";
    for (AtomId n : g.nodes)
        os << "  " << atoms.name(n) << ";\n";
    for (const Arc& a : g.arcs)
        os << "  " << atoms.name(a.first) << " -> " << atoms.name(a.second) << ";\n";
    os << "}\n";
    return os.str();
}

} // namespace minmod
