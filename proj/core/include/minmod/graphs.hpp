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

#include <string>
#include <utility>
#include <vector>

namespace minmod {

using Arc = std::pair<AtomId, AtomId>;

struct Digraph {
    AtomSet          nodes;
    std::vector<Arc> arcs; // sorted, duplicate-free, endpoints within nodes

    bool has_arc(AtomId from, AtomId to) const;
};

// Maximal SCCs of a digraph (Tarjan, nodes visited in ascending atom id)
// with a level map: level(C) = 1 + max level over predecessors, then every
// sink component is raised to the global maximum, so the last level is
// exactly the set of components without outgoing inter-component arcs.
struct Condensation {
    std::vector<AtomSet> components;
    std::vector<int>     levels;  // parallel to components
    std::vector<bool>    sink;    // parallel to components
    int                  max_level = 0;

    std::size_t component_index(AtomId a) const; // a must be a node
    std::vector<std::size_t> last_level() const;
    // Deterministic choice: the last-level component containing the
    // smallest atom id.
    const AtomSet& pick_last_level_component() const;
    bool strongly_connected() const { return components.size() == 1; }
};

Condensation scc_condensation(const Digraph& g);

// Nodes are the atoms of the theory; arc (m,n) iff some clause H<-B has
// m in B and n in H.
Digraph dependency_graph(const Theory& theory);

// True iff no SCC of the dependency graph contains two atoms of one head.
bool is_hcf(const Theory& theory);

// Fixpoint graph of the round procedure on Pi^nd_x. A clause fires when
// its projected body is non-empty and lies inside a single SCC of the
// current graph; clauses whose body projects away are consumed without
// contributing arcs. rounds records the arc sets G_0 .. G_k.
struct ElementaryGraph {
    Digraph                       graph;
    Condensation                  condensation;
    std::vector<std::vector<Arc>> rounds;

    bool strongly_connected() const { return condensation.strongly_connected(); }
};

ElementaryGraph elementary_subgraph(const Theory& theory, const AtomSet& x);

// X is elementary for a non-disjunctive theory iff its elementary subgraph
// is strongly connected. Throws NonHornInput on disjunctive clauses.
bool is_elementary_via_graph(const Theory& theory, const AtomSet& x);

std::string to_dot(const Digraph& g, const AtomTable& atoms);

} // namespace minmod
