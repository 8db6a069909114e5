// Copyright 2026 the sgraphs authors
//
// Licensed under the Apache License, Version 2.0 (the "License");
// you may not use this file except in compliance with the License.
// You may obtain a copy of the License at
//
//     http://www.apache.org/licenses/LICENSE-2.0
//
// Unless required by applicable law or agreed to in writing, software
// distributed under the License is distributed on an "AS IS" BASIS,
// WITHOUT WARRANTIES OR CONDITIONS OF ANY KIND, either express or implied.
// See the License for the specific language governing permissions and
// limitations under the License.

#pragma once

#include <optional>
#include <string>
#include <tuple>
#include <vector>

#include "sgr/funcspace.hpp"

namespace sgr {

// An undirected simple graph with vertex labels in 1..t+1 and edge labels in
// 1..t. Class graphs additionally carry the class key, the value of the
// reading map and the relation set of each vertex.
struct LabeledGraph {
    int t = 0;
    std::vector<int> vlabel;
    std::vector<std::vector<std::pair<int, int>>> adj;  // (neighbour, edge label)
    std::vector<std::tuple<int, int, int>> edges;       // (u, v, label), u < v

    std::vector<ClassKey> keys;       // empty when the graph carries no classes
    std::vector<LinForm> fns;         // empty when no functions are attached
    std::vector<RelationSet> rels;    // empty when no relation sets are attached

    int size() const { return static_cast<int>(vlabel.size()); }
    bool has_keys() const { return !keys.empty(); }
    bool has_fns() const { return !fns.empty(); }

    // Adds an undirected edge; duplicate pairs must repeat the same label and
    // collapse to one edge. Call finalize() when done.
    void add_edge(int u, int v, int label);
    void finalize();

    std::vector<int> neighbours_by_label(int v, int label) const;
};

// The graph of all equivalence classes for size t: one vertex per class,
// one edge per single block link. Vertices are sorted by canonical diagram,
// so ids are stable across runs.
LabeledGraph build_class_graph(int t, int jobs = 0);

// The subgraph induced on the classes whose relation set lifts to the
// sector's total order.
LabeledGraph sector_subgraph(const LabeledGraph& full, const Sector& sec);

// A pointed chain: vertices v_{t+1}, ..., v_1 with vlabel(v_j) = j and the
// edge from v_{j+1} to v_j labelled j. pointed_chain requires uniqueness.
std::vector<std::vector<int>> pointed_chains(const LabeledGraph& g);
std::vector<int> pointed_chain(const LabeledGraph& g);

// Functions reconstructed from the graph alone: the head of the pointed
// chain carries the ground function, and each edge transports it by the
// edge difference law. Requires a connected graph with a unique chain.
std::vector<LinForm> propagated_fns(const LabeledGraph& g);

// Three consecutive edges whose outer labels agree: vertices (a, b, c, d)
// with edges (a,b) and (c,d) labelled `outer` and (b,c) labelled `mid`.
// Stored once per orientation.
struct Triad {
    int a = 0, b = 0, c = 0, d = 0;
    int outer = 0, mid = 0;
};

std::vector<Triad> find_triads(const LabeledGraph& g);

// The relations c_outer < c_mid collected over all triads.
RelationSet triad_order(const LabeledGraph& g);

// A path whose edge labels strictly increase in the sector's order, from a
// given vertex to any vertex with the requested label. Breadth first, so a
// shortest such path, deterministic. Returns the vertex sequence.
std::optional<std::vector<int>> ordered_path(const LabeledGraph& g, const Sector& sec,
                                             int from, int to_label);

struct PropertyCheck {
    std::string name;
    bool pass = false;
    std::string detail;  // first counterexample or a short note
};

struct PropertyReport {
    std::vector<PropertyCheck> checks;
    bool all_pass() const;
};

// The ten structural properties of a sector graph:
//  1 edge endpoints carry distinct vertex labels
//  2 edges at one vertex carry distinct labels
//  3 edge difference law f_u - f_v = c_label (r^{i_u} - r^{i_v})
//  4 exactly one pointed chain, whose head carries the ground function
//  5 connected
//  6 triads: i_a = i_d and f_a - f_d = (c_mid - c_outer)(r^{i_b} - r^{i_c})
//  7 from every vertex an ordered path to every vertex label
//  8 the m^{i_v} row of f_v vanishes
//  9 the functions are pairwise distinct
// 10 on every simple path between equal labels k avoiding k inside, the
//    first and last edge labels agree (so path sums do not involve r^k)
PropertyReport check_properties(const LabeledGraph& g, const Sector& sec);

}  // namespace sgr
