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
#include <vector>

#include "sgr/linkgraph.hpp"

namespace sgr {

// One level of the fusion construction: the graph doubles, with the first
// half relabelled away from s and the second away from s+1, joined by
// bridges labelled s.
struct FusionStep {
    int s = 0;
    std::size_t half = 0;
};

// The sector graph built by fusion over the largest coordinate. 2^t
// vertices; the first recorded step is the outermost. Vertex ids are
// deterministic: ids below half form the copy avoiding label s.
LabeledGraph build_sgraph(const Sector& sec, std::vector<FusionStep>* steps = nullptr);

// The tree obtained by repeatedly shifting all labels up by one and hanging
// a new leaf with vertex and edge label 1 on every vertex. Labelled
// isomorphic to the sector graph of the increasing sector.
LabeledGraph build_increasing_tree(int t);

// Reverses all labels: vertex labels i to t+2-i, edge labels i to t+1-i.
// Attached functions are dualized, keys map to the dual classes, relation
// sets are recomputed from the dual keys.
LabeledGraph dual_graph(const LabeledGraph& g);

// A bijection of vertices preserving vertex labels, edges, and edge labels;
// result[v] is the image of vertex v of a in b.
std::optional<std::vector<int>> find_labeled_isomorphism(const LabeledGraph& a,
                                                         const LabeledGraph& b);

// Cheap invariant used to group graphs before attempting isomorphisms.
std::vector<std::uint64_t> isomorphism_signature(const LabeledGraph& g);

// Number of pairwise non-isomorphic sector graphs over all sectors.
std::size_t count_distinct_sgraphs(int t);

struct TheoremCheck {
    bool pass = false;
    std::string detail;
};

// The main comparison for one sector: the fusion graph and the sector
// subgraph of the class graph are labelled isomorphic, the functions
// propagated from the fusion graph's chain match the reading map values
// across the isomorphism, and the outermost fusion step obeys the bridge
// difference laws and the column support laws.
TheoremCheck verify_sector_graph(const LabeledGraph& class_graph, const Sector& sec);

}  // namespace sgr
