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

#include <string>
#include <vector>

#include "sgr/linkgraph.hpp"

namespace sgr {

// A walk through the class graph whose edge labels strictly increase in the
// sector's order. Such a walk witnesses that the difference of the reading
// map values at its ends is a combination, nonnegative on the sector, of
// the differences r^k - r^u against the final vertex label k.
struct SCertificate {
    Sector sector;
    std::vector<ClassKey> path;     // visited classes, path[0] is the start
    std::vector<int> edge_labels;   // one per step

    const ClassKey& start() const { return path.front(); }
    const ClassKey& target() const { return path.back(); }
};

// Checks a certificate from scratch: consecutive classes are linked with the
// recorded labels, labels strictly increase in sector order, and the
// difference of reading map values telescopes into the rearranged form with
// coefficients nonnegative on the sector. On failure, fills `why` when given.
bool verify_certificate(const SCertificate& cert, std::string* why = nullptr);

// The rearranged difference: f_target - f_start as a sum over path steps of
// (c_{l_j} - c_{l_{j-1}}) (r^k - r^{u_{j-1}}), with l_0 = 0, k the target
// vertex label and u the vertex labels. Returned as the formal r sum.
RSum rearranged_difference(const SCertificate& cert);

// Finds a certificate from a class to some class with the given vertex
// label by breadth first search in the sector subgraph. Throws NoPath when
// none exists and Precondition when `from` is not in the subgraph.
SCertificate prepare(const LabeledGraph& class_graph, const Sector& sec,
                     const ClassKey& from, int to_label);

// The adapted column sequence of a marker m in 1..t+1 against a sector:
// k_1 = 1 < k_2 < ... < k_{s-1} <= m-1, built by descending maximality with
// the convention c_0 = 0. For m = 1 the sequence is empty and s = 1.
struct AdaptedSequence {
    int m = 0;
    int s = 0;
    std::vector<int> ks;
};

AdaptedSequence adapted_sequence(int m, const Sector& sec);

// The explicit certificate for a class of height at most one (a partial
// first row). Walks by adding second level blocks along the adapted
// sequence, then removing the block over the first occupied column after
// the gap. The endpoint label is that column's index less one.
SCertificate level_one_prepare(const ClassKey& from, const Sector& sec);

// The mirror certificate: classes and sector dualized, edge label l
// replaced by t+1-l. A valid certificate stays valid.
SCertificate dual_certificate(const SCertificate& cert);

// The two sum forms of the certificate difference as strings: the
// telescoping edge sum and the rearranged form against the endpoint label.
std::string edge_sum_text(const SCertificate& cert);
std::string rearranged_text(const SCertificate& cert);

std::string to_text(const SCertificate& cert);

}  // namespace sgr
