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

#include <cstdint>
#include <vector>

#include "sgr/diagram.hpp"

namespace sgr {

// For enumeration purposes heights above t+1 never matter: every class has
// a reduced complete representative, row lengths of a reduced diagram
// strictly decrease upward, so representatives have height at most t+1 and
// the lower of the two at most t.
inline constexpr int kMaxEnumerationT = 8;

// All equivalence classes of diagrams of size t that satisfy the boundary
// conditions, sorted by canonical representative. Scans every height vector
// bounded by t+1. jobs = 0 uses one thread per core when OpenMP is enabled,
// jobs = 1 forces the serial path.
std::vector<ClassKey> enumerate_classes(int t, int jobs = 0);
std::vector<ClassKey> enumerate_classes_serial(int t);

// Independent enumeration: closure of the class of the empty diagram under
// single block links. Agreement with the scan shows the class graph is
// connected and both enumerations are complete.
std::vector<ClassKey> enumerate_classes_link_bfs(int t);

// Number of classes per strongly extremal column 1..t+1.
std::vector<std::size_t> strata_counts(const std::vector<ClassKey>& classes, int t);

std::uint64_t catalan(int n);
std::uint64_t binomial(int n, int k);

}  // namespace sgr
