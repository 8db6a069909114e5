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
#include <vector>

#include "sgr/preparation.hpp"
#include "sgr/sgraph.hpp"

namespace sgr {

// Batched verification suites shared by the command line tool and the
// acceptance runner. Each suite returns one PropertyCheck per claim; the
// optional sector restricts the sector parametric suites to one sector.

// Census sizes: class count against the closed form, strata by vertex
// label, family sizes, the common core of all families, and agreement of
// the scan enumeration with the link search.
PropertyReport suite_counts(int t, int jobs = 0);

// The ten structural properties of every sector subgraph.
PropertyReport suite_properties(int t, const std::optional<Sector>& only = {}, int jobs = 0);

// Fusion graph versus sector subgraph comparison for every sector.
PropertyReport suite_theorem85(int t, const std::optional<Sector>& only = {}, int jobs = 0);

// Certificates for every (class, sector, target label) triple with the
// class in the sector's family, plus the direct level one walks.
PropertyReport suite_preparation(int t, const std::optional<Sector>& only = {}, int jobs = 0);

// Duality: involution on classes, compatibility with the reading map,
// family duality, and mirrored strata.
PropertyReport suite_duality(int t, int jobs = 0);

// The reading map as a class function: equal on closures, injective
// across classes, zero row at the strongly extremal column, signed unit
// rows exactly at quasi extremal columns, support of depleted diagrams,
// and injectivity per height over complete diagrams.
PropertyReport suite_classfn(int t, int jobs = 0);

// Sector graph shape: the number of distinct graphs up to labelled
// isomorphism, vertex counts, label histograms, the increasing tree, and
// graph duality.
PropertyReport suite_sgraph_count(int t);

// Known suite names, "all" last.
std::vector<std::string> suite_names();

// Dispatch by name; "all" concatenates every suite. Throws ConfigError on
// an unknown name.
PropertyReport run_suite(const std::string& name, int t,
                         const std::optional<Sector>& only = {}, int jobs = 0);

}  // namespace sgr
