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

#include "json.hpp"
#include "sgr/linkgraph.hpp"
#include "sgr/preparation.hpp"

namespace sgr {

// All JSON bodies carry "schema": "v1" and a "kind" discriminator. Keys keep
// insertion order and arrays are emitted in stable id order, so fixed inputs
// serialize to identical bytes across runs.
using Json = nlohmann::ordered_json;

Json classes_json(const std::vector<ClassKey>& keys, int t);
Json graph_json(const LabeledGraph& g);
Json certificate_json(const SCertificate& cert);
Json report_json(const std::string& suite, const PropertyReport& report);

// Plain text tables for the command line, one row per class or vertex.
std::string classes_text(const std::vector<ClassKey>& keys, int t);
std::string graph_text(const LabeledGraph& g);
std::string report_text(const PropertyReport& report);

// Graphviz source for an undirected labeled graph.
std::string to_dot(const LabeledGraph& g);

}  // namespace sgr
