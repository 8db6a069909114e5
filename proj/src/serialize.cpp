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

#include "sgr/serialize.hpp"

#include <algorithm>
#include <cstddef>

namespace sgr {

Json classes_json(const std::vector<ClassKey>& keys, int t) {
    Json out;
    out["schema"] = "v1";
    out["kind"] = "classes";
    out["t"] = t;
    out["count"] = keys.size();
    Json arr = Json::array();
    for (std::size_t id = 0; id < keys.size(); ++id) {
        const ClassKey& key = keys[id];
        LinForm f = eval_class(key);
        Json item;
        item["id"] = id;
        item["canonical"] = key.canonical.heights;
        item["partner"] = partner_representative(key).heights;
        item["height"] = key.height();
        item["label"] = key.label();
        item["fn_r"] = to_text_r(f);
        item["fn_m"] = to_text_m(f);
        item["relations"] = to_text(partial_order(number(key.canonical)));
        arr.push_back(std::move(item));
    }
    out["classes"] = std::move(arr);
    return out;
}

Json graph_json(const LabeledGraph& g) {
    Json out;
    out["schema"] = "v1";
    out["kind"] = "graph";
    out["t"] = g.t;
    out["vertex_count"] = g.size();
    out["edge_count"] = g.edges.size();
    Json verts = Json::array();
    for (int v = 0; v < g.size(); ++v) {
        Json item;
        item["id"] = v;
        item["label"] = g.vlabel[v];
        if (g.has_keys()) item["canonical"] = g.keys[v].canonical.heights;
        if (g.has_fns()) item["fn_r"] = to_text_r(g.fns[v]);
        if (!g.rels.empty()) item["relations"] = to_text(g.rels[v]);
        verts.push_back(std::move(item));
    }
    out["vertices"] = std::move(verts);
    Json es = Json::array();
    for (const auto& [u, v, lab] : g.edges) {
        Json item;
        item["u"] = u;
        item["v"] = v;
        item["label"] = lab;
        es.push_back(std::move(item));
    }
    out["edges"] = std::move(es);
    return out;
}

Json certificate_json(const SCertificate& cert) {
    int t = cert.sector.t;
    Json out;
    out["schema"] = "v1";
    out["kind"] = "certificate";
    out["t"] = t;
    out["sector"] = to_text(cert.sector);
    Json path = Json::array();
    for (const ClassKey& key : cert.path) path.push_back(key.canonical.heights);
    out["path"] = std::move(path);
    out["edge_labels"] = cert.edge_labels;
    out["target_label"] = cert.target().label();
    out["fn_start"] = to_text_r(eval_class(cert.start()));
    out["fn_target"] = to_text_r(eval_class(cert.target()));
    out["sum_edges"] = edge_sum_text(cert);
    out["sum_rearranged"] = rearranged_text(cert);
    out["difference_m"] = to_text_m(eval_class(cert.target()) - eval_class(cert.start()));
    return out;
}

Json report_json(const std::string& suite, const PropertyReport& report) {
    Json out;
    out["schema"] = "v1";
    out["kind"] = "verify";
    out["suite"] = suite;
    out["pass"] = report.all_pass();
    Json checks = Json::array();
    for (const PropertyCheck& c : report.checks) {
        Json item;
        item["name"] = c.name;
        item["pass"] = c.pass;
        item["detail"] = c.detail;
        checks.push_back(std::move(item));
    }
    out["checks"] = std::move(checks);
    return out;
}

std::string classes_text(const std::vector<ClassKey>& keys, int t) {
    std::string out = "t " + std::to_string(t) + "  classes " + std::to_string(keys.size()) + "\n";
    for (std::size_t id = 0; id < keys.size(); ++id) {
        const ClassKey& key = keys[id];
        out += std::to_string(id) + "  " + to_text(key.canonical) + "  partner " +
               to_text(partner_representative(key)) + "  label " + std::to_string(key.label()) +
               "  rel " + to_text(partial_order(number(key.canonical))) + "  f = " +
               to_text_r(eval_class(key)) + "\n";
    }
    return out;
}

std::string graph_text(const LabeledGraph& g) {
    std::string out = "t " + std::to_string(g.t) + "  vertices " + std::to_string(g.size()) +
                      "  edges " + std::to_string(g.edges.size()) + "\n";
    for (int v = 0; v < g.size(); ++v) {
        out += "v" + std::to_string(v) + " [" + std::to_string(g.vlabel[v]) + "]";
        if (g.has_keys()) out += "  " + to_text(g.keys[v].canonical);
        if (g.has_fns()) out += "  f = " + to_text_r(g.fns[v]);
        out += "\n";
    }
    for (const auto& [u, v, lab] : g.edges)
        out += "v" + std::to_string(u) + " -- v" + std::to_string(v) + "  label " +
               std::to_string(lab) + "\n";
    return out;
}

std::string report_text(const PropertyReport& report) {
    std::string out;
    for (const PropertyCheck& c : report.checks) {
        out += c.pass ? "PASS  " : "FAIL  ";
        out += c.name;
        if (!c.detail.empty()) out += "  (" + c.detail + ")";
        out += "\n";
    }
    out += report.all_pass() ? "all checks passed\n" : "some checks FAILED\n";
    return out;
}

std::string to_dot(const LabeledGraph& g) {
    std::string out = "graph sgr {\n  node [shape=circle fontsize=10];\n";
    for (int v = 0; v < g.size(); ++v) {
        out += "  v" + std::to_string(v) + " [label=\"v" + std::to_string(v) + ":" +
               std::to_string(g.vlabel[v]) + "\"";
        if (g.has_keys()) out += " tooltip=\"" + to_text(g.keys[v].canonical) + "\"";
        out += "];\n";
    }
    auto edges = g.edges;
    std::sort(edges.begin(), edges.end());
    for (const auto& [u, v, lab] : edges)
        out += "  v" + std::to_string(u) + " -- v" + std::to_string(v) + " [label=" +
               std::to_string(lab) + "];\n";
    out += "}\n";
    return out;
}

}  // namespace sgr
