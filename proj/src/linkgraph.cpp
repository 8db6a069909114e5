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

#include "sgr/linkgraph.hpp"

#include <algorithm>
#include <deque>
#include <map>
#include <set>

#include "sgr/enumeration.hpp"
#include "sgr/errors.hpp"

namespace sgr {

void LabeledGraph::add_edge(int u, int v, int label) {
    internal_check(u != v, "loops are not allowed");
    internal_check(u >= 0 && v >= 0 && u < size() && v < size(), "edge endpoint out of range");
    if (u > v) std::swap(u, v);
    for (const auto& [a, b, lab] : edges) {
        if (a == u && b == v) {
            internal_check(lab == label, "an edge is reached with one label only");
            return;
        }
    }
    edges.emplace_back(u, v, label);
    adj.resize(vlabel.size());
    adj[u].emplace_back(v, label);
    adj[v].emplace_back(u, label);
}

void LabeledGraph::finalize() {
    adj.resize(vlabel.size());
    std::sort(edges.begin(), edges.end());
    for (auto& nbrs : adj) std::sort(nbrs.begin(), nbrs.end());
    for (int lab : vlabel) internal_check(lab >= 1 && lab <= t + 1, "vertex labels lie in 1..t+1");
    for (const auto& [u, v, lab] : edges) {
        (void)u;
        (void)v;
        internal_check(lab >= 1 && lab <= t, "edge labels lie in 1..t");
    }
}

std::vector<int> LabeledGraph::neighbours_by_label(int v, int label) const {
    std::vector<int> out;
    for (const auto& [w, lab] : adj[v])
        if (lab == label) out.push_back(w);
    return out;
}

LabeledGraph build_class_graph(int t, int jobs) {
    LabeledGraph g;
    g.t = t;
    g.keys = enumerate_classes(t, jobs);
    g.vlabel.reserve(g.keys.size());
    std::map<ClassKey, int> index;
    for (std::size_t i = 0; i < g.keys.size(); i++) {
        g.vlabel.push_back(g.keys[i].label());
        index[g.keys[i]] = static_cast<int>(i);
    }
    g.adj.resize(g.keys.size());
    for (std::size_t i = 0; i < g.keys.size(); i++) {
        for (const BlockLink& link : single_block_links(g.keys[i])) {
            auto it = index.find(link.target);
            internal_check(it != index.end(), "links stay inside the enumerated classes");
            g.add_edge(static_cast<int>(i), it->second, link.edge_label);
        }
    }
    for (const ClassKey& key : g.keys) {
        g.fns.push_back(eval_class(key));
        g.rels.push_back(partial_order(number(key.canonical)));
    }
    g.finalize();
    return g;
}

LabeledGraph sector_subgraph(const LabeledGraph& full, const Sector& sec) {
    internal_check(full.has_keys() && !full.rels.empty(),
                   "sector restriction needs a class graph");
    LabeledGraph g;
    g.t = full.t;
    std::vector<int> new_id(full.size(), -1);
    for (int v = 0; v < full.size(); v++) {
        if (!lifts_to(full.rels[v], sec)) continue;
        new_id[v] = g.size();
        g.vlabel.push_back(full.vlabel[v]);
        g.keys.push_back(full.keys[v]);
        g.fns.push_back(full.fns[v]);
        g.rels.push_back(full.rels[v]);
    }
    g.adj.resize(g.vlabel.size());
    for (const auto& [u, v, lab] : full.edges)
        if (new_id[u] >= 0 && new_id[v] >= 0) g.add_edge(new_id[u], new_id[v], lab);
    g.finalize();
    return g;
}

std::vector<std::vector<int>> pointed_chains(const LabeledGraph& g) {
    std::vector<std::vector<int>> found;
    std::vector<int> chain;
    auto extend = [&](auto&& self, int v, int j) -> void {
        chain.push_back(v);
        if (j == 1) {
            found.push_back(chain);
        } else {
            for (int w : g.neighbours_by_label(v, j - 1))
                if (g.vlabel[w] == j - 1) self(self, w, j - 1);
        }
        chain.pop_back();
    };
    for (int v = 0; v < g.size(); v++)
        if (g.vlabel[v] == g.t + 1) extend(extend, v, g.t + 1);
    return found;
}

std::vector<int> pointed_chain(const LabeledGraph& g) {
    auto found = pointed_chains(g);
    if (found.size() != 1)
        throw NoPath("expected one pointed chain, found " + std::to_string(found.size()));
    return found.front();
}

std::vector<LinForm> propagated_fns(const LabeledGraph& g) {
    std::vector<int> chain = pointed_chain(g);
    std::vector<LinForm> fns(g.size(), LinForm::zero(g.t));
    std::vector<bool> have(g.size(), false);
    int head = chain.front();
    fns[head] = LinForm::ground(g.t);
    have[head] = true;
    std::deque<int> queue{head};
    while (!queue.empty()) {
        int u = queue.front();
        queue.pop_front();
        for (const auto& [w, lab] : g.adj[u]) {
            if (have[w]) continue;
            // f_u - f_w = c_lab (r^{i_u} - r^{i_w})
            LinForm f = fns[u];
            f.add_term(lab, r_diff(g.t, g.vlabel[u], g.vlabel[w]), -1);
            fns[w] = std::move(f);
            have[w] = true;
            queue.push_back(w);
        }
    }
    for (bool h : have)
        if (!h) throw NoPath("graph is not connected, cannot propagate functions");
    return fns;
}

std::vector<Triad> find_triads(const LabeledGraph& g) {
    // Each triad is determined by its middle edge plus one edge at either
    // endpoint, so scanning middle edges with u < v lists every triad once.
    std::vector<Triad> out;
    for (const auto& [b, c, mid] : g.edges) {
        for (const auto& [a, outer] : g.adj[b]) {
            if (a == c || outer == mid) continue;
            for (const auto& [d, outer2] : g.adj[c]) {
                if (d == b || outer2 != outer) continue;
                out.push_back({a, b, c, d, outer, mid});
            }
        }
    }
    return out;
}

RelationSet triad_order(const LabeledGraph& g) {
    std::set<Relation> rels;
    for (const Triad& tr : find_triads(g)) rels.insert({tr.outer, tr.mid});
    RelationSet rs;
    rs.t = g.t;
    rs.rels.assign(rels.begin(), rels.end());
    return rs;
}

std::optional<std::vector<int>> ordered_path(const LabeledGraph& g, const Sector& sec,
                                             int from, int to_label) {
    internal_check(from >= 0 && from < g.size(), "start vertex out of range");
    internal_check(to_label >= 1 && to_label <= g.t + 1, "target labels lie in 1..t+1");
    // States (vertex, rank of last edge label), rank 0 before the first edge.
    const int ranks = g.t + 1;
    std::vector<int> parent(g.size() * ranks, -2);  // -2 unseen, -1 root
    auto id = [&](int v, int r) { return v * ranks + r; };
    std::deque<int> queue;
    parent[id(from, 0)] = -1;
    queue.push_back(id(from, 0));
    while (!queue.empty()) {
        int state = queue.front();
        queue.pop_front();
        int v = state / ranks, r = state % ranks;
        if (g.vlabel[v] == to_label) {
            std::vector<int> path;
            for (int s = state; s != -1; s = parent[s]) path.push_back(s / ranks);
            std::reverse(path.begin(), path.end());
            return path;
        }
        for (const auto& [w, lab] : g.adj[v]) {
            int nr = sec.rank(lab);
            if (nr <= r || parent[id(w, nr)] != -2) continue;
            parent[id(w, nr)] = state;
            queue.push_back(id(w, nr));
        }
    }
    return std::nullopt;
}

bool PropertyReport::all_pass() const {
    return std::all_of(checks.begin(), checks.end(),
                       [](const PropertyCheck& c) { return c.pass; });
}

namespace {

std::string vtx(const LabeledGraph& g, int v) {
    std::string s = "v" + std::to_string(v) + ":" + std::to_string(g.vlabel[v]);
    if (g.has_keys()) s += "=" + to_text(g.keys[v].canonical);
    return s;
}

PropertyCheck check_p1(const LabeledGraph& g) {
    for (const auto& [u, v, lab] : g.edges) {
        (void)lab;
        if (g.vlabel[u] == g.vlabel[v])
            return {"edge endpoints differ", false, vtx(g, u) + " -- " + vtx(g, v)};
    }
    return {"edge endpoints differ", true, ""};
}

PropertyCheck check_p2(const LabeledGraph& g) {
    for (int v = 0; v < g.size(); v++) {
        std::set<int> labs;
        for (const auto& [w, lab] : g.adj[v]) {
            (void)w;
            if (!labs.insert(lab).second)
                return {"edge labels distinct at each vertex", false,
                        vtx(g, v) + " repeats label " + std::to_string(lab)};
        }
    }
    return {"edge labels distinct at each vertex", true, ""};
}

PropertyCheck check_p3(const LabeledGraph& g, const std::vector<LinForm>& fns) {
    for (const auto& [u, v, lab] : g.edges) {
        LinForm expect = LinForm::zero(g.t);
        expect.add_term(lab, r_diff(g.t, g.vlabel[u], g.vlabel[v]));
        if (fns[u] - fns[v] != expect)
            return {"edge difference law", false,
                    vtx(g, u) + " -- " + vtx(g, v) + " label " + std::to_string(lab)};
    }
    return {"edge difference law", true, ""};
}

PropertyCheck check_p4(const LabeledGraph& g, const std::vector<LinForm>& fns) {
    auto chains = pointed_chains(g);
    if (chains.size() != 1)
        return {"unique pointed chain", false,
                "found " + std::to_string(chains.size()) + " chains"};
    if (!fns.empty() && fns[chains[0][0]] != LinForm::ground(g.t))
        return {"unique pointed chain", false, "chain head does not carry the ground function"};
    return {"unique pointed chain", true, ""};
}

PropertyCheck check_p5(const LabeledGraph& g) {
    if (g.size() == 0) return {"connected", false, "empty graph"};
    std::vector<bool> seen(g.size(), false);
    std::deque<int> queue{0};
    seen[0] = true;
    int count = 1;
    while (!queue.empty()) {
        int v = queue.front();
        queue.pop_front();
        for (const auto& [w, lab] : g.adj[v]) {
            (void)lab;
            if (!seen[w]) {
                seen[w] = true;
                count++;
                queue.push_back(w);
            }
        }
    }
    if (count != g.size())
        return {"connected", false, std::to_string(g.size() - count) + " vertices unreachable"};
    return {"connected", true, ""};
}

PropertyCheck check_p6(const LabeledGraph& g, const std::vector<LinForm>& fns) {
    for (const Triad& tr : find_triads(g)) {
        if (g.vlabel[tr.a] != g.vlabel[tr.d])
            return {"triad law", false, "outer vertices " + vtx(g, tr.a) + ", " + vtx(g, tr.d) +
                                            " carry different labels"};
        if (!fns.empty()) {
            LinForm expect = LinForm::zero(g.t);
            MVec diff = r_diff(g.t, g.vlabel[tr.b], g.vlabel[tr.c]);
            expect.add_term(tr.mid, diff);
            expect.add_term(tr.outer, diff, -1);
            if (fns[tr.a] - fns[tr.d] != expect)
                return {"triad law", false,
                        "difference law fails on (" + vtx(g, tr.a) + "," + vtx(g, tr.b) + "," +
                            vtx(g, tr.c) + "," + vtx(g, tr.d) + ")"};
        }
    }
    return {"triad law", true, ""};
}

PropertyCheck check_p7(const LabeledGraph& g, const Sector& sec) {
    for (int v = 0; v < g.size(); v++) {
        for (int k = 1; k <= g.t + 1; k++) {
            if (!ordered_path(g, sec, v, k))
                return {"ordered paths to every label", false,
                        "no ordered path from " + vtx(g, v) + " to label " + std::to_string(k)};
        }
    }
    return {"ordered paths to every label", true, ""};
}

PropertyCheck check_p8(const LabeledGraph& g, const std::vector<LinForm>& fns) {
    for (int v = 0; v < g.size(); v++) {
        if (!fns[v].mrow_is_zero(g.vlabel[v]))
            return {"function vanishes at own index", false, vtx(g, v)};
    }
    return {"function vanishes at own index", true, ""};
}

PropertyCheck check_p9(const LabeledGraph& g, const std::vector<LinForm>& fns) {
    for (int u = 0; u < g.size(); u++)
        for (int v = u + 1; v < g.size(); v++)
            if (fns[u] == fns[v])
                return {"functions pairwise distinct", false, vtx(g, u) + " = " + vtx(g, v)};
    return {"functions pairwise distinct", true, ""};
}

struct BivalentScan {
    const LabeledGraph& g;
    int k = 0;
    std::size_t steps = 0;
    std::vector<bool> on_path;
    std::vector<int> path;
    std::string failure;

    bool dfs(int v, int target, int first_label) {
        if (++steps > 500000) throw ClosureDiverged("bivalent path scan exceeded its budget");
        for (const auto& [w, lab] : g.adj[v]) {
            if (w == target) {
                if (lab != first_label) {
                    failure = "path " + vtx(g, path.front()) + " .. " + vtx(g, target) +
                              " starts with " + std::to_string(first_label) + ", ends with " +
                              std::to_string(lab);
                    return false;
                }
                continue;
            }
            if (on_path[w] || g.vlabel[w] == k) continue;
            on_path[w] = true;
            path.push_back(w);
            bool ok = dfs(w, target, first_label);
            path.pop_back();
            on_path[w] = false;
            if (!ok) return false;
        }
        return true;
    }
};

PropertyCheck check_p10(const LabeledGraph& g) {
    for (int u = 0; u < g.size(); u++) {
        for (int v = u + 1; v < g.size(); v++) {
            if (g.vlabel[u] != g.vlabel[v]) continue;
            BivalentScan scan{g, g.vlabel[u], 0, std::vector<bool>(g.size(), false), {}, ""};
            scan.on_path[u] = true;
            scan.path.push_back(u);
            for (const auto& [w, lab] : g.adj[u]) {
                if (w == v) {
                    // A single edge between equal labels; rejected by check 1.
                    continue;
                }
                if (g.vlabel[w] == g.vlabel[u]) continue;
                scan.on_path[w] = true;
                scan.path.push_back(w);
                bool ok = scan.dfs(w, v, lab);
                scan.path.pop_back();
                scan.on_path[w] = false;
                if (!ok) return {"bivalent path law", false, scan.failure};
            }
        }
    }
    return {"bivalent path law", true, ""};
}

}  // namespace

PropertyReport check_properties(const LabeledGraph& g, const Sector& sec) {
    internal_check(sec.t == g.t, "graph and sector sizes differ");
    PropertyReport report;
    std::vector<LinForm> fns = g.fns;
    std::string fn_err;
    if (fns.empty()) {
        try {
            fns = propagated_fns(g);
        } catch (const std::exception& e) {
            fn_err = e.what();
        }
    }
    auto need_fns = [&](PropertyCheck (*check)(const LabeledGraph&, const std::vector<LinForm>&),
                        const std::string& name) {
        if (fns.empty()) return PropertyCheck{name, false, "no functions: " + fn_err};
        return check(g, fns);
    };
    report.checks.push_back(check_p1(g));
    report.checks.push_back(check_p2(g));
    report.checks.push_back(need_fns(check_p3, "edge difference law"));
    report.checks.push_back(check_p4(g, fns));
    report.checks.push_back(check_p5(g));
    report.checks.push_back(need_fns(check_p6, "triad law"));
    report.checks.push_back(check_p7(g, sec));
    report.checks.push_back(need_fns(check_p8, "function vanishes at own index"));
    report.checks.push_back(need_fns(check_p9, "functions pairwise distinct"));
    report.checks.push_back(check_p10(g));
    return report;
}

}  // namespace sgr
