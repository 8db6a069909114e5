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

#include "sgr/sgraph.hpp"

#include <algorithm>
#include <functional>
#include <map>

#include "sgr/errors.hpp"

namespace sgr {

namespace {

// Relabelling that skips s: values below stay, values at or above shift up.
int skip(int value, int s) { return value < s ? value : value + 1; }

}  // namespace

LabeledGraph build_sgraph(const Sector& sec, std::vector<FusionStep>* steps) {
    if (sec.t == 1) {
        LabeledGraph g;
        g.t = 1;
        g.vlabel = {1, 2};
        g.adj.resize(2);
        g.add_edge(0, 1, 1);
        g.finalize();
        return g;
    }
    const int s = sec.order.back();
    if (steps) steps->push_back({s, std::size_t{1} << (sec.t - 1)});

    Sector minor;
    minor.t = sec.t - 1;
    for (int c : sec.order) {
        if (c == s) continue;
        minor.order.push_back(c < s ? c : c - 1);
    }
    LabeledGraph rec = build_sgraph(minor, steps);

    LabeledGraph g;
    g.t = sec.t;
    const int half = rec.size();
    g.vlabel.resize(2 * half);
    for (int v = 0; v < half; v++) {
        g.vlabel[v] = skip(rec.vlabel[v], s);
        g.vlabel[v + half] = skip(rec.vlabel[v], s + 1);
    }
    g.adj.resize(2 * half);
    for (const auto& [u, v, lab] : rec.edges) {
        g.add_edge(u, v, skip(lab, s));
        g.add_edge(u + half, v + half, skip(lab, s));
    }
    // Bridges join the copies at the vertices that the first relabelling
    // moved onto s+1.
    for (int v = 0; v < half; v++)
        if (g.vlabel[v] == s + 1) g.add_edge(v, v + half, s);
    g.finalize();
    return g;
}

LabeledGraph build_increasing_tree(int t) {
    LabeledGraph g;
    g.t = 1;
    g.vlabel = {1, 2};
    g.adj.resize(2);
    g.add_edge(0, 1, 1);
    for (int step = 2; step <= t; step++) {
        LabeledGraph next;
        next.t = step;
        const int n = g.size();
        next.vlabel.resize(2 * n);
        for (int v = 0; v < n; v++) {
            next.vlabel[v] = g.vlabel[v] + 1;  // the old tree, shifted
            next.vlabel[v + n] = 1;            // one new leaf per old vertex
        }
        next.adj.resize(2 * n);
        for (const auto& [u, v, lab] : g.edges) next.add_edge(u, v, lab + 1);
        for (int v = 0; v < n; v++) next.add_edge(v, v + n, 1);
        next.finalize();
        g = std::move(next);
    }
    g.finalize();
    return g;
}

LabeledGraph dual_graph(const LabeledGraph& g) {
    LabeledGraph out;
    out.t = g.t;
    out.vlabel.resize(g.size());
    for (int v = 0; v < g.size(); v++) out.vlabel[v] = g.t + 2 - g.vlabel[v];
    out.adj.resize(g.size());
    for (const auto& [u, v, lab] : g.edges) out.add_edge(u, v, g.t + 1 - lab);
    for (const LinForm& f : g.fns) out.fns.push_back(dual_fn(f));
    for (const ClassKey& key : g.keys) out.keys.push_back(canonical_key(dual(key.canonical)));
    for (const ClassKey& key : out.keys) out.rels.push_back(partial_order(number(key.canonical)));
    out.finalize();
    return out;
}

std::vector<std::uint64_t> isomorphism_signature(const LabeledGraph& g) {
    std::vector<std::uint64_t> sig;
    for (int v = 0; v < g.size(); v++) {
        std::uint64_t h = static_cast<std::uint64_t>(g.vlabel[v]) << 48;
        std::vector<int> labs;
        for (const auto& [w, lab] : g.adj[v]) {
            (void)w;
            labs.push_back(lab);
        }
        std::sort(labs.begin(), labs.end());
        for (int lab : labs) h = h * 1315423911u + static_cast<std::uint64_t>(lab);
        sig.push_back(h);
    }
    std::sort(sig.begin(), sig.end());
    return sig;
}

std::optional<std::vector<int>> find_labeled_isomorphism(const LabeledGraph& a,
                                                         const LabeledGraph& b) {
    if (a.size() != b.size() || a.t != b.t || a.edges.size() != b.edges.size())
        return std::nullopt;
    if (isomorphism_signature(a) != isomorphism_signature(b)) return std::nullopt;

    // Per vertex invariant: label plus sorted incident labels.
    auto profile = [](const LabeledGraph& g, int v) {
        std::vector<int> p{g.vlabel[v]};
        std::vector<int> labs;
        for (const auto& [w, lab] : g.adj[v]) {
            (void)w;
            labs.push_back(lab);
        }
        std::sort(labs.begin(), labs.end());
        p.insert(p.end(), labs.begin(), labs.end());
        return p;
    };
    std::vector<std::vector<int>> prof_b(b.size());
    for (int v = 0; v < b.size(); v++) prof_b[v] = profile(b, v);

    // Assign vertices of a in order of scarcity of their profile.
    std::vector<int> order(a.size());
    for (int v = 0; v < a.size(); v++) order[v] = v;
    std::map<std::vector<int>, int> freq;
    for (int v = 0; v < b.size(); v++) freq[prof_b[v]]++;
    std::stable_sort(order.begin(), order.end(), [&](int u, int v) {
        return freq[profile(a, u)] < freq[profile(a, v)];
    });

    std::vector<int> image(a.size(), -1), used(b.size(), 0);
    std::function<bool(std::size_t)> place = [&](std::size_t pos) {
        if (pos == order.size()) return true;
        int v = order[pos];
        std::vector<int> pv = profile(a, v);
        for (int w = 0; w < b.size(); w++) {
            if (used[w] || prof_b[w] != pv) continue;
            bool ok = true;
            for (const auto& [x, lab] : a.adj[v]) {
                if (image[x] == -1) continue;
                auto nbrs = b.neighbours_by_label(image[x], lab);
                if (std::find(nbrs.begin(), nbrs.end(), w) == nbrs.end()) {
                    ok = false;
                    break;
                }
            }
            if (!ok) continue;
            image[v] = w;
            used[w] = 1;
            if (place(pos + 1)) return true;
            image[v] = -1;
            used[w] = 0;
        }
        return false;
    };
    if (!place(0)) return std::nullopt;

    // The adjacency test above only covers already placed neighbours, so
    // recheck every edge both ways.
    std::vector<std::tuple<int, int, int>> mapped;
    for (const auto& [u, v, lab] : a.edges) {
        int x = image[u], y = image[v];
        if (x > y) std::swap(x, y);
        mapped.emplace_back(x, y, lab);
    }
    std::sort(mapped.begin(), mapped.end());
    if (mapped != b.edges) return std::nullopt;
    return image;
}

std::size_t count_distinct_sgraphs(int t) {
    std::vector<LabeledGraph> reps;
    for (const Sector& sec : all_sectors(t)) {
        LabeledGraph g = build_sgraph(sec);
        bool fresh = true;
        for (const LabeledGraph& r : reps) {
            if (find_labeled_isomorphism(g, r)) {
                fresh = false;
                break;
            }
        }
        if (fresh) reps.push_back(std::move(g));
    }
    return reps.size();
}

namespace {

bool bridge_delta_ok(const LinForm& delta, int t, int s, bool pure) {
    LinForm expect = LinForm::zero(t);
    expect.add_term(s, r_diff(t, s, s + 1));
    if (pure) return delta == expect;
    for (int other = 1; other <= t; other++) {
        if (other == s) continue;
        LinForm e2 = expect;
        e2.add_term(other, r_diff(t, s, s + 1), -1);
        if (delta == e2) return true;
    }
    return false;
}

}  // namespace

TheoremCheck verify_sector_graph(const LabeledGraph& class_graph, const Sector& sec) {
    std::vector<FusionStep> steps;
    LabeledGraph g = build_sgraph(sec, &steps);
    LabeledGraph sub = sector_subgraph(class_graph, sec);

    if (g.size() != sub.size() || g.size() != (1 << sec.t))
        return {false, "sector " + to_text(sec) + ": expected " +
                           std::to_string(1 << sec.t) + " classes, fusion " +
                           std::to_string(g.size()) + ", subgraph " +
                           std::to_string(sub.size())};

    auto iso = find_labeled_isomorphism(g, sub);
    if (!iso) return {false, "sector " + to_text(sec) + ": graphs are not isomorphic"};

    std::vector<LinForm> fns;
    try {
        fns = propagated_fns(g);
    } catch (const std::exception& e) {
        return {false, "sector " + to_text(sec) + ": " + e.what()};
    }
    for (int v = 0; v < g.size(); v++) {
        if (fns[v] != sub.fns[(*iso)[v]])
            return {false, "sector " + to_text(sec) + ": function mismatch at fusion vertex " +
                               std::to_string(v)};
    }

    // Outermost fusion step: bridge and support laws. The two vertex base
    // graph has no fusion step, and its functions were already compared.
    if (steps.empty())
        return {true, "sector " + to_text(sec) + ": " + std::to_string(g.size()) +
                          " vertices match"};
    internal_check(steps[0].half * 2 == static_cast<std::size_t>(g.size()),
                   "fusion steps start at the outermost level");
    const int s = steps[0].s;
    const int half = static_cast<int>(steps[0].half);
    for (int v = 0; v < half; v++) {
        LinForm delta = fns[v + half] - fns[v];
        bool pure = g.vlabel[v] == s + 1;
        if (!bridge_delta_ok(delta, g.t, s, pure))
            return {false, "sector " + to_text(sec) + ": bridge difference law fails at vertex " +
                               std::to_string(v)};
    }
    // Column s of the coefficient matrix: -1 at row s on the first copy,
    // +1 at row s+1 on the second.
    for (int v = 0; v < g.size(); v++) {
        for (int i = 1; i <= g.t + 1; i++) {
            std::int64_t want = 0;
            if (v < half && i == s) want = -1;
            if (v >= half && i == s + 1) want = 1;
            if (fns[v].coeff(i, s) != want)
                return {false, "sector " + to_text(sec) + ": support law fails at vertex " +
                                   std::to_string(v) + " row " + std::to_string(i)};
        }
    }
    return {true, "sector " + to_text(sec) + ": " + std::to_string(g.size()) + " vertices match"};
}

}  // namespace sgr
