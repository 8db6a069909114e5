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

// Helpers shared by the unit tests and the acceptance runner: an exhaustive
// height-vector scan, a runner for the command line binary named by the
// SGRAPHS_CLI environment variable, and the mutated graphs used as negative
// controls for the structural property checks.

#pragma once

#include <sys/wait.h>

#include <cstdio>
#include <cstdlib>
#include <sstream>
#include <string>
#include <utility>
#include <vector>

#include "sgr/diagram.hpp"
#include "sgr/funcspace.hpp"
#include "sgr/linkgraph.hpp"
#include "sgr/tableau.hpp"

namespace sgr::test {

// Calls fn on every diagram of size t with all heights in 0..max_h.
template <typename Fn>
void for_each_heights(int t, int max_h, Fn&& fn) {
    std::vector<int> h(t + 1, 0);
    while (true) {
        fn(Diagram::of(h));
        int i = 0;
        while (i <= t && h[i] == max_h) h[i++] = 0;
        if (i > t) break;
        h[i]++;
    }
}

struct CliResult {
    int exit_code = -1;
    std::string output;  // stdout and stderr combined
};

inline std::string cli_path() {
    const char* p = std::getenv("SGRAPHS_CLI");
    return p == nullptr ? std::string() : std::string(p);
}

inline CliResult run_cli(const std::string& args) {
    // popen goes through the shell, so every token is single quoted: sector
    // arguments such as 2<1<3 would otherwise be parsed as redirections.
    std::string cmd = "'" + cli_path() + "'";
    std::istringstream split(args);
    std::string tok;
    while (split >> tok) cmd += " '" + tok + "'";
    cmd += " 2>&1";
    FILE* pipe = popen(cmd.c_str(), "r");
    if (pipe == nullptr) return {-1, "popen failed"};
    std::string out;
    char buf[4096];
    std::size_t n = 0;
    while ((n = fread(buf, 1, sizeof buf, pipe)) > 0) out.append(buf, n);
    int status = pclose(pipe);
    return {WIFEXITED(status) ? WEXITSTATUS(status) : -1, out};
}

inline const PropertyCheck* find_check(const PropertyReport& report, const std::string& name) {
    for (const auto& c : report.checks)
        if (c.name == name) return &c;
    return nullptr;
}

inline void remove_edge(LabeledGraph& g, int u, int v) {
    if (u > v) std::swap(u, v);
    std::erase_if(g.edges, [&](const std::tuple<int, int, int>& e) {
        return std::get<0>(e) == u && std::get<1>(e) == v;
    });
    std::erase_if(g.adj[u], [&](const std::pair<int, int>& p) { return p.first == v; });
    std::erase_if(g.adj[v], [&](const std::pair<int, int>& p) { return p.first == u; });
}

// A graph mutated so that exactly the named property check must fail (other
// checks are allowed to fail alongside).
struct NegativeControl {
    std::string breaks;
    LabeledGraph graph;
    Sector sec;
};

// The pristine graph that the mutations below start from: the subgraph of
// the size 2 class graph on the sector c_1 < c_2. Its four vertices in id
// order are (0,0,0) label 3, (0,1,1) label 2, (1,0,1) label 1 and (1,1,1)
// label 1, with edges v0-v1:2, v0-v2:1 and v1-v3:1, so the pointed chain is
// v0, v1, v3 and the one triad is (v2, v0, v1, v3).
inline LabeledGraph negative_control_base() {
    LabeledGraph g = sector_subgraph(build_class_graph(2), sector_from_text("1<2"));
    g.fns = propagated_fns(g);
    return g;
}

inline std::vector<NegativeControl> negative_controls() {
    std::vector<NegativeControl> out;
    const Sector sec = sector_from_text("1<2");
    const LabeledGraph base = negative_control_base();

    {
        NegativeControl c{"edge endpoints differ", base, sec};
        c.graph.vlabel[1] = 3;  // the edge v0-v1 now joins two label 3 vertices
        out.push_back(std::move(c));
    }
    {
        NegativeControl c{"edge labels distinct at each vertex", base, sec};
        c.graph.add_edge(0, 3, 1);  // v0 and v3 each already carry a label 1 edge
        c.graph.finalize();
        out.push_back(std::move(c));
    }
    {
        NegativeControl c{"edge difference law", base, sec};
        // Perturbs f at v2 away from its own index row, so only the edge and
        // triad laws notice.
        c.graph.fns[2].add_term(1, r_diff(2, 2, 3));
        out.push_back(std::move(c));
    }
    {
        NegativeControl c{"unique pointed chain", base, sec};
        c.graph.fns[0].add_term(1, r_diff(2, 1, 2));  // the chain head loses the ground value
        out.push_back(std::move(c));
    }
    {
        NegativeControl c{"connected", base, sec};
        remove_edge(c.graph, 0, 2);  // isolates v2
        out.push_back(std::move(c));
    }
    {
        NegativeControl c{"triad law", base, sec};
        c.graph.vlabel[3] = 3;  // the outer vertices of the triad no longer match
        out.push_back(std::move(c));
    }
    {
        // A bare pointed chain is lawful except that no ordered path leads
        // from the head to label 1: the ranks along it would have to drop.
        LabeledGraph g;
        g.t = 2;
        g.vlabel = {3, 2, 1};
        g.adj.resize(3);
        g.add_edge(0, 1, 2);
        g.add_edge(1, 2, 1);
        g.finalize();
        g.fns = propagated_fns(g);
        out.push_back({"ordered paths to every label", std::move(g), sec});
    }
    {
        NegativeControl c{"function vanishes at own index", base, sec};
        c.graph.fns[2].add_term(2, r_diff(2, 1, 2));  // touches the m1 row of a label 1 vertex
        out.push_back(std::move(c));
    }
    {
        NegativeControl c{"functions pairwise distinct", base, sec};
        c.graph.fns[2] = c.graph.fns[3];
        out.push_back(std::move(c));
    }
    {
        // Equal label endpoints joined by a path whose first and last edge
        // labels differ.
        LabeledGraph g;
        g.t = 2;
        g.vlabel = {2, 1, 2};
        g.adj.resize(3);
        g.add_edge(0, 1, 1);
        g.add_edge(1, 2, 2);
        g.finalize();
        out.push_back({"bivalent path law", std::move(g), sec});
    }
    return out;
}

}  // namespace sgr::test
