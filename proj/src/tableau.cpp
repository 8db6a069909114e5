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

#include "sgr/tableau.hpp"

#include <algorithm>
#include <numeric>
#include <set>
#include <sstream>

#include "sgr/errors.hpp"

namespace sgr {

int left_neighbour(const Diagram& d, int col, int level) {
    for (int k = col - 1; k >= 1; k--)
        if (d.ht(k) >= level) return k;
    return 0;
}

int right_neighbour(const Diagram& d, int col, int level) {
    for (int k = col + 1; k <= d.cols(); k++)
        if (d.ht(k) >= level) return k;
    return 0;
}

Tableau number(const Diagram& d) {
    Tableau tab;
    tab.d = d;
    tab.cells.resize(d.cols());
    for (int i = 1; i <= d.cols(); i++) tab.cells[i - 1].assign(d.ht(i), 0);

    for (int s = 1; s <= d.height(); s++) {
        std::vector<int> row;
        for (int i = 1; i <= d.cols(); i++)
            if (d.ht(i) >= s) row.push_back(i);
        internal_check(!row.empty(), "rows up to the height cannot be empty");
        int slash_col = s % 2 == 1 ? row.back() : row.front();
        for (int i : row) {
            if (i == slash_col) continue;  // keep 0, the slash
            if (s == 1) {
                tab.cells[i - 1][0] = i;
            } else {
                int j = s - 1;
                int nb = j % 2 == 1 ? left_neighbour(d, i, j) : right_neighbour(d, i, j);
                internal_check(nb != 0, "a block above row 1 always has a neighbour below");
                int e = tab.entry(nb, j);
                internal_check(e != 0, "numbering never copies a slash");
                tab.cells[i - 1][s - 1] = e;
            }
        }
    }
    return tab;
}

bool is_well_numbered(const Tableau& tab) {
    for (int i = 1; i <= tab.d.cols(); i++) {
        for (int s = 1; s <= tab.d.ht(i); s++) {
            int e = tab.entry(i, s);
            if (e == 0) continue;
            if (s % 2 == 1 && e != i) return false;
            if (s % 2 == 0 && e != i - 1) return false;
        }
    }
    return true;
}

std::string to_text(const Tableau& tab) {
    std::string out;
    for (int s = 1; s <= tab.d.height(); s++) {
        out += "row " + std::to_string(s) + ": [";
        bool first = true;
        for (int i = 1; i <= tab.d.cols(); i++) {
            if (tab.d.ht(i) < s) continue;
            if (!first) out += " ";
            first = false;
            int e = tab.entry(i, s);
            out += std::to_string(i) + ":" + (e == 0 ? "/" : std::to_string(e));
        }
        out += "]\n";
    }
    return out;
}

namespace {

// Entries extended by the virtual row 0, numbered i-1 with a slash at
// column 1. Row 0 exists below every column.
int entry_or_virtual(const Tableau& tab, int col, int level) {
    if (level == 0) return col - 1;
    return tab.entry(col, level);
}

void check_acyclic(const RelationSet& rs) {
    // Kahn's algorithm on the coordinates that occur.
    std::vector<std::vector<int>> succ(rs.t + 1);
    std::vector<int> indeg(rs.t + 1, 0);
    for (const auto& [a, b] : rs.rels) {
        succ[a].push_back(b);
        indeg[b]++;
    }
    std::vector<int> ready;
    for (int c = 1; c <= rs.t; c++)
        if (indeg[c] == 0) ready.push_back(c);
    int seen = 0;
    while (!ready.empty()) {
        int c = ready.back();
        ready.pop_back();
        seen++;
        for (int b : succ[c])
            if (--indeg[b] == 0) ready.push_back(b);
    }
    if (seen != rs.t) throw CycleDetected("relation set is cyclic: " + to_text(rs));
}

}  // namespace

RelationSet partial_order(const Tableau& tab) {
    const Diagram& d = tab.d;
    std::set<Relation> rels;
    auto add = [&](int col_low, int level_low, int col_anchor, int level_anchor) {
        // The entry one level down bounds the anchor entry from above.
        int larger = entry_or_virtual(tab, col_low, level_low);
        int smaller = entry_or_virtual(tab, col_anchor, level_anchor);
        internal_check(larger != 0 && smaller != 0, "relations never touch a slash");
        rels.insert({smaller, larger});
    };
    for (int j = 1; j <= d.height(); j++) {
        if (j % 2 == 0) {
            // Anchor on a block at level j with a left neighbour at that
            // level; the neighbour and every strictly intermediate column of
            // height exactly j-1 except the last bound the anchor entry.
            for (int i = 1; i <= d.cols(); i++) {
                if (d.ht(i) < j) continue;
                int nb = left_neighbour(d, i, j);
                if (nb == 0) continue;
                std::vector<int> batch{nb};
                for (int k = nb + 1; k < i; k++)
                    if (d.ht(k) == j - 1) batch.push_back(k);
                for (std::size_t v = 0; v + 1 < batch.size(); v++)
                    add(batch[v], j - 1, i, j);
            }
        } else {
            // Mirrored: anchor on a block at level j with a right neighbour;
            // every intermediate column of height exactly j-1 except the
            // first, and the neighbour itself, bound the anchor entry.
            for (int i = 1; i <= d.cols(); i++) {
                if (d.ht(i) < j) continue;
                int nb = right_neighbour(d, i, j);
                if (nb == 0) continue;
                std::vector<int> batch;
                for (int k = i + 1; k < nb; k++)
                    if (d.ht(k) == j - 1) batch.push_back(k);
                batch.push_back(nb);
                for (std::size_t v = 1; v < batch.size(); v++)
                    add(batch[v], j - 1, i, j);
            }
        }
    }
    RelationSet rs;
    rs.t = d.t;
    rs.rels.assign(rels.begin(), rels.end());
    for (const auto& [a, b] : rs.rels)
        internal_check(a != b && a >= 1 && b >= 1 && a <= rs.t && b <= rs.t,
                       "relation indices out of range");
    check_acyclic(rs);
    return rs;
}

std::string to_text(const RelationSet& rs) {
    if (rs.rels.empty()) return "{}";
    std::string out = "{";
    for (std::size_t i = 0; i < rs.rels.size(); i++) {
        if (i) out += ", ";
        out += "c" + std::to_string(rs.rels[i].first) + "<c" + std::to_string(rs.rels[i].second);
    }
    return out + "}";
}

int Sector::rank(int c) const {
    for (int k = 0; k < t; k++)
        if (order[k] == c) return k + 1;
    throw ConfigError("coordinate c" + std::to_string(c) + " not in sector");
}

Sector sector_from_text(const std::string& s) {
    Sector sec;
    std::stringstream ss(s);
    std::string item;
    while (std::getline(ss, item, '<')) {
        size_t pos = 0;
        int v;
        try {
            v = std::stoi(item, &pos);
        } catch (const std::exception&) {
            throw ConfigError("bad sector: " + s);
        }
        while (pos < item.size() && std::isspace(static_cast<unsigned char>(item[pos]))) pos++;
        if (pos != item.size()) throw ConfigError("bad sector: " + s);
        sec.order.push_back(v);
    }
    sec.t = static_cast<int>(sec.order.size());
    std::vector<bool> seen(sec.t + 1, false);
    for (int c : sec.order) {
        if (c < 1 || c > sec.t || seen[c]) throw ConfigError("sector is not a permutation: " + s);
        seen[c] = true;
    }
    if (sec.t < 1) throw ConfigError("empty sector");
    return sec;
}

std::string to_text(const Sector& sec) {
    std::string out;
    for (int k = 0; k < sec.t; k++) {
        if (k) out += "<";
        out += std::to_string(sec.order[k]);
    }
    return out;
}

Sector dual_sector(const Sector& sec) {
    Sector out;
    out.t = sec.t;
    out.order.resize(sec.t);
    for (int k = 0; k < sec.t; k++) out.order[k] = sec.t + 1 - sec.order[k];
    return out;
}

Sector increasing_sector(int t) {
    Sector sec;
    sec.t = t;
    sec.order.resize(t);
    std::iota(sec.order.begin(), sec.order.end(), 1);
    return sec;
}

std::vector<Sector> all_sectors(int t) {
    std::vector<int> perm(t);
    std::iota(perm.begin(), perm.end(), 1);
    std::vector<Sector> out;
    do {
        Sector sec;
        sec.t = t;
        sec.order = perm;
        out.push_back(std::move(sec));
    } while (std::next_permutation(perm.begin(), perm.end()));
    return out;
}

bool lifts_to(const RelationSet& rs, const Sector& sec) {
    internal_check(rs.t == sec.t, "relation set and sector sizes differ");
    for (const auto& [a, b] : rs.rels)
        if (sec.rank(a) >= sec.rank(b)) return false;
    return true;
}

std::vector<int> quasi_extremal_columns(const Diagram& d) {
    if (!is_complete(d))
        throw Precondition("quasi extremal columns are defined for complete diagrams, got " +
                           to_text(d));
    int r = d.height();
    int se = strongly_extremal_column(d);
    std::vector<int> out;
    for (int c = 1; c <= d.cols(); c++) {
        if (c == se) continue;
        bool left_ok = true, right_ok = true;
        for (int k = 1; k < c; k++)
            if (d.ht(k) > d.ht(c)) left_ok = false;
        for (int k = c + 1; k <= d.cols(); k++)
            if (d.ht(k) > d.ht(c)) right_ok = false;
        if (left_ok || right_ok) {
            internal_check(d.ht(c) == r || d.ht(c) == r - 1,
                           "quasi extremal columns sit at the top two levels");
            out.push_back(c);
        }
    }
    return out;
}

std::vector<BlockLink> single_block_links(const ClassKey& key) {
    std::vector<BlockLink> out;
    const Diagram reps[2] = {key.canonical, partner_representative(key)};
    for (const Diagram& rep : reps) {
        int r = rep.height();
        if (r == 0) continue;
        for (int col : quasi_extremal_columns(rep)) {
            if (rep.ht(col) != r - 1) continue;
            Diagram next = rep;
            next.ht(col) += 1;
            internal_check(check_boundary(next),
                           "adding a block on a quasi extremal column keeps the boundary");
            Tableau tab = number(next);
            int lab = tab.entry(col, r);
            internal_check(lab >= 1 && lab <= key.t(), "edge labels lie in 1..t");
            ClassKey target = canonical_key(next);
            internal_check(strongly_extremal_column(next) == target.label(),
                           "the strongly extremal column is a class invariant");
            out.push_back({std::move(target), lab});
        }
    }
    std::sort(out.begin(), out.end());
    out.erase(std::unique(out.begin(), out.end()), out.end());
    for (std::size_t i = 0; i + 1 < out.size(); i++)
        internal_check(out[i].target != out[i + 1].target,
                       "a neighbouring class is reached with one label only");
    return out;
}

}  // namespace sgr
