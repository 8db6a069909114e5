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

#include "sgr/preparation.hpp"

#include <algorithm>

#include "sgr/errors.hpp"

namespace sgr {

namespace {

bool set_why(std::string* why, const std::string& message) {
    if (why) *why = message;
    return false;
}

}  // namespace

bool verify_certificate(const SCertificate& cert, std::string* why) {
    const Sector& sec = cert.sector;
    if (cert.path.empty()) return set_why(why, "empty path");
    if (cert.edge_labels.size() + 1 != cert.path.size())
        return set_why(why, "label count does not match path length");
    const int t = cert.path.front().t();
    if (sec.t != t) return set_why(why, "sector size does not match the classes");

    // Every step must be a single block link carrying the recorded label.
    for (std::size_t j = 0; j < cert.edge_labels.size(); j++) {
        bool found = false;
        for (const BlockLink& link : single_block_links(cert.path[j])) {
            if (link.target == cert.path[j + 1]) {
                if (link.edge_label != cert.edge_labels[j])
                    return set_why(why, "step " + std::to_string(j) + " has label " +
                                            std::to_string(link.edge_label) + ", certificate says " +
                                            std::to_string(cert.edge_labels[j]));
                found = true;
                break;
            }
        }
        if (!found)
            return set_why(why, "classes at step " + std::to_string(j) + " are not linked");
    }

    // Labels strictly increase in the sector's order.
    for (std::size_t j = 1; j < cert.edge_labels.size(); j++) {
        if (sec.rank(cert.edge_labels[j - 1]) >= sec.rank(cert.edge_labels[j]))
            return set_why(why, "edge labels do not increase in sector order at step " +
                                    std::to_string(j));
    }

    // The rearranged difference reproduces the reading map values and its
    // coefficients are nonnegative on the sector.
    LinForm start_fn = eval_class(cert.start());
    LinForm target_fn = eval_class(cert.target());
    RSum rearranged = rearranged_difference(cert);
    if (rearranged.to_linform() != target_fn - start_fn)
        return set_why(why, "rearranged difference does not telescope");
    const int k = cert.target().label();
    for (int u = 1; u <= t + 1; u++) {
        if (u == k) continue;
        CVec row(t, 0);
        for (int j = 1; j <= t; j++) row[j - 1] = -rearranged.coeff(u, j);
        if (!nonneg_on_sector(row, sec))
            return set_why(why, "coefficient against r" + std::to_string(u) +
                                    " is not nonnegative on the sector");
    }
    if (why) why->clear();
    return true;
}

RSum rearranged_difference(const SCertificate& cert) {
    const int t = cert.path.front().t();
    const int k = cert.target().label();
    RSum sum = RSum::zero(t);
    int prev_label = 0;  // c_0 = 0
    for (std::size_t j = 0; j < cert.edge_labels.size(); j++) {
        int lab = cert.edge_labels[j];
        int u = cert.path[j].label();
        if (prev_label != 0) sum.add_rdiff(prev_label, k, u, -1);
        sum.add_rdiff(lab, k, u);
        prev_label = lab;
    }
    return sum;
}

SCertificate prepare(const LabeledGraph& class_graph, const Sector& sec,
                     const ClassKey& from, int to_label) {
    LabeledGraph sub = sector_subgraph(class_graph, sec);
    int start = -1;
    for (int v = 0; v < sub.size(); v++) {
        if (sub.keys[v] == from) {
            start = v;
            break;
        }
    }
    if (start < 0)
        throw Precondition("class " + to_text(from.canonical) +
                           " does not belong to the family of sector " + to_text(sec));
    auto path = ordered_path(sub, sec, start, to_label);
    if (!path)
        throw NoPath("no ordered path from " + to_text(from.canonical) + " to label " +
                     std::to_string(to_label) + " in sector " + to_text(sec));
    SCertificate cert;
    cert.sector = sec;
    for (int v : *path) cert.path.push_back(sub.keys[v]);
    for (std::size_t j = 0; j + 1 < path->size(); j++) {
        int u = (*path)[j], w = (*path)[j + 1];
        for (const auto& [nbr, lab] : sub.adj[u]) {
            if (nbr == w) {
                cert.edge_labels.push_back(lab);
                break;
            }
        }
    }
    internal_check(cert.edge_labels.size() + 1 == cert.path.size(),
                   "every path step has an edge label");
    return cert;
}

AdaptedSequence adapted_sequence(int m, const Sector& sec) {
    internal_check(m >= 1 && m <= sec.t + 1, "markers lie in 1..t+1");
    // c_0 = 0 sits below every coordinate of the open cone.
    auto le = [&](int a, int b) { return a == 0 || (b != 0 && sec.rank(a) <= sec.rank(b)); };
    AdaptedSequence out;
    out.m = m;
    std::vector<int> ks;
    int bound = m;   // next k must be < bound
    int cmp = m - 1; // and satisfy c_{k-1} <= c_{cmp}
    while (bound > 1) {
        int k = 0;
        for (int cand = bound - 1; cand >= 1; cand--) {
            if (le(cand - 1, cmp)) {
                k = cand;
                break;
            }
        }
        internal_check(k >= 1, "the adapted sequence always reaches 1");
        ks.push_back(k);
        bound = k;
        cmp = k - 1;
    }
    std::reverse(ks.begin(), ks.end());
    internal_check(ks.empty() || ks.front() == 1, "the adapted sequence starts at 1");
    out.ks = std::move(ks);
    out.s = static_cast<int>(out.ks.size()) + 1;
    return out;
}

SCertificate dual_certificate(const SCertificate& cert) {
    const int t = cert.sector.t;
    SCertificate out;
    out.sector = dual_sector(cert.sector);
    for (const ClassKey& key : cert.path) out.path.push_back(canonical_key(dual(key.canonical)));
    for (int lab : cert.edge_labels) out.edge_labels.push_back(t + 1 - lab);
    return out;
}

SCertificate level_one_prepare(const ClassKey& from, const Sector& sec) {
    const int t = from.t();
    internal_check(sec.t == t, "sector size does not match the class");
    if (from.canonical.height() > 1)
        throw Precondition("level one preparation needs a class of height at most 1, got " +
                           to_text(from.canonical));
    if (!in_H_of_c(from, sec))
        throw Precondition("class " + to_text(from.canonical) +
                           " does not belong to the family of sector " + to_text(sec));

    // Appends one walk step and checks the edge difference law
    // f_next - f_prev = c_lab (r^{i_next} - r^{i_prev}) for it.
    auto checked_step = [&](SCertificate& cert, const Diagram& next, int lab, int ri, int rj) {
        ClassKey key = canonical_key(next);
        LinForm want = LinForm::zero(t);
        want.add_term(lab, r_diff(t, ri, rj));
        internal_check(eval_class(key) - eval_class(cert.path.back()) == want,
                       "walk step difference follows the edge law");
        cert.path.push_back(key);
        cert.edge_labels.push_back(lab);
    };

    // The height one representative; for the class of the empty diagram that
    // is the partner, a single block in the last column.
    Diagram rep = from.canonical.is_empty() ? partner_representative(from) : from.canonical;
    internal_check(rep.height() == 1, "the representative is a partial first row");

    SCertificate cert;
    if (rep.row_count(1) == t + 1) {
        // A full first row dualizes to the empty class.
        cert = dual_certificate(level_one_prepare(canonical_key(dual(rep)), dual_sector(sec)));
    } else {
        int m = 0;  // first empty column
        for (int i = 1; i <= t + 1 && m == 0; i++)
            if (rep.ht(i) == 0) m = i;
        int n = 0;  // first occupied column after the gap
        for (int i = m + 1; i <= t + 1 && n == 0; i++)
            if (rep.ht(i) == 1) n = i;
        internal_check(n > m, "the last column of a level one representative is occupied");

        cert.sector = sec;
        cert.path.push_back(from);

        if (m == 1) {
            // One step: the block added on column n-1 links straight to the
            // target family.
            Diagram next = rep;
            next.ht(n - 1) += 1;
            checked_step(cert, next, n - 1, n - 1, n);
        } else {
            AdaptedSequence ad = adapted_sequence(m, sec);
            // Switch to the taller representative inside the class: a second
            // level block over column 1. This is not an edge of the walk.
            Diagram cur = rep;
            cur.ht(1) += 1;
            internal_check(canonical_key(cur) == from,
                           "the representative switch stays in the class");
            // Second level blocks along the adapted sequence, then over
            // column n.
            for (std::size_t i = 1; i < ad.ks.size(); i++) {
                cur.ht(ad.ks[i]) += 1;
                checked_step(cert, cur, ad.ks[i] - 1, ad.ks[i], ad.ks[i - 1]);
            }
            cur.ht(n) += 1;
            checked_step(cert, cur, m - 1, n, ad.ks.back());
            // Final step: complete, then lift the second level block off
            // column n.
            Diagram comp = complete(cur);
            internal_check(comp.height() == 2 && comp.ht(n) == 2,
                           "the completed walk diagram is two levels high over column n");
            comp.ht(n) -= 1;
            checked_step(cert, comp, n - 1, n - 1, n);
            internal_check(cert.target().label() == n - 1,
                           "the endpoint family is the column before the gap end");
        }
    }
    for (const ClassKey& key : cert.path)
        internal_check(in_H_of_c(key, sec), "the walk stays inside the sector's family");
    return cert;
}

std::string edge_sum_text(const SCertificate& cert) {
    if (cert.edge_labels.empty()) return "0";
    std::string out;
    for (std::size_t j = 0; j < cert.edge_labels.size(); j++) {
        if (j) out += " + ";
        out += "c" + std::to_string(cert.edge_labels[j]) + "*(r" +
               std::to_string(cert.path[j + 1].label()) + "-r" +
               std::to_string(cert.path[j].label()) + ")";
    }
    return out;
}

std::string rearranged_text(const SCertificate& cert) {
    if (cert.edge_labels.empty()) return "0";
    const int t = cert.path.front().t();
    const int k = cert.target().label();
    std::string out;
    int prev = 0;
    for (std::size_t j = 0; j < cert.edge_labels.size(); j++) {
        CVec combo(t, 0);
        combo[cert.edge_labels[j] - 1] += 1;
        if (prev != 0) combo[prev - 1] -= 1;
        if (j) out += " + ";
        out += to_text(combo, true) + "*(r" + std::to_string(k) + "-r" +
               std::to_string(cert.path[j].label()) + ")";
        prev = cert.edge_labels[j];
    }
    return out;
}

std::string to_text(const SCertificate& cert) {
    std::string out = "sector " + to_text(cert.sector) + "\n";
    out += to_text(cert.path[0].canonical) + " [" + std::to_string(cert.path[0].label()) + "]";
    for (std::size_t j = 0; j < cert.edge_labels.size(); j++) {
        out += " --" + std::to_string(cert.edge_labels[j]) + "--> ";
        out += to_text(cert.path[j + 1].canonical) + " [" +
               std::to_string(cert.path[j + 1].label()) + "]";
    }
    out += "\n";
    out += "edge sum   " + edge_sum_text(cert) + "\n";
    out += "rearranged " + rearranged_text(cert) + "\n";
    LinForm delta = eval_class(cert.target()) - eval_class(cert.start());
    out += "difference " + to_text_m(delta) + "\n";
    return out;
}

}  // namespace sgr
