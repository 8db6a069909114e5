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

#include "sgr/suites.hpp"

#include <algorithm>
#include <cstdint>
#include <map>
#include <set>
#include <sstream>

#include "sgr/enumeration.hpp"
#include "sgr/errors.hpp"

#ifdef _OPENMP
#include <omp.h>
#endif

namespace sgr {

namespace {

// Applies fn to every diagram of size t with heights at most max_h.
template <typename Fn>
void for_each_diagram(int t, int max_h, Fn&& fn) {
    Diagram d = Diagram::empty(t);
    while (true) {
        fn(const_cast<const Diagram&>(d));
        int i = 0;
        while (i <= t && d.heights[i] == max_h) d.heights[i++] = 0;
        if (i > t) break;
        d.heights[i] += 1;
    }
}

bool is_signed_unit(const LinForm& f, int mi, int sign) {
    int nonzero = 0;
    bool good = true;
    for (int cj = 1; cj <= f.t; cj++) {
        std::int64_t a = f.coeff(mi, cj);
        if (a == 0) continue;
        nonzero += 1;
        if (a != sign) good = false;
    }
    return nonzero == 1 && good;
}

PropertyCheck make_check(const std::string& name, bool pass, std::string detail) {
    return PropertyCheck{name, pass, std::move(detail)};
}

std::vector<Sector> sectors_under_test(int t, const std::optional<Sector>& only) {
    if (only) {
        internal_check(only->t == t, "sector size must match t");
        return {*only};
    }
    return all_sectors(t);
}

// Runs fn on every sector, appending its checks in sector order. fn must be
// pure up to its output slot so the sector loop can run in parallel.
template <typename Fn>
void per_sector(PropertyReport& report, int t, const std::optional<Sector>& only, int jobs,
                Fn&& fn) {
    std::vector<Sector> secs = sectors_under_test(t, only);
    std::vector<std::vector<PropertyCheck>> slots(secs.size());
    const std::int64_t n = static_cast<std::int64_t>(secs.size());
#ifdef _OPENMP
    if (jobs > 0) omp_set_num_threads(jobs);
#pragma omp parallel for schedule(dynamic) if (jobs != 1)
#endif
    for (std::int64_t i = 0; i < n; i++) fn(secs[i], slots[i]);
    (void)jobs;
    for (auto& slot : slots)
        for (auto& check : slot) report.checks.push_back(std::move(check));
}

std::string count_detail(std::size_t got, std::uint64_t want) {
    return std::to_string(got) + " found, " + std::to_string(want) + " expected";
}

}  // namespace

PropertyReport suite_counts(int t, int jobs) {
    PropertyReport report;
    std::vector<ClassKey> classes = enumerate_classes(t, jobs);

    report.checks.push_back(make_check("class count", classes.size() == catalan(t + 1),
                                       count_detail(classes.size(), catalan(t + 1))));

    std::vector<std::size_t> strata = strata_counts(classes, t);
    bool strata_ok = true;
    std::ostringstream strata_text;
    for (int j = 1; j <= t + 1; j++) {
        std::uint64_t want = catalan(j - 1) * catalan(t - j + 1);
        if (strata[j - 1] != want) strata_ok = false;
        strata_text << (j > 1 ? " " : "") << strata[j - 1];
    }
    report.checks.push_back(
        make_check("strata counts", strata_ok, "by label: " + strata_text.str()));

    const std::uint64_t family_want = std::uint64_t{1} << t;
    bool family_ok = true;
    std::string family_detail;
    std::set<ClassKey> core(classes.begin(), classes.end());
    for (const Sector& sec : all_sectors(t)) {
        std::set<ClassKey> members;
        for (const ClassKey& key : classes)
            if (in_H_of_c(key, sec)) members.insert(key);
        if (members.size() != family_want && family_detail.empty()) {
            family_ok = false;
            family_detail = "sector " + to_text(sec) + ": " +
                            count_detail(members.size(), family_want);
        }
        std::set<ClassKey> next;
        std::set_intersection(core.begin(), core.end(), members.begin(), members.end(),
                              std::inserter(next, next.begin()));
        core = std::move(next);
    }
    if (family_detail.empty())
        family_detail = std::to_string(all_sectors(t).size()) + " sectors, " +
                        std::to_string(family_want) + " classes each";
    report.checks.push_back(make_check("family sizes", family_ok, family_detail));

    std::set<ClassKey> unordered;
    for (const ClassKey& key : classes)
        if (partial_order(number(key.canonical)).rels.empty()) unordered.insert(key);
    std::set<ClassKey> chain;
    for (int i = 1; i <= t + 2; i++) {
        Diagram row = Diagram::empty(t);
        for (int col = i; col <= t + 1; col++) row.ht(col) = 1;
        chain.insert(canonical_key(row));
    }
    bool core_ok = core == unordered && core == chain &&
                   core.size() == static_cast<std::size_t>(t + 1);
    report.checks.push_back(make_check(
        "common core", core_ok,
        "all families share " + count_detail(core.size(), static_cast<std::uint64_t>(t + 1))));

    std::vector<ClassKey> via_links = enumerate_classes_link_bfs(t);
    report.checks.push_back(make_check("link search agreement", via_links == classes,
                                       count_detail(via_links.size(), classes.size())));
    return report;
}

PropertyReport suite_properties(int t, const std::optional<Sector>& only, int jobs) {
    PropertyReport report;
    LabeledGraph full = build_class_graph(t, jobs);
    per_sector(report, t, only, jobs, [&](const Sector& sec, std::vector<PropertyCheck>& out) {
        LabeledGraph sub = sector_subgraph(full, sec);
        PropertyReport inner = check_properties(sub, sec);
        std::string detail = std::to_string(inner.checks.size()) + " checks";
        for (const PropertyCheck& check : inner.checks) {
            if (!check.pass) {
                detail = check.name + ": " + check.detail;
                break;
            }
        }
        out.push_back(make_check("properties " + to_text(sec), inner.all_pass(), detail));
    });
    return report;
}

PropertyReport suite_theorem85(int t, const std::optional<Sector>& only, int jobs) {
    PropertyReport report;
    LabeledGraph full = build_class_graph(t, jobs);
    per_sector(report, t, only, jobs, [&](const Sector& sec, std::vector<PropertyCheck>& out) {
        TheoremCheck check = verify_sector_graph(full, sec);
        out.push_back(make_check("sector graph " + to_text(sec), check.pass, check.detail));
    });
    return report;
}

PropertyReport suite_preparation(int t, const std::optional<Sector>& only, int jobs) {
    PropertyReport report;
    LabeledGraph full = build_class_graph(t, jobs);
    per_sector(report, t, only, jobs, [&](const Sector& sec, std::vector<PropertyCheck>& out) {
        LabeledGraph sub = sector_subgraph(full, sec);
        bool ok = true;
        std::string detail;
        std::size_t built = 0;
        for (int v = 0; v < sub.size() && ok; v++) {
            for (int label = 1; label <= t + 1 && ok; label++) {
                std::string why;
                try {
                    SCertificate cert = prepare(full, sec, sub.keys[v], label);
                    if (!verify_certificate(cert, &why)) {
                        ok = false;
                        detail = to_text(sub.keys[v].canonical) + " to label " +
                                 std::to_string(label) + ": " + why;
                    }
                    built += 1;
                } catch (const std::exception& e) {
                    ok = false;
                    detail = to_text(sub.keys[v].canonical) + " to label " +
                             std::to_string(label) + ": " + e.what();
                }
            }
        }
        if (ok) detail = std::to_string(built) + " certificates";
        out.push_back(make_check("preparation " + to_text(sec), ok, detail));

        bool lo_ok = true;
        std::string lo_detail;
        std::size_t walks = 0, guards = 0;
        for (const ClassKey& key : full.keys) {
            if (key.height() > 1) continue;
            if (in_H_of_c(key, sec)) {
                std::string why;
                try {
                    SCertificate cert = level_one_prepare(key, sec);
                    if (!verify_certificate(cert, &why)) {
                        lo_ok = false;
                        lo_detail = to_text(key.canonical) + ": " + why;
                        break;
                    }
                    walks += 1;
                } catch (const std::exception& e) {
                    lo_ok = false;
                    lo_detail = to_text(key.canonical) + ": " + e.what();
                    break;
                }
            } else {
                bool threw = false;
                try {
                    level_one_prepare(key, sec);
                } catch (const Precondition&) {
                    threw = true;
                }
                if (!threw) {
                    lo_ok = false;
                    lo_detail = to_text(key.canonical) + ": non member was not rejected";
                    break;
                }
                guards += 1;
            }
        }
        if (lo_ok)
            lo_detail =
                std::to_string(walks) + " walks, " + std::to_string(guards) + " rejections";
        out.push_back(make_check("level one " + to_text(sec), lo_ok, lo_detail));
    });
    return report;
}

PropertyReport suite_duality(int t, int jobs) {
    PropertyReport report;
    std::vector<ClassKey> classes = enumerate_classes(t, jobs);

    bool involution_ok = true;
    bool fn_ok = true;
    std::string involution_detail, fn_detail;
    for (const ClassKey& key : classes) {
        ClassKey once = canonical_key(dual(key.canonical));
        if (canonical_key(dual(once.canonical)) != key) {
            involution_ok = false;
            involution_detail = to_text(key.canonical);
            break;
        }
        if (eval_class(once) != dual_fn(eval_class(key)) && fn_ok) {
            fn_ok = false;
            fn_detail = to_text(key.canonical);
        }
    }
    if (involution_ok) involution_detail = std::to_string(classes.size()) + " classes";
    if (fn_ok) fn_detail = std::to_string(classes.size()) + " classes";
    report.checks.push_back(make_check("dual involution", involution_ok, involution_detail));
    report.checks.push_back(make_check("dual reading map", fn_ok, fn_detail));

    bool family_ok = true;
    std::string family_detail;
    for (const Sector& sec : all_sectors(t)) {
        std::set<ClassKey> dual_members, members_of_dual;
        for (const ClassKey& key : classes) {
            if (in_H_of_c(key, sec)) dual_members.insert(canonical_key(dual(key.canonical)));
            if (in_H_of_c(key, dual_sector(sec))) members_of_dual.insert(key);
        }
        if (dual_members != members_of_dual) {
            family_ok = false;
            family_detail = "sector " + to_text(sec);
            break;
        }
    }
    if (family_ok) family_detail = std::to_string(all_sectors(t).size()) + " sectors";
    report.checks.push_back(make_check("dual families", family_ok, family_detail));

    std::vector<std::size_t> strata = strata_counts(classes, t);
    std::vector<std::size_t> mirrored(strata.rbegin(), strata.rend());
    report.checks.push_back(
        make_check("mirrored strata", strata == mirrored, "by label, reversed"));
    return report;
}

PropertyReport suite_classfn(int t, int jobs) {
    PropertyReport report;
    std::vector<ClassKey> classes = enumerate_classes(t, jobs);

    bool equal_ok = true;
    std::string equal_detail;
    std::size_t members = 0;
    for (const ClassKey& key : classes) {
        LinForm want = eval_class(key);
        for (const Diagram& d : class_closure(key.canonical)) {
            members += 1;
            if (eval_tableau(number(d)) != want) {
                equal_ok = false;
                equal_detail = to_text(d) + " in class " + to_text(key.canonical);
                break;
            }
        }
        if (!equal_ok) break;
    }
    if (equal_ok) equal_detail = std::to_string(members) + " members across all closures";
    report.checks.push_back(make_check("constant on classes", equal_ok, equal_detail));

    std::set<std::vector<std::int64_t>> distinct;
    for (const ClassKey& key : classes) distinct.insert(eval_class(key).a);
    report.checks.push_back(make_check("injective on classes", distinct.size() == classes.size(),
                                       count_detail(distinct.size(), classes.size())));

    bool support_ok = true;
    std::string support_detail;
    std::size_t depleted = 0;
    const LinForm ground = LinForm::ground(t);
    for_each_diagram(t, t + 1, [&](const Diagram& d) {
        if (!support_ok || !check_boundary(d) || !legal_removals(d).empty()) return;
        depleted += 1;
        std::vector<int> want;
        for (int i = 1; i <= t; i++)
            if (d.ht(i) > 0) want.push_back(i);
        if (support(eval_tableau(number(d)) - ground) != want) {
            support_ok = false;
            support_detail = to_text(d);
        }
    });
    if (support_ok) support_detail = std::to_string(depleted) + " depleted diagrams";
    report.checks.push_back(make_check("depleted support", support_ok, support_detail));

    bool zero_ok = true;
    std::string zero_detail;
    std::size_t scanned = 0;
    for_each_diagram(t, t + 2, [&](const Diagram& d) {
        if (!zero_ok || !check_boundary(d)) return;
        scanned += 1;
        if (!eval_tableau(number(d)).mrow_is_zero(strongly_extremal_column(d))) {
            zero_ok = false;
            zero_detail = to_text(d);
        }
    });
    if (zero_ok) zero_detail = std::to_string(scanned) + " diagrams";
    report.checks.push_back(make_check("zero extremal row", zero_ok, zero_detail));

    bool unit_ok = true;
    std::string unit_detail;
    std::size_t complete_count = 0;
    std::map<int, std::map<std::vector<std::int64_t>, Diagram>> by_height;
    bool height_ok = true;
    std::string height_detail;
    for_each_diagram(t, t + 2, [&](const Diagram& d) {
        if (!check_boundary(d) || !is_complete(d)) return;
        complete_count += 1;
        LinForm f = eval_tableau(number(d));
        if (unit_ok) {
            int se = strongly_extremal_column(d);
            std::vector<int> qe = quasi_extremal_columns(d);
            for (int k = 1; k <= t + 1; k++) {
                if (k == se) continue;
                bool is_qe = std::find(qe.begin(), qe.end(), k) != qe.end();
                if (is_signed_unit(f, k, k > se ? 1 : -1) != is_qe) {
                    unit_ok = false;
                    unit_detail = to_text(d) + " at column " + std::to_string(k);
                    break;
                }
            }
        }
        if (height_ok) {
            auto [it, inserted] = by_height[d.height()].emplace(f.a, d);
            if (!inserted && it->second != d) {
                height_ok = false;
                height_detail = to_text(it->second) + " and " + to_text(d);
            }
        }
    });
    if (unit_ok) unit_detail = std::to_string(complete_count) + " complete diagrams";
    if (height_ok) height_detail = std::to_string(complete_count) + " complete diagrams";
    report.checks.push_back(make_check("signed unit rows", unit_ok, unit_detail));
    report.checks.push_back(make_check("injective per height", height_ok, height_detail));
    return report;
}

PropertyReport suite_sgraph_count(int t) {
    PropertyReport report;
    std::size_t distinct = count_distinct_sgraphs(t);
    report.checks.push_back(make_check("distinct sector graphs", distinct == catalan(t),
                                       count_detail(distinct, catalan(t))));

    const std::size_t size_want = std::size_t{1} << t;
    bool size_ok = true;
    bool dual_ok = true;
    std::string size_detail, dual_detail;
    for (const Sector& sec : all_sectors(t)) {
        LabeledGraph g = build_sgraph(sec);
        if (g.size() != static_cast<int>(size_want) && size_ok) {
            size_ok = false;
            size_detail = "sector " + to_text(sec) + ": " +
                          count_detail(static_cast<std::size_t>(g.size()), size_want);
        }
        if (dual_ok && !find_labeled_isomorphism(dual_graph(g), build_sgraph(dual_sector(sec)))) {
            dual_ok = false;
            dual_detail = "sector " + to_text(sec);
        }
    }
    if (size_ok)
        size_detail = std::to_string(all_sectors(t).size()) + " sectors, " +
                      std::to_string(size_want) + " vertices each";
    if (dual_ok) dual_detail = std::to_string(all_sectors(t).size()) + " sectors";
    report.checks.push_back(make_check("vertex counts", size_ok, size_detail));
    report.checks.push_back(make_check("dual sector graphs", dual_ok, dual_detail));

    LabeledGraph tree = build_increasing_tree(t);
    LabeledGraph inc = build_sgraph(increasing_sector(t));
    bool tree_ok = find_labeled_isomorphism(tree, inc).has_value();
    std::string tree_detail = "matches the fused graph";
    if (tree_ok) {
        std::vector<std::size_t> histogram(t + 2, 0);
        for (int lab : inc.vlabel) histogram[lab] += 1;
        for (int j = 1; j <= t; j++)
            if (histogram[j] != (std::size_t{1} << (t - j))) tree_ok = false;
        if (histogram[t + 1] != 1) tree_ok = false;
        if (!tree_ok) tree_detail = "vertex label histogram is off";
    } else {
        tree_detail = "not isomorphic to the fused graph";
    }
    report.checks.push_back(make_check("increasing tree", tree_ok, tree_detail));
    return report;
}

std::vector<std::string> suite_names() {
    return {"counts",  "properties", "theorem85",    "preparation",
            "duality", "classfn",    "sgraph-count", "all"};
}

PropertyReport run_suite(const std::string& name, int t, const std::optional<Sector>& only,
                         int jobs) {
    if (name == "counts") return suite_counts(t, jobs);
    if (name == "properties") return suite_properties(t, only, jobs);
    if (name == "theorem85") return suite_theorem85(t, only, jobs);
    if (name == "preparation") return suite_preparation(t, only, jobs);
    if (name == "duality") return suite_duality(t, jobs);
    if (name == "classfn") return suite_classfn(t, jobs);
    if (name == "sgraph-count") return suite_sgraph_count(t);
    if (name == "all") {
        PropertyReport report;
        for (const std::string& each : suite_names()) {
            if (each == "all") continue;
            PropertyReport part = run_suite(each, t, only, jobs);
            for (auto& check : part.checks) report.checks.push_back(std::move(check));
        }
        return report;
    }
    throw ConfigError("unknown suite " + name + ", expected one of: counts, properties, "
                      "theorem85, preparation, duality, classfn, sgraph-count, all");
}

}  // namespace sgr
