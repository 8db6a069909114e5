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

#include "sgr/enumeration.hpp"

#include <algorithm>
#include <deque>
#include <set>

#ifdef _OPENMP
#include <omp.h>
#endif

#include "sgr/errors.hpp"
#include "sgr/tableau.hpp"

namespace sgr {

namespace {

// Height vector for a linear index in the odometer over {0..t+1}^{t+1}.
Diagram diagram_at(int t, std::uint64_t index) {
    const std::uint64_t base = t + 2;
    Diagram d = Diagram::empty(t);
    for (int i = 1; i <= t + 1; i++) {
        d.ht(i) = static_cast<int>(index % base);
        index /= base;
    }
    return d;
}

std::uint64_t scan_size(int t) {
    std::uint64_t n = 1;
    for (int i = 0; i < t + 1; i++) n *= t + 2;
    return n;
}

std::vector<ClassKey> sorted_keys(std::set<ClassKey>&& found) {
    return std::vector<ClassKey>(std::make_move_iterator(found.begin()),
                                 std::make_move_iterator(found.end()));
}

}  // namespace

std::vector<ClassKey> enumerate_classes_serial(int t) {
    internal_check(t >= 1 && t <= kMaxEnumerationT, "enumeration supports 1 <= t <= 8");
    std::set<ClassKey> found;
    const std::uint64_t n = scan_size(t);
    for (std::uint64_t idx = 0; idx < n; idx++) {
        Diagram d = diagram_at(t, idx);
        if (!check_boundary(d)) continue;
        found.insert(canonical_key(d));
    }
    return sorted_keys(std::move(found));
}

std::vector<ClassKey> enumerate_classes(int t, int jobs) {
    internal_check(t >= 1 && t <= kMaxEnumerationT, "enumeration supports 1 <= t <= 8");
    if (jobs == 1) return enumerate_classes_serial(t);
#ifdef _OPENMP
    const std::uint64_t n = scan_size(t);
    const std::int64_t sn = static_cast<std::int64_t>(n);
    std::set<ClassKey> found;
    if (jobs > 0) omp_set_num_threads(jobs);
#pragma omp parallel
    {
        std::set<ClassKey> local;
#pragma omp for schedule(static)
        for (std::int64_t idx = 0; idx < sn; idx++) {
            Diagram d = diagram_at(t, static_cast<std::uint64_t>(idx));
            if (!check_boundary(d)) continue;
            local.insert(canonical_key(d));
        }
#pragma omp critical
        found.merge(local);
    }
    return sorted_keys(std::move(found));
#else
    (void)jobs;
    return enumerate_classes_serial(t);
#endif
}

std::vector<ClassKey> enumerate_classes_link_bfs(int t) {
    std::set<ClassKey> seen;
    std::deque<ClassKey> queue;
    ClassKey start = canonical_key(Diagram::empty(t));
    seen.insert(start);
    queue.push_back(start);
    while (!queue.empty()) {
        ClassKey cur = queue.front();
        queue.pop_front();
        for (const BlockLink& link : single_block_links(cur)) {
            if (seen.insert(link.target).second) queue.push_back(link.target);
        }
    }
    return sorted_keys(std::move(seen));
}

std::vector<std::size_t> strata_counts(const std::vector<ClassKey>& classes, int t) {
    std::vector<std::size_t> counts(t + 1, 0);
    for (const ClassKey& key : classes) {
        int j = key.label();
        internal_check(j >= 1 && j <= t + 1, "class labels lie in 1..t+1");
        counts[j - 1]++;
    }
    return counts;
}

std::uint64_t binomial(int n, int k) {
    if (k < 0 || k > n) return 0;
    std::uint64_t out = 1;
    for (int i = 1; i <= k; i++) out = out * (n - k + i) / i;
    return out;
}

std::uint64_t catalan(int n) { return binomial(2 * n, n) / (n + 1); }

}  // namespace sgr
