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

#include "sgr/diagram.hpp"

#include <algorithm>
#include <deque>
#include <set>
#include <sstream>

#include "sgr/errors.hpp"

namespace sgr {

Diagram Diagram::empty(int t) {
    internal_check(t >= 1, "diagram size must be at least 1");
    Diagram d;
    d.t = t;
    d.heights.assign(t + 1, 0);
    return d;
}

Diagram Diagram::of(std::vector<int> heights) {
    internal_check(heights.size() >= 2, "a diagram needs at least 2 columns");
    for (int h : heights) internal_check(h >= 0, "column heights must be >= 0");
    Diagram d;
    d.t = static_cast<int>(heights.size()) - 1;
    d.heights = std::move(heights);
    return d;
}

int Diagram::height() const {
    return *std::max_element(heights.begin(), heights.end());
}

bool Diagram::is_empty() const {
    return std::all_of(heights.begin(), heights.end(), [](int h) { return h == 0; });
}

int Diagram::row_count(int level) const {
    int n = 0;
    for (int h : heights)
        if (h >= level) n++;
    return n;
}

std::string to_text(const Diagram& d) {
    std::string s = "(";
    for (int i = 1; i <= d.cols(); i++) {
        if (i > 1) s += ",";
        s += std::to_string(d.ht(i));
    }
    return s + ")";
}

Diagram diagram_from_text(const std::string& s) {
    std::string body = s;
    if (!body.empty() && body.front() == '(') body.erase(body.begin());
    if (!body.empty() && body.back() == ')') body.pop_back();
    std::vector<int> hs;
    std::stringstream ss(body);
    std::string item;
    while (std::getline(ss, item, ',')) {
        size_t pos = 0;
        int v;
        try {
            v = std::stoi(item, &pos);
        } catch (const std::exception&) {
            throw ConfigError("bad height list: " + s);
        }
        while (pos < item.size() && std::isspace(static_cast<unsigned char>(item[pos]))) pos++;
        if (pos != item.size() || v < 0) throw ConfigError("bad height list: " + s);
        hs.push_back(v);
    }
    if (hs.size() < 2) throw ConfigError("a diagram needs at least 2 columns: " + s);
    return Diagram::of(std::move(hs));
}

bool left_extremal(const Diagram& d, int col) {
    for (int k = 1; k < col; k++)
        if (d.ht(k) >= d.ht(col)) return false;
    return true;
}

bool right_extremal(const Diagram& d, int col) {
    for (int k = col + 1; k <= d.cols(); k++)
        if (d.ht(k) >= d.ht(col)) return false;
    return true;
}

bool check_boundary(const Diagram& d) {
    int r = d.height();
    for (int i = 1; i <= d.cols(); i++) {
        int h = d.ht(i);
        if (left_extremal(d, i) && h % 2 != 0 && h != r) return false;
        if (right_extremal(d, i) && h % 2 != 1 && h != r) return false;
    }
    return true;
}

int strongly_extremal_column(const Diagram& d) {
    if (d.is_empty()) return d.cols();
    int r = d.height();
    if (r % 2 == 1) {
        for (int i = 1; i <= d.cols(); i++)
            if (d.ht(i) == r) return i;
    } else {
        for (int i = d.cols(); i >= 1; i--)
            if (d.ht(i) == r) return i;
    }
    return d.cols();  // unreachable
}

namespace {

// Nearest column right of j of height > i must have height >= i+2.
bool adjoin_test_right(const Diagram& d, int j, int i) {
    for (int k = j + 1; k <= d.cols(); k++) {
        if (d.ht(k) >= i + 1) return d.ht(k) >= i + 2;
    }
    return false;
}

bool adjoin_test_left(const Diagram& d, int j, int i) {
    for (int k = j - 1; k >= 1; k--) {
        if (d.ht(k) >= i + 1) return d.ht(k) >= i + 2;
    }
    return false;
}

}  // namespace

bool is_legal(const Diagram& d, const DominoMove& m) {
    if (m.col < 1 || m.col > d.cols()) return false;
    int h = d.ht(m.col);
    switch (m.kind) {
        case MoveKind::LeftEvenAdjoin:
            return h % 2 == 0 && adjoin_test_right(d, m.col, h);
        case MoveKind::RightOddAdjoin:
            return h % 2 == 1 && adjoin_test_left(d, m.col, h);
        case MoveKind::LeftEvenRemove:
            // The test reads only the other columns, so checking it on d is
            // the same as checking the adjunction on the lowered diagram.
            return h >= 2 && h % 2 == 0 && adjoin_test_right(d, m.col, h - 2);
        case MoveKind::RightOddRemove:
            return h >= 2 && h % 2 == 1 && adjoin_test_left(d, m.col, h - 2);
    }
    return false;
}

Diagram apply_move(const Diagram& d, const DominoMove& m) {
    if (!is_legal(d, m)) {
        throw IllegalMove("illegal domino move at column " + std::to_string(m.col) +
                          " of " + to_text(d));
    }
    Diagram out = d;
    bool adjoin = m.kind == MoveKind::LeftEvenAdjoin || m.kind == MoveKind::RightOddAdjoin;
    out.ht(m.col) += adjoin ? 2 : -2;
    return out;
}

std::vector<DominoMove> legal_adjunctions(const Diagram& d) {
    std::vector<DominoMove> out;
    for (int j = 1; j <= d.cols(); j++) {
        MoveKind k = d.ht(j) % 2 == 0 ? MoveKind::LeftEvenAdjoin : MoveKind::RightOddAdjoin;
        if (is_legal(d, {j, k})) out.push_back({j, k});
    }
    return out;
}

std::vector<DominoMove> legal_removals(const Diagram& d) {
    std::vector<DominoMove> out;
    for (int j = 1; j <= d.cols(); j++) {
        MoveKind k = d.ht(j) % 2 == 0 ? MoveKind::LeftEvenRemove : MoveKind::RightOddRemove;
        if (is_legal(d, {j, k})) out.push_back({j, k});
    }
    return out;
}

bool is_complete(const Diagram& d) { return legal_adjunctions(d).empty(); }

Diagram complete(const Diagram& d) {
    Diagram cur = d;
    // Each adjunction raises one column by 2 without raising the maximum, so
    // the total shortfall below the maximum strictly decreases.
    for (std::size_t guard = 0; ; guard++) {
        internal_check(guard < 4 * kClosureNodeCap, "completion did not terminate");
        auto moves = legal_adjunctions(cur);
        if (moves.empty()) return cur;
        cur = apply_move(cur, moves.front());
    }
}

Diagram deplete(const Diagram& d) {
    Diagram cur = d;
    for (std::size_t guard = 0; ; guard++) {
        internal_check(guard < 4 * kClosureNodeCap, "depletion did not terminate");
        auto moves = legal_removals(cur);
        if (moves.empty()) return cur;
        cur = apply_move(cur, moves.front());
    }
}

bool row_cancellable(const Diagram& d, int level) {
    if (level < 1) return false;
    int n = d.row_count(level);
    return n > 0 && n == d.row_count(level + 1);
}

Diagram cancel_rows(const Diagram& d, int level) {
    if (!row_cancellable(d, level)) {
        throw IllegalMove("rows " + std::to_string(level) + "," + std::to_string(level + 1) +
                          " of " + to_text(d) + " do not cancel");
    }
    Diagram out = d;
    for (int i = 1; i <= d.cols(); i++) {
        internal_check(d.ht(i) != level, "cancellable rows cannot end at distinct columns");
        if (d.ht(i) >= level + 1) out.ht(i) -= 2;
    }
    return out;
}

bool is_reduced(const Diagram& d) {
    for (int s = 1; s < d.height(); s++)
        if (row_cancellable(d, s)) return false;
    return true;
}

Diagram reduce_rows(const Diagram& d) {
    Diagram cur = d;
    for (;;) {
        int s = 0;
        for (int lvl = 1; lvl < cur.height(); lvl++) {
            if (row_cancellable(cur, lvl)) {
                s = lvl;
                break;
            }
        }
        if (s == 0) return cur;
        cur = cancel_rows(cur, s);
    }
}

Diagram half_domino_adjoin(const Diagram& d) {
    Diagram out = d;
    out.ht(strongly_extremal_column(d)) += 1;
    return out;
}

std::optional<int> half_domino_removal_column(const Diagram& d) {
    std::optional<int> found;
    for (int c = 1; c <= d.cols(); c++) {
        if (d.ht(c) == 0) continue;
        Diagram lower = d;
        lower.ht(c) -= 1;
        if (strongly_extremal_column(lower) == c && check_boundary(lower)) {
            internal_check(!found.has_value(), "half domino removal is not unique in " + to_text(d));
            found = c;
        }
    }
    return found;
}

Diagram half_domino_remove(const Diagram& d) {
    auto col = half_domino_removal_column(d);
    if (!col) throw IllegalMove("no half domino removal from " + to_text(d));
    Diagram out = d;
    out.ht(*col) -= 1;
    return out;
}

Diagram dual(const Diagram& d) {
    Diagram out = d;
    std::reverse(out.heights.begin(), out.heights.end());
    for (int& h : out.heights) h += 1;
    return reduce_rows(out);
}

namespace {

// One round of completion followed by reduction, iterated to a joint fixed
// point. From any member this lands on one of the two class representatives.
Diagram reduced_complete_fixpoint(Diagram x) {
    for (;;) {
        Diagram next = reduce_rows(complete(x));
        if (next == x) return x;
        x = std::move(next);
    }
}

}  // namespace

std::vector<Diagram> class_closure(const Diagram& d, std::size_t node_cap) {
    // Both representatives sit at height <= complete(d).height() + 1, and all
    // connecting moves stay at most one block above that.
    const int cap = complete(d).height() + 2;
    std::set<Diagram> seen;
    std::deque<Diagram> queue;
    seen.insert(d);
    queue.push_back(d);
    auto push = [&](const Diagram& n) {
        if (n.height() > cap) return;
        if (seen.insert(n).second) {
            if (seen.size() > node_cap)
                throw ClosureDiverged("class closure of " + to_text(d) + " exceeded " +
                                      std::to_string(node_cap) + " diagrams");
            queue.push_back(n);
        }
    };
    while (!queue.empty()) {
        Diagram cur = queue.front();
        queue.pop_front();
        for (const auto& m : legal_adjunctions(cur)) push(apply_move(cur, m));
        for (const auto& m : legal_removals(cur)) push(apply_move(cur, m));
        for (int s = 1; s < cur.height(); s++)
            if (row_cancellable(cur, s)) push(cancel_rows(cur, s));
        push(half_domino_adjoin(cur));
        if (half_domino_removal_column(cur)) push(half_domino_remove(cur));
    }
    return std::vector<Diagram>(seen.begin(), seen.end());
}

ClassKey canonical_key(const Diagram& d) {
    // Walking to a representative and, from there, one half domino step plus
    // completion reaches both representatives without a full closure.
    Diagram rep = reduced_complete_fixpoint(d);
    Diagram other;
    if (half_domino_removal_column(rep)) {
        other = reduced_complete_fixpoint(half_domino_remove(rep));
    } else {
        other = reduced_complete_fixpoint(half_domino_adjoin(rep));
    }
    internal_check(other.height() != rep.height(),
                   "class representatives of " + to_text(d) + " collide in height");
    ClassKey key;
    key.canonical = rep.height() < other.height() ? rep : other;
    return key;
}

Diagram partner_representative(const ClassKey& key) {
    Diagram up = reduced_complete_fixpoint(half_domino_adjoin(key.canonical));
    internal_check(up.height() == key.canonical.height() + 1,
                   "partner representative of " + to_text(key.canonical) +
                       " has unexpected height");
    internal_check(is_complete(up) && is_reduced(up),
                   "partner representative must be reduced and complete");
    return up;
}

std::uint64_t pack_heights(const Diagram& d) {
    internal_check(d.cols() <= 16, "pack_heights supports at most 16 columns");
    std::uint64_t key = 0;
    for (int i = 1; i <= d.cols(); i++) {
        internal_check(d.ht(i) <= 15, "pack_heights supports heights up to 15");
        key |= static_cast<std::uint64_t>(d.ht(i)) << (4 * (i - 1));
    }
    return key;
}

}  // namespace sgr
