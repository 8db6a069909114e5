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

#include <algorithm>
#include <random>
#include <set>
#include <vector>

#include "doctest.h"
#include "sgr/diagram.hpp"
#include "sgr/enumeration.hpp"
#include "sgr/errors.hpp"
#include "support.hpp"

using namespace sgr;
using test::for_each_heights;

namespace {

Diagram dg(std::vector<int> h) { return Diagram::of(std::move(h)); }

// Literal restatement of the boundary conditions, used as an oracle.
bool boundary_oracle(const Diagram& d) {
    const int r = d.height();
    for (int i = 1; i <= d.cols(); i++) {
        bool left = true;
        bool right = true;
        for (int j = 1; j < i; j++)
            if (d.ht(j) >= d.ht(i)) left = false;
        for (int j = i + 1; j <= d.cols(); j++)
            if (d.ht(j) >= d.ht(i)) right = false;
        if (left && d.ht(i) % 2 != 0 && d.ht(i) != r) return false;
        if (right && d.ht(i) % 2 != 1 && d.ht(i) != r) return false;
    }
    return true;
}

// Applies random legal moves from the given generator until none is left.
Diagram random_fixpoint(Diagram d, bool adjoin, std::mt19937& rng) {
    while (true) {
        auto moves = adjoin ? legal_adjunctions(d) : legal_removals(d);
        if (moves.empty()) return d;
        std::uniform_int_distribution<std::size_t> pick(0, moves.size() - 1);
        d = apply_move(d, moves[pick(rng)]);
    }
}

}  // namespace

TEST_CASE("diagram basics and text round trip") {
    const Diagram d = dg({2, 1, 0, 2});
    CHECK(d.t == 3);
    CHECK(d.cols() == 4);
    CHECK(d.ht(1) == 2);
    CHECK(d.ht(3) == 0);
    CHECK(d.height() == 2);
    CHECK_FALSE(d.is_empty());
    CHECK(d.row_count(1) == 3);
    CHECK(d.row_count(2) == 2);
    CHECK(d.row_count(3) == 0);

    CHECK(Diagram::empty(2).heights == std::vector<int>{0, 0, 0});
    CHECK(Diagram::empty(2).is_empty());
    CHECK(Diagram::empty(2).height() == 0);

    CHECK(to_text(d) == "(2,1,0,2)");
    CHECK(to_text(Diagram::empty(2)) == "(0,0,0)");
    CHECK(diagram_from_text("2,1,0,2") == d);
    CHECK(diagram_from_text("(2,1,0,2)") == d);
    for_each_heights(2, 3, [](const Diagram& x) { CHECK(diagram_from_text(to_text(x)) == x); });
}

TEST_CASE("boundary conditions match the oracle and known cases") {
    CHECK(check_boundary(dg({2, 1, 0, 2})));
    CHECK(check_boundary(dg({0, 1, 1})));
    CHECK(check_boundary(dg({2, 2, 1})));
    CHECK(check_boundary(Diagram::empty(1)));
    CHECK(check_boundary(Diagram::empty(4)));
    CHECK_FALSE(check_boundary(dg({1, 0, 0})));
    CHECK_FALSE(check_boundary(dg({0, 1, 0})));
    CHECK_FALSE(check_boundary(dg({3, 2, 1, 4})));

    for (int t = 1; t <= 3; t++) {
        for_each_heights(t, t + 2, [&](const Diagram& d) {
            CHECK(check_boundary(d) == boundary_oracle(d));
            // The last column of a nonempty boundary diagram is occupied.
            if (check_boundary(d) && !d.is_empty()) CHECK(d.ht(t + 1) > 0);
        });
    }
}

TEST_CASE("extremal columns") {
    const Diagram d = dg({2, 1, 0, 2});
    CHECK(left_extremal(d, 1));
    CHECK_FALSE(left_extremal(d, 2));
    CHECK(right_extremal(d, 4));
    CHECK_FALSE(right_extremal(d, 1));
    // A height 0 column is extremal only at the outer ends.
    CHECK(left_extremal(Diagram::empty(2), 1));
    CHECK_FALSE(left_extremal(Diagram::empty(2), 2));
    CHECK(right_extremal(Diagram::empty(2), 3));
    CHECK_FALSE(right_extremal(Diagram::empty(2), 2));
}

TEST_CASE("strongly extremal column") {
    CHECK(strongly_extremal_column(dg({0, 1, 1})) == 2);
    CHECK(strongly_extremal_column(Diagram::empty(2)) == 3);
    CHECK(strongly_extremal_column(Diagram::empty(4)) == 5);
    CHECK(strongly_extremal_column(dg({2, 1, 2, 2})) == 4);
    CHECK(strongly_extremal_column(dg({2, 1, 2, 2, 1})) == 4);
    CHECK(strongly_extremal_column(dg({2, 1, 2, 2, 2})) == 5);
    CHECK(strongly_extremal_column(dg({1, 1})) == 1);
}

TEST_CASE("domino adjunctions and removals") {
    const DominoMove le3{3, MoveKind::LeftEvenAdjoin};
    CHECK(legal_adjunctions(dg({2, 1, 0, 2})) == std::vector<DominoMove>{le3});
    CHECK(legal_adjunctions(Diagram::empty(2)).empty());
    CHECK(legal_adjunctions(dg({0, 1, 1})).empty());
    CHECK(legal_removals(Diagram::empty(2)).empty());

    CHECK(apply_move(dg({2, 1, 0, 2}), le3) == dg({2, 1, 2, 2}));
    CHECK(apply_move(dg({0, 2, 1}), {1, MoveKind::LeftEvenAdjoin}) == dg({2, 2, 1}));
    CHECK(apply_move(dg({2, 1, 2, 2}), {3, MoveKind::LeftEvenRemove}) == dg({2, 1, 0, 2}));
    CHECK_THROWS_AS(apply_move(Diagram::empty(2), {1, MoveKind::LeftEvenAdjoin}), IllegalMove);
    CHECK_THROWS_AS(apply_move(dg({2, 1, 0, 2}), {1, MoveKind::RightOddAdjoin}), IllegalMove);

    // Every legal adjunction is undone by the removal at the same column,
    // and vice versa.
    for_each_heights(2, 4, [](const Diagram& d) {
        for (const DominoMove& m : legal_adjunctions(d)) {
            MoveKind inverse = m.kind == MoveKind::LeftEvenAdjoin ? MoveKind::LeftEvenRemove
                                                                  : MoveKind::RightOddRemove;
            CHECK(apply_move(apply_move(d, m), {m.col, inverse}) == d);
        }
        for (const DominoMove& m : legal_removals(d)) {
            MoveKind inverse = m.kind == MoveKind::LeftEvenRemove ? MoveKind::LeftEvenAdjoin
                                                                  : MoveKind::RightOddAdjoin;
            CHECK(apply_move(apply_move(d, m), {m.col, inverse}) == d);
        }
    });
}

TEST_CASE("complete and deplete fixed points") {
    CHECK(complete(dg({2, 1, 0, 2})) == dg({2, 1, 2, 2}));
    CHECK(is_complete(dg({2, 1, 2, 2})));
    CHECK(is_complete(dg({0, 1, 1})));
    CHECK(is_complete(Diagram::empty(3)));
    CHECK_FALSE(is_complete(dg({2, 1, 0, 2})));
    CHECK(complete(dg({3, 2, 1, 4})) == dg({3, 4, 3, 4}));

    CHECK(deplete(dg({2, 1, 2, 2})) == dg({2, 1, 0, 2}));
    CHECK(deplete(Diagram::empty(2)) == Diagram::empty(2));
    CHECK(deplete(dg({0, 1, 1})) == dg({0, 1, 1}));

    for_each_heights(2, 4, [](const Diagram& d) {
        CHECK(is_complete(d) == legal_adjunctions(d).empty());
        CHECK(is_complete(complete(d)));
        CHECK(legal_removals(deplete(d)).empty());
    });
}

TEST_CASE("fixed points do not depend on the order of moves") {
    std::mt19937 rng(20260817);
    for_each_heights(2, 4, [&](const Diagram& d) {
        if (!check_boundary(d)) return;
        for (int trial = 0; trial < 3; trial++) {
            CHECK(random_fixpoint(d, true, rng) == complete(d));
            CHECK(random_fixpoint(d, false, rng) == deplete(d));
        }
    });
}

TEST_CASE("row cancellation") {
    CHECK(row_cancellable(dg({2, 2}), 1));
    CHECK(cancel_rows(dg({2, 2}), 1) == Diagram::empty(1));
    CHECK(reduce_rows(dg({2, 2})) == Diagram::empty(1));
    CHECK(reduce_rows(dg({2, 1, 0, 2})) == dg({2, 1, 0, 2}));
    CHECK(reduce_rows(dg({3, 3, 1, 3})) == dg({1, 1, 1, 1}));
    CHECK(is_reduced(dg({1, 1})));
    CHECK_FALSE(is_reduced(dg({2, 2})));
    CHECK_THROWS_AS(cancel_rows(dg({2, 1, 0, 2}), 1), IllegalMove);

    // Cancelling drops every column of height > level by exactly two and a
    // reduced diagram has strictly decreasing row lengths.
    for_each_heights(2, 4, [](const Diagram& d) {
        const Diagram r = reduce_rows(d);
        CHECK(is_reduced(r));
        for (int level = 1; level < r.height(); level++)
            CHECK(r.row_count(level) > r.row_count(level + 1));
    });
}

TEST_CASE("half domino moves") {
    CHECK(half_domino_adjoin(dg({0, 1, 1})) == dg({0, 2, 1}));
    CHECK(half_domino_adjoin(Diagram::empty(2)) == dg({0, 0, 1}));
    CHECK(half_domino_removal_column(dg({1, 1})) == std::nullopt);
    CHECK(half_domino_removal_column(dg({0, 2, 1})) == 2);
    CHECK(half_domino_remove(dg({0, 2, 1})) == dg({0, 1, 1}));
    CHECK_THROWS_AS(half_domino_remove(dg({1, 1})), IllegalMove);

    // Adjoining two half dominoes raises the completion uniformly by two.
    for_each_heights(2, 3, [](const Diagram& d) {
        if (!check_boundary(d)) return;
        const Diagram twice = half_domino_adjoin(half_domino_adjoin(d));
        Diagram lifted = complete(d);
        for (int& h : lifted.heights) h += 2;
        CHECK(complete(twice) == lifted);
    });
}

TEST_CASE("dual diagrams") {
    CHECK(dual(dg({0, 1, 1})) == dg({2, 2, 1}));
    CHECK(dual(Diagram::empty(1)) == dg({1, 1}));
    CHECK(dual(dg({2, 1, 2, 2})) == dg({1, 1, 0, 1}));

    // An involution on reduced diagrams.
    for_each_heights(2, 3, [](const Diagram& d) {
        const Diagram r = reduce_rows(d);
        CHECK(is_reduced(dual(r)));
        CHECK(dual(dual(r)) == r);
    });
}

TEST_CASE("canonical keys and partners") {
    CHECK(canonical_key(dg({0, 0, 1})) == canonical_key(Diagram::empty(2)));
    CHECK(canonical_key(dg({2, 1, 0, 2})) == canonical_key(dg({2, 1, 2, 2})));
    CHECK(canonical_key(dg({2, 1, 0, 2})).canonical == dg({2, 1, 2, 2}));
    CHECK(partner_representative(canonical_key(dg({2, 1, 0, 2}))) == dg({2, 1, 2, 3}));
    CHECK(canonical_key(dg({0, 1, 1})) == canonical_key(dg({2, 2, 1})));
    CHECK(canonical_key(dg({0, 1, 1})).canonical == dg({0, 1, 1}));
    CHECK(partner_representative(canonical_key(dg({0, 1, 1}))) == dg({2, 2, 1}));

    const ClassKey k = canonical_key(dg({2, 1, 0, 2}));
    CHECK(k.t() == 3);
    CHECK(k.height() == 2);
    CHECK(k.label() == 4);

    // Duality on classes: the key of the dual of any representative.
    CHECK(canonical_key(dual(dg({0, 1, 1, 1}))) == canonical_key(dg({0, 0, 1, 1})));
    for (const ClassKey& key : enumerate_classes(3)) {
        const ClassKey d = canonical_key(dual(key.canonical));
        CHECK(canonical_key(dual(d.canonical)) == key);
    }
}

TEST_CASE("class closure holds exactly two reduced complete members") {
    for (int t = 1; t <= 2; t++) {
        for (const ClassKey& key : enumerate_classes(t)) {
            std::set<Diagram> reps;
            for (const Diagram& m : class_closure(key.canonical))
                if (is_reduced(m) && is_complete(m)) reps.insert(m);
            const Diagram partner = partner_representative(key);
            CHECK(reps == std::set<Diagram>{key.canonical, partner});
            CHECK(partner.height() == key.canonical.height() + 1);
        }
    }
}

TEST_CASE("equivalence moves preserve boundary, extremal column and class") {
    for_each_heights(2, 4, [](const Diagram& d) {
        if (!check_boundary(d)) return;
        const int se = strongly_extremal_column(d);
        const ClassKey key = canonical_key(d);
        std::vector<Diagram> moved;
        for (const DominoMove& m : legal_adjunctions(d)) moved.push_back(apply_move(d, m));
        for (const DominoMove& m : legal_removals(d)) moved.push_back(apply_move(d, m));
        moved.push_back(half_domino_adjoin(d));
        if (half_domino_removal_column(d)) moved.push_back(half_domino_remove(d));
        moved.push_back(reduce_rows(d));
        for (const Diagram& e : moved) {
            CHECK(check_boundary(e));
            CHECK(strongly_extremal_column(e) == se);
            CHECK(canonical_key(e) == key);
        }
    });
}

TEST_CASE("packed heights separate small diagrams") {
    CHECK(pack_heights(Diagram::empty(3)) == 0);
    std::set<std::uint64_t> seen;
    for_each_heights(3, 4, [&](const Diagram& d) { CHECK(seen.insert(pack_heights(d)).second); });
}
