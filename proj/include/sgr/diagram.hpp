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

#pragma once

#include <compare>
#include <cstdint>
#include <optional>
#include <string>
#include <vector>

namespace sgr {

// A diagram of size t is a row of t+1 columns of blocks with heights
// h_1, ..., h_{t+1} >= 0. Columns are indexed 1..t+1 throughout; rows
// (levels) are indexed from 1 at the bottom.
struct Diagram {
    int t = 0;
    std::vector<int> heights;  // heights[i-1] is the height of column i

    static Diagram empty(int t);
    static Diagram of(std::vector<int> heights);  // t is inferred

    int cols() const { return t + 1; }
    int ht(int col) const { return heights[col - 1]; }
    int& ht(int col) { return heights[col - 1]; }
    int height() const;  // max column height, 0 for the empty diagram
    bool is_empty() const;
    // Number of columns of height >= level (the length of that row).
    int row_count(int level) const;

    auto operator<=>(const Diagram&) const = default;
};

std::string to_text(const Diagram& d);           // "(2,1,0,2)"
Diagram diagram_from_text(const std::string& s); // accepts "2,1,0,2" or "(2,1,0,2)"

// Column i is left extremal when every column strictly to its left is
// strictly lower, and right extremal symmetrically. A column of height 0
// is left extremal only at i=1 and right extremal only at i=t+1.
bool left_extremal(const Diagram& d, int col);
bool right_extremal(const Diagram& d, int col);

// The boundary conditions: every left extremal column has even height or
// height equal to the diagram height, and every right extremal column has
// odd height or height equal to the diagram height.
bool check_boundary(const Diagram& d);

// The strongly extremal column: for a nonempty diagram of height r, the
// leftmost column of height r if r is odd, the rightmost if r is even.
// For the empty diagram it is column t+1. This index is invariant under
// all the equivalence moves below.
int strongly_extremal_column(const Diagram& d);

// Dominoes are vertical 2-block pieces added on top of a column.
// A left even adjunction at column j requires h_j even and that the nearest
// column to the right of height > h_j has height >= h_j + 2; a right odd
// adjunction requires h_j odd and the mirrored condition on the left.
// Removals are the exact inverses (lift a domino off a column of height
// >= 2 whose resulting top would have been legally adjoined).
enum class MoveKind : std::uint8_t {
    LeftEvenAdjoin,
    RightOddAdjoin,
    LeftEvenRemove,
    RightOddRemove,
};

struct DominoMove {
    int col = 0;
    MoveKind kind = MoveKind::LeftEvenAdjoin;
    auto operator<=>(const DominoMove&) const = default;
};

bool is_legal(const Diagram& d, const DominoMove& m);
Diagram apply_move(const Diagram& d, const DominoMove& m);  // throws IllegalMove
std::vector<DominoMove> legal_adjunctions(const Diagram& d);
std::vector<DominoMove> legal_removals(const Diagram& d);

// A diagram is complete when no domino adjunction is legal, and depleted
// when no domino removal is legal. Both fixed points are independent of
// the order in which moves are applied; the implementations use the first
// legal move in a fixed scan order, and the tests replay random orders.
bool is_complete(const Diagram& d);
Diagram complete(const Diagram& d);
Diagram deplete(const Diagram& d);

// Two adjacent rows of equal positive length, with the lower one ending
// exactly where the upper one does, cancel: every column of height >= s+1
// drops by 2 and shorter columns are untouched. A diagram is reduced when
// no such pair exists.
bool row_cancellable(const Diagram& d, int level);
Diagram cancel_rows(const Diagram& d, int level);  // throws IllegalMove
bool is_reduced(const Diagram& d);
Diagram reduce_rows(const Diagram& d);

// Half dominoes: a single block may always be adjoined on top of the
// strongly extremal column. The removal is the exact inverse; it is legal
// only if the result satisfies the boundary conditions and has the removal
// column as its strongly extremal column.
Diagram half_domino_adjoin(const Diagram& d);
std::optional<int> half_domino_removal_column(const Diagram& d);
Diagram half_domino_remove(const Diagram& d);  // throws IllegalMove

// The dual diagram: reverse the column order, raise every column by one
// block, and cancel rows until reduced. Duality is an involution on
// equivalence classes and on their reduced complete representatives.
Diagram dual(const Diagram& d);

// Equivalence classes. Two diagrams are equivalent when one can be turned
// into the other by a chain of domino adjunctions and removals, row
// cancellations and their inverses, and half domino moves. Every class
// contains exactly two reduced complete diagrams, of heights r and r+1;
// the canonical key is the lower one.
struct ClassKey {
    Diagram canonical;
    auto operator<=>(const ClassKey&) const = default;

    int t() const { return canonical.t; }
    int height() const { return canonical.height(); }
    // Shared strongly extremal column of every member of the class.
    int label() const { return strongly_extremal_column(canonical); }
};

// The second reduced complete representative, of height r+1.
Diagram partner_representative(const ClassKey& key);

inline constexpr std::size_t kClosureNodeCap = 10000;

// All diagrams reachable from d by single equivalence moves, capped in
// height a little above complete(d) (enough to reach both representatives)
// and in node count. Sorted.
std::vector<Diagram> class_closure(const Diagram& d,
                                   std::size_t node_cap = kClosureNodeCap);

ClassKey canonical_key(const Diagram& d);

// Packs heights into 4-bit nibbles for use as a hash key during
// enumeration. Requires at most 16 columns and all heights <= 15.
std::uint64_t pack_heights(const Diagram& d);

}  // namespace sgr
