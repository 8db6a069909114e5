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

#include <string>
#include <utility>
#include <vector>

#include "sgr/diagram.hpp"

namespace sgr {

// A tableau is a diagram with one entry per block. Entry 0 stands for the
// slash that marks the extremal block of each row; other entries are column
// indices in 1..t+1.
struct Tableau {
    Diagram d;
    std::vector<std::vector<int>> cells;  // cells[col-1][row-1]

    int entry(int col, int row) const { return cells[col - 1][row - 1]; }
    bool is_slash(int col, int row) const { return entry(col, row) == 0; }
};

// The neighbour of column i at level s: the nearest column on the given side
// whose height reaches s (every column strictly between is then lower than
// s). Returns 0 when there is none.
int left_neighbour(const Diagram& d, int col, int level);
int right_neighbour(const Diagram& d, int col, int level);

// The canonical numbering. In each nonempty row the extremal block gets a
// slash: the rightmost block if the row is odd, the leftmost if even. Other
// blocks in row 1 get their own column index. A block of row j+1 copies the
// entry of its neighbour block at level j: the left neighbour if j is odd,
// the right neighbour if j is even.
Tableau number(const Diagram& d);

// A tableau is well numbered when every non-slash entry of an odd row j
// equals its column index and every non-slash entry of an even row equals
// the column index minus one. Complete diagrams are always well numbered.
bool is_well_numbered(const Tableau& tab);

std::string to_text(const Tableau& tab);

// A strict relation c_a < c_b between coordinate indices a, b in 1..t.
using Relation = std::pair<int, int>;

// The relation set read off a tableau, one batch per row anchored at a
// column and its neighbour. Level 0 behaves as a virtual row numbered
// b(i,0) = i-1 with a slash in column 1. The result is sorted and deduped;
// a cyclic set throws CycleDetected.
struct RelationSet {
    int t = 0;
    std::vector<Relation> rels;  // (a, b) means c_a < c_b

    bool operator==(const RelationSet&) const = default;
};

RelationSet partial_order(const Tableau& tab);

std::string to_text(const RelationSet& rs);

// A total order on coordinates c_1, ..., c_t, written "2<1<3": order[k] is
// the index of the k-th smallest coordinate.
struct Sector {
    int t = 0;
    std::vector<int> order;

    // Position of coordinate index c in the chain, 1-based.
    int rank(int c) const;
    bool operator==(const Sector&) const = default;
};

Sector sector_from_text(const std::string& s);
std::string to_text(const Sector& sec);
Sector dual_sector(const Sector& sec);
Sector increasing_sector(int t);
std::vector<Sector> all_sectors(int t);

// Whether every relation holds in the total order of the sector.
bool lifts_to(const RelationSet& rs, const Sector& sec);

// Quasi extremal columns of a complete diagram: columns that are not the
// strongly extremal column but see only strictly lower or equal columns on
// one side, all of height at most their own. Their heights are r or r-1.
// Throws Precondition on incomplete input.
std::vector<int> quasi_extremal_columns(const Diagram& d);

// A link from one equivalence class to another: adding one block on top of
// a quasi extremal column of height r-1 of either reduced complete
// representative lands in a neighbouring class. The edge label is the
// numbering entry of the added block.
struct BlockLink {
    ClassKey target;
    int edge_label = 0;

    auto operator<=>(const BlockLink&) const = default;
};

std::vector<BlockLink> single_block_links(const ClassKey& key);

}  // namespace sgr
