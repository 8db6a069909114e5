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

#include <cstdint>
#include <string>
#include <vector>

#include "sgr/tableau.hpp"

namespace sgr {

// Functions are integer bilinear forms in coordinates c_1..c_t and formal
// symbols m^1..m^{t+1}. The ground function is h = -(c_1 m^1 + ... + c_t m^t).
// The symbols r^1..r^{t+1} are determined up to a common shift by
// r^i - r^{i+1} = m^i + m^{i+1}, so for i < j
// r^i - r^j = m^i + 2 m^{i+1} + ... + 2 m^{j-1} + m^j.

using CVec = std::vector<std::int64_t>;  // length t, coefficients of c_1..c_t
using MVec = std::vector<std::int64_t>;  // length t+1, coefficients of m^1..m^{t+1}

MVec r_diff(int t, int i, int j);  // r^i - r^j as an MVec, any i, j in 1..t+1

struct LinForm {
    int t = 0;
    std::vector<std::int64_t> a;  // (t+1) x t row major, a[(mi-1)*t + (cj-1)]

    static LinForm zero(int t);
    static LinForm ground(int t);  // h

    std::int64_t coeff(int mi, int cj) const { return a[(mi - 1) * t + (cj - 1)]; }
    std::int64_t& coeff(int mi, int cj) { return a[(mi - 1) * t + (cj - 1)]; }
    // Adds coeff * c_cj * mv.
    void add_term(int cj, const MVec& mv, std::int64_t coeff = 1);
    bool mrow_is_zero(int mi) const;

    LinForm& operator+=(const LinForm& o);
    LinForm& operator-=(const LinForm& o);
    friend LinForm operator+(LinForm a, const LinForm& b) { return a += b; }
    friend LinForm operator-(LinForm a, const LinForm& b) { return a -= b; }
    bool operator==(const LinForm&) const = default;
};

// A formal integer combination of c_j r^i, used for path sums where the
// telescoping structure matters. Row i is the CVec coefficient of r^i.
struct RSum {
    int t = 0;
    std::vector<std::int64_t> a;  // (t+1) x t row major

    static RSum zero(int t);
    std::int64_t coeff(int ri, int cj) const { return a[(ri - 1) * t + (cj - 1)]; }
    std::int64_t& coeff(int ri, int cj) { return a[(ri - 1) * t + (cj - 1)]; }
    // Adds coeff * c_cj * (r^i - r^j).
    void add_rdiff(int cj, int i, int j, std::int64_t coeff = 1);
    CVec rrow(int ri) const;
    // Valid when every column's r coefficients sum to zero.
    LinForm to_linform() const;

    bool operator==(const RSum&) const = default;
};

// The reading map. Row s of the tableau with blocks in columns u_1 < ... < u_k
// contributes, for s odd, the sum over i < k of c_{b(u_i,s)} (r^{u_i} - r^{u_{i+1}}),
// and for s even the sum over i >= 2 of c_{b(u_i,s)} (r^{u_i} - r^{u_{i-1}}).
// The value of the tableau is the ground function plus all row contributions.
LinForm eval_row(const Tableau& tab, int row);
LinForm eval_tableau(const Tableau& tab);

// The common value of the reading map on an equivalence class (the tests
// confirm it agrees across members; this evaluates the canonical form).
LinForm eval_class(const ClassKey& key);

// Duality on functions, compatible with the dual diagram: the coefficient of
// c_j m^i maps to minus the coefficient at (t+2-i, t+1-j).
LinForm dual_fn(const LinForm& f);

// Coordinates c_j whose column is nonzero.
std::vector<int> support(const LinForm& f);

// f - ground expressed as sum over i of kappa_i (r^i - r^{i+1}) with CVec
// coefficients kappa_i; throws NotInSpan when no such expression exists.
struct RDecomposition {
    int t = 0;
    std::vector<CVec> kappa;  // kappa[i-1] multiplies r^i - r^{i+1}
};

RDecomposition r_decompose(const LinForm& f);

// Whether the linear functional v . c is nonnegative on the open cone
// 0 < c_{order[0]} < c_{order[1]} < ... of the sector. Exact: it holds iff
// every suffix sum in sector order is nonnegative.
bool nonneg_on_sector(const CVec& v, const Sector& sec);

// Whether every kappa_i of r_decompose(f) is nonnegative on the sector.
bool fn_nonneg_combination(const LinForm& f, const Sector& sec);

// Class membership in the family attached to a sector: the relation set of
// the canonical representative lifts to the total order of the sector.
bool in_H_of_c(const ClassKey& key, const Sector& sec);

std::string to_text(const CVec& v, bool parens_if_sum = false);
std::string to_text_m(const LinForm& f);  // "-c2*m1 + (c1-2*c2)*m2 - c3*m3"
std::string to_text_r(const LinForm& f);  // "h + (c1-c2)*(r1-r2)"

}  // namespace sgr
