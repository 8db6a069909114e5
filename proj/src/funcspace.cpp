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

#include "sgr/funcspace.hpp"

#include <algorithm>
#include <cstdlib>

#include "sgr/errors.hpp"

namespace sgr {

MVec r_diff(int t, int i, int j) {
    internal_check(i >= 1 && i <= t + 1 && j >= 1 && j <= t + 1, "r indices lie in 1..t+1");
    MVec v(t + 1, 0);
    if (i == j) return v;
    std::int64_t sign = 1;
    if (i > j) {
        std::swap(i, j);
        sign = -1;
    }
    v[i - 1] = sign;
    v[j - 1] = sign;
    for (int k = i + 1; k < j; k++) v[k - 1] = 2 * sign;
    return v;
}

LinForm LinForm::zero(int t) {
    internal_check(t >= 1, "forms need t >= 1");
    LinForm f;
    f.t = t;
    f.a.assign(static_cast<std::size_t>(t + 1) * t, 0);
    return f;
}

LinForm LinForm::ground(int t) {
    LinForm f = zero(t);
    for (int i = 1; i <= t; i++) f.coeff(i, i) = -1;
    return f;
}

void LinForm::add_term(int cj, const MVec& mv, std::int64_t c) {
    internal_check(cj >= 1 && cj <= t, "coordinate index out of range");
    internal_check(static_cast<int>(mv.size()) == t + 1, "MVec has t+1 entries");
    for (int i = 1; i <= t + 1; i++) coeff(i, cj) += c * mv[i - 1];
}

bool LinForm::mrow_is_zero(int mi) const {
    for (int j = 1; j <= t; j++)
        if (coeff(mi, j) != 0) return false;
    return true;
}

LinForm& LinForm::operator+=(const LinForm& o) {
    internal_check(t == o.t, "form sizes differ");
    for (std::size_t k = 0; k < a.size(); k++) a[k] += o.a[k];
    return *this;
}

LinForm& LinForm::operator-=(const LinForm& o) {
    internal_check(t == o.t, "form sizes differ");
    for (std::size_t k = 0; k < a.size(); k++) a[k] -= o.a[k];
    return *this;
}

RSum RSum::zero(int t) {
    internal_check(t >= 1, "sums need t >= 1");
    RSum s;
    s.t = t;
    s.a.assign(static_cast<std::size_t>(t + 1) * t, 0);
    return s;
}

void RSum::add_rdiff(int cj, int i, int j, std::int64_t c) {
    internal_check(cj >= 1 && cj <= t, "coordinate index out of range");
    internal_check(i >= 1 && i <= t + 1 && j >= 1 && j <= t + 1, "r indices lie in 1..t+1");
    coeff(i, cj) += c;
    coeff(j, cj) -= c;
}

CVec RSum::rrow(int ri) const {
    CVec v(t, 0);
    for (int j = 1; j <= t; j++) v[j - 1] = coeff(ri, j);
    return v;
}

LinForm RSum::to_linform() const {
    LinForm f = LinForm::zero(t);
    for (int j = 1; j <= t; j++) {
        std::int64_t prefix = 0;
        for (int i = 1; i <= t; i++) {
            prefix += coeff(i, j);
            if (prefix != 0) f.add_term(j, r_diff(t, i, i + 1), prefix);
        }
        prefix += coeff(t + 1, j);
        internal_check(prefix == 0, "r coefficients of a telescoping sum cancel");
    }
    return f;
}

LinForm eval_row(const Tableau& tab, int row) {
    const Diagram& d = tab.d;
    LinForm f = LinForm::zero(d.t);
    std::vector<int> u;
    for (int i = 1; i <= d.cols(); i++)
        if (d.ht(i) >= row) u.push_back(i);
    if (row % 2 == 1) {
        for (std::size_t i = 0; i + 1 < u.size(); i++) {
            int e = tab.entry(u[i], row);
            internal_check(e != 0, "only the last block of an odd row is a slash");
            f.add_term(e, r_diff(d.t, u[i], u[i + 1]));
        }
    } else {
        for (std::size_t i = 1; i < u.size(); i++) {
            int e = tab.entry(u[i], row);
            internal_check(e != 0, "only the first block of an even row is a slash");
            f.add_term(e, r_diff(d.t, u[i], u[i - 1]));
        }
    }
    return f;
}

LinForm eval_tableau(const Tableau& tab) {
    LinForm f = LinForm::ground(tab.d.t);
    for (int s = 1; s <= tab.d.height(); s++) f += eval_row(tab, s);
    return f;
}

LinForm eval_class(const ClassKey& key) { return eval_tableau(number(key.canonical)); }

LinForm dual_fn(const LinForm& f) {
    LinForm g = LinForm::zero(f.t);
    for (int i = 1; i <= f.t + 1; i++)
        for (int j = 1; j <= f.t; j++) g.coeff(f.t + 2 - i, f.t + 1 - j) = -f.coeff(i, j);
    return g;
}

std::vector<int> support(const LinForm& f) {
    std::vector<int> out;
    for (int j = 1; j <= f.t; j++) {
        for (int i = 1; i <= f.t + 1; i++) {
            if (f.coeff(i, j) != 0) {
                out.push_back(j);
                break;
            }
        }
    }
    return out;
}

RDecomposition r_decompose(const LinForm& f) {
    LinForm g = f - LinForm::ground(f.t);
    RDecomposition d;
    d.t = f.t;
    d.kappa.assign(f.t, CVec(f.t, 0));
    for (int j = 1; j <= f.t; j++) {
        std::int64_t prev = 0;
        for (int i = 1; i <= f.t; i++) {
            std::int64_t k = g.coeff(i, j) - prev;
            d.kappa[i - 1][j - 1] = k;
            prev = k;
        }
        if (g.coeff(f.t + 1, j) != prev)
            throw NotInSpan("residual " + std::to_string(g.coeff(f.t + 1, j) - prev) +
                            " at c" + std::to_string(j) + " in " + to_text_m(f));
    }
    return d;
}

bool nonneg_on_sector(const CVec& v, const Sector& sec) {
    internal_check(static_cast<int>(v.size()) == sec.t, "vector and sector sizes differ");
    std::int64_t suffix = 0;
    for (int k = sec.t - 1; k >= 0; k--) {
        suffix += v[sec.order[k] - 1];
        if (suffix < 0) return false;
    }
    return true;
}

bool fn_nonneg_combination(const LinForm& f, const Sector& sec) {
    RDecomposition d = r_decompose(f);
    for (const CVec& k : d.kappa)
        if (!nonneg_on_sector(k, sec)) return false;
    return true;
}

bool in_H_of_c(const ClassKey& key, const Sector& sec) {
    return lifts_to(partial_order(number(key.canonical)), sec);
}

namespace {

std::string monomial(std::int64_t coeff, const std::string& var) {
    std::string out;
    if (coeff == 1) return var;
    if (coeff == -1) return "-" + var;
    return std::to_string(coeff) + "*" + var;
}

}  // namespace

std::string to_text(const CVec& v, bool parens_if_sum) {
    std::string body;
    int terms = 0;
    for (std::size_t j = 0; j < v.size(); j++) {
        if (v[j] == 0) continue;
        std::string mono = monomial(v[j], "c" + std::to_string(j + 1));
        if (terms > 0 && mono.front() != '-') body += "+";
        body += mono;
        terms++;
    }
    if (terms == 0) return "0";
    if (terms > 1 && parens_if_sum) return "(" + body + ")";
    return body;
}

namespace {

// Appends " + term" or " - term" to out, folding the sign of single
// monomials into the joiner. Sums keep their parentheses.
void append_term(std::string& out, const CVec& v, const std::string& tail) {
    int terms = 0;
    for (std::int64_t x : v) terms += x != 0;
    internal_check(terms > 0, "zero terms are skipped by the caller");
    if (terms == 1) {
        std::string body = to_text(v);
        bool neg = body.front() == '-';
        if (neg) body.erase(body.begin());
        if (out.empty()) {
            out += neg ? "-" : "";
        } else {
            out += neg ? " - " : " + ";
        }
        out += body + tail;
    } else {
        if (!out.empty()) out += " + ";
        out += to_text(v, true) + tail;
    }
}

}  // namespace

std::string to_text_m(const LinForm& f) {
    std::string out;
    for (int i = 1; i <= f.t + 1; i++) {
        CVec row(f.t, 0);
        bool nonzero = false;
        for (int j = 1; j <= f.t; j++) {
            row[j - 1] = f.coeff(i, j);
            nonzero = nonzero || row[j - 1] != 0;
        }
        if (!nonzero) continue;
        append_term(out, row, "*m" + std::to_string(i));
    }
    return out.empty() ? "0" : out;
}

std::string to_text_r(const LinForm& f) {
    RDecomposition d = r_decompose(f);
    std::string out = "h";
    int i = 1;
    while (i <= f.t) {
        bool zero = std::all_of(d.kappa[i - 1].begin(), d.kappa[i - 1].end(),
                                [](std::int64_t x) { return x == 0; });
        if (zero) {
            i++;
            continue;
        }
        int k = i;
        while (k + 1 <= f.t && d.kappa[k] == d.kappa[i - 1]) k++;
        append_term(out, d.kappa[i - 1],
                    "*(r" + std::to_string(i) + "-r" + std::to_string(k + 1) + ")");
        i = k + 1;
    }
    return out;
}

}  // namespace sgr
