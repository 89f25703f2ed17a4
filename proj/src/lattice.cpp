// Copyright 2026 The fenc Authors
//
// Licensed under the Apache License, Version 2.0 (the "License");
// you may not use this file except in compliance with the License.
// You may obtain a copy of the License at
//
//      http://www.apache.org/licenses/LICENSE-2.0
//
// Unless required by applicable law or agreed to in writing, software
// distributed under the License is distributed on an "AS IS" BASIS,
// WITHOUT WARRANTIES OR CONDITIONS OF ANY KIND, either express or implied.
// See the License for the specific language governing permissions and
// limitations under the License.

#include "lattice.h"

#include <algorithm>
#include <array>
#include <cmath>
#include <optional>
#include <set>
#include <stdexcept>
#include <string>

#include "fenc/builders.h"
#include "fenc/search.h"

namespace fenc::detail {

char face_type(int r, int c) { return ((r + c) % 2 + 2) % 2 == 0 ? 'X' : 'Z'; }

Grid::Grid(int rows, int cols, bool column_major) : rows_(rows), cols_(cols), cm_(column_major) {
    if (rows <= 0 || cols <= 0) throw ParameterError("grid dimensions must be positive");
}

std::size_t Grid::id(int r, int c) const {
    if (!inside(r, c)) throw std::out_of_range("grid coordinate outside lattice");
    return cm_ ? static_cast<std::size_t>(c) * rows_ + r : static_cast<std::size_t>(r) * cols_ + c;
}

PauliString Grid::op(const std::vector<std::tuple<int, int, char>> &terms) const {
    PauliString p(n());
    for (auto [r, c, t] : terms) {
        PauliString s = PauliString::single(n(), id(r, c), t);
        p *= s;
    }
    p.set_phase(0);
    return p;
}

PauliString Grid::face(int r, int c) const {
    char t = face_type(r, c);
    return op({{r, c, t}, {r, c + 1, t}, {r + 1, c, t}, {r + 1, c + 1, t}});
}

PauliString Grid::column_y(int c, int r0, int r1) const {
    PauliString p(n());
    for (int r = r0; r <= r1; ++r) p.set(id(r, c), 'Y');
    return p;
}

std::vector<std::size_t> Grid::row_path(int r) const {
    std::vector<std::size_t> out;
    for (int c = 0; c < cols_; ++c) out.push_back(id(r, c));
    return out;
}

std::vector<std::size_t> Grid::col_path(int c) const {
    std::vector<std::size_t> out;
    for (int r = 0; r < rows_; ++r) out.push_back(id(r, c));
    return out;
}

std::vector<std::size_t> Grid::box(int r0, int r1, int c0, int c1) const {
    std::vector<std::size_t> out;
    for (int r = std::max(r0, 0); r <= std::min(r1, rows_ - 1); ++r)
        for (int c = std::max(c0, 0); c <= std::min(c1, cols_ - 1); ++c) out.push_back(id(r, c));
    std::sort(out.begin(), out.end());
    return out;
}

std::vector<Qubit> Grid::qubits() const {
    std::vector<Qubit> qs(n());
    for (int r = 0; r < rows_; ++r)
        for (int c = 0; c < cols_; ++c) {
            std::size_t q = id(r, c);
            qs[q] = Qubit{static_cast<int>(q), c, r, ""};
        }
    return qs;
}

std::size_t logical_count(const std::vector<PauliString> &stabs, std::size_t n) {
    return n - rank_gf2(stabs, n);
}

PauliString letters(PauliString p) {
    p.set_phase(0);
    return p;
}

void complete_boundary(std::vector<PauliString> &stabs, const std::vector<PauliString> &vs,
                       const std::vector<PauliString> &protected_ops,
                       const std::vector<std::vector<std::size_t>> &paths, std::size_t n, std::size_t target_k) {
    Gf2Span s_span(2 * n), sv_span(2 * n);
    for (const auto &s : stabs) {
        s_span.add(s);
        sv_span.add(s);
    }
    for (const auto &v : vs) sv_span.add(v);
    static const char kLetters[3] = {'X', 'Y', 'Z'};
    for (std::size_t len = 2; len <= 3; ++len) {
        for (const auto &path : paths) {
            if (path.size() < len) continue;
            for (std::size_t i = 0; i + len <= path.size(); ++i) {
                std::size_t combos = len == 2 ? 9 : 27;
                for (std::size_t t = 0; t < combos; ++t) {
                    if (n - s_span.rank() <= target_k) return;
                    PauliString o(n);
                    std::size_t code = t;
                    // Most significant letter on the first path qubit.
                    for (std::size_t k = len; k-- > 0;) {
                        o.set(path[i + k], kLetters[code % 3]);
                        code /= 3;
                    }
                    bool ok = std::all_of(stabs.begin(), stabs.end(), [&](auto &s) { return commutes(o, s); }) &&
                              std::all_of(vs.begin(), vs.end(), [&](auto &v) { return commutes(o, v); }) &&
                              std::all_of(protected_ops.begin(), protected_ops.end(),
                                          [&](auto &v) { return commutes(o, v); });
                    if (!ok || sv_span.contains(o)) continue;
                    stabs.push_back(o);
                    s_span.add(o);
                    sv_span.add(o);
                }
            }
        }
    }
}

void gauge_fix(std::vector<PauliString> &stabs, const std::vector<PauliString> &keep, std::size_t n,
               std::size_t target_k, std::size_t w_max) {
    std::vector<std::size_t> all(n);
    for (std::size_t q = 0; q < n; ++q) all[q] = q;
    while (logical_count(stabs, n) > target_k) {
        Gf2Span span(2 * n);
        for (const auto &s : stabs) span.add(s);
        for (const auto &k : keep) span.add(k);
        std::vector<PauliString> checks = stabs;
        checks.insert(checks.end(), keep.begin(), keep.end());
        PauliSearch search(n, checks, all);
        std::vector<Word> zero((checks.size() + 63) / 64, 0);
        auto hit = search.find_min(w_max, zero, [&](const PauliString &p) { return !span.contains(p); });
        if (!hit) {
            // Nothing light: take any centralizer element outside the span.
            for (const auto &p : normalizer_basis(checks, n))
                if (!span.contains(p)) {
                    hit = p;
                    break;
                }
        }
        if (!hit) throw BuildError("gauge fixing found no independent operator");
        stabs.push_back(letters(*hit));
    }
}

PauliString coset_minimize(const PauliString &p, const std::vector<PauliString> &stabs,
                           const std::vector<std::size_t> &window, std::size_t w_max) {
    std::size_t n = p.size();
    std::size_t bound = std::min(w_max, p.weight() == 0 ? 0 : p.weight() - 1);
    if (bound == 0) return letters(p);
    auto norm = normalizer_basis(stabs, n);
    PauliSearch search(n, norm, window);
    // P may reach outside the window, so take its syndrome directly.
    std::vector<Word> target(search.syndrome_words(), 0);
    auto bits = syndrome(p, norm);
    for (std::size_t k = 0; k < bits.size(); ++k)
        if (bits[k]) target[k >> 6] |= Word{1} << (k & 63);
    auto hit = search.find_min(bound, target, [](const PauliString &) { return true; });
    return hit ? letters(*hit) : letters(p);
}

namespace {

int overlap_parity(const LogicalOperator &op, const std::array<MajoranaLabel, 2> &labels) {
    int k = 0;
    for (auto &a : op.majoranas())
        for (auto &b : labels)
            if (a == b) ++k;
    return k & 1;
}

// Rough count of candidates visited by an exhaustive window search.
double search_cost(std::size_t size, std::size_t w_max) {
    double total = 0, binom = 1;
    for (std::size_t w = 1; w <= std::min(w_max, size); ++w) {
        binom = binom * static_cast<double>(size - w + 1) / static_cast<double>(w);
        total += binom * std::pow(3.0, static_cast<double>(w - 1));
    }
    return total;
}

constexpr double kSearchCap = 2e9;

} // namespace

void label_transfers(Encoding &enc, const LabelPlan &plan) {
    const std::size_t n = enc.num_qubits();
    const int m = static_cast<int>(enc.num_modes());
    auto reduce = [&](PauliString p, const std::vector<std::vector<std::size_t>> &windows) {
        p = letters(p);
        for (const auto &window : windows) {
            if (search_cost(window.size(), plan.w_max) > kSearchCap) continue;
            PauliString cand = coset_minimize(p, enc.stabilizers, window, plan.w_max);
            if (cand.weight() < p.weight()) p = cand;
        }
        return p;
    };
    for (const auto &req : plan.requests) {
        const int i = req.from, j = req.to;
        if (i == j || i < 0 || j < 0 || i >= m || j >= m) throw BuildError("bond outside the mode range");
        std::vector<PauliString> checks = enc.stabilizers;
        std::vector<Word> target((enc.stabilizers.size() + enc.logicals.size() + 63) / 64, 0);
        std::array<MajoranaLabel, 2> want{MajoranaLabel{i, true}, MajoranaLabel{j, false}};
        std::size_t row = checks.size();
        for (auto &[key, op] : enc.logicals) {
            checks.push_back(op.pauli);
            if (overlap_parity(op, want)) target[row >> 6] |= Word{1} << (row & 63);
            ++row;
        }
        std::optional<PauliString> found;
        for (const auto &window : req.fwd) {
            if (search_cost(window.size(), plan.w_max) > kSearchCap) continue;
            PauliSearch search(n, checks, window);
            found = search.find_min(plan.w_max, target, [](const PauliString &) { return true; });
            if (found) break;
        }
        if (!found)
            throw BuildError("no transfer operator found for bond " + std::to_string(i) + "-" + std::to_string(j));
        PauliString f = letters(*found);
        PauliString b = reduce(f * enc.vertex(i) * enc.vertex(j), req.bwd);
        enc.add(make_transfer(i, j, f));
        enc.add(make_transfer(j, i, b));
        if (!req.edge.empty()) {
            int lo = std::min(i, j), hi = std::max(i, j);
            enc.add(make_edge(lo, hi, reduce(enc.vertex(i) * f, req.edge)));
        }
    }
}

} // namespace fenc::detail
