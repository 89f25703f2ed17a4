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

#include "fenc/pauli.h"

#include <algorithm>
#include <bit>
#include <sstream>

namespace fenc {

namespace {

void check_same(std::size_t a, std::size_t b) {
    if (a != b) {
        throw DimensionError("Pauli length mismatch: " + std::to_string(a) + " vs " + std::to_string(b));
    }
}

bool get_bit(const std::vector<Word> &v, std::size_t i) { return (v[i >> 6] >> (i & 63)) & 1u; }
void flip_bit(std::vector<Word> &v, std::size_t i) { v[i >> 6] ^= Word{1} << (i & 63); }

void xor_into(std::vector<Word> &dst, const std::vector<Word> &src) {
    for (std::size_t i = 0; i < dst.size(); ++i) dst[i] ^= src[i];
}

std::size_t lowest_bit(const std::vector<Word> &v) {
    for (std::size_t i = 0; i < v.size(); ++i) {
        if (v[i]) return i * 64 + static_cast<std::size_t>(std::countr_zero(v[i]));
    }
    return static_cast<std::size_t>(-1);
}

} // namespace

PauliString::PauliString(std::size_t n) : n_(n), xs_(words_for(n), 0), zs_(words_for(n), 0) {}

PauliString PauliString::parse(std::string_view text) {
    unsigned ph = 0;
    if (text.starts_with("+i")) {
        ph = 1;
        text.remove_prefix(2);
    } else if (text.starts_with("-i")) {
        ph = 3;
        text.remove_prefix(2);
    } else if (text.starts_with("+")) {
        text.remove_prefix(1);
    } else if (text.starts_with("-")) {
        ph = 2;
        text.remove_prefix(1);
    }
    PauliString p(text.size());
    for (std::size_t q = 0; q < text.size(); ++q) {
        char c = text[q];
        if (c != 'I' && c != 'X' && c != 'Y' && c != 'Z') {
            throw ParseError(std::string("invalid Pauli character '") + c + "'");
        }
        p.set(q, c);
    }
    p.phase_ = ph;
    return p;
}

PauliString PauliString::single(std::size_t n, std::size_t q, char p) {
    PauliString r(n);
    r.set(q, p);
    return r;
}

std::string PauliString::str() const {
    static const char *prefix[4] = {"+", "+i", "-", "-i"};
    std::string s = prefix[phase_];
    s.reserve(s.size() + n_);
    for (std::size_t q = 0; q < n_; ++q) s.push_back(get(q));
    return s;
}

PauliString PauliString::with_phase(unsigned p) const {
    PauliString r = *this;
    r.phase_ = p & 3u;
    return r;
}

char PauliString::get(std::size_t q) const {
    static const char letters[4] = {'I', 'X', 'Z', 'Y'};
    return letters[(x(q) ? 1 : 0) | (z(q) ? 2 : 0)];
}

void PauliString::set(std::size_t q, char p) {
    if (q >= n_) throw DimensionError("qubit index out of range");
    Word m = Word{1} << (q & 63);
    bool bx = p == 'X' || p == 'Y';
    bool bz = p == 'Z' || p == 'Y';
    if (bx) xs_[q >> 6] |= m; else xs_[q >> 6] &= ~m;
    if (bz) zs_[q >> 6] |= m; else zs_[q >> 6] &= ~m;
}

std::size_t PauliString::weight() const {
    std::size_t w = 0;
    for (std::size_t i = 0; i < xs_.size(); ++i) w += std::popcount(xs_[i] | zs_[i]);
    return w;
}

std::vector<std::size_t> PauliString::support() const {
    std::vector<std::size_t> s;
    for (std::size_t q = 0; q < n_; ++q) {
        if (x(q) || z(q)) s.push_back(q);
    }
    return s;
}

std::vector<Word> PauliString::symplectic() const {
    std::vector<Word> v(words_for(2 * n_), 0);
    for (std::size_t q = 0; q < n_; ++q) {
        if (x(q)) flip_bit(v, q);
        if (z(q)) flip_bit(v, n_ + q);
    }
    return v;
}

PauliString &PauliString::operator*=(const PauliString &rhs) {
    check_same(n_, rhs.n_);
    // Per-qubit products in cyclic order (XY, YZ, ZX) contribute +i, the
    // reversed orders contribute -i.
    int acc = 0;
    for (std::size_t i = 0; i < xs_.size(); ++i) {
        Word ax = xs_[i], az = zs_[i], bx = rhs.xs_[i], bz = rhs.zs_[i];
        Word aX = ax & ~az, aY = ax & az, aZ = ~ax & az;
        Word bX = bx & ~bz, bY = bx & bz, bZ = ~bx & bz;
        Word pos = (aX & bY) | (aY & bZ) | (aZ & bX);
        Word neg = (aY & bX) | (aZ & bY) | (aX & bZ);
        acc += std::popcount(pos) - std::popcount(neg);
        xs_[i] = ax ^ bx;
        zs_[i] = az ^ bz;
    }
    phase_ = static_cast<unsigned>(((static_cast<int>(phase_ + rhs.phase_) + acc) % 4 + 4) % 4);
    return *this;
}

bool PauliString::operator<(const PauliString &o) const {
    if (n_ != o.n_) return n_ < o.n_;
    for (std::size_t q = 0; q < n_; ++q) {
        char a = get(q), b = o.get(q);
        if (a != b) return a < b;
    }
    return phase_ < o.phase_;
}

PauliString mul(const PauliString &p, const PauliString &q) { return p * q; }

bool commutes(const PauliString &p, const PauliString &q) {
    check_same(p.size(), q.size());
    int par = 0;
    for (std::size_t i = 0; i < p.num_words(); ++i) {
        par ^= std::popcount((p.x_words()[i] & q.z_words()[i]) ^ (p.z_words()[i] & q.x_words()[i])) & 1;
    }
    return par == 0;
}

PauliString adjoint(const PauliString &p) {
    // Letters are Hermitian, so only the scalar conjugates.
    return p.with_phase((4 - p.phase()) & 3u);
}

PauliString embed(const PauliString &p, std::size_t n, const std::vector<std::size_t> &where) {
    if (where.size() != p.size()) throw DimensionError("embedding size mismatch");
    PauliString r(n);
    for (std::size_t k = 0; k < where.size(); ++k) r.set(where[k], p.get(k));
    r.set_phase(p.phase());
    return r;
}

CheckMatrix CheckMatrix::from_paulis(const std::vector<PauliString> &ps, std::size_t n) {
    CheckMatrix m;
    m.n = n;
    for (const auto &p : ps) {
        check_same(p.size(), n);
        m.rows.push_back(p.symplectic());
    }
    return m;
}

CheckMatrix CheckMatrix::parse(std::string_view text) {
    CheckMatrix m;
    bool first = true;
    std::istringstream in{std::string(text)};
    std::string line;
    while (std::getline(in, line)) {
        while (!line.empty() && (line.back() == '\r' || line.back() == ' ')) line.pop_back();
        if (line.empty()) continue;
        auto bar = line.find('|');
        if (bar == std::string::npos || line.find('|', bar + 1) != std::string::npos) {
            throw ParseError("check matrix row needs exactly one '|'");
        }
        std::size_t n = bar;
        if (line.size() != 2 * n + 1) throw ParseError("check matrix halves differ in length");
        if (first) {
            m.n = n;
            first = false;
        } else if (n != m.n) {
            throw ParseError("check matrix rows differ in length");
        }
        std::vector<Word> row(words_for(2 * n), 0);
        for (std::size_t k = 0; k < n; ++k) {
            char a = line[k], b = line[n + 1 + k];
            if ((a != '0' && a != '1') || (b != '0' && b != '1')) throw ParseError("check matrix entries must be 0/1");
            if (a == '1') flip_bit(row, k);
            if (b == '1') flip_bit(row, n + k);
        }
        m.rows.push_back(std::move(row));
    }
    return m;
}

std::string CheckMatrix::str() const {
    std::string s;
    for (const auto &row : rows) {
        for (std::size_t k = 0; k < n; ++k) s.push_back(get_bit(row, k) ? '1' : '0');
        s.push_back('|');
        for (std::size_t k = 0; k < n; ++k) s.push_back(get_bit(row, n + k) ? '1' : '0');
        s.push_back('\n');
    }
    return s;
}

Gf2Span::Gf2Span(std::size_t bits) : bits_(bits), words_(words_for(bits)) {}

bool Gf2Span::add(std::vector<Word> v) {
    std::size_t idx = inserted_++;
    if (idx % 64 == 0) {
        ++combo_words_;
        for (auto &c : combos_) c.push_back(0);
    }
    std::vector<Word> combo(combo_words_, 0);
    flip_bit(combo, idx);
    for (std::size_t r = 0; r < rows_.size(); ++r) {
        if (get_bit(v, pivots_[r])) {
            xor_into(v, rows_[r]);
            xor_into(combo, combos_[r]);
        }
    }
    std::size_t piv = lowest_bit(v);
    if (piv == static_cast<std::size_t>(-1)) return false;
    rows_.push_back(std::move(v));
    combos_.push_back(std::move(combo));
    pivots_.push_back(piv);
    return true;
}

bool Gf2Span::contains(std::vector<Word> v) const {
    for (std::size_t r = 0; r < rows_.size(); ++r) {
        if (get_bit(v, pivots_[r])) xor_into(v, rows_[r]);
    }
    return lowest_bit(v) == static_cast<std::size_t>(-1);
}

std::optional<std::vector<std::size_t>> Gf2Span::decompose(std::vector<Word> v) const {
    std::vector<Word> combo(combo_words_, 0);
    for (std::size_t r = 0; r < rows_.size(); ++r) {
        if (get_bit(v, pivots_[r])) {
            xor_into(v, rows_[r]);
            xor_into(combo, combos_[r]);
        }
    }
    if (lowest_bit(v) != static_cast<std::size_t>(-1)) return std::nullopt;
    std::vector<std::size_t> idx;
    for (std::size_t i = 0; i < inserted_; ++i) {
        if (get_bit(combo, i)) idx.push_back(i);
    }
    return idx;
}

std::size_t rank_gf2(const CheckMatrix &m) {
    Gf2Span s(2 * m.n);
    for (const auto &row : m.rows) s.add(row);
    return s.rank();
}

std::size_t rank_gf2(const std::vector<PauliString> &ps, std::size_t n) {
    return rank_gf2(CheckMatrix::from_paulis(ps, n));
}

std::vector<bool> syndrome(const PauliString &p, const std::vector<PauliString> &gens) {
    std::vector<bool> s(gens.size());
    for (std::size_t k = 0; k < gens.size(); ++k) s[k] = !commutes(p, gens[k]);
    return s;
}

std::vector<bool> syndrome(const PauliString &p, const CheckMatrix &gens) {
    check_same(p.size(), gens.n);
    auto v = p.symplectic();
    std::size_t n = gens.n;
    std::vector<bool> s(gens.rows.size());
    for (std::size_t k = 0; k < gens.rows.size(); ++k) {
        int par = 0;
        for (std::size_t q = 0; q < n; ++q) {
            par ^= (get_bit(gens.rows[k], q) & get_bit(v, n + q)) ^ (get_bit(gens.rows[k], n + q) & get_bit(v, q));
        }
        s[k] = par;
    }
    return s;
}

bool in_stabilizer_group(const PauliString &p, const std::vector<PauliString> &gens) {
    Gf2Span s(2 * p.size());
    for (const auto &g : gens) {
        check_same(g.size(), p.size());
        s.add(g);
    }
    return s.contains(p);
}

bool in_stabilizer_group(const PauliString &p, const CheckMatrix &gens) {
    check_same(p.size(), gens.n);
    Gf2Span s(2 * gens.n);
    for (const auto &row : gens.rows) s.add(row);
    return s.contains(p);
}

std::optional<unsigned> stabilizer_phase(const PauliString &p, const std::vector<PauliString> &gens) {
    Gf2Span s(2 * p.size());
    for (const auto &g : gens) {
        check_same(g.size(), p.size());
        s.add(g);
    }
    auto combo = s.decompose(p.symplectic());
    if (!combo) return std::nullopt;
    PauliString prod(p.size());
    for (std::size_t k : *combo) prod *= gens[k];
    return (p.phase() + 4 - prod.phase()) & 3u;
}

std::vector<PauliString> normalizer_basis(const std::vector<PauliString> &gens, std::size_t n) {
    // Q commutes with g iff [z_Q | x_Q] is orthogonal to [x_g | z_g].
    std::size_t cols = 2 * n;
    std::vector<std::vector<Word>> rows;
    for (const auto &g : gens) rows.push_back(g.symplectic());
    std::vector<std::size_t> pivot_col;
    std::size_t r = 0;
    for (std::size_t c = 0; c < cols && r < rows.size(); ++c) {
        std::size_t sel = r;
        while (sel < rows.size() && !get_bit(rows[sel], c)) ++sel;
        if (sel == rows.size()) continue;
        std::swap(rows[r], rows[sel]);
        for (std::size_t k = 0; k < rows.size(); ++k) {
            if (k != r && get_bit(rows[k], c)) xor_into(rows[k], rows[r]);
        }
        pivot_col.push_back(c);
        ++r;
    }
    std::vector<bool> is_pivot(cols, false);
    for (auto c : pivot_col) is_pivot[c] = true;
    std::vector<PauliString> basis;
    for (std::size_t f = 0; f < cols; ++f) {
        if (is_pivot[f]) continue;
        std::vector<Word> w(words_for(cols), 0);
        flip_bit(w, f);
        for (std::size_t k = 0; k < pivot_col.size(); ++k) {
            if (get_bit(rows[k], f)) flip_bit(w, pivot_col[k]);
        }
        PauliString q(n);
        for (std::size_t i = 0; i < n; ++i) {
            bool zq = get_bit(w, i), xq = get_bit(w, n + i);
            q.set(i, xq ? (zq ? 'Y' : 'X') : (zq ? 'Z' : 'I'));
        }
        basis.push_back(q);
    }
    return basis;
}

} // namespace fenc
