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

#pragma once

#include <cstddef>
#include <cstdint>
#include <optional>
#include <stdexcept>
#include <string>
#include <string_view>
#include <vector>

namespace fenc {

struct DimensionError : std::invalid_argument {
    using std::invalid_argument::invalid_argument;
};

struct ParseError : std::invalid_argument {
    using std::invalid_argument::invalid_argument;
};

using Word = std::uint64_t;

inline std::size_t words_for(std::size_t n) { return (n + 63) / 64; }

// Pauli operator i^phase * (tensor of I/X/Y/Z).  The phase is stored relative
// to the Y-convention, so a Hermitian Pauli written with letters X, Y, Z has
// phase 0 or 2 and prints as "+..." or "-...".
class PauliString {
  public:
    PauliString() = default;
    explicit PauliString(std::size_t n);

    static PauliString parse(std::string_view text);
    static PauliString single(std::size_t n, std::size_t q, char p);

    std::string str() const;

    std::size_t size() const { return n_; }
    std::size_t num_words() const { return xs_.size(); }
    unsigned phase() const { return phase_; }
    void set_phase(unsigned p) { phase_ = p & 3u; }
    PauliString with_phase(unsigned p) const;

    bool x(std::size_t q) const { return (xs_[q >> 6] >> (q & 63)) & 1u; }
    bool z(std::size_t q) const { return (zs_[q >> 6] >> (q & 63)) & 1u; }
    char get(std::size_t q) const;
    void set(std::size_t q, char p);

    const Word *x_words() const { return xs_.data(); }
    const Word *z_words() const { return zs_.data(); }
    Word *x_words() { return xs_.data(); }
    Word *z_words() { return zs_.data(); }

    std::size_t weight() const;
    bool is_identity() const { return weight() == 0; }
    std::vector<std::size_t> support() const;
    bool hermitian() const { return (phase_ & 1u) == 0; }
    bool same_letters(const PauliString &o) const { return xs_ == o.xs_ && zs_ == o.zs_; }

    // 2n-bit symplectic vector, x-part followed by z-part.
    std::vector<Word> symplectic() const;

    PauliString &operator*=(const PauliString &rhs);
    friend PauliString operator*(PauliString lhs, const PauliString &rhs) { return lhs *= rhs; }
    bool operator==(const PauliString &o) const {
        return n_ == o.n_ && phase_ == o.phase_ && xs_ == o.xs_ && zs_ == o.zs_;
    }
    bool operator!=(const PauliString &o) const { return !(*this == o); }
    bool operator<(const PauliString &o) const;

  private:
    std::size_t n_ = 0;
    unsigned phase_ = 0;
    std::vector<Word> xs_, zs_;
};

PauliString mul(const PauliString &p, const PauliString &q);
bool commutes(const PauliString &p, const PauliString &q);
PauliString adjoint(const PauliString &p);

// Place a k-qubit Pauli into an n-qubit register at the given positions.
PauliString embed(const PauliString &p, std::size_t n, const std::vector<std::size_t> &where);

struct CheckMatrix {
    std::size_t n = 0;
    std::vector<std::vector<Word>> rows;

    static CheckMatrix from_paulis(const std::vector<PauliString> &ps, std::size_t n);
    static CheckMatrix parse(std::string_view text);
    std::string str() const;
};

std::size_t rank_gf2(const CheckMatrix &m);
std::size_t rank_gf2(const std::vector<PauliString> &ps, std::size_t n);

// Bit k set iff P anticommutes with generator k.
std::vector<bool> syndrome(const PauliString &p, const std::vector<PauliString> &gens);
std::vector<bool> syndrome(const PauliString &p, const CheckMatrix &gens);

bool in_stabilizer_group(const PauliString &p, const std::vector<PauliString> &gens);
bool in_stabilizer_group(const PauliString &p, const CheckMatrix &gens);

// Strict membership: if P equals i^c times the ordered product of some
// generator subset, returns c; otherwise nullopt.
std::optional<unsigned> stabilizer_phase(const PauliString &p, const std::vector<PauliString> &gens);

// Incremental GF(2) row space over 2n-bit vectors, tracking which inputs
// combine into each basis row.
class Gf2Span {
  public:
    explicit Gf2Span(std::size_t bits);

    bool add(std::vector<Word> v);
    bool add(const PauliString &p) { return add(p.symplectic()); }
    bool contains(std::vector<Word> v) const;
    bool contains(const PauliString &p) const { return contains(p.symplectic()); }
    // Indices (in insertion order of add calls) whose XOR equals v.
    std::optional<std::vector<std::size_t>> decompose(std::vector<Word> v) const;
    std::size_t rank() const { return rows_.size(); }
    std::size_t inserted() const { return inserted_; }

  private:
    std::size_t bits_, words_, combo_words_ = 0, inserted_ = 0;
    std::vector<std::vector<Word>> rows_;
    std::vector<std::vector<Word>> combos_;
    std::vector<std::size_t> pivots_;
};

// Basis of the symplectic complement of span(gens): all Paulis commuting
// with every generator, up to phase.
std::vector<PauliString> normalizer_basis(const std::vector<PauliString> &gens, std::size_t n);

} // namespace fenc
