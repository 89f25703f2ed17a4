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

// Fermi-Hubbard terms compiled to Pauli sums, plus the two spectra used to
// check a compilation: the encoded one restricted to the code space and a
// brute-force Fock-space one.

#pragma once

#include <complex>
#include <map>
#include <stdexcept>
#include <string>
#include <utility>
#include <vector>

#include "fenc/encoding.h"
#include "fenc/pauli.h"

namespace fenc {

struct CompileError : std::runtime_error {
    using std::runtime_error::runtime_error;
};

struct SizeLimitError : std::runtime_error {
    using std::runtime_error::runtime_error;
};

using Complex = std::complex<double>;

enum class TermKind { Density, Hopping, DensityDensity };

struct HamiltonianTerm {
    TermKind kind = TermKind::Density;
    int i = 0;
    int j = 0;
    // t for hopping (the term is -t (c_i^dag c_j + h.c.)), otherwise the
    // prefactor of n_i or n_i n_j.
    double coefficient = 1.0;

    static HamiltonianTerm density(int i, double c = 1.0) { return {TermKind::Density, i, i, c}; }
    static HamiltonianTerm hopping(int i, int j, double t = 1.0) { return {TermKind::Hopping, i, j, t}; }
    static HamiltonianTerm density_density(int i, int j, double u = 1.0) {
        return {TermKind::DensityDensity, i, j, u};
    }
};

// Sum of Pauli strings with complex coefficients.  Strings are stored with
// phase 0; any phase is folded into the coefficient.
class PauliSum {
  public:
    PauliSum() = default;
    explicit PauliSum(std::size_t n) : n_(n) {}
    static PauliSum identity(std::size_t n, Complex c = 1.0);

    std::size_t num_qubits() const { return n_; }
    std::size_t size() const { return terms_.size(); }
    bool empty() const { return terms_.empty(); }

    void add(Complex c, const PauliString &p);
    PauliSum &operator+=(const PauliSum &o);
    PauliSum &operator*=(Complex c);
    friend PauliSum operator+(PauliSum a, const PauliSum &b) { return a += b; }
    friend PauliSum operator*(Complex c, PauliSum a) { return a *= c; }
    friend PauliSum operator*(const PauliSum &a, const PauliSum &b);

    // Drops coefficients with magnitude <= tol.
    void prune(double tol = 1e-12);
    PauliSum adjoint() const;
    bool hermitian(double tol = 1e-12) const;
    Complex coefficient(const PauliString &p) const;
    // Terms in canonical (string) order.
    std::vector<std::pair<Complex, PauliString>> terms() const;
    // One "coeff<TAB>Pauli" line per term; real coefficients for Hermitian sums.
    std::string str() const;

  private:
    std::size_t n_ = 0;
    std::map<PauliString, Complex> terms_;
};

PauliSum compile_term(const Encoding &enc, const HamiltonianTerm &term);
PauliSum compile_hamiltonian(const Encoding &enc, const std::vector<HamiltonianTerm> &terms);

// Mode pairs (i < j) joined by registered edges or transfers.
std::vector<std::pair<int, int>> encoding_bonds(const Encoding &enc);

// Fermi-Hubbard terms for an encoding: -t hopping on every bond between modes
// of equal spin on different sites, and U n_up n_dn on every site of a
// spinful encoding.
std::vector<HamiltonianTerm> fhm_terms(const Encoding &enc, double t, double u);

struct SpectrumOptions {
    enum class Method { Tableau, Projected } method = Method::Tableau;
    // Limits: logical qubits for the tableau method, physical qubits for
    // the projected one.
    std::size_t max_logical = 12;
    std::size_t max_dense_qubits = 14;
    unsigned seed = 12345;
};

// Sorted eigenvalues of H restricted to the joint +1 eigenspace of the
// stabilizers.
std::vector<double> codespace_spectrum(const Encoding &enc, const PauliSum &h, const SpectrumOptions &opt = {});

// Sorted eigenvalues of the terms on the 2^m-dimensional Fock space.
std::vector<double> fermionic_oracle_spectrum(const std::vector<HamiltonianTerm> &terms, int m);

} // namespace fenc
