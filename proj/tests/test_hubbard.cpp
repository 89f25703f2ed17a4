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

#include <random>

#include "doctest.h"
#include "fenc/builders.h"
#include "fenc/hubbard.h"
#include "oracle.h"

using namespace fenc;

namespace {

std::vector<oracle::Term> to_oracle(const std::vector<HamiltonianTerm> &terms) {
    std::vector<oracle::Term> out;
    for (const auto &t : terms) {
        oracle::Term::Kind k = t.kind == TermKind::Density   ? oracle::Term::Density
                               : t.kind == TermKind::Hopping ? oracle::Term::Hopping
                                                             : oracle::Term::DensityDensity;
        out.push_back({k, t.i, t.j, t.coefficient});
    }
    return out;
}

std::vector<double> dense_codespace(const Encoding &e, const PauliSum &h) {
    std::vector<std::pair<oracle::cd, std::string>> terms;
    for (const auto &[c, p] : h.terms()) terms.push_back({c, p.str()});
    std::vector<std::string> stabs;
    for (const auto &s : e.stabilizers) stabs.push_back(s.str());
    return oracle::codespace_spectrum(terms, stabs, e.num_qubits());
}

std::vector<double> fock(const std::vector<HamiltonianTerm> &terms, int m) {
    return oracle::eigenvalues(oracle::fermion_hamiltonian(to_oracle(terms), m));
}

// Dense matrix of a compiled sum with no stabilizers.
oracle::Mat dense(const PauliSum &h) {
    const Eigen::Index dim = Eigen::Index(1) << h.num_qubits();
    oracle::Mat m = oracle::Mat::Zero(dim, dim);
    for (const auto &[c, p] : h.terms()) m += c * oracle::pauli(p.str());
    return m;
}

} // namespace

TEST_CASE("jwt hopping is half of XX plus ZZ") {
    Encoding e = build_jwt(2);
    PauliSum h = compile_term(e, HamiltonianTerm::hopping(0, 1, -1.0));
    CHECK(h.str() == "0.5\tXX\n0.5\tZZ\n");
    PauliSum g = compile_term(e, HamiltonianTerm::hopping(0, 1, 1.0));
    CHECK(g.str() == "-0.5\tXX\n-0.5\tZZ\n");
    CHECK(oracle::same_spectrum(codespace_spectrum(e, h), {-1, 0, 0, 1}, 1e-12));
}

TEST_CASE("jwt terms equal the dense fermionic operators") {
    const int m = 3;
    Encoding e = build_jwt(m);
    for (int i = 0; i < m; ++i) {
        auto c = oracle::annihilator(i, m);
        CHECK(oracle::close(dense(compile_term(e, HamiltonianTerm::density(i))), c.adjoint() * c));
        for (int j = i + 1; j < m; ++j) {
            auto cj = oracle::annihilator(j, m);
            oracle::Mat hop = -(c.adjoint() * cj + cj.adjoint() * c);
            if (j == i + 1) CHECK(oracle::close(dense(compile_term(e, HamiltonianTerm::hopping(i, j))), hop));
            oracle::Mat nn = c.adjoint() * c * cj.adjoint() * cj;
            CHECK(oracle::close(dense(compile_term(e, HamiltonianTerm::density_density(i, j))), nn));
        }
    }
}

TEST_CASE("edge products close with an exact phase") {
    const int m = 4;
    Encoding e = build_jwt(m);
    auto E = [&](int a, int b) { return e.find("E:" + std::to_string(a) + ">" + std::to_string(b))->pauli; };
    auto dense_edge = [&](int a, int b) {
        return oracle::Mat(oracle::cd(0, -1) * oracle::gamma(a, m) * oracle::gamma(b, m));
    };
    for (int i = 0; i + 1 < m; ++i) CHECK(oracle::close(oracle::pauli(E(i, i + 1).str()), dense_edge(i, i + 1)));
    for (int i = 0; i + 2 < m; ++i) {
        PauliString prod = E(i, i + 1) * E(i + 1, i + 2);
        PauliString eik = prod.with_phase(prod.phase() + 1);
        CHECK(oracle::close(oracle::pauli(eik.str()), dense_edge(i, i + 2)));
    }
}

TEST_CASE("vertex operators are the Majorana parity") {
    const int m = 3;
    Encoding e = build_jwt(m);
    for (int i = 0; i < m; ++i) {
        oracle::Mat v = oracle::cd(0, -1) * oracle::gamma(i, m) * oracle::gamma_bar(i, m);
        CHECK(oracle::close(oracle::pauli(e.vertex(i).str()), v));
    }
}

TEST_CASE("compiled spectra match the Fock space") {
    std::vector<Encoding> encs{build_le1d(2, 3), build_le1d(3, 3), build_le2d(2, 2, 2), build_dk(1, 2, 2),
                               build_vc(1, 2, 2), stack_spinful(build_jwt(2))};
    for (const auto &e : encs) {
        CAPTURE(e.name);
        const int m = static_cast<int>(e.num_modes());
        for (double t : {0.0, 1.0})
            for (double u : {0.0, 2.0, 4.0}) {
                auto terms = fhm_terms(e, t, u);
                for (int i = 0; i < m; ++i) terms.push_back(HamiltonianTerm::density(i, 0.1 * (i + 1)));
                auto h = compile_hamiltonian(e, terms);
                CHECK(h.hermitian());
                CHECK(oracle::same_spectrum(codespace_spectrum(e, h), fock(terms, m), 1e-9));
                CHECK(oracle::same_spectrum(fermionic_oracle_spectrum(terms, m), fock(terms, m), 1e-9));
            }
    }
}

TEST_CASE("tableau and projected spectra agree with the dense projection") {
    Encoding e = build_le1d(2, 3);
    std::mt19937_64 rng(41);
    std::uniform_real_distribution<double> coef(-1.0, 1.0);
    std::vector<HamiltonianTerm> terms;
    for (int i = 0; i < 3; ++i) terms.push_back(HamiltonianTerm::density(i, coef(rng)));
    for (int i = 0; i < 3; ++i)
        for (int j = i + 1; j < 3; ++j) {
            if (j == i + 1) terms.push_back(HamiltonianTerm::hopping(i, j, coef(rng)));
            terms.push_back(HamiltonianTerm::density_density(i, j, coef(rng)));
        }
    auto h = compile_hamiltonian(e, terms);
    SpectrumOptions proj;
    proj.method = SpectrumOptions::Method::Projected;
    auto ref = dense_codespace(e, h);
    CHECK(oracle::same_spectrum(codespace_spectrum(e, h), ref, 1e-9));
    CHECK(oracle::same_spectrum(codespace_spectrum(e, h, proj), ref, 1e-9));
    CHECK(oracle::same_spectrum(ref, fock(terms, 3), 1e-9));
}

TEST_CASE("hopping needs a registered bond") {
    Encoding e = build_le1d(2, 4);
    CHECK_THROWS_AS(compile_term(e, HamiltonianTerm::hopping(0, 3, 0.7)), CompileError);
    // Density-density terms need no bond.
    std::vector<HamiltonianTerm> terms{HamiltonianTerm::density_density(0, 3, 0.7), HamiltonianTerm::hopping(1, 2, -0.3),
                                       HamiltonianTerm::density(2, 0.4)};
    auto h = compile_hamiltonian(e, terms);
    CHECK(oracle::same_spectrum(codespace_spectrum(e, h), fock(terms, 4), 1e-9));
}

TEST_CASE("pauli sums") {
    PauliSum a(2);
    a.add(1.0, PauliString::parse("XI"));
    a.add(Complex(0, 1), PauliString::parse("-iZZ"));
    CHECK(a.coefficient(PauliString::parse("ZZ")) == Complex(1, 0));
    PauliSum b = a * a;
    b.prune();
    CHECK(b.coefficient(PauliString::parse("II")) == Complex(2, 0));
    CHECK(b.size() == 1);
    CHECK(a.hermitian());
    PauliSum c = Complex(0, 1) * a;
    CHECK_FALSE(c.hermitian());
    CHECK(c.adjoint().coefficient(PauliString::parse("XI")) == Complex(0, -1));
    PauliSum z = a + Complex(-1, 0) * a;
    z.prune();
    CHECK(z.empty());
    CHECK(PauliSum::identity(3, 2.0).str() == "2\tIII\n");
}

TEST_CASE("compile errors and size limits") {
    Encoding e = build_jwt(3);
    CHECK_THROWS_AS(compile_term(e, HamiltonianTerm::density(5)), CompileError);
    CHECK_THROWS_AS(compile_term(e, HamiltonianTerm::hopping(1, 1)), CompileError);
    SpectrumOptions small;
    small.max_logical = 2;
    CHECK_THROWS_AS(codespace_spectrum(e, compile_term(e, HamiltonianTerm::density(0)), small), SizeLimitError);
    CHECK_THROWS_AS(fermionic_oracle_spectrum({}, 40), SizeLimitError);
}

TEST_CASE("fermi-hubbard terms") {
    Encoding e = stack_spinful(build_le1d(2, 3));
    auto terms = fhm_terms(e, 1.0, 4.0);
    std::size_t hops = 0, onsite = 0;
    for (const auto &t : terms) {
        hops += t.kind == TermKind::Hopping;
        onsite += t.kind == TermKind::DensityDensity;
    }
    CHECK(hops == 4);
    CHECK(onsite == 3);
    auto bonds = encoding_bonds(build_le1d(2, 4));
    CHECK(bonds.size() == 3);
}
