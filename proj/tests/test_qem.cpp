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

#include <cmath>
#include <random>

#include "doctest.h"
#include "fenc/builders.h"
#include "fenc/qem.h"
#include "oracle.h"

using namespace fenc;

namespace {

const double kQuarter = std::atan(1.0);

oracle::Mat gate_matrix(const Gate &g, double phi) {
    double theta = g.angle == GateAngle::PlusQuarter ? kQuarter : g.angle == GateAngle::MinusQuarter ? -kQuarter : phi;
    oracle::Mat p = oracle::pauli(g.generator.str());
    return std::cos(theta) * oracle::Mat::Identity(p.rows(), p.cols()) + oracle::cd(0, std::sin(theta)) * p;
}

// Product of layers [from, to) in time order.
oracle::Mat circuit(const Decomposition &dec, std::size_t from, std::size_t to) {
    const Eigen::Index dim = Eigen::Index(1) << dec.target.size();
    oracle::Mat u = oracle::Mat::Identity(dim, dim);
    for (std::size_t l = from; l < to; ++l)
        for (const auto &g : dec.layers[l]) u = gate_matrix(g, dec.phi) * u;
    return u;
}

oracle::Mat rotation(const PauliString &p, double phi) {
    oracle::Mat m = oracle::pauli(p.str());
    return std::cos(phi) * oracle::Mat::Identity(m.rows(), m.cols()) + oracle::cd(0, std::sin(phi)) * m;
}

PauliString random_pauli(std::mt19937_64 &rng, std::size_t n, std::size_t min_weight) {
    for (;;) {
        PauliString p(n);
        for (std::size_t q = 0; q < n; ++q) p.set(q, "IXYZ"[rng() & 3]);
        if (p.weight() >= min_weight) return p;
    }
}

// Independent classification from symplectic bits.
ErrorClass oracle_class(const std::vector<PauliString> &stabs, const PauliString &p) {
    auto b = oracle::bits(p.str());
    std::vector<std::vector<int>> rows;
    for (const auto &s : stabs) {
        rows.push_back(oracle::bits(s.str()));
        if (oracle::anticommute_bits(b, rows.back())) return ErrorClass::Detectable;
    }
    std::size_t r = oracle::gf2_rank(rows);
    rows.push_back(b);
    return oracle::gf2_rank(rows) == r ? ErrorClass::Trivial : ErrorClass::NonDetectable;
}

} // namespace

TEST_CASE("ladders reproduce the rotation exactly") {
    std::mt19937_64 rng(8);
    for (std::size_t n = 2; n <= 5; ++n)
        for (int trial = 0; trial < 12; ++trial) {
            PauliString p = random_pauli(rng, n, 2);
            CAPTURE(p.str());
            for (double phi : {0.3, -1.1}) {
                Decomposition dec = xyz_decompose(p, phi);
                CHECK(oracle::close(circuit(dec, 0, dec.layers.size()), rotation(p, phi), 1e-10));
                CHECK(conjugation_consistent(dec));
                CHECK(dec.num_gates() == 2 * (p.weight() - 2) + 1);
                CHECK(dec.support() == p.support());
                for (const auto &layer : dec.layers) {
                    std::vector<std::size_t> used;
                    for (const auto &g : layer)
                        for (auto q : g.generator.support()) used.push_back(q);
                    std::sort(used.begin(), used.end());
                    CHECK(std::adjacent_find(used.begin(), used.end()) == used.end());
                }
            }
        }
}

TEST_CASE("two legs meet in the middle") {
    Decomposition d5 = xyz_decompose(PauliString::parse("YYYYY"), 0.2);
    CHECK(d5.layers.size() == 5);
    CHECK(d5.central() == 2);
    CHECK(d5.central_gate().angle == GateAngle::Central);
    CHECK(d5.central_gate().generator.weight() == 2);
    Decomposition d2 = xyz_decompose(PauliString::parse("IYIY"), 0.2);
    CHECK(d2.layers.size() == 1);
    CHECK(d2.central_gate().generator.str() == "+IYIY");
    CHECK(xyz_decompose(PauliString::parse("IYI"), 0.2).num_gates() == 1);
    CHECK_THROWS_AS(xyz_decompose(PauliString::parse("III"), 0.2), QemError);
}

TEST_CASE("propagated errors match dense conjugation") {
    std::mt19937_64 rng(19);
    PauliString p = PauliString::parse("XYZYX");
    const double phi = 0.37;
    Decomposition dec = xyz_decompose(p, phi);
    const oracle::Mat full = circuit(dec, 0, dec.layers.size());
    const double dim = double(1 << p.size());
    for (std::size_t b = 0; b <= dec.layers.size(); ++b)
        for (int trial = 0; trial < 20; ++trial) {
            PauliString e = random_pauli(rng, p.size(), 1);
            CAPTURE(b);
            CAPTURE(e.str());
            auto finals = propagate(dec, {b, e});
            REQUIRE(!finals.empty());
            REQUIRE(finals.size() <= 2);
            // The faulty circuit equals sum_k a_k F_k U for some amplitudes a_k.
            oracle::Mat m = circuit(dec, b, dec.layers.size()) * oracle::pauli(e.str()) * circuit(dec, 0, b) * full.adjoint();
            oracle::Mat rest = m;
            for (const auto &f : finals) {
                oracle::Mat fm = oracle::pauli(f.str());
                oracle::cd a = (fm.adjoint() * m).trace() / dim;
                CHECK(std::abs(a) > 1e-9);
                rest -= a * fm;
            }
            CHECK(rest.cwiseAbs().maxCoeff() < 1e-9);
        }
}

TEST_CASE("classification agrees with the symplectic oracle") {
    Encoding e = build_le1d(3, 4);
    std::mt19937_64 rng(29);
    std::size_t seen[3] = {0, 0, 0};
    for (int trial = 0; trial < 600; ++trial) {
        PauliString p(e.num_qubits());
        int mode = trial % 3;
        if (mode == 0) {
            for (const auto &s : e.stabilizers)
                if (rng() & 1) p *= s;
        } else if (mode == 1) {
            p = e.vertex(static_cast<std::size_t>(rng() % 4));
            for (const auto &s : e.stabilizers)
                if (rng() & 1) p *= s;
        } else {
            p = random_pauli(rng, e.num_qubits(), 1);
        }
        ErrorClass c = classify(e.stabilizers, p);
        REQUIRE(c == oracle_class(e.stabilizers, p));
        ++seen[static_cast<int>(c)];
        // Invariant under stabilizer multiplication.
        REQUIRE(classify(e.stabilizers, p * e.stabilizers[rng() % e.stabilizers.size()]) == c);
    }
    CHECK(seen[0] > 0);
    CHECK(seen[1] > 0);
    CHECK(seen[2] > 0);
    CHECK(std::string(class_name(ErrorClass::NonDetectable)) == "nd");
}

TEST_CASE("single-qubit faults never go undetected") {
    for (int d = 2; d <= 5; ++d) {
        CAPTURE(d);
        Encoding e = build_le1d(d, 4);
        for (std::size_t v : {std::size_t(0), std::size_t(2)}) {
            auto rep = classify_errors(xyz_decompose(e.vertex(v), 0.4), e);
            CHECK(rep.weight1.nd == 0);
            CHECK(rep.weight1.total() > 0);
            CHECK(rep.weight2.total() > 0);
            for (const auto &w : rep.witnesses) {
                CHECK(w.event.error.weight() == 2);
                CHECK(oracle_class(e.stabilizers, w.final) == ErrorClass::NonDetectable);
            }
        }
    }
}

TEST_CASE("threaded classification is deterministic") {
    Encoding e = build_le1d(4, 4);
    auto dec = xyz_decompose(e.vertex(1), 0.4);
    auto a = classify_errors(dec, e, 1), b = classify_errors(dec, e, 3);
    CHECK(a.events == b.events);
    CHECK(a.total().nd == b.total().nd);
    CHECK(a.total().detectable == b.total().detectable);
    REQUIRE(a.witnesses.size() == b.witnesses.size());
    for (std::size_t k = 0; k < a.witnesses.size(); ++k) CHECK(a.witnesses[k].final == b.witnesses[k].final);
}

TEST_CASE("scan output") {
    ScanResult r = nd_scan("le1d", {2, 3});
    REQUIRE(r.rows.size() == 2);
    CHECK(r.rows[0].d == 2);
    CHECK(r.single_qubit_zero);
    CHECK(r.csv().rfind("d,total_events,trivial,detectable,nd\n2,", 0) == 0);
    CHECK(r.verdict().find("single-qubit nd zero=yes") != std::string::npos);
    CHECK(r.ok() == (r.verdict().rfind("PASS", 0) == 0));
    ScanResult t = nd_scan("le1d", {2, 3}, "T");
    CHECK(t.rows[1].events > 0);
    CHECK_THROWS_AS(nd_scan("le1d", {1}), QemError);
    CHECK_THROWS_AS(nd_scan("le1d", {2}, "Q"), QemError);
}

TEST_CASE("injection keeps the event position") {
    InjectionResult r = injection_check(2);
    CHECK(r.d == 2);
    CHECK(r.checked > 0);
    CHECK(r.checked == r.preserved + r.failures.size());
}
