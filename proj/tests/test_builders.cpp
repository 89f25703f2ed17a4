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

#include <set>

#include "doctest.h"
#include "fenc/builders.h"
#include "oracle.h"

using namespace fenc;

namespace {

// Majorana labels read straight off a registry key: "V:i" -> {g_i, gb_i},
// "E:i>j" -> {g_i, g_j}, "T:i>j" -> {gb_i, g_j}.
std::set<std::string> labels_of(const std::string &key) {
    auto gt = key.find('>');
    std::string i = key.substr(2, gt == std::string::npos ? std::string::npos : gt - 2);
    if (key[0] == 'V') return {"g" + i, "gb" + i};
    std::string j = key.substr(gt + 1);
    if (key[0] == 'E') return {"g" + i, "g" + j};
    return {"gb" + i, "g" + j};
}

// Independent algebra check on symplectic bits.
std::size_t algebra_violations(const Encoding &e) {
    std::vector<std::pair<std::string, std::vector<int>>> ops;
    for (const auto &[k, op] : e.logicals) ops.push_back({k, oracle::bits(op.pauli.str())});
    std::vector<std::vector<int>> stabs;
    for (const auto &s : e.stabilizers) stabs.push_back(oracle::bits(s.str()));
    std::size_t bad = 0;
    for (std::size_t a = 0; a < ops.size(); ++a) {
        for (const auto &s : stabs) bad += oracle::anticommute_bits(ops[a].second, s);
        auto la = labels_of(ops[a].first);
        for (std::size_t b = a + 1; b < ops.size(); ++b) {
            auto lb = labels_of(ops[b].first);
            int shared = 0;
            for (const auto &l : la) shared += lb.count(l);
            bad += oracle::anticommute_bits(ops[a].second, ops[b].second) != (shared == 1);
        }
    }
    for (std::size_t a = 0; a < stabs.size(); ++a)
        for (std::size_t b = a + 1; b < stabs.size(); ++b) bad += oracle::anticommute_bits(stabs[a], stabs[b]);
    return bad;
}

std::size_t encoded_qubits(const Encoding &e) {
    std::vector<std::vector<int>> rows;
    for (const auto &s : e.stabilizers) rows.push_back(oracle::bits(s.str()));
    return e.num_qubits() - oracle::gf2_rank(rows);
}

std::size_t max_weight(const std::vector<PauliString> &ps) {
    std::size_t w = 0;
    for (const auto &p : ps) w = std::max(w, p.weight());
    return w;
}

void check_structure(const Encoding &e) {
    CAPTURE(e.name);
    CHECK(algebra_violations(e) == 0);
    CHECK(encoded_qubits(e) == e.num_modes());
    for (std::size_t i = 0; i < e.num_modes(); ++i) CHECK(e.find("V:" + std::to_string(i)) != nullptr);
}

} // namespace

TEST_CASE("jwt matches the closed form") {
    Encoding e = build_jwt(5);
    check_structure(e);
    CHECK(e.num_qubits() == 5);
    CHECK(e.stabilizers.empty());
    CHECK(e.vertex(2).str() == "+IIYII");
    CHECK(e.find("E:1>2")->pauli.str() == "+IZXII");
}

TEST_CASE("le1d(2) reproduces the two-row ladder") {
    Encoding e = build_le1d(2, 4);
    check_structure(e);
    CHECK(e.num_qubits() == 10);
    // Plaquettes of weight four plus a digon at each end.
    std::size_t digons = 0, plaquettes = 0;
    for (const auto &s : e.stabilizers) {
        digons += s.weight() == 2;
        plaquettes += s.weight() == 4;
    }
    CHECK(digons == 2);
    CHECK(plaquettes == 4);
    // Transfer pairs act on distinct rows of the ladder.
    for (int i = 0; i + 1 < 4; ++i) {
        auto f = e.find("T:" + std::to_string(i) + ">" + std::to_string(i + 1))->pauli.support();
        auto b = e.find("T:" + std::to_string(i + 1) + ">" + std::to_string(i))->pauli.support();
        CHECK(f.size() == 2);
        CHECK(b.size() == 2);
        for (auto q : f) CHECK(std::find(b.begin(), b.end(), q) == b.end());
    }
}

TEST_CASE("le1d operator weights equal the distance") {
    for (int d = 2; d <= 5; ++d) {
        Encoding e = build_le1d(d, 4);
        CAPTURE(d);
        check_structure(e);
        CHECK(e.d == d);
        for (const auto &[k, op] : e.logicals) {
            CAPTURE(k);
            if (op.kind == LogicalKind::Vertex || op.kind == LogicalKind::Transfer) CHECK(op.pauli.weight() == d);
        }
        for (int i = 0; i + 1 < 4; ++i) CHECK((e.vertex(i) * e.vertex(i + 1)).weight() == std::size_t(2 * d));
        // Stabilizer weight stays bounded as d grows.
        CHECK(max_weight(e.stabilizers) <= 5);
    }
}

TEST_CASE("simplified even-distance boundaries") {
    Encoding e = build_le1d(4, 4, true);
    check_structure(e);
    Encoding full = build_le1d(4, 4);
    CHECK(e.num_qubits() <= full.num_qubits());
    CHECK_THROWS_AS(build_le1d(3, 4, true), ParameterError);
    CHECK_THROWS_AS(build_le1d(2, 4, true), ParameterError);
}

TEST_CASE("two-dimensional families have valid algebra") {
    check_structure(build_le2d(2, 2, 2));
    check_structure(build_le2d(3, 2, 2));
    check_structure(build_le2d(2, 2, 3));
    check_structure(build_le2d(2, 3, 3));
    check_structure(build_le2d(2, 2, 2, Layout::Snake));
    check_structure(build_le2d(3, 2, 2, Layout::Snake));
    check_structure(build_vc(1, 2, 2));
    check_structure(build_vc(1, 3, 3));
    check_structure(build_vc(2, 2, 2));
    check_structure(build_hx(2, 2, 2));
    check_structure(build_hx(2, 2, 3));
    check_structure(build_dk(1, 2, 2));
    check_structure(build_dk(1, 3, 3));
    check_structure(build_pe(3, 2, 2));
}

TEST_CASE("two-dimensional stabilizer weights stay local") {
    CHECK(max_weight(build_le2d(2, 3, 3).stabilizers) <= 6);
    CHECK(max_weight(build_le2d(3, 2, 2).stabilizers) <= 6);
    CHECK(max_weight(build_hx(2, 2, 2).stabilizers) <= 6);
    CHECK(max_weight(build_pe(3, 2, 2).stabilizers) <= 6);
}

TEST_CASE("perforated encoding is natively spinful") {
    Encoding e = build_pe(3, 2, 2);
    CHECK(e.spinful());
    CHECK(e.num_modes() == 8);
    CHECK(modes_per_site("pe") == 2);
    CHECK(modes_per_site("le2d") == 1);
    // Spin-flip bonds are registered as edges.
    std::size_t flips = 0;
    for (const auto &[k, op] : e.logicals)
        if (op.kind == LogicalKind::Edge && e.modes[op.i].row == e.modes[op.j].row &&
            e.modes[op.i].col == e.modes[op.j].col)
            ++flips;
    CHECK(flips == 4);
}

TEST_CASE("stacking two copies makes a spinful encoding with the same distance") {
    Encoding base = build_le1d(2, 3);
    Encoding e = stack_spinful(base);
    check_structure(e);
    CHECK(e.num_modes() == 6);
    CHECK(e.num_qubits() == 2 * base.num_qubits());
    CHECK(e.d == 2);
    CHECK(e.spinful());
    CHECK_THROWS_AS(stack_spinful(e), ParameterError);
}

TEST_CASE("request dispatch and parameter errors") {
    BuildRequest r;
    r.family = "le1d";
    r.d = 2;
    r.modes = 3;
    CHECK(build(r).num_modes() == 3);
    r.spinful = true;
    CHECK(build(r).num_modes() == 6);

    BuildRequest bad;
    bad.family = "toric";
    CHECK_THROWS_AS(build(bad), ParameterError);
    bad.family = "le2d";
    bad.d = 2;
    CHECK_THROWS_AS(build(bad), ParameterError); // no grid
    CHECK_THROWS_AS(build_le1d(1, 4), ParameterError);
    CHECK_THROWS_AS(build_jwt(0), ParameterError);
    CHECK_THROWS_AS(build_le2d(2, 1, 2), ParameterError);
    CHECK_THROWS_AS(build_le2d(4, 2, 2), UnsupportedError);
    CHECK_THROWS_AS(build_le2d(3, 3, 3), UnsupportedError);
    CHECK_THROWS_AS(build_hx(3, 2, 2), UnsupportedError);
    CHECK_THROWS_AS(build_hx(2, 3, 3), UnsupportedError);
    CHECK_THROWS_AS(build_dk(2, 2, 2), UnsupportedError);
    CHECK_THROWS_AS(build_pe(2, 2, 2), UnsupportedError);
    CHECK_THROWS_AS(build_pe(3, 3, 2), UnsupportedError);
}

TEST_CASE("layout qubit counts agree with the built encodings") {
    CHECK(layout_qubits("le1d", 2, 1, 4) == build_le1d(2, 4).num_qubits());
    CHECK(layout_qubits("le2d", 2, 2, 2) == build_le2d(2, 2, 2).num_qubits());
    CHECK(layout_qubits("vc", 1, 2, 2) == build_vc(1, 2, 2).num_qubits());
    CHECK(layout_qubits("dk", 1, 2, 2) == build_dk(1, 2, 2).num_qubits());
}

TEST_CASE("certification rejects a corrupted encoding") {
    Encoding e = build_le1d(2, 4);
    CHECK_NOTHROW(certify(e));
    e.d = 3;
    CHECK_THROWS_AS(certify(e), BuildError);
}
