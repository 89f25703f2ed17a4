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

#include "doctest.h"
#include "fenc/builders.h"
#include "fenc/verifier.h"
#include "oracle.h"

using namespace fenc;

namespace {

// Brute-force distance over every Pauli up to weight w_max.
std::size_t brute_distance(const Encoding &e, std::size_t w_max) {
    const std::size_t n = e.num_qubits();
    std::vector<std::vector<int>> stabs;
    for (const auto &s : e.stabilizers) stabs.push_back(oracle::bits(s.str()));
    const std::size_t rank = oracle::gf2_rank(stabs);
    std::size_t best = w_max + 1;
    std::size_t total = 1;
    for (std::size_t q = 0; q < n; ++q) total *= 4;
    for (std::size_t code = 1; code < total; ++code) {
        std::string text;
        std::size_t c = code, w = 0;
        for (std::size_t q = 0; q < n; ++q, c >>= 2) {
            text += "IXYZ"[c & 3];
            w += (c & 3) != 0;
        }
        if (w >= best) continue;
        auto b = oracle::bits(text);
        bool commuting = true;
        for (const auto &s : stabs) commuting = commuting && !oracle::anticommute_bits(b, s);
        if (!commuting) continue;
        auto ext = stabs;
        ext.push_back(b);
        if (oracle::gf2_rank(ext) > rank) best = w;
    }
    return best;
}

} // namespace

TEST_CASE("algebra and counts hold for every fixture") {
    for (const auto &f : oracle::fixtures()) {
        CAPTURE(f);
        Encoding e = load(f);
        CHECK(check_algebra(e).ok());
        CHECK(check_counts(e));
    }
}

TEST_CASE("a flipped logical shows up as a violation") {
    Encoding e = build_le1d(2, 4);
    auto &op = e.logicals.at("T:0>1").pauli;
    op = op * PauliString::parse("ZIIIIIIIII");
    auto rep = check_algebra(e);
    CHECK_FALSE(rep.ok());
    bool names_it = false;
    for (const auto &v : rep.violations) names_it = names_it || v.a == "T:0>1" || v.b == "T:0>1";
    CHECK(names_it);
    CHECK(rep.str().find("T:0>1") != std::string::npos);

    Encoding short_stabs = build_le1d(2, 4);
    short_stabs.stabilizers.pop_back();
    CHECK_FALSE(check_counts(short_stabs));
}

TEST_CASE("distance agrees with brute force on small codes") {
    for (const char *name : {"le1d_d2_m4", "jwt_m4", "le2d_d2_2x2", "dk_d1_2x2"}) {
        CAPTURE(name);
        Encoding e = load(std::string(FENC_FIXTURES) + "/" + name + ".fenc.json");
        if (e.num_qubits() > 10) continue;
        std::size_t bf = brute_distance(e, 3);
        auto rep = compute_distance(e, 3);
        if (bf <= 3) {
            REQUIRE(rep.witness.has_value());
            CHECK(rep.witness->weight() == bf);
            CHECK(rep.certified_floor == bf);
            CHECK(valid_witness(e, *rep.witness));
        } else {
            CHECK_FALSE(rep.witness.has_value());
            CHECK(rep.certified_floor == 4);
        }
    }
}

TEST_CASE("claimed distances are certified with a witness") {
    for (int d = 2; d <= 4; ++d) {
        CAPTURE(d);
        Encoding e = build_le1d(d, 4);
        auto rep = compute_distance(e, static_cast<std::size_t>(d));
        REQUIRE(rep.witness.has_value());
        CHECK(rep.witness->weight() == std::size_t(d));
        CHECK(rep.certified_floor == std::size_t(d));
        CHECK(valid_witness(e, *rep.witness));
    }
    auto rep = compute_distance(build_le2d(3, 2, 2), 3);
    REQUIRE(rep.witness.has_value());
    CHECK(rep.witness->weight() == 3);
}

TEST_CASE("an overclaimed document is caught") {
    Encoding e = load(std::string(FENC_FIXTURES) + "/overclaimed_d3.fenc.json");
    CHECK(e.d == 3);
    auto rep = compute_distance(e, 3);
    REQUIRE(rep.witness.has_value());
    CHECK(rep.witness->weight() == 2);
    CHECK(rep.certified_floor == 2);
}

TEST_CASE("witnesses are rejected when they are stabilizers or detectable") {
    Encoding e = build_le1d(2, 4);
    CHECK_FALSE(valid_witness(e, e.stabilizers[0]));
    CHECK_FALSE(valid_witness(e, PauliString::parse("ZIIIIIIIII")));
    CHECK(valid_witness(e, e.vertex(0)));
}

TEST_CASE("oversized searches are refused before running") {
    Encoding e = build_le1d(4, 4, true);
    DistanceOptions opt;
    opt.w_max = 4;
    opt.budget = 10;
    CHECK_THROWS_AS(compute_distance(e, opt), BudgetError);
    CHECK(distance_work(e, 4) > 10);
    CHECK(distance_work(e, 2) < distance_work(e, 3));
}

TEST_CASE("parallel and meet-in-the-middle searches agree with the serial scan") {
    Encoding e = build_le1d(3, 4);
    DistanceOptions serial;
    serial.w_max = 3;
    DistanceOptions mitm = serial;
    mitm.mitm_threshold = 1;
    DistanceOptions par = serial;
    par.threads = 3;
    auto a = compute_distance(e, serial), b = compute_distance(e, mitm), c = compute_distance(e, par);
    REQUIRE(a.witness.has_value());
    REQUIRE(b.witness.has_value());
    REQUIRE(c.witness.has_value());
    CHECK(*a.witness == *c.witness);
    CHECK(b.witness->weight() == 3);
    CHECK(b.method.find("meet-in-the-middle") != std::string::npos);
    CHECK(a.method == "exhaustive");
}

TEST_CASE("le1d weight table") {
    for (int d = 2; d <= 5; ++d) {
        CAPTURE(d);
        auto t = weight_report(build_le1d(d, 4));
        REQUIRE(t.find("T^H") != nullptr);
        CHECK(t.find("T^H")->max == std::size_t(d));
        CHECK(t.find("T^H")->min == std::size_t(d));
        CHECK(t.find("n")->max == std::size_t(d));
        CHECK(t.find("nn")->max == std::size_t(2 * d));
    }
}

TEST_CASE("minimization multiplies in stabilizers") {
    Encoding e = build_le1d(2, 4);
    PauliString heavy = e.vertex(1) * e.stabilizers[1] * e.stabilizers[2];
    PauliString light = minimize_weight(heavy, e.stabilizers, 2);
    CHECK(light.weight() <= e.vertex(1).weight());
    CHECK(in_stabilizer_group(light * adjoint(heavy), e.stabilizers));
    // Products of neighbouring vertices shrink back to the weight of one pair.
    auto t = weight_report(e, 2);
    const auto *nn = t.find("nn");
    REQUIRE(nn != nullptr);
    CHECK(nn->max == 4);
    REQUIRE(nn->min_minimized.has_value());
    CHECK(*nn->min_minimized == 2);
    CHECK(t.find("E^H")->min == 3);
}

TEST_CASE("two-dimensional weight tables") {
    auto t = weight_report(build_le2d(2, 2, 2));
    REQUIRE(t.find("T^V") != nullptr);
    CHECK(t.find("T^V")->max >= 2);
    auto p = weight_report(build_pe(3, 2, 2));
    REQUIRE(p.find("T^S") != nullptr);
    CHECK(p.find("T^S")->max == 5);
    REQUIRE(p.find("E^S") != nullptr);
    CHECK(p.find("E^S")->max == 3);
    CHECK(p.text().find("T^S") != std::string::npos);
    CHECK(p.csv().rfind("family,d,operator,category", 0) == 0);
}

TEST_CASE("qubit to mode ratios") {
    CHECK(bulk_ratio("le2d", 2) == doctest::Approx(4));
    CHECK(bulk_ratio("le2d", 3) == doctest::Approx(6));
    CHECK(bulk_ratio("vc", 1) == doctest::Approx(2));
    CHECK(bulk_ratio("dk", 1) == doctest::Approx(1.5));
    CHECK(bulk_ratio("hx", 2) == doctest::Approx(2));
    CHECK(bulk_ratio("jwt", 1) == doctest::Approx(1));
    CHECK(*reference_ratio("le2d", 7) == doctest::Approx(57));
    CHECK(*ratio_formula("dk", 7) == doctest::Approx(67.5));
    CHECK_FALSE(ratio_formula("le2d", 3).has_value());
    CHECK_THROWS_AS(bulk_ratio("le2d", 9), UnsupportedError);

    auto rows = ratio_report("le2d", 2, 7);
    CHECK(rows.size() == 6);
    CHECK(rows[0].bulk.has_value());
    CHECK_FALSE(rows.back().bulk.has_value());
    CHECK(*rows.back().formula == doctest::Approx(57));
    CHECK(ratio_csv(rows).rfind("d,bulk,total,reference,formula\n2,4,", 0) == 0);
    CHECK_THROWS_AS(ratio_report("toric", 2, 3), ParameterError);
}
