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

#include <filesystem>
#include <fstream>
#include <sstream>

#include "doctest.h"
#include "fenc/builders.h"
#include "fenc/encoding.h"
#include "oracle.h"

using namespace fenc;
namespace fs = std::filesystem;

namespace {

std::string slurp(const std::string &path) {
    std::ifstream in(path, std::ios::binary);
    std::stringstream ss;
    ss << in.rdbuf();
    return ss.str();
}

fs::path scratch_dir() {
    fs::path p = fs::temp_directory_path() / "fenc_test_encoding";
    fs::create_directories(p);
    return p;
}

Encoding small() { return load(std::string(FENC_FIXTURES) + "/le1d_d2_m4.fenc.json"); }

} // namespace

TEST_CASE("every fixture round-trips through the document format") {
    auto files = oracle::fixtures();
    REQUIRE(files.size() >= 10);
    for (const auto &f : files) {
        CAPTURE(f);
        Encoding e = load(f);
        std::string text = to_json(e);
        Encoding back = from_json(text);
        CHECK(back == e);
        CHECK(to_json(back) == text);
        CHECK(text == slurp(f));
    }
}

TEST_CASE("save writes atomically and reloads") {
    Encoding e = small();
    fs::path out = scratch_dir() / "roundtrip.fenc.json";
    save(e, out.string());
    CHECK(load(out.string()) == e);
    CHECK_FALSE(fs::exists(out.string() + ".tmp"));
    CHECK_THROWS_AS(save(e, (scratch_dir() / "no/such/dir/x.fenc.json").string()), IoError);
    Encoding empty = e;
    empty.logicals.clear();
    CHECK_THROWS_AS(save(empty, out.string()), ValidationError);
}

TEST_CASE("loading reports schema problems") {
    CHECK_THROWS_AS(load("/nonexistent/file.fenc.json"), IoError);
    CHECK_THROWS_AS(load(std::string(FENC_FIXTURES) + "/malformed.fenc.json"), SchemaError);
    CHECK_THROWS_AS(from_json("[1, 2]"), SchemaError);
    CHECK_THROWS_AS(from_json("{\"name\": \"x\"}"), SchemaError);

    std::string text = to_json(small());
    auto replace = [&](const std::string &from, const std::string &to) {
        std::string t = text;
        auto pos = t.find(from);
        REQUIRE(pos != std::string::npos);
        return t.replace(pos, from.size(), to);
    };
    CHECK_THROWS_AS(from_json(replace("\"+XXXXIIIIII\"", "\"+XXXXIIIII\"")), SchemaError);
    CHECK_THROWS_AS(from_json(replace("\"+XXXXIIIIII\"", "\"+XXXXIIIIIQ\"")), SchemaError);
    CHECK_THROWS_AS(from_json(replace("\"T:0>1\"", "\"Q:0>1\"")), SchemaError);
    CHECK_THROWS_AS(from_json(replace("\"gb:0\"", "\"g:0\"")), ValidationError);
}

TEST_CASE("validation catches broken invariants") {
    Encoding e = small();
    CHECK_NOTHROW(validate(e));

    Encoding bad = e;
    bad.stabilizers.push_back(PauliString::parse("ZIIIIIIIII"));
    CHECK_THROWS_AS(validate(bad), ValidationError);

    bad = e;
    bad.stabilizers.pop_back();
    CHECK_THROWS_AS(validate(bad), ValidationError); // one logical qubit too many

    bad = e;
    bad.logicals.at("V:0").pauli = PauliString::parse("XIIIIIIIII");
    CHECK_THROWS_AS(validate(bad), ValidationError);

    bad = e;
    bad.modes[1] = bad.modes[0];
    CHECK_THROWS_AS(validate(bad), ValidationError);

    bad = e;
    bad.stabilizers[0] = bad.stabilizers[0].with_phase(1);
    CHECK_THROWS_AS(validate(bad), ValidationError);
}

TEST_CASE("logical keys and Majorana labels") {
    auto v = make_vertex(2, PauliString(3));
    auto e = make_edge(3, 1, PauliString(3));
    auto t = make_transfer(4, 1, PauliString(3));
    CHECK(v.key() == "V:2");
    CHECK(e.key() == "E:1>3");
    CHECK(t.key() == "T:4>1");
    CHECK(label_str(t.majoranas()[0]) == "gb:4");
    CHECK(label_str(t.majoranas()[1]) == "g:1");
    CHECK(label_str(v.majoranas()[1]) == "gb:2");
    CHECK(parse_label("gb:12") == MajoranaLabel{12, true});
    CHECK_THROWS_AS(parse_label("gx:1"), SchemaError);
    CHECK_THROWS_AS(parse_label("g:-1"), SchemaError);
    CHECK(parse_spin("up") == Spin::Up);
    CHECK_THROWS_AS(parse_spin("sideways"), SchemaError);
}

TEST_CASE("diagrams name every qubit") {
    Encoding e = small();
    std::string text = render_text(e);
    CHECK(text.find("qubits=10 modes=4") != std::string::npos);
    CHECK(text.find("+XXXXIIIIII") != std::string::npos);
    std::string svg = render_svg(e);
    CHECK(svg.rfind("<svg", 0) == 0);
    std::size_t dots = 0;
    for (std::size_t pos = 0; (pos = svg.find("<circle", pos)) != std::string::npos; ++pos) ++dots;
    CHECK(dots == e.num_qubits());
    CHECK(render_svg(e) == svg);
}

TEST_CASE("built documents are byte-identical across runs") {
    CHECK(to_json(build_le1d(3, 4)) == to_json(build_le1d(3, 4)));
    CHECK(to_json(build_vc(1, 2, 2)) == to_json(build_vc(1, 2, 2)));
}
