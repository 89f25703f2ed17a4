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

#include "fenc/encoding.h"

#include <json.hpp>

#include <cmath>
#include <cstdio>
#include <filesystem>
#include <fstream>
#include <sstream>

namespace fenc {

using nlohmann::json;

const char *spin_name(Spin s) {
    switch (s) {
    case Spin::Up: return "up";
    case Spin::Down: return "down";
    default: return "none";
    }
}

Spin parse_spin(const std::string &s) {
    if (s == "up") return Spin::Up;
    if (s == "down") return Spin::Down;
    if (s == "none") return Spin::None;
    throw SchemaError("unknown spin '" + s + "'");
}

std::string label_str(const MajoranaLabel &m) { return (m.bar ? "gb:" : "g:") + std::to_string(m.mode); }

MajoranaLabel parse_label(const std::string &s) {
    MajoranaLabel m;
    std::string rest;
    if (s.rfind("gb:", 0) == 0) {
        m.bar = true;
        rest = s.substr(3);
    } else if (s.rfind("g:", 0) == 0) {
        rest = s.substr(2);
    } else {
        throw SchemaError("bad Majorana label '" + s + "'");
    }
    try {
        std::size_t used = 0;
        m.mode = std::stoi(rest, &used);
        if (used != rest.size() || m.mode < 0) throw std::invalid_argument(rest);
    } catch (const std::exception &) {
        throw SchemaError("bad Majorana label '" + s + "'");
    }
    return m;
}

std::array<MajoranaLabel, 2> LogicalOperator::majoranas() const {
    switch (kind) {
    case LogicalKind::Vertex: return {MajoranaLabel{i, false}, MajoranaLabel{i, true}};
    case LogicalKind::Edge: return {MajoranaLabel{i, false}, MajoranaLabel{j, false}};
    default: return {MajoranaLabel{i, true}, MajoranaLabel{j, false}};
    }
}

std::string LogicalOperator::key() const {
    switch (kind) {
    case LogicalKind::Vertex: return "V:" + std::to_string(i);
    case LogicalKind::Edge: return "E:" + std::to_string(i) + ">" + std::to_string(j);
    default: return "T:" + std::to_string(i) + ">" + std::to_string(j);
    }
}

LogicalOperator make_vertex(int i, PauliString p) { return {LogicalKind::Vertex, i, i, std::move(p)}; }

LogicalOperator make_edge(int i, int j, PauliString p) {
    if (i > j) std::swap(i, j);
    return {LogicalKind::Edge, i, j, std::move(p)};
}

LogicalOperator make_transfer(int from, int to, PauliString p) {
    return {LogicalKind::Transfer, from, to, std::move(p)};
}

bool Encoding::spinful() const {
    for (const auto &m : modes) {
        if (m.spin != Spin::None) return true;
    }
    return false;
}

void Encoding::add(LogicalOperator op) {
    std::string k = op.key();
    logicals[k] = std::move(op);
}

const LogicalOperator *Encoding::find(const std::string &key) const {
    auto it = logicals.find(key);
    return it == logicals.end() ? nullptr : &it->second;
}

const PauliString &Encoding::vertex(int i) const {
    auto *op = find("V:" + std::to_string(i));
    if (!op) throw ValidationError("vertex V:" + std::to_string(i) + " not registered");
    return op->pauli;
}

int Encoding::mode_index(const ModeId &m) const {
    for (std::size_t k = 0; k < modes.size(); ++k) {
        if (modes[k] == m) return static_cast<int>(k);
    }
    return -1;
}

void validate(const Encoding &enc) {
    const std::size_t n = enc.qubits.size();
    for (std::size_t q = 0; q < n; ++q) {
        if (enc.qubits[q].id != static_cast<int>(q)) throw ValidationError("qubit ids must be 0..n-1 in order");
    }
    for (std::size_t a = 0; a < enc.modes.size(); ++a) {
        for (std::size_t b = 0; b < a; ++b) {
            if (enc.modes[a] == enc.modes[b]) throw ValidationError("duplicate mode id");
        }
    }
    for (const auto &s : enc.stabilizers) {
        if (s.size() != n) throw ValidationError("stabilizer length differs from qubit count");
        if (!s.hermitian()) throw ValidationError("stabilizer " + s.str() + " is not Hermitian");
    }
    for (std::size_t a = 0; a < enc.stabilizers.size(); ++a) {
        for (std::size_t b = 0; b < a; ++b) {
            if (!commutes(enc.stabilizers[a], enc.stabilizers[b])) {
                throw ValidationError("stabilizers " + std::to_string(b) + " and " + std::to_string(a) +
                                      " anticommute");
            }
        }
    }
    const int m = static_cast<int>(enc.modes.size());
    for (const auto &[key, op] : enc.logicals) {
        if (key != op.key()) throw ValidationError("logical key mismatch for " + key);
        if (op.i < 0 || op.j < 0 || op.i >= m || op.j >= m) throw ValidationError("logical " + key + " names a missing mode");
        if (op.kind != LogicalKind::Vertex && op.i == op.j) throw ValidationError("logical " + key + " is a self-bond");
        if (op.pauli.size() != n) throw ValidationError("logical " + key + " has wrong length");
        if (op.pauli.weight() == 0) throw ValidationError("logical " + key + " has weight zero");
        for (std::size_t s = 0; s < enc.stabilizers.size(); ++s) {
            if (!commutes(op.pauli, enc.stabilizers[s])) {
                throw ValidationError("logical " + key + " anticommutes with stabilizer " + std::to_string(s));
            }
        }
    }
    std::size_t r = rank_gf2(enc.stabilizers, n);
    if (n - r != enc.modes.size()) {
        throw ValidationError("qubits minus stabilizer rank is " + std::to_string(n - r) + ", expected " +
                              std::to_string(enc.modes.size()) + " modes");
    }
}

std::string to_json(const Encoding &enc) {
    json j;
    j["name"] = enc.name;
    j["family"] = enc.family;
    j["d"] = enc.d;
    json modes = json::array();
    for (const auto &m : enc.modes) modes.push_back({{"row", m.row}, {"col", m.col}, {"spin", spin_name(m.spin)}});
    j["modes"] = modes;
    json qubits = json::array();
    for (const auto &q : enc.qubits) qubits.push_back({{"id", q.id}, {"x", q.x}, {"y", q.y}, {"tag", q.tag}});
    j["qubits"] = qubits;
    json stabs = json::array();
    for (const auto &s : enc.stabilizers) stabs.push_back(s.str());
    j["stabilizers"] = stabs;
    json logicals = json::object();
    for (const auto &[key, op] : enc.logicals) {
        auto mj = op.majoranas();
        logicals[key] = {{"pauli", op.pauli.str()}, {"majoranas", {label_str(mj[0]), label_str(mj[1])}}};
    }
    j["logicals"] = logicals;
    return j.dump(1) + "\n";
}

namespace {

template <typename T> T field(const json &obj, const char *name, const std::string &where) {
    if (!obj.is_object() || !obj.contains(name)) throw SchemaError(where + ": missing field '" + name + "'");
    try {
        return obj.at(name).get<T>();
    } catch (const json::exception &) {
        throw SchemaError(where + ": field '" + name + "' has the wrong type");
    }
}

LogicalOperator parse_key(const std::string &key) {
    auto bad = [&] { return SchemaError("bad logical key '" + key + "'"); };
    if (key.size() < 3 || key[1] != ':') throw bad();
    std::string body = key.substr(2);
    auto num = [&](const std::string &s) {
        if (s.empty() || s.find_first_not_of("0123456789") != std::string::npos) throw bad();
        return std::stoi(s);
    };
    LogicalOperator op;
    if (key[0] == 'V') {
        op.kind = LogicalKind::Vertex;
        op.i = op.j = num(body);
        return op;
    }
    auto gt = body.find('>');
    if (gt == std::string::npos) throw bad();
    op.i = num(body.substr(0, gt));
    op.j = num(body.substr(gt + 1));
    if (key[0] == 'E') {
        op.kind = LogicalKind::Edge;
        if (op.i > op.j) throw bad();
    } else if (key[0] == 'T') {
        op.kind = LogicalKind::Transfer;
    } else {
        throw bad();
    }
    return op;
}

PauliString parse_pauli(const std::string &s, std::size_t n, const std::string &where) {
    PauliString p;
    try {
        p = PauliString::parse(s);
    } catch (const ParseError &e) {
        throw SchemaError(where + ": " + e.what());
    }
    if (p.size() != n) {
        throw SchemaError(where + ": Pauli length " + std::to_string(p.size()) + " differs from qubit count " +
                          std::to_string(n));
    }
    return p;
}

} // namespace

Encoding from_json(const std::string &text) {
    json j;
    try {
        j = json::parse(text);
    } catch (const json::exception &e) {
        throw SchemaError(std::string("not a JSON document: ") + e.what());
    }
    if (!j.is_object()) throw SchemaError("document must be a JSON object");
    Encoding enc;
    enc.name = field<std::string>(j, "name", "document");
    enc.family = field<std::string>(j, "family", "document");
    enc.d = field<int>(j, "d", "document");
    auto modes = field<json>(j, "modes", "document");
    auto qubits = field<json>(j, "qubits", "document");
    auto stabs = field<json>(j, "stabilizers", "document");
    auto logicals = field<json>(j, "logicals", "document");
    if (!modes.is_array() || !qubits.is_array() || !stabs.is_array() || !logicals.is_object()) {
        throw SchemaError("document: modes/qubits/stabilizers must be arrays and logicals an object");
    }
    for (const auto &m : modes) {
        enc.modes.push_back({field<int>(m, "row", "mode"), field<int>(m, "col", "mode"),
                             parse_spin(field<std::string>(m, "spin", "mode"))});
    }
    for (const auto &q : qubits) {
        enc.qubits.push_back({field<int>(q, "id", "qubit"), field<int>(q, "x", "qubit"), field<int>(q, "y", "qubit"),
                              field<std::string>(q, "tag", "qubit")});
    }
    const std::size_t n = enc.qubits.size();
    for (std::size_t k = 0; k < stabs.size(); ++k) {
        if (!stabs[k].is_string()) throw SchemaError("stabilizer " + std::to_string(k) + " is not a string");
        enc.stabilizers.push_back(parse_pauli(stabs[k].get<std::string>(), n, "stabilizer " + std::to_string(k)));
    }
    for (const auto &[key, val] : logicals.items()) {
        LogicalOperator op = parse_key(key);
        op.pauli = parse_pauli(field<std::string>(val, "pauli", key), n, key);
        auto labels = field<std::vector<std::string>>(val, "majoranas", key);
        if (labels.size() != 2) throw SchemaError(key + ": needs exactly two Majorana labels");
        auto want = op.majoranas();
        std::array<MajoranaLabel, 2> got{parse_label(labels[0]), parse_label(labels[1])};
        std::sort(got.begin(), got.end());
        std::sort(want.begin(), want.end());
        if (got != want) throw ValidationError(key + ": Majorana labels do not match the operator kind");
        enc.logicals[key] = op;
    }
    validate(enc);
    return enc;
}

void write_file_atomic(const std::string &path, const std::string &data) {
    std::string tmp = path + ".tmp";
    {
        std::ofstream out(tmp, std::ios::binary | std::ios::trunc);
        if (!out) throw IoError("cannot open " + tmp + " for writing");
        out << data;
        if (!out) throw IoError("write failed for " + tmp);
    }
    std::error_code ec;
    std::filesystem::rename(tmp, path, ec);
    if (ec) {
        std::filesystem::remove(tmp, ec);
        throw IoError("cannot move output into place at " + path);
    }
}

void save(const Encoding &enc, const std::string &path) {
    if (enc.logicals.empty()) throw ValidationError("refusing to save an encoding with an empty logical registry");
    validate(enc);
    write_file_atomic(path, to_json(enc));
}

Encoding load(const std::string &path) {
    std::ifstream in(path, std::ios::binary);
    if (!in) throw IoError("cannot open " + path);
    std::stringstream ss;
    ss << in.rdbuf();
    return from_json(ss.str());
}

std::string render_text(const Encoding &enc) {
    int max_x = 0, max_y = 0;
    for (const auto &q : enc.qubits) {
        max_x = std::max(max_x, q.x);
        max_y = std::max(max_y, q.y);
    }
    std::vector<std::vector<std::string>> grid(max_y + 1, std::vector<std::string>(max_x + 1, "."));
    for (const auto &q : enc.qubits) {
        if (q.x >= 0 && q.y >= 0) grid[q.y][q.x] = std::to_string(q.id);
    }
    std::ostringstream out;
    out << enc.name << "  family=" << enc.family << " d=" << enc.d << " qubits=" << enc.qubits.size()
        << " modes=" << enc.modes.size() << "\n";
    for (const auto &row : grid) {
        for (const auto &cell : row) {
            out << std::string(cell.size() < 4 ? 4 - cell.size() : 1, ' ') << cell;
        }
        out << "\n";
    }
    out << "stabilizers:\n";
    for (const auto &s : enc.stabilizers) out << "  " << s.str() << "\n";
    out << "logicals:\n";
    for (const auto &[key, op] : enc.logicals) out << "  " << key << "  " << op.pauli.str() << "\n";
    return out.str();
}

std::string render_svg(const Encoding &enc) {
    const double step = 40.0, margin = 30.0;
    int max_x = 0, max_y = 0;
    for (const auto &q : enc.qubits) {
        max_x = std::max(max_x, q.x);
        max_y = std::max(max_y, q.y);
    }
    auto px = [&](int x) { return margin + step * x; };
    auto py = [&](int y) { return margin + step * y; };
    std::ostringstream out;
    out << "<svg xmlns=\"http://www.w3.org/2000/svg\" width=\"" << 2 * margin + step * max_x << "\" height=\""
        << 2 * margin + step * max_y << "\">\n";
    for (const auto &s : enc.stabilizers) {
        auto sup = s.support();
        if (sup.empty()) continue;
        double cx = 0, cy = 0;
        for (auto q : sup) {
            cx += px(enc.qubits[q].x);
            cy += py(enc.qubits[q].y);
        }
        cx /= sup.size();
        cy /= sup.size();
        std::sort(sup.begin(), sup.end(), [&](std::size_t a, std::size_t b) {
            return std::atan2(py(enc.qubits[a].y) - cy, px(enc.qubits[a].x) - cx) <
                   std::atan2(py(enc.qubits[b].y) - cy, px(enc.qubits[b].x) - cx);
        });
        bool has_x = false, has_z = false;
        for (auto q : sup) {
            has_x |= s.x(q);
            has_z |= s.z(q);
        }
        const char *fill = has_x && has_z ? "#c9a0dc" : (has_x ? "#f4a6a6" : "#a6c8f4");
        out << " <polygon fill=\"" << fill << "\" fill-opacity=\"0.5\" stroke=\"#555\" points=\"";
        for (auto q : sup) out << px(enc.qubits[q].x) << "," << py(enc.qubits[q].y) << " ";
        out << "\"/>\n";
    }
    for (const auto &[key, op] : enc.logicals) {
        const char *color = op.kind == LogicalKind::Vertex ? "#2a9d2a" : (op.kind == LogicalKind::Edge ? "#d07a00" : "#7a3fbf");
        out << " <polyline fill=\"none\" stroke=\"" << color << "\" stroke-width=\"2\" points=\"";
        for (auto q : op.pauli.support()) out << px(enc.qubits[q].x) << "," << py(enc.qubits[q].y) << " ";
        out << "\"><title>" << key << "</title></polyline>\n";
    }
    for (const auto &q : enc.qubits) {
        out << " <circle cx=\"" << px(q.x) << "\" cy=\"" << py(q.y) << "\" r=\"5\" fill=\"black\"><title>q" << q.id
            << "</title></circle>\n";
    }
    out << "</svg>\n";
    return out.str();
}

} // namespace fenc
