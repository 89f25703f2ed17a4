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

#include <array>
#include <map>
#include <stdexcept>
#include <string>
#include <vector>

#include "fenc/pauli.h"

namespace fenc {

struct SchemaError : std::runtime_error {
    using std::runtime_error::runtime_error;
};

struct ValidationError : std::runtime_error {
    using std::runtime_error::runtime_error;
};

struct IoError : std::runtime_error {
    using std::runtime_error::runtime_error;
};

enum class Spin { None, Up, Down };

const char *spin_name(Spin s);
Spin parse_spin(const std::string &s);

struct ModeId {
    int row = 0;
    int col = 0;
    Spin spin = Spin::None;
    bool operator==(const ModeId &) const = default;
};

// gamma_i (bar == false) or gamma-bar_i (bar == true).
struct MajoranaLabel {
    int mode = 0;
    bool bar = false;
    bool operator==(const MajoranaLabel &) const = default;
    bool operator<(const MajoranaLabel &o) const { return mode != o.mode ? mode < o.mode : bar < o.bar; }
};

std::string label_str(const MajoranaLabel &m);
MajoranaLabel parse_label(const std::string &s);

enum class LogicalKind { Vertex, Edge, Transfer };

// Transfer(i, j) carries {gamma-bar_i, gamma_j}; the backward transfer of a
// bond (i, j) is Transfer(j, i).
struct LogicalOperator {
    LogicalKind kind = LogicalKind::Vertex;
    int i = 0;
    int j = 0;
    PauliString pauli;

    std::array<MajoranaLabel, 2> majoranas() const;
    std::string key() const;
    bool operator==(const LogicalOperator &) const = default;
};

LogicalOperator make_vertex(int i, PauliString p);
LogicalOperator make_edge(int i, int j, PauliString p);
LogicalOperator make_transfer(int from, int to, PauliString p);

struct Qubit {
    int id = 0;
    int x = 0;
    int y = 0;
    std::string tag;
    bool operator==(const Qubit &) const = default;
};

struct Encoding {
    std::string name;
    std::string family;
    int d = 1;
    std::vector<Qubit> qubits;
    std::vector<ModeId> modes;
    std::vector<PauliString> stabilizers;
    std::map<std::string, LogicalOperator> logicals;

    std::size_t num_qubits() const { return qubits.size(); }
    std::size_t num_modes() const { return modes.size(); }
    bool spinful() const;

    void add(LogicalOperator op);
    const LogicalOperator *find(const std::string &key) const;
    const PauliString &vertex(int i) const;
    int mode_index(const ModeId &m) const;

    bool operator==(const Encoding &) const = default;
};

// Structural invariants: lengths, commutation with stabilizers, logical count.
// Throws ValidationError describing the first failure.
void validate(const Encoding &enc);

std::string to_json(const Encoding &enc);
Encoding from_json(const std::string &text);
void save(const Encoding &enc, const std::string &path);
Encoding load(const std::string &path);

std::string render_text(const Encoding &enc);
std::string render_svg(const Encoding &enc);

// Write-to-temp-then-rename.
void write_file_atomic(const std::string &path, const std::string &data);

} // namespace fenc
