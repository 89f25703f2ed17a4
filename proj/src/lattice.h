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

// Shared helpers for the lattice builders.  Not installed.

#pragma once

#include <functional>
#include <tuple>
#include <utility>
#include <vector>

#include "fenc/encoding.h"

namespace fenc::detail {

// Checkerboard plaquette type.
char face_type(int r, int c);

class Grid {
  public:
    Grid(int rows, int cols, bool column_major);

    int rows() const { return rows_; }
    int cols() const { return cols_; }
    std::size_t n() const { return static_cast<std::size_t>(rows_) * cols_; }
    bool inside(int r, int c) const { return r >= 0 && r < rows_ && c >= 0 && c < cols_; }
    std::size_t id(int r, int c) const;

    PauliString op(const std::vector<std::tuple<int, int, char>> &terms) const;
    PauliString face(int r, int c) const;
    PauliString column_y(int c, int r0, int r1) const;
    std::vector<std::size_t> row_path(int r) const;
    std::vector<std::size_t> col_path(int c) const;
    // Qubits of the box [r0, r1] x [c0, c1], clipped to the grid.
    std::vector<std::size_t> box(int r0, int r1, int c0, int c1) const;
    std::vector<Qubit> qubits() const;

  private:
    int rows_, cols_;
    bool cm_;
};

std::size_t logical_count(const std::vector<PauliString> &stabs, std::size_t n);

// Greedily appends weight-2 then weight-3 operators along the given qubit
// paths.  A candidate is kept when it commutes with every stabilizer and
// every protected operator, is independent of the stabilizers, and does not
// make any of `vs` dependent.  Stops once the logical count reaches target_k.
void complete_boundary(std::vector<PauliString> &stabs, const std::vector<PauliString> &vs,
                       const std::vector<PauliString> &protected_ops,
                       const std::vector<std::vector<std::size_t>> &paths, std::size_t n, std::size_t target_k);

// Adds lightest operators commuting with all stabilizers and `keep`, and
// independent of both, until the logical count reaches target_k.  Falls
// back to an arbitrary such operator when none has weight <= w_max.
void gauge_fix(std::vector<PauliString> &stabs, const std::vector<PauliString> &keep, std::size_t n,
               std::size_t target_k, std::size_t w_max);

struct LabelRequest {
    int from = 0, to = 0;
    // Candidate qubit windows for Transfer(from, to) and Transfer(to, from),
    // tried in order.
    std::vector<std::vector<std::size_t>> fwd, bwd;
    // Also register Edge(from, to), reduced within these windows.
    std::vector<std::vector<std::size_t>> edge;
};

struct LabelPlan {
    std::vector<LabelRequest> requests;
    std::size_t w_max = 4;
};

// Registers Transfer(from, to) and Transfer(to, from) for every request, in
// order.  The forward operator is the lightest Pauli in its windows with the
// commutation pattern the Majorana labels demand against the stabilizers and
// everything registered so far; the backward operator is fixed by the
// forward one and both vertices, and reduced within its own windows.
void label_transfers(Encoding &enc, const LabelPlan &plan);

// Lightest element of P times the stabilizer group supported on `window`
// with weight below P's; P itself if none is found.
PauliString coset_minimize(const PauliString &p, const std::vector<PauliString> &stabs,
                           const std::vector<std::size_t> &window, std::size_t w_max);

PauliString letters(PauliString p);

} // namespace fenc::detail
