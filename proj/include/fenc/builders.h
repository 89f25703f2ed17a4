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

#include <stdexcept>
#include <string>

#include "fenc/encoding.h"

namespace fenc {

struct ParameterError : std::invalid_argument {
    using std::invalid_argument::invalid_argument;
};

struct UnsupportedError : std::invalid_argument {
    using std::invalid_argument::invalid_argument;
};

struct BuildError : std::runtime_error {
    using std::runtime_error::runtime_error;
};

enum class Layout { Local, Snake };

struct BuildOptions {
    // Register transfer operators (needs the labelling search).
    bool label = true;
    // Run algebra, count and distance-floor certification before returning.
    bool certify = true;
};

struct BuildRequest {
    std::string family; // jwt, le1d, le2d, snake, vc, hx, dk, pe
    int d = 1;
    int modes = 0;      // 1D families
    int rows = 0;       // 2D families
    int cols = 0;
    bool simplified = false;
    bool spinful = false;
    BuildOptions options;
};

Encoding build(const BuildRequest &req);

Encoding build_jwt(int m, BuildOptions opt = {});
Encoding build_le1d(int d, int m, bool simplified = false, BuildOptions opt = {});
Encoding build_le2d(int d, int rows, int cols, Layout layout = Layout::Local, BuildOptions opt = {});
Encoding build_vc(int d, int rows, int cols, BuildOptions opt = {});
Encoding build_hx(int d, int rows, int cols, BuildOptions opt = {});
Encoding build_dk(int d, int rows, int cols, BuildOptions opt = {});
Encoding build_pe(int d, int rows, int cols, BuildOptions opt = {});
Encoding stack_spinful(const Encoding &enc, BuildOptions opt = {});

// Qubit count of a family's layout on a grid (rows = 1, cols = modes for 1D
// families), without constructing stabilizers or logicals.
std::size_t layout_qubits(const std::string &family, int d, int rows, int cols);

// Modes per lattice site (2 for natively spinful families).
int modes_per_site(const std::string &family);

// Throws BuildError unless algebra, counts and the distance floor all pass.
void certify(const Encoding &enc);

} // namespace fenc
