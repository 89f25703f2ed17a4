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

// Error analysis for logical rotations exp(i phi P) compiled as a Clifford
// ladder around one two-qubit rotation.

#pragma once

#include <stdexcept>
#include <string>
#include <vector>

#include "fenc/encoding.h"
#include "fenc/pauli.h"

namespace fenc {

struct QemError : std::runtime_error {
    using std::runtime_error::runtime_error;
};

enum class GateAngle { PlusQuarter, MinusQuarter, Central };

// exp(i theta G) with theta = +pi/4, -pi/4 or the rotation angle.
struct Gate {
    PauliString generator;
    GateAngle angle = GateAngle::Central;
};

struct Decomposition {
    PauliString target;
    double phi = 0.0;
    // Time order; gates within a layer act on disjoint qubits.
    std::vector<std::vector<Gate>> layers;

    // Index of the layer holding the single central gate.
    std::size_t central() const;
    const Gate &central_gate() const { return layers.at(central()).front(); }
    std::size_t num_gates() const;
    // Sorted qubits touched by any gate.
    std::vector<std::size_t> support() const;
};

// Two ladders on the sorted support q_0 < ... < q_{w-1} meeting at the
// central pair (q_{h-1}, q_h), h = ceil(w / 2).  A left rung on (q_k,
// q_{k+1}) carries P_k's letter on q_k and the next letter (X->Y->Z->X) of
// P_k on q_{k+1}, with P_{k+1} = i P_k G_k; right rungs mirror this from
// q_{w-1} inwards.  Layers: rungs at -pi/4 moving inwards, the central
// rotation, then the rungs at +pi/4 in reverse.
Decomposition xyz_decompose(const PauliString &p, double phi);

// Conjugating the target through the leading Clifford layers gives the
// central generator.
bool conjugation_consistent(const Decomposition &dec);

struct ErrorEvent {
    // Boundary b sits after layer b-1 and before layer b; 0..layers.size().
    std::size_t boundary = 0;
    PauliString error;
};

// Final errors after transporting the event to the end of the circuit; two
// branches when the error anticommutes with the central generator.
std::vector<PauliString> propagate(const Decomposition &dec, const ErrorEvent &ev);

enum class ErrorClass { Trivial, Detectable, NonDetectable };
const char *class_name(ErrorClass c);
ErrorClass classify(const std::vector<PauliString> &stabilizers, const PauliString &p);

struct ClassCounts {
    std::size_t trivial = 0, detectable = 0, nd = 0;
    std::size_t total() const { return trivial + detectable + nd; }
    ClassCounts &operator+=(const ClassCounts &o);
};

struct NdWitness {
    ErrorEvent event;
    PauliString final;
};

struct QemReport {
    std::size_t events = 0;
    // Outcome counts (one per branch) for injected weight 1 and 2.
    ClassCounts weight1, weight2;
    std::vector<NdWitness> witnesses;

    ClassCounts total() const;
};

QemReport classify_errors(const Decomposition &dec, const Encoding &enc, unsigned threads = 1);

struct ScanRow {
    int d = 0;
    std::size_t events = 0;
    ClassCounts counts;
    std::size_t nd_single = 0;
};

struct ScanResult {
    std::vector<ScanRow> rows;
    bool nd_monotone = true;
    // ND(d) < ND(d+1) wherever d < 4.
    bool nd_strict_below4 = true;
    bool detectable_strict = true;
    bool single_qubit_zero = true;

    bool ok() const { return nd_monotone && nd_strict_below4 && detectable_strict && single_qubit_zero; }
    // Header "d,total_events,trivial,detectable,nd".
    std::string csv() const;
    std::string verdict() const;
};

// Scans vertex ("V") or transfer ("T") rotations of le1d(d, 4).
ScanResult nd_scan(const std::string &family, const std::vector<int> &ds, const std::string &kind = "V",
                   unsigned threads = 1);

struct InjectionResult {
    int d = 0;
    std::size_t checked = 0, preserved = 0;
    std::vector<std::string> failures;
    bool ok() const { return checked > 0 && checked == preserved; }
};

// Maps every ND-producing two-qubit event at distance d to distance d + 1,
// keeping its layer offset from the central gate and its support position
// relative to the central pair, and checks that it is still ND.
InjectionResult injection_check(int d, const std::string &kind = "V");

} // namespace fenc
