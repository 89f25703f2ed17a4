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

#include <optional>
#include <stdexcept>
#include <string>
#include <vector>

#include "fenc/encoding.h"

namespace fenc {

struct BudgetError : std::runtime_error {
    double estimate;
    BudgetError(const std::string &what, double est) : std::runtime_error(what), estimate(est) {}
};

struct Violation {
    std::string a, b;
    bool expected_commute = true;
    bool actual_commute = true;
};

struct AlgebraReport {
    std::vector<Violation> violations;
    bool ok() const { return violations.empty(); }
    std::string str() const;
};

AlgebraReport check_algebra(const Encoding &enc);
bool check_counts(const Encoding &enc);

struct DistanceOptions {
    std::size_t w_max = 1;
    double budget = 2e10;          // work units; refuse beyond this
    double mitm_threshold = 1e8;   // nominal candidates above which halves are joined
    unsigned threads = 1;
    bool stop_at_first = true;     // witness search stops at the first logical weight
};

struct DistanceReport {
    std::size_t certified_floor = 0;
    std::optional<PauliString> witness;
    std::string method;            // "exhaustive" or "meet-in-the-middle" (or both)
    double seconds = 0.0;
};

DistanceReport compute_distance(const Encoding &enc, const DistanceOptions &opt);
DistanceReport compute_distance(const Encoding &enc, std::size_t w_max);

// Estimated work for a full scan to w_max with the same method selection.
double distance_work(const Encoding &enc, std::size_t w_max, double mitm_threshold = 1e8);

// Witness validity: zero syndrome and outside the stabilizer group.
bool valid_witness(const Encoding &enc, const PauliString &p);

struct WeightRow {
    std::string op;        // registry key or composite name
    std::string category;  // V, E, T^H, T^V, T^S, n, nn, nn_site, hop
    std::size_t constructed = 0;
    std::optional<std::size_t> minimized;
};

struct CategorySummary {
    std::string category;
    std::size_t min = 0, max = 0, count = 0;
    std::optional<std::size_t> min_minimized;
};

struct WeightTable {
    std::string family;
    int d = 0;
    std::vector<WeightRow> rows;
    std::vector<CategorySummary> summary;
    double total_ratio = 0.0;

    const CategorySummary *find(const std::string &cat) const;
    std::string text() const;
    std::string csv() const;
};

// Multiply P by stabilizer subsets of size up to effort and return the
// lightest product found.
PauliString minimize_weight(const PauliString &p, const std::vector<PauliString> &stabs, int effort);

WeightTable weight_report(const Encoding &enc, int minimize_effort = 0);

struct RatioRow {
    std::string family;
    int d = 0;
    std::optional<double> bulk;
    std::optional<double> total;
    std::optional<double> reference;
    std::optional<double> formula;
};

// Reference ratios for a family, and their large-d closed forms.
std::optional<double> reference_ratio(const std::string &family, int d);
std::optional<double> ratio_formula(const std::string &family, int d);

double bulk_ratio(const std::string &family, int d);
std::vector<RatioRow> ratio_report(const std::string &family, int d_lo, int d_hi);
std::string ratio_csv(const std::vector<RatioRow> &rows);
std::string ratio_text(const std::vector<RatioRow> &rows);

} // namespace fenc
