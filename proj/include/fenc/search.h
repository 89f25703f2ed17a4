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

#include <functional>
#include <optional>
#include <vector>

#include "fenc/pauli.h"

namespace fenc {

// Enumerates Paulis supported on a qubit window and matches their syndrome
// (against a list of check operators) to a target.  Candidates are ordered by
// support (lexicographic over qubit indices), then by the per-qubit type
// vector with X < Y < Z.
class PauliSearch {
  public:
    using Accept = std::function<bool(const PauliString &)>;

    PauliSearch(std::size_t n, const std::vector<PauliString> &checks, std::vector<std::size_t> window);

    std::size_t window_size() const { return window_.size(); }
    std::size_t syndrome_words() const { return sw_; }

    std::vector<Word> syndrome_of(const PauliString &p) const;

    // First accepted weight-w Pauli with the target syndrome.  Uses a
    // depth-first walk whose last qubit is resolved by hash lookup.
    std::optional<PauliString> find(std::size_t w, const std::vector<Word> &target, const Accept &accept,
                                    unsigned threads = 1) const;

    // Same contract, computed by joining two half-weight tables on syndrome.
    std::optional<PauliString> find_mitm(std::size_t w, const std::vector<Word> &target, const Accept &accept) const;

    // Lowest-weight match up to w_max, or nullopt.
    std::optional<PauliString> find_min(std::size_t w_max, const std::vector<Word> &target, const Accept &accept) const;

    // Nominal candidate count C(N, w) * 3^w.
    double candidates(std::size_t w) const;
    // Work units of the two strategies at weight w.
    double dfs_work(std::size_t w) const;
    double mitm_work(std::size_t w) const;

  private:
    struct Hit {
        std::vector<std::size_t> pos;
        std::vector<unsigned> type;
        bool operator<(const Hit &o) const;
    };

    PauliString to_pauli(const Hit &h) const;
    void enumerate(std::size_t w, const std::function<void(const std::vector<std::size_t> &,
                                                           const std::vector<unsigned> &, const Word *)> &f) const;

    std::size_t n_, sw_;
    std::vector<std::size_t> window_;
    std::vector<Word> single_; // [(pos * 3 + type) * sw_ + word]
};

double binomial(std::size_t n, std::size_t k);

} // namespace fenc
