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

#include "fenc/search.h"

#include <algorithm>
#include <atomic>
#include <bit>
#include <cmath>
#include <mutex>
#include <thread>
#include <unordered_map>

namespace fenc {

namespace {

constexpr char kTypes[3] = {'X', 'Y', 'Z'};

std::uint64_t mix(std::uint64_t h) {
    h ^= h >> 30;
    h *= 0xbf58476d1ce4e5b9ULL;
    h ^= h >> 27;
    h *= 0x94d049bb133111ebULL;
    h ^= h >> 31;
    return h;
}

std::uint64_t hash_words(const Word *w, std::size_t k) {
    std::uint64_t h = 0x9e3779b97f4a7c15ULL;
    for (std::size_t i = 0; i < k; ++i) h = mix(h ^ w[i]) + i;
    return h;
}

bool words_equal(const Word *a, const Word *b, std::size_t k) {
    for (std::size_t i = 0; i < k; ++i) {
        if (a[i] != b[i]) return false;
    }
    return true;
}

using SingleIndex = std::unordered_map<std::uint64_t, std::vector<std::uint32_t>>;

} // namespace

double binomial(std::size_t n, std::size_t k) {
    if (k > n) return 0.0;
    double r = 1.0;
    for (std::size_t i = 1; i <= k; ++i) r = r * static_cast<double>(n - k + i) / static_cast<double>(i);
    return r;
}

bool PauliSearch::Hit::operator<(const Hit &o) const {
    if (pos != o.pos) return pos < o.pos;
    return type < o.type;
}

PauliSearch::PauliSearch(std::size_t n, const std::vector<PauliString> &checks, std::vector<std::size_t> window)
    : n_(n), sw_(std::max<std::size_t>(1, words_for(checks.size()))), window_(std::move(window)) {
    std::sort(window_.begin(), window_.end());
    single_.assign(window_.size() * 3 * sw_, 0);
    for (std::size_t p = 0; p < window_.size(); ++p) {
        for (unsigned t = 0; t < 3; ++t) {
            PauliString e = PauliString::single(n_, window_[p], kTypes[t]);
            Word *dst = &single_[(p * 3 + t) * sw_];
            for (std::size_t k = 0; k < checks.size(); ++k) {
                if (!commutes(e, checks[k])) dst[k >> 6] |= Word{1} << (k & 63);
            }
        }
    }
}

std::vector<Word> PauliSearch::syndrome_of(const PauliString &p) const {
    // Only valid for Paulis supported inside the window.
    std::vector<Word> s(sw_, 0);
    for (std::size_t k = 0; k < window_.size(); ++k) {
        char c = p.get(window_[k]);
        if (c == 'I') continue;
        unsigned t = c == 'X' ? 0 : (c == 'Y' ? 1 : 2);
        const Word *src = &single_[(k * 3 + t) * sw_];
        for (std::size_t i = 0; i < sw_; ++i) s[i] ^= src[i];
    }
    return s;
}

PauliString PauliSearch::to_pauli(const Hit &h) const {
    PauliString p(n_);
    for (std::size_t k = 0; k < h.pos.size(); ++k) p.set(window_[h.pos[k]], kTypes[h.type[k]]);
    return p;
}

double PauliSearch::candidates(std::size_t w) const {
    return binomial(window_.size(), w) * std::pow(3.0, static_cast<double>(w));
}

double PauliSearch::dfs_work(std::size_t w) const {
    if (w == 0) return 1.0;
    return binomial(window_.size(), w - 1) * std::pow(3.0, static_cast<double>(w - 1)) + 3.0 * window_.size();
}

double PauliSearch::mitm_work(std::size_t w) const {
    std::size_t a = w / 2, b = w - a;
    return candidates(a) + candidates(b);
}

std::optional<PauliString> PauliSearch::find(std::size_t w, const std::vector<Word> &target, const Accept &accept,
                                             unsigned threads) const {
    const std::size_t N = window_.size();
    if (w == 0 || w > N) return std::nullopt;

    SingleIndex index;
    for (std::uint32_t idx = 0; idx < N * 3; ++idx) index[hash_words(&single_[idx * sw_], sw_)].push_back(idx);

    std::mutex mu;
    std::optional<Hit> best;
    std::atomic<std::size_t> best_first{N};

    auto worker = [&](std::size_t first_lo, std::size_t first_hi, std::atomic<std::size_t> *next) {
        std::vector<Word> acc((w + 1) * sw_, 0);
        std::vector<Word> need(sw_);
        Hit cur;
        cur.pos.resize(w);
        cur.type.resize(w);
        std::optional<Hit> local;

        auto prefix_beyond = [&](std::size_t k) {
            // True when cur.pos[0..k] already sorts after the best support.
            if (!local) return false;
            for (std::size_t i = 0; i <= k; ++i) {
                if (cur.pos[i] != local->pos[i]) return cur.pos[i] > local->pos[i];
            }
            return false;
        };

        std::function<void(std::size_t, std::size_t)> dfs = [&](std::size_t k, std::size_t start) {
            const Word *a = &acc[k * sw_];
            if (k == w - 1) {
                for (std::size_t i = 0; i < sw_; ++i) need[i] = a[i] ^ target[i];
                auto it = index.find(hash_words(need.data(), sw_));
                if (it == index.end()) return;
                for (std::uint32_t idx : it->second) {
                    std::size_t p = idx / 3;
                    if (p < start) continue;
                    if (!words_equal(&single_[idx * sw_], need.data(), sw_)) continue;
                    cur.pos[k] = p;
                    cur.type[k] = idx % 3;
                    if (local && !(cur < *local)) continue;
                    if (!accept(to_pauli(cur))) continue;
                    local = cur;
                    return;
                }
                return;
            }
            for (std::size_t p = start; p + (w - k) <= N; ++p) {
                cur.pos[k] = p;
                if (prefix_beyond(k)) return;
                for (unsigned t = 0; t < 3; ++t) {
                    cur.type[k] = t;
                    const Word *s = &single_[(p * 3 + t) * sw_];
                    Word *nx = &acc[(k + 1) * sw_];
                    for (std::size_t i = 0; i < sw_; ++i) nx[i] = a[i] ^ s[i];
                    dfs(k + 1, p + 1);
                }
            }
        };

        if (w == 1) {
            dfs(0, 0);
        } else if (next == nullptr) {
            for (std::size_t f = first_lo; f < first_hi; ++f) {
                cur.pos[0] = f;
                if (prefix_beyond(0)) break;
                for (unsigned t = 0; t < 3; ++t) {
                    cur.type[0] = t;
                    const Word *s = &single_[(f * 3 + t) * sw_];
                    for (std::size_t i = 0; i < sw_; ++i) acc[sw_ + i] = s[i];
                    dfs(1, f + 1);
                }
            }
        } else {
            for (;;) {
                std::size_t f = next->fetch_add(1);
                if (f + w > N || f > best_first.load()) break;
                for (unsigned t = 0; t < 3; ++t) {
                    cur.pos[0] = f;
                    cur.type[0] = t;
                    const Word *s = &single_[(f * 3 + t) * sw_];
                    for (std::size_t i = 0; i < sw_; ++i) acc[sw_ + i] = s[i];
                    dfs(1, f + 1);
                }
                if (local) {
                    std::size_t lf = local->pos[0];
                    std::size_t cur_bf = best_first.load();
                    while (lf < cur_bf && !best_first.compare_exchange_weak(cur_bf, lf)) {
                    }
                    break;
                }
            }
        }
        if (local) {
            std::lock_guard<std::mutex> lock(mu);
            if (!best || *local < *best) best = local;
        }
    };

    if (threads <= 1 || w == 1) {
        worker(0, N, nullptr);
    } else {
        std::atomic<std::size_t> next{0};
        std::vector<std::thread> pool;
        for (unsigned i = 0; i < threads; ++i) pool.emplace_back(worker, 0, N, &next);
        for (auto &t : pool) t.join();
    }
    if (!best) return std::nullopt;
    return to_pauli(*best);
}

void PauliSearch::enumerate(
    std::size_t w,
    const std::function<void(const std::vector<std::size_t> &, const std::vector<unsigned> &, const Word *)> &f) const {
    const std::size_t N = window_.size();
    std::vector<std::size_t> pos(w);
    std::vector<unsigned> type(w);
    std::vector<Word> acc((w + 1) * sw_, 0);
    std::function<void(std::size_t, std::size_t)> rec = [&](std::size_t k, std::size_t start) {
        if (k == w) {
            f(pos, type, &acc[k * sw_]);
            return;
        }
        for (std::size_t p = start; p + (w - k) <= N; ++p) {
            pos[k] = p;
            for (unsigned t = 0; t < 3; ++t) {
                type[k] = t;
                const Word *s = &single_[(p * 3 + t) * sw_];
                for (std::size_t i = 0; i < sw_; ++i) acc[(k + 1) * sw_ + i] = acc[k * sw_ + i] ^ s[i];
                rec(k + 1, p + 1);
            }
        }
    };
    rec(0, 0);
}

std::optional<PauliString> PauliSearch::find_mitm(std::size_t w, const std::vector<Word> &target,
                                                  const Accept &accept) const {
    std::size_t a = w / 2, b = w - a;
    if (a == 0) return find(w, target, accept);

    struct Entry {
        std::uint64_t key;
        std::uint32_t first; // offset into flat position/type storage
    };
    std::vector<Entry> table;
    std::vector<std::uint32_t> flat_pos;
    std::vector<std::uint8_t> flat_type;
    table.reserve(static_cast<std::size_t>(candidates(b)));
    enumerate(b, [&](const std::vector<std::size_t> &pos, const std::vector<unsigned> &type, const Word *syn) {
        table.push_back({hash_words(syn, sw_), static_cast<std::uint32_t>(flat_pos.size() / b)});
        for (std::size_t k = 0; k < b; ++k) {
            flat_pos.push_back(static_cast<std::uint32_t>(pos[k]));
            flat_type.push_back(static_cast<std::uint8_t>(type[k]));
        }
    });
    std::sort(table.begin(), table.end(), [](const Entry &x, const Entry &y) {
        return x.key != y.key ? x.key < y.key : x.first < y.first;
    });

    std::optional<Hit> best;
    std::vector<Word> need(sw_), check(sw_);
    enumerate(a, [&](const std::vector<std::size_t> &pos, const std::vector<unsigned> &type, const Word *syn) {
        for (std::size_t i = 0; i < sw_; ++i) need[i] = syn[i] ^ target[i];
        std::uint64_t key = hash_words(need.data(), sw_);
        auto lo = std::lower_bound(table.begin(), table.end(), key,
                                   [](const Entry &e, std::uint64_t k) { return e.key < k; });
        for (auto it = lo; it != table.end() && it->key == key; ++it) {
            const std::uint32_t *bp = &flat_pos[it->first * b];
            const std::uint8_t *bt = &flat_type[it->first * b];
            bool overlap = false;
            std::fill(check.begin(), check.end(), 0);
            for (std::size_t k = 0; k < b; ++k) {
                if (std::find(pos.begin(), pos.end(), bp[k]) != pos.end()) overlap = true;
                const Word *s = &single_[(bp[k] * 3 + bt[k]) * sw_];
                for (std::size_t i = 0; i < sw_; ++i) check[i] ^= s[i];
            }
            if (overlap || !words_equal(check.data(), need.data(), sw_)) continue;
            std::vector<std::pair<std::size_t, unsigned>> merged;
            for (std::size_t k = 0; k < a; ++k) merged.emplace_back(pos[k], type[k]);
            for (std::size_t k = 0; k < b; ++k) merged.emplace_back(bp[k], bt[k]);
            std::sort(merged.begin(), merged.end());
            Hit h;
            for (auto &[p, t] : merged) {
                h.pos.push_back(p);
                h.type.push_back(t);
            }
            if (best && !(h < *best)) continue;
            if (!accept(to_pauli(h))) continue;
            best = h;
        }
    });
    if (!best) return std::nullopt;
    return to_pauli(*best);
}

std::optional<PauliString> PauliSearch::find_min(std::size_t w_max, const std::vector<Word> &target,
                                                 const Accept &accept) const {
    for (std::size_t w = 1; w <= w_max && w <= window_.size(); ++w) {
        auto r = find(w, target, accept);
        if (r) return r;
    }
    return std::nullopt;
}

} // namespace fenc
