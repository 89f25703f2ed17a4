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

#include "fenc/verifier.h"

#include <algorithm>
#include <chrono>
#include <cmath>
#include <iomanip>
#include <map>
#include <set>
#include <sstream>

#include "fenc/builders.h"
#include "fenc/search.h"

namespace fenc {

std::string AlgebraReport::str() const {
    if (violations.empty()) return "ok";
    std::ostringstream os;
    for (std::size_t k = 0; k < violations.size(); ++k) {
        const auto &v = violations[k];
        if (k) os << "; ";
        os << v.a << " vs " << v.b << ": expected " << (v.expected_commute ? "commute" : "anticommute");
    }
    return os.str();
}

AlgebraReport check_algebra(const Encoding &enc) {
    AlgebraReport rep;
    auto push = [&](std::string a, std::string b, bool expected, bool actual) {
        if (expected != actual) rep.violations.push_back({std::move(a), std::move(b), expected, actual});
    };
    const auto &S = enc.stabilizers;
    for (std::size_t a = 0; a < S.size(); ++a)
        for (std::size_t b = a + 1; b < S.size(); ++b)
            push("S" + std::to_string(a), "S" + std::to_string(b), true, commutes(S[a], S[b]));
    std::vector<const LogicalOperator *> ops;
    for (const auto &[key, op] : enc.logicals) ops.push_back(&op);
    for (const auto *op : ops)
        for (std::size_t s = 0; s < S.size(); ++s) push(op->key(), "S" + std::to_string(s), true, commutes(op->pauli, S[s]));
    for (std::size_t a = 0; a < ops.size(); ++a) {
        auto la = ops[a]->majoranas();
        for (std::size_t b = a + 1; b < ops.size(); ++b) {
            auto lb = ops[b]->majoranas();
            int shared = 0;
            for (auto &x : la)
                for (auto &y : lb)
                    if (x == y) ++shared;
            push(ops[a]->key(), ops[b]->key(), shared != 1, commutes(ops[a]->pauli, ops[b]->pauli));
        }
    }
    return rep;
}

bool check_counts(const Encoding &enc) {
    return enc.num_qubits() - rank_gf2(enc.stabilizers, enc.num_qubits()) == enc.num_modes();
}

namespace {

std::vector<std::size_t> all_qubits(std::size_t n) {
    std::vector<std::size_t> w(n);
    for (std::size_t q = 0; q < n; ++q) w[q] = q;
    return w;
}

bool use_mitm(const PauliSearch &s, std::size_t w, double threshold) {
    return w >= 2 && s.candidates(w) > threshold;
}

} // namespace

double distance_work(const Encoding &enc, std::size_t w_max, double mitm_threshold) {
    PauliSearch s(enc.num_qubits(), enc.stabilizers, all_qubits(enc.num_qubits()));
    double total = 0.0;
    for (std::size_t w = 1; w <= w_max && w <= enc.num_qubits(); ++w)
        total += use_mitm(s, w, mitm_threshold) ? s.mitm_work(w) : s.dfs_work(w);
    return total;
}

bool valid_witness(const Encoding &enc, const PauliString &p) {
    if (p.size() != enc.num_qubits() || p.is_identity()) return false;
    for (const auto &s : enc.stabilizers)
        if (!commutes(p, s)) return false;
    return !in_stabilizer_group(p, enc.stabilizers);
}

DistanceReport compute_distance(const Encoding &enc, const DistanceOptions &opt) {
    if (opt.w_max < 1) throw std::invalid_argument("w_max must be at least 1");
    auto t0 = std::chrono::steady_clock::now();
    const std::size_t n = enc.num_qubits();
    double work = distance_work(enc, opt.w_max, opt.mitm_threshold);
    if (work > opt.budget) {
        std::ostringstream os;
        os << "distance search to weight " << opt.w_max << " needs about " << std::setprecision(3) << work
           << " work units, over the budget of " << opt.budget;
        throw BudgetError(os.str(), work);
    }
    PauliSearch search(n, enc.stabilizers, all_qubits(n));
    Gf2Span group(2 * n);
    for (const auto &s : enc.stabilizers) group.add(s);
    std::vector<Word> zero(search.syndrome_words(), 0);
    auto accept = [&](const PauliString &p) { return !group.contains(p); };

    DistanceReport rep;
    std::set<std::string> methods;
    std::size_t w = 1;
    for (; w <= opt.w_max && w <= n; ++w) {
        std::optional<PauliString> hit;
        if (use_mitm(search, w, opt.mitm_threshold)) {
            methods.insert("meet-in-the-middle");
            hit = search.find_mitm(w, zero, accept);
        } else {
            methods.insert("exhaustive");
            hit = search.find(w, zero, accept, opt.threads);
        }
        if (hit) {
            hit->set_phase(0);
            rep.witness = *hit;
            break;
        }
    }
    rep.certified_floor = rep.witness ? w : opt.w_max + 1;
    for (const auto &m : methods) rep.method += (rep.method.empty() ? "" : "+") + m;
    if (rep.method.empty()) rep.method = "exhaustive";
    rep.seconds = std::chrono::duration<double>(std::chrono::steady_clock::now() - t0).count();
    return rep;
}

DistanceReport compute_distance(const Encoding &enc, std::size_t w_max) {
    DistanceOptions o;
    o.w_max = w_max;
    return compute_distance(enc, o);
}

// ---------------------------------------------------------------------------
// Weights

PauliString minimize_weight(const PauliString &p, const std::vector<PauliString> &stabs, int effort) {
    PauliString best = p;
    best.set_phase(0);
    if (effort <= 0) return best;
    auto supp = p.support();
    std::set<std::size_t> sp(supp.begin(), supp.end());
    std::vector<const PauliString *> near;
    for (const auto &s : stabs) {
        auto ss = s.support();
        if (std::any_of(ss.begin(), ss.end(), [&](std::size_t q) { return sp.count(q) > 0; })) near.push_back(&s);
    }
    std::vector<std::size_t> pick;
    std::function<void(std::size_t, const PauliString &)> rec = [&](std::size_t start, const PauliString &cur) {
        if (cur.weight() < best.weight()) {
            best = cur;
            best.set_phase(0);
        }
        if (pick.size() == static_cast<std::size_t>(effort)) return;
        for (std::size_t k = start; k < near.size(); ++k) {
            pick.push_back(k);
            rec(k + 1, cur * *near[k]);
            pick.pop_back();
        }
    };
    rec(0, p);
    return best;
}

namespace {

std::string geometry_category(const Encoding &enc, int i, int j, const std::string &base) {
    const ModeId &a = enc.modes[i], &b = enc.modes[j];
    if (a.row == b.row && a.col == b.col) return base + "^S";
    if (a.row == b.row) return base + "^H";
    if (a.col == b.col) return base + "^V";
    return base + "^D";
}

std::size_t union_weight(const PauliString &a, const PauliString &b) {
    std::size_t w = 0;
    for (std::size_t q = 0; q < a.size(); ++q)
        if (a.get(q) != 'I' || b.get(q) != 'I') ++w;
    return w;
}

} // namespace

const CategorySummary *WeightTable::find(const std::string &cat) const {
    for (const auto &s : summary)
        if (s.category == cat) return &s;
    return nullptr;
}

std::string WeightTable::text() const {
    std::ostringstream os;
    std::size_t wop = 8;
    for (const auto &r : rows) wop = std::max(wop, r.op.size());
    os << std::left << std::setw(static_cast<int>(wop) + 2) << "operator" << std::setw(10) << "category"
       << std::setw(13) << "constructed" << "minimized\n";
    for (const auto &r : rows) {
        os << std::left << std::setw(static_cast<int>(wop) + 2) << r.op << std::setw(10) << r.category
           << std::setw(13) << r.constructed << (r.minimized ? std::to_string(*r.minimized) : "-") << "\n";
    }
    os << "\nsummary (category: min..max over count)\n";
    for (const auto &s : summary) {
        os << "  " << std::left << std::setw(10) << s.category << s.min << ".." << s.max << " over " << s.count;
        if (s.min_minimized) os << ", minimized min " << *s.min_minimized;
        os << "\n";
    }
    os << "qubits per mode: " << total_ratio << "\n";
    return os.str();
}

std::string WeightTable::csv() const {
    std::ostringstream os;
    os << "family,d,operator,category,constructed_weight,minimized_weight\n";
    for (const auto &r : rows)
        os << family << "," << d << "," << r.op << "," << r.category << "," << r.constructed << ","
           << (r.minimized ? std::to_string(*r.minimized) : "") << "\n";
    return os.str();
}

WeightTable weight_report(const Encoding &enc, int minimize_effort) {
    WeightTable t;
    t.family = enc.family;
    t.d = enc.d;
    auto add = [&](std::string op, std::string cat, const PauliString &p) {
        WeightRow r{std::move(op), std::move(cat), p.weight(), std::nullopt};
        if (minimize_effort > 0) r.minimized = minimize_weight(p, enc.stabilizers, minimize_effort).weight();
        t.rows.push_back(std::move(r));
    };
    for (std::size_t i = 0; i < enc.num_modes(); ++i) {
        const auto *v = enc.find("V:" + std::to_string(i));
        if (!v) continue;
        add(v->key(), "V", v->pauli);
        add("n:" + std::to_string(i), "n", v->pauli);
    }
    // Bonds: every pair carrying an edge or a transfer.
    std::set<std::pair<int, int>> bonds;
    for (const auto &[key, op] : enc.logicals)
        if (op.kind != LogicalKind::Vertex) bonds.insert({std::min(op.i, op.j), std::max(op.i, op.j)});
    for (const auto &[key, op] : enc.logicals) {
        if (op.kind == LogicalKind::Edge) add(key, geometry_category(enc, op.i, op.j, "E"), op.pauli);
        if (op.kind == LogicalKind::Transfer) add(key, geometry_category(enc, op.i, op.j, "T"), op.pauli);
    }
    for (auto [i, j] : bonds) {
        std::string tag = std::to_string(i) + ">" + std::to_string(j);
        const auto *tf = enc.find("T:" + std::to_string(i) + ">" + std::to_string(j));
        const auto *tb = enc.find("T:" + std::to_string(j) + ">" + std::to_string(i));
        const auto *vi = enc.find("V:" + std::to_string(i));
        const auto *vj = enc.find("V:" + std::to_string(j));
        if (!vi || !vj) continue;
        if (tf && tb && !enc.find("E:" + tag)) {
            std::string cat = geometry_category(enc, i, j, "E");
            add("Ea:" + tag, cat, vi->pauli * tf->pauli);
            add("Eb:" + tag, cat, vj->pauli * tb->pauli);
        }
        const ModeId &a = enc.modes[i], &b = enc.modes[j];
        bool same_site = a.row == b.row && a.col == b.col;
        add("nn:" + tag, same_site ? "nn_site" : "nn", vi->pauli * vj->pauli);
        if (tf && tb) {
            WeightRow r{"hop:" + tag, "hop", union_weight(tf->pauli, tb->pauli), std::nullopt};
            t.rows.push_back(r);
        }
    }
    // Same-site pairs without a registered bond (stacked encodings).
    if (enc.spinful())
        for (std::size_t i = 0; i < enc.num_modes(); ++i)
            for (std::size_t j = i + 1; j < enc.num_modes(); ++j) {
                const ModeId &a = enc.modes[i], &b = enc.modes[j];
                if (a.row != b.row || a.col != b.col) continue;
                if (bonds.count({static_cast<int>(i), static_cast<int>(j)})) continue;
                const auto *vi = enc.find("V:" + std::to_string(i));
                const auto *vj = enc.find("V:" + std::to_string(j));
                if (vi && vj)
                    add("nn:" + std::to_string(i) + ">" + std::to_string(j), "nn_site", vi->pauli * vj->pauli);
            }
    std::map<std::string, CategorySummary> cats;
    std::vector<std::string> order;
    for (const auto &r : t.rows) {
        auto it = cats.find(r.category);
        if (it == cats.end()) {
            order.push_back(r.category);
            it = cats.emplace(r.category, CategorySummary{r.category, r.constructed, r.constructed, 0, {}}).first;
        }
        auto &s = it->second;
        s.min = std::min(s.min, r.constructed);
        s.max = std::max(s.max, r.constructed);
        ++s.count;
        if (r.minimized) s.min_minimized = s.min_minimized ? std::min(*s.min_minimized, *r.minimized) : *r.minimized;
    }
    for (const auto &c : order) t.summary.push_back(cats[c]);
    t.total_ratio = enc.num_modes() ? static_cast<double>(enc.num_qubits()) / enc.num_modes() : 0.0;
    return t;
}

// ---------------------------------------------------------------------------
// Ratios

namespace {

std::string canonical_family(const std::string &f) {
    if (f == "snake_le") return "snake";
    return f;
}

bool constructible(const std::string &f, int d) {
    if (f == "jwt") return d == 1;
    if (f == "le1d" || f == "snake") return d >= 2;
    if (f == "le2d") return d == 2 || d == 3;
    if (f == "vc") return d >= 1 && d <= 3;
    if (f == "hx") return d == 2;
    if (f == "dk") return d == 1;
    if (f == "pe") return d == 3;
    return false;
}

} // namespace

std::optional<double> reference_ratio(const std::string &family, int d) {
    std::string f = canonical_family(family);
    static const std::map<std::string, std::map<int, double>> table{
        {"le2d", {{2, 4}, {3, 6}, {4, 12}, {5, 23}, {6, 38}}},
        {"vc", {{1, 2}, {2, 4}, {3, 6}, {4, 12}, {5, 23}, {6, 38}}},
        {"hx", {{2, 2}, {3, 4}, {4, 9}, {5, 15}, {6, 28}}},
        {"dk", {{1, 1.5}, {2, 4}, {3, 7.5}, {4, 16}, {5, 29.5}, {6, 36}}},
        {"pe", {{3, 3.5}}},
    };
    auto it = table.find(f);
    if (it != table.end()) {
        auto jt = it->second.find(d);
        if (jt != it->second.end()) return jt->second;
    }
    return ratio_formula(f, d);
}

std::optional<double> ratio_formula(const std::string &family, int d) {
    std::string f = canonical_family(family);
    const double x = d;
    if ((f == "le2d" || f == "vc") && d >= 7) return 2 * x * x - 7 * x + 8;
    if (f == "hx" && d >= 7) return 2 * x * x - 9 * x + 10;
    if (f == "dk" && d >= 7) return 2 * x * x - 5 * x + 4.5;
    if (f == "pe" && d >= 5 && d % 2 == 1) return x * x / 2 + 2 * x - 6;
    return std::nullopt;
}

double bulk_ratio(const std::string &family, int d) {
    std::string f = canonical_family(family);
    if (!constructible(f, d)) throw UnsupportedError("no construction for " + family + " at d=" + std::to_string(d));
    if (f == "jwt") return 1.0;
    if (f == "le1d" || f == "snake") {
        // Qubits added per additional mode along the chain.
        double a = static_cast<double>(layout_qubits("le1d", d, 1, 8));
        double b = static_cast<double>(layout_qubits("le1d", d, 1, 9));
        return b - a;
    }
    // Mixed second difference over a 2x2 step removes boundary contributions.
    auto n = [&](int r, int c) { return static_cast<double>(layout_qubits(f, d, r, c)); };
    const int R = 4, C = 4;
    double cells = n(R + 2, C + 2) - n(R + 2, C) - n(R, C + 2) + n(R, C);
    return cells / (4.0 * modes_per_site(f));
}

std::vector<RatioRow> ratio_report(const std::string &family, int d_lo, int d_hi) {
    if (d_lo > d_hi) throw std::invalid_argument("empty distance range");
    std::string f = canonical_family(family);
    static const std::set<std::string> known{"jwt", "le1d", "le2d", "snake", "vc", "hx", "dk", "pe"};
    if (!known.count(f)) throw ParameterError("unknown family '" + family + "'");
    std::vector<RatioRow> rows;
    for (int d = d_lo; d <= d_hi; ++d) {
        RatioRow r;
        r.family = f;
        r.d = d;
        if (constructible(f, d)) {
            r.bulk = bulk_ratio(f, d);
            int rr = (f == "le1d" || f == "jwt") ? 1 : 2, cc = (f == "le1d" || f == "jwt") ? 4 : 2;
            double modes = static_cast<double>(rr * cc * modes_per_site(f));
            r.total = static_cast<double>(layout_qubits(f, d, rr, cc)) / modes;
        }
        if (f != "le1d" && f != "jwt" && f != "snake") r.reference = reference_ratio(f, d);
        r.formula = ratio_formula(f, d);
        if (!r.bulk && !r.reference && !r.formula)
            throw UnsupportedError("no construction or reference ratio for " + family + " at d=" + std::to_string(d));
        rows.push_back(r);
    }
    return rows;
}

namespace {

std::string fmt(const std::optional<double> &v) {
    if (!v) return "";
    std::ostringstream os;
    os << *v;
    return os.str();
}

} // namespace

std::string ratio_csv(const std::vector<RatioRow> &rows) {
    std::ostringstream os;
    os << "d,bulk,total,reference,formula\n";
    for (const auto &r : rows)
        os << r.d << "," << fmt(r.bulk) << "," << fmt(r.total) << "," << fmt(r.reference) << "," << fmt(r.formula) << "\n";
    return os.str();
}

std::string ratio_text(const std::vector<RatioRow> &rows) {
    std::ostringstream os;
    os << std::left << std::setw(8) << "family" << std::setw(4) << "d" << std::setw(8) << "bulk" << std::setw(8)
       << "total" << std::setw(8) << "ref" << "formula\n";
    for (const auto &r : rows) {
        auto cell = [](const std::optional<double> &v) { return v ? fmt(v) : std::string("-"); };
        os << std::left << std::setw(8) << r.family << std::setw(4) << r.d << std::setw(8) << cell(r.bulk)
           << std::setw(8) << cell(r.total) << std::setw(8) << cell(r.reference) << cell(r.formula) << "\n";
    }
    return os.str();
}

} // namespace fenc
