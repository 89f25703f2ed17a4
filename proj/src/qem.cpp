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

#include "fenc/qem.h"

#include <algorithm>
#include <set>
#include <sstream>
#include <thread>

#include "fenc/builders.h"

namespace fenc {

namespace {

char next_letter(char c) { return c == 'X' ? 'Y' : c == 'Y' ? 'Z' : 'X'; }

PauliString times_i(PauliString p, unsigned k) {
    p.set_phase(p.phase() + k);
    return p;
}

constexpr char kLetters[3] = {'X', 'Y', 'Z'};

} // namespace

std::size_t Decomposition::central() const {
    for (std::size_t k = 0; k < layers.size(); ++k)
        if (layers[k].size() == 1 && layers[k][0].angle == GateAngle::Central) return k;
    throw QemError("decomposition has no central gate");
}

std::size_t Decomposition::num_gates() const {
    std::size_t n = 0;
    for (const auto &l : layers) n += l.size();
    return n;
}

std::vector<std::size_t> Decomposition::support() const {
    std::set<std::size_t> qs;
    for (const auto &l : layers)
        for (const auto &g : l)
            for (std::size_t q : g.generator.support()) qs.insert(q);
    return {qs.begin(), qs.end()};
}

Decomposition xyz_decompose(const PauliString &p, double phi) {
    auto q = p.support();
    if (q.empty()) throw QemError("cannot decompose the identity");
    Decomposition dec;
    dec.target = p;
    dec.phi = phi;
    const std::size_t n = p.size(), w = q.size();
    const std::size_t h = (w + 1) / 2;
    auto rung = [&](PauliString &cur, std::size_t outer, std::size_t inner) {
        PauliString g(n);
        g.set(outer, cur.get(outer));
        g.set(inner, next_letter(cur.get(inner)));
        cur = times_i(cur * g, 1);
        return g;
    };
    PauliString cur = p;
    std::vector<std::vector<Gate>> leading;
    // Left rungs k = 0 .. h-2, right rungs k = 0 .. w-h-2, paired by k.
    for (std::size_t k = 0; w >= 2 && (k + 1 < h || k + 1 + h < w); ++k) {
        std::vector<Gate> layer;
        if (k + 1 < h) layer.push_back({rung(cur, q[k], q[k + 1]), GateAngle::MinusQuarter});
        if (k + 1 + h < w) layer.push_back({rung(cur, q[w - 1 - k], q[w - 2 - k]), GateAngle::MinusQuarter});
        leading.push_back(layer);
    }
    dec.layers = leading;
    dec.layers.push_back({{cur, GateAngle::Central}});
    for (auto it = leading.rbegin(); it != leading.rend(); ++it) {
        std::vector<Gate> layer = *it;
        for (auto &g : layer) g.angle = GateAngle::PlusQuarter;
        dec.layers.push_back(layer);
    }
    return dec;
}

bool conjugation_consistent(const Decomposition &dec) {
    PauliString cur = dec.target;
    const std::size_t c = dec.central();
    for (std::size_t k = 0; k < c; ++k)
        for (const auto &g : dec.layers[k])
            if (!commutes(cur, g.generator)) cur = times_i(cur * g.generator, 1);
    return cur == dec.central_gate().generator;
}

std::vector<PauliString> propagate(const Decomposition &dec, const ErrorEvent &ev) {
    if (ev.boundary > dec.layers.size()) throw QemError("error boundary outside the circuit");
    std::vector<PauliString> branches{ev.error};
    for (std::size_t k = ev.boundary; k < dec.layers.size(); ++k)
        for (const Gate &g : dec.layers[k]) {
            std::vector<PauliString> next;
            for (const auto &e : branches) {
                if (commutes(e, g.generator)) {
                    next.push_back(e);
                    continue;
                }
                // exp(i t G) E exp(-i t G) = exp(2 i t G) E for anticommuting E.
                PauliString moved = g.generator * e;
                switch (g.angle) {
                case GateAngle::PlusQuarter:
                    next.push_back(times_i(moved, 1));
                    break;
                case GateAngle::MinusQuarter:
                    next.push_back(times_i(moved, 3));
                    break;
                case GateAngle::Central:
                    next.push_back(e);
                    next.push_back(times_i(moved, 1));
                    break;
                }
            }
            branches = std::move(next);
        }
    return branches;
}

const char *class_name(ErrorClass c) {
    switch (c) {
    case ErrorClass::Trivial:
        return "trivial";
    case ErrorClass::Detectable:
        return "detectable";
    case ErrorClass::NonDetectable:
        return "nd";
    }
    return "?";
}

ErrorClass classify(const std::vector<PauliString> &stabilizers, const PauliString &p) {
    for (const auto &s : stabilizers)
        if (!commutes(p, s)) return ErrorClass::Detectable;
    return in_stabilizer_group(p, stabilizers) ? ErrorClass::Trivial : ErrorClass::NonDetectable;
}

ClassCounts &ClassCounts::operator+=(const ClassCounts &o) {
    trivial += o.trivial;
    detectable += o.detectable;
    nd += o.nd;
    return *this;
}

ClassCounts QemReport::total() const {
    ClassCounts c = weight1;
    c += weight2;
    return c;
}

namespace {

void tally(ClassCounts &c, ErrorClass k) {
    if (k == ErrorClass::Trivial)
        ++c.trivial;
    else if (k == ErrorClass::Detectable)
        ++c.detectable;
    else
        ++c.nd;
}

// All weight-1 and weight-2 errors on the given qubits, in a fixed order.
std::vector<PauliString> local_errors(std::size_t n, const std::vector<std::size_t> &qs) {
    std::vector<PauliString> out;
    for (std::size_t q : qs)
        for (char a : kLetters) out.push_back(PauliString::single(n, q, a));
    for (std::size_t x = 0; x < qs.size(); ++x)
        for (std::size_t y = x + 1; y < qs.size(); ++y)
            for (char a : kLetters)
                for (char b : kLetters) {
                    PauliString e(n);
                    e.set(qs[x], a);
                    e.set(qs[y], b);
                    out.push_back(e);
                }
    return out;
}

bool registered_target(const Encoding &enc, const PauliString &p) {
    for (const auto &[k, op] : enc.logicals)
        if (op.pauli.same_letters(p)) return true;
    return false;
}

QemReport classify_range(const Decomposition &dec, const Encoding &enc, const std::vector<PauliString> &errors,
                         std::size_t b0, std::size_t b1) {
    QemReport r;
    for (std::size_t b = b0; b < b1; ++b)
        for (const auto &e : errors) {
            ErrorEvent ev{b, e};
            ++r.events;
            ClassCounts &c = e.weight() == 1 ? r.weight1 : r.weight2;
            for (const auto &f : propagate(dec, ev)) {
                ErrorClass k = classify(enc.stabilizers, f);
                tally(c, k);
                if (k == ErrorClass::NonDetectable) r.witnesses.push_back({ev, f});
            }
        }
    return r;
}

} // namespace

QemReport classify_errors(const Decomposition &dec, const Encoding &enc, unsigned threads) {
    if (dec.target.size() != enc.num_qubits()) throw QemError("decomposition and encoding sizes differ");
    if (!registered_target(enc, dec.target))
        throw QemError("decomposition target is not a registered logical of " + enc.name);
    const auto errors = local_errors(enc.num_qubits(), dec.support());
    const std::size_t boundaries = dec.layers.size() + 1;
    threads = std::max(1u, std::min<unsigned>(threads, static_cast<unsigned>(boundaries)));
    std::vector<QemReport> parts(threads);
    std::vector<std::thread> pool;
    const std::size_t chunk = (boundaries + threads - 1) / threads;
    for (unsigned t = 0; t < threads; ++t) {
        std::size_t b0 = std::min(boundaries, t * chunk), b1 = std::min(boundaries, b0 + chunk);
        if (threads == 1)
            parts[t] = classify_range(dec, enc, errors, b0, b1);
        else
            pool.emplace_back([&, t, b0, b1] { parts[t] = classify_range(dec, enc, errors, b0, b1); });
    }
    for (auto &th : pool) th.join();
    QemReport out;
    for (auto &p : parts) {
        out.events += p.events;
        out.weight1 += p.weight1;
        out.weight2 += p.weight2;
        out.witnesses.insert(out.witnesses.end(), p.witnesses.begin(), p.witnesses.end());
    }
    return out;
}

namespace {

struct ScanInstance {
    Encoding enc;
    Decomposition dec;
};

ScanInstance scan_instance(const std::string &family, int d, const std::string &kind) {
    if (family != "le1d" && family != "le") throw QemError("nd_scan supports the le1d family only");
    if (d < 2) throw QemError("nd_scan needs d >= 2");
    BuildOptions opt;
    opt.certify = false;
    ScanInstance s{build_le1d(d, 4, false, opt), {}};
    std::string key;
    if (kind == "V")
        key = "V:1";
    else if (kind == "T")
        key = "T:1>2";
    else
        throw QemError("operator kind must be V or T");
    const LogicalOperator *op = s.enc.find(key);
    if (!op) throw QemError("encoding has no " + key);
    s.dec = xyz_decompose(op->pauli, 0.3);
    return s;
}

} // namespace

std::string ScanResult::csv() const {
    std::ostringstream os;
    os << "d,total_events,trivial,detectable,nd\n";
    for (const auto &r : rows)
        os << r.d << ',' << r.events << ',' << r.counts.trivial << ',' << r.counts.detectable << ',' << r.counts.nd
           << '\n';
    return os.str();
}

std::string ScanResult::verdict() const {
    std::ostringstream os;
    os << (ok() ? "PASS" : "FAIL") << ": nd monotone=" << (nd_monotone ? "yes" : "no")
       << " strict below 4=" << (nd_strict_below4 ? "yes" : "no")
       << " detectable increasing=" << (detectable_strict ? "yes" : "no")
       << " single-qubit nd zero=" << (single_qubit_zero ? "yes" : "no");
    return os.str();
}

ScanResult nd_scan(const std::string &family, const std::vector<int> &ds, const std::string &kind, unsigned threads) {
    std::vector<int> sorted = ds;
    std::sort(sorted.begin(), sorted.end());
    sorted.erase(std::unique(sorted.begin(), sorted.end()), sorted.end());
    ScanResult out;
    for (int d : sorted) {
        ScanInstance s = scan_instance(family, d, kind);
        QemReport r = classify_errors(s.dec, s.enc, threads);
        ScanRow row;
        row.d = d;
        row.events = r.events;
        row.counts = r.total();
        row.nd_single = r.weight1.nd;
        out.rows.push_back(row);
    }
    for (std::size_t k = 0; k < out.rows.size(); ++k) {
        const auto &r = out.rows[k];
        if (r.nd_single != 0) out.single_qubit_zero = false;
        if (k == 0) continue;
        const auto &p = out.rows[k - 1];
        if (r.counts.nd < p.counts.nd) out.nd_monotone = false;
        if (p.d < 4 && r.counts.nd <= p.counts.nd) out.nd_strict_below4 = false;
        if (r.counts.detectable <= p.counts.detectable) out.detectable_strict = false;
    }
    return out;
}

InjectionResult injection_check(int d, const std::string &kind) {
    InjectionResult res;
    res.d = d;
    ScanInstance lo = scan_instance("le1d", d, kind), hi = scan_instance("le1d", d + 1, kind);
    const auto qlo = lo.dec.support(), qhi = hi.dec.support();
    const std::size_t shift = hi.dec.central() - lo.dec.central();
    const std::size_t pos_shift = (qhi.size() + 1) / 2 - (qlo.size() + 1) / 2;
    QemReport r = classify_errors(lo.dec, lo.enc, 1);
    std::set<std::pair<std::size_t, std::string>> seen;
    for (const auto &w : r.witnesses) {
        if (w.event.error.weight() != 2) continue;
        if (!seen.insert({w.event.boundary, w.event.error.str()}).second) continue;
        PauliString mapped(hi.enc.num_qubits());
        for (std::size_t q : w.event.error.support()) {
            std::size_t pos = static_cast<std::size_t>(std::find(qlo.begin(), qlo.end(), q) - qlo.begin());
            mapped.set(qhi.at(pos + pos_shift), w.event.error.get(q));
        }
        ErrorEvent ev{w.event.boundary + shift, mapped};
        ++res.checked;
        bool nd = false;
        for (const auto &f : propagate(hi.dec, ev))
            if (classify(hi.enc.stabilizers, f) == ErrorClass::NonDetectable) nd = true;
        if (nd)
            ++res.preserved;
        else
            res.failures.push_back("boundary " + std::to_string(w.event.boundary) + " error " + w.event.error.str());
    }
    return res;
}

} // namespace fenc
