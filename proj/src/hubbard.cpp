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

#include "fenc/hubbard.h"

#include <Eigen/Dense>

#include <algorithm>
#include <bit>
#include <cmath>
#include <cstdio>
#include <deque>
#include <optional>
#include <random>
#include <set>
#include <sstream>

namespace fenc {

namespace {

const Complex kI(0.0, 1.0);

Complex i_pow(unsigned k) {
    static const Complex table[4] = {1.0, kI, -1.0, -kI};
    return table[k & 3u];
}

PauliString times_i(PauliString p, unsigned k) {
    p.set_phase(p.phase() + k);
    return p;
}

std::string key(const char *kind, int i, int j) {
    return std::string(kind) + ":" + std::to_string(i) + ">" + std::to_string(j);
}

} // namespace

// ---------------------------------------------------------------------------
// PauliSum

PauliSum PauliSum::identity(std::size_t n, Complex c) {
    PauliSum s(n);
    s.add(c, PauliString(n));
    return s;
}

void PauliSum::add(Complex c, const PauliString &p) {
    if (n_ == 0 && terms_.empty()) n_ = p.size();
    if (p.size() != n_) throw DimensionError("PauliSum term has the wrong qubit count");
    PauliString bare = p;
    bare.set_phase(0);
    terms_[bare] += c * i_pow(p.phase());
}

PauliSum &PauliSum::operator+=(const PauliSum &o) {
    for (const auto &[p, c] : o.terms_) add(c, p);
    if (n_ == 0) n_ = o.n_;
    return *this;
}

PauliSum &PauliSum::operator*=(Complex c) {
    for (auto &[p, v] : terms_) v *= c;
    return *this;
}

PauliSum operator*(const PauliSum &a, const PauliSum &b) {
    PauliSum out(a.n_ ? a.n_ : b.n_);
    for (const auto &[p, c] : a.terms_)
        for (const auto &[q, d] : b.terms_) out.add(c * d, p * q);
    return out;
}

void PauliSum::prune(double tol) {
    for (auto it = terms_.begin(); it != terms_.end();) {
        if (std::abs(it->second) <= tol)
            it = terms_.erase(it);
        else
            ++it;
    }
}

PauliSum PauliSum::adjoint() const {
    // Phase-free strings are Hermitian, so only coefficients conjugate.
    PauliSum out(n_);
    for (const auto &[p, c] : terms_) out.terms_[p] = std::conj(c);
    return out;
}

bool PauliSum::hermitian(double tol) const {
    return std::all_of(terms_.begin(), terms_.end(), [&](const auto &t) { return std::abs(t.second.imag()) <= tol; });
}

Complex PauliSum::coefficient(const PauliString &p) const {
    PauliString bare = p;
    bare.set_phase(0);
    auto it = terms_.find(bare);
    return it == terms_.end() ? Complex(0.0) : it->second * std::conj(i_pow(p.phase()));
}

std::vector<std::pair<Complex, PauliString>> PauliSum::terms() const {
    std::vector<std::pair<Complex, PauliString>> out;
    for (const auto &[p, c] : terms_) out.emplace_back(c, p);
    return out;
}

std::string PauliSum::str() const {
    std::ostringstream os;
    char buf[96];
    for (const auto &[p, c] : terms_) {
        if (std::abs(c.imag()) <= 1e-12)
            std::snprintf(buf, sizeof buf, "%.12g", c.real() == 0.0 ? 0.0 : c.real());
        else
            std::snprintf(buf, sizeof buf, "(%.12g,%.12g)", c.real(), c.imag());
        std::string text = p.str();
        text.erase(0, text.find_first_not_of("+-i"));
        os << buf << '\t' << text << '\n';
    }
    return os.str();
}

// ---------------------------------------------------------------------------
// Hopping gauge.  For a bond a < b the forward Pauli P_f stands for
// Transfer(a, b) and P_b for Transfer(b, a); with E_ab = eps * (-i V_a P_f)
// and sigma the code-space value of P_f P_b V_b V_a,
//   c_a^dag c_b + h.c. = (eps / 2) (sigma P_b - P_f).
// Signs eps are free on a spanning tree (mode sign flips) and fixed on the
// remaining bonds by the loop identity  prod E = (-i)^L  around each cycle.

namespace {

struct Hop {
    PauliString pf, pb, ehat;
    int eps = 1;
    int sigma = 1;
};

using HopTable = std::map<std::pair<int, int>, Hop>;

std::optional<PauliString> registered(const Encoding &enc, const std::string &k) {
    const LogicalOperator *op = enc.find(k);
    if (!op) return std::nullopt;
    return op->pauli;
}

HopTable hop_table(const Encoding &enc) {
    HopTable table;
    const auto &stabs = enc.stabilizers;
    auto bonds = encoding_bonds(enc);
    for (auto [a, b] : bonds) {
        const PauliString &va = enc.vertex(a), &vb = enc.vertex(b);
        auto tf = registered(enc, key("T", a, b));
        auto tb = registered(enc, key("T", b, a));
        auto e = registered(enc, key("E", a, b));
        Hop h;
        if (tf)
            h.pf = *tf;
        else if (e)
            h.pf = times_i(va * *e, 1);
        else {
            h.pf = *tb * va * vb;
            h.pf.set_phase(0);
        }
        h.ehat = times_i(va * h.pf, 3);
        if (tb) {
            h.pb = *tb;
        } else {
            h.pb = h.pf * va * vb;
            h.pb.set_phase(0);
        }
        auto c = stabilizer_phase(h.pf * h.pb * vb * va, stabs);
        if (!c || (*c & 1u))
            throw CompileError("transfer pair on bond " + std::to_string(a) + "-" + std::to_string(b) +
                               " is not consistent with the vertex operators");
        h.sigma = *c == 0 ? 1 : -1;
        table[{a, b}] = h;
    }

    // Spanning forest by BFS.
    const int m = static_cast<int>(enc.num_modes());
    std::vector<std::vector<int>> adj(m);
    for (auto [a, b] : bonds) {
        adj[a].push_back(b);
        adj[b].push_back(a);
    }
    std::vector<int> parent(m, -2), depth(m, 0);
    std::set<std::pair<int, int>> tree;
    for (int root = 0; root < m; ++root) {
        if (parent[root] != -2) continue;
        parent[root] = -1;
        std::deque<int> queue{root};
        while (!queue.empty()) {
            int u = queue.front();
            queue.pop_front();
            for (int v : adj[u]) {
                if (parent[v] != -2) continue;
                parent[v] = u;
                depth[v] = depth[u] + 1;
                tree.insert({std::min(u, v), std::max(u, v)});
                queue.push_back(v);
            }
        }
    }
    const std::size_t n = enc.num_qubits();
    auto directed = [&](int u, int v) {
        const Hop &h = table.at({std::min(u, v), std::max(u, v)});
        return u < v ? h.ehat : times_i(h.ehat, 2);
    };
    for (auto [a, b] : bonds) {
        if (tree.count({a, b})) continue;
        // Cycle a -> ... -> b along the tree, then b -> a.
        std::vector<int> up{a}, down{b};
        while (up.back() != down.back()) {
            if (depth[up.back()] >= depth[down.back()])
                up.push_back(parent[up.back()]);
            else
                down.push_back(parent[down.back()]);
        }
        std::vector<int> path = up;
        for (auto it = down.rbegin() + 1; it != down.rend(); ++it) path.push_back(*it);
        path.push_back(a);
        PauliString prod(n);
        const unsigned len = static_cast<unsigned>(path.size() - 1);
        for (std::size_t k = 0; k + 1 < path.size(); ++k) prod *= directed(path[k], path[k + 1]);
        auto c = stabilizer_phase(prod, enc.stabilizers);
        if (!c)
            throw CompileError("edge loop through bond " + std::to_string(a) + "-" + std::to_string(b) +
                               " is not a stabilizer");
        // eps * i^c = (-i)^L, tree bonds having eps = +1.
        unsigned e = (3 * len + 4 - *c) & 3u;
        if (e & 1u) throw CompileError("edge loop through bond " + std::to_string(a) + "-" + std::to_string(b) +
                                       " has an imaginary flux");
        table[{a, b}].eps = e == 0 ? 1 : -1;
    }
    return table;
}

void check_mode(const Encoding &enc, int i) {
    if (i < 0 || i >= static_cast<int>(enc.num_modes()))
        throw CompileError("mode " + std::to_string(i) + " is not part of encoding " + enc.name);
}

PauliSum compile_with(const Encoding &enc, const HopTable *table, const HamiltonianTerm &term) {
    const std::size_t n = enc.num_qubits();
    check_mode(enc, term.i);
    check_mode(enc, term.j);
    const double c = term.coefficient;
    PauliSum out(n);
    switch (term.kind) {
    case TermKind::Density:
        out.add(0.5 * c, PauliString(n));
        out.add(-0.5 * c, enc.vertex(term.i));
        break;
    case TermKind::DensityDensity: {
        if (term.i == term.j) throw CompileError("density-density term needs two distinct modes");
        const PauliString &vi = enc.vertex(term.i), &vj = enc.vertex(term.j);
        out.add(0.25 * c, PauliString(n));
        out.add(-0.25 * c, vi);
        out.add(-0.25 * c, vj);
        out.add(0.25 * c, vi * vj);
        break;
    }
    case TermKind::Hopping: {
        if (term.i == term.j) throw CompileError("hopping term needs two distinct modes");
        int a = std::min(term.i, term.j), b = std::max(term.i, term.j);
        auto it = table->find({a, b});
        if (it == table->end()) throw CompileError("missing edge " + key("E", a, b) + " in " + enc.name);
        const Hop &h = it->second;
        double s = -c * h.eps / 2.0;
        out.add(s * h.sigma, h.pb);
        out.add(-s, h.pf);
        break;
    }
    }
    out.prune();
    return out;
}

} // namespace

std::vector<std::pair<int, int>> encoding_bonds(const Encoding &enc) {
    std::set<std::pair<int, int>> out;
    for (const auto &[k, op] : enc.logicals)
        if (op.kind != LogicalKind::Vertex) out.insert({std::min(op.i, op.j), std::max(op.i, op.j)});
    return {out.begin(), out.end()};
}

PauliSum compile_term(const Encoding &enc, const HamiltonianTerm &term) {
    if (term.kind != TermKind::Hopping) return compile_with(enc, nullptr, term);
    HopTable table = hop_table(enc);
    return compile_with(enc, &table, term);
}

PauliSum compile_hamiltonian(const Encoding &enc, const std::vector<HamiltonianTerm> &terms) {
    PauliSum h(enc.num_qubits());
    bool hops = std::any_of(terms.begin(), terms.end(), [](auto &t) { return t.kind == TermKind::Hopping; });
    HopTable table;
    if (hops) table = hop_table(enc);
    for (const auto &t : terms) h += compile_with(enc, &table, t);
    h.prune();
    if (!h.hermitian(1e-9)) throw CompileError("compiled Hamiltonian is not Hermitian");
    return h;
}

std::vector<HamiltonianTerm> fhm_terms(const Encoding &enc, double t, double u) {
    std::vector<HamiltonianTerm> out;
    if (t != 0.0)
        for (auto [a, b] : encoding_bonds(enc)) {
            const ModeId &ma = enc.modes[a], &mb = enc.modes[b];
            if (ma.spin == mb.spin && (ma.row != mb.row || ma.col != mb.col))
                out.push_back(HamiltonianTerm::hopping(a, b, t));
        }
    if (u != 0.0 && enc.spinful())
        for (std::size_t a = 0; a < enc.num_modes(); ++a) {
            const ModeId &ma = enc.modes[a];
            if (ma.spin != Spin::Up) continue;
            int b = enc.mode_index(ModeId{ma.row, ma.col, Spin::Down});
            if (b >= 0) out.push_back(HamiltonianTerm::density_density(static_cast<int>(a), b, u));
        }
    return out;
}

// ---------------------------------------------------------------------------
// Spectra

namespace {

std::vector<double> sorted_eigenvalues(const Eigen::MatrixXcd &h) {
    if (h.rows() == 0) return {};
    Eigen::SelfAdjointEigenSolver<Eigen::MatrixXcd> es(h, Eigen::EigenvaluesOnly);
    std::vector<double> out(es.eigenvalues().data(), es.eigenvalues().data() + es.eigenvalues().size());
    std::sort(out.begin(), out.end());
    return out;
}

// Symplectic Gram-Schmidt over the normalizer: pairs (X_j, Z_j) of
// logical operators with [X_j, Z_k] = 0 unless j == k.
void logical_pairs(const std::vector<PauliString> &stabs, std::size_t n, std::vector<PauliString> &xs,
                   std::vector<PauliString> &zs) {
    std::vector<PauliString> pool = normalizer_basis(stabs, n);
    Gf2Span span(2 * n);
    for (const auto &s : stabs) span.add(s);
    while (!pool.empty()) {
        PauliString a = pool.back();
        pool.pop_back();
        if (span.contains(a)) continue;
        auto it = std::find_if(pool.begin(), pool.end(), [&](const PauliString &q) { return !commutes(a, q); });
        if (it == pool.end()) throw std::logic_error("normalizer element without a symplectic partner");
        PauliString b = *it;
        pool.erase(it);
        for (auto &c : pool) {
            if (!commutes(c, b)) c *= a;
            if (!commutes(c, a)) c *= b;
        }
        a.set_phase(0);
        b.set_phase(0);
        span.add(a);
        span.add(b);
        xs.push_back(a);
        zs.push_back(b);
    }
}

std::vector<double> tableau_spectrum(const Encoding &enc, const PauliSum &h, const SpectrumOptions &opt) {
    const std::size_t n = enc.num_qubits();
    const auto &stabs = enc.stabilizers;
    const std::size_t k = n - rank_gf2(stabs, n);
    if (k > opt.max_logical)
        throw SizeLimitError("code space has " + std::to_string(k) + " logical qubits; limit is " +
                             std::to_string(opt.max_logical));
    std::vector<PauliString> xs, zs;
    logical_pairs(stabs, n, xs, zs);
    if (xs.size() != k) throw std::logic_error("logical basis has the wrong size");
    const std::size_t dim = std::size_t{1} << k;
    Eigen::MatrixXcd m = Eigen::MatrixXcd::Zero(dim, dim);
    for (const auto &[coef, p] : h.terms()) {
        if (!std::all_of(stabs.begin(), stabs.end(), [&](auto &s) { return commutes(p, s); })) continue;
        std::size_t bx = 0, cz = 0;
        PauliString op(n);
        for (std::size_t j = 0; j < k; ++j)
            if (!commutes(p, zs[j])) {
                bx |= std::size_t{1} << j;
                op *= xs[j];
            }
        for (std::size_t j = 0; j < k; ++j)
            if (!commutes(p, xs[j])) {
                cz |= std::size_t{1} << j;
                op *= zs[j];
            }
        auto ph = stabilizer_phase(p * adjoint(op), stabs);
        if (!ph) throw std::logic_error("residual of a logical decomposition is not a stabilizer");
        Complex lambda = coef * i_pow(*ph);
        for (std::size_t s = 0; s < dim; ++s)
            m(s ^ bx, s) += (std::popcount(s & cz) & 1) ? -lambda : lambda;
    }
    return sorted_eigenvalues(m);
}

struct DensePauli {
    std::uint64_t x = 0, z = 0;
    Complex factor;
};

DensePauli dense(const PauliString &p) {
    DensePauli d;
    unsigned ys = 0;
    for (std::size_t q = 0; q < p.size(); ++q) {
        if (p.x(q)) d.x |= std::uint64_t{1} << q;
        if (p.z(q)) d.z |= std::uint64_t{1} << q;
        if (p.x(q) && p.z(q)) ++ys;
    }
    d.factor = i_pow(p.phase() + ys);
    return d;
}

// out += c P in, with P|s> = i^(phase + #Y) (-1)^|s & z| |s ^ x>.
void apply(const DensePauli &p, Complex c, const Eigen::VectorXcd &in, Eigen::VectorXcd &out) {
    const Complex f = c * p.factor;
    for (Eigen::Index s = 0; s < in.size(); ++s) {
        const std::uint64_t u = static_cast<std::uint64_t>(s);
        out[static_cast<Eigen::Index>(u ^ p.x)] += (std::popcount(u & p.z) & 1) ? -f * in[s] : f * in[s];
    }
}

std::vector<double> projected_spectrum(const Encoding &enc, const PauliSum &h, const SpectrumOptions &opt) {
    const std::size_t n = enc.num_qubits();
    if (n > opt.max_dense_qubits)
        throw SizeLimitError("projected spectrum limited to " + std::to_string(opt.max_dense_qubits) +
                             " qubits; encoding has " + std::to_string(n));
    const std::size_t k = n - rank_gf2(enc.stabilizers, n);
    const std::size_t dim = std::size_t{1} << k;
    const Eigen::Index full = Eigen::Index{1} << n;
    std::vector<DensePauli> stabs;
    for (const auto &s : enc.stabilizers) stabs.push_back(dense(s));
    std::mt19937_64 rng(opt.seed);
    std::normal_distribution<double> g;
    std::vector<Eigen::VectorXcd> basis;
    for (std::size_t attempt = 0; basis.size() < dim && attempt < 4 * dim + 16; ++attempt) {
        Eigen::VectorXcd v(full);
        for (Eigen::Index s = 0; s < full; ++s) v[s] = Complex(g(rng), g(rng));
        for (const auto &s : stabs) {
            Eigen::VectorXcd w = Eigen::VectorXcd::Zero(full);
            apply(s, 1.0, v, w);
            v = 0.5 * (v + w);
        }
        for (const auto &b : basis) v -= b.dot(v) * b;
        double norm = v.norm();
        if (norm < 1e-8) continue;
        basis.push_back(v / norm);
    }
    if (basis.size() != dim) throw std::logic_error("projection did not reach the code-space dimension");
    std::vector<std::pair<DensePauli, Complex>> terms;
    for (const auto &[c, p] : h.terms()) terms.emplace_back(dense(p), c);
    Eigen::MatrixXcd m(dim, dim);
    for (std::size_t b = 0; b < dim; ++b) {
        Eigen::VectorXcd hv = Eigen::VectorXcd::Zero(full);
        for (const auto &[p, c] : terms) apply(p, c, basis[b], hv);
        for (std::size_t a = 0; a < dim; ++a) m(a, b) = basis[a].dot(hv);
    }
    return sorted_eigenvalues(m);
}

} // namespace

std::vector<double> codespace_spectrum(const Encoding &enc, const PauliSum &h, const SpectrumOptions &opt) {
    if (!h.empty() && h.num_qubits() != enc.num_qubits())
        throw DimensionError("Hamiltonian and encoding act on different qubit counts");
    if (opt.method == SpectrumOptions::Method::Projected) return projected_spectrum(enc, h, opt);
    return tableau_spectrum(enc, h, opt);
}

std::vector<double> fermionic_oracle_spectrum(const std::vector<HamiltonianTerm> &terms, int m) {
    if (m < 0 || m > 12) throw SizeLimitError("fermionic oracle supports at most 12 modes");
    const std::uint32_t dim = 1u << m;
    Eigen::MatrixXd h = Eigen::MatrixXd::Zero(dim, dim);
    auto occ = [](std::uint32_t s, int i) { return (s >> i) & 1u; };
    // Ordering sign of c_i on |s>: parity of occupied modes below i.
    auto below = [](std::uint32_t s, int i) { return std::popcount(s & ((1u << i) - 1u)) & 1; };
    // c_i^dag c_j |s> as (target, sign), if nonzero.
    auto hop = [&](std::uint32_t s, int i, int j) -> std::optional<std::pair<std::uint32_t, int>> {
        if (!occ(s, j)) return std::nullopt;
        int sign = below(s, j) ? -1 : 1;
        std::uint32_t t = s ^ (1u << j);
        if (occ(t, i)) return std::nullopt;
        if (below(t, i)) sign = -sign;
        return std::make_pair(t | (1u << i), sign);
    };
    for (const auto &term : terms) {
        if (term.i < 0 || term.i >= m || term.j < 0 || term.j >= m)
            throw CompileError("oracle term refers to a mode outside 0.." + std::to_string(m - 1));
        for (std::uint32_t s = 0; s < dim; ++s) {
            switch (term.kind) {
            case TermKind::Density:
                h(s, s) += term.coefficient * occ(s, term.i);
                break;
            case TermKind::DensityDensity:
                h(s, s) += term.coefficient * occ(s, term.i) * occ(s, term.j);
                break;
            case TermKind::Hopping:
                if (auto r = hop(s, term.i, term.j)) h(r->first, s) += -term.coefficient * r->second;
                if (auto r = hop(s, term.j, term.i)) h(r->first, s) += -term.coefficient * r->second;
                break;
            }
        }
    }
    if (dim == 0) return {};
    Eigen::SelfAdjointEigenSolver<Eigen::MatrixXd> es(h, Eigen::EigenvaluesOnly);
    std::vector<double> out(es.eigenvalues().data(), es.eigenvalues().data() + es.eigenvalues().size());
    std::sort(out.begin(), out.end());
    return out;
}

} // namespace fenc
