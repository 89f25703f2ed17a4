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

// Dense-matrix reference implementations used by the tests.  Nothing here
// calls into the library except for reading Pauli text, so the checks stay
// independent of the code under test.

#pragma once

#include <Eigen/Dense>

#include <algorithm>
#include <complex>
#include <filesystem>
#include <stdexcept>
#include <string>
#include <vector>

namespace oracle {

using cd = std::complex<double>;
using Mat = Eigen::MatrixXcd;

inline Mat letter(char c) {
    Mat m(2, 2);
    switch (c) {
    case 'I':
        m << 1, 0, 0, 1;
        break;
    case 'X':
        m << 0, 1, 1, 0;
        break;
    case 'Y':
        m << 0, cd(0, -1), cd(0, 1), 0;
        break;
    case 'Z':
        m << 1, 0, 0, -1;
        break;
    default:
        throw std::invalid_argument("bad letter");
    }
    return m;
}

inline Mat kron(const Mat &a, const Mat &b) {
    Mat out(a.rows() * b.rows(), a.cols() * b.cols());
    for (Eigen::Index i = 0; i < a.rows(); ++i)
        for (Eigen::Index j = 0; j < a.cols(); ++j) out.block(i * b.rows(), j * b.cols(), b.rows(), b.cols()) = a(i, j) * b;
    return out;
}

// Qubit 0 is the leftmost tensor factor.
inline Mat pauli(const std::string &text) {
    std::size_t k = 0;
    cd phase = 1;
    if (text.rfind("+i", 0) == 0) {
        phase = cd(0, 1);
        k = 2;
    } else if (text.rfind("-i", 0) == 0) {
        phase = cd(0, -1);
        k = 2;
    } else if (text.rfind("+", 0) == 0) {
        k = 1;
    } else if (text.rfind("-", 0) == 0) {
        phase = -1;
        k = 1;
    }
    Mat m = Mat::Identity(1, 1);
    for (; k < text.size(); ++k) m = kron(m, letter(text[k]));
    return phase * m;
}

inline bool close(const Mat &a, const Mat &b, double tol = 1e-12) {
    return a.rows() == b.rows() && a.cols() == b.cols() && (a - b).cwiseAbs().maxCoeff() <= tol;
}

// Jordan-Wigner annihilator for mode j of m, built from
//   c_j^dag = 1/2 Y_0 ... Y_{j-1} (X_j + i Z_j),
// the sign for which -i gamma_j gamma_bar_j = Y_j.
inline Mat annihilator(int j, int m) {
    Mat out = Mat::Identity(1, 1);
    for (int k = 0; k < m; ++k) {
        Mat f;
        if (k < j)
            f = letter('Y');
        else if (k == j)
            f = 0.5 * (letter('X') + cd(0, 1) * letter('Z'));
        else
            f = letter('I');
        out = kron(out, f);
    }
    return out.adjoint();
}

inline Mat gamma(int j, int m) {
    Mat c = annihilator(j, m);
    return c.adjoint() + c;
}

inline Mat gamma_bar(int j, int m) {
    Mat c = annihilator(j, m);
    return cd(0, 1) * (c.adjoint() - c);
}

struct Term {
    enum Kind { Density, Hopping, DensityDensity } kind;
    int i, j;
    double c;
};

// Fock-space Hamiltonian with hopping -t (c_i^dag c_j + h.c.).
inline Mat fermion_hamiltonian(const std::vector<Term> &terms, int m) {
    const Eigen::Index dim = Eigen::Index(1) << m;
    Mat h = Mat::Zero(dim, dim);
    std::vector<Mat> c(m);
    for (int j = 0; j < m; ++j) c[j] = annihilator(j, m);
    for (const auto &t : terms) {
        switch (t.kind) {
        case Term::Density:
            h += t.c * c[t.i].adjoint() * c[t.i];
            break;
        case Term::Hopping:
            h += -t.c * (c[t.i].adjoint() * c[t.j] + c[t.j].adjoint() * c[t.i]);
            break;
        case Term::DensityDensity:
            h += t.c * c[t.i].adjoint() * c[t.i] * c[t.j].adjoint() * c[t.j];
            break;
        }
    }
    return h;
}

inline std::vector<double> eigenvalues(const Mat &h) {
    if (h.rows() == 0) return {};
    Eigen::SelfAdjointEigenSolver<Mat> es(h, Eigen::EigenvaluesOnly);
    std::vector<double> v(es.eigenvalues().data(), es.eigenvalues().data() + es.eigenvalues().size());
    std::sort(v.begin(), v.end());
    return v;
}

// Spectrum of H on the joint +1 eigenspace of the stabilizers, by dense
// projection.  Practical up to about 12 qubits.
inline std::vector<double> codespace_spectrum(const std::vector<std::pair<cd, std::string>> &h,
                                              const std::vector<std::string> &stabs, std::size_t n) {
    const Eigen::Index dim = Eigen::Index(1) << n;
    Mat proj = Mat::Identity(dim, dim);
    for (const auto &s : stabs) proj = proj * (0.5 * (Mat::Identity(dim, dim) + pauli(s)));
    Eigen::SelfAdjointEigenSolver<Mat> es(proj);
    std::vector<Eigen::Index> keep;
    for (Eigen::Index k = 0; k < dim; ++k)
        if (es.eigenvalues()(k) > 0.5) keep.push_back(k);
    Mat basis(dim, static_cast<Eigen::Index>(keep.size()));
    for (std::size_t k = 0; k < keep.size(); ++k) basis.col(static_cast<Eigen::Index>(k)) = es.eigenvectors().col(keep[k]);
    Mat hm = Mat::Zero(dim, dim);
    for (const auto &[c, p] : h) hm += c * pauli(p);
    Mat reduced = basis.adjoint() * hm * basis;
    return eigenvalues(0.5 * (reduced + reduced.adjoint()));
}

inline bool same_spectrum(const std::vector<double> &a, const std::vector<double> &b, double tol) {
    if (a.size() != b.size()) return false;
    for (std::size_t k = 0; k < a.size(); ++k)
        if (std::abs(a[k] - b[k]) > tol) return false;
    return true;
}

inline std::vector<std::string> fixtures() {
    std::vector<std::string> out;
    for (const auto &e : std::filesystem::directory_iterator(FENC_FIXTURES)) {
        std::string name = e.path().filename().string();
        if (name.size() > 10 && name.substr(name.size() - 10) == ".fenc.json" && name != "malformed.fenc.json")
            out.push_back(e.path().string());
    }
    std::sort(out.begin(), out.end());
    return out;
}

// Row-reduction over GF(2) on explicit bit rows.
inline std::size_t gf2_rank(std::vector<std::vector<int>> rows) {
    std::size_t rank = 0;
    const std::size_t cols = rows.empty() ? 0 : rows[0].size();
    for (std::size_t c = 0; c < cols && rank < rows.size(); ++c) {
        std::size_t p = rank;
        while (p < rows.size() && !rows[p][c]) ++p;
        if (p == rows.size()) continue;
        std::swap(rows[p], rows[rank]);
        for (std::size_t r = 0; r < rows.size(); ++r)
            if (r != rank && rows[r][c])
                for (std::size_t k = 0; k < cols; ++k) rows[r][k] ^= rows[rank][k];
        ++rank;
    }
    return rank;
}

// Symplectic bits (x | z) read from Pauli text.
inline std::vector<int> bits(const std::string &text) {
    std::size_t k = text.find_first_of("IXYZ");
    std::string letters = text.substr(k);
    std::vector<int> out(2 * letters.size(), 0);
    for (std::size_t q = 0; q < letters.size(); ++q) {
        char c = letters[q];
        out[q] = c == 'X' || c == 'Y';
        out[letters.size() + q] = c == 'Z' || c == 'Y';
    }
    return out;
}

inline bool anticommute_bits(const std::vector<int> &a, const std::vector<int> &b) {
    const std::size_t n = a.size() / 2;
    int s = 0;
    for (std::size_t q = 0; q < n; ++q) s ^= (a[q] & b[n + q]) ^ (a[n + q] & b[q]);
    return s != 0;
}

} // namespace oracle
