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

#include "fenc/builders.h"

#include <algorithm>
#include <map>
#include <set>

#include "fenc/verifier.h"
#include "lattice.h"

namespace fenc {

using detail::face_type;
using detail::Grid;
using detail::letters;

namespace {

std::string key_of(const char *prefix, int i, int j) {
    return std::string(prefix) + ":" + std::to_string(i) + ">" + std::to_string(j);
}

void finish(Encoding &enc, const BuildOptions &opt) {
    validate(enc);
    if (opt.certify) certify(enc);
}

bool all_commute(const std::vector<PauliString> &a, const std::vector<PauliString> &b) {
    for (const auto &p : a)
        for (const auto &q : b)
            if (!commutes(p, q)) return false;
    return true;
}

// Registers the derived transfers of an Edge-registered bond.
void add_transfers_from_edge(Encoding &enc, int i, int j) {
    const PauliString &e = enc.find(key_of("E", i, j))->pauli;
    enc.add(make_transfer(i, j, letters(enc.vertex(i) * e)));
    enc.add(make_transfer(j, i, letters(enc.vertex(j) * e)));
}

// ---------------------------------------------------------------------------
// 1D ladder

struct Strip {
    Grid grid;
    std::vector<PauliString> stabs;
    std::vector<int> defects;
};

Strip le1d_strip(int d, int m, const std::vector<bool> &top_gap, const std::vector<bool> &bot_gap, int pL,
                 int pR) {
    const int H = d, W = m * (d - 1) + 1;
    Strip s{Grid(H, W, true), {}, {}};
    for (int k = 0; k <= m; ++k) s.defects.push_back(k * (d - 1));
    const Grid &g = s.grid;

    for (int r = 0; r < H - 1; ++r)
        for (int c = 0; c < W - 1; ++c) s.stabs.push_back(g.face(r, c));

    auto digon_row = [&](int row, int vr, int e) {
        char t = face_type(vr, e);
        s.stabs.push_back(g.op({{row, e, t}, {row, e + 1, t}}));
    };
    for (int side = 0; side < 2; ++side) {
        const int row = side == 0 ? 0 : H - 1;
        const int vr = side == 0 ? -1 : H - 1;
        const auto &gap = side == 0 ? top_gap : bot_gap;
        std::set<int> forbidden;
        for (int k = 0; k <= m; ++k) {
            int c = s.defects[k];
            if (gap[k]) {
                forbidden.insert({c - 1, c});
                continue;
            }
            forbidden.insert({c - 2, c - 1, c, c + 1});
            std::vector<std::tuple<int, int, char>> t{{row, c, 'Y'}};
            if (c - 1 >= 0) t.emplace_back(row, c - 1, face_type(vr, c - 1));
            if (c + 1 <= W - 1) t.emplace_back(row, c + 1, face_type(vr, c));
            s.stabs.push_back(g.op(t));
        }
        auto run = [&](int a, int b, int p) {
            for (int e = a; e < b; ++e)
                if (!forbidden.count(e) && (e - p) % 2 == 0) digon_row(row, vr, e);
        };
        for (int k = 0; k < m; ++k) {
            int a = s.defects[k];
            run(a, s.defects[k + 1], gap[k] ? a + 1 : a);
        }
        int a = s.defects[m];
        run(a, W - 1, gap[m] ? a + 1 : a);
    }
    for (int side = 0; side < 2; ++side) {
        const int col = side == 0 ? 0 : W - 1;
        const int vc = side == 0 ? -1 : W - 1;
        const int p = side == 0 ? pL : pR;
        for (int r = 0; r < H - 1; ++r)
            if ((r - p) % 2 == 0) {
                char t = face_type(r, vc);
                s.stabs.push_back(g.op({{r, col, t}, {r + 1, col, t}}));
            }
    }
    return s;
}

Encoding strip_encoding(const Strip &s, int d, int m) {
    Encoding enc;
    enc.family = "le1d";
    enc.d = d;
    enc.name = "le1d-d" + std::to_string(d) + "-m" + std::to_string(m);
    enc.qubits = s.grid.qubits();
    if (d == 2)
        for (auto &q : enc.qubits) q.tag = q.y == 0 ? "a" : "b";
    enc.stabilizers = s.stabs;
    for (int i = 0; i < m; ++i) {
        enc.modes.push_back(ModeId{0, i, Spin::None});
        enc.add(make_vertex(i, s.grid.column_y(s.defects[i], 0, d - 1)));
    }
    return enc;
}

bool strip_ok(const Encoding &enc, int m) {
    const std::size_t n = enc.num_qubits();
    if (!all_commute(enc.stabilizers, enc.stabilizers)) return false;
    std::vector<PauliString> vs;
    for (int i = 0; i < m; ++i) vs.push_back(enc.vertex(i));
    if (!all_commute(vs, enc.stabilizers)) return false;
    std::size_t r = rank_gf2(enc.stabilizers, n);
    if (n - r != static_cast<std::size_t>(m)) return false;
    std::vector<PauliString> sv = enc.stabilizers;
    sv.insert(sv.end(), vs.begin(), vs.end());
    if (rank_gf2(sv, n) != r + m) return false;
    if (enc.d <= 1) return true;
    DistanceOptions o;
    o.w_max = static_cast<std::size_t>(enc.d - 1);
    return !compute_distance(enc, o).witness.has_value();
}

void label_strip(Encoding &enc, const Strip &s, int d, int m) {
    detail::LabelPlan plan;
    plan.w_max = static_cast<std::size_t>(d + 1);
    const Grid &g = s.grid;
    for (int i = 0; i + 1 < m; ++i) {
        int a = s.defects[i], b = s.defects[i + 1];
        std::vector<std::vector<std::size_t>> windows{g.box(0, 0, a, b), g.box(d - 1, d - 1, a, b),
                                                      g.box(0, d - 1, a, b), g.box(0, d - 1, a - 1, b + 1)};
        plan.requests.push_back({i, i + 1, windows, windows, {}});
    }
    detail::label_transfers(enc, plan);
}

// ---------------------------------------------------------------------------
// 2D sheets: surface-code patch with Y-string walls split by weight-six
// dominoes.

struct Segment {
    int col, r0, r1;
};

struct Sheet {
    Grid grid;
    std::vector<PauliString> stabs;
    std::vector<Segment> segs;
};

Sheet build_sheet(int H, int W, const std::map<int, std::vector<int>> &walls, const std::vector<int> &spare_cols,
                  std::size_t target_k) {
    Sheet s{Grid(H, W, false), {}, {}};
    const Grid &g = s.grid;
    std::set<std::pair<int, int>> used;
    for (const auto &[c, rows] : walls)
        for (int r : rows) {
            if (used.count({r, c - 1}) || used.count({r, c})) throw BuildError("overlapping dominoes");
            s.stabs.push_back(letters(g.face(r, c - 1) * g.face(r, c)));
            used.insert({r, c - 1});
            used.insert({r, c});
        }
    for (int r = 0; r < H - 1; ++r)
        for (int c = 0; c < W - 1; ++c)
            if (!used.count({r, c})) s.stabs.push_back(g.face(r, c));
    for (const auto &[c, rows] : walls) {
        std::vector<int> cuts{-1};
        cuts.insert(cuts.end(), rows.begin(), rows.end());
        cuts.push_back(H - 1);
        std::sort(cuts.begin(), cuts.end());
        for (std::size_t k = 0; k + 1 < cuts.size(); ++k) s.segs.push_back({c, cuts[k] + 1, cuts[k + 1]});
    }
    std::vector<PauliString> vs, spares;
    for (const auto &seg : s.segs) vs.push_back(g.column_y(seg.col, seg.r0, seg.r1));
    for (int c : spare_cols) spares.push_back(g.column_y(c, 0, H - 1));
    std::vector<std::vector<std::size_t>> paths{g.row_path(0), g.row_path(H - 1), g.col_path(0), g.col_path(W - 1)};
    detail::complete_boundary(s.stabs, vs, spares, paths, g.n(), target_k);
    // A spare column left independent of the walls is a stray logical.
    for (const auto &sp : spares) {
        if (detail::logical_count(s.stabs, g.n()) <= target_k) break;
        std::vector<PauliString> sv = s.stabs;
        sv.insert(sv.end(), vs.begin(), vs.end());
        std::size_t before = rank_gf2(sv, g.n());
        sv.push_back(sp);
        if (rank_gf2(sv, g.n()) > before) s.stabs.push_back(sp);
    }
    std::vector<PauliString> keep = vs;
    keep.insert(keep.end(), spares.begin(), spares.end());
    detail::gauge_fix(s.stabs, keep, g.n(), target_k, 6);
    if (detail::logical_count(s.stabs, g.n()) != target_k) throw BuildError("sheet has the wrong logical count");
    return s;
}

struct SheetBond {
    int a, b;
    bool edge;
};

// Registers vertices for segments (mode index given per segment) and labels
// the bonds.  Each segment carries one Majorana at either end; `parity`
// decides which end holds gamma-bar (0: top).  Every operator is searched
// in a window spanning just the two defects it joins, so bonds listed
// earlier pin the classes of later ones.
void sheet_logicals(Encoding &enc, const Sheet &s, const std::vector<int> &seg_mode, const std::vector<int> &parity,
                    const std::vector<SheetBond> &bonds, std::size_t w_max, bool label) {
    std::vector<const Segment *> of_mode(enc.num_modes(), nullptr);
    for (std::size_t k = 0; k < s.segs.size(); ++k) {
        const auto &seg = s.segs[k];
        enc.add(make_vertex(seg_mode[k], s.grid.column_y(seg.col, seg.r0, seg.r1)));
        of_mode[seg_mode[k]] = &seg;
    }
    if (!label) return;
    const Grid &g = s.grid;
    struct End {
        int r0, r1, col;
    };
    auto end = [&](int mode, bool bar) {
        const Segment &seg = *of_mode[mode];
        bool top = (parity[mode] == 0) == bar;
        return top ? End{seg.r0 - 1, seg.r0, seg.col} : End{seg.r1, seg.r1 + 1, seg.col};
    };
    auto windows = [&](End a, End b) {
        int r0 = std::min(a.r0, b.r0), r1 = std::max(a.r1, b.r1);
        int c0 = std::min(a.col, b.col), c1 = std::max(a.col, b.col);
        return std::vector<std::vector<std::size_t>>{g.box(r0, r1, c0 - 1, c1 + 1), g.box(r0, r1, c0 - 2, c1 + 2),
                                                     g.box(r0 - 1, r1 + 1, c0 - 2, c1 + 2),
                                                     g.box(r0 - 2, r1 + 2, c0 - 3, c1 + 3)};
    };
    detail::LabelPlan plan;
    plan.w_max = w_max;
    for (auto [a, b, edge] : bonds) {
        detail::LabelRequest req{a, b, windows(end(a, true), end(b, false)), windows(end(b, true), end(a, false)), {}};
        if (edge) req.edge = windows(end(a, false), end(b, false));
        plan.requests.push_back(std::move(req));
    }
    detail::label_transfers(enc, plan);
}

std::vector<std::pair<int, int>> grid_bonds(int rows, int cols) {
    std::vector<std::pair<int, int>> out;
    for (int r = 0; r < rows; ++r)
        for (int c = 0; c + 1 < cols; ++c) out.emplace_back(r * cols + c, r * cols + c + 1);
    for (int r = 0; r + 1 < rows; ++r)
        for (int c = 0; c < cols; ++c) out.emplace_back(r * cols + c, (r + 1) * cols + c);
    return out;
}

std::vector<SheetBond> plain_bonds(int rows, int cols) {
    std::vector<SheetBond> out;
    for (auto [a, b] : grid_bonds(rows, cols)) out.push_back({a, b, false});
    return out;
}

// Site checkerboard, repeated for each of `per_site` consecutive modes.
std::vector<int> checkerboard(int rows, int cols, int per_site) {
    std::vector<int> out;
    for (int r = 0; r < rows; ++r)
        for (int c = 0; c < cols; ++c)
            for (int k = 0; k < per_site; ++k) out.push_back((r + c) % 2);
    return out;
}

void check_grid(int rows, int cols) {
    if (rows < 2 || cols < 2) throw ParameterError("grid too small for one bulk cell (need at least 2x2)");
}

void grid_modes(Encoding &enc, int rows, int cols) {
    for (int r = 0; r < rows; ++r)
        for (int c = 0; c < cols; ++c) enc.modes.push_back(ModeId{r, c, Spin::None});
}

Encoding le2d_local(int d, int rows, int cols, const BuildOptions &opt) {
    const int H = rows * d, W = 2 * cols + 2;
    std::map<int, std::vector<int>> walls;
    for (int j = 0; j < cols; ++j)
        for (int k = 1; k < rows; ++k) walls[1 + 2 * j].push_back(k * d - 1);
    Sheet s = build_sheet(H, W, walls, {W - 1}, static_cast<std::size_t>(rows * cols));
    Encoding enc;
    enc.family = "le2d";
    enc.d = d;
    enc.name = "le2d-d" + std::to_string(d) + "-" + std::to_string(rows) + "x" + std::to_string(cols);
    enc.qubits = s.grid.qubits();
    enc.stabilizers = s.stabs;
    grid_modes(enc, rows, cols);
    std::vector<int> seg_mode;
    for (const auto &seg : s.segs) seg_mode.push_back((seg.r0 / d) * cols + (seg.col - 1) / 2);
    sheet_logicals(enc, s, seg_mode, checkerboard(rows, cols, 1), plain_bonds(rows, cols),
                   static_cast<std::size_t>(2 * d + 1), opt.label);
    return enc;
}

Encoding le2d_snake(int d, int rows, int cols, const BuildOptions &opt) {
    const int m = rows * cols;
    BuildOptions inner = opt;
    inner.certify = false;
    Encoding line = build_le1d(d, m, false, inner);
    auto site = [&](int p) {
        int r = p / cols, k = p % cols;
        return r * cols + (r % 2 == 0 ? k : cols - 1 - k);
    };
    Encoding enc;
    enc.family = "snake";
    enc.d = d;
    enc.name = "snake-d" + std::to_string(d) + "-" + std::to_string(rows) + "x" + std::to_string(cols);
    enc.qubits = line.qubits;
    enc.stabilizers = line.stabilizers;
    grid_modes(enc, rows, cols);
    std::vector<int> pos(m);
    for (int p = 0; p < m; ++p) pos[site(p)] = p;
    for (int p = 0; p < m; ++p) enc.add(make_vertex(site(p), line.vertex(p)));
    if (opt.label) {
        for (int p = 0; p + 1 < m; ++p) {
            enc.add(make_transfer(site(p), site(p + 1), line.find(key_of("T", p, p + 1))->pauli));
            enc.add(make_transfer(site(p + 1), site(p), line.find(key_of("T", p + 1, p))->pauli));
        }
        for (auto [a, b] : grid_bonds(rows, cols)) {
            int pa = pos[a], pb = pos[b];
            if (std::abs(pa - pb) == 1) continue;
            int lo = std::min(pa, pb), hi = std::max(pa, pb);
            PauliString q = line.find(key_of("T", lo, lo + 1))->pauli;
            for (int p = lo + 1; p < hi; ++p) {
                q *= line.vertex(p);
                q *= line.find(key_of("T", p, p + 1))->pauli;
            }
            int i = site(lo), j = site(hi);
            PauliString f = letters(q);
            enc.add(make_transfer(i, j, f));
            enc.add(make_transfer(j, i, letters(f * enc.vertex(i) * enc.vertex(j))));
        }
    }
    return enc;
}

// ---------------------------------------------------------------------------
// Majorana strings for auxiliary-qubit constructions: gamma(q) = Z..Z X_q,
// gamma-bar(q) = Z..Z Y_q.

PauliString jw_majorana(std::size_t n, std::size_t q, bool bar) {
    PauliString p(n);
    for (std::size_t k = 0; k < q; ++k) p.set(k, 'Z');
    p.set(q, bar ? 'Y' : 'X');
    return p;
}

// i * a * b for anticommuting Hermitian a, b: Hermitian.
PauliString bilinear(const PauliString &a, const PauliString &b) {
    PauliString p = a * b;
    p.set_phase(p.phase() + 1);
    return p;
}

} // namespace

// ---------------------------------------------------------------------------

Encoding build_jwt(int m, BuildOptions opt) {
    if (m < 1) throw ParameterError("jwt needs at least one mode");
    Encoding enc;
    enc.family = "jwt";
    enc.d = 1;
    enc.name = "jwt-m" + std::to_string(m);
    const std::size_t n = static_cast<std::size_t>(m);
    for (int i = 0; i < m; ++i) {
        enc.qubits.push_back(Qubit{i, i, 0, ""});
        enc.modes.push_back(ModeId{0, i, Spin::None});
        enc.add(make_vertex(i, PauliString::single(n, i, 'Y')));
    }
    for (int i = 0; i + 1 < m; ++i) {
        PauliString e(n);
        e.set(i, 'Z');
        e.set(i + 1, 'X');
        enc.add(make_edge(i, i + 1, e));
    }
    finish(enc, opt);
    return enc;
}

Encoding build_le1d(int d, int m, bool simplified, BuildOptions opt) {
    if (d < 2) throw ParameterError("le1d needs d >= 2");
    if (m < 1) throw ParameterError("le1d needs at least one mode");
    if (simplified && (d % 2 != 0 || d < 4)) throw ParameterError("simplified boundary needs even d >= 4");
    std::vector<std::array<int, 2>> sides;
    std::vector<bool> top(m + 1, true), bot(m + 1, true);
    if (d % 2 == 0) {
        sides = {{0, 0}};
    } else {
        for (int k = 0; k <= m; ++k) {
            top[k] = k % 2 == 0;
            bot[k] = k % 2 != 0;
        }
        sides = {{0, 0}, {0, 1}, {1, 0}, {1, 1}};
    }
    for (auto [pL, pR] : sides) {
        Strip s = le1d_strip(d, m, top, bot, pL, pR);
        Encoding enc = strip_encoding(s, d, m);
        if (!strip_ok(enc, m)) continue;
        if (opt.label) label_strip(enc, s, d, m);
        finish(enc, opt);
        return enc;
    }
    throw BuildError("no consistent boundary for le1d d=" + std::to_string(d) + " m=" + std::to_string(m));
}

Encoding build_le2d(int d, int rows, int cols, Layout layout, BuildOptions opt) {
    check_grid(rows, cols);
    if (d < 2) throw ParameterError("le2d needs d >= 2");
    Encoding enc;
    if (layout == Layout::Snake) {
        enc = le2d_snake(d, rows, cols, opt);
    } else {
        if (d > 3) throw UnsupportedError("le2d local layout supports d in {2, 3}; got d=" + std::to_string(d));
        if (d == 3 && (rows != 2 || cols != 2)) throw UnsupportedError("le2d d=3 is supported on a 2x2 grid only");
        enc = le2d_local(d, rows, cols, opt);
    }
    finish(enc, opt);
    return enc;
}

Encoding build_vc(int d, int rows, int cols, BuildOptions opt) {
    check_grid(rows, cols);
    if (d < 1) throw ParameterError("vc needs d >= 1");
    if (d >= 2) {
        if (d > 3) throw UnsupportedError("vc for d >= 2 is the 2D ladder construction, supported for d in {2, 3}");
        if (d == 3 && (rows != 2 || cols != 2)) throw UnsupportedError("vc d=3 is supported on a 2x2 grid only");
        Encoding enc = le2d_local(d, rows, cols, opt);
        enc.family = "vc";
        enc.name = "vc-d" + std::to_string(d) + "-" + std::to_string(rows) + "x" + std::to_string(cols);
        finish(enc, opt);
        return enc;
    }
    // One system and one auxiliary qubit per site, in serpentine order.
    const int N = rows * cols;
    const std::size_t n = 2 * static_cast<std::size_t>(N);
    std::vector<int> order(N);
    for (int r = 0; r < rows; ++r)
        for (int k = 0; k < cols; ++k) order[r * cols + (r % 2 == 0 ? k : cols - 1 - k)] = r * cols + k;
    Encoding enc;
    enc.family = "vc";
    enc.d = 1;
    enc.name = "vc-d1-" + std::to_string(rows) + "x" + std::to_string(cols);
    enc.qubits.resize(n);
    grid_modes(enc, rows, cols);
    std::vector<std::size_t> sys(N), aux(N);
    for (int i = 0; i < N; ++i) {
        int r = i / cols, c = i % cols;
        sys[i] = 2 * static_cast<std::size_t>(order[i]);
        aux[i] = sys[i] + 1;
        enc.qubits[sys[i]] = Qubit{static_cast<int>(sys[i]), 2 * c, r, "sys"};
        enc.qubits[aux[i]] = Qubit{static_cast<int>(aux[i]), 2 * c + 1, r, "aux"};
    }
    auto g = [&](int i) { return jw_majorana(n, sys[i], false); };
    auto alpha = [&](int i) { return jw_majorana(n, aux[i], false); };
    auto beta = [&](int i) { return jw_majorana(n, aux[i], true); };
    for (int i = 0; i < N; ++i) enc.add(make_vertex(i, PauliString::single(n, sys[i], 'Z')));
    for (int r = 0; r < rows; ++r)
        for (int c = 0; c + 1 < cols; ++c) {
            int i = r * cols + c, j = i + 1;
            enc.add(make_edge(i, j, letters(bilinear(g(i), g(j)))));
        }
    for (int r = 0; r + 1 < rows; ++r)
        for (int c = 0; c < cols; ++c) {
            int i = r * cols + c, j = i + cols;
            PauliString s = bilinear(alpha(i), beta(j));
            enc.stabilizers.push_back(letters(s));
            enc.add(make_edge(i, j, letters(bilinear(g(i), g(j)) * s)));
        }
    // Leftover auxiliary Majoranas: beta on the top row, alpha on the bottom.
    std::vector<PauliString> loose;
    for (int c = 0; c < cols; ++c) loose.push_back(beta(c));
    std::vector<PauliString> bottom;
    for (int c = 0; c < cols; ++c) bottom.push_back(alpha((rows - 1) * cols + c));
    std::vector<PauliString> pool = loose;
    pool.insert(pool.end(), bottom.begin(), bottom.end());
    for (std::size_t k = 0; k + 1 < pool.size(); k += 2) enc.stabilizers.push_back(letters(bilinear(pool[k], pool[k + 1])));
    for (auto [i, j] : grid_bonds(rows, cols)) add_transfers_from_edge(enc, i, j);
    finish(enc, opt);
    return enc;
}

Encoding build_hx(int d, int rows, int cols, BuildOptions opt) {
    check_grid(rows, cols);
    if (d != 2) throw UnsupportedError("hx supports d = 2 only");
    if (rows > 2 && cols > 2) throw UnsupportedError("hx needs a grid with at most two rows or two columns");
    const int H = 2 * rows + 1, W = cols + 2;
    std::map<int, std::vector<int>> walls;
    for (int j = 0; j < cols; ++j) {
        auto &w = walls[j + 1];
        for (int s = 0; s + 1 < rows; ++s) w.push_back(2 * s + 1 + j % 2);
    }
    Sheet s = build_sheet(H, W, walls, {}, static_cast<std::size_t>(rows * cols));
    Encoding enc;
    enc.family = "hx";
    enc.d = 2;
    enc.name = "hx-d2-" + std::to_string(rows) + "x" + std::to_string(cols);
    enc.qubits = s.grid.qubits();
    enc.stabilizers = s.stabs;
    grid_modes(enc, rows, cols);
    std::vector<int> seg_mode;
    std::map<int, int> seen;
    for (const auto &seg : s.segs) seg_mode.push_back(seen[seg.col]++ * cols + (seg.col - 1));
    sheet_logicals(enc, s, seg_mode, checkerboard(rows, cols, 1), plain_bonds(rows, cols), 6, opt.label);
    finish(enc, opt);
    return enc;
}

Encoding build_dk(int d, int rows, int cols, BuildOptions opt) {
    check_grid(rows, cols);
    if (d != 1) throw UnsupportedError("dk supports d = 1 only");
    const int N = rows * cols;
    auto odd = [](int fr, int fc) { return ((fr + fc) % 2 + 2) % 2 == 0; };
    auto real = [&](int fr, int fc) { return fr >= 0 && fc >= 0 && fr < rows - 1 && fc < cols - 1; };
    std::map<std::pair<int, int>, std::size_t> face_qubit;
    Encoding enc;
    enc.family = "dk";
    enc.d = 1;
    enc.name = "dk-d1-" + std::to_string(rows) + "x" + std::to_string(cols);
    for (int r = 0; r < rows; ++r)
        for (int c = 0; c < cols; ++c) enc.qubits.push_back(Qubit{r * cols + c, 2 * c, 2 * r, "v"});
    for (int fr = 0; fr < rows - 1; ++fr)
        for (int fc = 0; fc < cols - 1; ++fc)
            if (odd(fr, fc)) {
                std::size_t q = enc.qubits.size();
                face_qubit[{fr, fc}] = q;
                enc.qubits.push_back(Qubit{static_cast<int>(q), 2 * fc + 1, 2 * fr + 1, "f"});
            }
    const std::size_t n = enc.qubits.size();
    grid_modes(enc, rows, cols);
    for (int i = 0; i < N; ++i) enc.add(make_vertex(i, PauliString::single(n, i, 'Z')));

    // Edge (u, v) picks up the letter of its odd face at each endpoint (X if
    // the face lies above the vertex, Y if below) and X / Y on the face qubit
    // for horizontal / vertical edges.
    auto edge = [&](int r0, int c0, int r1, int c1) {
        bool horizontal = r0 == r1;
        std::array<std::pair<int, int>, 2> faces =
            horizontal ? std::array<std::pair<int, int>, 2>{{{r0 - 1, c0}, {r0, c0}}}
                       : std::array<std::pair<int, int>, 2>{{{r0, c0 - 1}, {r0, c0}}};
        auto f = odd(faces[0].first, faces[0].second) ? faces[0] : faces[1];
        PauliString e(n);
        e.set(static_cast<std::size_t>(r0 * cols + c0), f.first == r0 - 1 ? 'X' : 'Y');
        e.set(static_cast<std::size_t>(r1 * cols + c1), f.first == r1 - 1 ? 'X' : 'Y');
        if (real(f.first, f.second)) e.set(face_qubit.at(f), horizontal ? 'X' : 'Y');
        return e;
    };
    for (int r = 0; r < rows; ++r)
        for (int c = 0; c + 1 < cols; ++c) enc.add(make_edge(r * cols + c, r * cols + c + 1, edge(r, c, r, c + 1)));
    for (int r = 0; r + 1 < rows; ++r)
        for (int c = 0; c < cols; ++c) enc.add(make_edge(r * cols + c, (r + 1) * cols + c, edge(r, c, r + 1, c)));

    // Loops around the even faces.
    for (int fr = 0; fr < rows - 1; ++fr)
        for (int fc = 0; fc < cols - 1; ++fc) {
            if (odd(fr, fc)) continue;
            int a = fr * cols + fc, b = a + 1, c = a + cols, dd = c + 1;
            PauliString loop = enc.find(key_of("E", a, b))->pauli * enc.find(key_of("E", b, dd))->pauli *
                               enc.find(key_of("E", c, dd))->pauli * enc.find(key_of("E", a, c))->pauli;
            enc.stabilizers.push_back(letters(loop));
        }
    std::vector<PauliString> keep;
    for (auto &[key, op] : enc.logicals) keep.push_back(op.pauli);
    if (detail::logical_count(enc.stabilizers, n) < static_cast<std::size_t>(N))
        throw BuildError("dk stabilizers over-constrain the code space");
    detail::gauge_fix(enc.stabilizers, keep, n, static_cast<std::size_t>(N), 4);
    for (auto [i, j] : grid_bonds(rows, cols)) add_transfers_from_edge(enc, i, j);
    finish(enc, opt);
    return enc;
}

Encoding build_pe(int d, int rows, int cols, BuildOptions opt) {
    check_grid(rows, cols);
    if (d != 3) throw UnsupportedError("pe supports d = 3 only");
    if (rows != 2) throw UnsupportedError("pe supports grids with two rows only");
    // Both spin species of a site sit on neighbouring walls of one sheet.
    const int walls_n = 2 * cols;
    const int H = rows * d, W = 2 * walls_n + 2;
    std::map<int, std::vector<int>> walls;
    for (int w = 0; w < walls_n; ++w)
        for (int k = 1; k < rows; ++k) walls[1 + 2 * w].push_back(k * d - 1);
    Sheet s = build_sheet(H, W, walls, {W - 1}, static_cast<std::size_t>(2 * rows * cols));
    Encoding enc;
    enc.family = "pe";
    enc.d = 3;
    enc.name = "pe-d3-" + std::to_string(rows) + "x" + std::to_string(cols);
    enc.qubits = s.grid.qubits();
    enc.stabilizers = s.stabs;
    for (int r = 0; r < rows; ++r)
        for (int c = 0; c < cols; ++c) {
            enc.modes.push_back(ModeId{r, c, Spin::Up});
            enc.modes.push_back(ModeId{r, c, Spin::Down});
        }
    auto idx = [&](int r, int c, int spin) { return 2 * (r * cols + c) + spin; };
    std::vector<int> seg_mode;
    for (const auto &seg : s.segs) {
        int w = (seg.col - 1) / 2;
        seg_mode.push_back(idx(seg.r0 / d, w / 2, w % 2));
    }
    // Row-aligned bonds first: their windows avoid the far end of each wall,
    // which fixes the labelling before the spin-flip and vertical bonds.
    std::vector<SheetBond> bonds;
    for (int r = 0; r < rows; ++r)
        for (int c = 0; c + 1 < cols; ++c)
            for (int spin = 0; spin < 2; ++spin) bonds.push_back({idx(r, c, spin), idx(r, c + 1, spin), false});
    for (int r = 0; r < rows; ++r)
        for (int c = 0; c < cols; ++c) bonds.push_back({idx(r, c, 0), idx(r, c, 1), true});
    for (int r = 0; r + 1 < rows; ++r)
        for (int c = 0; c < cols; ++c)
            for (int spin = 0; spin < 2; ++spin) bonds.push_back({idx(r, c, spin), idx(r + 1, c, spin), false});
    sheet_logicals(enc, s, seg_mode, checkerboard(rows, cols, 2), bonds, 7, opt.label);
    finish(enc, opt);
    return enc;
}

Encoding stack_spinful(const Encoding &enc, BuildOptions opt) {
    if (enc.spinful()) throw ParameterError("encoding is already spinful");
    const std::size_t n = enc.num_qubits();
    Encoding out;
    out.family = enc.family;
    out.d = enc.d;
    out.name = enc.name + "-spinful";
    for (std::size_t q = 0; q < n; ++q)
        for (int s = 0; s < 2; ++s) {
            Qubit qb = enc.qubits[q];
            qb.id = static_cast<int>(2 * q + s);
            qb.tag = qb.tag.empty() ? (s ? "dn" : "up") : qb.tag + (s ? "-dn" : "-up");
            out.qubits.push_back(qb);
        }
    for (const auto &m : enc.modes) {
        out.modes.push_back(ModeId{m.row, m.col, Spin::Up});
        out.modes.push_back(ModeId{m.row, m.col, Spin::Down});
    }
    std::vector<std::size_t> where[2];
    for (std::size_t q = 0; q < n; ++q) {
        where[0].push_back(2 * q);
        where[1].push_back(2 * q + 1);
    }
    for (int s = 0; s < 2; ++s)
        for (const auto &st : enc.stabilizers) out.stabilizers.push_back(embed(st, 2 * n, where[s]));
    for (const auto &[key, op] : enc.logicals)
        for (int s = 0; s < 2; ++s) {
            LogicalOperator o = op;
            o.i = 2 * op.i + s;
            o.j = 2 * op.j + s;
            o.pauli = embed(op.pauli, 2 * n, where[s]);
            out.add(o);
        }
    finish(out, opt);
    return out;
}

std::size_t layout_qubits(const std::string &family, int d, int rows, int cols) {
    auto z = [](long v) { return static_cast<std::size_t>(v); };
    const long R = rows, C = cols, D = d;
    if (family == "jwt") return z(R * C);
    if (family == "le1d") return z(D * ((R * C) * (D - 1) + 1));
    if (family == "snake" || family == "snake_le") return z(D * ((R * C) * (D - 1) + 1));
    if (family == "le2d" || (family == "vc" && d >= 2)) return z(R * D * (2 * C + 2));
    if (family == "vc") return z(2 * R * C);
    if (family == "hx") return z((2 * R + 1) * (C + 2));
    if (family == "pe") return z(R * D * (4 * C + 2));
    if (family == "dk") {
        long odd = 0;
        for (long fr = 0; fr < R - 1; ++fr)
            for (long fc = 0; fc < C - 1; ++fc)
                if ((fr + fc) % 2 == 0) ++odd;
        return z(R * C + odd);
    }
    throw ParameterError("unknown family '" + family + "'");
}

int modes_per_site(const std::string &family) { return family == "pe" ? 2 : 1; }

void certify(const Encoding &enc) {
    auto alg = check_algebra(enc);
    if (!alg.ok()) throw BuildError("algebra check failed for " + enc.name + ": " + alg.str());
    if (!check_counts(enc)) throw BuildError("logical count check failed for " + enc.name);
    if (enc.d > 1) {
        DistanceOptions o;
        o.w_max = static_cast<std::size_t>(enc.d - 1);
        auto rep = compute_distance(enc, o);
        if (rep.witness)
            throw BuildError("distance below " + std::to_string(enc.d) + " for " + enc.name + ": " +
                             rep.witness->str());
    }
    bool reaches = enc.logicals.empty();
    for (const auto &[key, op] : enc.logicals)
        if (op.pauli.weight() == static_cast<std::size_t>(enc.d)) reaches = true;
    if (!reaches) throw BuildError("no registered logical of weight " + std::to_string(enc.d) + " in " + enc.name);
}

Encoding build(const BuildRequest &req) {
    const std::string &f = req.family;
    auto two_d = [&] {
        if (req.rows <= 0 || req.cols <= 0) throw ParameterError(f + " needs a grid (rows x cols)");
    };
    auto one_d = [&] {
        if (req.modes <= 0) throw ParameterError(f + " needs a mode count");
    };
    if (req.simplified && f != "le1d") throw ParameterError("--simplified applies to le1d only");
    BuildOptions inner = req.options;
    if (req.spinful) inner.certify = false;
    Encoding enc;
    if (f == "jwt") {
        one_d();
        enc = build_jwt(req.modes, inner);
    } else if (f == "le1d") {
        one_d();
        enc = build_le1d(req.d, req.modes, req.simplified, inner);
    } else if (f == "le2d" || f == "snake" || f == "snake_le") {
        two_d();
        enc = build_le2d(req.d, req.rows, req.cols, f == "le2d" ? Layout::Local : Layout::Snake, inner);
    } else if (f == "vc") {
        two_d();
        enc = build_vc(req.d, req.rows, req.cols, inner);
    } else if (f == "hx") {
        two_d();
        enc = build_hx(req.d, req.rows, req.cols, inner);
    } else if (f == "dk") {
        two_d();
        enc = build_dk(req.d, req.rows, req.cols, inner);
    } else if (f == "pe") {
        two_d();
        if (req.spinful) throw ParameterError("pe is already spinful");
        enc = build_pe(req.d, req.rows, req.cols, inner);
    } else {
        throw ParameterError("unknown family '" + f + "'");
    }
    if (req.spinful) enc = stack_spinful(enc, req.options);
    return enc;
}

} // namespace fenc
