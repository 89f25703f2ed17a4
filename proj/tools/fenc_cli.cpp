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

// fenc command-line tool.  Data goes to stdout or --out, logs to stderr.
// Exit codes: 0 success, 1 verification failure or refusal, 2 usage error.

#include <cmath>
#include <cstdio>
#include <filesystem>
#include <iostream>
#include <memory>
#include <optional>
#include <sstream>
#include <string>
#include <vector>

#include "CLI11.hpp"
#include "fenc/fenc.h"

namespace {

constexpr int kOk = 0;
constexpr int kFail = 1;
constexpr int kUsage = 2;

struct UsageError : std::runtime_error {
    using std::runtime_error::runtime_error;
};

struct Failure : std::runtime_error {
    using std::runtime_error::runtime_error;
};

// Throws the exception matching the exit-code class of a library status.
void check(fenc_status s) {
    if (s == FENC_OK) return;
    std::string msg = std::string(fenc_status_name(s)) + ": " + fenc_last_error();
    switch (s) {
    case FENC_ERR_ARGUMENT:
    case FENC_ERR_UNSUPPORTED:
    case FENC_ERR_IO:
    case FENC_ERR_PARSE:
        throw UsageError(msg);
    default:
        throw Failure(msg);
    }
}

struct StringDeleter {
    void operator()(char *p) const { fenc_string_free(p); }
};
using CString = std::unique_ptr<char, StringDeleter>;

struct EncodingDeleter {
    void operator()(fenc_encoding *p) const { fenc_encoding_free(p); }
};
using Handle = std::unique_ptr<fenc_encoding, EncodingDeleter>;

std::string take(char *p) {
    CString owned(p);
    return owned ? std::string(owned.get()) : std::string();
}

struct Range {
    int lo = 0, hi = 0;
};

// "3" or "2..5".
Range parse_range(const std::string &s) {
    try {
        auto dots = s.find("..");
        std::size_t used = 0;
        if (dots == std::string::npos) {
            int v = std::stoi(s, &used);
            if (used != s.size()) throw std::invalid_argument(s);
            return {v, v};
        }
        std::string a = s.substr(0, dots), b = s.substr(dots + 2);
        Range r{std::stoi(a, &used), 0};
        if (used != a.size()) throw std::invalid_argument(s);
        r.hi = std::stoi(b, &used);
        if (used != b.size() || r.hi < r.lo) throw std::invalid_argument(s);
        return r;
    } catch (const std::logic_error &) {
        throw UsageError("bad --d value '" + s + "' (expected N or A..B)");
    }
}

std::pair<int, int> parse_grid(const std::string &s) {
    int r = 0, c = 0;
    char x = 0, extra = 0;
    if (std::sscanf(s.c_str(), "%d%c%d%c", &r, &x, &c, &extra) != 3 || (x != 'x' && x != 'X') || r <= 0 || c <= 0)
        throw UsageError("bad --grid value '" + s + "' (expected RxC)");
    return {r, c};
}

fenc_format parse_format(const std::string &s) {
    if (s == "text") return FENC_FORMAT_TEXT;
    if (s == "csv") return FENC_FORMAT_CSV;
    if (s == "checkmatrix") return FENC_FORMAT_CHECKMATRIX;
    if (s == "svg") return FENC_FORMAT_SVG;
    if (s == "json") return FENC_FORMAT_JSON;
    throw UsageError("unknown --format '" + s + "'");
}

struct Options {
    std::string family;
    std::string d = "";
    int modes = 0;
    std::string grid;
    bool spinful = false;
    bool simplified = false;
    std::size_t max_weight = 0;
    double budget = 0;
    double t = 1.0, u = 0.0;
    std::string out;
    std::string format;
    unsigned threads = 1;
    std::string file;
    std::string what;
    std::string kind = "V";
    int effort = 0;
    bool oracle = false;
    bool inject = false;
};

void emit(const Options &o, const std::string &data) {
    if (o.out.empty()) {
        std::cout << data;
        if (!data.empty() && data.back() != '\n') std::cout << '\n';
        std::cout.flush();
        return;
    }
    check(fenc_write_file(o.out.c_str(), data.c_str()));
    std::cerr << "wrote " << o.out << "\n";
}

Handle load(const std::string &path) {
    if (path.empty()) throw UsageError("an encoding file is required");
    std::error_code ec;
    if (!std::filesystem::is_regular_file(path, ec)) throw UsageError("no such file: " + path);
    fenc_encoding *h = nullptr;
    check(fenc_load(path.c_str(), &h));
    return Handle(h);
}

Handle build_from_flags(const Options &o) {
    if (o.family.empty()) throw UsageError("--family is required");
    if (o.d.empty()) throw UsageError("--d is required");
    Range d = parse_range(o.d);
    if (d.lo != d.hi) throw UsageError("build takes a single --d");
    fenc_build_params p{};
    p.family = o.family.c_str();
    p.d = d.lo;
    p.modes = o.modes;
    if (!o.grid.empty()) {
        if (o.modes) throw UsageError("--modes and --grid are exclusive");
        auto [r, c] = parse_grid(o.grid);
        p.rows = r;
        p.cols = c;
    }
    p.spinful = o.spinful;
    p.simplified = o.simplified;
    fenc_encoding *h = nullptr;
    check(fenc_build(&p, &h));
    std::cerr << "built " << o.family << "(d=" << d.lo << "): " << fenc_num_qubits(h) << " qubits, "
              << fenc_num_modes(h) << " modes, " << fenc_num_stabilizers(h) << " stabilizers\n";
    return Handle(h);
}

// Encoding from a positional file or, failing that, from build flags.
Handle input(const Options &o) { return o.file.empty() ? build_from_flags(o) : load(o.file); }

int cmd_build(const Options &o) {
    Handle h = build_from_flags(o);
    if (o.out.empty()) {
        emit(o, take([&] {
                 char *s = nullptr;
                 check(fenc_export(h.get(), FENC_FORMAT_JSON, &s));
                 return s;
             }()));
        return kOk;
    }
    check(fenc_save(h.get(), o.out.c_str()));
    std::cerr << "wrote " << o.out << "\n";
    return kOk;
}

std::string describe_distance(const fenc_distance_result &r) {
    std::ostringstream os;
    if (r.has_witness)
        os << "witness: " << r.witness << " (weight " << r.witness_weight << ")\n";
    os << "method: " << r.method << "\n";
    return os.str();
}

int cmd_verify(const Options &o) {
    Handle h = load(o.file);
    int alg = 0, counts = 0;
    char *rep = nullptr;
    check(fenc_check(h.get(), &alg, &counts, &rep));
    std::string report = take(rep);
    const int d = fenc_claimed_distance(h.get());
    std::cout << "qubits: " << fenc_num_qubits(h.get()) << "\nmodes: " << fenc_num_modes(h.get())
              << "\nclaimed distance: " << d << "\n";
    std::cout << "algebra: " << (alg ? "ok" : "FAILED") << "\n";
    if (!alg) std::cout << report;
    std::cout << "logical count: " << (counts ? "ok" : "FAILED") << "\n";
    if (!alg || !counts) return kFail;

    fenc_distance_params p{};
    p.max_weight = o.max_weight ? o.max_weight : static_cast<std::size_t>(d);
    p.budget = o.budget;
    p.threads = o.threads;
    fenc_distance_result r{};
    fenc_status s = fenc_distance(h.get(), &p, &r);
    if (s == FENC_ERR_BUDGET) {
        std::cout << "distance: refused (" << fenc_last_error() << ")\n";
        return kFail;
    }
    check(s);
    std::cout << describe_distance(r);
    int rc = kOk;
    if (r.has_witness && static_cast<int>(r.witness_weight) == d) {
        std::cout << "distance certified: " << d << "\n";
    } else if (r.has_witness) {
        std::cout << "distance FAILED: logical of weight " << r.witness_weight << " below " << d << "\n";
        rc = kFail;
    } else {
        std::cout << "distance floor: " << r.certified_floor << " (no logical up to weight " << p.max_weight
                  << ")\n";
        if (r.certified_floor < static_cast<std::size_t>(d)) rc = kFail;
    }
    fenc_distance_result_clear(&r);
    return rc;
}

int cmd_distance(const Options &o) {
    Handle h = load(o.file);
    fenc_distance_params p{};
    p.max_weight = o.max_weight ? o.max_weight : static_cast<std::size_t>(fenc_claimed_distance(h.get()));
    p.budget = o.budget;
    p.threads = o.threads;
    fenc_distance_result r{};
    fenc_status s = fenc_distance(h.get(), &p, &r);
    if (s == FENC_ERR_BUDGET) {
        std::cerr << "refused: " << fenc_last_error() << "\n";
        return kFail;
    }
    check(s);
    std::cout << "certified floor: " << r.certified_floor << "\n" << describe_distance(r);
    fenc_distance_result_clear(&r);
    return kOk;
}

int cmd_report(const Options &o) {
    fenc_format fmt = o.format.empty() ? FENC_FORMAT_CSV : parse_format(o.format);
    char *s = nullptr;
    if (o.what == "ratios") {
        if (o.family.empty()) throw UsageError("report ratios needs --family");
        Range d = parse_range(o.d.empty() ? "1" : o.d);
        check(fenc_ratio_report(o.family.c_str(), d.lo, d.hi, fmt, &s));
    } else if (o.what == "weights") {
        Handle h = input(o);
        check(fenc_weight_report(h.get(), o.effort, fmt, &s));
    } else {
        throw UsageError("report kind must be 'ratios' or 'weights'");
    }
    emit(o, take(s));
    return kOk;
}

int cmd_compile(const Options &o) {
    Handle h = input(o);
    char *s = nullptr;
    check(fenc_compile_fhm(h.get(), o.t, o.u, &s));
    emit(o, take(s));
    return kOk;
}

int cmd_spectrum(const Options &o) {
    Handle h = input(o);
    double *v = nullptr;
    std::size_t n = 0;
    check(o.oracle ? fenc_oracle_spectrum(h.get(), o.t, o.u, &v, &n) : fenc_spectrum(h.get(), o.t, o.u, &v, &n));
    std::string data;
    char buf[64];
    for (std::size_t k = 0; k < n; ++k) {
        // Avoid printing "-0.000000000000".
        double x = v[k] == 0.0 || std::abs(v[k]) < 5e-13 ? 0.0 : v[k];
        std::snprintf(buf, sizeof buf, "%.12f\n", x);
        data += buf;
    }
    fenc_doubles_free(v);
    emit(o, data);
    return kOk;
}

int cmd_qem(const Options &o) {
    Range d = parse_range(o.d.empty() ? "2..4" : o.d);
    char *csv = nullptr, *verdict = nullptr;
    int pass = 0;
    check(fenc_qem_scan(d.lo, d.hi, o.kind.c_str(), o.threads, &csv, &verdict, &pass));
    std::string data = take(csv) + take(verdict) + "\n";
    if (o.inject)
        for (int k = d.lo; k < d.hi; ++k) {
            int ok = 0;
            char *rep = nullptr;
            check(fenc_qem_injection(k, o.kind.c_str(), &ok, &rep));
            data += take(rep);
            pass = pass && ok;
        }
    emit(o, data);
    return pass ? kOk : kFail;
}

int cmd_export(const Options &o) {
    Handle h = load(o.file);
    fenc_format fmt = o.format.empty() ? FENC_FORMAT_TEXT : parse_format(o.format);
    char *s = nullptr;
    check(fenc_export(h.get(), fmt, &s));
    emit(o, take(s));
    return kOk;
}

} // namespace

int main(int argc, char **argv) {
    CLI::App app{"Fermion-to-qubit encodings: build, verify, compile and analyse."};
    app.require_subcommand(1);
    app.set_version_flag("--version", std::string(fenc_version()));
    Options o;

    auto family = [&](CLI::App *c) {
        c->add_option("--family", o.family, "jwt|le1d|le2d|snake|vc|hx|dk|pe")
            ->check(CLI::IsMember({"jwt", "le1d", "le2d", "snake", "vc", "hx", "dk", "pe"}));
    };
    auto shape = [&](CLI::App *c, const char *dhelp) {
        family(c);
        c->add_option("--d", o.d, dhelp);
        c->add_option("--modes", o.modes, "mode count (1D families)");
        c->add_option("--grid", o.grid, "RxC sites (2D families)");
        c->add_flag("--spinful", o.spinful, "two spin species");
        c->add_flag("--simplified", o.simplified, "boundary-simplified even-d layout");
    };
    auto out = [&](CLI::App *c) { c->add_option("--out", o.out, "output path (atomic write)"); };
    auto search = [&](CLI::App *c) {
        c->add_option("--max-weight", o.max_weight, "highest weight to scan");
        c->add_option("--budget", o.budget, "work budget; refuse above it");
        c->add_option("--threads", o.threads, "worker threads")->check(CLI::PositiveNumber);
    };
    auto hamiltonian = [&](CLI::App *c) {
        c->add_option("--t", o.t, "hopping amplitude");
        c->add_option("--u", o.u, "on-site interaction");
    };
    auto file = [&](CLI::App *c, bool required) {
        auto *opt = c->add_option("file", o.file, "encoding document (.fenc.json)");
        if (required) opt->required();
    };

    auto *build = app.add_subcommand("build", "construct an encoding");
    shape(build, "code distance");
    out(build);

    auto *verify = app.add_subcommand("verify", "check algebra, counts and distance");
    file(verify, true);
    search(verify);

    auto *distance = app.add_subcommand("distance", "certify the distance floor");
    file(distance, true);
    search(distance);

    auto *report = app.add_subcommand("report", "weight or ratio tables");
    report->add_option("what", o.what, "ratios|weights")->required();
    file(report, false);
    shape(report, "distance or range A..B");
    report->add_option("--format", o.format, "text|csv");
    report->add_option("--effort", o.effort, "stabilizer subsets tried when minimizing weights");
    out(report);

    auto *compile = app.add_subcommand("compile-fhm", "compile the Fermi-Hubbard Hamiltonian");
    file(compile, false);
    shape(compile, "code distance");
    hamiltonian(compile);
    out(compile);

    auto *spectrum = app.add_subcommand("spectrum", "code-space spectrum of the Fermi-Hubbard Hamiltonian");
    file(spectrum, false);
    shape(spectrum, "code distance");
    hamiltonian(spectrum);
    spectrum->add_flag("--oracle", o.oracle, "Fock-space spectrum instead");
    out(spectrum);

    auto *qem = app.add_subcommand("qem-scan", "count error classes of le1d rotations");
    qem->add_option("--d", o.d, "distance range A..B");
    qem->add_option("--kind", o.kind, "V or T")->check(CLI::IsMember({"V", "T"}));
    qem->add_option("--threads", o.threads, "worker threads")->check(CLI::PositiveNumber);
    qem->add_flag("--inject", o.inject, "also check the d to d+1 error correspondence");
    out(qem);

    auto *exp = app.add_subcommand("export", "diagram or check matrix");
    file(exp, true);
    exp->add_option("--format", o.format, "text|svg|checkmatrix|json");
    out(exp);

    try {
        app.parse(argc, argv);
    } catch (const CLI::Success &e) {
        return app.exit(e);
    } catch (const CLI::ParseError &e) {
        app.exit(e);
        return kUsage;
    }

    try {
        if (*build) return cmd_build(o);
        if (*verify) return cmd_verify(o);
        if (*distance) return cmd_distance(o);
        if (*report) return cmd_report(o);
        if (*compile) return cmd_compile(o);
        if (*spectrum) return cmd_spectrum(o);
        if (*qem) return cmd_qem(o);
        if (*exp) return cmd_export(o);
    } catch (const UsageError &e) {
        std::cerr << "error: " << e.what() << "\n";
        return kUsage;
    } catch (const Failure &e) {
        std::cerr << "error: " << e.what() << "\n";
        return kFail;
    }
    return kUsage;
}
