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

#include "fenc/fenc.h"

#include <algorithm>
#include <cstdlib>
#include <cstring>
#include <new>
#include <numeric>
#include <string>
#include <vector>

#include "fenc/builders.h"
#include "fenc/encoding.h"
#include "fenc/hubbard.h"
#include "fenc/qem.h"
#include "fenc/verifier.h"

struct fenc_encoding {
    fenc::Encoding enc;
};

namespace {

thread_local std::string g_error;

char *dup(const std::string &s) {
    char *p = static_cast<char *>(std::malloc(s.size() + 1));
    if (!p) throw std::bad_alloc();
    std::memcpy(p, s.c_str(), s.size() + 1);
    return p;
}

double *dup(const std::vector<double> &v) {
    double *p = static_cast<double *>(std::malloc(std::max<std::size_t>(1, v.size()) * sizeof(double)));
    if (!p) throw std::bad_alloc();
    std::copy(v.begin(), v.end(), p);
    return p;
}

fenc_status fail(fenc_status s, const std::string &what) {
    g_error = what;
    return s;
}

// Runs f, mapping library exceptions onto status codes.  Order matters:
// the specific types derive from std::invalid_argument / runtime_error.
template <class F> fenc_status guard(F &&f) {
    g_error.clear();
    try {
        return f();
    } catch (const fenc::BudgetError &e) {
        return fail(FENC_ERR_BUDGET, e.what());
    } catch (const fenc::SizeLimitError &e) {
        return fail(FENC_ERR_SIZE, e.what());
    } catch (const fenc::IoError &e) {
        return fail(FENC_ERR_IO, e.what());
    } catch (const fenc::SchemaError &e) {
        return fail(FENC_ERR_PARSE, e.what());
    } catch (const fenc::ParseError &e) {
        return fail(FENC_ERR_PARSE, e.what());
    } catch (const fenc::ValidationError &e) {
        return fail(FENC_ERR_VALIDATION, e.what());
    } catch (const fenc::UnsupportedError &e) {
        return fail(FENC_ERR_UNSUPPORTED, e.what());
    } catch (const fenc::BuildError &e) {
        return fail(FENC_ERR_BUILD, e.what());
    } catch (const fenc::CompileError &e) {
        return fail(FENC_ERR_COMPILE, e.what());
    } catch (const fenc::QemError &e) {
        return fail(FENC_ERR_ARGUMENT, e.what());
    } catch (const std::invalid_argument &e) {
        return fail(FENC_ERR_ARGUMENT, e.what());
    } catch (const std::bad_alloc &) {
        return fail(FENC_ERR_INTERNAL, "out of memory");
    } catch (const std::exception &e) {
        return fail(FENC_ERR_INTERNAL, e.what());
    } catch (...) {
        return fail(FENC_ERR_INTERNAL, "unknown error");
    }
}

#define FENC_REQUIRE(cond, msg)                                                                                        \
    do {                                                                                                               \
        if (!(cond)) return fail(FENC_ERR_ARGUMENT, msg);                                                              \
    } while (0)

fenc_status spectrum_common(const fenc_encoding *enc, double t, double u, double **values, size_t *count,
                            bool oracle) {
    FENC_REQUIRE(enc && values && count, "null argument");
    return guard([&] {
        auto terms = fenc::fhm_terms(enc->enc, t, u);
        std::vector<double> ev;
        if (oracle) {
            ev = fenc::fermionic_oracle_spectrum(terms, static_cast<int>(enc->enc.num_modes()));
        } else {
            auto h = fenc::compile_hamiltonian(enc->enc, terms);
            ev = fenc::codespace_spectrum(enc->enc, h);
        }
        *values = dup(ev);
        *count = ev.size();
        return FENC_OK;
    });
}

} // namespace

extern "C" {

const char *fenc_version(void) { return "0.1.0"; }

const char *fenc_last_error(void) { return g_error.c_str(); }

const char *fenc_status_name(fenc_status s) {
    switch (s) {
    case FENC_OK:
        return "ok";
    case FENC_ERR_ARGUMENT:
        return "invalid argument";
    case FENC_ERR_UNSUPPORTED:
        return "unsupported";
    case FENC_ERR_IO:
        return "i/o error";
    case FENC_ERR_PARSE:
        return "parse error";
    case FENC_ERR_VALIDATION:
        return "validation error";
    case FENC_ERR_BUILD:
        return "build error";
    case FENC_ERR_BUDGET:
        return "over budget";
    case FENC_ERR_SIZE:
        return "size limit";
    case FENC_ERR_COMPILE:
        return "compile error";
    case FENC_ERR_INTERNAL:
        return "internal error";
    }
    return "unknown";
}

void fenc_string_free(char *s) { std::free(s); }
void fenc_doubles_free(double *v) { std::free(v); }

fenc_status fenc_build(const fenc_build_params *params, fenc_encoding **out) {
    FENC_REQUIRE(params && out && params->family, "null argument");
    return guard([&] {
        fenc::BuildRequest req;
        req.family = params->family;
        req.d = params->d;
        req.modes = params->modes;
        req.rows = params->rows;
        req.cols = params->cols;
        req.spinful = params->spinful != 0;
        req.simplified = params->simplified != 0;
        *out = new fenc_encoding{fenc::build(req)};
        return FENC_OK;
    });
}

fenc_status fenc_load(const char *path, fenc_encoding **out) {
    FENC_REQUIRE(path && out, "null argument");
    return guard([&] {
        *out = new fenc_encoding{fenc::load(path)};
        return FENC_OK;
    });
}

fenc_status fenc_from_json(const char *text, fenc_encoding **out) {
    FENC_REQUIRE(text && out, "null argument");
    return guard([&] {
        *out = new fenc_encoding{fenc::from_json(text)};
        return FENC_OK;
    });
}

fenc_status fenc_save(const fenc_encoding *enc, const char *path) {
    FENC_REQUIRE(enc && path, "null argument");
    return guard([&] {
        fenc::save(enc->enc, path);
        return FENC_OK;
    });
}

void fenc_encoding_free(fenc_encoding *enc) { delete enc; }

fenc_status fenc_write_file(const char *path, const char *data) {
    FENC_REQUIRE(path && data, "null argument");
    return guard([&] {
        fenc::write_file_atomic(path, data);
        return FENC_OK;
    });
}

size_t fenc_num_qubits(const fenc_encoding *enc) { return enc ? enc->enc.num_qubits() : 0; }
size_t fenc_num_modes(const fenc_encoding *enc) { return enc ? enc->enc.num_modes() : 0; }
size_t fenc_num_stabilizers(const fenc_encoding *enc) { return enc ? enc->enc.stabilizers.size() : 0; }
int fenc_claimed_distance(const fenc_encoding *enc) { return enc ? enc->enc.d : 0; }

fenc_status fenc_export(const fenc_encoding *enc, fenc_format fmt, char **out) {
    FENC_REQUIRE(enc && out, "null argument");
    return guard([&] {
        switch (fmt) {
        case FENC_FORMAT_JSON:
            *out = dup(fenc::to_json(enc->enc));
            return FENC_OK;
        case FENC_FORMAT_TEXT:
            *out = dup(fenc::render_text(enc->enc));
            return FENC_OK;
        case FENC_FORMAT_SVG:
            *out = dup(fenc::render_svg(enc->enc));
            return FENC_OK;
        case FENC_FORMAT_CHECKMATRIX:
            *out = dup(fenc::CheckMatrix::from_paulis(enc->enc.stabilizers, enc->enc.num_qubits()).str());
            return FENC_OK;
        case FENC_FORMAT_CSV:
            break;
        }
        return fail(FENC_ERR_UNSUPPORTED, "export has no csv form; use a report");
    });
}

fenc_status fenc_check(const fenc_encoding *enc, int *algebra_ok, int *counts_ok, char **report) {
    FENC_REQUIRE(enc && algebra_ok && counts_ok, "null argument");
    return guard([&] {
        auto alg = fenc::check_algebra(enc->enc);
        *algebra_ok = alg.ok() ? 1 : 0;
        *counts_ok = fenc::check_counts(enc->enc) ? 1 : 0;
        if (report) *report = dup(alg.str());
        return FENC_OK;
    });
}

fenc_status fenc_distance(const fenc_encoding *enc, const fenc_distance_params *params,
                          fenc_distance_result *result) {
    FENC_REQUIRE(enc && params && result, "null argument");
    FENC_REQUIRE(params->max_weight >= 1, "max_weight must be at least 1");
    *result = fenc_distance_result{};
    return guard([&] {
        fenc::DistanceOptions opt;
        opt.w_max = params->max_weight;
        if (params->budget > 0) opt.budget = params->budget;
        opt.threads = params->threads ? params->threads : 1;
        result->estimated_work = fenc::distance_work(enc->enc, opt.w_max, opt.mitm_threshold);
        auto rep = fenc::compute_distance(enc->enc, opt);
        result->certified_floor = rep.certified_floor;
        result->method = dup(rep.method);
        if (rep.witness) {
            result->has_witness = 1;
            result->witness_weight = rep.witness->weight();
            result->witness = dup(rep.witness->str());
        }
        return FENC_OK;
    });
}

void fenc_distance_result_clear(fenc_distance_result *result) {
    if (!result) return;
    std::free(result->witness);
    std::free(result->method);
    *result = fenc_distance_result{};
}

fenc_status fenc_weight_report(const fenc_encoding *enc, int minimize_effort, fenc_format fmt, char **out) {
    FENC_REQUIRE(enc && out, "null argument");
    FENC_REQUIRE(fmt == FENC_FORMAT_TEXT || fmt == FENC_FORMAT_CSV, "weight report is text or csv");
    return guard([&] {
        auto table = fenc::weight_report(enc->enc, minimize_effort);
        *out = dup(fmt == FENC_FORMAT_CSV ? table.csv() : table.text());
        return FENC_OK;
    });
}

fenc_status fenc_ratio_report(const char *family, int d_lo, int d_hi, fenc_format fmt, char **out) {
    FENC_REQUIRE(family && out, "null argument");
    FENC_REQUIRE(fmt == FENC_FORMAT_TEXT || fmt == FENC_FORMAT_CSV, "ratio report is text or csv");
    FENC_REQUIRE(d_lo <= d_hi, "empty distance range");
    return guard([&] {
        auto rows = fenc::ratio_report(family, d_lo, d_hi);
        *out = dup(fmt == FENC_FORMAT_CSV ? fenc::ratio_csv(rows) : fenc::ratio_text(rows));
        return FENC_OK;
    });
}

fenc_status fenc_compile_fhm(const fenc_encoding *enc, double t, double u, char **out) {
    FENC_REQUIRE(enc && out, "null argument");
    return guard([&] {
        auto h = fenc::compile_hamiltonian(enc->enc, fenc::fhm_terms(enc->enc, t, u));
        *out = dup(h.str());
        return FENC_OK;
    });
}

fenc_status fenc_spectrum(const fenc_encoding *enc, double t, double u, double **values, size_t *count) {
    return spectrum_common(enc, t, u, values, count, false);
}

fenc_status fenc_oracle_spectrum(const fenc_encoding *enc, double t, double u, double **values, size_t *count) {
    return spectrum_common(enc, t, u, values, count, true);
}

fenc_status fenc_qem_scan(int d_lo, int d_hi, const char *kind, unsigned threads, char **csv, char **verdict,
                          int *pass) {
    FENC_REQUIRE(kind && csv && verdict && pass, "null argument");
    FENC_REQUIRE(d_lo >= 2 && d_lo <= d_hi, "distance range must start at 2 or above");
    return guard([&] {
        std::vector<int> ds(static_cast<std::size_t>(d_hi - d_lo + 1));
        std::iota(ds.begin(), ds.end(), d_lo);
        auto scan = fenc::nd_scan("le1d", ds, kind, threads ? threads : 1);
        *csv = dup(scan.csv());
        *verdict = dup(scan.verdict());
        *pass = scan.ok() ? 1 : 0;
        return FENC_OK;
    });
}

fenc_status fenc_qem_injection(int d, const char *kind, int *pass, char **report) {
    FENC_REQUIRE(kind && pass, "null argument");
    return guard([&] {
        auto r = fenc::injection_check(d, kind);
        *pass = r.ok() ? 1 : 0;
        if (report) {
            std::string s = "injection d=" + std::to_string(d) + "->" + std::to_string(d + 1) + ": " +
                            std::to_string(r.preserved) + "/" + std::to_string(r.checked) + " preserved\n";
            for (const auto &f : r.failures) s += "  lost: " + f + "\n";
            *report = dup(s);
        }
        return FENC_OK;
    });
}

} // extern "C"
