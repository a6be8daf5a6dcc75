#include "lndkit.h"

#include <cstdlib>
#include <cstring>
#include <string>

#include "automorphism.hpp"
#include "derivation.hpp"
#include "error.hpp"
#include "fuzz.hpp"
#include "json_io.hpp"
#include "liealgebra.hpp"
#include "lnd.hpp"
#include "parser.hpp"
#include "rectify.hpp"
#include "triangularize.hpp"

using namespace lndkit;

struct lndkit_poly {
    Poly v;
};
struct lndkit_derivation {
    Derivation v;
};
struct lndkit_aut {
    PolyAut v;
};

namespace {

thread_local std::string g_last_message;
thread_local long g_last_position = -1;

lndkit_status map_code(ErrorCode c) {
    switch (c) {
        case ErrorCode::ZeroPolynomial: return LNDKIT_ERR_ZERO_POLYNOMIAL;
        case ErrorCode::NotInSubalgebra: return LNDKIT_ERR_NOT_IN_SUBALGEBRA;
        case ErrorCode::NonzeroDivergence: return LNDKIT_ERR_NONZERO_DIVERGENCE;
        case ErrorCode::NoKernelElementWithinBound: return LNDKIT_ERR_NO_KERNEL_ELEMENT_WITHIN_BOUND;
        case ErrorCode::NotLocallyNilpotent: return LNDKIT_ERR_NOT_LOCALLY_NILPOTENT;
        case ErrorCode::CapExceeded: return LNDKIT_ERR_CAP_EXCEEDED;
        case ErrorCode::JacobianNotConstant: return LNDKIT_ERR_JACOBIAN_NOT_CONSTANT;
        case ErrorCode::NotCoordinate: return LNDKIT_ERR_NOT_COORDINATE;
        case ErrorCode::ConstantInput: return LNDKIT_ERR_CONSTANT_INPUT;
        case ErrorCode::RankDeficient: return LNDKIT_ERR_RANK_DEFICIENT;
        case ErrorCode::NotASquare: return LNDKIT_ERR_NOT_A_SQUARE;
        case ErrorCode::Degenerate: return LNDKIT_ERR_DEGENERATE;
        case ErrorCode::NotClosed: return LNDKIT_ERR_NOT_CLOSED;
        case ErrorCode::ParseError: return LNDKIT_ERR_PARSE;
        case ErrorCode::InvalidArgument: return LNDKIT_ERR_INVALID_ARGUMENT;
    }
    return LNDKIT_ERR_INTERNAL;
}

char* dup_string(const std::string& s) {
    char* out = static_cast<char*>(std::malloc(s.size() + 1));
    if (out) std::memcpy(out, s.c_str(), s.size() + 1);
    return out;
}

lndkit_status fail_invalid(const char* what) {
    g_last_message = what;
    g_last_position = -1;
    return LNDKIT_ERR_INVALID_ARGUMENT;
}

// runs fn, translating exceptions into statuses
template <typename Fn>
lndkit_status guarded(Fn&& fn) {
    try {
        g_last_position = -1;
        fn();
        g_last_message.clear();
        return LNDKIT_OK;
    } catch (const lndkit::ParseError& e) {
        g_last_message = e.what();
        g_last_position = static_cast<long>(e.position());
        return LNDKIT_ERR_PARSE;
    } catch (const NotLndError& e) {
        g_last_message = std::string(e.what()) + " (witness: " + e.culprit().str() + ")";
        return LNDKIT_ERR_NOT_LOCALLY_NILPOTENT;
    } catch (const Error& e) {
        g_last_message = e.what();
        return map_code(e.code());
    } catch (const std::exception& e) {
        g_last_message = e.what();
        return LNDKIT_ERR_INTERNAL;
    }
}

std::vector<Derivation> collect(const lndkit_derivation* const* gens, size_t n) {
    std::vector<Derivation> out;
    out.reserve(n);
    for (size_t i = 0; i < n; ++i) out.push_back(gens[i]->v);
    return out;
}

Json closure_payload(const ClosureReport& rep) {
    Json j = closure_to_json(rep);
    if (!rep.capped && rep.basis.dimension() > 0)
        j["series"] = series_to_json(lower_central_series(rep.basis));
    else if (!rep.capped)
        j["series"] = series_to_json(SeriesReport{{0}, true, 0});
    return j;
}

}  // namespace

extern "C" {

const char* lndkit_status_name(lndkit_status s) {
    switch (s) {
        case LNDKIT_OK: return "OK";
        case LNDKIT_ERR_ZERO_POLYNOMIAL: return "ZeroPolynomial";
        case LNDKIT_ERR_NOT_IN_SUBALGEBRA: return "NotInSubalgebra";
        case LNDKIT_ERR_NONZERO_DIVERGENCE: return "NonzeroDivergence";
        case LNDKIT_ERR_NO_KERNEL_ELEMENT_WITHIN_BOUND: return "NoKernelElementWithinBound";
        case LNDKIT_ERR_NOT_LOCALLY_NILPOTENT: return "NotLocallyNilpotent";
        case LNDKIT_ERR_CAP_EXCEEDED: return "CapExceeded";
        case LNDKIT_ERR_JACOBIAN_NOT_CONSTANT: return "JacobianNotConstant";
        case LNDKIT_ERR_NOT_COORDINATE: return "NotCoordinate";
        case LNDKIT_ERR_CONSTANT_INPUT: return "ConstantInput";
        case LNDKIT_ERR_RANK_DEFICIENT: return "RankDeficient";
        case LNDKIT_ERR_NOT_A_SQUARE: return "NotASquare";
        case LNDKIT_ERR_DEGENERATE: return "Degenerate";
        case LNDKIT_ERR_NOT_CLOSED: return "NotClosed";
        case LNDKIT_ERR_PARSE: return "ParseError";
        case LNDKIT_ERR_INVALID_ARGUMENT: return "InvalidArgument";
        case LNDKIT_ERR_INTERNAL: return "Internal";
    }
    return "Unknown";
}

const char* lndkit_last_error_message(void) { return g_last_message.c_str(); }

long lndkit_last_error_position(void) { return g_last_position; }

void lndkit_string_free(char* s) { std::free(s); }

lndkit_status lndkit_poly_parse(const char* text, lndkit_poly** out) {
    if (!text || !out) return fail_invalid("null argument");
    return guarded([&] { *out = new lndkit_poly{parse_poly(text)}; });
}

void lndkit_poly_free(lndkit_poly* p) { delete p; }

lndkit_status lndkit_poly_str(const lndkit_poly* p, char** out) {
    if (!p || !out) return fail_invalid("null argument");
    return guarded([&] { *out = dup_string(p->v.str()); });
}

lndkit_status lndkit_derivation_new(const lndkit_poly* p, const lndkit_poly* q,
                                    lndkit_derivation** out) {
    if (!p || !q || !out) return fail_invalid("null argument");
    return guarded([&] { *out = new lndkit_derivation{{p->v, q->v}}; });
}

void lndkit_derivation_free(lndkit_derivation* d) { delete d; }

lndkit_status lndkit_derivation_parts(const lndkit_derivation* d, char** p_out, char** q_out) {
    if (!d || !p_out || !q_out) return fail_invalid("null argument");
    return guarded([&] {
        *p_out = dup_string(d->v.p.str());
        *q_out = dup_string(d->v.q.str());
    });
}

lndkit_status lndkit_bracket(const lndkit_derivation* a, const lndkit_derivation* b,
                             lndkit_derivation** out) {
    if (!a || !b || !out) return fail_invalid("null argument");
    return guarded([&] { *out = new lndkit_derivation{bracket(a->v, b->v)}; });
}

lndkit_status lndkit_apply(const lndkit_derivation* d, const lndkit_poly* h, lndkit_poly** out) {
    if (!d || !h || !out) return fail_invalid("null argument");
    return guarded([&] { *out = new lndkit_poly{apply(d->v, h->v)}; });
}

lndkit_status lndkit_divergence(const lndkit_derivation* d, lndkit_poly** out) {
    if (!d || !out) return fail_invalid("null argument");
    return guarded([&] { *out = new lndkit_poly{divergence(d->v)}; });
}

lndkit_status lndkit_jacobian_derivation(const lndkit_poly* f, lndkit_derivation** out) {
    if (!f || !out) return fail_invalid("null argument");
    return guarded([&] { *out = new lndkit_derivation{jacobian_derivation(f->v)}; });
}

lndkit_status lndkit_is_lnd(const lndkit_derivation* d, char** json_out, int* is_lnd_out) {
    if (!d || !json_out || !is_lnd_out) return fail_invalid("null argument");
    return guarded([&] {
        LndVerdict v = is_locally_nilpotent(d->v);
        *json_out = dup_string(verdict_to_json(v).dump());
        *is_lnd_out = v.is_lnd ? 1 : 0;
    });
}

lndkit_status lndkit_kernel_generator(const lndkit_derivation* d, int degree_bound,
                                      char** poly_out) {
    if (!d || !poly_out) return fail_invalid("null argument");
    return guarded([&] {
        int bound = degree_bound > 0 ? degree_bound : default_kernel_bound(d->v);
        *poly_out = dup_string(kernel_generator(d->v, bound).str());
    });
}

lndkit_status lndkit_rentschler(const lndkit_derivation* d, char** json_out) {
    if (!d || !json_out) return fail_invalid("null argument");
    return guarded([&] {
        RentschlerForm f = rentschler_decompose(d->v);
        *json_out = dup_string(rentschler_to_json(f).dump());
    });
}

lndkit_status lndkit_aut_from_json(const char* text, lndkit_aut** out) {
    if (!text || !out) return fail_invalid("null argument");
    return guarded([&] { *out = new lndkit_aut{aut_from_json_text(text)}; });
}

lndkit_status lndkit_aut_to_json(const lndkit_aut* a, char** out) {
    if (!a || !out) return fail_invalid("null argument");
    return guarded([&] { *out = dup_string(aut_to_json(a->v).dump()); });
}

void lndkit_aut_free(lndkit_aut* a) { delete a; }

lndkit_status lndkit_aut_apply(const lndkit_aut* a, const lndkit_poly* h, lndkit_poly** out) {
    if (!a || !h || !out) return fail_invalid("null argument");
    return guarded([&] { *out = new lndkit_poly{a->v.apply(h->v)}; });
}

lndkit_status lndkit_aut_conjugate(const lndkit_aut* a, const lndkit_derivation* d,
                                   lndkit_derivation** out) {
    if (!a || !d || !out) return fail_invalid("null argument");
    return guarded([&] { *out = new lndkit_derivation{a->v.conjugate(d->v)}; });
}

lndkit_status lndkit_aut_inverse(const lndkit_aut* a, lndkit_aut** out) {
    if (!a || !out) return fail_invalid("null argument");
    return guarded([&] { *out = new lndkit_aut{a->v.inverse()}; });
}

lndkit_status lndkit_aut_compose(const lndkit_aut* first, const lndkit_aut* second,
                                 lndkit_aut** out) {
    if (!first || !second || !out) return fail_invalid("null argument");
    return guarded([&] { *out = new lndkit_aut{first->v.then(second->v)}; });
}

lndkit_status lndkit_rectify(const lndkit_poly* a, char** json_out, int* is_coordinate_out) {
    if (!a || !json_out || !is_coordinate_out) return fail_invalid("null argument");
    return guarded([&] {
        RectifyOutcome r = rectify_coordinate(a->v);
        Json j;
        j["coordinate"] = r.ok();
        if (r.ok()) {
            j["theta"] = aut_to_json(*r.aut);
            j["mate"] = r.mate.str();
        } else {
            j["stage"] = r.failure->stage;
            j["witness"] = r.failure->witness.str();
        }
        *json_out = dup_string(j.dump());
        *is_coordinate_out = r.ok() ? 1 : 0;
    });
}

lndkit_status lndkit_closure(const lndkit_derivation* const* gens, size_t n, int dim_cap,
                             char** json_out) {
    if ((!gens && n > 0) || !json_out) return fail_invalid("null argument");
    return guarded([&] {
        int cap = dim_cap > 0 ? dim_cap : kDefaultDimCap;
        ClosureReport rep = lie_closure(collect(gens, n), cap);
        *json_out = dup_string(closure_payload(rep).dump());
    });
}

lndkit_status lndkit_triangularize(const lndkit_derivation* const* gens, size_t n,
                                   char** json_out) {
    if ((!gens && n > 0) || !json_out) return fail_invalid("null argument");
    return guarded([&] {
        TriangularizationResult res = triangularize(collect(gens, n));
        *json_out = dup_string(triangularization_to_json(res).dump());
    });
}

lndkit_status lndkit_verify_conjugation(const lndkit_aut* theta,
                                        const lndkit_derivation* const* gens, size_t n,
                                        char** json_out, int* ok_out) {
    if (!theta || (!gens && n > 0) || !json_out || !ok_out) return fail_invalid("null argument");
    return guarded([&] {
        ConjugationCheck check = verify_conjugation(theta->v, collect(gens, n));
        *json_out = dup_string(conjugation_check_to_json(check).dump());
        *ok_out = check.ok() ? 1 : 0;
    });
}

lndkit_status lndkit_fuzz(uint64_t seed, int identity_cases, int recovery_cases, int max_degree,
                          char** json_out, int* pass_out) {
    if (!json_out || !pass_out) return fail_invalid("null argument");
    if (identity_cases < 0 || recovery_cases < 0 || max_degree < 1)
        return fail_invalid("counts must be nonnegative and max_degree at least 1");
    return guarded([&] {
        FuzzConfig cfg;
        cfg.seed = seed;
        cfg.identity_cases = identity_cases;
        cfg.recovery_cases = recovery_cases;
        cfg.max_degree = max_degree;
        FuzzReport rep = run_fuzz(cfg);
        *json_out = dup_string(fuzz_report_to_json(rep).dump());
        *pass_out = rep.pass() ? 1 : 0;
    });
}

}  // extern "C"
