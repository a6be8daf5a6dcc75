#pragma once

#include <optional>

#include "unipoly.hpp"

namespace lndkit {

// Dividing u by nonzero v: quotient and remainder with deg r < deg v.
void uni_divmod(const UniPoly& u, const UniPoly& v, UniPoly& q, UniPoly& r);

// Exact quotient u / v, or nullopt when the remainder is nonzero.
std::optional<UniPoly> uni_exact_div(const UniPoly& u, const UniPoly& v);

UniPoly uni_compose(const UniPoly& f, const UniPoly& g);

// For monic u of degree e*k: the unique monic degree-e v whose k-th
// power matches u in the coefficients of t^{ek} down to t^{ek-e}.
UniPoly top_kth_root(const UniPoly& u, uint32_t e, uint32_t k);

// Base-v expansion u = sum r_j v^j with deg r_j < deg v; returns the
// digit list as a polynomial f (u = f(v)) when every digit is constant.
std::optional<UniPoly> radix_constants(const UniPoly& u, const UniPoly& v);

// Attempts h = f(a) for bivariate a of total degree e whose restriction
// to the line y = lambda*x is b0 (as a polynomial in x). Returns a on
// success; any failed exact-division or degree check means no such a.
std::optional<Poly> lift_base(const Poly& h, const UniPoly& f, const UniPoly& b0,
                              const Rat& lambda, uint32_t e);

}  // namespace lndkit
