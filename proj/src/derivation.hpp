#pragma once

#include <string>

#include "poly.hpp"

namespace lndkit {

// D = p*d/dx + q*d/dy, determined by the pair (D(x), D(y)) = (p, q).
struct Derivation {
    Poly p, q;

    bool is_zero() const { return p.is_zero() && q.is_zero(); }
    bool operator==(const Derivation& o) const = default;

    static Derivation ddx() { return {Poly::constant(rat(1)), Poly()}; }
    static Derivation ddy() { return {Poly(), Poly::constant(rat(1))}; }

    Derivation operator+(const Derivation& o) const { return {p + o.p, q + o.q}; }
    Derivation operator-(const Derivation& o) const { return {p - o.p, q - o.q}; }
    Derivation operator-() const { return {-p, -q}; }
    Derivation scaled(const Rat& c) const { return {p.scaled(c), q.scaled(c)}; }
    // module scaling a*D over the polynomial ring
    Derivation scaled_by(const Poly& a) const { return {a * p, a * q}; }

    int max_degree() const { return std::max(p.degree(), q.degree()); }

    std::string str() const { return p.str() + " , " + q.str(); }
};

Poly apply(const Derivation& D, const Poly& h);
Derivation bracket(const Derivation& A, const Derivation& B);
Poly divergence(const Derivation& D);

// p_A*q_B - p_B*q_A; vanishes exactly when A, B are dependent over the
// polynomial ring.
Poly wronskian(const Derivation& A, const Derivation& B);

Derivation jacobian_derivation(const Poly& f);

// For divergence-free D returns the unique h with zero constant term and
// jacobian_derivation(h) = D. Throws NonzeroDivergence.
Poly hamiltonian(const Derivation& D);

Poly iterate(const Derivation& D, Poly h, uint32_t n);

// Least k <= cap with the k-fold bracket [D1, D2, ..., D2] equal to zero.
// Throws CapExceeded.
int engel_chain(const Derivation& D1, const Derivation& D2, int cap);

}  // namespace lndkit
