#include "derivation.hpp"

namespace lndkit {

Poly apply(const Derivation& D, const Poly& h) {
    return D.p * h.partial_x() + D.q * h.partial_y();
}

Derivation bracket(const Derivation& A, const Derivation& B) {
    return {apply(A, B.p) - apply(B, A.p), apply(A, B.q) - apply(B, A.q)};
}

Poly divergence(const Derivation& D) {
    return D.p.partial_x() + D.q.partial_y();
}

Poly wronskian(const Derivation& A, const Derivation& B) {
    return A.p * B.q - B.p * A.q;
}

Derivation jacobian_derivation(const Poly& f) {
    return {-f.partial_y(), f.partial_x()};
}

namespace {

Poly integrate(const Poly& p, Var v) {
    std::vector<Poly::Term> out;
    out.reserve(p.terms().size());
    for (const auto& t : p.terms()) {
        if (v == Var::X) {
            out.push_back({{t.m.dx + 1, t.m.dy}, t.c / static_cast<long>(t.m.dx + 1)});
        } else {
            out.push_back({{t.m.dx, t.m.dy + 1}, t.c / static_cast<long>(t.m.dy + 1)});
        }
    }
    return Poly::from_terms(std::move(out));
}

}  // namespace

Poly hamiltonian(const Derivation& D) {
    if (!divergence(D).is_zero())
        throw Error(ErrorCode::NonzeroDivergence, "derivation has nonzero divergence");
    // want h with h_y = -p and h_x = q; integrate -p in y, then the
    // residue q - d/dx of that is a polynomial in x alone (div D = 0)
    Poly h1 = integrate(-D.p, Var::Y);
    Poly r = D.q - h1.partial_x();
    return h1 + integrate(r, Var::X);
}

Poly iterate(const Derivation& D, Poly h, uint32_t n) {
    for (uint32_t i = 0; i < n; ++i) h = apply(D, h);
    return h;
}

int engel_chain(const Derivation& D1, const Derivation& D2, int cap) {
    if (cap < 1) throw Error(ErrorCode::InvalidArgument, "engel cap must be at least 1");
    Derivation cur = bracket(D1, D2);
    for (int k = 1; k <= cap; ++k) {
        if (cur.is_zero()) return k;
        cur = bracket(cur, D2);
    }
    throw Error(ErrorCode::CapExceeded,
                "bracket chain still nonzero after " + std::to_string(cap) + " steps");
}

}  // namespace lndkit
