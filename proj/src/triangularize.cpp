#include "triangularize.hpp"

#include <algorithm>
#include <optional>
#include <string>

#include "error.hpp"
#include "rectify.hpp"

namespace lndkit {

bool is_triangular(const Derivation& d) { return d.p.is_constant() && d.q.degree_y() <= 0; }

const char* tri_case_name(TriCase c) {
    switch (c) {
        case TriCase::Zero: return "zero";
        case TriCase::RankOneAbelian: return "rank-one-abelian";
        case TriCase::RankTwoAbelian: return "rank-two-abelian";
        case TriCase::RankTwoNonabelian: return "rank-two-nonabelian";
    }
    return "unknown";
}

namespace {

constexpr size_t kChainCap = 64;

// delta with d == delta * jacobian_derivation(a), when one exists
std::optional<Rat> jacobian_multiple(const Derivation& d, const Poly& a) {
    Derivation da = jacobian_derivation(a);
    if (d.is_zero() || da.is_zero()) return std::nullopt;
    Rat num, den;
    if (!da.p.is_zero()) {
        den = da.p.leading_coeff();
        num = d.p.coeff(da.p.leading_term().m);
    } else {
        den = da.q.leading_coeff();
        num = d.q.coeff(da.q.leading_term().m);
    }
    Rat delta = num / den;
    if (sgn(delta) == 0) return std::nullopt;
    if (!(d == da.scaled(delta))) return std::nullopt;
    return delta;
}

void require_coordinate_pair(const Poly& a, const Poly& c) {
    Poly jd = jacobian_det(a, c);
    if (jd.is_zero() || !jd.is_constant())
        throw Error(ErrorCode::Degenerate, "kernel generators fail to form a coordinate pair");
}

}  // namespace

CommutingPair commuting_independent_pair(const LieBasis& span0) {
    const auto& b = span0.basis;
    size_t i0 = b.size(), j0 = b.size();
    for (size_t i = 0; i < b.size() && i0 == b.size(); ++i)
        for (size_t j = i + 1; j < b.size(); ++j)
            if (!wronskian(b[i], b[j]).is_zero()) {
                i0 = i;
                j0 = j;
                break;
            }
    if (i0 == b.size())
        throw Error(ErrorCode::RankDeficient, "the span contains no independent pair");

    // bracket the partner against d1 until the chain dies out
    const Derivation& d1 = b[i0];
    std::vector<Derivation> chain{b[j0]};
    while (true) {
        Derivation next = bracket(chain.back(), d1);
        if (next.is_zero()) break;
        chain.push_back(std::move(next));
        if (chain.size() > kChainCap)
            throw Error(ErrorCode::CapExceeded, "bracket chain did not terminate");
    }
    const Derivation& ds = chain.back();

    if (!wronskian(ds, d1).is_zero()) {
        // the tail already commutes with d1 and stays independent
        RentschlerForm fs = rentschler_decompose(ds);
        RentschlerForm f1 = rentschler_decompose(d1);
        if (fs.f.degree() != 1 || f1.f.degree() != 1)
            throw Error(ErrorCode::Degenerate, "independent commuting tail with nonlinear profile");
        require_coordinate_pair(fs.a, f1.a);
        return {ds, d1, fs.a, f1.a};
    }

    // dependent tail: d1 must carry a nonlinear profile f; bracketing
    // deg(f) - 1 times against the next-to-last chain element strips it
    // down to a plain kernel-generator derivation
    if (chain.size() < 2)
        throw Error(ErrorCode::Degenerate, "dependent bracket chain of length one");
    RentschlerForm f1 = rentschler_decompose(d1);
    int m = f1.f.degree();
    if (m < 2) throw Error(ErrorCode::Degenerate, "dependent tail under a linear profile");
    const Derivation& e = chain[chain.size() - 2];
    RentschlerForm fe = rentschler_decompose(e);
    if (fe.f.degree() != 1)
        throw Error(ErrorCode::Degenerate, "repair element with nonlinear profile");
    Derivation dt = d1;
    for (int k = 0; k < m - 1; ++k) dt = bracket(dt, e);
    auto delta = jacobian_multiple(dt, f1.a);
    if (!delta)
        throw Error(ErrorCode::Degenerate, "repaired bracket is not a kernel-generator derivation");
    if (!bracket(dt, e).is_zero())
        throw Error(ErrorCode::Degenerate, "repaired pair fails to commute");
    require_coordinate_pair(f1.a, fe.a);
    return {dt, e, f1.a, fe.a};
}

LinearSquareForm linear_square_form(const Poly& h) {
    if (h.is_zero() || !h.is_homogeneous() || h.degree() != 2)
        throw Error(ErrorCode::InvalidArgument, "expected a nonzero homogeneous quadratic");
    Rat A = h.coeff({2, 0}), B = h.coeff({1, 1}), C = h.coeff({0, 2});
    if (sgn(B * B - 4 * A * C) != 0)
        throw Error(ErrorCode::NotASquare, "quadratic with nonzero discriminant");
    if (sgn(A) != 0)
        return {Poly::var(Var::X) + Poly::constant(B / (2 * A)) * Poly::var(Var::Y), A};
    // A = 0 with zero discriminant forces B = 0
    return {Poly::var(Var::Y), C};
}

ConjugationCheck verify_conjugation(const PolyAut& theta, const std::vector<Derivation>& originals) {
    ConjugationCheck out;
    out.images.reserve(originals.size());
    for (const auto& d : originals) out.images.push_back(theta.conjugate(d));
    out.all_triangular =
        std::all_of(out.images.begin(), out.images.end(), [](const Derivation& d) {
            return is_triangular(d);
        });
    out.closure = lie_closure(out.images);
    out.closure_uncapped = !out.closure.capped;
    if (out.closure_uncapped)
        out.nilpotent = out.closure.basis.dimension() == 0 ||
                        lower_central_series(out.closure.basis).nilpotent;
    return out;
}

namespace {

// the x*d/dy direction that anchors the nonabelian case
Derivation x_ddy() { return {Poly(), Poly::var(Var::X)}; }

[[noreturn]] void reject_witness(const PolyAut& back, const Derivation& w) {
    Derivation witness = back.conjugate(w);
    LndVerdict v = is_locally_nilpotent(witness);
    if (v.is_lnd)
        throw Error(ErrorCode::Degenerate, "non-triangular image of a locally nilpotent element");
    throw NotLndError(witness, v.reason,
                      std::string("the generated algebra contains a derivation that is not "
                                  "locally nilpotent: ") +
                          lnd_reason_name(v.reason));
}

}  // namespace

TriangularizationResult triangularize(const std::vector<Derivation>& generators) {
    for (const auto& g : generators) {
        if (g.is_zero()) continue;
        LndVerdict v = is_locally_nilpotent(g);
        if (!v.is_lnd)
            throw NotLndError(g, v.reason,
                              std::string("generator is not locally nilpotent: ") +
                                  lnd_reason_name(v.reason));
    }

    TriangularizationResult res;
    LieBasis span0 = span_reduce(generators);

    if (span0.dimension() == 0) {
        res.kind = TriCase::Zero;
        res.theta = PolyAut::identity();
        res.closure = lie_closure({});
    } else if (rank_over_ring(span0) == 1) {
        // one shared kernel generator; straightening it fixes the whole span
        res.kind = TriCase::RankOneAbelian;
        RentschlerForm rf = rentschler_decompose(span0.basis[0]);
        res.theta = rectify_pair(rf.a, rf.witness_mate);
        std::vector<Derivation> conj;
        conj.reserve(span0.dimension());
        for (const auto& d : span0.basis) conj.push_back(res.theta.conjugate(d));
        for (const auto& d : conj)
            if (!is_triangular(d))
                throw Error(ErrorCode::Degenerate, "dependent span failed to rectify jointly");
        res.closure = lie_closure(conj);
        if (res.closure.capped)
            throw Error(ErrorCode::CapExceeded, "bracket closure exceeded the dimension cap");
    } else {
        CommutingPair pair = commuting_independent_pair(span0);
        PolyAut phi = rectify_pair(pair.a, pair.c);
        std::vector<Derivation> conj;
        conj.reserve(span0.dimension());
        for (const auto& d : span0.basis) conj.push_back(phi.conjugate(d));
        ClosureReport clo = lie_closure(conj);
        if (clo.capped)
            throw Error(ErrorCode::CapExceeded, "bracket closure exceeded the dimension cap");

        if (clo.basis.dimension() <= 2) {
            res.kind = TriCase::RankTwoAbelian;
            res.theta = phi;
            for (const auto& d : clo.basis.basis)
                if (!is_triangular(d)) reject_witness(phi.inverse(), d);
            res.closure = std::move(clo);
        } else {
            res.kind = TriCase::RankTwoNonabelian;
            // pull the highest basis element down to linear coefficients;
            // brackets with d/dx and d/dy differentiate them
            size_t wi = 0;
            while (wi < clo.basis.basis.size() && clo.basis.basis[wi].max_degree() < 1) ++wi;
            if (wi == clo.basis.basis.size())
                throw Error(ErrorCode::Degenerate, "three-dimensional algebra of constant fields");
            Derivation w = clo.basis.basis[wi];
            while (w.max_degree() >= 2) {
                int s = w.max_degree();
                Derivation wx = bracket(Derivation::ddx(), w);
                if (wx.max_degree() == s - 1) {
                    w = std::move(wx);
                } else {
                    w = bracket(Derivation::ddy(), w);
                    if (w.max_degree() != s - 1)
                        throw Error(ErrorCode::Degenerate, "degree reduction stalled");
                }
            }
            w = {w.p - Poly::constant(w.p.constant_term()),
                 w.q - Poly::constant(w.q.constant_term())};
            if (w.is_zero()) throw Error(ErrorCode::Degenerate, "linear element vanished");
            if (!divergence(w).is_zero()) {
                Derivation witness = phi.inverse().conjugate(w);
                throw NotLndError(witness, LndVerdict::Reason::NonzeroDivergence,
                                  "the generated algebra contains a derivation with nonzero "
                                  "divergence");
            }
            LinearSquareForm sq;
            try {
                sq = linear_square_form(hamiltonian(w));
            } catch (const Error& err) {
                if (err.code() != ErrorCode::NotASquare) throw;
                reject_witness(phi.inverse(), w);
            }
            AffineLinear psi;
            if (sq.linear == Poly::var(Var::Y)) {
                psi = {rat(0), rat(-1), rat(1), rat(0), rat(0), rat(0)};
            } else {
                Rat r = sq.linear.coeff({0, 1});
                psi = {rat(1), -r, rat(0), rat(1), rat(0), rat(0)};
            }
            res.theta = phi.then(ElementaryMap(psi));
            std::vector<Derivation> final_basis;
            final_basis.reserve(clo.basis.basis.size());
            for (const auto& d : clo.basis.basis)
                final_basis.push_back(conjugate_by_elementary(ElementaryMap(psi), d));
            res.closure = lie_closure(final_basis);
            if (res.closure.capped)
                throw Error(ErrorCode::Degenerate, "conjugated closure failed to stay closed");
            if (!in_span(res.closure.basis, Derivation::ddx()) ||
                !in_span(res.closure.basis, Derivation::ddy()) ||
                !in_span(res.closure.basis, x_ddy()))
                throw Error(ErrorCode::Degenerate, "normalized algebra misses its anchor elements");
            for (const auto& d : res.closure.basis.basis)
                if (!is_triangular(d)) reject_witness(res.theta.inverse(), d);
        }
    }

    ConjugationCheck check = verify_conjugation(res.theta, generators);
    res.images = std::move(check.images);
    res.verified = check.ok() && check.closure.basis.basis == res.closure.basis.basis;
    return res;
}

}  // namespace lndkit
