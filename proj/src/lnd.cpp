#include "lnd.hpp"

#include <algorithm>

#include "decompose.hpp"
#include "rectify.hpp"

namespace lndkit {

const char* lnd_reason_name(LndVerdict::Reason r) {
    switch (r) {
        case LndVerdict::Reason::None: return "None";
        case LndVerdict::Reason::NonzeroDivergence: return "NonzeroDivergence";
        case LndVerdict::Reason::EigenvectorFound: return "EigenvectorFound";
        case LndVerdict::Reason::KernelGeneratorNotCoordinate: return "KernelGeneratorNotCoordinate";
        case LndVerdict::Reason::HamiltonianNotComposite: return "HamiltonianNotComposite";
    }
    return "Unknown";
}

namespace {

std::vector<uint32_t> divisors_ascending(uint32_t n) {
    std::vector<uint32_t> out;
    for (uint32_t d = 1; d <= n; ++d)
        if (n % d == 0) out.push_back(d);
    return out;
}

Poly normalize_generator(Poly a) {
    a = a - Poly::constant(a.constant_term());
    return a.scaled(rat(1) / a.leading_coeff());
}

// Divergence-free route: h = hamiltonian(D) generates progress because
// ker D = Q[w] and h is a polynomial in w, so the minimal generator
// degree divides deg h. For each divisor, restrict h to a line with
// nonvanishing top form, split the restriction as f(v), and lift the
// base v back to two variables; the first divisor that lifts is minimal
// (any smaller kernel element would itself decompose h).
Poly kernel_divfree(const Derivation& D, const Poly& h, int degree_bound) {
    uint32_t hd = static_cast<uint32_t>(h.degree());
    Poly htop = h.homogeneous_component(hd);
    Rat lambda;
    for (long t = 0;; ++t) {
        if (sgn(htop.at(rat(1), rat(t))) != 0) {
            lambda = rat(t);
            break;
        }
    }
    UniPoly u(h.on_line(lambda));
    UniPoly umonic = u.scaled(rat(1) / u.coeffs().back());

    for (uint32_t e : divisors_ascending(hd)) {
        uint32_t k = hd / e;
        std::vector<Rat> base = top_kth_root(umonic, e, k).coeffs();
        base[0] = 0;
        UniPoly b0(std::move(base));
        auto f = radix_constants(u, b0);
        if (!f || f->degree() != static_cast<int>(k)) continue;
        auto a = lift_base(h, *f, b0, lambda, e);
        if (!a) continue;
        if (static_cast<int>(e) > degree_bound)
            throw Error(ErrorCode::NoKernelElementWithinBound,
                        "minimal kernel generator has degree " + std::to_string(e));
        Poly an = normalize_generator(*a);
        if (!apply(D, an).is_zero())
            throw Error(ErrorCode::Degenerate, "kernel candidate does not annihilate");
        return an;
    }
    // the full-degree divisor always lifts (linear f)
    throw Error(ErrorCode::Degenerate, "kernel search fell through");
}

Poly kernel_nullspace(const Derivation& D, int bound) {
    // columns are monomials of degree <= bound in ascending grlex order;
    // the reduced echelon form then makes the first free column past the
    // constants the minimal kernel leading monomial
    std::vector<Monomial> cols;
    for (uint32_t t = 0; t <= static_cast<uint32_t>(bound); ++t)
        for (uint32_t dx = 0; dx <= t; ++dx) cols.push_back({dx, t - dx});

    std::vector<Poly> images(cols.size());
    std::vector<uint64_t> row_keys;
    for (size_t c = 0; c < cols.size(); ++c) {
        images[c] = apply(D, Poly::monomial(cols[c], rat(1)));
        for (const auto& t : images[c].terms()) row_keys.push_back(t.m.grlex_key());
    }
    std::sort(row_keys.begin(), row_keys.end());
    row_keys.erase(std::unique(row_keys.begin(), row_keys.end()), row_keys.end());

    size_t rows = row_keys.size();
    std::vector<std::vector<Rat>> M(rows, std::vector<Rat>(cols.size()));
    for (size_t c = 0; c < cols.size(); ++c)
        for (const auto& t : images[c].terms()) {
            size_t r = static_cast<size_t>(
                std::lower_bound(row_keys.begin(), row_keys.end(), t.m.grlex_key()) -
                row_keys.begin());
            M[r][c] = t.c;
        }

    std::vector<int> pivot_row_of_col(cols.size(), -1);
    size_t prow = 0;
    for (size_t c = 0; c < cols.size() && prow < rows; ++c) {
        size_t sel = prow;
        while (sel < rows && sgn(M[sel][c]) == 0) ++sel;
        if (sel == rows) continue;
        std::swap(M[sel], M[prow]);
        Rat inv = rat(1) / M[prow][c];
        for (size_t j = c; j < cols.size(); ++j) M[prow][j] *= inv;
        for (size_t r = 0; r < rows; ++r) {
            if (r == prow || sgn(M[r][c]) == 0) continue;
            Rat factor = M[r][c];
            for (size_t j = c; j < cols.size(); ++j) M[r][j] -= factor * M[prow][j];
        }
        pivot_row_of_col[c] = static_cast<int>(prow);
        ++prow;
    }

    for (size_t c = 1; c < cols.size(); ++c) {
        if (pivot_row_of_col[c] != -1) continue;
        std::vector<Poly::Term> terms;
        terms.push_back({cols[c], rat(1)});
        for (size_t pc = 0; pc < c; ++pc) {
            int pr = pivot_row_of_col[pc];
            if (pr == -1) continue;
            Rat v = -M[static_cast<size_t>(pr)][c];
            if (sgn(v) != 0) terms.push_back({cols[pc], v});
        }
        Poly a = Poly::from_terms(std::move(terms));
        return normalize_generator(a);
    }
    throw Error(ErrorCode::NoKernelElementWithinBound,
                "no nonconstant kernel element of degree at most " + std::to_string(bound));
}

}  // namespace

int default_kernel_bound(const Derivation& D) {
    if (divergence(D).is_zero()) return hamiltonian(D).degree();
    return std::max(D.p.degree(), D.q.degree()) + 1;
}

Poly kernel_generator(const Derivation& D, int degree_bound) {
    if (D.is_zero()) throw Error(ErrorCode::InvalidArgument, "zero derivation has no kernel generator");
    if (degree_bound < 1)
        throw Error(ErrorCode::InvalidArgument, "kernel degree bound must be at least 1");
    if (divergence(D).is_zero()) return kernel_divfree(D, hamiltonian(D), degree_bound);
    return kernel_nullspace(D, degree_bound);
}

namespace {

std::optional<std::pair<Poly, Rat>> eigencoordinate(const Derivation& D) {
    if (D.p.term_count() == 1 && D.p.terms()[0].m == Monomial{1, 0})
        return std::pair{Poly::var(Var::X), D.p.terms()[0].c};
    if (D.q.term_count() == 1 && D.q.terms()[0].m == Monomial{0, 1})
        return std::pair{Poly::var(Var::Y), D.q.terms()[0].c};
    return std::nullopt;
}

int least_vanishing_index(const Derivation& E, const Poly& start) {
    Poly g = start;
    int n = 0;
    int cap = g.degree_y() + 3;
    while (!g.is_zero()) {
        if (++n > cap) throw Error(ErrorCode::Degenerate, "rectified iteration does not terminate");
        g = apply(E, g);
    }
    return n;
}

}  // namespace

LndVerdict is_locally_nilpotent(const Derivation& D) {
    LndVerdict v;
    if (D.is_zero()) {
        v.is_lnd = true;
        v.form = RentschlerForm{Poly::var(Var::Y), UniPoly(), Poly::var(Var::X)};
        v.index_x = v.index_y = 1;
        return v;
    }

    if (!divergence(D).is_zero()) {
        v.reason = LndVerdict::Reason::NonzeroDivergence;
        v.witness = divergence(D);
        return v;
    }

    if (auto eig = eigencoordinate(D)) {
        v.reason = LndVerdict::Reason::EigenvectorFound;
        v.witness = eig->first;
        v.eigenvalue = eig->second;
        return v;
    }

    Poly h = hamiltonian(D);
    Poly a = kernel_generator(D, h.degree());

    UniPoly f;
    try {
        f = express_in(h, a);
    } catch (const Error& e) {
        if (e.code() != ErrorCode::NotInSubalgebra) throw;
        v.reason = LndVerdict::Reason::HamiltonianNotComposite;
        v.witness = a;
        return v;
    }

    RectifyOutcome rect = rectify_coordinate(a);
    if (!rect.ok()) {
        v.reason = LndVerdict::Reason::KernelGeneratorNotCoordinate;
        v.witness = a;
        return v;
    }

    Derivation recon = jacobian_derivation(a).scaled_by(f.derivative().eval_at(a));
    if (!(recon == D))
        throw Error(ErrorCode::Degenerate, "certificate reconstruction mismatch");

    // the rectified copy is c*f'(x)*d/dy, so index computation stays
    // cheap even when D itself has large coefficients
    const PolyAut& rho = *rect.aut;
    Derivation E = rho.conjugate(D);
    if (!E.p.is_zero() || E.q.degree_y() > 0)
        throw Error(ErrorCode::Degenerate, "rectified derivation is not vertical");

    v.is_lnd = true;
    v.index_x = least_vanishing_index(E, rho.image_x());
    v.index_y = least_vanishing_index(E, rho.image_y());
    v.form = RentschlerForm{std::move(a), std::move(f), rect.mate};
    return v;
}

RentschlerForm rentschler_decompose(const Derivation& D) {
    if (D.is_zero())
        throw Error(ErrorCode::InvalidArgument, "zero derivation has no decomposition");
    LndVerdict v = is_locally_nilpotent(D);
    if (!v.is_lnd)
        throw NotLndError(D, v.reason,
                          std::string("derivation is not locally nilpotent: ") +
                              lnd_reason_name(v.reason));
    return *v.form;
}

}  // namespace lndkit
