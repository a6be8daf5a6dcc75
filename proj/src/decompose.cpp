#include "decompose.hpp"

#include "error.hpp"

namespace lndkit {

void uni_divmod(const UniPoly& u, const UniPoly& v, UniPoly& q, UniPoly& r) {
    if (v.is_zero()) throw Error(ErrorCode::InvalidArgument, "division by zero polynomial");
    std::vector<Rat> rem = u.coeffs();
    int dv = v.degree();
    const Rat& lead = v.coeffs().back();
    std::vector<Rat> quo;
    if (u.degree() >= dv) quo.resize(static_cast<size_t>(u.degree() - dv) + 1);
    for (int i = u.degree(); i >= dv; --i) {
        Rat c = rem[static_cast<size_t>(i)] / lead;
        if (sgn(c) != 0) {
            quo[static_cast<size_t>(i - dv)] = c;
            for (int j = 0; j <= dv; ++j)
                rem[static_cast<size_t>(i - dv + j)] -= c * v.coeffs()[static_cast<size_t>(j)];
        }
    }
    if (!rem.empty()) rem.resize(static_cast<size_t>(dv));
    q = UniPoly(std::move(quo));
    r = UniPoly(std::move(rem));
}

std::optional<UniPoly> uni_exact_div(const UniPoly& u, const UniPoly& v) {
    UniPoly q, r;
    uni_divmod(u, v, q, r);
    if (!r.is_zero()) return std::nullopt;
    return q;
}

UniPoly uni_compose(const UniPoly& f, const UniPoly& g) {
    UniPoly acc;
    const auto& c = f.coeffs();
    for (size_t i = c.size(); i-- > 0;) acc = acc * g + UniPoly::constant(c[i]);
    return acc;
}

UniPoly top_kth_root(const UniPoly& u, uint32_t e, uint32_t k) {
    uint32_t d = e * k;
    std::vector<Rat> v(e + 1);
    v[e] = 1;
    UniPoly root(std::move(v));
    for (uint32_t i = 1; i <= e; ++i) {
        // adjusting the t^(e-i) coefficient moves the t^(d-i) coefficient
        // of root^k by exactly k (all cross terms land lower)
        UniPoly pk = UniPoly::constant(rat(1));
        for (uint32_t j = 0; j < k; ++j) pk = pk * root;
        Rat delta = u.coeff(d - i) - pk.coeff(d - i);
        if (sgn(delta) != 0) {
            std::vector<Rat> add(e - i + 1);
            add[e - i] = delta / static_cast<long>(k);
            root = root + UniPoly(std::move(add));
        }
    }
    return root;
}

std::optional<UniPoly> radix_constants(const UniPoly& u, const UniPoly& v) {
    std::vector<Rat> digits;
    UniPoly cur = u;
    while (!cur.is_zero()) {
        UniPoly q, r;
        uni_divmod(cur, v, q, r);
        if (r.degree() > 0) return std::nullopt;
        digits.push_back(r.coeff(0));
        cur = q;
    }
    return UniPoly(std::move(digits));
}

namespace {

UniPoly x_rows_to_uni(const Poly& h, uint32_t dy) {
    std::vector<Rat> c;
    for (const auto& t : h.terms()) {
        if (t.m.dy != dy) continue;
        if (c.size() <= t.m.dx) c.resize(t.m.dx + 1);
        c[t.m.dx] = t.c;
    }
    return UniPoly(std::move(c));
}

Poly uni_to_poly_x(const UniPoly& u) {
    std::vector<Poly::Term> ts;
    for (size_t i = 0; i < u.coeffs().size(); ++i)
        if (sgn(u.coeffs()[i]) != 0) ts.push_back({{static_cast<uint32_t>(i), 0}, u.coeffs()[i]});
    return Poly::from_terms(std::move(ts));
}

}  // namespace

std::optional<Poly> lift_base(const Poly& h, const UniPoly& f, const UniPoly& b0,
                              const Rat& lambda, uint32_t e) {
    // coordinates (x, z) with z = y - lambda*x straighten the chosen line
    Poly H = h.substitute(Poly::var(Var::X),
                          Poly::var(Var::X).scaled(lambda) + Poly::var(Var::Y));
    uint32_t kdeg = static_cast<uint32_t>(f.degree());

    UniPoly fprime_b0 = uni_compose(f.derivative(), b0);
    if (fprime_b0.is_zero()) return std::nullopt;

    // Taylor coefficients f^(m)(b0)/m! for the cross terms
    std::vector<UniPoly> taylor(kdeg + 1);
    {
        UniPoly der = f;
        Rat fact = 1;
        for (uint32_t m = 1; m <= kdeg; ++m) {
            der = der.derivative();
            fact *= static_cast<long>(m);
            taylor[m] = uni_compose(der, b0).scaled(rat(1) / fact);
        }
    }

    std::vector<UniPoly> B(e + 1);
    B[0] = b0;
    for (uint32_t j = 1; j <= e; ++j) {
        // powers of the partial tail E = sum_{i<j} B_i z^i, truncated at z^j
        uint32_t mmax = std::min(j, kdeg);
        std::vector<std::vector<UniPoly>> Epow(mmax + 1);
        if (mmax >= 2) {
            Epow[1].assign(j + 1, UniPoly());
            for (uint32_t i = 1; i < j; ++i) Epow[1][i] = B[i];
            for (uint32_t m = 2; m <= mmax; ++m) {
                Epow[m].assign(j + 1, UniPoly());
                for (uint32_t i1 = 1; i1 < j; ++i1)
                    for (uint32_t i2 = m - 1; i1 + i2 <= j; ++i2)
                        Epow[m][i1 + i2] = Epow[m][i1 + i2] + Epow[1][i1] * Epow[m - 1][i2];
            }
        }

        UniPoly S = x_rows_to_uni(H, j);
        for (uint32_t m = 2; m <= mmax; ++m) S = S - taylor[m] * Epow[m][j];

        auto q = uni_exact_div(S, fprime_b0);
        if (!q) return std::nullopt;
        if (q->degree() > static_cast<int>(e - j)) return std::nullopt;
        B[j] = *q;
    }

    Poly A;
    for (uint32_t j = 0; j <= e; ++j)
        A += uni_to_poly_x(B[j]) * Poly::monomial({0, j}, rat(1));
    Poly a = A.substitute(Poly::var(Var::X),
                          Poly::var(Var::Y) - Poly::var(Var::X).scaled(lambda));
    if (!(f.eval_at(a) == h)) return std::nullopt;
    return a;
}

}  // namespace lndkit
