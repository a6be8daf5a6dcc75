#include "rectify.hpp"

namespace lndkit {

namespace {

RectifyOutcome fail(std::string stage, Poly witness) {
    RectifyOutcome out;
    out.failure = RectifyFailure{std::move(stage), std::move(witness)};
    return out;
}

// linear map sending the monic linear form l (= x + r*y, or y) to y
std::optional<AffineLinear> axis_normalizer(const Poly& l) {
    Rat cx = l.coeff({1, 0}), cy = l.coeff({0, 1});
    if (sgn(cx) == 0) return std::nullopt;  // l = y already
    // x -> y - r*x, y -> x maps x + r*y to y
    Rat r = cy / cx;
    return AffineLinear{-r, rat(1), rat(1), rat(0), rat(0), rat(0)};
}

}  // namespace

RectifyOutcome rectify_coordinate(const Poly& a) {
    if (a.is_constant()) throw Error(ErrorCode::ConstantInput, "constant polynomial is not a coordinate");

    PolyAut theta;
    Poly cur = a;
    while (cur.degree() > 1) {
        LeadingForm lf = leading_form(cur);
        if (!lf.pure)
            return fail("leading form is not a power of a linear form", cur);

        if (auto aff = axis_normalizer(lf.pure->linear)) {
            theta = theta.then(ElementaryMap{*aff});
            auto [ix, iy] = elementary_images(ElementaryMap{*aff});
            cur = cur.substitute(ix, iy);
        }
        // top form is now t0*y^d
        uint32_t d = static_cast<uint32_t>(cur.degree());
        int mx = cur.degree_x();
        if (mx < 1)
            return fail("depends on y alone with degree above one", cur);
        uint32_t m = static_cast<uint32_t>(mx);
        if (d % m != 0)
            return fail("x-degree does not divide total degree", cur);
        uint32_t k = d / m;

        // weight x by k: every exponent pair must sit on or under the
        // edge from y^d to x^m, and the edge itself must be a pure power
        // c*(x + g0*y^k)^m so one shear collapses it
        std::vector<Rat> edge(m + 1);
        for (const auto& t : cur.terms()) {
            uint64_t w = static_cast<uint64_t>(k) * t.m.dx + t.m.dy;
            if (w > d) return fail("term above the reduction edge", cur);
            if (w == d) edge[t.m.dx] = t.c;
        }
        const Rat& c0 = edge[m];  // coefficient of x^m
        if (sgn(c0) == 0) return fail("term above the reduction edge", cur);
        Rat g0 = edge[m - 1] / (c0 * static_cast<long>(m));
        Rat binom = 1, pw = 1;
        bool edge_ok = true;
        for (int i = static_cast<int>(m) - 1; i >= 0; --i) {
            binom = binom * (i + 1) / static_cast<long>(m - i);
            pw *= g0;
            if (edge[static_cast<size_t>(i)] != c0 * binom * pw) {
                edge_ok = false;
                break;
            }
        }
        if (!edge_ok) return fail("reduction edge is not a power of a linear form", cur);

        ElementaryMap shear = ShearX{-g0, k};
        theta = theta.then(shear);
        auto [ix, iy] = elementary_images(shear);
        Poly next = cur.substitute(ix, iy);
        if (next.degree() >= static_cast<int>(d))
            throw Error(ErrorCode::Degenerate, "shear failed to reduce degree");
        cur = next;
    }

    // cur = alpha*x + beta*y + delta; finish with one affine map
    if (!(cur == Poly::var(Var::X))) {
        Rat alpha = cur.coeff({1, 0}), beta = cur.coeff({0, 1}), delta = cur.coeff({0, 0});
        AffineLinear last;
        if (sgn(alpha) != 0) {
            last = {rat(1) / alpha, -beta / alpha, rat(0), rat(1), -delta / alpha, rat(0)};
        } else {
            last = {rat(0), rat(1), rat(1) / beta, rat(0), rat(0), -delta / beta};
        }
        theta = theta.then(ElementaryMap{last});
    }

    RectifyOutcome out;
    if (!(theta.apply(a) == Poly::var(Var::X)))
        throw Error(ErrorCode::Degenerate, "rectification reassembly mismatch");
    out.mate = theta.inv_image_y();
    out.aut = std::move(theta);
    return out;
}

PolyAut rectify_pair(const Poly& a, const Poly& c) {
    Poly jac = jacobian_det(a, c);
    if (jac.is_zero() || !jac.is_constant())
        throw Error(ErrorCode::JacobianNotConstant,
                    "jacobian determinant of the pair is not a nonzero constant");

    RectifyOutcome rect = rectify_coordinate(a);
    if (!rect.ok())
        throw Error(ErrorCode::NotCoordinate, "first element is not a coordinate: " + rect.failure->stage);
    PolyAut theta = *rect.aut;

    Poly img = theta.apply(c);
    // a constant-jacobian partner of x is mu*y + q(x)
    Poly mu_poly = img.partial_y();
    if (mu_poly.is_zero() || !mu_poly.is_constant())
        throw Error(ErrorCode::Degenerate, "partner image is not affine in y");
    Rat mu = mu_poly.constant_term();

    Poly q = img - Poly::var(Var::Y).scaled(mu);
    for (const auto& t : q.terms()) {
        if (t.m.dy != 0) throw Error(ErrorCode::Degenerate, "partner image is not affine in y");
        if (t.m.dx == 0) continue;  // constant folds into the final affine
        theta = theta.then(ElementaryMap{ShearY{-t.c / mu, t.m.dx}});
    }
    Rat q0 = q.coeff({0, 0});
    if (mu != 1 || sgn(q0) != 0) {
        theta = theta.then(
            ElementaryMap{AffineLinear{rat(1), rat(0), rat(0), rat(1) / mu, rat(0), -q0 / mu}});
    }

    if (!(theta.apply(a) == Poly::var(Var::X)) || !(theta.apply(c) == Poly::var(Var::Y)))
        throw Error(ErrorCode::Degenerate, "pair rectification reassembly mismatch");
    return theta;
}

}  // namespace lndkit
