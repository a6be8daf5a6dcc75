#include "automorphism.hpp"

#include "error.hpp"

namespace lndkit {

namespace {

AffineLinear affine_inverse(const AffineLinear& m) {
    Rat det = m.det();
    if (sgn(det) == 0) throw Error(ErrorCode::InvalidArgument, "affine map is singular");
    // inverse linear part adj(M)/det, translation -M^{-1}(e,f)
    Rat a = m.d / det, b = -m.b / det, c = -m.c / det, d = m.a / det;
    return {a, b, c, d, -(a * m.e + b * m.f), -(c * m.e + d * m.f)};
}

}  // namespace

ElementaryMap inverted(const ElementaryMap& e) {
    return std::visit(
        [](const auto& m) -> ElementaryMap {
            using T = std::decay_t<decltype(m)>;
            if constexpr (std::is_same_v<T, AffineLinear>) {
                return affine_inverse(m);
            } else if constexpr (std::is_same_v<T, ShearX>) {
                return ShearX{-m.c, m.k};
            } else {
                return ShearY{-m.c, m.k};
            }
        },
        e);
}

std::pair<Poly, Poly> elementary_images(const ElementaryMap& e) {
    const Poly x = Poly::var(Var::X), y = Poly::var(Var::Y);
    return std::visit(
        [&](const auto& m) -> std::pair<Poly, Poly> {
            using T = std::decay_t<decltype(m)>;
            if constexpr (std::is_same_v<T, AffineLinear>) {
                return {x.scaled(m.a) + y.scaled(m.b) + Poly::constant(m.e),
                        x.scaled(m.c) + y.scaled(m.d) + Poly::constant(m.f)};
            } else if constexpr (std::is_same_v<T, ShearX>) {
                return {x + y.pow(m.k).scaled(m.c), y};
            } else {
                return {x, y + x.pow(m.k).scaled(m.c)};
            }
        },
        e);
}

void PolyAut::refresh() {
    for (const auto& e : chain_) {
        if (const auto* aff = std::get_if<AffineLinear>(&e)) {
            if (sgn(aff->det()) == 0)
                throw Error(ErrorCode::InvalidArgument, "affine map is singular");
        } else if (const auto* sx = std::get_if<ShearX>(&e)) {
            if (sx->k < 1) throw Error(ErrorCode::InvalidArgument, "shear exponent must be positive");
        } else if (const auto* sy = std::get_if<ShearY>(&e)) {
            if (sy->k < 1) throw Error(ErrorCode::InvalidArgument, "shear exponent must be positive");
        }
    }
    auto fold = [](const std::vector<ElementaryMap>& es, bool invert) {
        Poly hx = Poly::var(Var::X), hy = Poly::var(Var::Y);
        if (invert) {
            for (auto it = es.rbegin(); it != es.rend(); ++it) {
                auto [ix, iy] = elementary_images(inverted(*it));
                hx = hx.substitute(ix, iy);
                hy = hy.substitute(ix, iy);
            }
        } else {
            for (const auto& e : es) {
                auto [ix, iy] = elementary_images(e);
                hx = hx.substitute(ix, iy);
                hy = hy.substitute(ix, iy);
            }
        }
        return std::pair{hx, hy};
    };
    std::tie(img_x_, img_y_) = fold(chain_, false);
    std::tie(inv_x_, inv_y_) = fold(chain_, true);
}

PolyAut PolyAut::inverse() const {
    std::vector<ElementaryMap> rev;
    rev.reserve(chain_.size());
    for (auto it = chain_.rbegin(); it != chain_.rend(); ++it) rev.push_back(inverted(*it));
    return PolyAut(std::move(rev));
}

PolyAut PolyAut::then(const PolyAut& o) const {
    std::vector<ElementaryMap> c = chain_;
    c.insert(c.end(), o.chain_.begin(), o.chain_.end());
    return PolyAut(std::move(c));
}

PolyAut PolyAut::then(const ElementaryMap& e) const {
    std::vector<ElementaryMap> c = chain_;
    c.push_back(e);
    return PolyAut(std::move(c));
}

Derivation conjugate_by_elementary(const ElementaryMap& e, const Derivation& D) {
    auto [ix, iy] = elementary_images(e);
    auto push = [&](const Poly& h) { return h.substitute(ix, iy); };
    return std::visit(
        [&](const auto& m) -> Derivation {
            using T = std::decay_t<decltype(m)>;
            if constexpr (std::is_same_v<T, AffineLinear>) {
                AffineLinear inv = affine_inverse(m);
                // D applied to the inverse's linear images
                return {push(D.p.scaled(inv.a) + D.q.scaled(inv.b)),
                        push(D.p.scaled(inv.c) + D.q.scaled(inv.d))};
            } else if constexpr (std::is_same_v<T, ShearX>) {
                // e^{-1}(x) = x - c*y^k, so D(e^{-1}(x)) = p - c*k*y^{k-1}*q
                Poly adj = D.p - Poly::monomial({0, m.k - 1}, m.c * static_cast<long>(m.k)) * D.q;
                return {push(adj), push(D.q)};
            } else {
                Poly adj = D.q - Poly::monomial({m.k - 1, 0}, m.c * static_cast<long>(m.k)) * D.p;
                return {push(D.p), push(adj)};
            }
        },
        e);
}

Derivation PolyAut::conjugate(const Derivation& D) const {
    Derivation cur = D;
    for (const auto& e : chain_) cur = conjugate_by_elementary(e, cur);
    return cur;
}

}  // namespace lndkit
