#pragma once

#include <variant>
#include <vector>

#include "derivation.hpp"
#include "poly.hpp"

namespace lndkit {

// x -> a*x + b*y + e,  y -> c*x + d*y + f,  with ad - bc nonzero.
struct AffineLinear {
    Rat a, b, c, d, e, f;

    static AffineLinear identity() { return {rat(1), rat(0), rat(0), rat(1), rat(0), rat(0)}; }
    static AffineLinear swap_xy() { return {rat(0), rat(1), rat(1), rat(0), rat(0), rat(0)}; }
    Rat det() const { return a * d - b * c; }
    bool operator==(const AffineLinear& o) const = default;
};

// x -> x + c*y^k, y fixed.
struct ShearX {
    Rat c;
    uint32_t k;
    bool operator==(const ShearX& o) const = default;
};

// y -> y + c*x^k, x fixed.
struct ShearY {
    Rat c;
    uint32_t k;
    bool operator==(const ShearY& o) const = default;
};

using ElementaryMap = std::variant<AffineLinear, ShearX, ShearY>;

ElementaryMap inverted(const ElementaryMap& e);
// the map's own images of the coordinates
std::pair<Poly, Poly> elementary_images(const ElementaryMap& e);

// true when the map fixes both coordinates
inline bool is_identity_map(const ElementaryMap& e) {
    if (const auto* a = std::get_if<AffineLinear>(&e)) return *a == AffineLinear::identity();
    if (const auto* s = std::get_if<ShearX>(&e)) return sgn(s->c) == 0;
    return sgn(std::get<ShearY>(e).c) == 0;
}

// Automorphism of Q[x,y] stored as a chain of elementary maps applied
// left to right: theta(h) = e_n(...e_1(h)...). Inversion reverses the
// chain and inverts each element, so round-trips are exact.
class PolyAut {
public:
    PolyAut() { refresh(); }
    explicit PolyAut(std::vector<ElementaryMap> chain) : chain_(std::move(chain)) {
        std::erase_if(chain_, is_identity_map);
        refresh();
    }

    static PolyAut identity() { return PolyAut(); }

    const std::vector<ElementaryMap>& chain() const { return chain_; }
    bool is_identity_chain() const { return chain_.empty(); }

    const Poly& image_x() const { return img_x_; }
    const Poly& image_y() const { return img_y_; }
    const Poly& inv_image_x() const { return inv_x_; }
    const Poly& inv_image_y() const { return inv_y_; }

    Poly apply(const Poly& h) const { return h.substitute(img_x_, img_y_); }

    PolyAut inverse() const;
    // composition: first this map, then the other
    PolyAut then(const PolyAut& o) const;
    PolyAut then(const ElementaryMap& e) const;

    // theta D theta^{-1}, folded through the chain one elementary map at
    // a time so intermediate degrees grow no faster than the result's.
    Derivation conjugate(const Derivation& D) const;

private:
    void refresh();
    std::vector<ElementaryMap> chain_;
    Poly img_x_, img_y_, inv_x_, inv_y_;
};

Derivation conjugate_by_elementary(const ElementaryMap& e, const Derivation& D);

}  // namespace lndkit
