#pragma once

#include <cstdint>
#include <compare>

namespace lndkit {

// Power product x^dx * y^dy.
struct Monomial {
    uint32_t dx = 0;
    uint32_t dy = 0;

    uint32_t total() const { return dx + dy; }

    // Packed key that sorts in graded lex order with x > y: higher total
    // degree first, then higher x-degree. Addition of keys matches
    // monomial multiplication as long as exponents stay below 2^32.
    uint64_t grlex_key() const {
        return (static_cast<uint64_t>(total()) << 32) | dx;
    }

    Monomial operator*(const Monomial& o) const { return {dx + o.dx, dy + o.dy}; }

    bool divides(const Monomial& o) const { return dx <= o.dx && dy <= o.dy; }
    Monomial divide(const Monomial& o) const { return {dx - o.dx, dy - o.dy}; }

    bool operator==(const Monomial& o) const = default;
};

// true when a > b in grlex
inline bool grlex_greater(const Monomial& a, const Monomial& b) {
    return a.grlex_key() > b.grlex_key();
}

}  // namespace lndkit
