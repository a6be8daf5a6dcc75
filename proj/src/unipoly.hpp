#pragma once

#include <string>
#include <vector>

#include "poly.hpp"

namespace lndkit {

// Univariate polynomial over Q, dense ascending coefficients, no
// trailing zeros.
class UniPoly {
public:
    UniPoly() = default;
    explicit UniPoly(std::vector<Rat> coeffs) : c_(std::move(coeffs)) { trim(); }

    static UniPoly constant(const Rat& c) { return UniPoly({c}); }

    bool is_zero() const { return c_.empty(); }
    int degree() const { return static_cast<int>(c_.size()) - 1; }
    const std::vector<Rat>& coeffs() const { return c_; }
    Rat coeff(size_t k) const { return k < c_.size() ? c_[k] : rat(0); }

    UniPoly operator+(const UniPoly& o) const;
    UniPoly operator-(const UniPoly& o) const;
    UniPoly operator*(const UniPoly& o) const;
    UniPoly scaled(const Rat& s) const;
    bool operator==(const UniPoly& o) const { return c_ == o.c_; }

    UniPoly derivative() const;

    Rat eval(const Rat& t) const;
    Poly eval_at(const Poly& p) const;

    std::string str(const std::string& name = "t") const;

private:
    void trim() {
        while (!c_.empty() && sgn(c_.back()) == 0) c_.pop_back();
    }
    std::vector<Rat> c_;
};

// Writes g as f(a) when g lies in Q[a]; throws NotInSubalgebra otherwise.
UniPoly express_in(const Poly& g, const Poly& a);

}  // namespace lndkit
