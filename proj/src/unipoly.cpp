#include "unipoly.hpp"

namespace lndkit {

UniPoly UniPoly::operator+(const UniPoly& o) const {
    std::vector<Rat> r(std::max(c_.size(), o.c_.size()));
    for (size_t i = 0; i < r.size(); ++i) {
        if (i < c_.size()) r[i] += c_[i];
        if (i < o.c_.size()) r[i] += o.c_[i];
    }
    return UniPoly(std::move(r));
}

UniPoly UniPoly::operator-(const UniPoly& o) const { return *this + o.scaled(rat(-1)); }

UniPoly UniPoly::operator*(const UniPoly& o) const {
    if (c_.empty() || o.c_.empty()) return {};
    std::vector<Rat> r(c_.size() + o.c_.size() - 1);
    for (size_t i = 0; i < c_.size(); ++i)
        for (size_t j = 0; j < o.c_.size(); ++j) r[i + j] += c_[i] * o.c_[j];
    return UniPoly(std::move(r));
}

UniPoly UniPoly::scaled(const Rat& s) const {
    if (sgn(s) == 0) return {};
    std::vector<Rat> r = c_;
    for (auto& x : r) x *= s;
    return UniPoly(std::move(r));
}

UniPoly UniPoly::derivative() const {
    if (c_.size() <= 1) return {};
    std::vector<Rat> r(c_.size() - 1);
    for (size_t i = 1; i < c_.size(); ++i) r[i - 1] = c_[i] * static_cast<long>(i);
    return UniPoly(std::move(r));
}

Rat UniPoly::eval(const Rat& t) const {
    Rat acc = 0;
    for (size_t i = c_.size(); i-- > 0;) acc = acc * t + c_[i];
    return acc;
}

Poly UniPoly::eval_at(const Poly& p) const {
    Poly acc;
    for (size_t i = c_.size(); i-- > 0;) acc = acc * p + Poly::constant(c_[i]);
    return acc;
}

std::string UniPoly::str(const std::string& name) const {
    if (c_.empty()) return "0";
    std::string out;
    bool first = true;
    for (size_t i = c_.size(); i-- > 0;) {
        if (sgn(c_[i]) == 0) continue;
        bool neg = sgn(c_[i]) < 0;
        if (first) {
            if (neg) out += "-";
            first = false;
        } else {
            out += neg ? " - " : " + ";
        }
        Rat a = abs(c_[i]);
        if (i == 0) {
            out += rat_to_string(a);
        } else {
            if (a != 1) out += rat_to_string(a) + "*";
            out += name;
            if (i > 1) out += "^" + std::to_string(i);
        }
    }
    return out;
}

UniPoly express_in(const Poly& g, const Poly& a) {
    if (a.is_constant())
        throw Error(ErrorCode::ConstantInput, "cannot express elements in terms of a constant");
    uint32_t da = static_cast<uint32_t>(a.degree());
    Monomial la = a.leading_term().m;
    Rat lc = a.leading_coeff();

    std::vector<Rat> coeffs;
    std::vector<Poly> apow{Poly::constant(rat(1))};
    auto a_power = [&](uint32_t k) -> const Poly& {
        while (apow.size() <= k) apow.push_back(apow.back() * a);
        return apow[k];
    };

    Poly r = g;
    while (!r.is_zero()) {
        if (r.is_constant()) {
            if (coeffs.empty()) coeffs.resize(1);
            coeffs[0] += r.constant_term();
            break;
        }
        uint32_t d = static_cast<uint32_t>(r.degree());
        if (d % da != 0)
            throw Error(ErrorCode::NotInSubalgebra,
                        "degree " + std::to_string(d) + " is not a multiple of " + std::to_string(da));
        uint32_t k = d / da;
        Monomial expect{la.dx * k, la.dy * k};
        if (!(r.leading_term().m == expect))
            throw Error(ErrorCode::NotInSubalgebra,
                        "leading monomial does not match any power of the argument");
        Rat lck = lc;
        for (uint32_t i = 1; i < k; ++i) lck *= lc;
        Rat c = r.leading_coeff() / lck;
        if (coeffs.size() <= k) coeffs.resize(k + 1);
        coeffs[k] += c;
        r = r - a_power(k).scaled(c);
    }
    UniPoly f{std::move(coeffs)};
    // the subduction above kills leading terms one at a time; this final
    // check makes the success condition self-evident
    if (!(f.eval_at(a) == g)) throw Error(ErrorCode::NotInSubalgebra, "residual after subduction");
    return f;
}

}  // namespace lndkit
