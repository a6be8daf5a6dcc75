#pragma once

#include <gmpxx.h>
#include <string>
#include <cstdint>

namespace lndkit {

// Exact rational scalar. mpq_class keeps the canonical form we rely on
// everywhere: fully reduced, denominator > 0, zero stored as 0/1.
using Rat = mpq_class;

inline Rat rat(long num, long den = 1) {
    Rat r(num, den);
    r.canonicalize();
    return r;
}

// Accepts "p/q" or a plain integer, base 10. Returns false on garbage.
inline bool rat_from_string(const std::string& text, Rat& out) {
    if (text.empty()) return false;
    if (out.set_str(text, 10) != 0) return false;
    if (out.get_den() == 0) return false;
    out.canonicalize();
    return true;
}

inline std::string rat_to_string(const Rat& r) {
    return r.get_str();
}

}  // namespace lndkit
