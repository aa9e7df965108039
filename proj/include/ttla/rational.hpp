#pragma once

#include <gmpxx.h>

#include <cstdint>
#include <stdexcept>
#include <string>

namespace ttla {

// Exact rational scalar. GMP keeps every intermediate value exact; nothing
// in this library ever touches floating point except debug printing.
using Rat = mpq_class;

inline Rat rat(long num, long den = 1) {
    if (den == 0) throw std::domain_error("rational with zero denominator");
    Rat r(num, den);
    r.canonicalize();
    return r;
}

inline bool isZero(const Rat& r) { return sgn(r) == 0; }

inline std::string ratStr(const Rat& r) { return r.get_str(); }

inline Rat ratParse(const std::string& s) {
    Rat r;
    if (r.set_str(s, 10) != 0) throw std::invalid_argument("bad rational literal: " + s);
    r.canonicalize();
    return r;
}

inline long ratToLong(const Rat& r) {
    if (r.get_den() != 1) throw std::domain_error("rational is not an integer: " + ratStr(r));
    if (!r.get_num().fits_slong_p()) throw std::overflow_error("integer out of long range");
    return r.get_num().get_si();
}

}  // namespace ttla
