// Exact rational scalar type and small helpers shared by the whole engine.
//
// All symbolic computation in this library runs over arbitrary-precision
// rationals (GMP mpq). Values are kept canonical: lowest terms, positive
// denominator. Conversion to double happens only at the quadrature layer.

#ifndef INFDEX_RATIONAL_HPP
#define INFDEX_RATIONAL_HPP

#include <gmpxx.h>

#include <cstdint>
#include <stdexcept>
#include <string>

namespace infdex {

using Rat = mpq_class;

/// Thrown on malformed user input (files, strings, JSON). CLI exit code 2.
class input_error : public std::runtime_error {
public:
    explicit input_error(const std::string& msg) : std::runtime_error(msg) {}
};

/// Thrown when a mathematical precondition fails (zero weight, non-pointed
/// cone, on-wall evaluation, divergent integral, ...). CLI exit code 3.
class precondition_error : public std::runtime_error {
public:
    explicit precondition_error(const std::string& msg) : std::runtime_error(msg) {}
};

/// Parse "p/q", "p" or "-p/q". mpq_class's string constructor does not
/// canonicalize, so this wrapper must.
inline Rat rat_parse(const std::string& s) {
    if (s.empty()) throw input_error("empty rational literal");
    try {
        Rat r(s);
        if (r.get_den() == 0) throw input_error("zero denominator in rational '" + s + "'");
        r.canonicalize();
        return r;
    } catch (const std::invalid_argument&) {
        throw input_error("malformed rational '" + s + "'");
    }
}

inline Rat rat(long num, long den = 1) {
    Rat r(num, den);
    r.canonicalize();
    return r;
}

inline std::string rat_str(const Rat& r) { return r.get_str(); }

inline double rat_d(const Rat& r) { return r.get_d(); }

inline int rat_sign(const Rat& r) { return sgn(r); }

inline Rat rat_abs(const Rat& r) { return abs(r); }

inline Rat rat_pow(const Rat& base, unsigned e) {
    Rat out(1);
    Rat b = base;
    while (e) {
        if (e & 1) out *= b;
        b *= b;
        e >>= 1;
    }
    return out;
}

inline Rat rat_factorial(unsigned n) {
    mpz_class f;
    mpz_fac_ui(f.get_mpz_t(), n);
    return Rat(f);
}

}  // namespace infdex

#endif
