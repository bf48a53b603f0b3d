#ifndef ORTHOSMITH_INTEGER_HPP
#define ORTHOSMITH_INTEGER_HPP

#include <cstdint>
#include <string>
#include <utility>

#include <gmpxx.h>

#include "orthosmith/errors.hpp"

namespace orthosmith {

// Arbitrary-precision integers and rationals.  GMP supplies the raw
// arithmetic; everything in the library goes through these aliases and the
// helpers below so the backing implementation stays in one place.
using Integer  = mpz_class;
using Rational = mpq_class;

inline Integer gcd(const Integer& a, const Integer& b) {
    Integer g;
    mpz_gcd(g.get_mpz_t(), a.get_mpz_t(), b.get_mpz_t());
    return g;
}

inline Integer lcm(const Integer& a, const Integer& b) {
    Integer l;
    mpz_lcm(l.get_mpz_t(), a.get_mpz_t(), b.get_mpz_t());
    return l;
}

inline Integer pow_ui(const Integer& base, unsigned long e) {
    Integer r;
    mpz_pow_ui(r.get_mpz_t(), base.get_mpz_t(), e);
    return r;
}

// Truncated integer square root.
inline Integer isqrt(const Integer& a) {
    Integer r;
    mpz_sqrt(r.get_mpz_t(), a.get_mpz_t());
    return r;
}

inline bool is_perfect_square(const Integer& a) {
    return a >= 0 && mpz_perfect_square_p(a.get_mpz_t()) != 0;
}

inline bool fits_int64(const Integer& a) {
    return mpz_fits_slong_p(a.get_mpz_t()) != 0;
}

inline std::int64_t to_int64(const Integer& a) {
    if (!fits_int64(a)) throw domain_error("integer does not fit in 64 bits: " + a.get_str());
    return static_cast<std::int64_t>(mpz_get_si(a.get_mpz_t()));
}

// Nearest-integer quotient, ties rounded up.  The remainder a - q*b then
// satisfies |a - q*b| <= |b|/2, which is what the Euclidean reductions need.
inline Integer div_round_nearest(const Integer& a, const Integer& b) {
    Integer q, r;
    mpz_fdiv_qr(q.get_mpz_t(), r.get_mpz_t(), a.get_mpz_t(), b.get_mpz_t());
    if (2 * abs(r) >= abs(b)) q += 1;
    return q;
}

inline Integer divexact(const Integer& a, const Integer& b) {
    Integer q;
    mpz_divexact(q.get_mpz_t(), a.get_mpz_t(), b.get_mpz_t());
    return q;
}

// --- ring-trait hooks shared with GaussianInteger --------------------------

inline bool is_zero(const Integer& a) { return sgn(a) == 0; }

inline bool ring_divides(const Integer& d, const Integer& a) {
    if (is_zero(d)) return is_zero(a);
    return mpz_divisible_p(a.get_mpz_t(), d.get_mpz_t()) != 0;
}

// Measure used for pivot selection and for norm identities: |a| over Z.
inline Integer norm_measure(const Integer& a) { return abs(a); }

// Canonical associate over Z is the absolute value.
inline Integer normalize_associate(const Integer& a) { return abs(a); }

// Unit u with u*a equal to the canonical associate (a != 0).
inline Integer canonical_unit_multiplier(const Integer& a) {
    return sgn(a) < 0 ? Integer(-1) : Integer(1);
}

inline Integer ring_gcd(const Integer& a, const Integer& b) { return gcd(a, b); }

inline Integer conj_value(const Integer& a) { return a; }

inline bool is_unit(const Integer& a) { return a == 1 || a == -1; }

// --- rationals --------------------------------------------------------------

// Lowest terms, positive denominator.
inline Rational make_rational(const Integer& num, const Integer& den) {
    if (is_zero(den)) throw validation_error("rational with zero denominator");
    Rational r(num, den);
    r.canonicalize();
    return r;
}

inline Rational make_rational(const Integer& num) { return Rational(num); }

inline const Integer& numerator(const Rational& r) {
    return r.get_num();
}

inline const Integer& denominator(const Rational& r) {
    return r.get_den();
}

inline double to_double(const Rational& r) { return r.get_d(); }

// Decimal rendering with at least `digits` significant digits (round half
// away from zero).  Used wherever doubles would silently lose precision.
std::string decimal_string(const Rational& r, std::size_t digits = 15);

} // namespace orthosmith

#endif
