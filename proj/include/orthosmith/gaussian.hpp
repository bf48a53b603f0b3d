#ifndef ORTHOSMITH_GAUSSIAN_HPP
#define ORTHOSMITH_GAUSSIAN_HPP

#include <iosfwd>
#include <utility>

#include "orthosmith/integer.hpp"

namespace orthosmith {

// Element of Z[i].  Z[i] is norm-Euclidean, so gcds exist and the Smith
// reduction applies verbatim; division rounds each quotient coordinate to
// the nearest integer, which keeps N(remainder) <= N(divisor)/2.
struct GaussianInteger {
    Integer re;
    Integer im;

    GaussianInteger() : re(0), im(0) {}
    GaussianInteger(Integer real) : re(std::move(real)), im(0) {}
    GaussianInteger(Integer real, Integer imag) : re(std::move(real)), im(std::move(imag)) {}
    GaussianInteger(long real, long imag) : re(real), im(imag) {}

    friend GaussianInteger operator+(const GaussianInteger& a, const GaussianInteger& b) {
        return {a.re + b.re, a.im + b.im};
    }
    friend GaussianInteger operator-(const GaussianInteger& a, const GaussianInteger& b) {
        return {a.re - b.re, a.im - b.im};
    }
    friend GaussianInteger operator-(const GaussianInteger& a) { return {-a.re, -a.im}; }
    friend GaussianInteger operator*(const GaussianInteger& a, const GaussianInteger& b) {
        return {a.re * b.re - a.im * b.im, a.re * b.im + a.im * b.re};
    }
    GaussianInteger& operator+=(const GaussianInteger& o) { re += o.re; im += o.im; return *this; }
    GaussianInteger& operator-=(const GaussianInteger& o) { re -= o.re; im -= o.im; return *this; }
    GaussianInteger& operator*=(const GaussianInteger& o) { *this = *this * o; return *this; }

    friend bool operator==(const GaussianInteger& a, const GaussianInteger& b) {
        return a.re == b.re && a.im == b.im;
    }
    friend bool operator!=(const GaussianInteger& a, const GaussianInteger& b) { return !(a == b); }
};

inline GaussianInteger conj_value(const GaussianInteger& z) { return {z.re, -z.im}; }

inline Integer norm(const GaussianInteger& z) { return z.re * z.re + z.im * z.im; }

inline bool is_zero(const GaussianInteger& z) { return is_zero(z.re) && is_zero(z.im); }

inline bool is_unit(const GaussianInteger& z) { return norm(z) == 1; }

inline Integer norm_measure(const GaussianInteger& z) { return norm(z); }

// q = round(a/w) coordinate-wise, r = a - q*w with norm(r) <= norm(w)/2.
std::pair<GaussianInteger, GaussianInteger> divmod_nearest(const GaussianInteger& a,
                                                           const GaussianInteger& w);

inline GaussianInteger div_round_nearest(const GaussianInteger& a, const GaussianInteger& w) {
    return divmod_nearest(a, w).first;
}

bool ring_divides(const GaussianInteger& d, const GaussianInteger& a);
GaussianInteger divexact(const GaussianInteger& a, const GaussianInteger& d);

// Unit u in {1, i, -1, -i} mapping z to its first-quadrant associate
// (re > 0, im >= 0); exactly one associate of z != 0 lands there.
GaussianInteger canonical_unit_multiplier(const GaussianInteger& z);
GaussianInteger normalize_associate(const GaussianInteger& z);

// Euclidean gcd, first-quadrant normalized.  gcd(0, 0) = 0.
GaussianInteger ring_gcd(GaussianInteger a, GaussianInteger b);

std::ostream& operator<<(std::ostream& os, const GaussianInteger& z);

} // namespace orthosmith

#endif
