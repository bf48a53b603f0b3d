#include "orthosmith/gaussian.hpp"

#include <ostream>

namespace orthosmith {

std::pair<GaussianInteger, GaussianInteger> divmod_nearest(const GaussianInteger& a,
                                                           const GaussianInteger& w) {
    if (is_zero(w)) throw validation_error("Gaussian division by zero");
    // a/w = a*conj(w)/N(w); round both coordinates to nearest.
    const GaussianInteger t = a * conj_value(w);
    const Integer n = norm(w);
    GaussianInteger q(div_round_nearest(t.re, n), div_round_nearest(t.im, n));
    GaussianInteger r = a - q * w;
    return {q, r};
}

bool ring_divides(const GaussianInteger& d, const GaussianInteger& a) {
    if (is_zero(d)) return is_zero(a);
    const GaussianInteger t = a * conj_value(d);
    const Integer n = norm(d);
    return ring_divides(n, t.re) && ring_divides(n, t.im);
}

GaussianInteger divexact(const GaussianInteger& a, const GaussianInteger& d) {
    const GaussianInteger t = a * conj_value(d);
    const Integer n = norm(d);
    return {divexact(t.re, n), divexact(t.im, n)};
}

GaussianInteger canonical_unit_multiplier(const GaussianInteger& z) {
    // Multiplication by i rotates a quarter turn; pick the turn landing in
    // {re > 0, im >= 0}.
    if (sgn(z.re) > 0 && sgn(z.im) >= 0) return {1, 0};
    if (sgn(z.re) <= 0 && sgn(z.im) > 0) return {0, -1};   // -i
    if (sgn(z.re) < 0 && sgn(z.im) <= 0) return {-1, 0};
    return {0, 1};                                         // i
}

GaussianInteger normalize_associate(const GaussianInteger& z) {
    if (is_zero(z)) return z;
    return z * canonical_unit_multiplier(z);
}

GaussianInteger ring_gcd(GaussianInteger a, GaussianInteger b) {
    while (!is_zero(b)) {
        GaussianInteger r = divmod_nearest(a, b).second;
        a = b;
        b = r;
    }
    return normalize_associate(a);
}

std::ostream& operator<<(std::ostream& os, const GaussianInteger& z) {
    os << z.re;
    if (sgn(z.im) >= 0) os << "+" << z.im << "i";
    else os << z.im << "i";
    return os;
}

} // namespace orthosmith
