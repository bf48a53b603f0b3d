#include "orthosmith/integer.hpp"

#include <cstddef>

namespace orthosmith {

std::string decimal_string(const Rational& r, std::size_t digits) {
    if (digits == 0) digits = 1;
    if (sgn(r) == 0) return "0";

    const bool negative = sgn(r) < 0;
    Integer a = abs(numerator(r));
    Integer b = denominator(r);

    // Exponent e with 10^e <= a/b < 10^(e+1).
    long e = static_cast<long>(mpz_sizeinbase(a.get_mpz_t(), 10)) -
             static_cast<long>(mpz_sizeinbase(b.get_mpz_t(), 10));
    auto geq_pow10 = [&](long k) {
        // a/b >= 10^k ?
        if (k >= 0) return a >= b * pow_ui(Integer(10), static_cast<unsigned long>(k));
        return a * pow_ui(Integer(10), static_cast<unsigned long>(-k)) >= b;
    };
    while (!geq_pow10(e)) --e;
    while (geq_pow10(e + 1)) ++e;

    // First `digits` significant digits, rounded half away from zero.
    const long shift = static_cast<long>(digits) - 1 - e;
    Integer num = a, den = b;
    if (shift >= 0) num *= pow_ui(Integer(10), static_cast<unsigned long>(shift));
    else den *= pow_ui(Integer(10), static_cast<unsigned long>(-shift));
    Integer scaled = (2 * num + den) / (2 * den);
    std::string s = scaled.get_str();
    if (s.size() > digits) {      // rounding carried into a new leading digit
        s.pop_back();
        ++e;
    }

    std::string out;
    const long d = static_cast<long>(s.size());
    if (e >= d - 1 && e <= 24) {
        out = s + std::string(static_cast<std::size_t>(e - d + 1), '0');
    } else if (e >= 0 && e < d - 1) {
        out = s.substr(0, static_cast<std::size_t>(e + 1)) + "." +
              s.substr(static_cast<std::size_t>(e + 1));
    } else if (e < 0 && e >= -4) {
        out = "0." + std::string(static_cast<std::size_t>(-e - 1), '0') + s;
    } else {
        out = s.substr(0, 1);
        if (d > 1) out += "." + s.substr(1);
        out += "e" + std::to_string(e);
    }
    return negative ? "-" + out : out;
}

} // namespace orthosmith
