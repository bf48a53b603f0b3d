#include "orthosmith/expectation.hpp"

#include "orthosmith/errors.hpp"

namespace orthosmith {

namespace {

void check_dim(int n) {
    if (n != 2 && n != 3) throw domain_error("expectation: dimension must be 2 or 3");
}

// Exact rational accumulator that keeps the running denominator as an lcm
// instead of reducing after every addition; one canonicalization at the end.
class RationalSum {
public:
    // adds p/q with q > 0
    void add(const Integer& p, const Integer& q) {
        const Integer g = gcd(den_, q);
        const Integer scale = divexact(q, g);
        num_ = num_ * scale + p * divexact(den_, g);
        den_ *= scale;
    }

    Rational value() const { return make_rational(num_, den_); }

private:
    Integer num_{0};
    Integer den_{1};
};

// Nonzero expectation terms as (num, den) pairs; zero signalled by num = 0.
void expectation_term(int n, const Integer& ell, Integer& num, Integer& den) {
    const FactoredInteger f = factorize(ell);
    if (n == 2) {
        if (!all_primes_1_mod_4(f)) {
            num = 0;
            return;
        }
        num = pow_ui(Integer(2), static_cast<unsigned long>(f.prime_count() + 3));
        den = ell * ell;
        return;
    }
    if (ell % 2 == 0) {
        num = 0;
        return;
    }
    num = 48;
    den = ell * ell;
    for (const auto& [p, e] : f.factors) {
        num *= p + 1;
        den *= p;
    }
}

}  // namespace

Rational expected_N2(const Integer& ell) {
    if (ell < 2) throw domain_error("expected_N2: level must be at least 2");
    Integer num, den;
    expectation_term(2, ell, num, den);
    if (is_zero(num)) return Rational(0);
    return make_rational(num, den);
}

Rational expected_N3(const Integer& ell) {
    if (ell < 2) throw domain_error("expected_N3: level must be at least 2");
    Integer num, den;
    expectation_term(3, ell, num, den);
    if (is_zero(num)) return Rational(0);
    return make_rational(num, den);
}

std::vector<FigureRow> figure_series(int n, const Integer& max_level) {
    check_dim(n);
    if (max_level < 2) throw domain_error("figure_series: max level must be at least 2");
    std::vector<FigureRow> rows;
    for (Integer ell = 2; ell <= max_level; ++ell) {
        Integer num, den;
        expectation_term(n, ell, num, den);
        if (is_zero(num)) continue;
        rows.push_back({ell, make_rational(num, den)});
    }
    return rows;
}

Rational partial_bound_sum(int n, const Integer& L) {
    check_dim(n);
    if (L < 2) throw domain_error("partial_bound_sum: limit must be at least 2");
    const Integer divisor = (n == 2) ? Integer(8) : Integer(48);
    RationalSum sum;
    for (Integer ell = 2; ell <= L; ++ell) {
        Integer num, den;
        expectation_term(n, ell, num, den);
        if (is_zero(num)) continue;
        sum.add(num, den * divisor);
    }
    return sum.value();
}

std::vector<std::pair<Integer, Rational>> partial_bound_prefix(int n, const Integer& L) {
    check_dim(n);
    if (L < 2) throw domain_error("partial_bound_prefix: limit must be at least 2");
    const Integer divisor = (n == 2) ? Integer(8) : Integer(48);
    RationalSum sum;
    std::vector<std::pair<Integer, Rational>> out;
    for (Integer ell = 2; ell <= L; ++ell) {
        Integer num, den;
        expectation_term(n, ell, num, den);
        if (is_zero(num)) continue;
        sum.add(num, den * divisor);
        out.emplace_back(ell, sum.value());
    }
    return out;
}

Rational catalan_approx() {
    // Accelerated evaluation of sum_{k>=0} (-1)^k / (2k+1)^2.  With n terms
    // the error is below 2 * (3 + sqrt(8))^(-n); n = 60 leaves < 1e-45.
    const long n = 60;
    Integer u0 = 2, u1 = 6;  // (3+sqrt8)^k + (3-sqrt8)^k
    for (long k = 2; k <= n; ++k) {
        Integer u = 6 * u1 - u0;
        u0 = u1;
        u1 = u;
    }
    const Integer dd = divexact(u1, Integer(2));

    Rational b(-1), c(-dd), s(0);
    for (long k = 0; k < n; ++k) {
        c = b - c;
        const Integer odd = 2 * k + 1;
        s += c / Rational(odd * odd);
        b *= make_rational(Integer(2 * (k + n) * (k - n)), Integer((2 * k + 1) * (k + 1)));
    }
    return s / Rational(dd);
}

Rational pi_approx() {
    // Machin: pi = 16 atan(1/5) - 4 atan(1/239); alternating series, so the
    // truncation error is below the first omitted term.
    auto atan_inv = [](long x, long terms) {
        RationalSum s;
        Integer xp(x);  // x^(2k+1)
        const Integer x2 = Integer(x) * Integer(x);
        for (long k = 0; k < terms; ++k) {
            s.add(Integer(k % 2 ? -1 : 1), Integer(2 * k + 1) * xp);
            xp *= x2;
        }
        return s.value();
    };
    return Rational(16) * atan_inv(5, 25) - Rational(4) * atan_inv(239, 8);
}

Rational zeta3_approx() {
    // Direct summation to N with the tail bracketed by integrals:
    // 1/(2(N+1)^2) <= tail <= 1/(2N^2); adding the midpoint leaves an error
    // below 1/(2N^3).
    const long N = 20000;
    RationalSum s;
    for (long k = 1; k <= N; ++k) {
        const Integer kk(k);
        s.add(Integer(1), kk * kk * kk);
    }
    const Integer n2 = Integer(N) * Integer(N);
    const Integer m2 = Integer(N + 1) * Integer(N + 1);
    s.add(n2 + m2, 4 * n2 * m2);
    return s.value();
}

Rational bound2_rational() {
    const Rational pi = pi_approx();
    return Rational(12) * catalan_approx() / (pi * pi) - Rational(1);
}

Rational bound3_rational() {
    const Rational pi = pi_approx();
    const Rational pi4 = pi * pi * pi * pi;
    return Rational(105) * zeta3_approx() / pi4 - Rational(1);
}

Rational bound_lower_rational(int n) {
    check_dim(n);
    const Rational r = (n == 2) ? bound2_rational() : bound3_rational();
    // Strictly below the true constant: back off by the error budget and
    // truncate to 18 decimal digits (truncation only decreases).
    const Integer scale = pow_ui(Integer(10), 18);
    const Rational backed = r - make_rational(Integer(1), scale / 1000000);  // 1e-12
    Integer floor_scaled;
    mpz_fdiv_q(floor_scaled.get_mpz_t(), Integer(numerator(backed) * scale).get_mpz_t(),
               denominator(backed).get_mpz_t());
    return make_rational(floor_scaled, scale);
}

LimitConstants limit_constants() {
    return {to_double(bound2_rational()), to_double(bound3_rational())};
}

} // namespace orthosmith
