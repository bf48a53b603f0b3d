#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include "orthosmith/matrix.hpp"
#include "oracles.hpp"

using namespace orthosmith;
using oracles::TestRng;

namespace {

Integer random_integer(TestRng& rng, int words) {
    Integer v(0);
    for (int i = 0; i < words; ++i) {
        v <<= 64;
        v += Integer(mpz_class(std::to_string(rng.next())));
    }
    if (rng.next() & 1) v = -v;
    return v;
}

GaussianInteger random_gaussian(TestRng& rng, std::int64_t bound) {
    return {Integer(rng.range(-bound, bound)), Integer(rng.range(-bound, bound))};
}

}  // namespace

TEST_CASE("integer arithmetic properties") {
    TestRng rng(1);
    for (int trial = 0; trial < 200; ++trial) {
        const Integer a = random_integer(rng, 8);  // up to 512 bits
        const Integer b = random_integer(rng, 8);
        const Integer c = random_integer(rng, 8);
        CHECK((a * b) * c == a * (b * c));
        const Integer g = gcd(a, b);
        if (!is_zero(g)) {
            CHECK(ring_divides(g, a));
            CHECK(ring_divides(g, b));
        }
    }
}

TEST_CASE("nearest division remainder bound") {
    TestRng rng(2);
    for (int trial = 0; trial < 2000; ++trial) {
        const Integer a = random_integer(rng, 2);
        Integer b = random_integer(rng, 1);
        if (is_zero(b)) b = 1;
        const Integer q = div_round_nearest(a, b);
        const Integer r = a - q * b;
        CHECK(2 * abs(r) <= abs(b));
    }
}

TEST_CASE("rational canonical form") {
    const Rational r = make_rational(Integer(6), Integer(-4));
    CHECK(numerator(r) == -3);
    CHECK(denominator(r) == 2);
    CHECK_THROWS_AS(make_rational(Integer(1), Integer(0)), validation_error);
    CHECK(decimal_string(make_rational(Integer(1), Integer(25)), 3) == "0.0400");
    CHECK(decimal_string(make_rational(Integer(16), Integer(25)), 2) == "0.64");
    CHECK(decimal_string(Rational(0)) == "0");
    CHECK(decimal_string(make_rational(Integer(-1), Integer(3)), 4) == "-0.3333");
}

TEST_CASE("gaussian euclidean division") {
    TestRng rng(3);
    for (int trial = 0; trial < 100000; ++trial) {
        const GaussianInteger a = random_gaussian(rng, 1000000);
        GaussianInteger w = random_gaussian(rng, 1000000);
        if (is_zero(w)) w = {1, 0};
        const auto [q, r] = divmod_nearest(a, w);
        CHECK(a == q * w + r);
        CHECK(norm(r) < norm(w));
    }
}

TEST_CASE("gaussian gcd divides both and is canonical") {
    TestRng rng(4);
    for (int trial = 0; trial < 2000; ++trial) {
        const GaussianInteger a = random_gaussian(rng, 5000);
        const GaussianInteger b = random_gaussian(rng, 5000);
        const GaussianInteger g = ring_gcd(a, b);
        if (is_zero(g)) {
            CHECK(is_zero(a));
            CHECK(is_zero(b));
            continue;
        }
        CHECK(ring_divides(g, a));
        CHECK(ring_divides(g, b));
        CHECK(sgn(g.re) > 0);
        CHECK(sgn(g.im) >= 0);
        CHECK(divexact(a, g) * g == a);
    }
    CHECK(ring_gcd(GaussianInteger(1, 1), GaussianInteger(2, 0)) == GaussianInteger(1, 1));
    CHECK(ring_gcd(GaussianInteger(0, -25), GaussianInteger(0, 0)) == GaussianInteger(25, 0));
}

TEST_CASE("matrix transpose and product identities") {
    TestRng rng(5);
    for (int trial = 0; trial < 50; ++trial) {
        const std::size_t n = 2 + static_cast<std::size_t>(rng.range(0, 3));
        Matrix<Integer> a(n, n), b(n, n);
        for (std::size_t i = 0; i < n; ++i)
            for (std::size_t j = 0; j < n; ++j) {
                a(i, j) = Integer(rng.range(-50, 50));
                b(i, j) = Integer(rng.range(-50, 50));
            }
        CHECK(a.transpose().transpose() == a);
        CHECK((a * b).transpose() == b.transpose() * a.transpose());
    }
}

TEST_CASE("determinant examples") {
    CHECK(det(Matrix<Integer>{{3, 4}, {4, -3}}) == -25);
    CHECK(det(Matrix<Integer>::identity(3)) == 1);
    CHECK_THROWS_AS(det(Matrix<Integer>(2, 3)), validation_error);
    CHECK(det(Matrix<Integer>(3, 3)) == 0);
}

TEST_CASE("determinant matches cofactor expansion on random matrices") {
    TestRng rng(6);
    for (int trial = 0; trial < 50; ++trial) {
        Matrix<Integer> m(4, 4);
        for (std::size_t i = 0; i < 4; ++i)
            for (std::size_t j = 0; j < 4; ++j) m(i, j) = Integer(rng.range(-1000, 1000));
        CHECK(det(m) == oracles::det_cofactor(m));
    }
}

TEST_CASE("gaussian determinant matches cofactor expansion") {
    TestRng rng(7);
    for (int trial = 0; trial < 50; ++trial) {
        Matrix<GaussianInteger> m(3, 3);
        for (std::size_t i = 0; i < 3; ++i)
            for (std::size_t j = 0; j < 3; ++j) m(i, j) = random_gaussian(rng, 30);
        CHECK(det(m) == oracles::det_cofactor(m));
    }
}

TEST_CASE("scaled orthogonality checks") {
    CHECK(is_scaled_orthogonal(Matrix<Integer>{{3, 4}, {4, -3}}, Integer(5)));
    CHECK(is_scaled_orthogonal(Matrix<Integer>::identity(2), Integer(1)));
    CHECK_FALSE(is_scaled_orthogonal(Matrix<Integer>{{1, 1}, {0, 1}}, Integer(1)));
    CHECK_FALSE(is_scaled_orthogonal(Matrix<Integer>{{3, 4}, {4, -3}}, Integer(4)));
    CHECK_THROWS_AS(is_scaled_orthogonal(Matrix<Integer>{{3, 4}, {4, -3}}, Integer(0)),
                    validation_error);
}
