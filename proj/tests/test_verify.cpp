#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include <cmath>

#include "orthosmith/probability.hpp"
#include "orthosmith/smith.hpp"
#include "orthosmith/verify.hpp"
#include "oracles.hpp"

using namespace orthosmith;
using oracles::TestRng;

namespace {

Rational rat(long n, long d) { return make_rational(Integer(n), Integer(d)); }

RationalOrthogonalMatrix q5() {
    return rational_orthogonal(Matrix<Rational>{{rat(3, 5), rat(4, 5)}, {rat(4, 5), rat(-3, 5)}});
}

bool within_sigmas(double mean, double target, double se, double sigmas) {
    return std::abs(mean - target) <= sigmas * se;
}

}  // namespace

TEST_CASE("exhaustive probability examples") {
    const Matrix<Integer> g5{{3, 4}, {4, -3}};
    CHECK(exhaustive_prob(g5, Integer(25), IntegerEnsemble::symmetric) == rat(1, 25));

    // G = m * identity: conjugation lands in m^2 Z, always integral mod m
    for (const long m : {2L, 5L, 7L}) {
        const Matrix<Integer> g = Integer(m) * Matrix<Integer>::identity(2);
        CHECK(exhaustive_prob(g, Integer(m), IntegerEnsemble::symmetric) == Rational(1));
    }

    CHECK(exhaustive_prob(Matrix<Integer>{{2, 0}, {0, 3}}, Integer(6),
                          IntegerEnsemble::symmetric) == rat(1, 6));
    CHECK_THROWS_AS(exhaustive_prob(Matrix<Integer>::identity(3), Integer(220),
                                    IntegerEnsemble::symmetric),
                    domain_error);  // 220^6 > 10^7
    CHECK_THROWS_AS(exhaustive_prob(Matrix<Integer>::identity(2), Integer(0),
                                    IntegerEnsemble::symmetric),
                    validation_error);
}

TEST_CASE("gaussian exhaustive probability examples") {
    const Matrix<GaussianInteger> g5 = to_gaussian(Matrix<Integer>{{3, 4}, {4, -3}});
    CHECK(exhaustive_prob_gaussian(g5, Integer(5), GaussianEnsemble::symmetric) == rat(1, 25));

    Matrix<GaussianInteger> id(2, 2);
    id(0, 0) = GaussianInteger(1, 0);
    id(1, 1) = GaussianInteger(1, 0);
    CHECK(exhaustive_prob_gaussian(id, Integer(2), GaussianEnsemble::hermitian) == rat(1, 16));
    CHECK(exhaustive_prob_gaussian(id, Integer(1), GaussianEnsemble::hermitian) == Rational(1));
    CHECK(exhaustive_prob_gaussian(Matrix<GaussianInteger>(2, 2), Integer(3),
                                   GaussianEnsemble::symmetric) == Rational(1));
}

TEST_CASE("monte carlo estimates hit the exact values") {
    const auto q = q5();
    SampleConfig cfg;
    cfg.seed = 1234;
    cfg.samples = 1000000;
    cfg.k = Integer(25000);
    const McEstimate est = mc_prob(q, cfg);
    CHECK(est.k_used == 25000);
    CHECK(within_sigmas(est.mean, 0.04, est.stderr_value, 5.0));

    const McEstimate gauss = mc_prob(q, cfg, EntryRing::gaussian_integers);
    CHECK(within_sigmas(gauss.mean, 1.0 / 625, gauss.stderr_value, 5.0));

    // identity: always integral
    const auto id = rational_orthogonal(Matrix<Rational>::identity(2));
    SampleConfig tiny{7, 1000, Integer(10)};
    const McEstimate one = mc_prob(id, tiny);
    CHECK(one.mean == 1.0);
    CHECK(one.stderr_value == 0.0);

    // an O_3(3) element: probability 1/27
    const auto o3 = enumerate_O3(Integer(3));
    SampleConfig cfg3{99, 1000000, Integer(9000)};
    const McEstimate est3 = mc_prob(o3.front(), cfg3);
    CHECK(within_sigmas(est3.mean, 1.0 / 27, est3.stderr_value, 5.0));
}

TEST_CASE("monte carlo is deterministic and rounds k up") {
    const auto q = q5();
    SampleConfig cfg;
    cfg.seed = 42;
    cfg.samples = 20000;
    cfg.k = Integer(24999);  // not a multiple of 25
    const McEstimate a = mc_prob(q, cfg);
    const McEstimate b = mc_prob(q, cfg);
    CHECK(a.k_used == 25000);
    CHECK(a.hits == b.hits);
    CHECK(a.mean == b.mean);
    CHECK(a.stderr_value == b.stderr_value);
    // explicit thread counts agree with the default
    const McEstimate serial = mc_prob(q, cfg, EntryRing::integers, 1);
    const McEstimate parallel = mc_prob(q, cfg, EntryRing::integers, 4);
    CHECK(serial.hits == a.hits);
    CHECK(parallel.hits == a.hits);
}

TEST_CASE("sample_N matches the expectation formulas") {
    SampleConfig cfg{2024, 20000, Integer(25000)};
    const SampleNResult r2 = sample_N(2, Integer(5), cfg);
    CHECK(r2.matrix_count == 16);
    CHECK(r2.all_divisible);
    CHECK(r2.divisor == 8);
    CHECK(within_sigmas(r2.mean, 0.64, r2.stderr_value, 5.0));

    SampleConfig cfg3{2025, 5000, Integer(9000)};
    const SampleNResult r3 = sample_N(3, Integer(3), cfg3);
    CHECK(r3.matrix_count == 192);
    CHECK(r3.all_divisible);
    CHECK(r3.divisor == 48);
    CHECK(within_sigmas(r3.mean, 64.0 / 9, r3.stderr_value, 5.0));

    // even level: no matrices at all
    SampleConfig cfg2{1, 100, Integer(16)};
    const SampleNResult none = sample_N(3, Integer(2), cfg2);
    CHECK(none.matrix_count == 0);
    CHECK(none.mean == 0.0);
    CHECK(none.all_divisible);

    CHECK_THROWS_AS(sample_N(4, Integer(3), cfg2), domain_error);
}

TEST_CASE("oracle equivalence on a random integer corpus") {
    TestRng rng(31);
    int done = 0;
    while (done < 25) {
        const std::size_t n = 1 + static_cast<std::size_t>(rng.range(0, 2));
        Matrix<Integer> g(n, n);
        for (std::size_t i = 0; i < n; ++i)
            for (std::size_t j = 0; j < n; ++j) g(i, j) = Integer(rng.range(-9, 9));
        if (is_zero(det(g))) continue;
        const Integer m(rng.range(2, n == 2 ? 12 : 8));
        const auto d = smith_normal_form(g).d;
        CHECK(exhaustive_prob(g, m, IntegerEnsemble::symmetric) == prob_symmetric(d, m).value);
        if (n == 2)
            CHECK(exhaustive_prob(g, m, IntegerEnsemble::asymmetric) ==
                  prob_asymmetric(d, d, m).value);
        ++done;
    }
}

TEST_CASE("oracle equivalence on a random gaussian corpus") {
    TestRng rng(32);
    int done = 0;
    while (done < 15) {
        const std::size_t n = 2;
        Matrix<GaussianInteger> g(n, n);
        for (std::size_t i = 0; i < n; ++i)
            for (std::size_t j = 0; j < n; ++j)
                g(i, j) = GaussianInteger(Integer(rng.range(-4, 4)), Integer(rng.range(-4, 4)));
        if (is_zero(det(g))) continue;
        const Integer m(rng.range(2, 4));
        const auto d = smith_normal_form(g).d;
        CHECK(exhaustive_prob_gaussian(g, m, GaussianEnsemble::symmetric) ==
              prob_symmetric_gaussian(d, m).value);
        CHECK(exhaustive_prob_gaussian(g, m, GaussianEnsemble::hermitian) ==
              prob_hermitian(d, m).value);
        ++done;
    }
}

TEST_CASE("exhaustive counts are thread-count independent") {
    const Matrix<Integer> g{{3, 4}, {4, -3}};
    const Rational serial = exhaustive_prob(g, Integer(25), IntegerEnsemble::symmetric, 1);
    const Rational parallel = exhaustive_prob(g, Integer(25), IntegerEnsemble::symmetric, 8);
    CHECK(serial == parallel);
}
