#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include "orthosmith/ortho.hpp"
#include "orthosmith/smith.hpp"
#include "oracles.hpp"

using namespace orthosmith;
using oracles::TestRng;

namespace {

template <typename T>
void check_smith_contract(const Matrix<T>& g) {
    const std::size_t n = g.rows();
    const SmithData<T> s = smith_normal_form(g);

    Matrix<T> diag(n, n);
    for (std::size_t i = 0; i < n; ++i) diag(i, i) = s.d[i];
    CHECK(s.U * g * s.V == diag);
    CHECK(norm_measure(det(s.U)) == 1);
    CHECK(norm_measure(det(s.V)) == 1);

    for (std::size_t i = 0; i + 1 < n; ++i) CHECK(ring_divides(s.d[i], s.d[i + 1]));

    // product of factor norms = |det| (norms over Z[i])
    Integer prod(1);
    for (const auto& v : s.d) prod *= norm_measure(v);
    CHECK(prod == norm_measure(det(g)));

    // canonical associates
    for (const auto& v : s.d) CHECK(normalize_associate(v) == v);
    for (const auto& v : s.d_ideal) CHECK(normalize_associate(v) == v);

    // determinantal ideals against the minor-gcd oracle
    if (n <= 5) {
        for (std::size_t i = 1; i <= n; ++i)
            CHECK(s.d_ideal[i - 1] == determinantal_ideal_bruteforce(g, i));
    }
}

}  // namespace

TEST_CASE("smith normal form of the worked 2x2 example") {
    const Matrix<Integer> g{{3, 4}, {4, -3}};  // 5 * Q
    const auto s = smith_normal_form(g);
    CHECK(s.d == std::vector<Integer>{1, 25});
    CHECK(s.d_ideal == std::vector<Integer>{1, 25});
    check_smith_contract(g);
}

TEST_CASE("smith normal form of the worked 2x2 example over Z[i]") {
    const Matrix<GaussianInteger> g{{GaussianInteger(3, 0), GaussianInteger(4, 0)},
                                    {GaussianInteger(4, 0), GaussianInteger(-3, 0)}};
    const auto s = smith_normal_form(g);
    CHECK(s.d == std::vector<GaussianInteger>{GaussianInteger(1, 0), GaussianInteger(25, 0)});
    check_smith_contract(g);
}

TEST_CASE("smith normal form basics") {
    CHECK(smith_normal_form(Matrix<Integer>::identity(3)).d == std::vector<Integer>{1, 1, 1});
    CHECK(smith_normal_form(Matrix<Integer>{{2, 0}, {0, 3}}).d == std::vector<Integer>{1, 6});
    CHECK(smith_normal_form(Matrix<Integer>(2, 2)).d == std::vector<Integer>{0, 0});
    CHECK(smith_normal_form(Matrix<Integer>(2, 2)).d_ideal == std::vector<Integer>{0, 0});
    // singular but nonzero: trailing factor is zero
    CHECK(smith_normal_form(Matrix<Integer>{{1, 2}, {2, 4}}).d == std::vector<Integer>{1, 0});
    CHECK_THROWS_AS(smith_normal_form(Matrix<Integer>(2, 3)), validation_error);
}

TEST_CASE("determinantal ideal brute force") {
    const Matrix<Integer> g{{3, 4}, {4, -3}};
    CHECK(determinantal_ideal_bruteforce(g, 1) == 1);
    CHECK(determinantal_ideal_bruteforce(g, 2) == 25);
    CHECK(determinantal_ideal_bruteforce(Matrix<Integer>(2, 2), 1) == 0);
    const Matrix<Integer> d3{{4, 0, 0}, {0, 6, 0}, {0, 0, 10}};
    CHECK(determinantal_ideal_bruteforce(d3, 2) == 4);  // gcd(24, 40, 60)
    CHECK_THROWS_AS(determinantal_ideal_bruteforce(Matrix<Integer>::identity(7), 1), domain_error);
    CHECK_THROWS_AS(determinantal_ideal_bruteforce(g, 0), validation_error);
    CHECK_THROWS_AS(determinantal_ideal_bruteforce(g, 3), validation_error);
}

TEST_CASE("smith_mod reductions") {
    CHECK(smith_mod(Integer(25), Integer(25)) == 25);
    CHECK(smith_mod(Integer(6), Integer(4)) == 2);
    CHECK(smith_mod(GaussianInteger(1, 1), Integer(2)) == GaussianInteger(1, 1));
    CHECK_THROWS_AS(smith_mod(Integer(6), Integer(0)), validation_error);
}

TEST_CASE("smith contract on random integer matrices") {
    TestRng rng(11);
    for (int trial = 0; trial < 60; ++trial) {
        const std::size_t n = 1 + static_cast<std::size_t>(rng.range(0, 4));
        Matrix<Integer> g(n, n);
        for (std::size_t i = 0; i < n; ++i)
            for (std::size_t j = 0; j < n; ++j) g(i, j) = Integer(rng.range(-9, 9));
        check_smith_contract(g);
    }
}

TEST_CASE("smith contract on random gaussian matrices") {
    TestRng rng(12);
    for (int trial = 0; trial < 40; ++trial) {
        const std::size_t n = 1 + static_cast<std::size_t>(rng.range(0, 3));
        Matrix<GaussianInteger> g(n, n);
        for (std::size_t i = 0; i < n; ++i)
            for (std::size_t j = 0; j < n; ++j)
                g(i, j) = GaussianInteger(Integer(rng.range(-6, 6)), Integer(rng.range(-6, 6)));
        check_smith_contract(g);
    }
}

TEST_CASE("structure of scaled-orthogonal smith forms") {
    // pairing d_i d_{n-i+1} = ell^2 and the (1, ell, ell^2) shape for n = 3;
    // the full ranges run in the acceptance suite.
    for (const long ell : {5L, 13L, 25L}) {
        for (const auto& rom : enumerate_O2(Integer(ell))) {
            const auto s = smith_normal_form(rom.G);
            CHECK(s.d[0] * s.d[1] == Integer(ell) * Integer(ell));
            CHECK(s.d == std::vector<Integer>{1, Integer(ell) * Integer(ell)});
        }
    }
    for (const long ell : {1L, 3L, 5L}) {
        const Integer l2 = Integer(ell) * Integer(ell);
        for (const auto& rom : enumerate_O3(Integer(ell))) {
            const auto s = smith_normal_form(rom.G);
            CHECK(s.d == std::vector<Integer>{1, Integer(ell), l2});
            CHECK(s.d[0] * s.d[2] == l2);
            CHECK(s.d[1] * s.d[1] == l2);
            // duality with i = 0 and i = 1 (D_0 = Z)
            CHECK(s.d_ideal[2] == Integer(ell) * l2);
            CHECK(s.d_ideal[1] == Integer(ell) * s.d_ideal[0]);
        }
    }
}

TEST_CASE("invariant factors reduce consistently modulo the level square") {
    for (const auto& rom : enumerate_O2(Integer(13))) {
        const auto s = smith_normal_form(rom.G);
        const Integer m = rom.level * rom.level;
        CHECK(smith_mod(s.d[0], m) == gcd(s.d[0], m));
        CHECK(smith_mod(s.d[1], m) == Integer(169));
    }
}
