#ifndef ORTHOSMITH_SMITH_HPP
#define ORTHOSMITH_SMITH_HPP

#include <cstddef>
#include <vector>

#include "orthosmith/matrix.hpp"

namespace orthosmith {

// Smith normal form U*G*V = diag(d) over Z or Z[i], with the determinantal
// ideal generators D_i = d_1 * ... * d_i alongside.  Invariant factors are
// unit-normalized (nonnegative over Z, first-quadrant over Z[i]) so results
// are canonical and directly comparable.
template <typename T>
struct SmithData {
    std::vector<T> d;        // invariant factors, d[i] divides d[i+1]
    Matrix<T> U;             // |det U| = 1
    Matrix<T> V;             // |det V| = 1
    std::vector<T> d_ideal;  // D_i = prod_{k<=i} d_k, normalized; 0 past the rank
};

// Row/column reduction with minimal-norm pivot selection.  After clearing a
// pivot's row and column, the pivot is forced to divide the remaining block
// (adding an offending row back in and re-reducing); the divisibility chain
// then holds by construction.  Each re-reduction strictly shrinks the pivot
// norm, so the loop terminates.
template <typename T>
SmithData<T> smith_normal_form(const Matrix<T>& g) {
    if (!g.is_square() || g.empty())
        throw validation_error("smith_normal_form: matrix must be square and nonempty");
    const std::size_t n = g.rows();

    Matrix<T> a = g;
    Matrix<T> u = Matrix<T>::identity(n);
    Matrix<T> v = Matrix<T>::identity(n);

    auto swap_rows = [&](Matrix<T>& m, std::size_t r1, std::size_t r2) {
        for (std::size_t j = 0; j < n; ++j) std::swap(m(r1, j), m(r2, j));
    };
    auto swap_cols = [&](Matrix<T>& m, std::size_t c1, std::size_t c2) {
        for (std::size_t i = 0; i < n; ++i) std::swap(m(i, c1), m(i, c2));
    };

    for (std::size_t t = 0; t < n; ++t) {
        for (;;) {
            // Minimal-norm nonzero pivot in the trailing block.
            bool found = false;
            std::size_t pr = t, pc = t;
            Integer best;
            for (std::size_t i = t; i < n; ++i)
                for (std::size_t j = t; j < n; ++j) {
                    if (is_zero(a(i, j))) continue;
                    Integer m = norm_measure(a(i, j));
                    if (!found || m < best) {
                        found = true;
                        best = m;
                        pr = i;
                        pc = j;
                    }
                }
            if (!found) {
                t = n;  // trailing block is zero; remaining d are zero
                break;
            }
            if (pr != t) { swap_rows(a, t, pr); swap_rows(u, t, pr); }
            if (pc != t) { swap_cols(a, t, pc); swap_cols(v, t, pc); }

            bool clean = true;
            for (std::size_t i = t + 1; i < n; ++i) {
                if (is_zero(a(i, t))) continue;
                T q = div_round_nearest(a(i, t), a(t, t));
                if (!is_zero(q)) {
                    for (std::size_t j = t; j < n; ++j) a(i, j) -= q * a(t, j);
                    for (std::size_t j = 0; j < n; ++j) u(i, j) -= q * u(t, j);
                }
                if (!is_zero(a(i, t))) clean = false;
            }
            for (std::size_t j = t + 1; j < n; ++j) {
                if (is_zero(a(t, j))) continue;
                T q = div_round_nearest(a(t, j), a(t, t));
                if (!is_zero(q)) {
                    for (std::size_t i = t; i < n; ++i) a(i, j) -= a(i, t) * q;
                    for (std::size_t i = 0; i < n; ++i) v(i, j) -= v(i, t) * q;
                }
                if (!is_zero(a(t, j))) clean = false;
            }
            if (!clean) continue;

            // Pivot must divide the rest of the block, or the chain breaks.
            for (std::size_t i = t + 1; i < n && clean; ++i)
                for (std::size_t j = t + 1; j < n && clean; ++j)
                    if (!ring_divides(a(t, t), a(i, j))) {
                        for (std::size_t jj = t; jj < n; ++jj) a(t, jj) += a(i, jj);
                        for (std::size_t jj = 0; jj < n; ++jj) u(t, jj) += u(i, jj);
                        clean = false;
                    }
            if (clean) break;
        }
        if (t == n) break;
    }

    // Canonical associates; the unit is absorbed into U.
    for (std::size_t t = 0; t < n; ++t) {
        if (is_zero(a(t, t))) continue;
        T unit = canonical_unit_multiplier(a(t, t));
        if (unit != T(1)) {
            for (std::size_t j = 0; j < n; ++j) {
                a(t, j) = unit * a(t, j);
                u(t, j) = unit * u(t, j);
            }
        }
    }

    SmithData<T> out;
    out.d.reserve(n);
    for (std::size_t t = 0; t < n; ++t) out.d.push_back(a(t, t));
    out.U = std::move(u);
    out.V = std::move(v);
    out.d_ideal.reserve(n);
    T prod(1);
    for (std::size_t t = 0; t < n; ++t) {
        prod = prod * out.d[t];
        out.d_ideal.push_back(normalize_associate(prod));
    }
    return out;
}

// gcd of all i-by-i minors, by direct enumeration.  Cross-check oracle for
// SmithData::d_ideal; guarded because the number of minors explodes.
template <typename T>
T determinantal_ideal_bruteforce(const Matrix<T>& g, std::size_t i) {
    if (!g.is_square() || g.empty())
        throw validation_error("determinantal_ideal_bruteforce: matrix must be square and nonempty");
    const std::size_t n = g.rows();
    if (n > 6) throw domain_error("determinantal_ideal_bruteforce: n > 6");
    if (i < 1 || i > n) throw validation_error("determinantal_ideal_bruteforce: index out of range");

    std::vector<std::size_t> rows(i), cols(i);
    for (std::size_t k = 0; k < i; ++k) rows[k] = cols[k] = k;

    auto advance = [n, i](std::vector<std::size_t>& idx) {
        std::size_t k = i;
        while (k-- > 0) {
            if (idx[k] + (i - k) < n + 0) {
                ++idx[k];
                for (std::size_t t = k + 1; t < i; ++t) idx[t] = idx[t - 1] + 1;
                return true;
            }
        }
        return false;
    };

    T g_all(0);
    for (;;) {
        for (std::size_t k = 0; k < i; ++k) cols[k] = k;
        for (;;) {
            Matrix<T> sub(i, i);
            for (std::size_t r = 0; r < i; ++r)
                for (std::size_t c = 0; c < i; ++c) sub(r, c) = g(rows[r], cols[c]);
            g_all = ring_gcd(g_all, det(sub));
            if (!advance(cols)) break;
        }
        if (!advance(rows)) break;
    }
    return g_all;
}

// Generator of d*R + m*R: the reduction of an invariant factor modulo m.
template <typename T>
T smith_mod(const T& d, const Integer& m) {
    if (m <= 0) throw validation_error("smith_mod: modulus must be positive");
    return ring_gcd(d, T(m));
}

} // namespace orthosmith

#endif
