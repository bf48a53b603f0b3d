#ifndef ORTHOSMITH_EXPECTATION_HPP
#define ORTHOSMITH_EXPECTATION_HPP

#include <vector>

#include "orthosmith/factor.hpp"
#include "orthosmith/integer.hpp"

namespace orthosmith {

// E[N_2(ell)] = 2^(r+3) / ell^2 when every prime factor of ell is 1 mod 4
// (r = number of distinct primes), zero otherwise.  Requires ell >= 2;
// level one is the signed permutations, which preserve integrality trivially.
Rational expected_N2(const Integer& ell);

// E[N_3(ell)] = (48 / ell^2) * prod_{p | ell} (1 + 1/p) for odd ell, zero
// for even ell.  Requires ell >= 2.
Rational expected_N3(const Integer& ell);

struct FigureRow {
    Integer level;
    Rational expectation;
};

// Rows (ell, E[N_n(ell)]) for all ell in [2, max_level] with nonzero
// expectation; the data behind the log-log scatter plots.
std::vector<FigureRow> figure_series(int n, const Integer& max_level);

// Sum_{ell=2..L} E[N_n(ell)] / (2^n n!), evaluated exactly.
Rational partial_bound_sum(int n, const Integer& L);

// Running values of partial_bound_sum at every ell where a term is added
// (the sum is constant in between).  One pass instead of L passes.
std::vector<std::pair<Integer, Rational>> partial_bound_prefix(int n, const Integer& L);

// --- analytic constants -----------------------------------------------------

// Catalan's constant as an exact rational approximation, |error| < 1e-40.
// Computed by Cohen/Rodriguez-Villegas/Zagier acceleration of the
// alternating series sum (-1)^k/(2k+1)^2, which converges linearly.
Rational catalan_approx();

// pi from Machin's arctangent formula, |error| < 1e-30.
Rational pi_approx();

// Apery's constant zeta(3) by direct summation with the integral-tail
// midpoint correction, |error| < 1e-13.
Rational zeta3_approx();

// 12*G/pi^2 - 1 and 105*zeta(3)/pi^4 - 1, |error| < 1e-12 each.
Rational bound2_rational();
Rational bound3_rational();

// Certified rational lower bound on the limit constant for dimension n:
// strictly below the true constant, within 2e-12 of it.
Rational bound_lower_rational(int n);

struct LimitConstants {
    double bound2;
    double bound3;
};

// Both limit constants as doubles; absolute error below 1e-12.
LimitConstants limit_constants();

} // namespace orthosmith

#endif
