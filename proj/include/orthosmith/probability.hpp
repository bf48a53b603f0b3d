#ifndef ORTHOSMITH_PROBABILITY_HPP
#define ORTHOSMITH_PROBABILITY_HPP

#include <vector>

#include "orthosmith/gaussian.hpp"
#include "orthosmith/ortho.hpp"

namespace orthosmith {

// One factor of the defining product: ideal norms N(d_i d_j + mR) over N(mR),
// indexed by the (i, j) pair (1-based) it came from.
struct ProbabilityFactor {
    std::size_t i;
    std::size_t j;
    Integer num;
    Integer den;
};

// Exact probability plus the per-(i,j) breakdown; mismatches against the
// brute-force oracles localize to a single factor.
struct ProbabilityReport {
    Rational value;
    std::vector<ProbabilityFactor> factors;
};

// Symmetric ensemble over Z:  prod_{i<=j} gcd(d_i d_j, m) / m.
ProbabilityReport prob_symmetric(const std::vector<Integer>& d, const Integer& m);

// Orthogonal specialization: the truncated product over j <= n-i using the
// Smith form of ell*Q with modulus ell^2.  Agrees with prob_symmetric(d,
// ell^2); the dropped factors are all one.
ProbabilityReport prob_orthogonal(const RationalOrthogonalMatrix& q);

// Symmetric ensemble over Z[i]:  prod_{i<=j} N(gcd(d_i d_j, m)) / m^2.
ProbabilityReport prob_symmetric_gaussian(const std::vector<GaussianInteger>& d,
                                          const Integer& m);

// No symmetry constraint, two Smith chains:  prod_{i,j} gcd(d1_i d2_j, m) / m.
ProbabilityReport prob_asymmetric(const std::vector<Integer>& d1,
                                  const std::vector<Integer>& d2, const Integer& m);

// Hermitian ensemble over Z[i] with complex conjugation: real diagonal block
// prod_i gcd(N(d_i), m) / m times prod_{i<j} N(gcd(conj(d_i) d_j, m)) / m^2.
ProbabilityReport prob_hermitian(const std::vector<GaussianInteger>& d, const Integer& m);

} // namespace orthosmith

#endif
