#ifndef ORTHOSMITH_VERIFY_HPP
#define ORTHOSMITH_VERIFY_HPP

#include <cstdint>

#include "orthosmith/ortho.hpp"

namespace orthosmith {

enum class IntegerEnsemble { symmetric, asymmetric };
enum class GaussianEnsemble { symmetric, hermitian };
enum class EntryRing { integers, gaussian_integers };

struct SampleConfig {
    std::uint64_t seed = 0;
    std::uint64_t samples = 1;
    Integer k = 1;  // entries drawn uniformly from {1, ..., k}
};

struct McEstimate {
    double mean = 0.0;
    double stderr_value = 0.0;  // sample standard deviation / sqrt(samples)
    std::uint64_t samples = 0;
    Integer hits;    // exact count behind the mean; bit-determinism anchor
    Integer k_used;  // k rounded up to a multiple of level^2
};

struct SampleNResult {
    double mean = 0.0;
    double stderr_value = 0.0;
    std::uint64_t samples = 0;
    bool all_divisible = true;  // every observed count in 2^n n! Z
    Integer divisor;
    Integer k_used;
    std::size_t matrix_count = 0;  // size of the enumerated O_n(level)
};

// Exact fraction of matrices X over Z/mZ in the ensemble with
// G^T X G == 0 mod m, by full enumeration of the state space.
Rational exhaustive_prob(const Matrix<Integer>& g, const Integer& m, IntegerEnsemble ensemble,
                         int threads = 0);

// Same over Z[i]/mZ[i].  Symmetric: G^T X G with X symmetric; Hermitian:
// conjugate-transpose(G) X G with X Hermitian (real diagonal).
Rational exhaustive_prob_gaussian(const Matrix<GaussianInteger>& g, const Integer& m,
                                  GaussianEnsemble ensemble, int threads = 0);

// Monte Carlo estimate of P(Q^T X Q integral) for symmetric X with entries
// uniform on {1..k}; k is rounded up to a multiple of level^2 so the
// reductions are exactly uniform.  Deterministic given the seed.
McEstimate mc_prob(const RationalOrthogonalMatrix& q, const SampleConfig& cfg,
                   EntryRing ring = EntryRing::integers, int threads = 0);

// Empirical N_n(level): per draw, the number of enumerated level-ell
// orthogonal matrices whose conjugation keeps the sample integral.
SampleNResult sample_N(int n, const Integer& ell, const SampleConfig& cfg, int threads = 0);

} // namespace orthosmith

#endif
