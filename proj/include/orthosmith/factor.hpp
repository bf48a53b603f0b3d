#ifndef ORTHOSMITH_FACTOR_HPP
#define ORTHOSMITH_FACTOR_HPP

#include <cstdint>
#include <vector>

#include "orthosmith/integer.hpp"

namespace orthosmith {

// Prime factorization with strictly increasing primes.
struct FactoredInteger {
    Integer value;
    std::vector<std::pair<Integer, unsigned>> factors;

    // Number of distinct prime factors (the r in the counting formulas).
    std::size_t prime_count() const { return factors.size(); }
};

// Trial division up to sqrt(n).  Desk scale: guarded at 10^12 so a single
// call never stalls the process.
FactoredInteger factorize(const Integer& n);

// Every prime factor congruent to 1 mod 4 (vacuously true for n = 1).
bool all_primes_1_mod_4(const FactoredInteger& f);

} // namespace orthosmith

#endif
