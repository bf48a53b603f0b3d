#include "orthosmith/factor.hpp"

#include "orthosmith/errors.hpp"

namespace orthosmith {

FactoredInteger factorize(const Integer& n) {
    if (n < 1) throw validation_error("factorize: argument must be positive");
    if (n > Integer(1000000000000L)) throw domain_error("factorize: argument exceeds 10^12");

    FactoredInteger out;
    out.value = n;
    std::int64_t m = to_int64(n);
    for (std::int64_t p = 2; p * p <= m; p += (p == 2 ? 1 : 2)) {
        if (m % p) continue;
        unsigned e = 0;
        while (m % p == 0) {
            m /= p;
            ++e;
        }
        out.factors.emplace_back(Integer(p), e);
    }
    if (m > 1) out.factors.emplace_back(Integer(m), 1u);
    return out;
}

bool all_primes_1_mod_4(const FactoredInteger& f) {
    for (const auto& [p, e] : f.factors)
        if (p % 4 != 1) return false;
    return true;
}

} // namespace orthosmith
