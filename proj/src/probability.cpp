#include "orthosmith/probability.hpp"

#include "orthosmith/smith.hpp"

namespace orthosmith {

namespace {

void check_modulus(const Integer& m) {
    if (m < 1) throw validation_error("probability: modulus must be positive");
}

ProbabilityReport finish(std::vector<ProbabilityFactor> factors) {
    ProbabilityReport r;
    r.value = Rational(1);
    for (const auto& f : factors) r.value *= make_rational(f.num, f.den);
    r.factors = std::move(factors);
    return r;
}

}  // namespace

ProbabilityReport prob_symmetric(const std::vector<Integer>& d, const Integer& m) {
    check_modulus(m);
    if (d.empty()) throw validation_error("prob_symmetric: empty invariant factor list");
    const std::size_t n = d.size();
    std::vector<ProbabilityFactor> fs;
    fs.reserve(n * (n + 1) / 2);
    for (std::size_t i = 0; i < n; ++i)
        for (std::size_t j = i; j < n; ++j)
            fs.push_back({i + 1, j + 1, gcd(d[i] * d[j], m), m});
    return finish(std::move(fs));
}

ProbabilityReport prob_orthogonal(const RationalOrthogonalMatrix& q) {
    if (!is_scaled_orthogonal(q.G, q.level))
        throw validation_error("prob_orthogonal: matrix is not orthogonal at its level");
    const std::size_t n = q.G.rows();
    const Integer m = q.level * q.level;
    const SmithData<Integer> snf = smith_normal_form(q.G);

    std::vector<ProbabilityFactor> fs;
    for (std::size_t i = 1; i <= n / 2; ++i)
        for (std::size_t j = i; j <= n - i; ++j)
            fs.push_back({i, j, snf.d[i - 1] * snf.d[j - 1], m});
    return finish(std::move(fs));
}

ProbabilityReport prob_symmetric_gaussian(const std::vector<GaussianInteger>& d,
                                          const Integer& m) {
    check_modulus(m);
    if (d.empty()) throw validation_error("prob_symmetric_gaussian: empty invariant factor list");
    const std::size_t n = d.size();
    const GaussianInteger mz(m);
    std::vector<ProbabilityFactor> fs;
    fs.reserve(n * (n + 1) / 2);
    for (std::size_t i = 0; i < n; ++i)
        for (std::size_t j = i; j < n; ++j)
            fs.push_back({i + 1, j + 1, norm(ring_gcd(d[i] * d[j], mz)), m * m});
    return finish(std::move(fs));
}

ProbabilityReport prob_asymmetric(const std::vector<Integer>& d1,
                                  const std::vector<Integer>& d2, const Integer& m) {
    check_modulus(m);
    if (d1.empty() || d1.size() != d2.size())
        throw validation_error("prob_asymmetric: invariant factor lists must be nonempty and equal length");
    const std::size_t n = d1.size();
    std::vector<ProbabilityFactor> fs;
    fs.reserve(n * n);
    for (std::size_t i = 0; i < n; ++i)
        for (std::size_t j = 0; j < n; ++j)
            fs.push_back({i + 1, j + 1, gcd(d1[i] * d2[j], m), m});
    return finish(std::move(fs));
}

ProbabilityReport prob_hermitian(const std::vector<GaussianInteger>& d, const Integer& m) {
    check_modulus(m);
    if (d.empty()) throw validation_error("prob_hermitian: empty invariant factor list");
    const std::size_t n = d.size();
    const GaussianInteger mz(m);
    std::vector<ProbabilityFactor> fs;
    // Diagonal entries live in the fixed ring Z: conj(d_i)*d_i = N(d_i).
    for (std::size_t i = 0; i < n; ++i)
        fs.push_back({i + 1, i + 1, gcd(norm(d[i]), m), m});
    for (std::size_t i = 0; i < n; ++i)
        for (std::size_t j = i + 1; j < n; ++j)
            fs.push_back({i + 1, j + 1, norm(ring_gcd(conj_value(d[i]) * d[j], mz)), m * m});
    return finish(std::move(fs));
}

} // namespace orthosmith
