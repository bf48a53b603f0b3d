#include "orthosmith/verify.hpp"

#include <cmath>
#include <thread>
#include <vector>

#include "orthosmith/rng.hpp"

namespace orthosmith {

namespace {

constexpr std::int64_t kStateSpaceLimit = 10000000;  // 10^7 enumerated states

int resolve_threads(int threads) {
    if (threads > 0) return threads;
    const unsigned hw = std::thread::hardware_concurrency();
    return hw ? static_cast<int>(hw) : 1;
}

// Split [0, total) into chunks; fn(worker, lo, hi) must only touch
// worker-private state so the merge is order-independent.
template <typename Fn>
void parallel_ranges(std::uint64_t total, int threads, Fn&& fn) {
    const int t = resolve_threads(threads);
    if (t <= 1 || total < 65536) {
        fn(0, 0, total);
        return;
    }
    const std::uint64_t chunk = (total + t - 1) / t;
    std::vector<std::thread> pool;
    for (int w = 0; w < t; ++w) {
        const std::uint64_t lo = std::min<std::uint64_t>(w * chunk, total);
        const std::uint64_t hi = std::min<std::uint64_t>(lo + chunk, total);
        if (lo >= hi) break;
        pool.emplace_back([w, lo, hi, &fn] { fn(w, lo, hi); });
    }
    for (auto& th : pool) th.join();
}

std::int64_t mod_reduce(const Integer& v, std::int64_t m) {
    Integer r;
    const Integer mm(m);
    mpz_mod(r.get_mpz_t(), v.get_mpz_t(), mm.get_mpz_t());
    return to_int64(r);
}

std::vector<std::int64_t> residues_of(const Matrix<Integer>& g, std::int64_t m) {
    std::vector<std::int64_t> out(g.rows() * g.cols());
    for (std::size_t i = 0; i < g.rows(); ++i)
        for (std::size_t j = 0; j < g.cols(); ++j) out[i * g.cols() + j] = mod_reduce(g(i, j), m);
    return out;
}

// G^T X G == 0 mod m, all entries reduced.  Entries are < m <= 2^30, so the
// per-term reductions keep every intermediate inside int64.
bool gtxg_zero(const std::vector<std::int64_t>& g, const std::vector<std::int64_t>& x,
               std::size_t n, std::int64_t m, std::vector<std::int64_t>& t) {
    for (std::size_t i = 0; i < n; ++i)
        for (std::size_t j = 0; j < n; ++j) {
            std::int64_t acc = 0;
            for (std::size_t k = 0; k < n; ++k) acc += x[i * n + k] * g[k * n + j] % m;
            t[i * n + j] = acc % m;
        }
    for (std::size_t i = 0; i < n; ++i)
        for (std::size_t j = 0; j < n; ++j) {
            std::int64_t acc = 0;
            for (std::size_t k = 0; k < n; ++k) acc += g[k * n + i] * t[k * n + j] % m;
            if (acc % m != 0) return false;
        }
    return true;
}

// Complex variant over Z[i]/m.  conj_left selects G^tau (conjugate
// transpose) as the left factor instead of G^T.
bool gtxg_zero_gauss(const std::vector<std::int64_t>& gre, const std::vector<std::int64_t>& gim,
                     const std::vector<std::int64_t>& xre, const std::vector<std::int64_t>& xim,
                     std::size_t n, std::int64_t m, bool conj_left,
                     std::vector<std::int64_t>& tre, std::vector<std::int64_t>& tim) {
    for (std::size_t i = 0; i < n; ++i)
        for (std::size_t j = 0; j < n; ++j) {
            std::int64_t are = 0, aim = 0;
            for (std::size_t k = 0; k < n; ++k) {
                const std::int64_t xr = xre[i * n + k], xi = xim[i * n + k];
                const std::int64_t gr = gre[k * n + j], gi = gim[k * n + j];
                are += (xr * gr - xi * gi) % m;
                aim += (xr * gi + xi * gr) % m;
            }
            tre[i * n + j] = ((are % m) + m) % m;
            tim[i * n + j] = ((aim % m) + m) % m;
        }
    for (std::size_t i = 0; i < n; ++i)
        for (std::size_t j = 0; j < n; ++j) {
            std::int64_t are = 0, aim = 0;
            for (std::size_t k = 0; k < n; ++k) {
                const std::int64_t gr = gre[k * n + i];
                std::int64_t gi = gim[k * n + i];
                if (conj_left && gi) gi = m - gi;
                const std::int64_t xr = tre[k * n + j], xi = tim[k * n + j];
                are += (gr * xr - gi * xi) % m;
                aim += (gr * xi + gi * xr) % m;
            }
            if (((are % m) + m) % m != 0) return false;
            if (((aim % m) + m) % m != 0) return false;
        }
    return true;
}

void check_modulus_small(const Integer& m) {
    if (m < 1) throw validation_error("verify: modulus must be positive");
    if (m > Integer(std::int64_t(1) << 30)) throw domain_error("verify: modulus exceeds 2^30");
}

Integer state_count(const Integer& m, std::size_t slots) {
    Integer total = pow_ui(m, static_cast<unsigned long>(slots));
    if (total > kStateSpaceLimit) throw domain_error("verify: state space exceeds 10^7");
    return total;
}

double stderr_from_moments(std::uint64_t s, double sum, double sumsq) {
    if (s < 2) return 0.0;
    const double mean = sum / static_cast<double>(s);
    double var = (sumsq - static_cast<double>(s) * mean * mean) / static_cast<double>(s - 1);
    if (var < 0) var = 0;  // rounding guard
    return std::sqrt(var / static_cast<double>(s));
}

}  // namespace

Rational exhaustive_prob(const Matrix<Integer>& gmat, const Integer& m, IntegerEnsemble ensemble,
                         int threads) {
    if (!gmat.is_square() || gmat.empty())
        throw validation_error("exhaustive_prob: matrix must be square and nonempty");
    check_modulus_small(m);
    const std::size_t n = gmat.rows();
    const std::int64_t mm = to_int64(m);

    std::vector<std::pair<std::size_t, std::size_t>> slots;
    for (std::size_t i = 0; i < n; ++i)
        for (std::size_t j = (ensemble == IntegerEnsemble::symmetric ? i : 0); j < n; ++j)
            slots.emplace_back(i, j);

    const Integer total_big = state_count(m, slots.size());
    const std::uint64_t total = static_cast<std::uint64_t>(to_int64(total_big));
    const std::vector<std::int64_t> g = residues_of(gmat, mm);
    const bool sym = ensemble == IntegerEnsemble::symmetric;

    std::vector<std::uint64_t> hits_by_worker(resolve_threads(threads), 0);
    parallel_ranges(total, threads, [&](int worker, std::uint64_t lo, std::uint64_t hi) {
        std::vector<std::int64_t> digits(slots.size(), 0);
        std::vector<std::int64_t> x(n * n, 0), t(n * n, 0);
        std::uint64_t rem = lo;
        for (std::size_t s = 0; s < slots.size(); ++s) {
            digits[s] = static_cast<std::int64_t>(rem % static_cast<std::uint64_t>(mm));
            rem /= static_cast<std::uint64_t>(mm);
            const auto [i, j] = slots[s];
            x[i * n + j] = digits[s];
            if (sym) x[j * n + i] = digits[s];
        }
        std::uint64_t hits = 0;
        for (std::uint64_t idx = lo; idx < hi; ++idx) {
            if (gtxg_zero(g, x, n, mm, t)) ++hits;
            // odometer increment
            for (std::size_t s = 0; s < slots.size(); ++s) {
                const auto [i, j] = slots[s];
                if (++digits[s] == mm) {
                    digits[s] = 0;
                    x[i * n + j] = 0;
                    if (sym) x[j * n + i] = 0;
                    continue;  // carry into next slot
                }
                x[i * n + j] = digits[s];
                if (sym) x[j * n + i] = digits[s];
                break;
            }
        }
        hits_by_worker[worker] += hits;
    });

    Integer hits(0);
    for (std::uint64_t h : hits_by_worker) hits += Integer(static_cast<unsigned long>(h));
    return make_rational(hits, total_big);
}

Rational exhaustive_prob_gaussian(const Matrix<GaussianInteger>& gmat, const Integer& m,
                                  GaussianEnsemble ensemble, int threads) {
    if (!gmat.is_square() || gmat.empty())
        throw validation_error("exhaustive_prob_gaussian: matrix must be square and nonempty");
    check_modulus_small(m);
    const std::size_t n = gmat.rows();
    const std::int64_t mm = to_int64(m);
    const bool hermitian = ensemble == GaussianEnsemble::hermitian;

    // One slot per free residue: re/im of each upper-triangle entry, except
    // Hermitian diagonals which are real.
    struct Slot {
        std::size_t i, j;
        bool imag;
    };
    std::vector<Slot> slots;
    for (std::size_t i = 0; i < n; ++i)
        for (std::size_t j = i; j < n; ++j) {
            slots.push_back({i, j, false});
            if (!(hermitian && i == j)) slots.push_back({i, j, true});
        }

    const Integer total_big = state_count(m, slots.size());
    const std::uint64_t total = static_cast<std::uint64_t>(to_int64(total_big));

    std::vector<std::int64_t> gre(n * n), gim(n * n);
    for (std::size_t i = 0; i < n; ++i)
        for (std::size_t j = 0; j < n; ++j) {
            gre[i * n + j] = mod_reduce(gmat(i, j).re, mm);
            gim[i * n + j] = mod_reduce(gmat(i, j).im, mm);
        }

    std::vector<std::uint64_t> hits_by_worker(resolve_threads(threads), 0);
    parallel_ranges(total, threads, [&](int worker, std::uint64_t lo, std::uint64_t hi) {
        std::vector<std::int64_t> digits(slots.size(), 0);
        std::vector<std::int64_t> xre(n * n, 0), xim(n * n, 0);
        std::vector<std::int64_t> tre(n * n, 0), tim(n * n, 0);
        auto apply = [&](const Slot& sl, std::int64_t v) {
            auto& comp = sl.imag ? xim : xre;
            comp[sl.i * n + sl.j] = v;
            if (sl.i != sl.j) {
                // X symmetric copies; X Hermitian conjugates below the diagonal.
                if (hermitian && sl.imag) comp[sl.j * n + sl.i] = v ? mm - v : 0;
                else comp[sl.j * n + sl.i] = v;
            }
        };
        std::uint64_t rem = lo;
        for (std::size_t s = 0; s < slots.size(); ++s) {
            digits[s] = static_cast<std::int64_t>(rem % static_cast<std::uint64_t>(mm));
            rem /= static_cast<std::uint64_t>(mm);
            apply(slots[s], digits[s]);
        }
        std::uint64_t hits = 0;
        for (std::uint64_t idx = lo; idx < hi; ++idx) {
            if (gtxg_zero_gauss(gre, gim, xre, xim, n, mm, hermitian, tre, tim)) ++hits;
            for (std::size_t s = 0; s < slots.size(); ++s) {
                if (++digits[s] == mm) digits[s] = 0;
                apply(slots[s], digits[s]);
                if (digits[s] != 0) break;  // no carry
            }
        }
        hits_by_worker[worker] += hits;
    });

    Integer hits(0);
    for (std::uint64_t h : hits_by_worker) hits += Integer(static_cast<unsigned long>(h));
    return make_rational(hits, total_big);
}

McEstimate mc_prob(const RationalOrthogonalMatrix& q, const SampleConfig& cfg, EntryRing ring,
                   int threads) {
    if (!is_scaled_orthogonal(q.G, q.level))
        throw validation_error("mc_prob: matrix is not orthogonal at its level");
    if (cfg.samples < 1) throw validation_error("mc_prob: sample count must be positive");
    if (cfg.k < 1) throw validation_error("mc_prob: entry bound must be positive");
    const Integer m_big = q.level * q.level;
    check_modulus_small(m_big);
    const std::int64_t mm = to_int64(m_big);
    const std::size_t n = q.G.rows();

    // Exactly uniform reductions mod level^2 require level^2 | k.
    const Integer k_used_big = ((cfg.k + m_big - 1) / m_big) * m_big;
    if (!k_used_big.fits_ulong_p()) throw domain_error("mc_prob: entry bound exceeds 64 bits");
    const std::uint64_t k_used = mpz_get_ui(k_used_big.get_mpz_t());

    const std::vector<std::int64_t> g = residues_of(q.G, mm);
    std::vector<std::pair<std::size_t, std::size_t>> slots;
    for (std::size_t i = 0; i < n; ++i)
        for (std::size_t j = i; j < n; ++j) slots.emplace_back(i, j);
    const bool gaussian = ring == EntryRing::gaussian_integers;

    std::vector<std::uint64_t> hits_by_worker(resolve_threads(threads), 0);
    parallel_ranges(cfg.samples, threads, [&](int worker, std::uint64_t lo, std::uint64_t hi) {
        std::vector<std::int64_t> xre(n * n), xim(n * n), t(n * n);
        std::uint64_t hits = 0;
        for (std::uint64_t s = lo; s < hi; ++s) {
            std::uint64_t counter = 0;
            for (const auto& [i, j] : slots) {
                const std::int64_t re =
                    static_cast<std::int64_t>(rng::uniform(cfg.seed, s, counter++, k_used) %
                                              static_cast<std::uint64_t>(mm));
                xre[i * n + j] = xre[j * n + i] = re;
                if (gaussian) {
                    const std::int64_t im =
                        static_cast<std::int64_t>(rng::uniform(cfg.seed, s, counter++, k_used) %
                                                  static_cast<std::uint64_t>(mm));
                    xim[i * n + j] = xim[j * n + i] = im;
                }
            }
            // G is integral, so over Z[i] the real and imaginary parts decouple.
            bool ok = gtxg_zero(g, xre, n, mm, t);
            if (ok && gaussian) ok = gtxg_zero(g, xim, n, mm, t);
            if (ok) ++hits;
        }
        hits_by_worker[worker] += hits;
    });

    std::uint64_t hits = 0;
    for (std::uint64_t h : hits_by_worker) hits += h;

    McEstimate est;
    est.samples = cfg.samples;
    est.hits = Integer(static_cast<unsigned long>(hits));
    est.k_used = k_used_big;
    est.mean = static_cast<double>(hits) / static_cast<double>(cfg.samples);
    est.stderr_value = stderr_from_moments(cfg.samples, static_cast<double>(hits),
                                           static_cast<double>(hits));  // indicator: x^2 = x
    return est;
}

SampleNResult sample_N(int n, const Integer& ell, const SampleConfig& cfg, int threads) {
    if (n != 2 && n != 3) throw domain_error("sample_N: dimension must be 2 or 3");
    if (ell < 1) throw validation_error("sample_N: level must be positive");
    if (cfg.samples < 1) throw validation_error("sample_N: sample count must be positive");
    if (cfg.k < 1) throw validation_error("sample_N: entry bound must be positive");

    const auto mats = (n == 2) ? enumerate_O2(ell) : enumerate_O3(ell);
    const Integer m_big = ell * ell;
    check_modulus_small(m_big);
    const std::int64_t mm = to_int64(m_big);
    const std::size_t nn = static_cast<std::size_t>(n);

    const Integer k_used_big = ((cfg.k + m_big - 1) / m_big) * m_big;
    if (!k_used_big.fits_ulong_p()) throw domain_error("sample_N: entry bound exceeds 64 bits");
    const std::uint64_t k_used = mpz_get_ui(k_used_big.get_mpz_t());

    std::vector<std::vector<std::int64_t>> gs;
    gs.reserve(mats.size());
    for (const auto& rom : mats) gs.push_back(residues_of(rom.G, mm));

    std::vector<std::pair<std::size_t, std::size_t>> slots;
    for (std::size_t i = 0; i < nn; ++i)
        for (std::size_t j = i; j < nn; ++j) slots.emplace_back(i, j);

    const int workers = resolve_threads(threads);
    std::vector<std::uint64_t> sum_w(workers, 0), sumsq_w(workers, 0);
    std::vector<char> alldiv_w(workers, 1);
    const std::uint64_t divisor = (n == 2) ? 8 : 48;

    parallel_ranges(cfg.samples, threads, [&](int worker, std::uint64_t lo, std::uint64_t hi) {
        std::vector<std::int64_t> x(nn * nn), t(nn * nn);
        for (std::uint64_t s = lo; s < hi; ++s) {
            std::uint64_t counter = 0;
            for (const auto& [i, j] : slots) {
                const std::int64_t v =
                    static_cast<std::int64_t>(rng::uniform(cfg.seed, s, counter++, k_used) %
                                              static_cast<std::uint64_t>(mm));
                x[i * nn + j] = x[j * nn + i] = v;
            }
            std::uint64_t count = 0;
            for (const auto& g : gs)
                if (gtxg_zero(g, x, nn, mm, t)) ++count;
            sum_w[worker] += count;
            sumsq_w[worker] += count * count;
            if (count % divisor != 0) alldiv_w[worker] = 0;
        }
    });

    std::uint64_t sum = 0, sumsq = 0;
    bool alldiv = true;
    for (int w = 0; w < workers; ++w) {
        sum += sum_w[w];
        sumsq += sumsq_w[w];
        alldiv = alldiv && alldiv_w[w];
    }

    SampleNResult out;
    out.samples = cfg.samples;
    out.matrix_count = mats.size();
    out.divisor = Integer(static_cast<unsigned long>(divisor));
    out.k_used = k_used_big;
    out.all_divisible = alldiv;
    out.mean = static_cast<double>(sum) / static_cast<double>(cfg.samples);
    out.stderr_value =
        stderr_from_moments(cfg.samples, static_cast<double>(sum), static_cast<double>(sumsq));
    return out;
}

} // namespace orthosmith
