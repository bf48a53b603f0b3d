#include "orthosmith.h"

#include <cstring>
#include <string>

#include <json.hpp>

#include "orthosmith/expectation.hpp"
#include "orthosmith/json_io.hpp"
#include "orthosmith/probability.hpp"
#include "orthosmith/smith.hpp"
#include "orthosmith/verify.hpp"

using nlohmann::json;
namespace os = orthosmith;

struct os_matrix {
    os::AnyMatrix m;
};

namespace {

thread_local std::string g_last_error;

char* dup_string(const std::string& s) {
    char* out = static_cast<char*>(std::malloc(s.size() + 1));
    std::memcpy(out, s.c_str(), s.size() + 1);
    return out;
}

template <typename Fn>
os_status guarded(Fn&& fn) {
    try {
        fn();
        return OS_OK;
    } catch (const os::validation_error& e) {
        g_last_error = e.what();
        return OS_ERR_VALIDATION;
    } catch (const os::domain_error& e) {
        g_last_error = e.what();
        return OS_ERR_DOMAIN;
    } catch (const std::exception& e) {
        g_last_error = e.what();
        return OS_ERR_VALIDATION;
    }
}

json rational_json(const os::Rational& r) {
    return json{{"num", os::numerator(r).get_str()}, {"den", os::denominator(r).get_str()}};
}

json report_json(const os::ProbabilityReport& rep) {
    json factors = json::array();
    for (const auto& f : rep.factors)
        factors.push_back(json{{"i", f.i}, {"j", f.j}, {"num", f.num.get_str()}, {"den", f.den.get_str()}});
    return json{{"value", rational_json(rep.value)},
                {"decimal", os::to_double(rep.value)},
                {"factors", std::move(factors)}};
}

json scalar_json(const os::Integer& v) {
    if (os::fits_int64(v)) return json(os::to_int64(v));
    return json(v.get_str());
}

json scalar_json(const os::GaussianInteger& v) {
    return json::array({scalar_json(v.re), scalar_json(v.im)});
}

template <typename T>
json matrix_json_entries(const os::Matrix<T>& m) {
    json rows = json::array();
    for (std::size_t i = 0; i < m.rows(); ++i) {
        json row = json::array();
        for (std::size_t j = 0; j < m.cols(); ++j) row.push_back(scalar_json(m(i, j)));
        rows.push_back(std::move(row));
    }
    return rows;
}

template <typename T>
json snf_json(const os::Matrix<T>& g, const char* ring) {
    const os::SmithData<T> s = os::smith_normal_form(g);
    json d = json::array(), ideals = json::array();
    for (const auto& v : s.d) d.push_back(scalar_json(v));
    for (const auto& v : s.d_ideal) ideals.push_back(scalar_json(v));
    return json{{"n", g.rows()},   {"ring", ring},
                {"d", std::move(d)}, {"d_ideal", std::move(ideals)},
                {"U", matrix_json_entries(s.U)}, {"V", matrix_json_entries(s.V)}};
}

os::Integer parse_decimal(const char* text, const char* what) {
    try {
        return os::Integer(std::string(text));
    } catch (const std::invalid_argument&) {
        throw os::validation_error(std::string(what) + ": not a valid integer literal");
    }
}

// Orthogonal inputs carry a default modulus (level^2); plain integer or
// Gaussian inputs must state one.
struct ProbInput {
    os::ScalarRing ring;
    os::Matrix<os::Integer> gz;          // valid when ring != gaussian_integers? see below
    os::Matrix<os::GaussianInteger> gg;  // valid when ring == gaussian_integers
    os::Integer modulus;
    bool orthogonal = false;
    os::Integer level;  // meaningful when orthogonal
};

ProbInput resolve_prob_input(const os::AnyMatrix& m, const char* ring_arg, const char* modulus) {
    ProbInput in;
    os::ScalarRing target;
    if (ring_arg == nullptr) {
        target = (m.ring == os::ScalarRing::rationals) ? os::ScalarRing::integers : m.ring;
    } else {
        target = os::ring_from_name(ring_arg);
        if (target == os::ScalarRing::rationals)
            throw os::validation_error("ring: probability ensembles are over \"Z\" or \"Zi\"");
    }
    in.ring = target;

    os::Matrix<os::Integer> g;
    if (m.ring == os::ScalarRing::rationals) {
        const auto rom = os::rational_orthogonal(os::require_rational_matrix(m));
        g = rom.G;
        in.orthogonal = true;
        in.level = rom.level;
    } else if (m.ring == os::ScalarRing::integers) {
        g = os::require_integer_matrix(m);
    } else {
        if (target != os::ScalarRing::gaussian_integers)
            throw os::validation_error("ring: a Gaussian matrix cannot be reinterpreted over Z");
        in.gg = os::require_gaussian_matrix(m);
    }

    if (target == os::ScalarRing::gaussian_integers && m.ring != os::ScalarRing::gaussian_integers)
        in.gg = os::to_gaussian(g);
    else if (target == os::ScalarRing::integers)
        in.gz = std::move(g);

    if (modulus != nullptr) {
        in.modulus = parse_decimal(modulus, "modulus");
        if (in.modulus < 1) throw os::validation_error("modulus: must be positive");
    } else if (in.orthogonal) {
        in.modulus = in.level * in.level;
    } else {
        throw os::validation_error("modulus: required for non-orthogonal input");
    }
    return in;
}

os::SampleConfig make_config(uint64_t samples, uint64_t seed, const char* k,
                             const os::Integer& level) {
    os::SampleConfig cfg;
    cfg.seed = seed;
    cfg.samples = samples;
    if (k != nullptr) {
        cfg.k = parse_decimal(k, "k");
        if (cfg.k < 1) throw os::validation_error("k: must be positive");
    } else {
        cfg.k = 1000 * level * level;
    }
    return cfg;
}

void emit(char** out, const std::string& payload) { *out = dup_string(payload); }

}  // namespace

extern "C" {

const char* os_last_error(void) { return g_last_error.c_str(); }

void os_string_free(char* s) { std::free(s); }

void os_matrix_free(os_matrix* m) { delete m; }

os_status os_matrix_from_json(const char* text, os_matrix** out) {
    return guarded([&] {
        if (text == nullptr) throw os::validation_error("matrix JSON: null input");
        auto parsed = os::parse_matrix_json(text);
        *out = new os_matrix{std::move(parsed)};
    });
}

os_status os_matrix_to_json(const os_matrix* m, char** json_out) {
    return guarded([&] {
        if (m == nullptr) throw os::validation_error("matrix: null handle");
        emit(json_out, os::matrix_to_json(m->m));
    });
}

os_status os_snf(const os_matrix* m, char** json_out) {
    return guarded([&] {
        if (m == nullptr) throw os::validation_error("matrix: null handle");
        json j;
        switch (m->m.ring) {
            case os::ScalarRing::integers:
                j = snf_json(os::require_integer_matrix(m->m), "Z");
                break;
            case os::ScalarRing::rationals: {
                // rational input: reduce the integral matrix level * M
                const auto q = os::require_rational_matrix(m->m);
                if (!q.is_square() || q.empty())
                    throw os::validation_error("entries: matrix must be square and nonempty");
                const os::Integer level = os::matrix_level(q);
                os::Matrix<os::Integer> g(q.rows(), q.cols());
                for (std::size_t i = 0; i < q.rows(); ++i)
                    for (std::size_t jj = 0; jj < q.cols(); ++jj)
                        g(i, jj) = os::numerator(q(i, jj)) *
                                   os::divexact(level, os::denominator(q(i, jj)));
                j = snf_json(g, "Z");
                j["level"] = level.get_str();
                break;
            }
            case os::ScalarRing::gaussian_integers:
                j = snf_json(os::require_gaussian_matrix(m->m), "Zi");
                break;
        }
        emit(json_out, j.dump());
    });
}

os_status os_prob(const os_matrix* m, const char* ring, const char* ensemble,
                  const char* modulus, char** json_out) {
    return guarded([&] {
        if (m == nullptr) throw os::validation_error("matrix: null handle");
        const std::string ens = ensemble ? ensemble : "symmetric";
        const ProbInput in = resolve_prob_input(m->m, ring, modulus);

        os::ProbabilityReport rep;
        if (in.ring == os::ScalarRing::integers) {
            if (ens == "symmetric") {
                if (in.orthogonal && modulus == nullptr) {
                    // Orthogonal fast path: the truncated product formula.
                    os::RationalOrthogonalMatrix rom;
                    rom.Q = os::require_rational_matrix(m->m);
                    rom.level = in.level;
                    rom.G = in.gz;
                    rep = os::prob_orthogonal(rom);
                } else {
                    rep = os::prob_symmetric(os::smith_normal_form(in.gz).d, in.modulus);
                }
            } else if (ens == "asymmetric") {
                const auto d = os::smith_normal_form(in.gz).d;
                rep = os::prob_asymmetric(d, d, in.modulus);
            } else if (ens == "hermitian") {
                throw os::validation_error("ensemble: hermitian requires ring \"Zi\"");
            } else {
                throw os::validation_error("ensemble: unknown ensemble \"" + ens + "\"");
            }
        } else {
            const auto d = os::smith_normal_form(in.gg).d;
            if (ens == "symmetric") rep = os::prob_symmetric_gaussian(d, in.modulus);
            else if (ens == "hermitian") rep = os::prob_hermitian(d, in.modulus);
            else if (ens == "asymmetric")
                throw os::validation_error("ensemble: asymmetric is defined over ring \"Z\"");
            else throw os::validation_error("ensemble: unknown ensemble \"" + ens + "\"");
        }

        json j = report_json(rep);
        j["ring"] = (in.ring == os::ScalarRing::integers) ? "Z" : "Zi";
        j["ensemble"] = ens;
        j["modulus"] = in.modulus.get_str();
        if (in.orthogonal) j["level"] = in.level.get_str();
        emit(json_out, j.dump());
    });
}

os_status os_enum_o2(int64_t level, char** jsonl_out) {
    return guarded([&] {
        std::string out;
        for (const auto& rom : os::enumerate_O2(os::Integer(static_cast<long>(level)))) {
            out += os::matrix_to_json(rom.Q);
            out += '\n';
        }
        emit(jsonl_out, out);
    });
}

os_status os_enum_o3(int64_t level, char** jsonl_out) {
    return guarded([&] {
        std::string out;
        for (const auto& rom : os::enumerate_O3(os::Integer(static_cast<long>(level)))) {
            out += os::matrix_to_json(rom.Q);
            out += '\n';
        }
        emit(jsonl_out, out);
    });
}

os_status os_expect(int n, int64_t level, char** json_out) {
    return guarded([&] {
        if (n != 2 && n != 3) throw os::domain_error("n: expectation dimension must be 2 or 3");
        const os::Integer ell(static_cast<long>(level));
        const os::Rational e = (n == 2) ? os::expected_N2(ell) : os::expected_N3(ell);
        json j{{"n", n},
               {"level", ell.get_str()},
               {"expectation", rational_json(e)},
               {"decimal", os::to_double(e)}};
        emit(json_out, j.dump());
    });
}

os_status os_bounds(char** json_out) {
    return guarded([&] {
        const os::Rational b2 = os::bound2_rational();
        const os::Rational b3 = os::bound3_rational();
        json j{{"bound2", {{"decimal", os::to_double(b2)}, {"text", os::decimal_string(b2, 15)}}},
               {"bound3", {{"decimal", os::to_double(b3)}, {"text", os::decimal_string(b3, 15)}}}};
        emit(json_out, j.dump());
    });
}

os_status os_figure_csv(int n, int64_t max_level, char** csv_out) {
    return guarded([&] {
        std::string csv = "level,expectation_num,expectation_den,expectation_float\n";
        for (const auto& row : os::figure_series(n, os::Integer(static_cast<long>(max_level)))) {
            char buf[64];
            std::snprintf(buf, sizeof buf, "%.17g", os::to_double(row.expectation));
            csv += row.level.get_str();
            csv += ',';
            csv += os::numerator(row.expectation).get_str();
            csv += ',';
            csv += os::denominator(row.expectation).get_str();
            csv += ',';
            csv += buf;
            csv += '\n';
        }
        emit(csv_out, csv);
    });
}

os_status os_verify_exhaustive(const os_matrix* m, const char* modulus, const char* ensemble,
                               int threads, char** json_out) {
    return guarded([&] {
        if (m == nullptr) throw os::validation_error("matrix: null handle");
        const std::string ens = ensemble ? ensemble : "symmetric";
        const ProbInput in = resolve_prob_input(m->m, nullptr, modulus);

        os::Rational p;
        std::size_t nn;
        std::size_t free_slots;
        if (in.ring == os::ScalarRing::gaussian_integers) {
            nn = in.gg.rows();
            os::GaussianEnsemble ge;
            if (ens == "symmetric") {
                ge = os::GaussianEnsemble::symmetric;
                free_slots = nn * (nn + 1);
            } else if (ens == "hermitian") {
                ge = os::GaussianEnsemble::hermitian;
                free_slots = nn * nn;
            } else {
                throw os::validation_error("ensemble: over Zi expected \"symmetric\" or \"hermitian\"");
            }
            p = os::exhaustive_prob_gaussian(in.gg, in.modulus, ge, threads);
        } else {
            nn = in.gz.rows();
            os::IntegerEnsemble ie;
            if (ens == "symmetric") {
                ie = os::IntegerEnsemble::symmetric;
                free_slots = nn * (nn + 1) / 2;
            } else if (ens == "asymmetric") {
                ie = os::IntegerEnsemble::asymmetric;
                free_slots = nn * nn;
            } else {
                throw os::validation_error("ensemble: over Z expected \"symmetric\" or \"asymmetric\"");
            }
            p = os::exhaustive_prob(in.gz, in.modulus, ie, threads);
        }

        const os::Integer cases = os::pow_ui(in.modulus, static_cast<unsigned long>(free_slots));
        const os::Integer hits = os::numerator(p) * os::divexact(cases, os::denominator(p));
        json j{{"ensemble", ens},
               {"ring", (in.ring == os::ScalarRing::gaussian_integers) ? "Zi" : "Z"},
               {"modulus", in.modulus.get_str()},
               {"cases", cases.get_str()},
               {"hits", hits.get_str()},
               {"probability", rational_json(p)},
               {"decimal", os::to_double(p)}};
        emit(json_out, j.dump());
    });
}

os_status os_verify_mc(const os_matrix* m, uint64_t samples, uint64_t seed, const char* k,
                       const char* ring, int threads, char** json_out) {
    return guarded([&] {
        if (m == nullptr) throw os::validation_error("matrix: null handle");
        const auto rom = os::rational_orthogonal(os::require_rational_matrix(m->m));
        os::EntryRing er = os::EntryRing::integers;
        if (ring != nullptr) {
            const std::string r = ring;
            if (r == "Zi") er = os::EntryRing::gaussian_integers;
            else if (r != "Z") throw os::validation_error("ring: expected \"Z\" or \"Zi\"");
        }
        const os::SampleConfig cfg = make_config(samples, seed, k, rom.level);
        const os::McEstimate est = os::mc_prob(rom, cfg, er, threads);
        json j{{"level", rom.level.get_str()},
               {"ring", er == os::EntryRing::gaussian_integers ? "Zi" : "Z"},
               {"samples", est.samples},
               {"seed", seed},
               {"k", cfg.k.get_str()},
               {"k_used", est.k_used.get_str()},
               {"hits", est.hits.get_str()},
               {"mean", est.mean},
               {"stderr", est.stderr_value}};
        emit(json_out, j.dump());
    });
}

os_status os_verify_sample_n(int n, int64_t level, uint64_t samples, uint64_t seed,
                             const char* k, int threads, char** json_out) {
    return guarded([&] {
        const os::Integer ell(static_cast<long>(level));
        if (ell < 1) throw os::validation_error("level: must be positive");
        const os::SampleConfig cfg = make_config(samples, seed, k, ell);
        const os::SampleNResult res = os::sample_N(n, ell, cfg, threads);
        json j{{"n", n},
               {"level", ell.get_str()},
               {"samples", res.samples},
               {"seed", seed},
               {"k", cfg.k.get_str()},
               {"k_used", res.k_used.get_str()},
               {"matrices", res.matrix_count},
               {"mean", res.mean},
               {"stderr", res.stderr_value},
               {"all_divisible", res.all_divisible},
               {"divisor", res.divisor.get_str()}};
        emit(json_out, j.dump());
    });
}

}  // extern "C"
