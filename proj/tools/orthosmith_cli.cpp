// orthosmith command-line tool.  Thin shell over the C API: parses flags,
// loads matrix files, prints the machine-readable payload on stdout and a
// short human summary on stderr.

#include <cstdint>
#include <cstdlib>
#include <fstream>
#include <iostream>
#include <sstream>
#include <string>

#include <CLI11.hpp>

#include "orthosmith.h"

namespace {

struct MatrixHandle {
    os_matrix* m = nullptr;
    ~MatrixHandle() { os_matrix_free(m); }
};

struct Payload {
    char* s = nullptr;
    ~Payload() { os_string_free(s); }
};

int fail(os_status st) {
    std::cerr << "error: " << os_last_error() << "\n";
    return static_cast<int>(st);
}

int load_matrix(const std::string& path, MatrixHandle& h) {
    std::ifstream in(path);
    if (!in) {
        std::cerr << "error: matrix file: cannot open " << path << "\n";
        return 1;
    }
    std::stringstream ss;
    ss << in.rdbuf();
    const std::string text = ss.str();
    const os_status st = os_matrix_from_json(text.c_str(), &h.m);
    if (st != OS_OK) return fail(st);
    return 0;
}

int resolve_threads(int flag_value) {
    // The environment variable wins over the flag.
    if (const char* env = std::getenv("ORTHOSMITH_THREADS")) {
        const long v = std::strtol(env, nullptr, 10);
        if (v > 0) return static_cast<int>(v);
    }
    return flag_value;
}

int emit(const Payload& payload, const std::string& summary) {
    const std::string s(payload.s);
    std::cout << s;
    if (!s.empty() && s.back() != '\n') std::cout << "\n";
    if (!summary.empty()) std::cerr << summary << "\n";
    return 0;
}

}  // namespace

int main(int argc, char** argv) {
    CLI::App app{"exact conjugation-integrality probabilities for rational orthogonal matrices"};
    app.require_subcommand(1);
    int threads = 0;
    app.add_option("--threads", threads, "worker threads (0 = available parallelism)");

    // ---- snf ----
    std::string snf_file;
    auto* snf = app.add_subcommand("snf", "Smith normal form of a matrix file");
    snf->add_option("--matrix", snf_file, "matrix JSON file")->required();

    // ---- prob ----
    std::string prob_file, prob_ring, prob_ensemble, prob_modulus;
    auto* prob = app.add_subcommand("prob", "exact conjugation-integrality probability");
    prob->add_option("--matrix", prob_file, "matrix JSON file")->required();
    prob->add_option("--ring", prob_ring, "Z or Zi (default: ring of the file)");
    prob->add_option("--ensemble", prob_ensemble, "symmetric | asymmetric | hermitian");
    prob->add_option("--modulus", prob_modulus, "modulus m (default: level^2 for orthogonal input)");

    // ---- enum-o2 / enum-o3 ----
    std::int64_t o2_level = 0, o3_level = 0;
    auto* eo2 = app.add_subcommand("enum-o2", "enumerate O_2(level, Q)");
    eo2->add_option("--level", o2_level, "level")->required();
    auto* eo3 = app.add_subcommand("enum-o3", "enumerate O_3(level, Q)");
    eo3->add_option("--level", o3_level, "level")->required();

    // ---- expect ----
    int exp_n = 0;
    std::int64_t exp_level = 0;
    auto* expect = app.add_subcommand("expect", "closed-form E[N_n(level)]");
    expect->add_option("--n", exp_n, "dimension (2 or 3)")->required();
    expect->add_option("--level", exp_level, "level")->required();

    // ---- bounds ----
    auto* bounds = app.add_subcommand("bounds", "limiting bound constants");

    // ---- figure ----
    int fig_n = 0;
    std::int64_t fig_max = 0;
    std::string fig_out;
    auto* figure = app.add_subcommand("figure", "expectation series as CSV");
    figure->add_option("--n", fig_n, "dimension (2 or 3)")->required();
    figure->add_option("--max", fig_max, "largest level")->required();
    figure->add_option("--out", fig_out, "write CSV to this file instead of stdout");

    // ---- verify ----
    auto* verify = app.add_subcommand("verify", "independent brute-force and Monte Carlo checks");
    verify->require_subcommand(1);

    std::string vex_file, vex_modulus, vex_ensemble;
    auto* vex = verify->add_subcommand("exhaustive", "exact probability by full enumeration");
    vex->add_option("--matrix", vex_file, "matrix JSON file")->required();
    vex->add_option("--modulus", vex_modulus, "modulus m");
    vex->add_option("--ensemble", vex_ensemble, "symmetric | asymmetric | hermitian");

    std::string vmc_file, vmc_k, vmc_ring;
    std::uint64_t vmc_samples = 0, vmc_seed = 0;
    auto* vmc = verify->add_subcommand("mc", "Monte Carlo estimate for an orthogonal matrix");
    vmc->add_option("--matrix", vmc_file, "matrix JSON file")->required();
    vmc->add_option("--samples", vmc_samples, "sample count")->required();
    vmc->add_option("--seed", vmc_seed, "RNG seed");
    vmc->add_option("--k", vmc_k, "entry bound (default 1000 * level^2)");
    vmc->add_option("--ring", vmc_ring, "Z or Zi entries");

    int vsn_n = 0;
    std::int64_t vsn_level = 0;
    std::string vsn_k;
    std::uint64_t vsn_samples = 0, vsn_seed = 0;
    auto* vsn = verify->add_subcommand("sample-n", "empirical N_n(level) distribution");
    vsn->add_option("--n", vsn_n, "dimension (2 or 3)")->required();
    vsn->add_option("--level", vsn_level, "level")->required();
    vsn->add_option("--samples", vsn_samples, "sample count")->required();
    vsn->add_option("--seed", vsn_seed, "RNG seed");
    vsn->add_option("--k", vsn_k, "entry bound (default 1000 * level^2)");

    try {
        app.parse(argc, argv);
    } catch (const CLI::CallForHelp& e) {
        return app.exit(e);
    } catch (const CLI::ParseError& e) {
        app.exit(e);
        return 1;
    }

    threads = resolve_threads(threads);
    Payload out;

    if (snf->parsed()) {
        MatrixHandle m;
        if (int rc = load_matrix(snf_file, m)) return rc;
        const os_status st = os_snf(m.m, &out.s);
        if (st != OS_OK) return fail(st);
        return emit(out, "smith normal form of " + snf_file);
    }

    if (prob->parsed()) {
        MatrixHandle m;
        if (int rc = load_matrix(prob_file, m)) return rc;
        const os_status st = os_prob(m.m, prob_ring.empty() ? nullptr : prob_ring.c_str(),
                                     prob_ensemble.empty() ? nullptr : prob_ensemble.c_str(),
                                     prob_modulus.empty() ? nullptr : prob_modulus.c_str(), &out.s);
        if (st != OS_OK) return fail(st);
        return emit(out, "exact probability for " + prob_file);
    }

    if (eo2->parsed() || eo3->parsed()) {
        const std::int64_t level = eo2->parsed() ? o2_level : o3_level;
        const os_status st = eo2->parsed() ? os_enum_o2(level, &out.s) : os_enum_o3(level, &out.s);
        if (st != OS_OK) return fail(st);
        std::cout << out.s;
        std::cerr << "enumerated level " << level << "\n";
        return 0;
    }

    if (expect->parsed()) {
        const os_status st = os_expect(exp_n, exp_level, &out.s);
        if (st != OS_OK) return fail(st);
        return emit(out, "");
    }

    if (bounds->parsed()) {
        const os_status st = os_bounds(&out.s);
        if (st != OS_OK) return fail(st);
        return emit(out, "limit constants 12G/pi^2 - 1 and 105 zeta(3)/pi^4 - 1");
    }

    if (figure->parsed()) {
        const os_status st = os_figure_csv(fig_n, fig_max, &out.s);
        if (st != OS_OK) return fail(st);
        if (fig_out.empty()) {
            std::cout << out.s;
            return 0;
        }
        std::ofstream f(fig_out);
        if (!f) {
            std::cerr << "error: cannot write " << fig_out << "\n";
            return 1;
        }
        f << out.s;
        std::size_t rows = 0;
        for (const char* p = out.s; *p; ++p)
            if (*p == '\n') ++rows;
        std::cout << "{\"out\":\"" << fig_out << "\",\"rows\":" << (rows ? rows - 1 : 0) << "}\n";
        std::cerr << "wrote " << fig_out << "\n";
        return 0;
    }

    if (vex->parsed()) {
        MatrixHandle m;
        if (int rc = load_matrix(vex_file, m)) return rc;
        const os_status st = os_verify_exhaustive(
            m.m, vex_modulus.empty() ? nullptr : vex_modulus.c_str(),
            vex_ensemble.empty() ? nullptr : vex_ensemble.c_str(), threads, &out.s);
        if (st != OS_OK) return fail(st);
        return emit(out, "exhaustive count for " + vex_file);
    }

    if (vmc->parsed()) {
        MatrixHandle m;
        if (int rc = load_matrix(vmc_file, m)) return rc;
        const os_status st = os_verify_mc(m.m, vmc_samples, vmc_seed,
                                          vmc_k.empty() ? nullptr : vmc_k.c_str(),
                                          vmc_ring.empty() ? nullptr : vmc_ring.c_str(), threads,
                                          &out.s);
        if (st != OS_OK) return fail(st);
        return emit(out, "monte carlo estimate for " + vmc_file);
    }

    if (vsn->parsed()) {
        const os_status st =
            os_verify_sample_n(vsn_n, vsn_level, vsn_samples, vsn_seed,
                               vsn_k.empty() ? nullptr : vsn_k.c_str(), threads, &out.s);
        if (st != OS_OK) return fail(st);
        return emit(out, "");
    }

    std::cerr << "error: no subcommand\n";
    return 1;
}
