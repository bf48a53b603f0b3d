// CLI end-to-end checks: spawns the installed binary (argv[1]) and verifies
// payloads, file round-trips and the exit-code contract.

#include <array>
#include <cstdio>
#include <cstdlib>
#include <fstream>
#include <iostream>
#include <sstream>
#include <string>
#include <vector>

#include "orthosmith/json_io.hpp"
#include "orthosmith/ortho.hpp"

namespace {

std::string g_cli;
int g_failures = 0;

#define CLI_CHECK(cond)                                                              \
    do {                                                                             \
        if (!(cond)) {                                                               \
            ++g_failures;                                                            \
            std::cerr << "FAIL " << __FILE__ << ":" << __LINE__ << "  " #cond "\n"; \
        }                                                                            \
    } while (0)

struct RunResult {
    int exit_code;
    std::string out;
};

RunResult run(const std::string& args) {
    const std::string cmd = g_cli + " " + args + " 2>/dev/null";
    std::array<char, 4096> buf{};
    RunResult r{-1, {}};
    FILE* p = popen(cmd.c_str(), "r");
    if (!p) return r;
    std::size_t got;
    while ((got = fread(buf.data(), 1, buf.size(), p)) > 0) r.out.append(buf.data(), got);
    const int st = pclose(p);
    r.exit_code = WIFEXITED(st) ? WEXITSTATUS(st) : -1;
    return r;
}

void write_file(const std::string& path, const std::string& text) {
    std::ofstream f(path);
    f << text;
}

std::vector<std::string> lines_of(const std::string& s) {
    std::vector<std::string> out;
    std::istringstream in(s);
    std::string line;
    while (std::getline(in, line))
        if (!line.empty()) out.push_back(line);
    return out;
}

}  // namespace

int main(int argc, char** argv) {
    if (argc < 2) {
        std::cerr << "usage: test_cli <path-to-orthosmith-binary>\n";
        return 2;
    }
    g_cli = argv[1];
    const std::string dir = "cli_test_tmp";
    if (std::system(("rm -rf " + dir + " && mkdir -p " + dir).c_str()) != 0) {
        std::cerr << "cannot prepare scratch directory\n";
        return 2;
    }

    const std::string q5 = dir + "/q5.json";
    write_file(q5, R"({"n":2,"ring":"Q","entries":[["3/5","4/5"],["4/5","-3/5"]]})");

    // prob: the worked 2x2 example
    {
        const RunResult r = run("prob --matrix " + q5);
        CLI_CHECK(r.exit_code == 0);
        CLI_CHECK(r.out.find("\"num\":\"1\"") != std::string::npos);
        CLI_CHECK(r.out.find("\"den\":\"25\"") != std::string::npos);
    }
    {
        const RunResult r = run("prob --matrix " + q5 + " --ring Zi");
        CLI_CHECK(r.exit_code == 0);
        CLI_CHECK(r.out.find("\"den\":\"625\"") != std::string::npos);
    }

    // enum-o3 at an even level: empty output, success
    {
        const RunResult r = run("enum-o3 --level 2");
        CLI_CHECK(r.exit_code == 0);
        CLI_CHECK(lines_of(r.out).empty());
    }

    // enum-o2 output re-parses and is scaled-orthogonal (round-trip)
    {
        const RunResult r = run("enum-o2 --level 5");
        CLI_CHECK(r.exit_code == 0);
        const auto lines = lines_of(r.out);
        CLI_CHECK(lines.size() == 16);
        for (const auto& line : lines) {
            const auto any = orthosmith::parse_matrix_json(line);
            const auto rom =
                orthosmith::rational_orthogonal(orthosmith::require_rational_matrix(any));
            CLI_CHECK(rom.level == 5);
        }
    }

    // figure CSV written to a file; the level-5 row carries 16/25
    {
        const std::string csv = dir + "/f.csv";
        const RunResult r = run("figure --n 2 --max 100 --out " + csv);
        CLI_CHECK(r.exit_code == 0);
        std::ifstream f(csv);
        CLI_CHECK(f.good());
        std::string all((std::istreambuf_iterator<char>(f)), std::istreambuf_iterator<char>());
        CLI_CHECK(all.find("5,16,25,") != std::string::npos);
        CLI_CHECK(all.rfind("level,expectation_num,expectation_den,expectation_float", 0) == 0);
    }

    // expect and verify go through the same status mapping
    {
        CLI_CHECK(run("expect --n 2 --level 5").out.find("\"num\":\"16\"") != std::string::npos);
        CLI_CHECK(run("expect --n 2 --level 1").exit_code == 2);   // domain
        CLI_CHECK(run("expect --n 7 --level 5").exit_code == 2);   // domain
        CLI_CHECK(run("verify exhaustive --matrix " + q5).out.find("\"hits\":\"625\"") !=
                  std::string::npos);
        CLI_CHECK(run("verify mc --matrix " + q5 + " --samples 5000 --seed 1").exit_code == 0);
        CLI_CHECK(run("verify sample-n --n 3 --level 2 --samples 10 --seed 1").exit_code == 0);
    }

    // exit-code corpus: malformed inputs are validation errors
    {
        const std::string bad_json = dir + "/bad.json";
        write_file(bad_json, "{this is not json");
        CLI_CHECK(run("prob --matrix " + bad_json).exit_code == 1);

        const std::string nonsquare = dir + "/nonsquare.json";
        write_file(nonsquare, R"({"n":2,"ring":"Z","entries":[[1,0,0],[0,1,0]]})");
        CLI_CHECK(run("snf --matrix " + nonsquare).exit_code == 1);

        const std::string zeroden = dir + "/zeroden.json";
        write_file(zeroden, R"({"n":2,"ring":"Q","entries":[["1/0","0"],["0","1"]]})");
        CLI_CHECK(run("prob --matrix " + zeroden).exit_code == 1);

        CLI_CHECK(run("prob --matrix " + dir + "/missing.json").exit_code == 1);
        CLI_CHECK(run("frobnicate").exit_code == 1);  // unknown subcommand

        // size guard: state space too large
        const std::string id3 = dir + "/id3.json";
        write_file(id3, R"({"n":3,"ring":"Z","entries":[[1,0,0],[0,1,0],[0,0,1]]})");
        CLI_CHECK(run("verify exhaustive --matrix " + id3 + " --modulus 220").exit_code == 2);
    }

    // ORTHOSMITH_THREADS is honored (smoke: still correct and deterministic)
    {
        const RunResult a = run("verify mc --matrix " + q5 + " --samples 20000 --seed 9");
        const std::string env_cmd = "ORTHOSMITH_THREADS=3 " + g_cli + " verify mc --matrix " + q5 +
                                    " --samples 20000 --seed 9 2>/dev/null";
        FILE* p = popen(env_cmd.c_str(), "r");
        std::string out;
        std::array<char, 4096> buf{};
        std::size_t got;
        while ((got = fread(buf.data(), 1, buf.size(), p)) > 0) out.append(buf.data(), got);
        pclose(p);
        CLI_CHECK(a.out == out);
    }

    if (g_failures == 0) {
        std::cout << "cli: all checks passed\n";
        return 0;
    }
    std::cerr << "cli: " << g_failures << " checks failed\n";
    return 1;
}
