// End-to-end checks of the installed command-line surface: config-file
// precedence (flag > file > default), exit codes, and output determinism.
// argv[1] is the path to the built binary.

#include <cstdio>
#include <cstdlib>
#include <fstream>
#include <iostream>
#include <string>
#include <sys/wait.h>

namespace {

int g_failures = 0;

void expect(bool condition, const std::string& what) {
    if (!condition) {
        std::cerr << "FAILED: " << what << '\n';
        ++g_failures;
    }
}

struct RunResult {
    int exit_code = -1;
    std::string output;
};

RunResult run(const std::string& command) {
    RunResult result;
    FILE* pipe = popen((command + " 2>&1").c_str(), "r");
    if (!pipe)
        return result;
    char buf[4096];
    while (std::fgets(buf, sizeof buf, pipe))
        result.output += buf;
    const int status = pclose(pipe);
    if (WIFEXITED(status))
        result.exit_code = WEXITSTATUS(status);
    return result;
}

} // namespace

int main(int argc, char** argv) {
    if (argc < 2) {
        std::cerr << "usage: cli_config_test <path-to-ehp>\n";
        return 2;
    }
    const std::string ehp = argv[1];

    const std::string config_path = "cli_config_test.conf";
    {
        std::ofstream config(config_path);
        config << "# reference Hellmann ground state\n";
        config << "model = hellmann\n";
        config << "C = 2\n";
        config << "D = -1\n";
        config << "alpha = 0.001   # overridden below\n";
        config << "n = 0\n";
        config << "l = 0\n";
        config << "hbar = 1\n";
        config << "mu = 0.5\n";
    }

    const auto from_file = run(ehp + " energy --config " + config_path);
    expect(from_file.exit_code == 0, "config-only run exits 0");
    expect(from_file.output.find("-2.25050025000") != std::string::npos,
           "config file supplies every parameter");

    const auto overridden =
        run(ehp + " energy --config " + config_path + " --alpha 0.01");
    expect(overridden.output.find("-2.25502500000") != std::string::npos,
           "explicit flag beats the config file");

    const auto defaulted = run(ehp + " energy --model coulomb --C 2 --mu 0.5");
    expect(defaulted.output.find("-1.00000000000") != std::string::npos,
           "built-in defaults fill whatever neither flag nor file sets");

    const auto missing = run(ehp + " energy --config does-not-exist.conf");
    expect(missing.exit_code == 1, "unreadable config file is a usage error");

    const auto bad_flag = run(ehp + " energy --frequency 3");
    expect(bad_flag.exit_code == 1, "unknown flags are usage errors");

    const auto help = run(ehp + " --help");
    expect(help.exit_code == 0, "--help exits 0");

    // molecule lookup through a user catalog file
    const std::string catalog_path = "cli_config_test_catalog.txt";
    {
        std::ofstream catalog(catalog_path);
        catalog << "# name mu_amu alpha_per_angstrom\n";
        catalog << "CuLi 6.259494 1.00818\n";
    }
    const auto from_catalog = run(
        ehp + " energy --model yukawa --D -2 --n 0 --l 0 --units physical "
              "--molecule CuLi --catalog " + catalog_path);
    const auto from_builtin = run(
        ehp + " energy --model yukawa --D -2 --n 0 --l 0 --units physical "
              "--molecule CuLi");
    expect(from_catalog.exit_code == 0 &&
               from_catalog.output == from_builtin.output,
           "user catalog entry behaves like the builtin one");
    const auto unknown = run(
        ehp + " energy --model yukawa --D -2 --units physical "
              "--molecule Xx --catalog " + catalog_path);
    expect(unknown.exit_code == 1, "unknown catalog molecule is a usage error");
    std::remove(catalog_path.c_str());

    // byte-identical CSV across runs
    const std::string out_a = "cli_config_test_a.csv";
    const std::string out_b = "cli_config_test_b.csv";
    run(ehp + " table --preset table4 --out " + out_a);
    run(ehp + " table --preset table4 --out " + out_b);
    std::ifstream fa(out_a, std::ios::binary), fb(out_b, std::ios::binary);
    const std::string contents_a((std::istreambuf_iterator<char>(fa)),
                                 std::istreambuf_iterator<char>());
    const std::string contents_b((std::istreambuf_iterator<char>(fb)),
                                 std::istreambuf_iterator<char>());
    expect(!contents_a.empty() && contents_a == contents_b,
           "identical invocations produce byte-identical files");

    std::remove(config_path.c_str());
    std::remove(out_a.c_str());
    std::remove(out_b.c_str());

    if (g_failures == 0)
        std::puts("cli_config_test: all checks passed");
    return g_failures == 0 ? 0 : 1;
}
