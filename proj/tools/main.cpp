// Command-line front end: energy queries, reference-table reproduction,
// figure sweeps, oracle validation and wavefunction dumps.

#include <CLI11.hpp>

#include <algorithm>
#include <fstream>
#include <iostream>
#include <memory>
#include <vector>

#include "ehp/cli.hpp"

namespace {

void add_units_flags(CLI::App* cmd, ehp::cli::UnitsConfig& units) {
    cmd->add_option("--units", units.units, "Unit system: natural|physical")
        ->default_str("natural");
    cmd->add_option("--hbar", units.hbar, "hbar (natural units)")
        ->default_str("1");
    cmd->add_option("--mu", units.mu, "Reduced mass (natural units)")
        ->default_str("1");
    cmd->add_option("--molecule", units.molecule,
                    "Catalog molecule (physical units): VH|TiH|TiC|CuLi");
    cmd->add_option("--catalog", units.catalog_path,
                    "Molecule catalog file (name mu_amu alpha per line)");
    cmd->add_option("--mu-amu", units.mu_amu,
                    "Reduced mass in amu (physical units)");
    cmd->add_option("--alpha-anginv", units.alpha_anginv,
                    "Screening parameter in 1/Angstrom (physical units)");
}

void add_config_file(CLI::App* cmd, std::string& path) {
    cmd->add_option("--config", path,
                    "Read key = value defaults (flags take precedence)");
}

std::string trim(const std::string& s) {
    const auto begin = s.find_first_not_of(" \t\r");
    if (begin == std::string::npos)
        return "";
    return s.substr(begin, s.find_last_not_of(" \t\r") - begin + 1);
}

// Expands `--config FILE` into trailing `--key value` arguments for every
// key = value line whose flag was not given explicitly, so the precedence is
// flag > config file > built-in default.
std::vector<std::string> merge_config_args(int argc, char** argv) {
    std::vector<std::string> args(argv, argv + argc);
    std::string path;
    for (std::size_t i = 1; i < args.size(); ++i) {
        if (args[i] == "--config" && i + 1 < args.size())
            path = args[i + 1];
        else if (args[i].rfind("--config=", 0) == 0)
            path = args[i].substr(9);
    }
    if (path.empty())
        return args;

    std::ifstream file(path);
    if (!file) {
        std::cerr << "usage error: cannot read config file '" << path << "'\n";
        std::exit(1);
    }
    std::string line;
    int lineno = 0;
    while (std::getline(file, line)) {
        ++lineno;
        if (const auto hash = line.find('#'); hash != std::string::npos)
            line.erase(hash);
        line = trim(line);
        if (line.empty())
            continue;
        const auto eq = line.find('=');
        if (eq == std::string::npos) {
            std::cerr << "usage error: " << path << ":" << lineno
                      << ": expected key = value\n";
            std::exit(1);
        }
        const std::string key = trim(line.substr(0, eq));
        const std::string value = trim(line.substr(eq + 1));
        if (key.empty() || value.empty()) {
            std::cerr << "usage error: " << path << ":" << lineno
                      << ": expected key = value\n";
            std::exit(1);
        }
        const std::string flag = "--" + key;
        const bool given = std::any_of(
            args.begin() + 1, args.end(), [&flag](const std::string& a) {
                return a == flag || a.rfind(flag + "=", 0) == 0;
            });
        if (!given) {
            args.push_back(flag);
            args.push_back(value);
        }
    }
    return args;
}

// Stream that goes to --out when given, else to stdout.
struct OutputTarget {
    std::unique_ptr<std::ofstream> file;
    std::ostream* stream = &std::cout;

    explicit OutputTarget(const std::string& path) {
        if (!path.empty()) {
            file = std::make_unique<std::ofstream>(path, std::ios::binary);
            stream = file.get();
        }
    }
    bool good() const { return !file || file->good(); }
};

} // namespace

int main(int argc, char** argv) {
    CLI::App app{"Analytic bound-state spectra of the Eckart-Hellmann "
                 "potential and its Hellmann, Eckart, Coulomb and Yukawa "
                 "reductions, cross-validated by a finite-difference oracle"};
    app.require_subcommand(1);

    ehp::cli::EnergyConfig energy;
    std::string energy_out;
    std::string energy_config;
    auto* cmd_energy = app.add_subcommand("energy", "Single bound-state energy");
    cmd_energy->add_option("--model", energy.model,
                           "ehp|hellmann|eckart|coulomb|yukawa");
    cmd_energy->add_option("--A", energy.A, "Strength A (energy)");
    cmd_energy->add_option("--B", energy.B, "Strength B (energy)");
    cmd_energy->add_option("--C", energy.C, "Strength C (energy*length)");
    cmd_energy->add_option("--D", energy.D, "Strength D (energy*length)");
    cmd_energy->add_option("--alpha", energy.alpha, "Screening parameter");
    cmd_energy->add_option("--n", energy.n, "Radial quantum number");
    cmd_energy->add_option("--l", energy.l, "Angular momentum quantum number");
    cmd_energy->add_option("--variant", energy.variant, "rederived|as-printed");
    add_units_flags(cmd_energy, energy.units);
    add_config_file(cmd_energy, energy_config);

    ehp::cli::TableConfig table;
    std::string table_out;
    std::string table_config;
    auto* cmd_table = app.add_subcommand(
        "table", "Reproduce a bundled reference table as CSV");
    cmd_table->add_option("--preset", table.preset, "table1|table3|table4")
        ->required();
    cmd_table->add_option("--A", table.A, "Strength A (table3 only)");
    cmd_table->add_option("--B", table.B, "Strength B (table3 only)");
    cmd_table->add_option("--C", table.C, "Strength C (table3 only)");
    cmd_table->add_option("--D", table.D, "Strength D (table3 only)");
    cmd_table->add_option("--n-max", table.n_max, "Largest n (table3)");
    cmd_table->add_option("--l-max", table.l_max, "Largest l (table3)");
    cmd_table->add_option("--out", table_out, "Output CSV path");
    add_config_file(cmd_table, table_config);

    ehp::cli::SweepConfig sweep;
    std::string sweep_out;
    std::string sweep_config;
    auto* cmd_sweep =
        app.add_subcommand("sweep", "Energy curves against one parameter");
    cmd_sweep->add_option("--param", sweep.param, "A|B|C|D|alpha")->required();
    cmd_sweep->add_option("--from", sweep.from, "Range start")->required();
    cmd_sweep->add_option("--to", sweep.to, "Range end")->required();
    cmd_sweep->add_option("--samples", sweep.samples, "Sample count (>= 2)")
        ->required();
    cmd_sweep->add_option("--states", sweep.states,
                          "Comma-separated n:l pairs or labels (e.g. 0:0,2P)");
    cmd_sweep->add_option("--A", sweep.A, "Fixed strength A");
    cmd_sweep->add_option("--B", sweep.B, "Fixed strength B");
    cmd_sweep->add_option("--C", sweep.C, "Fixed strength C");
    cmd_sweep->add_option("--D", sweep.D, "Fixed strength D");
    cmd_sweep->add_option("--alpha", sweep.alpha, "Fixed screening parameter");
    cmd_sweep->add_option("--variant", sweep.variant, "rederived|as-printed");
    cmd_sweep->add_option("--out", sweep_out, "Output CSV path");
    add_units_flags(cmd_sweep, sweep.units);
    add_config_file(cmd_sweep, sweep_config);

    ehp::cli::ValidateConfig validate;
    std::string validate_out;
    std::string validate_config;
    auto* cmd_validate = app.add_subcommand(
        "validate", "Adjudicate formula variants against the oracle");
    cmd_validate->add_option("--A", validate.A, "Strength A")->required();
    cmd_validate->add_option("--B", validate.B, "Strength B")->required();
    cmd_validate->add_option("--C", validate.C, "Strength C")->required();
    cmd_validate->add_option("--D", validate.D, "Strength D")->required();
    cmd_validate->add_option("--alpha", validate.alpha, "Screening parameter");
    cmd_validate->add_option("--states", validate.states,
                             "Comma-separated n:l pairs or labels");
    cmd_validate->add_option("--grid-points", validate.grid_points,
                             "Interior grid points (coarsest level)");
    cmd_validate->add_option("--r-min", validate.r_min, "Lower Dirichlet wall");
    cmd_validate->add_option("--r-max", validate.r_max, "Upper Dirichlet wall");
    cmd_validate->add_option("--out", validate_out, "Report CSV path");
    add_units_flags(cmd_validate, validate.units);
    add_config_file(cmd_validate, validate_config);

    ehp::cli::WavefunctionConfig wavefunction;
    std::string wavefunction_out;
    std::string wavefunction_config;
    auto* cmd_wavefunction = app.add_subcommand(
        "wavefunction", "Normalized radial wavefunction samples as CSV");
    cmd_wavefunction->add_option("--A", wavefunction.A, "Strength A")->required();
    cmd_wavefunction->add_option("--B", wavefunction.B, "Strength B")->required();
    cmd_wavefunction->add_option("--C", wavefunction.C, "Strength C")->required();
    cmd_wavefunction->add_option("--D", wavefunction.D, "Strength D")->required();
    cmd_wavefunction->add_option("--alpha", wavefunction.alpha,
                                 "Screening parameter");
    cmd_wavefunction->add_option("--n", wavefunction.n, "Radial quantum number");
    cmd_wavefunction->add_option("--l", wavefunction.l,
                                 "Angular momentum quantum number");
    cmd_wavefunction->add_option("--grid-points", wavefunction.grid_points,
                                 "Sample grid points");
    cmd_wavefunction->add_option("--r-min", wavefunction.r_min,
                                 "Lower Dirichlet wall");
    cmd_wavefunction->add_option("--r-max", wavefunction.r_max,
                                 "Upper Dirichlet wall");
    cmd_wavefunction->add_option("--out", wavefunction_out, "Output CSV path");
    add_units_flags(cmd_wavefunction, wavefunction.units);
    add_config_file(cmd_wavefunction, wavefunction_config);

    std::vector<std::string> args = merge_config_args(argc, argv);
    try {
        args.erase(args.begin()); // drop program name
        std::reverse(args.begin(), args.end());
        app.parse(args);
    } catch (const CLI::CallForHelp& e) {
        return app.exit(e);
    } catch (const CLI::ParseError& e) {
        app.exit(e);
        return 1; // uniform usage-error code
    }

    try {
        if (cmd_energy->parsed())
            return ehp::cli::cmd_energy(energy, std::cout, std::cerr);

        if (cmd_table->parsed()) {
            OutputTarget out(table_out);
            const int rc = ehp::cli::cmd_table(table, *out.stream, std::cerr);
            return out.good() ? rc : 1;
        }

        if (cmd_sweep->parsed()) {
            OutputTarget out(sweep_out);
            const int rc = ehp::cli::cmd_sweep(sweep, *out.stream, std::cerr);
            return out.good() ? rc : 1;
        }

        if (cmd_validate->parsed()) {
            OutputTarget out(validate_out);
            std::ostream& console = validate_out.empty() ? std::cerr : std::cout;
            const int rc =
                ehp::cli::cmd_validate(validate, *out.stream, console, std::cerr);
            return out.good() ? rc : 1;
        }

        if (cmd_wavefunction->parsed()) {
            OutputTarget out(wavefunction_out);
            const int rc =
                ehp::cli::cmd_wavefunction(wavefunction, *out.stream, std::cerr);
            return out.good() ? rc : 1;
        }
    } catch (const std::exception& ex) {
        std::cerr << "error: " << ex.what() << '\n';
        return 1;
    }
    return 1;
}
