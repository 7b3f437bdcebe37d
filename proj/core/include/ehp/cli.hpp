#ifndef EHP_CLI_HPP
#define EHP_CLI_HPP

#include <iosfwd>
#include <optional>
#include <stdexcept>
#include <string>
#include <vector>

#include "ehp/spectra.hpp"
#include "ehp/units.hpp"

namespace ehp::cli {

/// Raised for incomplete or contradictory command configuration; commands
/// report it on the error stream and exit with code 1.
struct UsageError : std::runtime_error {
    using std::runtime_error::runtime_error;
};

/// Shortest round-tripping decimal form, used for every CSV number so that
/// identical invocations emit byte-identical files.
std::string format_double(double v);

/// Fixed-point rendering with the given number of significant digits.
std::string format_significant(double v, int digits);

/// Unit selection shared by all commands.  Natural mode takes explicit hbar
/// and mu; physical mode (eV/Angstrom) takes either a catalog molecule or an
/// explicit reduced mass in amu, optionally with an explicit screening
/// parameter in 1/Angstrom.
struct UnitsConfig {
    std::string units = "natural";
    double hbar = 1.0;
    double mu = 1.0;
    std::string molecule;
    std::string catalog_path; // molecule lookup file; empty = builtin catalog
    std::optional<double> mu_amu;
    std::optional<double> alpha_anginv;
};

struct ResolvedUnits {
    PhysicalContext ctx;
    std::optional<double> alpha; // screening from the molecule catalog, if any
};

ResolvedUnits resolve_units(const UnitsConfig& units);

/// "n:l" pairs or spectroscopic labels, comma separated ("0:0,1S,2P").
std::vector<QuantumNumbers> parse_states(const std::string& text);

// ---------------------------------------------------------------- energy --
struct EnergyConfig {
    std::string model = "ehp"; // ehp|hellmann|eckart|coulomb|yukawa
    std::optional<double> A, B, C, D, alpha;
    int n = 0;
    int l = 0;
    UnitsConfig units;
    std::string variant = "rederived";
};

/// Prints the level energy (12 significant digits) and its status.
/// Exit codes: 0 bound, 2 not bound, 1 usage error.
int cmd_energy(const EnergyConfig& cfg, std::ostream& out, std::ostream& err);

// ----------------------------------------------------------------- table --
struct TableConfig {
    std::string preset; // table1|table3|table4
    std::optional<double> A, B, C, D; // required by table3 only
    int n_max = 5; // table3 extent
    int l_max = 5;
};

/// Emits one CSV row per reference-table cell.  The bundled reference values
/// and both formula variants appear side by side with absolute gaps; the
/// molecular preset (table3) refuses to run without explicit strengths since
/// none were ever published for it.
int cmd_table(const TableConfig& cfg, std::ostream& out, std::ostream& err);

// ----------------------------------------------------------------- sweep --
struct SweepConfig {
    std::string param; // A|B|C|D|alpha
    double from = 0.0;
    double to = 0.0;
    int samples = 0;
    std::string states;
    std::optional<double> A, B, C, D, alpha;
    UnitsConfig units;
    std::string variant = "rederived";
};

/// One CSV column per requested state; cells without a bound level are left
/// empty.  Unset non-swept strengths default to the published figure-caption
/// values.
int cmd_sweep(const SweepConfig& cfg, std::ostream& out, std::ostream& err);

// -------------------------------------------------------------- validate --
struct ValidateConfig {
    std::optional<double> A, B, C, D, alpha;
    UnitsConfig units;
    std::string states;
    int grid_points = 10239;
    std::optional<double> r_min, r_max;
};

/// Adjudication report: both closed-form variants against the
/// Greene-Aldrich and exact finite-difference oracles.  Exit 0 when every
/// bound row's rederived gap is within max(1e-6, 1e-4 |E|).
int cmd_validate(const ValidateConfig& cfg, std::ostream& csv,
                 std::ostream& console, std::ostream& err);

// ---------------------------------------------------------- wavefunction --
struct WavefunctionConfig {
    std::optional<double> A, B, C, D, alpha;
    int n = 0;
    int l = 0;
    UnitsConfig units;
    int grid_points = 4095;
    std::optional<double> r_min, r_max;
};

/// Normalized u(r) sampled on the oracle grid as CSV, with norm, exponents
/// and node count in comment lines.  Exit 2 when the state is not bound.
int cmd_wavefunction(const WavefunctionConfig& cfg, std::ostream& out,
                     std::ostream& err);

} // namespace ehp::cli

#endif
