// Acceptance suite: runs every criterion at its pinned tolerance and prints
// one pass/fail line per criterion.  Optional argv[1] is the path to the
// built CLI binary; the errata criterion exercises it as a subprocess.

#include <chrono>
#include <cmath>
#include <cstdio>
#include <fstream>
#include <iostream>
#include <random>
#include <sstream>
#include <string>
#include <sys/wait.h>
#include <vector>

#include "ehp/cli.hpp"
#include "ehp/molecules.hpp"
#include "ehp/nufa.hpp"
#include "ehp/oracle.hpp"
#include "ehp/reference_tables.hpp"
#include "ehp/spectra.hpp"
#include "ehp/wavefunction.hpp"

using namespace ehp;

namespace {

const PhysicalContext kHalf = PhysicalContext::natural(1.0, 0.5);

int g_failures = 0;

void report(int index, const std::string& title, bool pass,
            const std::string& detail) {
    std::printf("[%s] criterion %d: %s%s%s\n", pass ? "PASS" : "FAIL", index,
                title.c_str(), detail.empty() ? "" : " | ", detail.c_str());
    std::fflush(stdout);
    if (!pass)
        ++g_failures;
}

double seconds_since(std::chrono::steady_clock::time_point t0) {
    return std::chrono::duration<double>(std::chrono::steady_clock::now() - t0)
        .count();
}

std::string fmt(double v) { return cli::format_double(v); }

struct OracleSample {
    PotentialParams params;
    QuantumNumbers qn;
};

std::vector<OracleSample> reference_rows() {
    std::vector<OracleSample> rows;
    for (const auto& row : tables::kHellmannReference)
        rows.push_back({{0.0, 0.0, 2.0, -1.0, row.alpha},
                        from_spectroscopic(row.state)});
    return rows;
}

std::vector<OracleSample> extra_oracle_samples() {
    return {
        {{2.0, 1.0, 0.0, 0.0, 0.1}, {0, 0}},   // Eckart well
        {{2.0, 1.0, 0.0, 0.0, 0.1}, {1, 0}},
        {{0.0, 0.0, 0.0, -1.0, 0.01}, {0, 0}}, // attractive Yukawa
        {{0.0, 0.0, 0.0, -1.0, 0.01}, {1, 0}},
        {{0.0, 0.0, 0.0, -2.0, 0.05}, {0, 1}},
        {{0.0, 0.0, 0.0, -2.0, 0.05}, {1, 1}},
    };
}

// ---- randomized bound-regime samples shared by criteria 4 and 5 ----------

enum class Family { Hellmann, Eckart, Yukawa, ScreenedCoulomb };

struct FamilySample {
    PotentialParams params;
    QuantumNumbers qn;
};

// Samples are kept away from the binding threshold (epsilon comparable to
// the coefficients entering it) so the 1e-12 identity checks are not
// dominated by cancellation noise.
std::vector<FamilySample> sample_family(Family family, int want) {
    std::mt19937 rng(family == Family::Hellmann        ? 101
                     : family == Family::Eckart        ? 202
                     : family == Family::Yukawa        ? 303
                                                       : 404);
    std::uniform_real_distribution<double> Cs(0.5, 3.0), Ds(-2.0, -0.2),
        As(0.5, 3.0), Bs(0.1, 1.5), als(0.002, 0.05), eals(0.05, 0.2),
        cals(1e-4, 1e-2);
    std::uniform_int_distribution<int> ns(0, 3), ls(0, 3);

    std::vector<FamilySample> samples;
    for (int tries = 0; tries < 100000 && (int)samples.size() < want; ++tries) {
        PotentialParams p{0, 0, 0, 0, 0.01};
        switch (family) {
        case Family::Hellmann:
            p = {0.0, 0.0, Cs(rng), Ds(rng), als(rng)};
            break;
        case Family::Eckart:
            p = {As(rng), Bs(rng), 0.0, 0.0, eals(rng)};
            break;
        case Family::Yukawa:
            p = {0.0, 0.0, 0.0, Ds(rng), als(rng)};
            break;
        case Family::ScreenedCoulomb:
            p = {0.0, 0.0, Cs(rng), 0.0, cals(rng)};
            break;
        }
        const QuantumNumbers qn{ns(rng), ls(rng)};
        const auto level = ehp_energy(p, qn, kHalf, Variant::Rederived);
        if (!level.ok() || !level->bound)
            continue;
        const auto d = dimensionless(p, kHalf, qn.l);
        const double s = level->s;
        const double eps = s * s + d.beta2 - d.gamma;
        const double scale = s * s + std::abs(d.beta0) + std::abs(d.beta2) +
                             std::abs(d.beta3) + d.gamma + 1.0;
        if (eps < 0.01 * scale || s < 0.5)
            continue;
        samples.push_back({p, qn});
    }
    return samples;
}

// ---- subprocess helper -----------------------------------------------------

struct RunResult {
    int exit_code = -1;
    std::string output;
};

RunResult run_command(const std::string& command) {
    RunResult result;
    FILE* pipe = popen((command + " 2>&1").c_str(), "r");
    if (!pipe)
        return result;
    char buffer[4096];
    while (std::fgets(buffer, sizeof buffer, pipe))
        result.output += buffer;
    const int status = pclose(pipe);
    if (WIFEXITED(status))
        result.exit_code = WEXITSTATUS(status);
    return result;
}

// ---- criteria --------------------------------------------------------------

void criterion1_reference_table() {
    const auto t0 = std::chrono::steady_clock::now();
    double worst = 0.0;
    int rows = 0;
    bool ok = true;
    for (const auto& row : tables::kHellmannReference) {
        const QuantumNumbers qn = from_spectroscopic(row.state);
        const PotentialParams params{0.0, 0.0, 2.0, -1.0, row.alpha};
        const auto rd = ehp_energy(params, qn, kHalf, Variant::Rederived);
        const auto ap = ehp_energy(params, qn, kHalf, Variant::AsPrinted);
        if (!rd.ok() || !ap.ok()) {
            ok = false;
            continue;
        }
        worst = std::max({worst, std::abs(rd->energy - row.energy),
                          std::abs(ap->energy - row.energy)});
        ++rows;
    }
    const double elapsed = seconds_since(t0);
    ok = ok && rows == 30 && worst <= 5e-9 && elapsed < 1.0;
    report(1, "30-row reference-table reproduction at 5e-9", ok,
           "rows=" + std::to_string(rows) + " max_gap=" + fmt(worst) +
               " runtime=" + fmt(elapsed) + "s");
}

void criterion2_oracle_equivalence() {
    const auto t0 = std::chrono::steady_clock::now();
    double worst_ratio = 0.0;
    int checked = 0;
    bool ok = true;
    int max_points = 0;

    auto samples = reference_rows();
    const auto extra = extra_oracle_samples();
    samples.insert(samples.end(), extra.begin(), extra.end());

    for (const auto& sample : samples) {
        const auto level = ehp_energy(sample.params, sample.qn, kHalf,
                                      Variant::Rederived);
        if (!level.ok() || !level->bound) {
            ok = false;
            continue;
        }
        const GridSpec grid =
            auto_grid(sample.params, sample.qn.l, kHalf,
                      OracleMode::GreeneAldrich, sample.qn.n + 1, 10239,
                      level->energy);
        const auto oracle =
            eigen_lowest(sample.params, sample.qn.l, kHalf,
                         OracleMode::GreeneAldrich, grid, sample.qn.n + 1);
        max_points = std::max(max_points, oracle.grid.points);
        const double gap =
            std::abs(oracle.richardson[sample.qn.n].value - level->energy);
        const double tol = std::max(1e-6, 1e-4 * std::abs(level->energy));
        worst_ratio = std::max(worst_ratio, gap / tol);
        if (gap > tol)
            ok = false;
        ++checked;
    }
    const double elapsed = seconds_since(t0);
    ok = ok && checked == 36 && elapsed < 120.0 && max_points <= 40960;
    report(2, "analytic spectrum equals the screened-mode oracle", ok,
           "configs=" + std::to_string(checked) +
               " worst_gap/tol=" + fmt(worst_ratio) +
               " finest_points=" + std::to_string(max_points) +
               " runtime=" + fmt(elapsed) + "s");
}

void criterion3_coulomb_limit() {
    // The pinned tolerance is 1e-5 relative at alpha = 1e-6.  The screened
    // level approaches the Coulomb value linearly with slope (N^2-gamma)/N^2
    // * C/2, so the relative gap is alpha*(N^2-gamma); for (2,1) that is
    // 14*alpha = 1.4e-5, above the stated bound.  The criterion is evaluated
    // exactly as stated and reported honestly.
    const double alpha = 1e-6;
    bool ok = true;
    std::string detail;
    for (const auto& qn :
         {QuantumNumbers{0, 0}, {1, 0}, {0, 1}, {2, 1}}) {
        const double N = qn.n + qn.l + 1;
        const double reference = -1.0 / (N * N);
        const auto level = hellmann_energy(2.0, 0.0, alpha, qn, kHalf);
        const double rel =
            level.ok()
                ? std::abs(level->energy - reference) / std::abs(reference)
                : std::numeric_limits<double>::infinity();
        if (rel > 1e-5)
            ok = false;
        detail += "(" + std::to_string(qn.n) + "," + std::to_string(qn.l) +
                  ")=" + fmt(rel) + " ";
    }
    report(3, "Coulomb limit within 1e-5 relative at alpha=1e-6", ok,
           detail + "bound=1e-5");
}

void criterion4_reduction_identities() {
    bool ok = true;
    std::string detail;

    const auto check_family = [&](Family family, const char* name,
                                  auto&& reference_energy) {
        const auto samples = sample_family(family, 100);
        double worst = 0.0;
        for (const auto& s : samples) {
            const auto full = ehp_energy(s.params, s.qn, kHalf);
            const double ref = reference_energy(s);
            const double rel =
                std::abs(full->energy - ref) / std::abs(ref);
            worst = std::max(worst, rel);
        }
        if (samples.size() < 100 || worst > 1e-12)
            ok = false;
        detail += std::string(name) + "=" + fmt(worst) + "(" +
                  std::to_string(samples.size()) + ") ";
    };

    check_family(Family::Hellmann, "hellmann", [](const FamilySample& s) {
        return hellmann_energy(s.params.C, s.params.D, s.params.alpha, s.qn,
                               kHalf)
            ->energy;
    });
    check_family(Family::Eckart, "eckart", [](const FamilySample& s) {
        return eckart_energy(s.params.A, s.params.B, s.params.alpha, s.qn,
                             kHalf)
            ->energy;
    });
    check_family(Family::Yukawa, "yukawa", [](const FamilySample& s) {
        return yukawa_energy(s.params.D, s.params.alpha, s.qn, kHalf)->energy;
    });
    // The Coulomb reduction also zeroes the screening, which cannot be done
    // at argument level; the exact finite-alpha identity is
    //   E(A=B=D=0) = E_coulomb - C a (N^2-g)/(2N^2) - ks (T^2/(4N^2) - g),
    // with T = g + N^2, so the Coulomb formula is recovered by removing the
    // known screening terms.
    check_family(Family::ScreenedCoulomb, "coulomb", [](const FamilySample& s) {
        const double N = s.qn.n + s.qn.l + 1;
        const double g = double(s.qn.l) * (s.qn.l + 1);
        const double T = g + N * N;
        const double ks = kinetic_scale(kHalf, s.params.alpha);
        const double screening =
            -s.params.C * s.params.alpha * (N * N - g) / (2.0 * N * N) -
            ks * (T * T / (4.0 * N * N) - g);
        return coulomb_energy(s.params.C, s.qn, kHalf)->energy + screening;
    });

    report(4, "special-case reductions agree to 1e-12 over 100 samples each",
           ok, detail + "bound=1e-12");
}

void criterion5_closure_residuals() {
    double worst6 = 0.0, worst7 = 0.0;
    int solutions = 0;
    bool ok = true;

    const auto check = [&](const PotentialParams& params, QuantumNumbers qn) {
        const auto coeffs = to_nufa(dimensionless(params, kHalf, qn.l));
        const auto sol = quantize(coeffs, qn.n);
        if (!sol.ok())
            return;
        const auto [r6, r7] = residuals(*sol, coeffs);
        const double s6 =
            std::abs(r6) / std::max(1.0, std::abs(coeffs.xi3(sol->epsilon)));
        const double s7 =
            std::abs(r7) / std::max(1.0, std::abs(coeffs.xi1(sol->epsilon)));
        worst6 = std::max(worst6, s6);
        worst7 = std::max(worst7, s7);
        if (s6 > 1e-10 || s7 > 1e-10)
            ok = false;
        ++solutions;
    };

    for (const auto& row : reference_rows())
        check(row.params, row.qn);
    for (const auto family : {Family::Hellmann, Family::Eckart, Family::Yukawa,
                              Family::ScreenedCoulomb})
        for (const auto& s : sample_family(family, 100))
            check(s.params, s.qn);

    ok = ok && solutions > 400;
    report(5, "closure residuals below 1e-10 on every quantized solution", ok,
           "solutions=" + std::to_string(solutions) + " worst_r6=" +
               fmt(worst6) + " worst_r7=" + fmt(worst7) + " bound=1e-10");
}

void criterion6_wavefunction_suite() {
    bool ok = true;
    double worst_norm = 0.0, worst_res = 0.0;
    int states = 0;
    for (const auto& row : reference_rows()) {
        const auto built = build_wavefunction(row.params, row.qn, kHalf);
        if (!built.ok()) {
            ok = false;
            continue;
        }
        const auto wf = normalize(*built);

        // node count equals n on a self-refining grid
        const double kappa =
            std::sqrt(kHalf.inverse_kinetic() * -wf.energy);
        const GridSpec grid{0.0, std::max(40.0 / kappa, 20.0), 8191};
        if (count_nodes(wf, grid) != row.qn.n)
            ok = false;

        // independent normalization check (trapezoid, denser near nothing)
        const int m = 120000;
        const double h = grid.r_max / m;
        double integral = 0.0;
        for (int i = 1; i < m; ++i) {
            const double u = wf(i * h);
            integral += u * u;
        }
        integral *= h;
        worst_norm = std::max(worst_norm, std::abs(integral - 1.0));
        if (std::abs(integral - 1.0) > 1e-6)
            ok = false;

        // residual in the screened radial equation, scaled by max |u''|
        const double ik = kHalf.inverse_kinetic();
        double max_res = 0.0, max_upp = 0.0;
        for (int i = 1; i < 1500; ++i) {
            const double r = grid.r_max * i / 1500.0;
            const double upp = wf.second_derivative(r);
            const double veff =
                effective_potential(row.params, row.qn.l, kHalf,
                                    OracleMode::GreeneAldrich, r);
            max_res = std::max(max_res,
                               std::abs(upp + ik * (wf.energy - veff) * wf(r)));
            max_upp = std::max(max_upp, std::abs(upp));
        }
        worst_res = std::max(worst_res, max_res / max_upp);
        if (max_res > 1e-6 * max_upp)
            ok = false;

        // the series truncates: coefficient n+1 is exactly zero
        const auto coeffs =
            to_nufa(dimensionless(row.params, kHalf, row.qn.l));
        const auto sol = quantize(coeffs, row.qn.n);
        const int n = row.qn.n;
        const double next = wf.poly_coeffs[n] * (sol->a + n) *
                            (-double(n) + n) / ((sol->c + n) * (n + 1.0));
        if (next != 0.0)
            ok = false;
        ++states;
    }
    ok = ok && states == 30;
    report(6, "wavefunction nodes, norm, radial-equation residual, termination",
           ok,
           "states=" + std::to_string(states) + " worst|int-1|=" +
               fmt(worst_norm) + " worst_residual=" + fmt(worst_res));
}

void criterion7_trends() {
    bool ok = true;
    std::string detail;

    // energies fall as the attractive strengths grow
    const double h = 1e-5;
    for (const auto& base :
         {PotentialParams{0.5, 0.1, 2.0, -1.0, 0.01},
          PotentialParams{1.0, 0.3, 1.5, -0.5, 0.02},
          PotentialParams{0.0, 0.0, 2.0, -1.0, 0.005}}) {
        for (const auto& qn :
             {QuantumNumbers{0, 0}, {1, 0}, {0, 1}, {1, 2}}) {
            PotentialParams lo = base, hi = base;
            lo.A -= h;
            hi.A += h;
            const auto ea = ehp_energy(hi, qn, kHalf);
            const auto eb = ehp_energy(lo, qn, kHalf);
            if (!ea.ok() || !eb.ok() || ea->energy - eb->energy > 0.0)
                ok = false;
            lo = base;
            hi = base;
            lo.C -= h;
            hi.C += h;
            const auto ec = ehp_energy(hi, qn, kHalf);
            const auto ed = ehp_energy(lo, qn, kHalf);
            if (!ec.ok() || !ed.ok() || ec->energy - ed->energy > 0.0)
                ok = false;
        }
    }
    detail += "dE/dA<=0 dE/dC<=0 ";

    // excited levels sit above lower ones
    for (const auto& params :
         {PotentialParams{0.0, 0.0, 2.0, -1.0, 0.001},
          PotentialParams{2.0, 1.0, 0.0, 0.0, 0.1}}) {
        for (int l = 0; l <= 2; ++l) {
            const auto levels =
                enumerate_bound_states(params, l, kHalf, Variant::Rederived, 6);
            for (std::size_t i = 1; i < levels.size(); ++i)
                if (levels[i].energy <= levels[i - 1].energy)
                    ok = false;
        }
    }
    detail += "E(n+1)>E(n) ";

    // screening error of the substituted Hamiltonian shrinks with alpha
    double previous = std::numeric_limits<double>::infinity();
    std::string gaps;
    for (const double alpha : {0.15, 0.1, 0.05, 0.01, 0.001}) {
        const PotentialParams p{0.0, 0.0, 2.0, -1.0, alpha};
        const auto level = ehp_energy(p, {0, 0}, kHalf);
        const double kappa =
            std::sqrt(kHalf.inverse_kinetic() * -level->energy);
        const GridSpec grid{0.0, 40.0 / kappa, 5119};
        const auto ga =
            eigen_lowest(p, 0, kHalf, OracleMode::GreeneAldrich, grid, 1);
        const auto exact = eigen_lowest(p, 0, kHalf, OracleMode::Exact, grid, 1);
        const double gap =
            std::abs(ga.richardson[0].value - exact.richardson[0].value);
        if (gap >= previous)
            ok = false;
        previous = gap;
        gaps += fmt(gap) + " ";
    }
    detail += "screening gaps: " + gaps;

    report(7, "monotonic trends behind the published figures", ok, detail);
}

void criterion8_errata_report(const std::string& cli_path) {
    bool ok = true;
    std::string detail;

    if (cli_path.empty()) {
        report(8, "errata adjudication (honest-negative)", false,
               "CLI binary path not supplied");
        return;
    }

    // the as-printed formula on the first published strength column: report
    // completes, flags the absence of a bound state, and the oracle agrees
    const std::string validate_csv = "ehp_acceptance_validate.csv";
    const auto validate = run_command(
        cli_path +
        " validate --A 0.01 --B 0.5 --C 1 --D -1 --alpha 0.025 --hbar 1 "
        "--mu 1 --states 0:0 --grid-points 2047 --out " + validate_csv);
    if (validate.exit_code != 0)
        ok = false;
    std::ifstream csv(validate_csv);
    std::string header, row;
    std::getline(csv, header);
    std::getline(csv, row);
    if (row.find("no-bound-state") == std::string::npos)
        ok = false;
    if (row.find("-0.477574") == std::string::npos)
        ok = false; // as-printed value present, far from the published -0.5264
    detail += "validate_exit=" + std::to_string(validate.exit_code) + " ";

    // full-potential preset: every published cell disagrees with the
    // as-printed formula and the gap column says by how much
    const std::string table1_csv = "ehp_acceptance_table1.csv";
    const auto table1 =
        run_command(cli_path + " table --preset table1 --out " + table1_csv);
    int rows = 0, nonzero_gaps = 0;
    {
        std::ifstream in(table1_csv);
        std::string line;
        std::getline(in, line);
        while (std::getline(in, line)) {
            ++rows;
            const auto last_comma = line.find_last_of(',');
            const std::string gap = line.substr(last_comma + 1);
            if (!gap.empty() && std::stod(gap) > 1e-3)
                ++nonzero_gaps;
        }
    }
    if (table1.exit_code != 0 || rows != 120 || nonzero_gaps != 120)
        ok = false;
    detail += "table1_rows=" + std::to_string(rows) + " nonzero_gaps=" +
              std::to_string(nonzero_gaps) + " ";

    // the molecular table is not reproducible and the tool must say so
    const auto table3 = run_command(cli_path + " table --preset table3");
    if (table3.exit_code != 1 ||
        table3.output.find("never stated") == std::string::npos)
        ok = false;
    const auto table3_explicit = run_command(
        cli_path + " table --preset table3 --A 1 --B 1 --C 4 --D -4 "
                   "--n-max 1 --l-max 1");
    if (table3_explicit.exit_code != 0)
        ok = false;
    detail += "table3_refusal_exit=" + std::to_string(table3.exit_code);

    report(8, "errata adjudication (honest-negative)", ok, detail);
}

} // namespace

int main(int argc, char** argv) {
    const std::string cli_path = argc > 1 ? argv[1] : "";

    criterion1_reference_table();
    criterion2_oracle_equivalence();
    criterion3_coulomb_limit();
    criterion4_reduction_identities();
    criterion5_closure_residuals();
    criterion6_wavefunction_suite();
    criterion7_trends();
    criterion8_errata_report(cli_path);

    std::printf("%d of 8 criteria passed\n", 8 - g_failures);
    return g_failures == 0 ? 0 : 1;
}
