#ifndef EHP_ORACLE_HPP
#define EHP_ORACLE_HPP

#include <optional>
#include <string>
#include <vector>

#include "ehp/potential.hpp"
#include "ehp/result.hpp"
#include "ehp/spectra.hpp"
#include "ehp/units.hpp"

namespace ehp {

/// Uniform radial grid with Dirichlet walls at r_min and r_max and `points`
/// interior nodes at r_min + i*h, h = (r_max - r_min)/(points + 1).
///
/// Atomic problems use r_min = 0: the true boundary condition u(0) = 0 sits
/// on the wall and the first interior node is one spacing h from the origin,
/// so the singular potential terms are never evaluated at r = 0.  A positive
/// r_min gives a genuine box, used by the particle-in-a-box sanity checks.
struct GridSpec {
    double r_min = 0.0;
    double r_max = 1.0;
    int points = 3;

    double spacing() const { return (r_max - r_min) / (points + 1); }
    /// Same walls, halved spacing (nodes nest).
    GridSpec doubled() const { return {r_min, r_max, 2 * points + 1}; }
};

enum class OracleMode { GreeneAldrich, Exact };

/// Effective radial potential seen by u(r).  Exact mode is the bare
/// potential plus the true centrifugal term; GreeneAldrich mode applies the
/// screening substitutions 1/r -> alpha/(1-e^{-alpha r}) and the squared
/// analogue to every 1/r and 1/r^2 occurrence, which is precisely the
/// operator the closed-form spectrum solves.
double effective_potential(const PotentialParams& params, int l,
                           const PhysicalContext& ctx, OracleMode mode, double r);

struct RichardsonEstimate {
    double value = 0.0;          // h^2-extrapolated eigenvalue
    double error = 0.0;          // |E(h/2) - E(h)| / 3
    double observed_order = 0.0; // log2 of successive-difference ratio
};

struct OracleResult {
    GridSpec grid; // finest grid actually used
    OracleMode mode = OracleMode::GreeneAldrich;
    std::vector<double> eigenvalues; // finest-grid values, lowest first
    std::vector<RichardsonEstimate> richardson;
    double threshold = 0.0; // continuum edge of the modelled problem
    int bound_count = 0;    // finest-grid eigenvalues below the threshold
    bool truncated = false; // fewer than k eigenvalues below the threshold
};

/// Lowest k eigenvalues of the three-point finite-difference Hamiltonian by
/// Sturm-sequence bisection (guaranteed ordered, none missed), repeated on a
/// doubled and re-doubled grid for Richardson extrapolation and an observed
/// convergence order.  The requested grid is the coarsest of the three.
OracleResult eigen_lowest(const PotentialParams& params, int l,
                          const PhysicalContext& ctx, OracleMode mode,
                          const GridSpec& grid, int k);

/// Origin-anchored grid sized for the k-th bound state: r_max from the
/// analytic energy estimate when available (40 decay lengths), else 60/alpha,
/// then doubled until the target eigenvalue stops moving.
GridSpec auto_grid(const PotentialParams& params, int l,
                   const PhysicalContext& ctx, OracleMode mode, int k,
                   int points, std::optional<double> energy_estimate);

struct AdjudicationRow {
    QuantumNumbers qn;
    SolveStatus status_rederived = SolveStatus::Ok;
    SolveStatus status_as_printed = SolveStatus::Ok;
    std::optional<double> rederived;
    std::optional<double> as_printed;
    std::optional<double> oracle_ga;    // empty when the GA Hamiltonian has no
                                        // index-n state below its threshold
    std::optional<double> oracle_exact;
    std::optional<double> gap_rederived;
    std::optional<double> gap_printed;
    std::string verdict;
};

/// Compare both closed-form variants against the Greene-Aldrich-mode oracle
/// eigenvalue of the same index; the verdict names the variant with the
/// smaller gap, or records an agreed absence of bound states.
AdjudicationRow adjudicate(const PotentialParams& params, QuantumNumbers qn,
                           const PhysicalContext& ctx, const GridSpec& grid);

} // namespace ehp

#endif
