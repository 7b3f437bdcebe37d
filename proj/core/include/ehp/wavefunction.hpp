#ifndef EHP_WAVEFUNCTION_HPP
#define EHP_WAVEFUNCTION_HPP

#include <stdexcept>
#include <vector>

#include "ehp/result.hpp"
#include "ehp/spectra.hpp"

namespace ehp {

struct GridSpec; // defined in ehp/oracle.hpp

/// Thrown when the Pochhammer denominator of the terminating series hits a
/// pole (c a non-positive integer not past the truncation point).
struct PoleInSeries : std::domain_error {
    using std::domain_error::domain_error;
};

/// Thrown when normalization quadrature fails to settle after the maximum
/// number of interval halvings.
struct QuadratureFailure : std::runtime_error {
    using std::runtime_error::runtime_error;
};

/// Terminating Gauss hypergeometric sum 2F1(a, -n; c; x): the degree-n
/// polynomial sum_k (a)_k (-n)_k / ((c)_k k!) x^k, evaluated exactly by the
/// Pochhammer recurrence.
double gauss_2f1_terminating(double a, int n, double c, double x);

/// Monomial coefficients (length n+1) of the terminating series above.
std::vector<double> hypergeometric_poly_coeffs(double a, int n, double c);

/// Radial bound-state wavefunction u(r) = N x^lambda (1-x)^nu P(x) with
/// x = e^{-alpha r} and P the terminating hypergeometric polynomial.
/// Evaluation goes through log space: lambda reaches ~1.5e3 at small
/// screening, where x^lambda underflows long before u itself does.
struct RadialWavefunction {
    PotentialParams params;
    QuantumNumbers qn;
    PhysicalContext ctx;
    double lambda = 0.0;
    double nu = 0.0;
    double epsilon = 0.0;
    double energy = 0.0;
    std::vector<double> poly_coeffs; // degree-n polynomial, n+1 entries
    std::vector<double> om_coeffs;   // same polynomial in powers of 1 - x;
                                     // near x = 1 the monomial form cancels
                                     // catastrophically, this one does not
    double norm = 1.0;

    double operator()(double r) const;
    /// Analytic d^2u/dr^2 via polynomial recombination (no finite differences).
    double second_derivative(double r) const;
};

Result<RadialWavefunction> build_wavefunction(const PotentialParams& params,
                                              QuantumNumbers qn,
                                              const PhysicalContext& ctx,
                                              Variant variant = Variant::Rederived);

/// Copy with norm set so that the integral of u^2 over (0, inf) is 1.
/// Composite Simpson on geometric panels below the peak and uniform panels
/// above it, halved until two successive totals agree to 1e-10 relative;
/// more than 24 halvings raises QuadratureFailure.
RadialWavefunction normalize(const RadialWavefunction& wf);

/// Strict sign changes of u on the interior of the grid.  The count is
/// re-checked on doubled grids until stable, so a too-coarse input grid is
/// refined rather than silently miscounted.
int count_nodes(const RadialWavefunction& wf, const GridSpec& grid);

} // namespace ehp

#endif
