#ifndef EHP_NUFA_HPP
#define EHP_NUFA_HPP

#include <array>
#include <utility>

#include "ehp/potential.hpp"
#include "ehp/result.hpp"

namespace ehp {

/// One quantized level of the parametric NUFA equation.
///
/// The trial solution psi(z) = z^lambda (1-z)^nu f(z) closes into a Gauss
/// hypergeometric equation; termination of the 2F1 series (b = -n exactly)
/// selects the discrete epsilon.  lambda >= 0 and nu >= 1/2 are forced by the
/// boundary conditions, not by branch choice in the defining quadratics.
struct NufaSolution {
    double lambda = 0.0;
    double nu = 0.0;
    double epsilon = 0.0;
    double a = 0.0;
    double b = 0.0; // equals -n up to rounding
    double c = 0.0; // alpha1 + 2 lambda
    int n = 0;
};

/// lambda root of lambda(lambda-1) + alpha1*lambda - xi3(eps) = 0 with the
/// non-negative branch.  Fails with NotBoundRegime when the discriminant is
/// negative (xi3 < 0 means x^lambda cannot vanish at x -> 0, i.e. r -> inf).
Result<double> lambda_of(const NufaCoefficients& coeffs, double epsilon);

/// nu >= 1/2 root of the second closure condition.  Requires the
/// epsilon-dependence to cancel (q1/a3 - q2 + a3*q3 == 0), which holds for
/// every potential mapped by this artifact.  Fails with SupercriticalBarrier
/// when the radicand is negative.
Result<double> nu_of(const NufaCoefficients& coeffs);

/// Quantized solution at radial quantum number n >= 0 for the
/// alpha1 = alpha2 = alpha3 = 1 family.  The termination condition
/// sqrt(xi1(eps)) = n + nu + sqrt(xi3(eps)) reduces, via s = sqrt(xi3), to a
/// single linear equation:
///   s = (p1 - p3 - delta^2) / (2 delta),   delta = n + nu,
/// so no iteration or tolerance enters.  s < 0 -> NoBoundState; the recovered
/// epsilon = s^2 - p3 must be positive, else NotBelowThreshold.
Result<NufaSolution> quantize(const NufaCoefficients& coeffs, int n);

/// (a, b, c) of the terminating hypergeometric factor.
std::array<double, 3> hypergeometric_params(const NufaSolution& sol);

/// Residuals of the two closure conditions; both vanish for a valid solution.
std::pair<double, double> residuals(const NufaSolution& sol,
                                    const NufaCoefficients& coeffs);

} // namespace ehp

#endif
