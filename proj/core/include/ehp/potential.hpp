#ifndef EHP_POTENTIAL_HPP
#define EHP_POTENTIAL_HPP

#include <optional>

#include "ehp/units.hpp"

namespace ehp {

/// Strengths of the Eckart-Hellmann potential
///
///   V(r) = -A e^{-ar}/(1-e^{-ar}) + B e^{-ar}/(1-e^{-ar})^2 - C/r + D e^{-ar}/r
///
/// with screening parameter a = alpha > 0.  A and B carry energy units,
/// C and D energy*length; the signs of all four are unconstrained.
struct PotentialParams {
    double A = 0.0;
    double B = 0.0;
    double C = 0.0;
    double D = 0.0;
    double alpha = 1.0;
};

/// Dimensionless reduction of PotentialParams at angular momentum l:
///   beta0 = 2 mu A/(alpha^2 hbar^2)   beta1 = 2 mu B/(alpha^2 hbar^2)
///   beta2 = 2 mu C/(alpha hbar^2)     beta3 = 2 mu D/(alpha hbar^2)
///   gamma = l(l+1)
/// epsilon = -2 mu E/(alpha^2 hbar^2) is an output slot filled by quantization.
struct DimensionlessParams {
    double beta0 = 0.0;
    double beta1 = 0.0;
    double beta2 = 0.0;
    double beta3 = 0.0;
    double gamma = 0.0;
    std::optional<double> epsilon;
};

/// Affine function of epsilon, xi(eps) = p + q*eps.  Keeping the xi
/// coefficients affine makes the quantization step exact algebra instead of
/// root finding.
struct AffineEps {
    double p = 0.0;
    double q = 0.0;
    double operator()(double eps) const { return p + q * eps; }
};

/// Coefficients of the parametric hypergeometric-form equation
///   psi'' + (a1 - a2 z)/(z(1 - a3 z)) psi'
///        + [-xi1 z^2 + xi2 z - xi3]/(z^2 (1 - a3 z)^2) psi = 0.
/// The Eckart-Hellmann mapping always yields a1 = a2 = a3 = 1 and
/// xi1, xi3 with unit epsilon-coefficient, xi2 with coefficient 2.
struct NufaCoefficients {
    double alpha1 = 1.0;
    double alpha2 = 1.0;
    double alpha3 = 1.0;
    // defaults are the free-particle mapping of this potential family
    AffineEps xi1{0.0, 1.0};
    AffineEps xi2{0.0, 2.0};
    AffineEps xi3{0.0, 1.0};
};

/// V(r) of the full four-term potential.  Throws std::domain_error for r <= 0
/// (the potential is singular at the origin).
double potential_value(const PotentialParams& params, double r);

/// Greene-Aldrich replacement for 1/r^2: alpha^2/(1-e^{-alpha r})^2.
double ga_inverse_r2(double r, double alpha);

/// Greene-Aldrich replacement for 1/r: alpha/(1-e^{-alpha r}).
double ga_inverse_r(double r, double alpha);

DimensionlessParams dimensionless(const PotentialParams& params,
                                  const PhysicalContext& ctx, int l);

NufaCoefficients to_nufa(const DimensionlessParams& d);

} // namespace ehp

#endif
