#include "ehp/potential.hpp"

#include <cmath>
#include <stdexcept>

namespace ehp {

namespace {

void check_alpha(double alpha) {
    if (alpha <= 0.0)
        throw std::domain_error("screening parameter alpha must be positive");
}

} // namespace

double potential_value(const PotentialParams& params, double r) {
    check_alpha(params.alpha);
    if (r <= 0.0)
        throw std::domain_error("potential_value: r must be positive");
    const double x = std::exp(-params.alpha * r);
    const double om = -std::expm1(-params.alpha * r); // 1 - e^{-alpha r}
    return -params.A * x / om + params.B * x / (om * om) - params.C / r +
           params.D * x / r;
}

double ga_inverse_r2(double r, double alpha) {
    check_alpha(alpha);
    if (r <= 0.0)
        throw std::domain_error("ga_inverse_r2: r must be positive");
    const double om = -std::expm1(-alpha * r);
    return alpha * alpha / (om * om);
}

double ga_inverse_r(double r, double alpha) {
    check_alpha(alpha);
    if (r <= 0.0)
        throw std::domain_error("ga_inverse_r: r must be positive");
    return alpha / -std::expm1(-alpha * r);
}

DimensionlessParams dimensionless(const PotentialParams& params,
                                  const PhysicalContext& ctx, int l) {
    check_alpha(params.alpha);
    if (l < 0)
        throw std::domain_error("dimensionless: l must be non-negative");
    const double ik = ctx.inverse_kinetic(); // 2 mu / hbar^2
    const double a = params.alpha;
    DimensionlessParams d;
    d.beta0 = ik * params.A / (a * a);
    d.beta1 = ik * params.B / (a * a);
    d.beta2 = ik * params.C / a;
    d.beta3 = ik * params.D / a;
    d.gamma = static_cast<double>(l) * (l + 1);
    return d;
}

NufaCoefficients to_nufa(const DimensionlessParams& d) {
    NufaCoefficients c;
    c.alpha1 = c.alpha2 = c.alpha3 = 1.0;
    c.xi1 = {d.beta0 - d.beta3, 1.0};
    c.xi2 = {d.beta0 - d.beta1 - d.beta2 - d.beta3, 2.0};
    c.xi3 = {d.gamma - d.beta2, 1.0};
    return c;
}

} // namespace ehp
