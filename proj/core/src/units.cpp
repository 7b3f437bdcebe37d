#include "ehp/units.hpp"

#include <stdexcept>

namespace ehp {

PhysicalContext PhysicalContext::natural(double hbar, double mu) {
    if (hbar <= 0.0 || mu <= 0.0)
        throw std::domain_error("PhysicalContext: hbar and mu must be positive");
    PhysicalContext ctx;
    ctx.mode = UnitMode::Natural;
    ctx.hbar = hbar;
    ctx.mu = mu;
    return ctx;
}

PhysicalContext PhysicalContext::physical(double mu_c2_ev) {
    if (mu_c2_ev <= 0.0)
        throw std::domain_error("PhysicalContext: mu*c^2 must be positive");
    PhysicalContext ctx;
    ctx.mode = UnitMode::Physical;
    ctx.hbar = 1.0;
    ctx.mu = mu_c2_ev;
    ctx.hbar_c = kHbarC;
    return ctx;
}

double PhysicalContext::kinetic() const {
    if (mode == UnitMode::Natural)
        return hbar * hbar / (2.0 * mu);
    return hbar_c * hbar_c / (2.0 * mu);
}

double PhysicalContext::inverse_kinetic() const { return 1.0 / kinetic(); }

double amu_to_ev(double mass_amu) {
    if (mass_amu <= 0.0)
        throw std::domain_error("amu_to_ev: mass must be positive");
    return mass_amu * kAmuToEv;
}

double kinetic_scale(const PhysicalContext& ctx, double alpha) {
    if (alpha <= 0.0)
        throw std::domain_error("kinetic_scale: alpha must be positive");
    return ctx.kinetic() * alpha * alpha;
}

} // namespace ehp
