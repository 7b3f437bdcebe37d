#ifndef EHP_UNITS_HPP
#define EHP_UNITS_HPP

namespace ehp {

/// 1 amu expressed as rest-mass energy in eV.
inline constexpr double kAmuToEv = 931.494028e6;

/// hbar*c in eV*Angstrom, used by the physical-unit convention.
inline constexpr double kHbarC = 1973.29;

enum class UnitMode { Natural, Physical };

/// Unit convention shared by every energy computation.
///
/// Natural mode works with explicit hbar and mu (typically hbar = mu = 1 or
/// hbar = 2*mu = 1).  Physical mode works in eV and Angstrom throughout: the
/// reduced mass is stored as the rest-mass energy mu*c^2 in eV and hbar only
/// ever appears as hbar*c, so no bare hbar or c is needed.
struct PhysicalContext {
    UnitMode mode = UnitMode::Natural;
    double hbar = 1.0;    // natural mode only
    double mu = 1.0;      // natural: mass; physical: mu*c^2 in eV
    double hbar_c = kHbarC;

    static PhysicalContext natural(double hbar = 1.0, double mu = 1.0);
    static PhysicalContext physical(double mu_c2_ev);

    /// hbar^2/(2 mu), resp. (hbar c)^2/(2 mu c^2) in eV*Angstrom^2.
    double kinetic() const;
    /// 2 mu/hbar^2, resp. 2 mu c^2/(hbar c)^2.
    double inverse_kinetic() const;
};

/// Rest-mass energy in eV of a mass given in amu.  Throws std::domain_error
/// for non-positive input.
double amu_to_ev(double mass_amu);

/// hbar^2 alpha^2/(2 mu) for screening parameter alpha (inverse length).
double kinetic_scale(const PhysicalContext& ctx, double alpha);

} // namespace ehp

#endif
