#ifndef EHP_SPECTRA_HPP
#define EHP_SPECTRA_HPP

#include <string>
#include <string_view>
#include <vector>

#include "ehp/nufa.hpp"
#include "ehp/potential.hpp"
#include "ehp/result.hpp"
#include "ehp/units.hpp"

namespace ehp {

struct QuantumNumbers {
    int n = 0; // radial quantum number (node count)
    int l = 0; // angular momentum quantum number
};

/// Spectroscopic label -> quantum numbers, e.g. "1S" -> (0,0), "2P" -> (0,1),
/// "3d" -> (0,2).  The principal quantum number is N = n + l + 1.
QuantumNumbers from_spectroscopic(std::string_view label);
std::string to_spectroscopic(QuantumNumbers qn);

/// Which closed-form energy expression to evaluate.
///
/// Rederived follows the consistent reduction of the radial equation and is
/// the expression the finite-difference oracle validates.  AsPrinted is the
/// published full-potential formula transcribed term for term; it carries
/// standalone -A and +beta1 numerator terms that drop out of a consistent
/// derivation and of every special case, and is kept for reproducing and
/// auditing the published tables.
enum class Variant { Rederived, AsPrinted };

const char* to_string(Variant v);

struct EnergyLevel {
    QuantumNumbers qn;
    double energy = 0.0; // units set by the PhysicalContext
    Variant variant = Variant::Rederived;
    double s = 0.0;      // quantized sqrt(xi3) = lambda
    bool bound = false;
};

/// Large-r asymptote of the Greene-Aldrich-substituted effective potential,
///   -C alpha + hbar^2 alpha^2 l(l+1)/(2 mu).
/// "Bound" means energy below this edge, not below zero: the substituted
/// Coulomb term tends to -C alpha at infinity, so the continuum moves.
double ga_threshold(const PotentialParams& params, int l,
                    const PhysicalContext& ctx);

/// Full Eckart-Hellmann level.  Errors: SupercriticalBarrier when nu is
/// complex; NoBoundState when the Rederived quantization has s <= 0 (the
/// AsPrinted transcription always evaluates).
Result<EnergyLevel> ehp_energy(const PotentialParams& params, QuantumNumbers qn,
                               const PhysicalContext& ctx,
                               Variant variant = Variant::Rederived);

/// A = B = 0 special case (both variants coincide).
Result<EnergyLevel> hellmann_energy(double C, double D, double alpha,
                                    QuantumNumbers qn, const PhysicalContext& ctx);

/// C = D = 0 special case.
Result<EnergyLevel> eckart_energy(double A, double B, double alpha,
                                  QuantumNumbers qn, const PhysicalContext& ctx,
                                  Variant variant = Variant::Rederived);

/// Pure Coulomb level -mu C^2/(2 hbar^2 (n+l+1)^2); C <= 0 -> NoBoundState.
Result<EnergyLevel> coulomb_energy(double C, QuantumNumbers qn,
                                   const PhysicalContext& ctx);

/// A = B = C = 0 special case; binding requires attractive D < 0.
Result<EnergyLevel> yukawa_energy(double D, double alpha, QuantumNumbers qn,
                                  const PhysicalContext& ctx);

/// Levels for n = 0, 1, ... at fixed l until the first non-bound outcome or
/// n_max_cap (inclusive).  The list is strictly increasing in energy.
std::vector<EnergyLevel> enumerate_bound_states(const PotentialParams& params,
                                                int l, const PhysicalContext& ctx,
                                                Variant variant, int n_max_cap);

} // namespace ehp

#endif
