#ifndef EHP_MOLECULES_HPP
#define EHP_MOLECULES_HPP

#include <iosfwd>
#include <string>
#include <vector>

#include "ehp/units.hpp"

namespace ehp {

/// Screening parameter and reduced mass of a diatomic molecule.  Potential
/// strengths are deliberately not part of the record: the published data
/// binds none to these molecules, so molecular runs must be given strengths
/// explicitly.
struct MoleculeSpec {
    std::string name;
    double mu_amu = 0.0;   // reduced mass in amu
    double alpha = 0.0;    // screening parameter in 1/Angstrom
};

/// The four bundled molecules (VH, TiH, TiC, CuLi).
const std::vector<MoleculeSpec>& builtin_catalog();

/// eV/Angstrom context with mu*c^2 derived from the amu value.
PhysicalContext context_for(const MoleculeSpec& m);

/// Parse a catalog: one molecule per line, whitespace-separated
/// `name mu_amu alpha_per_angstrom`; '#' starts a comment.  Malformed lines
/// and non-positive values raise std::runtime_error naming the line.
std::vector<MoleculeSpec> load_catalog(std::istream& in);

void save_catalog(std::ostream& out, const std::vector<MoleculeSpec>& specs);

} // namespace ehp

#endif
