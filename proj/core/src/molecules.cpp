#include "ehp/molecules.hpp"

#include <charconv>
#include <istream>
#include <ostream>
#include <sstream>
#include <stdexcept>

namespace ehp {

const std::vector<MoleculeSpec>& builtin_catalog() {
    static const std::vector<MoleculeSpec> catalog = {
        {"VH", 0.988005, 1.44370},
        {"TiH", 0.987371, 1.32408},
        {"TiC", 9.606079, 1.52550},
        {"CuLi", 6.259494, 1.00818},
    };
    return catalog;
}

PhysicalContext context_for(const MoleculeSpec& m) {
    if (m.mu_amu <= 0.0 || m.alpha <= 0.0)
        throw std::domain_error("molecule '" + m.name +
                                "' must have positive mass and alpha");
    return PhysicalContext::physical(amu_to_ev(m.mu_amu));
}

std::vector<MoleculeSpec> load_catalog(std::istream& in) {
    std::vector<MoleculeSpec> specs;
    std::string line;
    int lineno = 0;
    while (std::getline(in, line)) {
        ++lineno;
        if (const auto hash = line.find('#'); hash != std::string::npos)
            line.erase(hash);
        std::istringstream fields(line);
        MoleculeSpec spec;
        if (!(fields >> spec.name))
            continue; // blank or comment-only line
        if (!(fields >> spec.mu_amu >> spec.alpha))
            throw std::runtime_error("catalog line " + std::to_string(lineno) +
                                     ": expected `name mu_amu alpha`");
        std::string extra;
        if (fields >> extra)
            throw std::runtime_error("catalog line " + std::to_string(lineno) +
                                     ": unexpected trailing field '" + extra + "'");
        if (spec.mu_amu <= 0.0 || spec.alpha <= 0.0)
            throw std::runtime_error("catalog line " + std::to_string(lineno) +
                                     ": molecule '" + spec.name +
                                     "' has non-positive mass or alpha");
        specs.push_back(std::move(spec));
    }
    return specs;
}

namespace {

std::string shortest(double v) {
    char buf[32];
    const auto res = std::to_chars(buf, buf + sizeof buf, v);
    return std::string(buf, res.ptr);
}

} // namespace

void save_catalog(std::ostream& out, const std::vector<MoleculeSpec>& specs) {
    out << "# name mu_amu alpha_per_angstrom\n";
    for (const auto& spec : specs)
        out << spec.name << ' ' << shortest(spec.mu_amu) << ' '
            << shortest(spec.alpha) << '\n';
}

} // namespace ehp
