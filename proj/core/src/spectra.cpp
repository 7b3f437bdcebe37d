#include "ehp/spectra.hpp"

#include <cctype>
#include <cmath>
#include <limits>
#include <stdexcept>

namespace ehp {

namespace {

constexpr const char* kShellLetters = "spdfghik";

int letter_to_l(char ch) {
    const char lower = static_cast<char>(std::tolower(static_cast<unsigned char>(ch)));
    for (int l = 0; kShellLetters[l] != '\0'; ++l)
        if (kShellLetters[l] == lower)
            return l;
    throw std::invalid_argument(std::string("unknown shell letter '") + ch + "'");
}

struct DeltaParts {
    double nu;
    double delta;
};

// delta = n + 1/2 + sqrt(1/4 + beta1 + gamma); empty when nu is complex
Result<DeltaParts> delta_of(int n, double gamma, double beta1) {
    const double rad = 0.25 + beta1 + gamma;
    if (rad < 0.0)
        return Result<DeltaParts>::failure(SolveStatus::SupercriticalBarrier);
    const double nu = 0.5 + std::sqrt(rad);
    return Result<DeltaParts>::success(DeltaParts{nu, n + nu});
}

bool bound_flags(double s, double eps) { return s > 0.0 && eps > 0.0; }

} // namespace

QuantumNumbers from_spectroscopic(std::string_view label) {
    if (label.size() < 2)
        throw std::invalid_argument("spectroscopic label too short");
    std::size_t i = 0;
    int N = 0;
    while (i < label.size() && std::isdigit(static_cast<unsigned char>(label[i])))
        N = N * 10 + (label[i++] - '0');
    if (i == 0 || i + 1 != label.size())
        throw std::invalid_argument("expected <digits><letter>, got '" +
                                    std::string(label) + "'");
    const int l = letter_to_l(label[i]);
    if (N < l + 1)
        throw std::invalid_argument("label '" + std::string(label) +
                                    "' has N < l + 1");
    return QuantumNumbers{N - l - 1, l};
}

std::string to_spectroscopic(QuantumNumbers qn) {
    if (qn.n < 0 || qn.l < 0 || qn.l > 7)
        throw std::invalid_argument("quantum numbers out of label range");
    return std::to_string(qn.n + qn.l + 1) + kShellLetters[qn.l];
}

const char* to_string(Variant v) {
    return v == Variant::Rederived ? "rederived" : "as-printed";
}

double ga_threshold(const PotentialParams& params, int l,
                    const PhysicalContext& ctx) {
    const double gamma = static_cast<double>(l) * (l + 1);
    return -params.C * params.alpha + kinetic_scale(ctx, params.alpha) * gamma;
}

Result<EnergyLevel> ehp_energy(const PotentialParams& params, QuantumNumbers qn,
                               const PhysicalContext& ctx, Variant variant) {
    if (qn.n < 0 || qn.l < 0)
        throw std::domain_error("ehp_energy: quantum numbers must be non-negative");
    const DimensionlessParams d = dimensionless(params, ctx, qn.l);
    const auto dp = delta_of(qn.n, d.gamma, d.beta1);
    if (!dp.ok())
        return Result<EnergyLevel>::failure(dp.status());
    const double delta = dp->delta;
    const double ks = kinetic_scale(ctx, params.alpha);

    const double s =
        (d.beta0 + d.beta2 - d.beta3 - d.gamma - delta * delta) / (2.0 * delta);
    const double eps = s * s + d.beta2 - d.gamma;

    EnergyLevel level;
    level.qn = qn;
    level.variant = variant;
    level.s = s;

    if (variant == Variant::Rederived) {
        if (s <= 0.0)
            return Result<EnergyLevel>::failure(SolveStatus::NoBoundState);
        level.energy = -ks * eps;
    } else {
        const double num =
            delta * delta - d.beta0 + d.beta1 - d.beta2 + d.beta3 + d.gamma;
        level.energy = ks * d.gamma - params.A - params.C * params.alpha -
                       0.25 * ks * (num / delta) * (num / delta);
    }
    level.bound = bound_flags(s, eps) &&
                  level.energy < ga_threshold(params, qn.l, ctx);
    return Result<EnergyLevel>::success(level);
}

Result<EnergyLevel> hellmann_energy(double C, double D, double alpha,
                                    QuantumNumbers qn, const PhysicalContext& ctx) {
    const PotentialParams params{0.0, 0.0, C, D, alpha};
    const DimensionlessParams d = dimensionless(params, ctx, qn.l);
    const auto dp = delta_of(qn.n, d.gamma, 0.0);
    const double delta = dp->delta; // radicand 1/4 + gamma is never negative
    const double ks = kinetic_scale(ctx, alpha);

    const double s = (d.beta2 - d.beta3 - d.gamma - delta * delta) / (2.0 * delta);
    if (s <= 0.0)
        return Result<EnergyLevel>::failure(SolveStatus::NoBoundState);
    const double eps = s * s + d.beta2 - d.gamma;

    const double num = delta * delta - d.beta2 + d.beta3 + d.gamma;
    EnergyLevel level;
    level.qn = qn;
    level.variant = Variant::Rederived;
    level.s = s;
    level.energy =
        ks * d.gamma - C * alpha - 0.25 * ks * (num / delta) * (num / delta);
    level.bound = bound_flags(s, eps);
    return Result<EnergyLevel>::success(level);
}

Result<EnergyLevel> eckart_energy(double A, double B, double alpha,
                                  QuantumNumbers qn, const PhysicalContext& ctx,
                                  Variant variant) {
    const PotentialParams params{A, B, 0.0, 0.0, alpha};
    const DimensionlessParams d = dimensionless(params, ctx, qn.l);
    const auto dp = delta_of(qn.n, d.gamma, d.beta1);
    if (!dp.ok())
        return Result<EnergyLevel>::failure(dp.status());
    const double delta = dp->delta;
    const double ks = kinetic_scale(ctx, alpha);

    const double s = (d.beta0 - d.gamma - delta * delta) / (2.0 * delta);
    const double eps = s * s - d.gamma;

    EnergyLevel level;
    level.qn = qn;
    level.variant = variant;
    level.s = s;
    if (variant == Variant::Rederived) {
        if (s <= 0.0)
            return Result<EnergyLevel>::failure(SolveStatus::NoBoundState);
        const double num = d.beta0 - d.gamma - delta * delta;
        level.energy = ks * d.gamma - 0.25 * ks * (num / delta) * (num / delta);
    } else {
        const double num = delta * delta - d.beta0 + d.beta1 + d.gamma;
        level.energy =
            ks * d.gamma - A - 0.25 * ks * (num / delta) * (num / delta);
    }
    level.bound = bound_flags(s, eps) && level.energy < ks * d.gamma;
    return Result<EnergyLevel>::success(level);
}

Result<EnergyLevel> coulomb_energy(double C, QuantumNumbers qn,
                                   const PhysicalContext& ctx) {
    if (qn.n < 0 || qn.l < 0)
        throw std::domain_error("coulomb_energy: quantum numbers must be non-negative");
    if (C <= 0.0)
        return Result<EnergyLevel>::failure(SolveStatus::NoBoundState);
    const double N = qn.n + qn.l + 1;
    EnergyLevel level;
    level.qn = qn;
    level.variant = Variant::Rederived;
    // the screened s diverges in the alpha -> 0 limit; record that as +inf
    level.s = std::numeric_limits<double>::infinity();
    level.energy = -C * C * ctx.inverse_kinetic() / (4.0 * N * N);
    level.bound = true;
    return Result<EnergyLevel>::success(level);
}

Result<EnergyLevel> yukawa_energy(double D, double alpha, QuantumNumbers qn,
                                  const PhysicalContext& ctx) {
    const PotentialParams params{0.0, 0.0, 0.0, D, alpha};
    const DimensionlessParams d = dimensionless(params, ctx, qn.l);
    const auto dp = delta_of(qn.n, d.gamma, 0.0);
    const double delta = dp->delta;
    const double ks = kinetic_scale(ctx, alpha);

    const double s = (-d.beta3 - d.gamma - delta * delta) / (2.0 * delta);
    if (s <= 0.0)
        return Result<EnergyLevel>::failure(SolveStatus::NoBoundState);
    const double eps = s * s - d.gamma;

    const double num = delta * delta + d.beta3 + d.gamma;
    EnergyLevel level;
    level.qn = qn;
    level.variant = Variant::Rederived;
    level.s = s;
    level.energy = ks * d.gamma - 0.25 * ks * (num / delta) * (num / delta);
    level.bound = bound_flags(s, eps);
    return Result<EnergyLevel>::success(level);
}

std::vector<EnergyLevel> enumerate_bound_states(const PotentialParams& params,
                                                int l, const PhysicalContext& ctx,
                                                Variant variant, int n_max_cap) {
    if (n_max_cap < 0)
        throw std::domain_error("enumerate_bound_states: cap must be non-negative");
    std::vector<EnergyLevel> levels;
    for (int n = 0; n <= n_max_cap; ++n) {
        const auto level = ehp_energy(params, {n, l}, ctx, variant);
        if (!level.ok() || !level->bound)
            break;
        levels.push_back(*level);
    }
    return levels;
}

} // namespace ehp
