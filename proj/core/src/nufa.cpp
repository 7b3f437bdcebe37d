#include "ehp/nufa.hpp"

#include <cmath>
#include <stdexcept>

namespace ehp {

const char* to_string(SolveStatus s) {
    switch (s) {
    case SolveStatus::Ok: return "ok";
    case SolveStatus::NoBoundState: return "no-bound-state";
    case SolveStatus::NotBelowThreshold: return "not-below-threshold";
    case SolveStatus::SupercriticalBarrier: return "supercritical-barrier";
    case SolveStatus::NotBoundRegime: return "not-bound-regime";
    }
    return "unknown";
}

Result<double> lambda_of(const NufaCoefficients& coeffs, double epsilon) {
    const double one_m_a1 = 1.0 - coeffs.alpha1;
    const double disc = one_m_a1 * one_m_a1 + 4.0 * coeffs.xi3(epsilon);
    if (disc < 0.0)
        return Result<double>::failure(SolveStatus::NotBoundRegime);
    return Result<double>::success(0.5 * (one_m_a1 + std::sqrt(disc)));
}

Result<double> nu_of(const NufaCoefficients& coeffs) {
    const double a1 = coeffs.alpha1, a2 = coeffs.alpha2, a3 = coeffs.alpha3;
    if (a3 == 0.0)
        throw std::invalid_argument("nu_of: alpha3 must be nonzero");
    // the epsilon parts of xi1/a3 - xi2 + a3*xi3 must cancel for nu to be a
    // pure constant of the potential
    const double eps_coeff = coeffs.xi1.q / a3 - coeffs.xi2.q + a3 * coeffs.xi3.q;
    if (std::abs(eps_coeff) > 1e-12)
        throw std::invalid_argument(
            "nu_of: epsilon does not cancel in xi1/a3 - xi2 + a3*xi3");
    const double K = coeffs.xi1.p / a3 - coeffs.xi2.p + a3 * coeffs.xi3.p;
    const double lin = a3 + a1 * a3 - a2;
    const double disc = lin * lin + 4.0 * a3 * K;
    if (disc < 0.0)
        return Result<double>::failure(SolveStatus::SupercriticalBarrier);
    return Result<double>::success((lin + std::sqrt(disc)) / (2.0 * a3));
}

Result<NufaSolution> quantize(const NufaCoefficients& coeffs, int n) {
    if (n < 0)
        throw std::domain_error("quantize: n must be non-negative");
    if (coeffs.alpha1 != 1.0 || coeffs.alpha2 != 1.0 || coeffs.alpha3 != 1.0)
        throw std::invalid_argument(
            "quantize: closed form requires alpha1 = alpha2 = alpha3 = 1");
    if (coeffs.xi1.q != 1.0 || coeffs.xi3.q != 1.0)
        throw std::invalid_argument(
            "quantize: closed form requires unit epsilon coefficient in xi1, xi3");

    const auto nu = nu_of(coeffs);
    if (!nu.ok())
        return Result<NufaSolution>::failure(nu.status());

    const double delta = n + *nu;
    const double s = (coeffs.xi1.p - coeffs.xi3.p - delta * delta) / (2.0 * delta);
    if (s < 0.0)
        return Result<NufaSolution>::failure(SolveStatus::NoBoundState);
    const double eps = s * s - coeffs.xi3.p;
    if (eps <= 0.0)
        return Result<NufaSolution>::failure(SolveStatus::NotBelowThreshold);

    NufaSolution sol;
    sol.lambda = s;
    sol.nu = *nu;
    sol.epsilon = eps;
    sol.n = n;
    sol.a = n + 2.0 * sol.lambda + 2.0 * sol.nu;
    sol.b = -static_cast<double>(n);
    sol.c = coeffs.alpha1 + 2.0 * sol.lambda;
    return Result<NufaSolution>::success(sol);
}

std::array<double, 3> hypergeometric_params(const NufaSolution& sol) {
    return {sol.a, sol.b, sol.c};
}

std::pair<double, double> residuals(const NufaSolution& sol,
                                    const NufaCoefficients& coeffs) {
    const double a1 = coeffs.alpha1, a2 = coeffs.alpha2, a3 = coeffs.alpha3;
    const double lam = sol.lambda, nu = sol.nu, eps = sol.epsilon;
    const double r6 = lam * (lam - 1.0) + a1 * lam - coeffs.xi3(eps);
    const double r7 = a2 * nu - a1 * a3 * nu + nu * (nu - 1.0) * a3 -
                      (coeffs.xi1(eps) / a3 - coeffs.xi2(eps) + a3 * coeffs.xi3(eps));
    return {r6, r7};
}

} // namespace ehp
