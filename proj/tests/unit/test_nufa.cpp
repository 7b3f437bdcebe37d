#include <doctest.h>

#include <cmath>
#include <stdexcept>

#include "ehp/nufa.hpp"

using namespace ehp;

namespace {

NufaCoefficients hellmann_coeffs(double C, double D, double alpha, int l) {
    const auto ctx = PhysicalContext::natural(1.0, 0.5); // hbar = 2 mu = 1
    return to_nufa(dimensionless({0.0, 0.0, C, D, alpha}, ctx, l));
}

} // namespace

TEST_SUITE("nufa") {

TEST_CASE("lambda root") {
    NufaCoefficients cf; // alpha_i = 1, xi3(eps) = eps
    cf.xi3 = {0.0, 1.0};
    CHECK(lambda_of(cf, 0.0).value() == 0.0);

    const auto hell = hellmann_coeffs(2.0, -1.0, 0.001, 0);
    const double eps = 2250500.25; // ground-level epsilon of this configuration
    CHECK(lambda_of(hell, eps).value() == doctest::Approx(1499.5).epsilon(1e-12));

    NufaCoefficients general;
    general.alpha1 = 0.0;
    general.xi3 = {2.0, 0.0};
    CHECK(lambda_of(general, 0.0).value() == doctest::Approx(2.0).epsilon(1e-14));
}

TEST_CASE("lambda reports a non-bound regime on negative discriminant") {
    NufaCoefficients cf;
    cf.xi3 = {-5.0, 1.0};
    const auto res = lambda_of(cf, 1.0); // xi3 = -4
    CHECK_FALSE(res.ok());
    CHECK(res.status() == SolveStatus::NotBoundRegime);
}

TEST_CASE("nu root") {
    NufaCoefficients free;
    CHECK(nu_of(free).value() == doctest::Approx(1.0).epsilon(1e-14));

    NufaCoefficients l1; // gamma = 2, beta1 = 0
    l1.xi3 = {2.0, 1.0};
    l1.xi1 = {0.0, 1.0};
    l1.xi2 = {0.0, 2.0};
    CHECK(nu_of(l1).value() == doctest::Approx(2.0).epsilon(1e-14));

    NufaCoefficients strong; // beta1 = 1600, gamma = 0
    strong.xi2 = {-1600.0, 2.0};
    CHECK(nu_of(strong).value() == doctest::Approx(40.503124878).epsilon(1e-9));
}

TEST_CASE("nu reports a supercritical barrier for strongly negative beta1") {
    NufaCoefficients cf; // xi1 + xi3 - xi2 = -10
    cf.xi2 = {10.0, 2.0};
    const auto res = nu_of(cf);
    CHECK_FALSE(res.ok());
    CHECK(res.status() == SolveStatus::SupercriticalBarrier);
}

TEST_CASE("nu requires the epsilon dependence to cancel") {
    NufaCoefficients cf;
    cf.xi2 = {0.0, 1.5};
    CHECK_THROWS_AS(nu_of(cf), std::invalid_argument);
}

TEST_CASE("quantization of the reference ground state") {
    const auto sol = quantize(hellmann_coeffs(2.0, -1.0, 0.001, 0), 0);
    REQUIRE(sol.ok());
    CHECK(sol->nu == doctest::Approx(1.0).epsilon(1e-14));
    CHECK(sol->lambda == doctest::Approx(1499.5).epsilon(1e-13));
    CHECK(sol->epsilon == doctest::Approx(2250500.25).epsilon(1e-13));
    CHECK(sol->b == 0.0);
}

TEST_CASE("quantization of the first excited level at alpha = 0.01") {
    const auto sol = quantize(hellmann_coeffs(2.0, -1.0, 0.01, 0), 1);
    REQUIRE(sol.ok());
    CHECK(sol->lambda == doctest::Approx(74.0).epsilon(1e-13));
    CHECK(sol->epsilon == doctest::Approx(5676.0).epsilon(1e-13));
    // energy recovered via E = -alpha^2 hbar^2 eps / (2 mu) with hbar = 2mu = 1
    CHECK(-1e-4 * sol->epsilon == doctest::Approx(-0.5676).epsilon(1e-12));
}

TEST_CASE("a free particle has no bound state") {
    NufaCoefficients free;
    const auto sol = quantize(free, 0);
    CHECK_FALSE(sol.ok());
    CHECK(sol.status() == SolveStatus::NoBoundState);
}

TEST_CASE("a formal solution above threshold is flagged") {
    // attractive Yukawa barely too weak at l = 1: s > 0 but epsilon < 0
    const auto ctx = PhysicalContext::natural(1.0, 0.5);
    const auto cf = to_nufa(dimensionless({0, 0, 0, -0.65, 0.1}, ctx, 1));
    const auto sol = quantize(cf, 0);
    CHECK_FALSE(sol.ok());
    CHECK(sol.status() == SolveStatus::NotBelowThreshold);
}

TEST_CASE("quantize validates its inputs") {
    NufaCoefficients cf;
    CHECK_THROWS_AS(quantize(cf, -1), std::domain_error);
    cf.alpha3 = 2.0;
    CHECK_THROWS_AS(quantize(cf, 0), std::invalid_argument);
}

TEST_CASE("hypergeometric parameters") {
    NufaSolution sol;
    sol.n = 0;
    sol.lambda = 0.0;
    sol.nu = 1.0;
    sol.a = sol.n + 2 * sol.lambda + 2 * sol.nu;
    sol.b = 0.0;
    sol.c = 1.0 + 2 * sol.lambda;
    const auto [a, b, c] = hypergeometric_params(sol);
    CHECK(a == 2.0);
    CHECK(b == 0.0);
    CHECK(c == 1.0);

    const auto ground = quantize(hellmann_coeffs(2.0, -1.0, 0.001, 0), 0);
    const auto [ag, bg, cg] = hypergeometric_params(*ground);
    CHECK(ag == doctest::Approx(3001.0).epsilon(1e-13));
    CHECK(bg == 0.0);
    CHECK(cg == doctest::Approx(3000.0).epsilon(1e-13));
    // a + b = 2 lambda + 2 nu for every solution
    CHECK(ag + bg == doctest::Approx(2 * ground->lambda + 2 * ground->nu));
}

TEST_CASE("closure residuals vanish on quantized solutions") {
    for (const double alpha : {0.001, 0.005, 0.01}) {
        for (int l = 0; l <= 3; ++l) {
            const auto cf = hellmann_coeffs(2.0, -1.0, alpha, l);
            for (int n = 0; n <= 3; ++n) {
                const auto sol = quantize(cf, n);
                REQUIRE(sol.ok());
                const auto [r6, r7] = residuals(*sol, cf);
                CHECK(std::abs(r6) <= 1e-10 * std::max(1.0, std::abs(cf.xi3(sol->epsilon))));
                CHECK(std::abs(r7) <= 1e-10 * std::max(1.0, std::abs(cf.xi1(sol->epsilon))));
            }
        }
    }
}

TEST_CASE("second closure residual at the strong-coupling nu") {
    NufaSolution sol;
    sol.nu = 2.0;
    sol.lambda = 1.0;
    sol.epsilon = 1.0;
    NufaCoefficients l1;
    l1.xi3 = {2.0, 1.0};
    l1.xi1 = {2.0, 1.0}; // r6 = lambda^2 - xi3 = 1 - 3 != 0 (not quantized)
    l1.xi2 = {2.0, 2.0};
    const auto [r6, r7] = residuals(sol, l1);
    CHECK(r7 == doctest::Approx(0.0).epsilon(1e-14)); // nu^2 - nu - 2 = 0
    CHECK(r6 != 0.0);

    NufaCoefficients strong;
    strong.xi1 = {0.0, 1.0};
    strong.xi2 = {-1600.0, 2.0};
    strong.xi3 = {0.0, 1.0};
    NufaSolution s2;
    s2.nu = 40.503124878;
    s2.epsilon = 0.0;
    const auto [r6b, r7b] = residuals(s2, strong);
    (void)r6b;
    CHECK(std::abs(r7b) <= 1e-8 * 1600.0);
}

TEST_CASE("quantized epsilon decreases strictly with n") {
    const auto cf = hellmann_coeffs(2.0, -1.0, 0.01, 0);
    double previous = std::numeric_limits<double>::infinity();
    int n = 0;
    for (; n < 100; ++n) {
        const auto sol = quantize(cf, n);
        if (!sol.ok())
            break;
        CHECK(sol->epsilon < previous);
        previous = sol->epsilon;
    }
    CHECK(n > 3); // this configuration supports several levels
}

TEST_CASE("the spectrum is finite and enumeration stops exactly at n_max") {
    // beta2 - beta3 = 300 > nu^2 = 1, so a last bound n exists
    const auto cf = hellmann_coeffs(2.0, -1.0, 0.01, 0);
    int n_max = -1;
    for (int n = 0; n < 1000; ++n) {
        const auto sol = quantize(cf, n);
        if (!sol.ok()) {
            CHECK(sol.status() == SolveStatus::NoBoundState);
            n_max = n - 1;
            break;
        }
    }
    REQUIRE(n_max >= 0);
    // delta(n_max) <= sqrt(300) < delta(n_max + 1)
    const auto last = quantize(cf, n_max);
    REQUIRE(last.ok());
    CHECK(last->lambda >= 0.0);
    CHECK_FALSE(quantize(cf, n_max + 1).ok());
}

} // TEST_SUITE
