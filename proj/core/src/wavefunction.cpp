#include "ehp/wavefunction.hpp"

#include <algorithm>
#include <cmath>
#include <stdexcept>

#include "ehp/oracle.hpp"

namespace ehp {

namespace {

bool is_nonpositive_integer(double v) {
    return v <= 0.0 && v == std::floor(v);
}

double horner(const std::vector<double>& coeffs, double x) {
    double acc = 0.0;
    for (auto it = coeffs.rbegin(); it != coeffs.rend(); ++it)
        acc = acc * x + *it;
    return acc;
}

// The terminating polynomial approaches (1-x)^n in the weak-screening
// regime, so monomial evaluation near x = 1 cancels n orders of magnitude.
// All wavefunction internals therefore work in the w = 1 - x basis, where
// the coefficients expose the cancellation once, at transform time.
std::vector<double> to_om_basis(const std::vector<double>& p) {
    const std::size_t n = p.size();
    std::vector<double> out(n, 0.0);
    std::vector<double> binom(n, 0.0); // C(j, k) column by column
    for (std::size_t j = 0; j < n; ++j) {
        binom[j] = 1.0;
        for (std::size_t k = j; k-- > 0;)
            binom[k] = (k == 0) ? 1.0 : binom[k] + binom[k - 1];
        for (std::size_t k = 0; k <= j; ++k)
            out[k] += p[j] * binom[k];
    }
    for (std::size_t k = 1; k < n; k += 2)
        out[k] = -out[k];
    return out;
}

// w-basis form of lam*(1-x)*p - nu*x*p + x*(1-x)*dp/dx:
//   out[k] += -(nu + k) p[k];  out[k+1] += (lam + nu + k) p[k]
std::vector<double> shift_poly_om(const std::vector<double>& p, double lam,
                                  double nu) {
    std::vector<double> q(p.size() + 1, 0.0);
    for (std::size_t k = 0; k < p.size(); ++k) {
        q[k] += -(nu + k) * p[k];
        q[k + 1] += (lam + nu + k) * p[k];
    }
    while (q.size() > 1 && q.back() == 0.0)
        q.pop_back();
    return q;
}

// Composite Simpson over [a, b] with m (even) subintervals.
template <typename F>
double simpson(const F& f, double a, double b, int m) {
    const double h = (b - a) / m;
    double acc = f(a) + f(b);
    for (int i = 1; i < m; ++i)
        acc += f(a + i * h) * (i % 2 ? 4.0 : 2.0);
    return acc * h / 3.0;
}

} // namespace

double gauss_2f1_terminating(double a, int n, double c, double x) {
    if (n < 0)
        throw std::domain_error("gauss_2f1_terminating: n must be non-negative");
    if (is_nonpositive_integer(c) && c >= -static_cast<double>(n))
        throw PoleInSeries("2F1 series parameter c hits a pole before termination");
    const double b = -static_cast<double>(n);
    double term = 1.0, sum = 1.0;
    for (int k = 0; k < n; ++k) {
        term *= (a + k) * (b + k) / ((c + k) * (k + 1.0)) * x;
        sum += term;
    }
    return sum;
}

std::vector<double> hypergeometric_poly_coeffs(double a, int n, double c) {
    if (n < 0)
        throw std::domain_error("hypergeometric_poly_coeffs: n must be non-negative");
    if (is_nonpositive_integer(c) && c >= -static_cast<double>(n))
        throw PoleInSeries("2F1 series parameter c hits a pole before termination");
    const double b = -static_cast<double>(n);
    std::vector<double> coeffs(n + 1);
    coeffs[0] = 1.0;
    for (int k = 0; k < n; ++k)
        coeffs[k + 1] = coeffs[k] * (a + k) * (b + k) / ((c + k) * (k + 1.0));
    return coeffs;
}

double RadialWavefunction::operator()(double r) const {
    if (r < 0.0)
        throw std::domain_error("wavefunction: r must be non-negative");
    if (r == 0.0)
        return 0.0;
    const double a = params.alpha;
    const double om = -std::expm1(-a * r);
    const double p = horner(om_coeffs, om);
    if (p == 0.0)
        return 0.0;
    const double logmag = -lambda * a * r + nu * std::log(om) + std::log(std::abs(p));
    return norm * std::copysign(std::exp(logmag), p);
}

double RadialWavefunction::second_derivative(double r) const {
    if (r <= 0.0)
        throw std::domain_error("second_derivative: r must be positive");
    const double a = params.alpha;
    const double om = -std::expm1(-a * r);
    // u = N x^l (1-x)^v P;  d/dr = -a x d/dx gives
    //   u'' = a^2 x^l (1-x)^{v-2} [ R + (1-x) Q ]
    // with Q, R the first and second shifts of P, all in the w = 1-x basis.
    const std::vector<double> q = shift_poly_om(om_coeffs, lambda, nu);
    const std::vector<double> rr = shift_poly_om(q, lambda - 1.0, nu - 1.0);
    const double bracket = horner(rr, om) + om * horner(q, om);
    const double prefactor =
        std::exp(-lambda * a * r + (nu - 2.0) * std::log(om));
    return norm * a * a * prefactor * bracket;
}

Result<RadialWavefunction> build_wavefunction(const PotentialParams& params,
                                              QuantumNumbers qn,
                                              const PhysicalContext& ctx,
                                              Variant) {
    const DimensionlessParams d = dimensionless(params, ctx, qn.l);
    const auto sol = quantize(to_nufa(d), qn.n);
    if (!sol.ok())
        return Result<RadialWavefunction>::failure(sol.status());

    RadialWavefunction wf;
    wf.params = params;
    wf.qn = qn;
    wf.ctx = ctx;
    wf.lambda = sol->lambda;
    wf.nu = sol->nu;
    wf.epsilon = sol->epsilon;
    wf.energy = -kinetic_scale(ctx, params.alpha) * sol->epsilon;
    wf.poly_coeffs = hypergeometric_poly_coeffs(sol->a, qn.n, sol->c);
    wf.om_coeffs = to_om_basis(wf.poly_coeffs);
    wf.norm = 1.0;
    return Result<RadialWavefunction>::success(wf);
}

RadialWavefunction normalize(const RadialWavefunction& wf) {
    const double a = wf.params.alpha;
    const auto u2 = [&wf](double r) {
        const double u = wf(r);
        return u * u;
    };

    // locate the peak of u^2; for n = 0 it sits at x = lambda/(lambda+nu)
    double r_peak_guess = -std::log(wf.lambda / (wf.lambda + wf.nu)) / a;
    if (!std::isfinite(r_peak_guess) || r_peak_guess <= 0.0)
        r_peak_guess = 1.0 / (wf.lambda * a);
    double scan_hi =
        3.0 * r_peak_guess + 20.0 * (wf.qn.n + 1) / (wf.lambda * a);
    double peak = 0.0, r_peak = r_peak_guess;
    const int scan_points = 4096;
    for (int i = 1; i <= scan_points; ++i) {
        const double r = scan_hi * i / scan_points;
        const double v = u2(r);
        if (v > peak) {
            peak = v;
            r_peak = r;
        }
    }
    if (peak <= 0.0)
        throw QuadratureFailure("normalize: wavefunction vanishes on scan grid");

    // extend r_max until the integrand tail is below 1e-12 of the peak
    double r_max = std::max(scan_hi, r_peak * 1.5);
    int guard = 0;
    while (u2(r_max) > 1e-12 * peak) {
        r_max *= 1.3;
        if (++guard > 500)
            throw QuadratureFailure("normalize: tail cutoff not found");
    }

    // geometric panels from the origin up to the peak (the integrand behaves
    // like r^{2 nu} there, which uniform Simpson handles poorly for
    // fractional nu), then uniform panels out to r_max
    const int geo_panels = 45;
    double previous = -1.0;
    for (int halving = 0; halving <= 24; ++halving) {
        const int m_geo = 2 << std::min(halving, 12);
        const int m_uni = 64 << std::min(halving, 18);
        double total = 0.0;
        double hi = r_peak;
        for (int j = 0; j < geo_panels; ++j) {
            const double lo = hi * 0.5;
            total += simpson(u2, lo, hi, m_geo);
            hi = lo;
        }
        total += 0.5 * hi * u2(hi); // stub below the last geometric panel
        total += simpson(u2, r_peak, r_max, m_uni);

        if (previous > 0.0 &&
            std::abs(total - previous) <= 1e-10 * std::abs(total)) {
            RadialWavefunction out = wf;
            out.norm = wf.norm / std::sqrt(total);
            return out;
        }
        previous = total;
    }
    throw QuadratureFailure("normalize: quadrature did not converge in 24 halvings");
}

int count_nodes(const RadialWavefunction& wf, const GridSpec& grid) {
    const auto count_on = [&wf](const GridSpec& g) {
        const double h = g.spacing();
        int flips = 0;
        int last_sign = 0;
        for (int i = 1; i <= g.points; ++i) {
            const double u = wf(g.r_min + i * h);
            const int sign = (u > 0.0) - (u < 0.0);
            if (sign != 0) {
                if (last_sign != 0 && sign != last_sign)
                    ++flips;
                last_sign = sign;
            }
        }
        return flips;
    };

    GridSpec g = grid;
    int count = count_on(g);
    for (int pass = 0; pass < 12; ++pass) {
        const GridSpec finer = g.doubled();
        const int refined = count_on(finer);
        if (refined == count)
            return count;
        count = refined;
        g = finer;
    }
    throw std::runtime_error("count_nodes: node count did not stabilize under refinement");
}

} // namespace ehp
