#include "levset/gaussian.hpp"

#include <algorithm>
#include <cmath>

#include "levset/common.hpp"
#include "levset/quadrature.hpp"

namespace levset {

namespace {
constexpr double kInvSqrt2Pi = 0.3989422804014326779;
constexpr double kInvSqrt2 = 0.7071067811865475244;
}  // namespace

double norm_pdf(double x) { return kInvSqrt2Pi * std::exp(-0.5 * x * x); }

double norm_cdf(double x) { return 0.5 * std::erfc(-x * kInvSqrt2); }

double norm_quantile(double p) {
    if (!(p > 0.0 && p < 1.0)) throw NumericalError("norm_quantile: p outside (0,1)");
    double lo = -40.0, hi = 40.0;
    for (int i = 0; i < 200; ++i) {
        double mid = 0.5 * (lo + hi);
        if (norm_cdf(mid) < p)
            lo = mid;
        else
            hi = mid;
        if (hi - lo < 1e-15 * (1.0 + std::fabs(lo))) break;
    }
    return 0.5 * (lo + hi);
}

namespace {

// Integrand of the sin-substituted Drezner-Wesolowsky representation:
//   Phi2(h,k;rho) = Phi(h)Phi(k) + (1/2pi) int_0^{asin rho} q(phi) dphi,
//   q(phi) = exp(-(h^2 + k^2 - 2 h k sin phi) / (2 cos^2 phi)).
double dw_integrand(double h, double k, double phi) {
    double c = std::cos(phi);
    double c2 = c * c;
    if (c2 < 1e-300) return 0.0;
    double e = -(h * h + k * k - 2.0 * h * k * std::sin(phi)) / (2.0 * c2);
    return e < -745.0 ? 0.0 : std::exp(e);
}

double bvn_positive_rho(double h, double k, double rho) {
    const double upper = std::asin(rho);
    auto f = [&](double phi) { return dw_integrand(h, k, phi); };

    double integral;
    if (rho <= 0.925) {
        integral = integrate_gl(f, 0.0, upper, 64);
    } else if (h == k) {
        // Equal thresholds: exponent tends to -h^2/(1+sin phi), no layer.
        integral = integrate_gl(f, 0.0, upper, 96);
    } else {
        // Boundary layer of width ~|h-k| near phi = pi/2: dyadic panels.
        const double a0 = std::asin(0.925);
        integral = integrate_gl(f, 0.0, a0, 64);
        double eps_hi = M_PI / 2.0 - a0;
        const double eps_lo = M_PI / 2.0 - upper;
        while (eps_hi > eps_lo * (1.0 + 1e-14)) {
            double eps_next = std::max(0.5 * eps_hi, eps_lo);
            integral += integrate_gl(f, M_PI / 2.0 - eps_hi, M_PI / 2.0 - eps_next, 32);
            eps_hi = eps_next;
        }
    }
    return norm_cdf(h) * norm_cdf(k) + integral / (2.0 * M_PI);
}

}  // namespace

double bvn_cdf(double h, double k, double rho) {
    if (!(std::fabs(rho) <= 1.0)) throw NumericalError("bvn_cdf: |rho| > 1");
    if (rho == 1.0) return norm_cdf(std::min(h, k));
    if (rho == -1.0) return std::max(0.0, norm_cdf(h) + norm_cdf(k) - 1.0);
    if (rho >= 0.0) return bvn_positive_rho(h, k, rho);
    // P(X<=h, Y<=k) = Phi(h) - P(X<=h, -Y<=-k), corr(X,-Y) = -rho.
    return norm_cdf(h) - bvn_positive_rho(h, -k, -rho);
}

}  // namespace levset
