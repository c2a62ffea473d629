#include "levset/asymptotics.hpp"

#include <cmath>

#include "levset/gaussian.hpp"
#include "levset/quadrature.hpp"

namespace levset {

AsymptoticSpec AsymptoticSpec::from_model(const DensityModel& model, double c,
                                          const Kernel& kernel, const WeightKind& weight,
                                          double gamma) {
    AsymptoticSpec spec;
    spec.c = c;
    spec.kernel = kernel;
    spec.weight = weight;
    spec.dim = model.dim();
    auto geom = model.geometry(c);
    if (model.dim() == 1) {
        if (gamma != 0.0)
            throw NumericalError("gamma must be 0 when d = 1");
        spec.crossings = geom.crossings;
        spec.slopes = geom.slopes;
    } else {
        if (!model.radial())
            throw NumericalError("variance formulas need a radial boundary for d = 2");
        spec.radius = geom.radius;
        spec.grad_norm = geom.grad_norm_min;
    }
    spec.gamma = gamma;
    return spec;
}

double norming(double n, double h, double inv_gamma) {
    return std::pow(n / h, 0.25) * std::pow(n * h, 0.5 * inv_gamma);
}

double phi2_orthant(double u, double rho) {
    if (!(std::fabs(rho) <= 1.0)) throw NumericalError("phi2_orthant: |rho| > 1");
    double a = -std::fabs(u);
    return bvn_cdf(a, a, rho);
}

double upsilon(double u, double rho) {
    double p = norm_cdf(-std::fabs(u));
    return phi2_orthant(u, rho) - p * p;
}

namespace {

// int_0^1 Upsilon(u, rho(tau)) tau^(?) dtau and friends show up in every
// reduced form; this evaluates int_0^umax du u_pow(u) * int_0^1 Upsilon tau dtau.
double upsilon_double_integral(const Kernel& kernel, double u_max, int u_nodes,
                               int t_nodes, double u_power) {
    return integrate_gl(
        [&](double u) {
            double inner = integrate_gl(
                [&](double tau) { return upsilon(u, kernel.rho_scalar(tau)) * tau; },
                0.0, 1.0, t_nodes);
            return (u_power == 0.0 ? 1.0 : std::pow(u, u_power)) * inner;
        },
        0.0, u_max, u_nodes);
}

// Covariance of the two indicator transforms at thresholds a and b.
double indicator_cov(double a, double b, double rho) {
    double core = bvn_cdf(a, b, rho) - norm_cdf(a) * norm_cdf(b);
    bool low_a = a <= 0.0, low_b = b <= 0.0;
    return low_a == low_b ? core : -core;
}

}  // namespace

double sigma2_lebesgue_radial(const AsymptoticSpec& spec, const SigmaQuadOptions& opts) {
    if (spec.dim != 2) throw NumericalError("sigma2_lebesgue_radial: need d = 2");
    if (spec.weight.tag != WeightTag::Lebesgue)
        throw NumericalError("sigma2_lebesgue_radial: weight must be Lebesgue");
    if (spec.gamma != 0.0)
        throw NumericalError("sigma2_lebesgue_radial: gamma must be 0");
    double base = upsilon_double_integral(spec.kernel, opts.u_max, opts.u_nodes,
                                          opts.t_nodes, 0.0);
    return 8.0 * M_PI * M_PI * spec.kernel.l2_norm() / std::sqrt(spec.c) * base;
}

double sigma2_lebesgue_radial_direct(const AsymptoticSpec& spec, int s_cells,
                                     int angle_cells, int t_cells) {
    if (spec.dim != 2) throw NumericalError("sigma2_lebesgue_radial_direct: need d = 2");
    const double scale = spec.radius * std::sqrt(spec.c) / spec.kernel.l2_norm();
    const double s_max = 8.0 / scale;
    const double ds = 2.0 * s_max / s_cells;
    const double dt = 2.0 / t_cells;
    const double dtheta = 2.0 * M_PI / angle_cells;

    double sum = 0.0;
    for (int it = 0; it < t_cells; ++it) {
        for (int jt = 0; jt < t_cells; ++jt) {
            double tx = -1.0 + (it + 0.5) * dt;
            double ty = -1.0 + (jt + 0.5) * dt;
            double tau = std::sqrt(tx * tx + ty * ty);
            if (tau > 1.0) continue;
            double rho = spec.kernel.rho_scalar(tau);
            double inner = 0.0;
            for (int is = 0; is < s_cells; ++is) {
                double s = -s_max + (is + 0.5) * ds;
                inner += upsilon(s * scale, rho);
            }
            sum += inner * ds * dt * dt;
        }
    }
    // the integrand is free of the boundary angle, so that axis contributes 2 pi
    return spec.radius * sum * dtheta * angle_cells;
}

namespace {

double weight_g1_1d(const WeightKind& w, double c, double slope) {
    switch (w.tag) {
        case WeightTag::Lebesgue: return 1.0;
        case WeightTag::Density: return c;
        case WeightTag::ExcessPower:
            return w.power == 0.0 ? 1.0 : std::pow(std::fabs(slope), w.power);
    }
    return 1.0;
}

}  // namespace

double sigma2_1d(const AsymptoticSpec& spec, const SigmaQuadOptions& opts) {
    if (spec.dim != 1) throw NumericalError("sigma2_1d: need d = 1");
    if (spec.crossings.empty()) throw NumericalError("sigma2_1d: no boundary points");
    const double denom = std::sqrt(spec.c) * spec.kernel.l2_norm();
    const double two_ig = 2.0 * spec.weight.inv_gamma();

    double total = 0.0;
    for (std::size_t i = 0; i < spec.crossings.size(); ++i) {
        const double slope = std::fabs(spec.slopes[i]);
        const double g1 = weight_g1_1d(spec.weight, spec.c, spec.slopes[i]);
        const double s_max = opts.u_max * denom / slope;
        // even in s and in t: integrate the positive quadrant times 4
        double inner = integrate_gl(
            [&](double s) {
                double ts = integrate_gl(
                    [&](double t) {
                        return upsilon(s * slope / denom, spec.kernel.rho_scalar(t));
                    },
                    0.0, 1.0, opts.t_nodes);
                return (two_ig == 0.0 ? 1.0 : std::pow(s, two_ig)) * ts;
            },
            0.0, s_max, opts.u_nodes);
        total += g1 * g1 * 4.0 * inner;
    }
    return total;
}

double sigma2_1d_substitution(const AsymptoticSpec& spec, const SigmaQuadOptions& opts) {
    if (spec.dim != 1) throw NumericalError("sigma2_1d: need d = 1");
    const double denom = std::sqrt(spec.c) * spec.kernel.l2_norm();
    const double two_ig = 2.0 * spec.weight.inv_gamma();
    double base = integrate_gl(
        [&](double u) {
            double ts = integrate_gl(
                [&](double t) { return upsilon(u, spec.kernel.rho_scalar(t)); }, 0.0,
                1.0, opts.t_nodes);
            return (two_ig == 0.0 ? 1.0 : std::pow(u, two_ig)) * ts;
        },
        0.0, opts.u_max, opts.u_nodes);

    double total = 0.0;
    for (std::size_t i = 0; i < spec.crossings.size(); ++i) {
        const double slope = std::fabs(spec.slopes[i]);
        const double g1 = weight_g1_1d(spec.weight, spec.c, spec.slopes[i]);
        total += g1 * g1 * std::pow(denom / slope, 1.0 + two_ig) * 4.0 * base;
    }
    return total;
}

double sigma2_general_radial(const AsymptoticSpec& spec, const SigmaQuadOptions& opts) {
    if (spec.dim != 2) throw NumericalError("sigma2_general_radial: need d = 2");
    if (spec.gamma < 0.0) throw NumericalError("gamma must be >= 0");
    const double r = spec.radius;
    const double grad = spec.grad_norm;  // r * c for the radial Gaussian
    const double denom = std::sqrt(spec.c) * spec.kernel.l2_norm();
    const double scale = grad / denom;  // threshold per unit of s
    const double p = spec.weight.inv_gamma();
    const double s_max = opts.u_max / scale + spec.gamma;

    // weight factor pair from the boundary expansion of g
    auto weight_pair = [&](double s, double s_shifted) {
        switch (spec.weight.tag) {
            case WeightTag::Lebesgue: return 1.0;
            case WeightTag::Density: return spec.c * spec.c;
            case WeightTag::ExcessPower:
                if (p == 0.0) return 1.0;
                return std::pow(grad, 2.0 * p) *
                       std::pow(std::fabs(s) * std::fabs(s_shifted), p);
        }
        return 1.0;
    };

    // s-integrand for one (tau, psi) node; the kink sits at s0
    auto s_integral = [&](double rho, double shift) {
        auto f = [&](double s) {
            double a = -s * scale;
            double b = -(s - shift) * scale;
            return indicator_cov(a, b, rho) * weight_pair(s, s - shift);
        };
        double s0 = std::clamp(shift, -s_max, s_max);
        return integrate_gl(f, -s_max, s0, opts.u_nodes) +
               integrate_gl(f, s0, s_max, opts.u_nodes);
    };

    if (spec.gamma == 0.0) {
        // the angle between t and the normal is immaterial at gamma = 0
        double inner = integrate_gl(
            [&](double tau) {
                return s_integral(spec.kernel.rho_scalar(tau), 0.0) * tau;
            },
            0.0, 1.0, opts.t_nodes);
        return r * 2.0 * M_PI * 2.0 * M_PI * inner;
    }

    // t over the unit disc in polar form, boundary angle integrated exactly
    double disc = 0.0;
    for (int a = 0; a < opts.angle_nodes; ++a) {
        double psi = 2.0 * M_PI * a / opts.angle_nodes;
        double cpsi = std::cos(psi);
        disc += integrate_gl(
            [&](double tau) {
                double rho = spec.kernel.rho_scalar(tau);
                double shift = spec.gamma * tau * cpsi;
                return s_integral(rho, shift) * tau;
            },
            0.0, 1.0, opts.t_nodes);
    }
    disc *= 2.0 * M_PI / opts.angle_nodes;
    return r * 2.0 * M_PI * disc;
}

double sigma2_excess1_closed(const AsymptoticSpec& spec, const SigmaQuadOptions& opts) {
    if (spec.dim != 2) throw NumericalError("sigma2_excess1_closed: need d = 2");
    double base = upsilon_double_integral(spec.kernel, opts.u_max, opts.u_nodes,
                                          opts.t_nodes, 2.0);
    double k2 = spec.kernel.l2_norm();
    return 8.0 * M_PI * M_PI * std::sqrt(spec.c) * k2 * k2 * k2 * base;
}

double sigma2_multi_component(std::span<const double> c_j,
                              std::span<const double> sigma2_j) {
    if (c_j.size() != sigma2_j.size())
        throw NumericalError("sigma2_multi_component: size mismatch");
    double total = 0.0;
    for (std::size_t j = 0; j < c_j.size(); ++j)
        total += c_j[j] * c_j[j] * sigma2_j[j];
    return total;
}

CadreConstant cadre_mean_constant(const AsymptoticSpec& spec) {
    if (spec.dim != 2) throw NumericalError("cadre_mean_constant: need d = 2");
    CadreConstant out;
    double k2 = spec.kernel.l2_norm();
    out.closed_form = 2.0 * k2 * std::sqrt(2.0 * M_PI / spec.c);
    double perimeter = 2.0 * M_PI * spec.radius;
    out.general_form = k2 * std::sqrt(2.0 * spec.c / M_PI) * perimeter / spec.grad_norm;
    return out;
}

}  // namespace levset
