#include "levset/kernel.hpp"

#include <cmath>

#include "levset/common.hpp"
#include "levset/quadrature.hpp"

namespace levset {

namespace {

constexpr int kRhoTableSize = 1024;

double quartic(double r2) {
    double w = 1.0 - 4.0 * r2;
    return w > 0.0 ? w * w : 0.0;
}

// Autocorrelation of the 1-d quartic on its overlap [-1/2, 1/2 - t].
double radpoly_autocorr_1d(double t, double norm_const) {
    if (t >= 1.0) return 0.0;
    auto f = [&](double x) { return quartic(x * x) * quartic((x + t) * (x + t)); };
    return norm_const * norm_const * integrate_gl(f, -0.5, 0.5 - t, 64);
}

// 2-d autocorrelation at center distance tau, polar quadrature around one copy.
double radpoly_autocorr_2d(double tau, double norm_const) {
    if (tau >= 1.0) return 0.0;
    const int nr = 64, nphi = 128;
    const GaussLegendreRule& rule = gauss_legendre(nr);
    double sum = 0.0;
    for (int i = 0; i < nr; ++i) {
        double r = 0.25 * (rule.nodes[i] + 1.0);  // [0, 1/2]
        double wr = 0.25 * rule.weights[i];
        double inner = 0.0;
        for (int j = 0; j < nphi; ++j) {
            double phi = 2.0 * M_PI * j / nphi;
            double s2 = r * r + tau * tau + 2.0 * r * tau * std::cos(phi);
            inner += quartic(s2);
        }
        sum += wr * r * quartic(r * r) * inner * (2.0 * M_PI / nphi);
    }
    return norm_const * norm_const * sum;
}

std::shared_ptr<const std::vector<double>> radpoly_rho_table(int dim, double norm_const,
                                                             double l2_sq) {
    auto table = std::make_shared<std::vector<double>>(kRhoTableSize + 1);
    for (int i = 0; i <= kRhoTableSize; ++i) {
        double t = static_cast<double>(i) / kRhoTableSize;
        double a = dim == 1 ? radpoly_autocorr_1d(t, norm_const)
                            : radpoly_autocorr_2d(t, norm_const);
        (*table)[i] = a / l2_sq;
    }
    (*table)[kRhoTableSize] = 0.0;
    return table;
}

// Tensorized Gauss-Legendre over [-b, b]^d.
double integrate_box(const std::function<double(std::span<const double>)>& f, int dim,
                     double b, int n) {
    const GaussLegendreRule& rule = gauss_legendre(n);
    if (dim == 1) {
        double sum = 0.0;
        for (int i = 0; i < n; ++i) {
            double u[1] = {b * rule.nodes[i]};
            sum += rule.weights[i] * f(std::span<const double>(u, 1));
        }
        return b * sum;
    }
    double sum = 0.0;
    for (int i = 0; i < n; ++i) {
        for (int j = 0; j < n; ++j) {
            double u[2] = {b * rule.nodes[i], b * rule.nodes[j]};
            sum += rule.weights[i] * rule.weights[j] * f(std::span<const double>(u, 2));
        }
    }
    return b * b * sum;
}

double converged_box_integral(const std::function<double(std::span<const double>)>& f,
                              int dim, double b, const char* what) {
    double v64 = integrate_box(f, dim, b, 64);
    double v96 = integrate_box(f, dim, b, 96);
    double scale = std::max({std::fabs(v64), std::fabs(v96), 1e-12});
    if (std::fabs(v96 - v64) / scale > 1e-8)
        throw NumericalError(std::string("kernel quadrature did not converge: ") + what);
    return v96;
}

}  // namespace

Kernel Kernel::box(int dim) {
    if (dim != 1 && dim != 2) throw NumericalError("box kernel: dim must be 1 or 2");
    Kernel k;
    k.dim_ = dim;
    k.kind_ = KernelKind::BoxBall;
    k.norm_const_ = dim == 1 ? 1.0 : 4.0 / M_PI;
    k.l2_norm_sq_ = k.norm_const_;  // uniform density: int K^2 = height
    k.sup_ = k.norm_const_;
    return k;
}

Kernel Kernel::radial_poly(int dim) {
    if (dim != 1 && dim != 2) throw NumericalError("radpoly kernel: dim must be 1 or 2");
    Kernel k;
    k.dim_ = dim;
    k.kind_ = KernelKind::RadialPoly;
    if (dim == 1) {
        k.norm_const_ = 15.0 / 8.0;
        k.l2_norm_sq_ = 10.0 / 7.0;
    } else {
        k.norm_const_ = 12.0 / M_PI;
        k.l2_norm_sq_ = 36.0 / (5.0 * M_PI);
    }
    k.sup_ = k.norm_const_;
    static std::shared_ptr<const std::vector<double>> table_1d =
        radpoly_rho_table(1, 15.0 / 8.0, 10.0 / 7.0);
    static std::shared_ptr<const std::vector<double>> table_2d =
        radpoly_rho_table(2, 12.0 / M_PI, 36.0 / (5.0 * M_PI));
    k.rho_table_ = dim == 1 ? table_1d : table_2d;
    return k;
}

Kernel Kernel::custom(int dim, std::function<double(std::span<const double>)> profile) {
    if (dim != 1 && dim != 2) throw NumericalError("custom kernel: dim must be 1 or 2");
    Kernel k;
    k.dim_ = dim;
    k.kind_ = KernelKind::Custom;
    k.custom_ = std::move(profile);
    k.l2_norm_sq_ = converged_box_integral(
        [&](std::span<const double> u) { return sq(k.custom_(u)); }, dim, 0.5, "l2 norm");
    double s = 0.0;
    const int probes = dim == 1 ? 2001 : 101;
    for (int i = 0; i < probes; ++i) {
        for (int j = 0; j < (dim == 2 ? probes : 1); ++j) {
            double u[2] = {-0.5 + i / (probes - 1.0), dim == 2 ? -0.5 + j / (probes - 1.0) : 0.0};
            s = std::max(s, std::fabs(k.custom_(std::span<const double>(u, dim))));
        }
    }
    k.sup_ = s;
    return k;
}

Kernel Kernel::by_name(const std::string& name, int dim) {
    if (name == "box") return box(dim);
    if (name == "radpoly") return radial_poly(dim);
    throw NumericalError("unknown kernel name: " + name);
}

double Kernel::profile(std::span<const double> u) const {
    if (kind_ == KernelKind::Custom) return custom_(u);
    double r2 = 0.0;
    for (double c : u) r2 += c * c;
    return profile_r2(r2);
}

double Kernel::profile_r2(double r2) const {
    if (r2 > 0.25) return 0.0;
    switch (kind_) {
        case KernelKind::BoxBall:
            return norm_const_;
        case KernelKind::RadialPoly:
            return norm_const_ * quartic(r2);
        case KernelKind::Custom:
            throw NumericalError("profile_r2 on non-radial kernel");
    }
    return 0.0;
}

double Kernel::l2_norm() const { return std::sqrt(l2_norm_sq_); }

double Kernel::rho_scalar(double dist) const {
    dist = std::fabs(dist);
    if (dist >= 1.0) return 0.0;
    switch (kind_) {
        case KernelKind::BoxBall:
            if (dim_ == 1) return 1.0 - dist;
            // overlap of two discs of radius 1/2 at center distance t, over pi/4
            return (2.0 / M_PI) * (std::acos(dist) - dist * std::sqrt(1.0 - dist * dist));
        case KernelKind::RadialPoly: {
            double x = dist * kRhoTableSize;
            int i = static_cast<int>(x);
            if (i >= kRhoTableSize) return 0.0;
            double frac = x - i;
            return (*rho_table_)[i] * (1.0 - frac) + (*rho_table_)[i + 1] * frac;
        }
        case KernelKind::Custom:
            throw NumericalError("rho_scalar on custom kernel; pass the offset vector");
    }
    return 0.0;
}

double Kernel::rho(std::span<const double> t) const {
    double r2 = 0.0;
    for (double c : t) r2 += c * c;
    if (r2 >= 1.0) return 0.0;
    if (kind_ != KernelKind::Custom) return rho_scalar(std::sqrt(r2));
    auto f = [&](std::span<const double> u) {
        double shifted[2] = {u[0] + t[0], dim_ == 2 ? u[1] + t[1] : 0.0};
        return custom_(u) * custom_(std::span<const double>(shifted, u.size()));
    };
    return integrate_box(f, dim_, 0.5, 64) / l2_norm_sq_;
}

std::string Kernel::name() const {
    switch (kind_) {
        case KernelKind::BoxBall: return "box";
        case KernelKind::RadialPoly: return "radpoly";
        case KernelKind::Custom: return "custom";
    }
    return "?";
}

std::vector<std::string> validate_kernel(const Kernel& k) {
    std::vector<std::string> violations;
    auto eval = [&](std::span<const double> u) { return k.profile(u); };

    // Support: nothing outside the closed ball of radius 1/2.
    double outside = 0.0;
    const int probes = 160;
    for (int i = 0; i < probes; ++i) {
        double r = 0.5 + (0.75 * (i + 1)) / probes;  // (1/2, 1.25]
        if (k.dim() == 1) {
            double u[1] = {r};
            outside = std::max(outside, std::fabs(eval(std::span<const double>(u, 1))));
            u[0] = -r;
            outside = std::max(outside, std::fabs(eval(std::span<const double>(u, 1))));
        } else {
            for (int j = 0; j < 32; ++j) {
                double a = 2.0 * M_PI * j / 32;
                double u[2] = {r * std::cos(a), r * std::sin(a)};
                outside = std::max(outside, std::fabs(eval(std::span<const double>(u, 2))));
            }
        }
    }
    if (outside > 1e-12) violations.push_back("K.i support");

    if (!std::isfinite(k.sup()) || k.sup() > 1e12) violations.push_back("K.i bound");

    // Integrals over [-1,1]^d so support violations still register as mass.
    double mass = integrate_box(eval, k.dim(), 1.0, 96);
    if (std::fabs(mass - 1.0) > 1e-6) violations.push_back("K.i mass");

    double moment = 0.0;
    for (int axis = 0; axis < k.dim(); ++axis) {
        moment += integrate_box(
            [&](std::span<const double> u) { return u[axis] * eval(u); }, k.dim(), 1.0, 96);
    }
    if (std::fabs(moment) > 1e-8) violations.push_back("K.ii moment");

    return violations;
}

}  // namespace levset
