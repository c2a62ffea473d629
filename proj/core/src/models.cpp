#include "levset/models.hpp"

#include <cmath>

#include "levset/gaussian.hpp"
#include "levset/rng.hpp"

namespace levset {

namespace {
constexpr double kTwoPi = 2.0 * M_PI;
}

DensityModel::DensityModel(ModelKind kind) : kind_(kind) {
    dim_ = kind == ModelKind::Gauss2d ? 2 : 1;
    sup_f_ = kind == ModelKind::Gauss2d ? 1.0 / kTwoPi : 1.0 / std::sqrt(kTwoPi);
}

DensityModel DensityModel::gauss2d() { return DensityModel(ModelKind::Gauss2d); }
DensityModel DensityModel::gauss1d() { return DensityModel(ModelKind::Gauss1d); }

DensityModel DensityModel::by_name(const std::string& name) {
    if (name == "gauss2d") return gauss2d();
    if (name == "gauss1d") return gauss1d();
    throw NumericalError("unknown model name: " + name);
}

std::string DensityModel::name() const {
    return kind_ == ModelKind::Gauss2d ? "gauss2d" : "gauss1d";
}

double DensityModel::density(std::span<const double> x) const {
    if (kind_ == ModelKind::Gauss2d)
        return std::exp(-0.5 * (x[0] * x[0] + x[1] * x[1])) / kTwoPi;
    return norm_pdf(x[0]);
}

void DensityModel::gradient(std::span<const double> x, std::span<double> out) const {
    double f = density(x);
    for (int i = 0; i < dim_; ++i) out[i] = -x[i] * f;
}

void DensityModel::check_level(double c) const {
    // Strict interior of (inf f, sup f), with margin so |f'| > 0 on the boundary.
    if (!(c > 0.0 && c < sup_f_ * (1.0 - 1e-12)))
        throw NumericalError("level c outside (0, sup f)");
}

LevelSetGeometry DensityModel::geometry(double c) const {
    check_level(c);
    LevelSetGeometry g;
    g.level = c;
    if (kind_ == ModelKind::Gauss2d) {
        double r = std::sqrt(-2.0 * std::log(kTwoPi * c));
        g.radius = r;
        g.coverage = 1.0 - kTwoPi * c;       // P(|X|^2 <= r^2), chi^2_2 tail
        g.lebesgue = M_PI * r * r;
        g.grad_norm_min = r * c;             // |f'| = |x| f on the circle
        g.crossings = {};
    } else {
        double z = std::sqrt(-2.0 * std::log(c * std::sqrt(kTwoPi)));
        g.crossings = {-z, z};
        g.slopes = {z * c, -z * c};          // f'(z) = -z f(z), f(+-z) = c
        g.intervals = {{-z, z}};
        g.coverage = 2.0 * norm_cdf(z) - 1.0;
        g.lebesgue = 2.0 * z;
        g.grad_norm_min = z * c;
    }
    return g;
}

double DensityModel::coverage(double c) const {
    check_level(c);
    if (kind_ == ModelKind::Gauss2d) return 1.0 - kTwoPi * c;
    double z = std::sqrt(-2.0 * std::log(c * std::sqrt(kTwoPi)));
    return 2.0 * norm_cdf(z) - 1.0;
}

double DensityModel::level_from_coverage(double alpha) const {
    if (!(alpha > 0.0 && alpha < 1.0))
        throw NumericalError("coverage alpha outside (0,1)");
    if (kind_ == ModelKind::Gauss2d) return (1.0 - alpha) / kTwoPi;
    double z = norm_quantile(0.5 * (1.0 + alpha));
    return norm_pdf(z);
}

PointSet DensityModel::sample(std::size_t n, std::uint64_t seed) const {
    PointSet pts(dim_, n);
    Rng rng(seed);
    for (std::size_t i = 0; i < n; ++i) {
        auto row = pts.row(i);
        for (int j = 0; j < dim_; ++j) row[j] = rng.normal();
    }
    return pts;
}

}  // namespace levset
