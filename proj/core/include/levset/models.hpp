#pragma once

#include <cstdint>
#include <span>
#include <string>
#include <vector>

#include "levset/common.hpp"

namespace levset {

/// Exact level-set geometry of a built-in model at level c.
struct LevelSetGeometry {
    double level = 0.0;
    double radius = 0.0;                           // d = 2 radial boundary
    std::vector<std::pair<double, double>> intervals;  // d = 1: union is C(c)
    std::vector<double> crossings;                 // d = 1 boundary points, sorted
    std::vector<double> slopes;                    // f' at the crossings
    double coverage = 0.0;                         // P{X in C(c)}
    double lebesgue = 0.0;                         // lambda(C(c))
    double grad_norm_min = 0.0;                    // inf |f'| on the boundary
};

enum class ModelKind { Gauss2d, Gauss1d };

/// Analytic ground-truth density: density and gradient everywhere, a seeded
/// sampler, and closed-form level-set geometry. Immutable.
class DensityModel {
public:
    static DensityModel gauss2d();
    static DensityModel gauss1d();
    static DensityModel by_name(const std::string& name);

    int dim() const { return dim_; }
    ModelKind kind() const { return kind_; }
    std::string name() const;
    double sup_density() const { return sup_f_; }
    bool radial() const { return kind_ == ModelKind::Gauss2d; }

    double density(std::span<const double> x) const;
    void gradient(std::span<const double> x, std::span<double> out) const;

    /// Level must satisfy 0 < c < sup f, with a relative margin so boundary
    /// slopes stay bounded away from zero.
    LevelSetGeometry geometry(double c) const;

    /// P{f(X) >= c} as a function of c; inverse of level_from_coverage.
    double coverage(double c) const;

    /// The level c with coverage alpha in (0, 1). Closed form for built-ins.
    double level_from_coverage(double alpha) const;

    /// n i.i.d. points, fully determined by the seed.
    PointSet sample(std::size_t n, std::uint64_t seed) const;

private:
    explicit DensityModel(ModelKind kind);
    void check_level(double c) const;

    ModelKind kind_;
    int dim_;
    double sup_f_;
};

}  // namespace levset
