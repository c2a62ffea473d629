#pragma once

#include <cstdint>
#include <string>
#include <utility>
#include <vector>

#include "levset/common.hpp"
#include "levset/kde.hpp"
#include "levset/models.hpp"

namespace levset {

enum class WeightTag { Lebesgue, ExcessPower, Density };

/// Weight measure for the symmetric difference: g = 1, g = |f - c|^p, or
/// g = f. inv_gamma is the boundary-regularity exponent of the weight
/// (p for the excess powers, 0 otherwise).
struct WeightKind {
    WeightTag tag = WeightTag::Lebesgue;
    double power = 0.0;

    static WeightKind lebesgue() { return {WeightTag::Lebesgue, 0.0}; }
    static WeightKind excess_power(double p);
    static WeightKind density() { return {WeightTag::Density, 0.0}; }
    static WeightKind by_name(const std::string& name);  // lebesgue|excess:p|density

    double inv_gamma() const { return tag == WeightTag::ExcessPower ? power : 0.0; }
    double value(double f_at_x, double c) const;
    std::string name() const;
};

struct SymmDiffDiagnostics {
    double band_width = 0.0;       // half-width actually used before widening
    std::size_t rays = 0;          // rays (radial) or boundary points (1-d)
    std::size_t multi_crossing = 0;  // rays whose crossing count differs from 1
    std::size_t widened = 0;       // rays that required the one-time x2 widening
    std::size_t unresolved = 0;    // rays with no sign change even after widening
    std::size_t total_crossings = 0;
    std::size_t grid_cells = 0;
    std::size_t outer_violations = 0;  // debug scan: differing cells outside the band
    bool fell_back_to_grid = false;
    bool bound_ok = true;          // Lebesgue value within the 2/c measure bound
};

struct SymmDiffResult {
    double value = 0.0;
    WeightKind weight;
    double level = 0.0;
    std::string integrator;
    SymmDiffDiagnostics diag;
};

struct SymmDiffOptions {
    std::size_t angles = 1024;
    double varsigma = 4.0;        // band half-width = varsigma sqrt(log n)/sqrt(nh)
    int inner_nodes = 16;         // Gauss-Legendre nodes per weight segment
    double crossing_tol = 1e-9;   // bisection tolerance on crossing positions
    std::size_t max_crossings = 64;  // per ray; beyond this the ray is unresolved
    bool debug_outer_scan = false;
    int threads = 1;              // rays are independent; summation stays ordered
};

/// d_G between the field's level set and the radial model's C(c), via per-ray
/// crossing search inside the boundary band. Box kernels use an exact
/// interval sweep over the data; other kernels scan and bisect. Falls back
/// to the grid integrator when more than 1% of rays cannot be resolved.
SymmDiffResult symmdiff_radial(const KdeField& field, const DensityModel& model,
                               double c, const WeightKind& weight,
                               const SymmDiffOptions& opts = {});

/// Same contract for an arbitrary evaluable field (synthetic fields, debug).
SymmDiffResult symmdiff_radial_fn(const FieldFn& field, std::size_t n, double h,
                                  const DensityModel& model, double c,
                                  const WeightKind& weight,
                                  const SymmDiffOptions& opts = {});

/// d = 1: one crossing search per boundary point, bands clamped at midpoints
/// between adjacent boundary points.
SymmDiffResult symmdiff_1d(const KdeField& field, const DensityModel& model, double c,
                           const WeightKind& weight, const SymmDiffOptions& opts = {});

SymmDiffResult symmdiff_1d_fn(const FieldFn& field, std::size_t n, double h,
                              const DensityModel& model, double c,
                              const WeightKind& weight,
                              const SymmDiffOptions& opts = {});

/// Midpoint-rule discretization of d_G over the ball of radius box_radius.
/// Ties f_n(x) = c count as inside. cell must not exceed the band width.
SymmDiffResult symmdiff_grid(const FieldFn& field, const FieldFn& truth_density,
                             int dim, std::size_t n, double h, double c,
                             const WeightKind& weight, double cell, double box_radius,
                             const SymmDiffOptions& opts = {});

/// Default grid box for a model: r(c) (or outermost crossing) plus six band
/// or kernel widths.
double default_box_radius(const DensityModel& model, double c, std::size_t n, double h,
                          double varsigma = 4.0);

/// Both sides of the level-integral identity: integrating the weighted
/// symmetric difference over all levels against |f - c|^(p-1) equals the
/// L_p distance of the estimate to the truth divided by p. Both sides share
/// one spatial grid so the comparison isolates the level quadrature.
std::pair<double, double> lp_identity_check(const KdeField& field,
                                            const DensityModel& model, double p,
                                            int levels, double cell,
                                            double box_radius = 0.0);

}  // namespace levset
