#pragma once

#include <span>
#include <vector>

#include "levset/kernel.hpp"
#include "levset/levelset.hpp"
#include "levset/models.hpp"

namespace levset {

/// Everything the limiting-variance integrals need: the level, the kernel
/// functionals, the bandwidth limit gamma, the weight, and the boundary
/// geometry of the model (circle radius + gradient norm in the radial case,
/// crossings + slopes for d = 1).
struct AsymptoticSpec {
    double c = 0.0;
    Kernel kernel = Kernel::box(2);
    WeightKind weight = WeightKind::lebesgue();
    double gamma = 0.0;
    int dim = 2;
    double radius = 0.0;     // d = 2 radial
    double grad_norm = 0.0;  // |f'| on the boundary circle
    std::vector<double> crossings;  // d = 1
    std::vector<double> slopes;

    static AsymptoticSpec from_model(const DensityModel& model, double c,
                                     const Kernel& kernel, const WeightKind& weight,
                                     double gamma = 0.0);
};

struct SigmaQuadOptions {
    double u_max = 8.0;  // Gaussian-tail truncation of the threshold variable
    int u_nodes = 64;
    int t_nodes = 64;
    int angle_nodes = 32;  // gamma > 0 only
};

/// Norming rate a_{n,G} = (n/h)^(1/4) (nh)^(inv_gamma/2).
double norming(double n, double h, double inv_gamma);

/// P(Z1 <= -|u|, Z2 <= -|u|) for standard normals with correlation rho.
double phi2_orthant(double u, double rho);

/// Covariance of the boundary indicator transforms of two standard normals
/// with correlation rho and common threshold level u:
/// phi2_orthant(u, rho) - Phi(-|u|)^2. Even in u, vanishing at rho = 0.
double upsilon(double u, double rho);

/// Limiting variance of the Lebesgue-weight statistic for a radial boundary
/// (gamma = 0), via the reduced two-dimensional integral.
double sigma2_lebesgue_radial(const AsymptoticSpec& spec,
                              const SigmaQuadOptions& opts = {});

/// Same quantity by brute-force discretization of the full triple integral
/// in the original variables (midpoint/trapezoid, square t-grid). Slow;
/// kept as the independent cross-check of the reduction.
double sigma2_lebesgue_radial_direct(const AsymptoticSpec& spec, int s_cells = 256,
                                     int angle_cells = 32, int t_cells = 128);

/// d = 1 limiting variance: sum over boundary points of the double integral
/// of the covariance kernel against |s|^(2/gamma_g).
double sigma2_1d(const AsymptoticSpec& spec, const SigmaQuadOptions& opts = {});

/// Equivalent form of sigma2_1d after substituting the threshold variable;
/// agreement of the two is a consistency check.
double sigma2_1d_substitution(const AsymptoticSpec& spec,
                              const SigmaQuadOptions& opts = {});

/// Full radial variance integral for any built-in weight and gamma >= 0.
/// Reduces to sigma2_lebesgue_radial for the Lebesgue weight at gamma = 0.
double sigma2_general_radial(const AsymptoticSpec& spec,
                             const SigmaQuadOptions& opts = {});

/// Closed reduction for the excess-risk weight (p = 1) at gamma = 0:
/// 2 pi sqrt(c) ||K||^3 int u^2 Upsilon.
double sigma2_excess1_closed(const AsymptoticSpec& spec,
                             const SigmaQuadOptions& opts = {});

/// Variance with several boundary components: sum of c_j^2 sigma_j^2.
double sigma2_multi_component(std::span<const double> c_j,
                              std::span<const double> sigma2_j);

struct CadreConstant {
    double closed_form = 0.0;   // 2 ||K||_2 sqrt(2 pi / c)
    double general_form = 0.0;  // ||K||_2 sqrt(2c/pi) * perimeter / |grad f|
};

/// In-probability limit of sqrt(nh) times the Lebesgue symmetric difference
/// for the radial Gaussian model, both as the closed form and through the
/// boundary-integral route (they agree for the built-in model).
CadreConstant cadre_mean_constant(const AsymptoticSpec& spec);

}  // namespace levset
