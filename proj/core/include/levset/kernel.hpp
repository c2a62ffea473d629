#pragma once

#include <functional>
#include <memory>
#include <span>
#include <string>
#include <vector>

namespace levset {

enum class KernelKind { BoxBall, RadialPoly, Custom };

/// A density kernel supported on the closed ball of radius 1/2. The two
/// built-ins are the uniform ball kernel and the normalized quartic
/// (1 - (2|u|)^2)^2; both are symmetric, so the first-moment condition
/// holds automatically. Immutable after construction.
class Kernel {
public:
    static Kernel box(int dim);
    static Kernel radial_poly(int dim);
    static Kernel custom(int dim, std::function<double(std::span<const double>)> profile);
    static Kernel by_name(const std::string& name, int dim);  // "box" | "radpoly"

    int dim() const { return dim_; }
    KernelKind kind() const { return kind_; }
    static constexpr double support_radius = 0.5;

    double profile(std::span<const double> u) const;
    /// Profile as a function of |u|^2 (built-ins are radial).
    double profile_r2(double r2) const;

    double l2_norm_sq() const { return l2_norm_sq_; }
    double l2_norm() const;
    double sup() const { return sup_; }

    /// Normalized autocorrelation int K(u)K(u+t) du / int K^2. Zero for
    /// |t| >= 1. Built-ins reduce to |t| (closed form or cached table);
    /// custom kernels integrate on demand.
    double rho(std::span<const double> t) const;
    double rho_scalar(double dist) const;  // built-ins only

    std::string name() const;

private:
    Kernel() = default;

    int dim_ = 1;
    KernelKind kind_ = KernelKind::BoxBall;
    double norm_const_ = 1.0;  // scaling that makes the profile integrate to 1
    double l2_norm_sq_ = 1.0;
    double sup_ = 1.0;
    std::function<double(std::span<const double>)> custom_;
    std::shared_ptr<const std::vector<double>> rho_table_;  // |t| in [0,1], linear interp

    friend std::vector<std::string> validate_kernel(const Kernel& k);
};

/// Checks the kernel assumptions numerically. Returns the violated ones
/// ("K.i support", "K.i bound", "K.i mass", "K.ii moment"); empty means valid.
std::vector<std::string> validate_kernel(const Kernel& k);

}  // namespace levset
