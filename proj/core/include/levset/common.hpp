#pragma once

#include <cstddef>
#include <cstdint>
#include <span>
#include <stdexcept>
#include <string>
#include <vector>

namespace levset {

/// Thrown when an iterative numerical procedure fails to reach its
/// accuracy contract (quadrature non-convergence, bracketing failure, ...).
class NumericalError : public std::runtime_error {
public:
    explicit NumericalError(const std::string& what) : std::runtime_error(what) {}
};

/// A flat row-major set of points in R^d, d in {1, 2} for the built-in models.
struct PointSet {
    std::vector<double> coords;  // size() == count * dim
    int dim = 1;

    PointSet() = default;
    PointSet(int d, std::size_t n) : coords(n * static_cast<std::size_t>(d)), dim(d) {}

    std::size_t size() const { return dim > 0 ? coords.size() / dim : 0; }

    std::span<const double> row(std::size_t i) const {
        return {coords.data() + i * dim, static_cast<std::size_t>(dim)};
    }
    std::span<double> row(std::size_t i) {
        return {coords.data() + i * dim, static_cast<std::size_t>(dim)};
    }

    void push_back(std::span<const double> p) {
        coords.insert(coords.end(), p.begin(), p.end());
    }

    /// First m points (copy).
    PointSet head(std::size_t m) const {
        PointSet out;
        out.dim = dim;
        out.coords.assign(coords.begin(), coords.begin() + m * dim);
        return out;
    }
};

inline double sq(double x) { return x * x; }

inline double dist_sq(std::span<const double> a, std::span<const double> b) {
    double s = 0.0;
    for (std::size_t i = 0; i < a.size(); ++i) s += sq(a[i] - b[i]);
    return s;
}

}  // namespace levset
