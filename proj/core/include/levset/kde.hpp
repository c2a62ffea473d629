#pragma once

#include <algorithm>
#include <cmath>
#include <cstdint>
#include <functional>
#include <vector>

#include "levset/common.hpp"
#include "levset/kernel.hpp"

namespace levset {

/// Uniform-bin spatial index with cell side equal to the per-axis kernel
/// scale, so a query only ever touches the 3^d neighboring cells.
class BinGrid {
public:
    BinGrid() = default;
    BinGrid(const PointSet& pts, double cell_side);

    /// Calls visit(point_index) for every point in the cells around x.
    template <typename Visit>
    void neighbors(std::span<const double> x, Visit&& visit) const {
        if (ids_.empty()) return;
        int c0 = coord(x[0], 0);
        int lo0 = std::max(c0 - 1, 0), hi0 = std::min(c0 + 1, nx_[0] - 1);
        if (dim_ == 1) {
            for (int i = lo0; i <= hi0; ++i)
                for (std::uint32_t k = start_[i]; k < start_[i + 1]; ++k) visit(ids_[k]);
            return;
        }
        int c1 = coord(x[1], 1);
        int lo1 = std::max(c1 - 1, 0), hi1 = std::min(c1 + 1, nx_[1] - 1);
        for (int i = lo0; i <= hi0; ++i) {
            for (int j = lo1; j <= hi1; ++j) {
                std::size_t cell = static_cast<std::size_t>(i) * nx_[1] + j;
                for (std::uint32_t k = start_[cell]; k < start_[cell + 1]; ++k)
                    visit(ids_[k]);
            }
        }
    }

    double cell_side() const { return cell_; }

private:
    int coord(double v, int axis) const {
        double c = std::floor((v - origin_[axis]) / cell_);
        if (c < 0.0) return -1;
        if (c >= nx_[axis]) return nx_[axis];
        return static_cast<int>(c);
    }

    int dim_ = 1;
    double cell_ = 1.0;
    double origin_[2] = {0.0, 0.0};
    int nx_[2] = {1, 1};
    std::vector<std::uint32_t> start_;
    std::vector<std::uint32_t> ids_;
};

enum class KdeMode { FixedN, Poissonized };

using FieldFn = std::function<double(std::span<const double>)>;

/// Kernel density estimate in the volume-bandwidth convention: the
/// smoothing parameter h scales the denominator as n*h and each axis by
/// h^(1/d). Immutable after construction; evaluation is thread-safe.
class KdeField {
public:
    /// Estimate from all n points, denominator n*h.
    static KdeField fixed(PointSet pts, double h, Kernel kernel);

    /// Poissonized estimate: draws N ~ Poisson(nominal_n) from the seed and
    /// uses the first N points of `stream` (which must hold at least N),
    /// keeping the denominator nominal_n * h. N = 0 gives the zero field.
    static KdeField poissonized(PointSet stream, std::size_t nominal_n, double h,
                                Kernel kernel, std::uint64_t seed);

    double evaluate(std::span<const double> x) const;
    FieldFn evaluator() const;

    double h() const { return h_; }
    double axis_scale() const { return axis_scale_; }
    int dim() const { return kernel_.dim(); }
    std::size_t nominal_n() const { return nominal_n_; }
    std::size_t used_count() const { return pts_.size(); }
    KdeMode mode() const { return mode_; }
    const Kernel& kernel() const { return kernel_; }
    const PointSet& points() const { return pts_; }
    const BinGrid& grid() const { return grid_; }

private:
    KdeField(PointSet pts, std::size_t nominal_n, double h, Kernel kernel, KdeMode mode);

    PointSet pts_;
    std::size_t nominal_n_;
    double h_;
    double axis_scale_;
    double inv_denom_;
    Kernel kernel_;
    KdeMode mode_;
    BinGrid grid_;
};

enum class BandwidthRule { PaperDefault, Explicit };

/// h_n = 1/sqrt(n log n) for the default rule. Emits `warning` (when the
/// pointer is non-null) if n*h/log n < 10, the finite-sample proxy for the
/// bandwidth growth condition.
double bandwidth_schedule(std::size_t n, BandwidthRule rule, double explicit_h = 0.0,
                          bool* warning = nullptr);

/// Smoothed bootstrap: data row picked uniformly, kernel noise added at the
/// field's axis scale. Used when a fitted estimate has to act as a sampler.
PointSet sample_kde(const KdeField& field, std::size_t n, std::uint64_t seed);

}  // namespace levset
