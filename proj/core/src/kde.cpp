#include "levset/kde.hpp"

#include <cmath>

#include "levset/rng.hpp"

namespace levset {

BinGrid::BinGrid(const PointSet& pts, double cell_side) {
    dim_ = pts.dim;
    cell_ = cell_side;
    const std::size_t n = pts.size();
    if (n == 0) return;
    double lo[2] = {pts.coords[0], dim_ == 2 ? pts.coords[1] : 0.0};
    double hi[2] = {lo[0], lo[1]};
    for (std::size_t i = 0; i < n; ++i) {
        auto p = pts.row(i);
        for (int a = 0; a < dim_; ++a) {
            lo[a] = std::min(lo[a], p[a]);
            hi[a] = std::max(hi[a], p[a]);
        }
    }
    std::size_t cells = 1;
    for (int a = 0; a < dim_; ++a) {
        origin_[a] = lo[a];
        nx_[a] = std::max(1, static_cast<int>(std::floor((hi[a] - lo[a]) / cell_)) + 1);
        cells *= nx_[a];
    }
    start_.assign(cells + 1, 0);
    auto cell_of = [&](std::size_t i) {
        auto p = pts.row(i);
        std::size_t c = std::min(
            nx_[0] - 1, std::max(0, static_cast<int>((p[0] - origin_[0]) / cell_)));
        if (dim_ == 2)
            c = c * nx_[1] + std::min(nx_[1] - 1,
                                      std::max(0, static_cast<int>((p[1] - origin_[1]) / cell_)));
        return c;
    };
    for (std::size_t i = 0; i < n; ++i) ++start_[cell_of(i) + 1];
    for (std::size_t c = 0; c < cells; ++c) start_[c + 1] += start_[c];
    ids_.resize(n);
    std::vector<std::uint32_t> fill(start_.begin(), start_.end() - 1);
    for (std::size_t i = 0; i < n; ++i)
        ids_[fill[cell_of(i)]++] = static_cast<std::uint32_t>(i);
}

KdeField::KdeField(PointSet pts, std::size_t nominal_n, double h, Kernel kernel,
                   KdeMode mode)
    : pts_(std::move(pts)),
      nominal_n_(nominal_n),
      h_(h),
      kernel_(std::move(kernel)),
      mode_(mode) {
    if (h_ <= 0.0) throw NumericalError("bandwidth must be positive");
    if (pts_.dim != kernel_.dim())
        throw NumericalError("kde: point dimension does not match kernel");
    axis_scale_ = std::pow(h_, 1.0 / kernel_.dim());
    inv_denom_ = 1.0 / (static_cast<double>(nominal_n_) * h_);
    grid_ = BinGrid(pts_, axis_scale_);
}

KdeField KdeField::fixed(PointSet pts, double h, Kernel kernel) {
    if (pts.size() == 0) throw NumericalError("kde: empty data in fixed-n mode");
    std::size_t n = pts.size();
    return KdeField(std::move(pts), n, h, std::move(kernel), KdeMode::FixedN);
}

KdeField KdeField::poissonized(PointSet stream, std::size_t nominal_n, double h,
                               Kernel kernel, std::uint64_t seed) {
    std::uint64_t count = poisson_count(static_cast<double>(nominal_n), seed);
    if (count > stream.size())
        throw NumericalError("kde: Poisson count exceeds the supplied point stream");
    PointSet used = stream.head(count);
    used.dim = stream.dim;  // keep dimension when count == 0
    return KdeField(std::move(used), nominal_n, h, std::move(kernel),
                    KdeMode::Poissonized);
}

double KdeField::evaluate(std::span<const double> x) const {
    if (static_cast<int>(x.size()) != kernel_.dim())
        throw NumericalError("kde: query dimension mismatch");
    const double inv_scale = 1.0 / axis_scale_;
    double sum = 0.0;
    if (kernel_.kind() != KernelKind::Custom) {
        const double cutoff = 0.25 * axis_scale_ * axis_scale_;
        grid_.neighbors(x, [&](std::uint32_t i) {
            double d2 = dist_sq(x, pts_.row(i));
            if (d2 <= cutoff) sum += kernel_.profile_r2(d2 * inv_scale * inv_scale);
        });
    } else {
        grid_.neighbors(x, [&](std::uint32_t i) {
            auto p = pts_.row(i);
            double u[2] = {(x[0] - p[0]) * inv_scale,
                           x.size() == 2 ? (x[1] - p[1]) * inv_scale : 0.0};
            sum += kernel_.profile(std::span<const double>(u, x.size()));
        });
    }
    return sum * inv_denom_;
}

FieldFn KdeField::evaluator() const {
    return [this](std::span<const double> x) { return evaluate(x); };
}

double bandwidth_schedule(std::size_t n, BandwidthRule rule, double explicit_h,
                          bool* warning) {
    if (n < 3) throw NumericalError("bandwidth_schedule: n must be >= 3");
    double h;
    if (rule == BandwidthRule::PaperDefault) {
        h = 1.0 / std::sqrt(static_cast<double>(n) * std::log(static_cast<double>(n)));
    } else {
        if (explicit_h <= 0.0) throw NumericalError("explicit bandwidth must be positive");
        h = explicit_h;
    }
    if (warning)
        *warning = static_cast<double>(n) * h / std::log(static_cast<double>(n)) < 10.0;
    return h;
}

PointSet sample_kde(const KdeField& field, std::size_t n, std::uint64_t seed) {
    if (field.used_count() == 0)
        throw NumericalError("sample_kde: field has no data");
    Rng rng(seed);
    const int d = field.dim();
    const double scale = field.axis_scale();
    const double sup = field.kernel().sup();
    PointSet out(d, n);
    for (std::size_t i = 0; i < n; ++i) {
        std::size_t j = static_cast<std::size_t>(rng.uniform() * field.used_count());
        if (j >= field.used_count()) j = field.used_count() - 1;
        auto src = field.points().row(j);
        // Kernel noise by rejection from the bounding box of the support.
        double u[2] = {0.0, 0.0};
        for (;;) {
            for (int a = 0; a < d; ++a) u[a] = rng.uniform() - 0.5;
            double p = field.kernel().profile(std::span<const double>(u, d));
            if (p > 0.0 && rng.uniform() * sup <= p) break;
        }
        auto row = out.row(i);
        for (int a = 0; a < d; ++a) row[a] = src[a] + scale * u[a];
    }
    return out;
}

}  // namespace levset
