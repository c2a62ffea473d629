#include "levset/levelset.hpp"

#include <algorithm>
#include <cmath>
#include <thread>

#include "levset/quadrature.hpp"

namespace levset {

WeightKind WeightKind::excess_power(double p) {
    if (p < 0.0) throw NumericalError("excess_power: p must be >= 0");
    return {WeightTag::ExcessPower, p};
}

WeightKind WeightKind::by_name(const std::string& name) {
    if (name == "lebesgue") return lebesgue();
    if (name == "density") return density();
    if (name.rfind("excess", 0) == 0) {
        double p = 1.0;
        auto colon = name.find(':');
        if (colon != std::string::npos) p = std::stod(name.substr(colon + 1));
        return excess_power(p);
    }
    throw NumericalError("unknown weight name: " + name);
}

double WeightKind::value(double f_at_x, double c) const {
    switch (tag) {
        case WeightTag::Lebesgue: return 1.0;
        case WeightTag::ExcessPower:
            return power == 0.0 ? 1.0 : std::pow(std::fabs(f_at_x - c), power);
        case WeightTag::Density: return f_at_x;
    }
    return 1.0;
}

std::string WeightKind::name() const {
    switch (tag) {
        case WeightTag::Lebesgue: return "lebesgue";
        case WeightTag::ExcessPower: return "excess:" + std::to_string(power);
        case WeightTag::Density: return "density";
    }
    return "?";
}

namespace {

double band_half_width(std::size_t n, double h, double varsigma) {
    double dn = static_cast<double>(n);
    return varsigma * std::sqrt(std::log(dn)) / std::sqrt(dn * h);
}

// Run-list of the estimator indicator along a 1-d section of the band:
// breaks[0..m] with inside[i] holding on (breaks[i], breaks[i+1]).
struct BandRun {
    std::vector<double> breaks;
    std::vector<char> inside;
    std::size_t crossings = 0;
    bool overcap = false;
};

// Crossing search for an arbitrary field section: sample, bracket, bisect.
BandRun scan_band(const std::function<double(double)>& S, double lo, double hi,
                  double step_target, double tol, std::size_t max_crossings) {
    BandRun run;
    auto pred = [&](double x) { return S(x) >= 0.0; };
    const double len = hi - lo;
    int m = static_cast<int>(std::ceil(len / step_target));
    m = std::clamp(m, 64, 4096);

    std::vector<double> crossings;
    double prev_x = lo;
    bool prev_p = pred(lo);
    const bool p_lo = prev_p;
    for (int i = 1; i <= m; ++i) {
        double x = lo + len * i / m;
        bool p = pred(x);
        if (p != prev_p) {
            if (crossings.size() >= max_crossings) {
                run.overcap = true;
                break;
            }
            double a = prev_x, b = x;
            bool pa = prev_p;
            while (b - a > tol) {
                double mid = 0.5 * (a + b);
                if (pred(mid) == pa)
                    a = mid;
                else
                    b = mid;
            }
            crossings.push_back(0.5 * (a + b));
        }
        prev_x = x;
        prev_p = p;
    }
    run.crossings = crossings.size();

    run.breaks.push_back(lo);
    for (double x : crossings) run.breaks.push_back(x);
    run.breaks.push_back(hi);
    if (run.crossings == 0) {
        run.inside.push_back(p_lo);
    } else {
        bool s = p_lo;
        for (std::size_t i = 0; i + 1 < run.breaks.size(); ++i) {
            run.inside.push_back(s);
            s = !s;
        }
    }
    return run;
}

// Exact run-list for a box-kernel estimate: the moving count over the data
// is a step function whose only jumps are interval endpoints.
BandRun sweep_intervals(const std::vector<std::pair<double, double>>& iv, double lo,
                        double hi, std::int64_t kstar) {
    BandRun run;
    std::vector<std::pair<double, int>> events;
    events.reserve(2 * iv.size());
    std::int64_t n0 = 0;
    for (auto [a, b] : iv) {
        if (b <= lo || a >= hi) continue;
        if (a <= lo)
            ++n0;
        else
            events.push_back({a, +1});
        if (b < hi) events.push_back({b, -1});
    }
    std::sort(events.begin(), events.end());

    run.breaks.push_back(lo);
    std::int64_t count = n0;
    bool sign = count >= kstar;
    run.inside.push_back(sign);
    std::size_t i = 0;
    while (i < events.size()) {
        double pos = events[i].first;
        while (i < events.size() && events[i].first == pos) count += events[i++].second;
        bool s = count >= kstar;
        if (s != sign) {
            run.breaks.push_back(pos);
            run.inside.push_back(s);
            sign = s;
            ++run.crossings;
        }
    }
    run.breaks.push_back(hi);
    return run;
}

// Sum the weight integral over segments where the estimator and truth
// indicators disagree; the truth flips once at `boundary` (inside on the
// low side when inside_below).
double classify_and_integrate(const BandRun& run, double boundary, bool inside_below,
                              const std::function<double(double, double)>& seg_weight) {
    double v = 0.0;
    for (std::size_t i = 0; i + 1 < run.breaks.size(); ++i) {
        double a = run.breaks[i], b = run.breaks[i + 1];
        if (b <= a) continue;
        bool in_n = run.inside[i];
        double cut = std::clamp(boundary, a, b);
        if (cut > a && (inside_below != in_n)) v += seg_weight(a, cut);
        if (b > cut && (inside_below == in_n)) v += seg_weight(cut, b);
    }
    return v;
}

struct RayOutcome {
    double value = 0.0;
    bool widened = false;
    bool unresolved = false;
    std::size_t crossings = 0;
};

void run_rays(std::size_t count, int threads,
              const std::function<RayOutcome(std::size_t)>& one_ray,
              std::vector<RayOutcome>& out) {
    out.resize(count);
    threads = std::max(1, threads);
    if (threads == 1) {
        for (std::size_t i = 0; i < count; ++i) out[i] = one_ray(i);
        return;
    }
    std::vector<std::thread> pool;
    std::size_t chunk = (count + threads - 1) / threads;
    for (int t = 0; t < threads; ++t) {
        std::size_t b = t * chunk, e = std::min(count, b + chunk);
        if (b >= e) break;
        pool.emplace_back([&, b, e] {
            for (std::size_t i = b; i < e; ++i) out[i] = one_ray(i);
        });
    }
    for (auto& th : pool) th.join();
}

void fold_outcomes(const std::vector<RayOutcome>& rays, double scale,
                   SymmDiffResult& res) {
    double v = 0.0;
    for (const auto& r : rays) {
        v += r.value;
        res.diag.widened += r.widened;
        res.diag.unresolved += r.unresolved;
        res.diag.total_crossings += r.crossings;
        res.diag.multi_crossing += r.crossings != 1;
    }
    res.value = v * scale;
    res.diag.rays = rays.size();
}

double radial_truth_density(const DensityModel& model, double r) {
    double x[2] = {r, 0.0};
    return model.density(std::span<const double>(x, 2));
}

std::function<double(double, double)> radial_seg_weight(const DensityModel& model,
                                                        const WeightKind& weight,
                                                        double c, int nodes) {
    if (weight.tag == WeightTag::Lebesgue)
        return [](double a, double b) { return 0.5 * (b * b - a * a); };
    return [&model, weight, c, nodes](double a, double b) {
        return integrate_gl(
            [&](double r) { return weight.value(radial_truth_density(model, r), c) * r; },
            a, b, nodes);
    };
}

std::function<double(double, double)> seg_weight_1d(const DensityModel& model,
                                                    const WeightKind& weight, double c,
                                                    int nodes) {
    if (weight.tag == WeightTag::Lebesgue)
        return [](double a, double b) { return b - a; };
    return [&model, weight, c, nodes](double a, double b) {
        return integrate_gl(
            [&](double x) {
                double xv[1] = {x};
                return weight.value(model.density(std::span<const double>(xv, 1)), c);
            },
            a, b, nodes);
    };
}

void check_measure_bound(SymmDiffResult& res, double c, const KdeField* field) {
    if (res.weight.tag != WeightTag::Lebesgue) return;
    double bound = 2.0 / c;
    if (field && field->mode() == KdeMode::Poissonized) {
        // int pi_n = N/n, so the set-size argument gives (1 + N/n)/c here.
        bound = (1.0 + static_cast<double>(field->used_count()) /
                           static_cast<double>(field->nominal_n())) / c;
    }
    res.diag.bound_ok = res.value <= bound * (1.0 + 1e-12);
    if (!res.diag.bound_ok && field && field->mode() == KdeMode::FixedN)
        throw NumericalError("symmetric-difference measure exceeded the 2/c bound");
}

std::size_t outer_scan_radial(const FieldFn& field, double c, double rc, double band_hi,
                              double box_r, double step) {
    std::size_t bad = 0;
    for (int j = 0; j < 128; ++j) {
        double th = 2.0 * M_PI * j / 128;
        for (double r = band_hi + step; r < box_r; r += step) {
            double x[2] = {r * std::cos(th), r * std::sin(th)};
            bool in_n = field(std::span<const double>(x, 2)) >= c;
            if (in_n != (r <= rc)) ++bad;
        }
    }
    return bad;
}

SymmDiffResult make_result(const WeightKind& w, double c, const char* integrator) {
    SymmDiffResult res;
    res.weight = w;
    res.level = c;
    res.integrator = integrator;
    return res;
}

// One crossing band, with the endpoint-sign widening policy shared by all
// search-based integrators.
using BandFn = std::function<BandRun(double lo, double hi)>;

RayOutcome resolve_band(const BandFn& band_on, double lo, double hi, double wide_lo,
                        double wide_hi, double boundary, bool inside_below,
                        const std::function<double(double, double)>& seg_weight) {
    BandRun run = band_on(lo, hi);
    RayOutcome out;
    if (run.inside.front() == run.inside.back()) {
        run = band_on(wide_lo, wide_hi);
        out.widened = true;
        out.unresolved = run.crossings == 0 || run.overcap;
    } else {
        out.unresolved = run.overcap;
    }
    out.value = classify_and_integrate(run, boundary, inside_below, seg_weight);
    out.crossings = run.crossings;
    return out;
}

}  // namespace

double default_box_radius(const DensityModel& model, double c, std::size_t n, double h,
                          double varsigma) {
    double w = band_half_width(n, h, varsigma);
    double scale = std::pow(h, 1.0 / model.dim());
    auto geom = model.geometry(c);
    double reach = model.radial() ? geom.radius : std::fabs(geom.crossings.back());
    return reach + 6.0 * std::max(w, scale);
}

// ---------------------------------------------------------------------------
// radial integrator

namespace {

using RayBandFn = std::function<BandRun(std::size_t ray, double ct, double st, double lo,
                                        double hi)>;

SymmDiffResult radial_common(const DensityModel& model, double c,
                             const WeightKind& weight, std::size_t n, double h,
                             const SymmDiffOptions& opts, const RayBandFn& ray_band,
                             const FieldFn& field_fn, const KdeField* kde,
                             const char* integrator) {
    if (!model.radial()) throw NumericalError("symmdiff_radial: model is not radial");
    SymmDiffResult res = make_result(weight, c, integrator);
    const double w = band_half_width(n, h, opts.varsigma);
    res.diag.band_width = w;
    const double rc = model.geometry(c).radius;
    const double lo = std::max(rc - w, 0.0), hi = rc + w;
    const double wlo = std::max(rc - 2.0 * w, 0.0), whi = rc + 2.0 * w;
    auto seg_weight = radial_seg_weight(model, weight, c, opts.inner_nodes);

    std::vector<RayOutcome> rays;
    run_rays(
        opts.angles, opts.threads,
        [&](std::size_t j) {
            double th = 2.0 * M_PI * static_cast<double>(j) / opts.angles;
            double ct = std::cos(th), st = std::sin(th);
            auto band_on = [&](double a, double b) { return ray_band(j, ct, st, a, b); };
            return resolve_band(band_on, lo, hi, wlo, whi, rc, true, seg_weight);
        },
        rays);
    fold_outcomes(rays, 2.0 * M_PI / opts.angles, res);

    if (res.diag.unresolved * 100 > opts.angles) {
        double cell = w / 8.0;
        SymmDiffResult grid = symmdiff_grid(
            field_fn, [&](std::span<const double> x) { return model.density(x); }, 2, n,
            h, c, weight, cell, default_box_radius(model, c, n, h, opts.varsigma), opts);
        grid.diag.fell_back_to_grid = true;
        grid.diag.band_width = w;
        grid.integrator = "grid-fallback";
        check_measure_bound(grid, c, kde);
        return grid;
    }

    if (opts.debug_outer_scan)
        res.diag.outer_violations =
            outer_scan_radial(field_fn, c, rc, hi,
                              default_box_radius(model, c, n, h, opts.varsigma), w / 4.0);

    check_measure_bound(res, c, kde);
    return res;
}

}  // namespace

SymmDiffResult symmdiff_radial_fn(const FieldFn& field, std::size_t n, double h,
                                  const DensityModel& model, double c,
                                  const WeightKind& weight, const SymmDiffOptions& opts) {
    const double scale = std::sqrt(h);
    const double step =
        std::min(band_half_width(n, h, opts.varsigma) / 16.0, scale / 3.0);
    auto ray_band = [&](std::size_t, double ct, double st, double lo, double hi) {
        auto S = [&, ct, st](double r) {
            double x[2] = {r * ct, r * st};
            return field(std::span<const double>(x, 2)) - c;
        };
        return scan_band(S, lo, hi, step, opts.crossing_tol, opts.max_crossings);
    };
    return radial_common(model, c, weight, n, h, opts, ray_band, field, nullptr,
                         "radial");
}

SymmDiffResult symmdiff_radial(const KdeField& field, const DensityModel& model, double c,
                               const WeightKind& weight, const SymmDiffOptions& opts) {
    if (field.dim() != 2) throw NumericalError("symmdiff_radial: field dimension != 2");
    FieldFn fn = field.evaluator();
    if (field.kernel().kind() != KernelKind::BoxBall) {
        SymmDiffResult res = symmdiff_radial_fn(fn, field.nominal_n(), field.h(), model,
                                                c, weight, opts);
        check_measure_bound(res, c, &field);
        return res;
    }

    // Box kernel: every indicator flip along a ray is an entry/exit of a
    // data disc, so crossings are enumerated exactly.
    const double n = static_cast<double>(field.nominal_n());
    const double height = field.kernel().profile_r2(0.0);
    const std::int64_t kstar = static_cast<std::int64_t>(
        std::max(1.0, std::ceil(c * n * field.h() / height - 1e-9)));
    const double R = 0.5 * field.axis_scale();

    struct Workspace {
        std::vector<std::uint32_t> stamp;
        std::uint32_t epoch = 0;
        std::vector<std::pair<double, double>> iv;
    };
    const int threads = std::max(1, opts.threads);
    const std::size_t chunk = (opts.angles + threads - 1) / threads;
    std::vector<Workspace> ws(threads);
    for (auto& w : ws) w.stamp.assign(field.used_count(), 0);

    auto ray_band = [&](std::size_t j, double ct, double st, double lo, double hi) {
        Workspace& work = ws[std::min<std::size_t>(threads - 1, j / chunk)];
        ++work.epoch;
        work.iv.clear();
        const double cell = field.axis_scale();
        for (double r = lo;; r += cell) {
            bool last = r >= hi;
            double rr = last ? hi : r;
            double x[2] = {rr * ct, rr * st};
            field.grid().neighbors(std::span<const double>(x, 2), [&](std::uint32_t id) {
                if (work.stamp[id] == work.epoch) return;
                work.stamp[id] = work.epoch;
                auto p = field.points().row(id);
                double a = p[0] * ct + p[1] * st;
                double b2 = p[0] * p[0] + p[1] * p[1] - a * a;
                double half2 = R * R - b2;
                if (half2 < 0.0) return;
                double half = std::sqrt(half2);
                work.iv.push_back({a - half, a + half});
            });
            if (last) break;
        }
        return sweep_intervals(work.iv, lo, hi, kstar);
    };
    return radial_common(model, c, weight, field.nominal_n(), field.h(), opts, ray_band,
                         fn, &field, "radial-sweep");
}

// ---------------------------------------------------------------------------
// d = 1 integrator

namespace {

SymmDiffResult symmdiff_1d_common(const DensityModel& model, double c,
                                  const WeightKind& weight, std::size_t n, double h,
                                  const SymmDiffOptions& opts, const BandFn& band_on,
                                  const KdeField* kde, const char* integrator) {
    if (model.dim() != 1) throw NumericalError("symmdiff_1d: model dimension != 1");
    auto geom = model.geometry(c);
    if (geom.crossings.empty()) throw NumericalError("symmdiff_1d: no boundary points");
    SymmDiffResult res = make_result(weight, c, integrator);
    const double w = band_half_width(n, h, opts.varsigma);
    res.diag.band_width = w;
    auto seg_weight = seg_weight_1d(model, weight, c, opts.inner_nodes);

    const auto& z = geom.crossings;
    auto clamp_band = [&](std::size_t i, double width, double& lo, double& hi) {
        lo = z[i] - width;
        hi = z[i] + width;
        if (i > 0) lo = std::max(lo, 0.5 * (z[i - 1] + z[i]));
        if (i + 1 < z.size()) hi = std::min(hi, 0.5 * (z[i] + z[i + 1]));
    };

    std::vector<RayOutcome> outs;
    run_rays(
        z.size(), 1,
        [&](std::size_t i) {
            double lo, hi, wlo, whi;
            clamp_band(i, w, lo, hi);
            clamp_band(i, 2.0 * w, wlo, whi);
            // negative slope: the density falls through c, inside lies below z_i
            return resolve_band(band_on, lo, hi, wlo, whi, z[i], geom.slopes[i] < 0.0,
                                seg_weight);
        },
        outs);
    fold_outcomes(outs, 1.0, res);
    check_measure_bound(res, c, kde);
    return res;
}

}  // namespace

SymmDiffResult symmdiff_1d_fn(const FieldFn& field, std::size_t n, double h,
                              const DensityModel& model, double c,
                              const WeightKind& weight, const SymmDiffOptions& opts) {
    const double step = std::min(band_half_width(n, h, opts.varsigma) / 16.0, h / 3.0);
    auto band_on = [&](double lo, double hi) {
        auto S = [&](double x) {
            double xv[1] = {x};
            return field(std::span<const double>(xv, 1)) - c;
        };
        return scan_band(S, lo, hi, step, opts.crossing_tol, opts.max_crossings);
    };
    return symmdiff_1d_common(model, c, weight, n, h, opts, band_on, nullptr, "1d");
}

SymmDiffResult symmdiff_1d(const KdeField& field, const DensityModel& model, double c,
                           const WeightKind& weight, const SymmDiffOptions& opts) {
    if (field.dim() != 1) throw NumericalError("symmdiff_1d: field dimension != 1");
    if (field.kernel().kind() != KernelKind::BoxBall) {
        FieldFn fn = field.evaluator();
        SymmDiffResult res =
            symmdiff_1d_fn(fn, field.nominal_n(), field.h(), model, c, weight, opts);
        check_measure_bound(res, c, &field);
        return res;
    }
    const double n = static_cast<double>(field.nominal_n());
    const double height = field.kernel().profile_r2(0.0);
    const std::int64_t kstar = static_cast<std::int64_t>(
        std::max(1.0, std::ceil(c * n * field.h() / height - 1e-9)));
    const double half = 0.5 * field.axis_scale();

    std::vector<std::uint32_t> stamp(field.used_count(), 0);
    std::uint32_t epoch = 0;
    std::vector<std::pair<double, double>> iv;
    auto band_on = [&](double lo, double hi) {
        ++epoch;
        iv.clear();
        double probe[1];
        for (double x = lo;; x += field.axis_scale()) {
            bool last = x >= hi;
            probe[0] = last ? hi : x;
            field.grid().neighbors(std::span<const double>(probe, 1),
                                   [&](std::uint32_t id) {
                                       if (stamp[id] == epoch) return;
                                       stamp[id] = epoch;
                                       double p = field.points().row(id)[0];
                                       iv.push_back({p - half, p + half});
                                   });
            if (last) break;
        }
        return sweep_intervals(iv, lo, hi, kstar);
    };
    return symmdiff_1d_common(model, c, weight, field.nominal_n(), field.h(), opts,
                              band_on, &field, "1d-sweep");
}

// ---------------------------------------------------------------------------
// grid integrator

SymmDiffResult symmdiff_grid(const FieldFn& field, const FieldFn& truth_density, int dim,
                             std::size_t n, double h, double c, const WeightKind& weight,
                             double cell, double box_radius, const SymmDiffOptions& opts) {
    if (cell <= 0.0) throw NumericalError("symmdiff_grid: cell must be positive");
    const double w = band_half_width(n, h, opts.varsigma);
    if (cell > w) throw NumericalError("symmdiff_grid: cell exceeds the band width");
    SymmDiffResult res = make_result(weight, c, "grid");
    res.diag.band_width = w;

    const int m = static_cast<int>(std::ceil(2.0 * box_radius / cell));
    double value = 0.0;
    std::size_t cells = 0;
    const double cell_measure = dim == 1 ? cell : cell * cell;
    auto visit = [&](std::span<const double> x) {
        ++cells;
        double f_true = truth_density(x);
        bool in_n = field(x) >= c;
        bool in_t = f_true >= c;
        if (in_n != in_t) value += weight.value(f_true, c) * cell_measure;
    };
    if (dim == 1) {
        for (int i = 0; i < m; ++i) {
            double x[1] = {-box_radius + (i + 0.5) * cell};
            if (std::fabs(x[0]) <= box_radius) visit(std::span<const double>(x, 1));
        }
    } else {
        for (int i = 0; i < m; ++i) {
            for (int j = 0; j < m; ++j) {
                double x[2] = {-box_radius + (i + 0.5) * cell,
                               -box_radius + (j + 0.5) * cell};
                if (x[0] * x[0] + x[1] * x[1] <= box_radius * box_radius)
                    visit(std::span<const double>(x, 2));
            }
        }
    }
    res.value = value;
    res.diag.grid_cells = cells;
    check_measure_bound(res, c, nullptr);
    return res;
}

// ---------------------------------------------------------------------------
// level-integral identity

std::pair<double, double> lp_identity_check(const KdeField& field,
                                            const DensityModel& model, double p,
                                            int levels, double cell, double box_radius) {
    if (p < 1.0) throw NumericalError("lp_identity_check: p must be >= 1");
    if (levels < 8) throw NumericalError("lp_identity_check: too few levels");
    const int dim = model.dim();

    double data_reach = 0.0;
    for (std::size_t i = 0; i < field.used_count(); ++i) {
        auto r = field.points().row(i);
        double rr = dim == 1 ? std::fabs(r[0]) : std::sqrt(r[0] * r[0] + r[1] * r[1]);
        data_reach = std::max(data_reach, rr);
    }
    double R = box_radius;
    if (R <= 0.0) {
        // cover the lowest positive level's true set and the data support
        double c1 = std::max(model.sup_density() / levels, 1e-12);
        auto geom = model.geometry(std::min(c1, model.sup_density() * 0.5));
        double reach = model.radial() ? geom.radius : std::fabs(geom.crossings.back());
        R = std::max(reach, data_reach + field.axis_scale()) + cell;
    }

    std::vector<double> fn_v, f_v;
    const int m = static_cast<int>(std::ceil(2.0 * R / cell));
    for (int i = 0; i < m; ++i) {
        double x0 = -R + (i + 0.5) * cell;
        if (dim == 1) {
            double x[1] = {x0};
            fn_v.push_back(field.evaluate(std::span<const double>(x, 1)));
            f_v.push_back(model.density(std::span<const double>(x, 1)));
        } else {
            for (int j = 0; j < m; ++j) {
                double x[2] = {x0, -R + (j + 0.5) * cell};
                if (x[0] * x[0] + x[1] * x[1] > R * R) continue;
                fn_v.push_back(field.evaluate(std::span<const double>(x, 2)));
                f_v.push_back(model.density(std::span<const double>(x, 2)));
            }
        }
    }
    const double cell_measure = dim == 1 ? cell : cell * cell;

    double c_max = 0.0;
    for (std::size_t i = 0; i < fn_v.size(); ++i)
        c_max = std::max({c_max, fn_v[i], f_v[i]});

    auto h_weighted = [&](double c) {
        double s = 0.0;
        for (std::size_t i = 0; i < fn_v.size(); ++i) {
            if ((fn_v[i] >= c) != (f_v[i] >= c))
                s += (p == 1.0 ? 1.0 : std::pow(std::fabs(f_v[i] - c), p - 1.0));
        }
        return s * cell_measure;
    };

    const double dc = c_max / levels;
    double lhs = 0.0;
    for (int j = 0; j <= levels; ++j) {
        double weight = (j == 0 || j == levels) ? 0.5 : 1.0;
        lhs += weight * h_weighted(j * dc);
    }
    lhs *= dc;

    double rhs = 0.0;
    for (std::size_t i = 0; i < fn_v.size(); ++i)
        rhs += std::pow(std::fabs(fn_v[i] - f_v[i]), p);
    rhs *= cell_measure / p;

    return {lhs, rhs};
}

}  // namespace levset
