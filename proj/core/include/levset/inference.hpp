#pragma once

#include <cstdint>
#include <optional>
#include <string>
#include <vector>

#include "levset/kde.hpp"
#include "levset/levelset.hpp"
#include "levset/models.hpp"

namespace levset {

struct SubsampleVarianceResult {
    std::size_t m_n = 0;        // subsample size
    std::size_t subsamples = 0; // floor(n / m_n)
    std::vector<double> xi;     // per-subsample symmetric-difference values
    double estimate = 0.0;      // sample variance of the normalized xi
};

/// Variance estimate from disjoint random subsamples: each of floor(n/m)
/// subsamples of size m = ceil(n^m_exponent) yields one d_G value at its own
/// bandwidth, and the sample variance of (m/h_m)^(1/4) xi_i estimates the
/// limiting variance. The partition depends on the seed only: points are
/// brought to a canonical order before the seeded shuffle, so permuting the
/// input rows cannot change the estimate.
SubsampleVarianceResult subsample_variance(const PointSet& points,
                                           const DensityModel& truth, double c,
                                           const WeightKind& weight, std::uint64_t seed,
                                           double m_exponent = 0.7,
                                           const SymmDiffOptions& opts = {});

enum class CalibrationMode { Simulated, ClosedForm };

/// Null mean and scale of the Lebesgue statistic for a given reference/n.
struct Calibration {
    double c = 0.0;
    double mean_d = 0.0;   // E d_lambda under the reference
    double sigma = 0.0;    // limiting-scale sd: (n/h)^(1/4) sd(d_lambda)
    std::size_t n = 0;
    double h = 0.0;
    double alpha = 0.0;
    std::string source;    // "simulated" | "closed-form"
};

/// Monte Carlo null calibration: reps seeded draws of size n from the
/// reference, each scored with the Lebesgue symmetric difference.
Calibration calibrate_simulated(const DensityModel& reference, std::size_t n,
                                double alpha, const Kernel& kernel, std::size_t reps,
                                std::uint64_t seed, const SymmDiffOptions& opts = {});

/// Closed-form calibration from the mean limit and the limiting variance.
Calibration calibrate_closed_form(const DensityModel& reference, std::size_t n,
                                  double alpha, const Kernel& kernel);

struct TestOutcome {
    double z = 0.0;
    double threshold = 1.96;
    bool reject = false;
    double c = 0.0;
    double alpha = 0.0;
    double mean = 0.0;
    double sigma = 0.0;
    std::size_t n = 0;
    double h = 0.0;
    std::string calibration;
    std::string warning;  // set when the bandwidth support proxy is marginal
};

struct OnlineTestOptions {
    double threshold = 1.96;
    bool recenter_level = false;  // replace c by the batch's own coverage level
    SymmDiffOptions symmdiff;
};

/// Scores a batch against a calibrated reference model: z is the normalized
/// deviation of the batch's Lebesgue symmetric difference from the null mean.
TestOutcome online_test(const Calibration& cal, const DensityModel& reference,
                        const Kernel& kernel, const PointSet& batch,
                        const OnlineTestOptions& opts = {});

/// Convenience wrapper: calibrate then test.
TestOutcome online_test(const DensityModel& reference, const PointSet& batch,
                        double alpha, CalibrationMode mode, const Kernel& kernel,
                        std::size_t reps, std::uint64_t seed,
                        const OnlineTestOptions& opts = {});

/// Reference given as a sample: a kernel estimate fitted on it acts as the
/// known density (conditioning on the reference data). The level, the null
/// calibration, and the batch statistic all use that fitted field as truth.
TestOutcome online_test_sample_reference(const PointSet& reference,
                                         const PointSet& batch, double alpha,
                                         const Kernel& kernel, std::size_t reps,
                                         std::uint64_t seed,
                                         const OnlineTestOptions& opts = {});

/// Level whose estimated coverage under the field equals alpha, by grid
/// quadrature of the field and bisection in c.
double kde_level_for_coverage(const KdeField& field, double alpha, double cell,
                              double box_radius);

}  // namespace levset
