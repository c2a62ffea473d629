#include "levset/rng.hpp"

#include <cmath>

namespace levset {

std::uint64_t mix64(std::uint64_t x) {
    x += 0x9e3779b97f4a7c15ULL;
    x = (x ^ (x >> 30)) * 0xbf58476d1ce4e5b9ULL;
    x = (x ^ (x >> 27)) * 0x94d049bb133111ebULL;
    return x ^ (x >> 31);
}

std::uint64_t derive_seed(std::uint64_t base, std::uint64_t n, std::uint64_t rep) {
    return mix64(mix64(mix64(base) ^ n) ^ rep);
}

std::uint64_t sub_seed(std::uint64_t seed, std::uint64_t tag) {
    return mix64(seed ^ mix64(tag));
}

namespace {

std::uint64_t poisson_inversion(double mean, Rng& rng) {
    // Sequential search from k = 0; fine for small means.
    double p = std::exp(-mean);
    double cum = p;
    double u = rng.uniform();
    std::uint64_t k = 0;
    while (u > cum && k < 10000) {
        ++k;
        p *= mean / static_cast<double>(k);
        cum += p;
    }
    return k;
}

// Hormann (1993), "The transformed rejection method for generating Poisson
// random variables", algorithm PTRS. Exact for mean >= ~10.
std::uint64_t poisson_ptrs(double mean, Rng& rng) {
    const double log_mean = std::log(mean);
    const double b = 0.931 + 2.53 * std::sqrt(mean);
    const double a = -0.059 + 0.02483 * b;
    const double inv_alpha = 1.1239 + 1.1328 / (b - 3.4);
    const double v_r = 0.9277 - 3.6224 / (b - 2.0);

    for (;;) {
        double u = rng.uniform() - 0.5;
        double v = rng.uniform();
        double us = 0.5 - std::fabs(u);
        double kf = std::floor((2.0 * a / us + b) * u + mean + 0.43);
        if (us >= 0.07 && v <= v_r) return static_cast<std::uint64_t>(kf);
        if (kf < 0.0 || (us < 0.013 && v > us)) continue;
        double k = kf;
        if (std::log(v * inv_alpha / (a / (us * us) + b)) <=
            k * log_mean - mean - std::lgamma(k + 1.0)) {
            return static_cast<std::uint64_t>(kf);
        }
    }
}

}  // namespace

std::uint64_t poisson_count(double mean, std::uint64_t seed) {
    if (mean <= 0.0) return 0;
    Rng rng(seed);
    if (mean <= 50.0) return poisson_inversion(mean, rng);
    return poisson_ptrs(mean, rng);
}

}  // namespace levset
