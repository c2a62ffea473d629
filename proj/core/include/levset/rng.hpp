#pragma once

#include <cmath>
#include <cstdint>

namespace levset {

/// Counter-based generator (splitmix64 steps). Every draw is a pure function
/// of (seed, counter), so streams are reproducible across platforms and
/// independent of library implementations.
class Rng {
public:
    explicit Rng(std::uint64_t seed) : state_(seed) {}

    std::uint64_t next_u64() {
        std::uint64_t z = (state_ += 0x9e3779b97f4a7c15ULL);
        z = (z ^ (z >> 30)) * 0xbf58476d1ce4e5b9ULL;
        z = (z ^ (z >> 27)) * 0x94d049bb133111ebULL;
        return z ^ (z >> 31);
    }

    /// Uniform on (0, 1); never returns 0 so logs are safe.
    double uniform() {
        return (static_cast<double>(next_u64() >> 11) + 0.5) * 0x1.0p-53;
    }

    /// Standard normal via Marsaglia's polar method with a cached spare.
    double normal() {
        if (has_spare_) {
            has_spare_ = false;
            return spare_;
        }
        double u, v, s;
        do {
            u = 2.0 * uniform() - 1.0;
            v = 2.0 * uniform() - 1.0;
            s = u * u + v * v;
        } while (s >= 1.0 || s == 0.0);
        double m = std::sqrt(-2.0 * std::log(s) / s);
        spare_ = v * m;
        has_spare_ = true;
        return u * m;
    }

private:
    std::uint64_t state_;
    bool has_spare_ = false;
    double spare_ = 0.0;
};

/// One splitmix64 mixing step on a bare value.
std::uint64_t mix64(std::uint64_t x);

/// Seed for replication `rep` of the run at sample size `n` under `base`.
/// Defined as mix64(mix64(mix64(base) ^ n) ^ rep) so any record can be
/// regenerated in isolation.
std::uint64_t derive_seed(std::uint64_t base, std::uint64_t n, std::uint64_t rep);

/// Named sub-stream of a seed (e.g. the Poisson count vs the point stream).
std::uint64_t sub_seed(std::uint64_t seed, std::uint64_t tag);

/// Seeded Poisson(mean) draw: sequential inversion for mean <= 50,
/// Hormann's transformed rejection (PTRS) above.
std::uint64_t poisson_count(double mean, std::uint64_t seed);

}  // namespace levset
