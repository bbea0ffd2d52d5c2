#ifndef CPLOSS_RNG_HPP
#define CPLOSS_RNG_HPP

#include <cmath>
#include <cstdint>
#include <random>
#include <vector>

namespace cploss {

/**
 * Seeded random source used everywhere reproducibility matters.
 *
 * All draws are derived from raw mt19937_64 output instead of the standard
 * <random> distributions, whose bit streams vary between library
 * implementations. Identical seeds therefore give identical sequences on any
 * conforming platform.
 */
class Rng {
public:
    explicit Rng(std::uint64_t seed) : eng_(seed) {}

    std::uint64_t raw() { return eng_(); }

    /// Uniform in [0, 1).
    double uniform() { return static_cast<double>(eng_() >> 11) * 0x1.0p-53; }

    /// Uniform in [lo, hi).
    double uniform(double lo, double hi) { return lo + (hi - lo) * uniform(); }

    /// Uniform integer in [0, n).
    std::uint64_t below(std::uint64_t n) { return eng_() % n; }

    /// Standard normal via Box-Muller.
    double normal() {
        double u1 = uniform();
        while (u1 <= 0.0) u1 = uniform();
        const double u2 = uniform();
        return std::sqrt(-2.0 * std::log(u1)) * std::cos(6.283185307179586 * u2);
    }

    /// Zero-median Laplace with scale b (inverse CDF).
    double laplace(double b) {
        const double u = uniform() - 0.5;
        return -b * ((u < 0) ? -1.0 : 1.0) * std::log(1.0 - 2.0 * std::fabs(u));
    }

    /// Fisher-Yates shuffle with draws from this engine.
    template <typename T>
    void shuffle(std::vector<T>& items) {
        for (std::size_t i = items.size(); i > 1; --i) {
            const std::size_t j = static_cast<std::size_t>(below(i));
            std::swap(items[i - 1], items[j]);
        }
    }

    /// Derives an independent stream for a named sub-task.
    Rng fork(std::uint64_t stream) {
        return Rng(mix(eng_() ^ (0x9e3779b97f4a7c15ULL * (stream + 1))));
    }

private:
    static std::uint64_t mix(std::uint64_t z) {
        z += 0x9e3779b97f4a7c15ULL;
        z = (z ^ (z >> 30)) * 0xbf58476d1ce4e5b9ULL;
        z = (z ^ (z >> 27)) * 0x94d049bb133111ebULL;
        return z ^ (z >> 31);
    }

    std::mt19937_64 eng_;
};

} // namespace cploss

#endif // CPLOSS_RNG_HPP
