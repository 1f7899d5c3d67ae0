#pragma once

#include <cmath>
#include <cstdint>
#include <random>
#include <vector>

namespace stowsim {

// Deterministic RNG used everywhere in the simulator. All distribution
// sampling is implemented on top of raw mt19937_64 output so that streams
// are identical across platforms and standard libraries; std::*_distribution
// is deliberately avoided.
class Rng {
public:
    explicit Rng(uint64_t seed = 0) : eng_(seed) {}

    uint64_t next() { return eng_(); }

    // Uniform in [0, 1), 53-bit resolution.
    double uniform01() { return static_cast<double>(next() >> 11) * 0x1.0p-53; }

    double uniform(double lo, double hi) { return lo + (hi - lo) * uniform01(); }

    // Uniform integer in [lo, hi], inclusive. Modulo bias is far below
    // anything this simulator can resolve.
    int64_t uniform_int(int64_t lo, int64_t hi) {
        if (hi <= lo) return lo;
        uint64_t span = static_cast<uint64_t>(hi - lo) + 1;
        return lo + static_cast<int64_t>(next() % span);
    }

    bool bernoulli(double p) { return uniform01() < p; }

    double normal(double mean, double stddev) {
        // Box-Muller, no cached spare so the stream stays position-independent.
        double u1 = 1.0 - uniform01();  // (0, 1]
        double u2 = uniform01();
        double z = std::sqrt(-2.0 * std::log(u1)) * std::cos(2.0 * M_PI * u2);
        return mean + stddev * z;
    }

    // Lognormal parameterized by its mean and relative standard deviation
    // (sd / mean), so configured cycle-time means are reproduced exactly.
    double lognormal_mean_rel(double mean, double rel_sd) {
        if (rel_sd <= 0.0) return mean;
        double sigma2 = std::log(1.0 + rel_sd * rel_sd);
        double mu = std::log(mean) - 0.5 * sigma2;
        return std::exp(normal(mu, std::sqrt(sigma2)));
    }

    // Index into a non-empty weight vector; weights need not be normalized.
    size_t pick_weighted(const std::vector<double>& weights) {
        double total = 0.0;
        for (double w : weights) total += w;
        double r = uniform01() * total;
        double acc = 0.0;
        for (size_t i = 0; i < weights.size(); ++i) {
            acc += weights[i];
            if (r < acc) return i;
        }
        return weights.size() - 1;
    }

    template <typename T>
    void shuffle(std::vector<T>& v) {
        for (size_t i = v.size(); i > 1; --i) {
            size_t j = static_cast<size_t>(uniform_int(0, static_cast<int64_t>(i) - 1));
            std::swap(v[i - 1], v[j]);
        }
    }

private:
    std::mt19937_64 eng_;
};

}  // namespace stowsim
