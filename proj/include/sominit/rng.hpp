#pragma once

#include <cmath>
#include <cstdint>
#include <random>

namespace sominit {

/// Seedable random generator with a fixed cross-platform contract.
///
/// Outputs are a pure function of (seed, stream). The generator identity is
/// part of the reproducibility contract of every file this tool writes:
///
///   * engine: std::mt19937_64 (bit-exact by the C++ standard),
///   * stream k of master seed s: the engine is seeded with the k-th output
///     of the splitmix64 sequence started at s,
///   * uniform doubles: (u64 >> 11) * 2^-53, i.e. 53 random bits in [0, 1),
///   * bounded integers: rejection sampling, no modulo bias,
///   * normals: Box-Muller pairs from two uniforms.
///
/// The standard <random> distributions are deliberately not used; their
/// output is implementation-defined and would break bit-exact replay.
class Rng {
public:
    explicit Rng(std::uint64_t seed) : engine_(seed) {}

    /// Generator for logical stream `stream` of `seed`. Distinct streams are
    /// statistically independent, so one consumer cannot perturb another.
    static Rng substream(std::uint64_t seed, std::uint64_t stream) {
        return Rng(splitmix64_at(seed, stream));
    }

    std::uint64_t next_u64() { return engine_(); }

    /// Uniform in [0, 1) with 53 bits of precision.
    double uniform() {
        return static_cast<double>(next_u64() >> 11) * 0x1.0p-53;
    }

    double uniform(double lo, double hi) { return lo + (hi - lo) * uniform(); }

    /// Uniform integer in [0, n). Requires n >= 1.
    std::uint64_t uniform_below(std::uint64_t n) {
        // Rejection keeps the draw exactly uniform for every n.
        std::uint64_t bits, value;
        do {
            bits = next_u64();
            value = bits % n;
        } while (bits - value > std::uint64_t(0) - n);
        return value;
    }

    /// Standard normal deviate.
    double normal() {
        if (has_spare_) {
            has_spare_ = false;
            return spare_;
        }
        const double u1 = uniform();
        const double u2 = uniform();
        // log1p(-u1) = log(1 - u1); 1 - u1 is in (0, 1] so this never overflows.
        const double radius = std::sqrt(-2.0 * std::log1p(-u1));
        const double angle = 2.0 * 3.14159265358979323846 * u2;
        spare_ = radius * std::sin(angle);
        has_spare_ = true;
        return radius * std::cos(angle);
    }

    /// k-th output of the splitmix64 sequence seeded with `seed`.
    static std::uint64_t splitmix64_at(std::uint64_t seed, std::uint64_t k) {
        std::uint64_t z = seed + (k + 1) * 0x9E3779B97F4A7C15ULL;
        z = (z ^ (z >> 30)) * 0xBF58476D1CE4E5B9ULL;
        z = (z ^ (z >> 27)) * 0x94D049BB133111EBULL;
        return z ^ (z >> 31);
    }

private:
    std::mt19937_64 engine_;
    double spare_ = 0.0;
    bool has_spare_ = false;
};

/// Logical stream ids used by seeded operations. Part of the format contract.
namespace rng_stream {
inline constexpr std::uint64_t kCurveParams = 0; // shape parameter draws
inline constexpr std::uint64_t kNoise = 1;       // additive Gaussian noise
inline constexpr std::uint64_t kSampling = 2;    // random-initialization draws
} // namespace rng_stream

} // namespace sominit
