#ifndef CMBOUNDS_RNG_HPP
#define CMBOUNDS_RNG_HPP

#include <cmath>
#include <cstdint>

namespace cmbounds::rng {

// All randomness in this library flows through SplitMix64 (Steele, Lea &
// Flood; the reference sequence used by java.util.SplittableRandom). It is
// a pure function of a 64-bit counter, so streams reproduce bit-for-bit on
// any platform. Version ids below are recorded in experiment manifests.
inline constexpr const char* kAlgorithmId = "splitmix64-1.0";
inline constexpr const char* kDeriveId = "splitmix64-derive-1";

class SplitMix64 {
  public:
    explicit SplitMix64(std::uint64_t seed) : state_(seed) {}

    std::uint64_t next() {
        std::uint64_t z = (state_ += 0x9E3779B97F4A7C15ull);
        z = (z ^ (z >> 30)) * 0xBF58476D1CE4E5B9ull;
        z = (z ^ (z >> 27)) * 0x94D049BB133111EBull;
        return z ^ (z >> 31);
    }

    // Uniform on [0, 1), 53 mantissa bits.
    double uniform01() { return static_cast<double>(next() >> 11) * 0x1.0p-53; }

    double uniform(double lo, double hi) { return lo + (hi - lo) * uniform01(); }

  private:
    std::uint64_t state_;
};

// Child seed for a named substream ("splitmix64-derive-1" scheme): perturb
// the parent by a stream-indexed odd constant, then apply one SplitMix64
// step. Documented so that seeds reproduce across platforms and releases.
inline std::uint64_t derive_seed(std::uint64_t parent, std::uint64_t stream) {
    SplitMix64 g(parent ^ (0xA0761D6478BD642Full * (stream + 1)));
    return g.next();
}

// Standard normals via the Marsaglia polar method. Rejection makes the
// draw count data-dependent, but the sequence is still a pure function of
// the seed.
class NormalSampler {
  public:
    explicit NormalSampler(std::uint64_t seed) : gen_(seed) {}

    double next() {
        if (has_spare_) {
            has_spare_ = false;
            return spare_;
        }
        double u, v, s;
        do {
            u = 2.0 * gen_.uniform01() - 1.0;
            v = 2.0 * gen_.uniform01() - 1.0;
            s = u * u + v * v;
        } while (s >= 1.0 || s == 0.0);
        const double f = std::sqrt(-2.0 * std::log(s) / s);
        spare_ = v * f;
        has_spare_ = true;
        return u * f;
    }

  private:
    SplitMix64 gen_;
    double spare_ = 0.0;
    bool has_spare_ = false;
};

}  // namespace cmbounds::rng

#endif
