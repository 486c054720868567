#ifndef EPDA_RNG_HPP
#define EPDA_RNG_HPP

#include <cmath>
#include <complex>
#include <cstdint>
#include <random>

namespace epda {

/// splitmix64 step; used to derive independent stream seeds from one root
/// seed so that channel and payload draws never share a generator state.
inline std::uint64_t derive_seed(std::uint64_t seed, std::uint64_t stream) {
    std::uint64_t z = seed + 0x9E3779B97F4A7C15ull * (stream + 1);
    z = (z ^ (z >> 30)) * 0xBF58476D1CE4E5B9ull;
    z = (z ^ (z >> 27)) * 0x94D049BB133111EBull;
    return z ^ (z >> 31);
}

/// Deterministic stream of circularly-symmetric standard complex normal
/// samples (E|z|^2 = 1).  Built on mt19937_64 with a fixed polar-form
/// transform so identical seeds give identical sequences everywhere.
class ComplexNormalStream {
   public:
    explicit ComplexNormalStream(std::uint64_t seed) : gen_(seed) {}

    /// Uniform in [0, 1), 53-bit resolution.
    double uniform01() { return static_cast<double>(gen_() >> 11) * 0x1.0p-53; }

    std::complex<double> next() {
        const double u1 = uniform01();
        const double u2 = uniform01();
        // radius^2 ~ Exp(1); log1p(-u1) stays finite because u1 < 1
        const double r = std::sqrt(-std::log1p(-u1));
        const double theta = 2.0 * 3.141592653589793238462643383279502884 * u2;
        return {r * std::cos(theta), r * std::sin(theta)};
    }

   private:
    std::mt19937_64 gen_;
};

}  // namespace epda

#endif
