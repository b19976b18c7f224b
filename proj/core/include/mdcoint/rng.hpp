#pragma once

#include <cmath>
#include <cstdint>
#include <random>

namespace mdcoint {

/// Deterministic standard-normal stream: mt19937_64 uniforms through the
/// polar Box-Muller transform. The algorithm is fixed here (not delegated to
/// std::normal_distribution, whose output is implementation-defined) so a
/// seed pins the simulated sample.
class NormalRng {
public:
    explicit NormalRng(std::uint64_t seed) : gen_(seed) {}

    /// U(0,1) with 53 random bits, never exactly 0 or 1.
    double uniform() {
        return (static_cast<double>(gen_() >> 11) + 0.5) * 0x1.0p-53;
    }

    /// N(0,1) draw.
    double next() {
        if (have_spare_) {
            have_spare_ = false;
            return spare_;
        }
        double u, v, s;
        do {
            u = 2.0 * uniform() - 1.0;
            v = 2.0 * uniform() - 1.0;
            s = u * u + v * v;
        } while (s >= 1.0 || s == 0.0);
        const double f = std::sqrt(-2.0 * std::log(s) / s);
        spare_ = v * f;
        have_spare_ = true;
        return u * f;
    }

private:
    std::mt19937_64 gen_;
    double spare_ = 0.0;
    bool have_spare_ = false;
};

}  // namespace mdcoint
