#pragma once

#include <cstdint>
#include <string_view>
#include <vector>

namespace esd {

/// Derives an independent stream seed from the single run seed, so that
/// initialization, batching and data synthesis never share random state.
std::uint64_t derive_seed(std::uint64_t seed, std::string_view stream);

/// Deterministic random generator. All conversions from raw bits to doubles
/// and bounded integers are spelled out here so that identical seeds produce
/// identical streams on any platform.
class Rng {
public:
    explicit Rng(std::uint64_t seed);

    std::uint64_t next_u64();

    /// Uniform draw in [0, 1) with 53 bits of precision.
    double uniform();
    double uniform(double lo, double hi);

    /// Standard normal via Box-Muller.
    double normal();

    /// Uniform integer in [0, n). n must be positive.
    std::size_t below(std::size_t n);

    template <typename T>
    void shuffle(std::vector<T>& v) {
        if (v.size() < 2) return;
        for (std::size_t i = v.size() - 1; i > 0; --i) {
            std::size_t j = below(i + 1);
            std::swap(v[i], v[j]);
        }
    }

private:
    std::uint64_t state_[4];
    double spare_normal_ = 0.0;
    bool has_spare_ = false;
};

} // namespace esd
