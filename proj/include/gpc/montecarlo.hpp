#pragma once

#include "gpc/channel.hpp"

#include <cstdint>

namespace gpc {

struct McEstimate {
    int d = 0;
    int n_bases = 0;
    ClassTag class_tag = ClassTag::cp;
    std::uint64_t samples = 0;
    std::uint64_t seed = 0;
    std::uint64_t hits = 0;
    double estimate = 0.0;   // Hilbert-Schmidt volume
    double std_error = 0.0;  // binomial standard error, same units

    double hit_fraction() const { return static_cast<double>(hits) / static_cast<double>(samples); }
    // |estimate - exact| <= sigmas * std_error, up to binary64 rounding.
    bool consistent_with(double exact, double sigmas = 3.0) const;
};

// Samples per independently seeded random stream. Stream b covers sample
// indices [b * kMcBlock, (b + 1) * kMcBlock).
inline constexpr std::uint64_t kMcBlock = 1u << 14;

// Hit-or-miss estimate over the positivity box, membership decided by the
// binary64 instantiation of the channel predicates. Throws
// std::invalid_argument when samples < 10^4. The result depends only on the
// arguments, never on the OpenMP thread count.
McEstimate mc_volume(int d, int n_bases, ClassTag tag, std::uint64_t samples, std::uint64_t seed);

// Single-threaded reference with the same stream layout; bitwise identical.
McEstimate mc_volume_serial(int d, int n_bases, ClassTag tag, std::uint64_t samples, std::uint64_t seed);

}  // namespace gpc
