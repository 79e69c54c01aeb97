#pragma once

#include "gpc/channel.hpp"
#include "gpc/volume.hpp"

#include <cstdint>
#include <iosfwd>
#include <optional>
#include <string>
#include <vector>

namespace gpc::cli {

inline constexpr int kExitOk = 0;
inline constexpr int kExitMismatch = 1;
inline constexpr int kExitUsage = 2;

enum class Format { json, csv };

struct DimensionRange {
    int lo = 2;
    int hi = 2;
};

// "5" or "2..5".
DimensionRange parse_dimension_range(const std::string& text);

// Accepts a JSON array (["1/2", "0", ...]) or a comma-separated list
// ("1/2,0,..."). Rejects empty entries.
std::vector<Rational> parse_lambda_list(const std::string& text);

struct RunConfig {
    std::string subcommand;
    DimensionRange dims;
    NMode n_mode = NMode::max;
    std::vector<ClassTag> classes;
    std::uint64_t samples = 1000000;
    std::uint64_t seed = 42;
    Format format = Format::json;
    std::optional<std::string> out_path;
    std::string lambdas;
    double tolerance = 1e-10;
};

// Full CLI: parses, validates, dispatches, writes the output. Returns 0 on
// success, 1 on a verified failure (mismatch, MC inconsistency beyond
// 3 sigma, failed MUB check) and 2 on usage errors.
int run(int argc, const char* const* argv, std::ostream& out, std::ostream& err);

}  // namespace gpc::cli
