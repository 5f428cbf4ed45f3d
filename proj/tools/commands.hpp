#pragma once

#include <cstdint>
#include <optional>
#include <string>
#include <vector>

#include "ac/sim.hpp"

namespace ac::cli {

inline constexpr int kExitOk = 0;
inline constexpr int kExitParseError = 2;
inline constexpr int kExitTopologyError = 3;
inline constexpr int kExitNonConvergence = 4;

struct GenArgs {
    std::string family;
    std::optional<int> n;
    std::optional<double> d;
    std::uint64_t seed = 0;
    std::string out_path;
};

int cmd_gen(const GenArgs& args);
int cmd_run(const std::string& spec_path, const std::string& out_path,
            std::optional<std::uint64_t> seed_override);
int cmd_sweep(const std::string& spec_path, const std::string& out_path,
              const std::vector<std::string>& grid_flags, int jobs,
              std::optional<std::uint64_t> seed_override);
int cmd_report(const std::string& results_path);

// One "--grid key=v1,v2,..." flag.
struct GridAxis {
    std::string key;
    std::vector<std::string> values;
};

// Exposed for tests.
std::vector<GridAxis> parse_grid_flags(const std::vector<std::string>& flags);
std::vector<SimConfig> expand_grid(const SimConfig& base, const std::vector<GridAxis>& axes);

}  // namespace ac::cli
