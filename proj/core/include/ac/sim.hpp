#pragma once

#include <cstdint>
#include <optional>
#include <vector>

#include "ac/consensus.hpp"
#include "ac/graph.hpp"
#include "ac/qp.hpp"
#include "ac/select_local.hpp"

namespace ac {

enum class Scheme { baseline, global, local };
enum class Family { uniform, clustered, star, chain };

struct TopologySpec {
    Family family = Family::uniform;
    int n = 0;        // ignored for clustered (fixed at 100)
    double d = 0.0;   // uniform only: target mean degree
    std::uint64_t seed = 0;
    bool operator==(const TopologySpec&) const = default;
};

struct SimConfig {
    TopologySpec topology;
    Scheme scheme = Scheme::baseline;
    double alpha = 1.0;                // fraction of total link cost allowed per iteration
    std::optional<double> step;        // empty: optimal step from the full spectrum
    double epsilon = 1e-3;             // stop when max(x) - min(x) < epsilon
    double p_fail = 0.0;               // per-link failure probability per iteration
    std::uint64_t seed = 0;            // master seed; init/select/fail streams derive from it
    std::int64_t max_iters = 1'000'000;
    int replicates = 1;
    PredictionSign prediction_sign = PredictionSign::consistent;
    bool operator==(const SimConfig&) const = default;
};

// Throws std::invalid_argument on an out-of-range field.
void validate(const SimConfig& config);

Graph build_topology(const TopologySpec& spec);

struct TraceRow {
    std::int64_t t = 0;
    double disagreement = 0.0;
    double spread = 0.0;
    int links_selected = 0;   // links in the drawn mask (energy is spent on these)
    int links_survived = 0;   // links left after failures
    bool operator==(const TraceRow&) const = default;
};

struct RunResult {
    std::int64_t iterations = 0;
    double total_cost_attempted = 0.0;  // cost of selected links, the headline cost
    double total_cost_survived = 0.0;
    bool converged = false;
    std::vector<TraceRow> trace;
    double initial_mean = 0.0;
    double final_mean = 0.0;
    std::vector<double> final_values;
    std::int64_t solver_nonconverged_steps = 0;
    bool operator==(const RunResult&) const = default;
};

// Each selected bit is cleared independently with probability p_fail; a
// failed link is off for both endpoints.
LinkMask apply_failures(const LinkMask& mask, double p_fail, Rng& rng);

// One full experiment: build topology, pick the step size, iterate
// select -> fail -> update until converged or max_iters.
RunResult run(const SimConfig& config);

struct ComparisonResult {
    RunResult selective;
    RunResult baseline;
    double cost_ratio = 0.0;  // selective / baseline, attempted cost
    double time_ratio = 0.0;
    bool ratios_valid = false;  // both runs converged with nonzero baseline
};

// Runs config and its all-links baseline on the same topology and the same
// initial states.
ComparisonResult compare(const SimConfig& config);

struct ReplicateRow {
    int replicate = 0;
    std::int64_t iterations = 0;
    double total_cost_attempted = 0.0;
    double total_cost_survived = 0.0;
    bool converged = false;
    double cost_ratio = 0.0;
    double time_ratio = 0.0;
    bool ratios_valid = false;
    std::int64_t baseline_iterations = 0;
    double baseline_cost_attempted = 0.0;
    bool baseline_converged = false;
    bool operator==(const ReplicateRow&) const = default;
};

struct MeanSd {
    double mean = 0.0;
    double sd = 0.0;
    bool operator==(const MeanSd&) const = default;
};

struct Aggregate {
    int replicates = 0;
    MeanSd iterations, total_cost_attempted, total_cost_survived, converged;
    MeanSd cost_ratio, time_ratio;  // over replicates with valid ratios
    int ratio_count = 0;
    bool operator==(const Aggregate&) const = default;
};

struct SweepPoint {
    SimConfig config;
    std::vector<ReplicateRow> rows;
    Aggregate aggregate;
    bool operator==(const SweepPoint&) const = default;
};

// Config for replicate i: master seed and topology seed both re-derived, so
// replicates draw independent topologies, states and sampling streams.
SimConfig replicate_config(const SimConfig& base, int replicate);

// Runs config.replicates replicates per grid point (compare for selective
// schemes, plain runs for baseline points) and aggregates. jobs > 1 runs
// replicates concurrently; results are identical to the sequential order.
std::vector<SweepPoint> sweep(const std::vector<SimConfig>& points, int jobs = 1);

Aggregate aggregate_rows(const std::vector<ReplicateRow>& rows);

}  // namespace ac
