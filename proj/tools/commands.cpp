#include "commands.hpp"

#include <iostream>
#include <limits>

#include "ac/graph.hpp"
#include "ac/log.hpp"
#include "csv.hpp"
#include "experiment_spec.hpp"

namespace ac::cli {
namespace {

Graph generate_from_args(const GenArgs& args) {
    const Family family = parse_family(args.family);
    switch (family) {
        case Family::uniform:
            if (!args.n || !args.d) throw SpecParseError("gen uniform: --n and --d are required");
            if (*args.n < 2 || *args.d < 1.0 || *args.d >= *args.n)
                throw SpecParseError("gen uniform: need n >= 2 and 1 <= d < n");
            return gen_uniform(*args.n, *args.d, args.seed);
        case Family::clustered:
            if (args.n || args.d)
                throw SpecParseError("gen clustered: --n/--d do not apply (fixed 100-node layout)");
            return gen_clustered(args.seed);
        case Family::star:
        case Family::chain:
            if (!args.n) throw SpecParseError("gen star/chain: --n is required");
            if (args.d) throw SpecParseError("gen star/chain: --d does not apply");
            if (*args.n < 2) throw SpecParseError("gen star/chain: need n >= 2");
            return family == Family::star ? gen_star(*args.n) : gen_chain(*args.n);
    }
    throw SpecParseError("gen: unknown family " + args.family);
}

// cmd_run output rides the sweep CSV schema with a single replicate row
SweepPoint single_run_point(const SimConfig& config, const RunResult& result) {
    SweepPoint point;
    point.config = config;
    ReplicateRow row;
    row.replicate = 0;
    row.iterations = result.iterations;
    row.total_cost_attempted = result.total_cost_attempted;
    row.total_cost_survived = result.total_cost_survived;
    row.converged = result.converged;
    row.cost_ratio = std::numeric_limits<double>::quiet_NaN();
    row.time_ratio = std::numeric_limits<double>::quiet_NaN();
    row.ratios_valid = false;
    point.rows.push_back(row);
    point.aggregate = aggregate_rows(point.rows);
    return point;
}

}  // namespace

int cmd_gen(const GenArgs& args) {
    const Graph g = generate_from_args(args);
    save_graph(g, args.out_path);
    log::info("gen: wrote " + args.out_path);
    return kExitOk;
}

int cmd_run(const std::string& spec_path, const std::string& out_path,
            std::optional<std::uint64_t> seed_override) {
    SimConfig config = load_experiment_spec(spec_path);
    if (seed_override) config.seed = *seed_override;

    const RunResult result = run(config);
    save_results_csv(out_path, {single_run_point(config, result)});
    save_trace_csv(derived_path(out_path, "trace"), result);
    log::info("run: wrote " + out_path);
    return result.converged ? kExitOk : kExitNonConvergence;
}

int cmd_sweep(const std::string& spec_path, const std::string& out_path,
              const std::vector<std::string>& grid_flags, int jobs,
              std::optional<std::uint64_t> seed_override) {
    SimConfig base = load_experiment_spec(spec_path);
    if (seed_override) base.seed = *seed_override;
    if (jobs < 1) throw SpecParseError("sweep: --jobs must be positive");

    const std::vector<SimConfig> points = expand_grid(base, parse_grid_flags(grid_flags));
    const std::vector<SweepPoint> results = sweep(points, jobs);

    save_results_csv(out_path, results);
    save_aggregates_csv(derived_path(out_path, "agg"), results);
    log::info("sweep: wrote " + out_path);

    for (const SweepPoint& point : results)
        for (const ReplicateRow& row : point.rows)
            if (!row.converged || !row.baseline_converged) return kExitNonConvergence;
    return kExitOk;
}

int cmd_report(const std::string& results_path) {
    print_report(std::cout, read_results(results_path));
    return kExitOk;
}

std::vector<GridAxis> parse_grid_flags(const std::vector<std::string>& flags) {
    std::vector<GridAxis> axes;
    for (const std::string& flag : flags) {
        const auto eq = flag.find('=');
        if (eq == std::string::npos || eq == 0 || eq + 1 >= flag.size())
            throw SpecParseError("grid: expected key=v1,v2,... got '" + flag + "'");
        GridAxis axis;
        axis.key = flag.substr(0, eq);
        std::string rest = flag.substr(eq + 1);
        std::size_t pos = 0;
        while (pos != std::string::npos) {
            const auto comma = rest.find(',', pos);
            const std::string value =
                rest.substr(pos, comma == std::string::npos ? std::string::npos : comma - pos);
            if (value.empty()) throw SpecParseError("grid: empty value in '" + flag + "'");
            axis.values.push_back(value);
            pos = comma == std::string::npos ? std::string::npos : comma + 1;
        }
        axes.push_back(std::move(axis));
    }
    return axes;
}

std::vector<SimConfig> expand_grid(const SimConfig& base, const std::vector<GridAxis>& axes) {
    std::vector<SimConfig> points{base};
    for (const GridAxis& axis : axes) {
        std::vector<SimConfig> expanded;
        expanded.reserve(points.size() * axis.values.size());
        for (const SimConfig& point : points) {
            for (const std::string& value : axis.values) {
                SimConfig next = point;
                try {
                    if (axis.key == "alpha") {
                        next.alpha = std::stod(value);
                    } else if (axis.key == "p_fail") {
                        next.p_fail = std::stod(value);
                    } else if (axis.key == "scheme") {
                        next.scheme = parse_scheme(value);
                    } else if (axis.key == "n") {
                        next.topology.n = std::stoi(value);
                    } else if (axis.key == "d") {
                        next.topology.d = std::stod(value);
                    } else {
                        throw SpecParseError("grid: unknown key '" + axis.key + "'");
                    }
                } catch (const SpecParseError&) {
                    throw;
                } catch (const std::exception&) {
                    throw SpecParseError("grid: bad value '" + value + "' for key '" + axis.key +
                                         "'");
                }
                expanded.push_back(std::move(next));
            }
        }
        points = std::move(expanded);
    }
    for (const SimConfig& point : points) {
        try {
            validate(point);
        } catch (const std::invalid_argument& err) {
            throw SpecParseError(std::string("grid: ") + err.what());
        }
    }
    return points;
}

}  // namespace ac::cli
