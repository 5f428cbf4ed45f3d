#include "ac/sim.hpp"

#include <atomic>
#include <cmath>
#include <limits>
#include <mutex>
#include <sstream>
#include <stdexcept>
#include <thread>

#include "ac/log.hpp"
#include "ac/select_global.hpp"
#include "ac/spectral.hpp"

namespace ac {
namespace {

double nan_value() { return std::numeric_limits<double>::quiet_NaN(); }

}  // namespace

void validate(const SimConfig& config) {
    if (config.alpha < 0.0 || config.alpha > 1.0)
        throw std::invalid_argument("config: alpha must be in [0,1]");
    if (config.p_fail < 0.0 || config.p_fail > 1.0)
        throw std::invalid_argument("config: p_fail must be in [0,1]");
    if (config.epsilon <= 0.0) throw std::invalid_argument("config: epsilon must be positive");
    if (config.max_iters < 1) throw std::invalid_argument("config: max_iters must be positive");
    if (config.replicates < 1) throw std::invalid_argument("config: replicates must be positive");
    if (config.step && *config.step <= 0.0)
        throw std::invalid_argument("config: step override must be positive");
    switch (config.topology.family) {
        case Family::uniform:
            if (config.topology.n < 2) throw std::invalid_argument("config: uniform needs n >= 2");
            if (config.topology.d < 1.0 || config.topology.d >= config.topology.n)
                throw std::invalid_argument("config: uniform needs 1 <= d < n");
            break;
        case Family::clustered:
            if (config.topology.n != 0 && config.topology.n != 100)
                throw std::invalid_argument("config: clustered topology is fixed at n = 100");
            break;
        case Family::star:
        case Family::chain:
            if (config.topology.n < 2)
                throw std::invalid_argument("config: star/chain needs n >= 2");
            break;
    }
}

Graph build_topology(const TopologySpec& spec) {
    switch (spec.family) {
        case Family::uniform: return gen_uniform(spec.n, spec.d, spec.seed);
        case Family::clustered: return gen_clustered(spec.seed);
        case Family::star: return gen_star(spec.n);
        case Family::chain: return gen_chain(spec.n);
    }
    throw std::invalid_argument("build_topology: unknown family");
}

LinkMask apply_failures(const LinkMask& mask, double p_fail, Rng& rng) {
    LinkMask out = mask;
    if (p_fail <= 0.0) return out;
    for (auto& bit : out)
        if (bit && rng.bernoulli(p_fail)) bit = 0;
    return out;
}

RunResult run(const SimConfig& config) {
    validate(config);
    const Graph g = build_topology(config.topology);
    if (!is_connected(g)) throw std::domain_error("run: topology is disconnected");

    const Matrix laplacian = build_laplacian(g);
    double step;
    if (config.step) {
        step = *config.step;
    } else {
        const Spectrum spec = sym_eigen(laplacian);
        step = optimal_step(spec.eigenvalues[1], spec.eigenvalues.back());
    }

    StateVector x = init_states(g.node_count(), derive_seed(config.seed, kStreamInit));
    Rng rng_select(derive_seed(config.seed, kStreamSelect));
    Rng rng_fail(derive_seed(config.seed, kStreamFail));

    RunResult result;
    result.initial_mean = decompose(x).mean;

    const LinkMask all_links(g.edge_count(), 1);
    while (x.time < config.max_iters && !has_converged(x, config.epsilon)) {
        LinkMask selected;
        switch (config.scheme) {
            case Scheme::baseline:
                selected = all_links;
                break;
            case Scheme::global: {
                LinkSelection sel = select_links_global(g, x, step, config.alpha, rng_select);
                if (!sel.solver_converged) ++result.solver_nonconverged_steps;
                selected = std::move(sel.mask);
                break;
            }
            case Scheme::local: {
                LinkSelection sel = select_links_local(g, x, step, config.alpha, rng_select,
                                                       config.prediction_sign);
                if (!sel.solver_converged) ++result.solver_nonconverged_steps;
                selected = std::move(sel.mask);
                break;
            }
        }
        const LinkMask survived = apply_failures(selected, config.p_fail, rng_fail);
        for (int e = 0; e < g.edge_count(); ++e) {
            if (selected[e]) result.total_cost_attempted += g.edge_costs()[e];
            if (survived[e]) result.total_cost_survived += g.edge_costs()[e];
        }
        x = masked_update(x, g, survived, step);
        result.trace.push_back({x.time, disagreement(x, laplacian), spread(x),
                                count_set(selected), count_set(survived)});
    }

    result.iterations = x.time;
    result.converged = has_converged(x, config.epsilon);
    result.final_mean = decompose(x).mean;
    result.final_values = std::move(x.values);

    if (log::enabled(log::Level::info)) {
        std::ostringstream msg;
        msg << "run: scheme=" << static_cast<int>(config.scheme) << " n=" << g.node_count()
            << " m=" << g.edge_count() << " iters=" << result.iterations
            << " cost=" << result.total_cost_attempted << " converged=" << result.converged;
        log::info(msg.str());
    }
    return result;
}

ComparisonResult compare(const SimConfig& config) {
    if (config.scheme == Scheme::baseline)
        throw std::invalid_argument("compare: scheme must not be baseline");
    ComparisonResult cmp;
    cmp.selective = run(config);
    SimConfig base = config;
    base.scheme = Scheme::baseline;
    cmp.baseline = run(base);

    cmp.ratios_valid = cmp.selective.converged && cmp.baseline.converged &&
                       cmp.baseline.iterations > 0 && cmp.baseline.total_cost_attempted > 0.0;
    if (cmp.ratios_valid) {
        cmp.cost_ratio = cmp.selective.total_cost_attempted / cmp.baseline.total_cost_attempted;
        cmp.time_ratio = static_cast<double>(cmp.selective.iterations) /
                         static_cast<double>(cmp.baseline.iterations);
    } else {
        cmp.cost_ratio = nan_value();
        cmp.time_ratio = nan_value();
    }
    return cmp;
}

SimConfig replicate_config(const SimConfig& base, int replicate) {
    SimConfig cfg = base;
    cfg.seed = replicate_seed(base.seed, replicate);
    cfg.topology.seed = derive_seed(base.topology.seed, static_cast<std::uint64_t>(replicate));
    return cfg;
}

namespace {

ReplicateRow run_replicate(const SimConfig& point, int replicate) {
    const SimConfig cfg = replicate_config(point, replicate);
    ReplicateRow row;
    row.replicate = replicate;
    if (cfg.scheme == Scheme::baseline) {
        const RunResult r = run(cfg);
        row.iterations = r.iterations;
        row.total_cost_attempted = r.total_cost_attempted;
        row.total_cost_survived = r.total_cost_survived;
        row.converged = r.converged;
        row.cost_ratio = 1.0;
        row.time_ratio = 1.0;
        row.ratios_valid = r.converged;
        row.baseline_iterations = r.iterations;
        row.baseline_cost_attempted = r.total_cost_attempted;
        row.baseline_converged = r.converged;
    } else {
        const ComparisonResult cmp = compare(cfg);
        row.iterations = cmp.selective.iterations;
        row.total_cost_attempted = cmp.selective.total_cost_attempted;
        row.total_cost_survived = cmp.selective.total_cost_survived;
        row.converged = cmp.selective.converged;
        row.cost_ratio = cmp.cost_ratio;
        row.time_ratio = cmp.time_ratio;
        row.ratios_valid = cmp.ratios_valid;
        row.baseline_iterations = cmp.baseline.iterations;
        row.baseline_cost_attempted = cmp.baseline.total_cost_attempted;
        row.baseline_converged = cmp.baseline.converged;
    }
    return row;
}

MeanSd mean_sd(const std::vector<double>& xs) {
    MeanSd out;
    if (xs.empty()) {
        out.mean = nan_value();
        out.sd = nan_value();
        return out;
    }
    double sum = 0.0;
    for (double x : xs) sum += x;
    out.mean = sum / static_cast<double>(xs.size());
    if (xs.size() < 2) {
        out.sd = 0.0;
        return out;
    }
    double ss = 0.0;
    for (double x : xs) ss += (x - out.mean) * (x - out.mean);
    out.sd = std::sqrt(ss / static_cast<double>(xs.size() - 1));
    return out;
}

}  // namespace

Aggregate aggregate_rows(const std::vector<ReplicateRow>& rows) {
    Aggregate agg;
    agg.replicates = static_cast<int>(rows.size());
    std::vector<double> iters, cost_a, cost_s, conv, cr, tr;
    for (const ReplicateRow& row : rows) {
        iters.push_back(static_cast<double>(row.iterations));
        cost_a.push_back(row.total_cost_attempted);
        cost_s.push_back(row.total_cost_survived);
        conv.push_back(row.converged ? 1.0 : 0.0);
        if (row.ratios_valid) {
            cr.push_back(row.cost_ratio);
            tr.push_back(row.time_ratio);
        }
    }
    agg.iterations = mean_sd(iters);
    agg.total_cost_attempted = mean_sd(cost_a);
    agg.total_cost_survived = mean_sd(cost_s);
    agg.converged = mean_sd(conv);
    agg.cost_ratio = mean_sd(cr);
    agg.time_ratio = mean_sd(tr);
    agg.ratio_count = static_cast<int>(cr.size());
    return agg;
}

std::vector<SweepPoint> sweep(const std::vector<SimConfig>& points, int jobs) {
    if (jobs < 1) throw std::invalid_argument("sweep: jobs must be positive");
    for (const SimConfig& p : points) validate(p);

    struct Task {
        int point;
        int replicate;
    };
    std::vector<Task> tasks;
    for (int p = 0; p < static_cast<int>(points.size()); ++p)
        for (int r = 0; r < points[p].replicates; ++r) tasks.push_back({p, r});

    std::vector<std::vector<ReplicateRow>> rows(points.size());
    for (std::size_t p = 0; p < points.size(); ++p) rows[p].resize(points[p].replicates);

    const int workers = std::min<int>(jobs, static_cast<int>(tasks.size()));
    if (workers <= 1) {
        for (const Task& t : tasks) rows[t.point][t.replicate] = run_replicate(points[t.point], t.replicate);
    } else {
        std::atomic<std::size_t> next{0};
        std::exception_ptr first_error;
        std::mutex error_mutex;
        auto worker = [&]() {
            for (;;) {
                const std::size_t k = next.fetch_add(1);
                if (k >= tasks.size()) return;
                try {
                    rows[tasks[k].point][tasks[k].replicate] =
                        run_replicate(points[tasks[k].point], tasks[k].replicate);
                } catch (...) {
                    std::lock_guard<std::mutex> lock(error_mutex);
                    if (!first_error) first_error = std::current_exception();
                    return;
                }
            }
        };
        std::vector<std::thread> pool;
        pool.reserve(workers);
        for (int w = 0; w < workers; ++w) pool.emplace_back(worker);
        for (std::thread& t : pool) t.join();
        if (first_error) std::rethrow_exception(first_error);
    }

    std::vector<SweepPoint> result(points.size());
    for (std::size_t p = 0; p < points.size(); ++p) {
        result[p].config = points[p];
        result[p].rows = std::move(rows[p]);
        result[p].aggregate = aggregate_rows(result[p].rows);
    }
    return result;
}

}  // namespace ac
