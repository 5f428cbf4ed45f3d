#include <doctest.h>

#include <cmath>

#include "ac/select_global.hpp"
#include "ac/sim.hpp"
#include "support/test_support.hpp"

using namespace ac;

namespace {

SimConfig two_node_baseline() {
    SimConfig cfg;
    cfg.topology = {Family::chain, 2, 0.0, 1};
    cfg.scheme = Scheme::baseline;
    cfg.seed = 5;
    return cfg;
}

}  // namespace

TEST_CASE("config validation") {
    SimConfig cfg = two_node_baseline();
    validate(cfg);
    cfg.alpha = 1.3;
    CHECK_THROWS_AS(validate(cfg), std::invalid_argument);
    cfg = two_node_baseline();
    cfg.p_fail = -0.1;
    CHECK_THROWS_AS(validate(cfg), std::invalid_argument);
    cfg = two_node_baseline();
    cfg.epsilon = 0.0;
    CHECK_THROWS_AS(validate(cfg), std::invalid_argument);
    cfg = two_node_baseline();
    cfg.topology.family = Family::uniform;
    cfg.topology.n = 10;
    cfg.topology.d = 12.0;
    CHECK_THROWS_AS(validate(cfg), std::invalid_argument);
    cfg = two_node_baseline();
    cfg.topology.family = Family::clustered;
    cfg.topology.n = 50;
    CHECK_THROWS_AS(validate(cfg), std::invalid_argument);
}

TEST_CASE("apply_failures") {
    Rng rng(3);
    const LinkMask mask(100000, 1);
    CHECK(apply_failures(mask, 0.0, rng) == mask);
    CHECK(apply_failures(mask, 1.0, rng) == LinkMask(100000, 0));

    const LinkMask survived = apply_failures(mask, 0.5, rng);
    const double frac = static_cast<double>(count_set(survived)) / mask.size();
    CHECK(frac >= 0.49);
    CHECK(frac <= 0.51);

    // failure draws touch only set bits
    LinkMask sparse(10, 0);
    sparse[4] = 1;
    const LinkMask out = apply_failures(sparse, 0.5, rng);
    for (int e = 0; e < 10; ++e)
        if (e != 4) CHECK(out[e] == 0);
}

TEST_CASE("two-node baseline converges in one step with unit cost") {
    const RunResult r = run(two_node_baseline());
    CHECK(r.converged);
    CHECK(r.iterations == 1);
    CHECK(r.total_cost_attempted == doctest::Approx(1.0));
    CHECK(r.trace.size() == 1);
    CHECK(r.trace[0].links_selected == 1);
}

TEST_CASE("total failure never converges and stops at the cap") {
    SimConfig cfg = two_node_baseline();
    cfg.p_fail = 1.0;
    cfg.max_iters = 500;
    const RunResult r = run(cfg);
    CHECK_FALSE(r.converged);
    CHECK(r.iterations == 500);
    CHECK(r.total_cost_survived == doctest::Approx(0.0));
    CHECK(r.total_cost_attempted == doctest::Approx(500.0));
}

TEST_CASE("runs are deterministic per config") {
    for (Scheme scheme : {Scheme::baseline, Scheme::global, Scheme::local}) {
        SimConfig cfg;
        cfg.topology = {Family::uniform, 24, 4.0, 7};
        cfg.scheme = scheme;
        cfg.alpha = 0.5;
        cfg.p_fail = 0.2;
        cfg.seed = 11;
        const RunResult a = run(cfg);
        const RunResult b = run(cfg);
        CHECK(a == b);
        CHECK(a.converged);
        CHECK(std::fabs(a.final_mean - a.initial_mean) <= 1e-8);
    }
}

TEST_CASE("baseline spends exactly m per iteration") {
    SimConfig cfg;
    cfg.topology = {Family::uniform, 20, 4.0, 3};
    cfg.scheme = Scheme::baseline;
    cfg.seed = 2;
    const RunResult r = run(cfg);
    const Graph g = build_topology(cfg.topology);
    for (const TraceRow& row : r.trace) CHECK(row.links_selected == g.edge_count());
    CHECK(r.total_cost_attempted == doctest::Approx(static_cast<double>(r.iterations) * g.edge_count()));
}

TEST_CASE("global selection stays within the expected budget") {
    Rng rng(13);
    const Graph g = gen_uniform(30, 5.0, 17);
    StateVector x = init_states(30, 40);
    const double alpha = 0.4;
    const double budget = alpha * g.total_cost();
    for (int t = 0; t < 20; ++t) {
        const LinkSelection sel = select_links_global(g, x, 0.1, alpha, rng);
        double expected_cost = 0.0;
        for (int e = 0; e < g.edge_count(); ++e) expected_cost += g.edge_costs()[e] * sel.probs[e];
        CHECK(expected_cost <= budget + 1e-6);
        x = masked_update(x, g, sel.mask, 0.1);
    }
}

TEST_CASE("compare with alpha=1 on two nodes matches the baseline") {
    SimConfig cfg = two_node_baseline();
    cfg.scheme = Scheme::global;
    cfg.alpha = 1.0;
    const ComparisonResult cmp = compare(cfg);
    CHECK(cmp.ratios_valid);
    CHECK(cmp.cost_ratio <= 1.0 + 1e-12);
    CHECK(cmp.time_ratio == doctest::Approx(1.0));
    CHECK_THROWS_AS(compare(two_node_baseline()), std::invalid_argument);
}

TEST_CASE("sweep with one point and one replicate equals compare") {
    SimConfig cfg;
    cfg.topology = {Family::uniform, 20, 4.0, 9};
    cfg.scheme = Scheme::global;
    cfg.alpha = 0.5;
    cfg.seed = 21;
    cfg.replicates = 1;

    const std::vector<SweepPoint> points = sweep({cfg}, 1);
    REQUIRE(points.size() == 1);
    REQUIRE(points[0].rows.size() == 1);

    const ComparisonResult cmp = compare(replicate_config(cfg, 0));
    const ReplicateRow& row = points[0].rows[0];
    CHECK(row.iterations == cmp.selective.iterations);
    CHECK(row.total_cost_attempted == doctest::Approx(cmp.selective.total_cost_attempted));
    CHECK(row.cost_ratio == doctest::Approx(cmp.cost_ratio));
    CHECK(row.time_ratio == doctest::Approx(cmp.time_ratio));
    CHECK(row.baseline_iterations == cmp.baseline.iterations);
}

TEST_CASE("sweep results do not depend on the worker count") {
    SimConfig base;
    base.topology = {Family::uniform, 20, 4.0, 5};
    base.scheme = Scheme::local;
    base.alpha = 0.5;
    base.seed = 31;
    base.replicates = 4;
    SimConfig other = base;
    other.scheme = Scheme::global;

    const auto seq = sweep({base, other}, 1);
    const auto par = sweep({base, other}, 4);
    REQUIRE(seq.size() == par.size());
    for (std::size_t p = 0; p < seq.size(); ++p) {
        CHECK(seq[p].rows == par[p].rows);
        CHECK(seq[p].aggregate == par[p].aggregate);
    }
}

TEST_CASE("replicates differ but are reproducible") {
    SimConfig cfg;
    cfg.topology = {Family::uniform, 20, 4.0, 5};
    cfg.scheme = Scheme::baseline;
    cfg.seed = 31;
    cfg.replicates = 3;
    const auto a = sweep({cfg}, 1);
    const auto b = sweep({cfg}, 1);
    CHECK(a[0].rows == b[0].rows);
    CHECK_FALSE(a[0].rows[0].iterations == 0);
    // different replicate seeds draw different topologies/states
    CHECK_FALSE(a[0].rows[0] == a[0].rows[1]);
}

TEST_CASE("aggregate means and deviations") {
    std::vector<ReplicateRow> rows(2);
    rows[0].iterations = 10;
    rows[0].total_cost_attempted = 100;
    rows[0].converged = true;
    rows[0].cost_ratio = 0.5;
    rows[0].time_ratio = 2.0;
    rows[0].ratios_valid = true;
    rows[1].iterations = 14;
    rows[1].total_cost_attempted = 120;
    rows[1].converged = true;
    rows[1].cost_ratio = 0.7;
    rows[1].time_ratio = 1.0;
    rows[1].ratios_valid = true;

    const Aggregate agg = aggregate_rows(rows);
    CHECK(agg.replicates == 2);
    CHECK(agg.iterations.mean == doctest::Approx(12.0));
    CHECK(agg.iterations.sd == doctest::Approx(std::sqrt(8.0)));
    CHECK(agg.cost_ratio.mean == doctest::Approx(0.6));
    CHECK(agg.converged.mean == doctest::Approx(1.0));
    CHECK(agg.ratio_count == 2);

    rows[1].ratios_valid = false;
    const Aggregate partial = aggregate_rows(rows);
    CHECK(partial.cost_ratio.mean == doctest::Approx(0.5));
    CHECK(partial.ratio_count == 1);
}
