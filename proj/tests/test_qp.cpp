#include <doctest.h>

#include <cmath>

#include "ac/qp.hpp"
#include "ac/rng.hpp"
#include "support/test_support.hpp"

using namespace ac;

namespace {

BudgetedQp random_qp(Rng& rng, int m) {
    BudgetedQp qp;
    Matrix root(m, m);
    for (int r = 0; r < m; ++r)
        for (int c = 0; c < m; ++c) root(r, c) = rng.normal();
    qp.a = symmetrize(matmul(transpose(root), root));
    qp.linear.resize(m);
    qp.costs.resize(m);
    double total = 0.0;
    for (int i = 0; i < m; ++i) {
        qp.linear[i] = 2.0 * rng.normal();
        qp.costs[i] = 0.2 + rng.uniform01();
        total += qp.costs[i];
    }
    qp.budget = rng.uniform01() * total;
    return qp;
}

}  // namespace

TEST_CASE("projection: feasible input is only clamped") {
    const std::vector<double> costs{1.0, 1.0};
    const auto inside = project_box_budget({0.25, 0.5}, costs, 2.0);
    CHECK(inside == std::vector<double>{0.25, 0.5});

    const auto clamped = project_box_budget({2.0, -1.0}, costs, 2.0);
    CHECK(clamped == std::vector<double>{1.0, 0.0});
}

TEST_CASE("projection: symmetric budget split") {
    const auto p = project_box_budget({1.0, 1.0}, std::vector<double>{1.0, 1.0}, 1.0);
    CHECK(p[0] == doctest::Approx(0.5).epsilon(1e-8));
    CHECK(p[1] == doctest::Approx(0.5).epsilon(1e-8));
}

TEST_CASE("projection beats a fine grid search") {
    Rng rng(8);
    for (int trial = 0; trial < 10; ++trial) {
        const std::vector<double> y{3.0 * rng.normal(), 3.0 * rng.normal()};
        const std::vector<double> costs{0.2 + rng.uniform01(), 0.2 + rng.uniform01()};
        const double budget = rng.uniform01() * (costs[0] + costs[1]);
        const auto p = project_box_budget(y, costs, budget);

        CHECK(p[0] >= 0.0);
        CHECK(p[0] <= 1.0);
        CHECK(costs[0] * p[0] + costs[1] * p[1] <= budget + 1e-6);

        const double ours = (p[0] - y[0]) * (p[0] - y[0]) + (p[1] - y[1]) * (p[1] - y[1]);
        double grid_best = 1e300;
        for (int i = 0; i <= 1000; ++i) {
            for (int j = 0; j <= 1000; ++j) {
                const double a = i / 1000.0, b = j / 1000.0;
                if (costs[0] * a + costs[1] * b > budget) continue;
                const double dist = (a - y[0]) * (a - y[0]) + (b - y[1]) * (b - y[1]);
                grid_best = std::min(grid_best, dist);
            }
        }
        CHECK(ours <= grid_best + 1e-9);
    }
}

TEST_CASE("projection: no feasible perturbation moves closer") {
    Rng rng(21);
    for (int trial = 0; trial < 1000; ++trial) {
        const int m = 1 + static_cast<int>(rng.below(6));
        std::vector<double> y(m), costs(m);
        double total = 0.0;
        for (int i = 0; i < m; ++i) {
            y[i] = 3.0 * rng.normal();
            costs[i] = rng.uniform01() < 0.1 ? 0.0 : 0.2 + rng.uniform01();
            total += costs[i];
        }
        const double budget = rng.uniform01() * std::max(total, 0.1);
        const auto p = project_box_budget(y, costs, budget);

        double used = 0.0;
        for (int i = 0; i < m; ++i) {
            CHECK(p[i] >= -1e-12);
            CHECK(p[i] <= 1.0 + 1e-12);
            used += costs[i] * p[i];
        }
        CHECK(used <= budget + 1e-6);

        double base = 0.0;
        for (int i = 0; i < m; ++i) base += (p[i] - y[i]) * (p[i] - y[i]);
        for (int dir = 0; dir < 20; ++dir) {
            std::vector<double> z(m);
            bool feasible = true;
            double cost = 0.0;
            for (int i = 0; i < m; ++i) {
                z[i] = p[i] + 1e-4 * rng.normal();
                if (z[i] < 0.0 || z[i] > 1.0) feasible = false;
                cost += costs[i] * z[i];
            }
            if (!feasible || cost > budget) continue;
            double dist = 0.0;
            for (int i = 0; i < m; ++i) dist += (z[i] - y[i]) * (z[i] - y[i]);
            CHECK(dist >= base - 1e-12);
        }
    }
}

TEST_CASE("solver: pure linear objective saturates the box") {
    const int m = 4;
    BudgetedQp qp;
    qp.a = Matrix(m, m);
    qp.linear.assign(m, -1.0);
    qp.costs.assign(m, 1.0);
    qp.budget = m;
    const QpResult res = solve_box_budget_qp(qp);
    CHECK(res.converged);
    for (double v : res.solution) CHECK(v == doctest::Approx(1.0));
}

TEST_CASE("solver: constant objective returns the zero start point") {
    BudgetedQp qp;
    qp.a = Matrix(3, 3);
    qp.linear.assign(3, 0.0);
    qp.costs.assign(3, 1.0);
    qp.budget = 2.0;
    const QpResult res = solve_box_budget_qp(qp);
    CHECK(res.converged);
    CHECK(res.solution == std::vector<double>{0.0, 0.0, 0.0});
}

TEST_CASE("solver: symmetric 2d instance") {
    BudgetedQp qp;
    qp.a = Matrix::identity(2);
    qp.linear = {-1.0, -1.0};
    qp.costs = {1.0, 1.0};
    qp.budget = 1.0;
    const QpResult res = solve_box_budget_qp(qp, {1e-10, 20000});
    CHECK(res.solution[0] == doctest::Approx(0.5).epsilon(1e-6));
    CHECK(res.solution[1] == doctest::Approx(0.5).epsilon(1e-6));
    CHECK(res.objective == doctest::Approx(-0.75).epsilon(1e-6));
}

TEST_CASE("solver: zero budget short-circuits to zero") {
    BudgetedQp qp;
    qp.a = Matrix::identity(2);
    qp.linear = {-1.0, -1.0};
    qp.costs = {1.0, 1.0};
    qp.budget = 0.0;
    const QpResult res = solve_box_budget_qp(qp);
    CHECK(res.converged);
    CHECK(res.iterations == 0);
    CHECK(res.solution == std::vector<double>{0.0, 0.0});
}

TEST_CASE("solver flags max_iter exhaustion") {
    BudgetedQp qp;
    qp.a = Matrix::identity(3);
    qp.linear = {-1.0, -2.0, -3.0};
    qp.costs = {1.0, 1.0, 1.0};
    qp.budget = 1.5;
    const QpResult res = solve_box_budget_qp(qp, {1e-14, 1});
    CHECK_FALSE(res.converged);
    CHECK(res.iterations == 1);
}

TEST_CASE("solver rejects an asymmetric quadratic term") {
    BudgetedQp qp;
    qp.a = Matrix(2, 2);
    qp.a(0, 1) = 1.0;
    qp.linear = {0.0, 0.0};
    qp.costs = {1.0, 1.0};
    qp.budget = 1.0;
    CHECK_THROWS_AS(solve_box_budget_qp(qp), std::invalid_argument);
}

TEST_CASE("solver objective is nonincreasing across steps") {
    Rng rng(3);
    for (int trial = 0; trial < 20; ++trial) {
        const BudgetedQp qp = random_qp(rng, 2 + static_cast<int>(rng.below(5)));
        QpOptions opt;
        opt.record_objectives = true;
        const QpResult res = solve_box_budget_qp(qp, opt);
        REQUIRE(!res.objective_trace.empty());
        for (std::size_t k = 1; k < res.objective_trace.size(); ++k)
            CHECK(res.objective_trace[k] <=
                  res.objective_trace[k - 1] + 1e-10 * (1.0 + std::fabs(res.objective_trace[k - 1])));
    }
}

TEST_CASE("solver matches the active-set enumeration oracle") {
    Rng rng(1234);
    for (int trial = 0; trial < 100; ++trial) {
        const int m = 2 + static_cast<int>(rng.below(5));  // up to 6
        const BudgetedQp qp = random_qp(rng, m);
        const QpResult res = solve_box_budget_qp(qp, {1e-10, 100000});
        const double oracle = test::oracle_box_budget_min(qp);
        CHECK(res.objective <= oracle + 1e-5);
        CHECK(res.objective >= oracle - 1e-5);
    }
}

TEST_CASE("sampling follows the probabilities") {
    Rng rng(6);
    CHECK(sample_mask(std::vector<double>(8, 1.0), rng) == LinkMask(8, 1));
    CHECK(sample_mask(std::vector<double>(8, 0.0), rng) == LinkMask(8, 0));

    const std::vector<double> p(100000, 0.7);
    const LinkMask mask = sample_mask(p, rng);
    const double freq = static_cast<double>(count_set(mask)) / mask.size();
    CHECK(freq >= 0.69);
    CHECK(freq <= 0.71);
}
