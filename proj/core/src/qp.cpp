#include "ac/qp.hpp"

#include <algorithm>
#include <cmath>
#include <stdexcept>

namespace ac {
namespace {

double clamp01(double v) { return std::min(1.0, std::max(0.0, v)); }

double budget_at(std::span<const double> y, std::span<const double> costs, double theta) {
    double s = 0.0;
    for (std::size_t i = 0; i < y.size(); ++i)
        if (costs[i] > 0.0) s += costs[i] * clamp01(y[i] - theta * costs[i]);
    return s;
}

// power-iteration estimate of the largest eigenvalue of a PSD operator
double estimate_lambda_max(int dim, const LinearOperator& apply_a) {
    Rng rng(0x706f776572ULL);
    std::vector<double> v(dim), av(dim);
    double norm = 0.0;
    for (double& x : v) {
        x = rng.uniform01() - 0.5;
        norm += x * x;
    }
    norm = std::sqrt(norm);
    if (norm == 0.0) return 0.0;
    for (double& x : v) x /= norm;

    double lambda = 0.0;
    for (int it = 0; it < 50; ++it) {
        apply_a(v, av);
        double n2 = 0.0;
        for (double x : av) n2 += x * x;
        n2 = std::sqrt(n2);
        if (n2 < 1e-300) return 0.0;
        lambda = n2;
        for (int i = 0; i < dim; ++i) v[i] = av[i] / n2;
    }
    // power iteration converges from below; bias up so 1/lambda stays a
    // descent step
    return lambda * 1.01;
}

}  // namespace

std::vector<double> project_box_budget(std::vector<double> y, std::span<const double> costs,
                                       double budget) {
    if (y.size() != costs.size())
        throw std::invalid_argument("project_box_budget: dimension mismatch");
    if (budget < 0.0) throw std::invalid_argument("project_box_budget: negative budget");

    std::vector<double> b(y.size());
    for (std::size_t i = 0; i < y.size(); ++i) b[i] = clamp01(y[i]);
    double used = 0.0;
    for (std::size_t i = 0; i < y.size(); ++i) used += costs[i] * b[i];
    if (used <= budget + 1e-12) return b;

    // zero-cost coordinates stay at their clamped value; bisect theta for the rest
    double lo = 0.0, hi = 0.0;
    for (std::size_t i = 0; i < y.size(); ++i)
        if (costs[i] > 0.0 && y[i] > 0.0) hi = std::max(hi, y[i] / costs[i]);
    for (int it = 0; it < 200; ++it) {
        const double mid = 0.5 * (lo + hi);
        const double s = budget_at(y, costs, mid);
        if (std::fabs(s - budget) <= 1e-9) {
            lo = hi = mid;
            break;
        }
        if (s > budget)
            lo = mid;
        else
            hi = mid;
        if (hi - lo <= 1e-15 * std::max(1.0, hi)) break;
    }
    const double theta = 0.5 * (lo + hi);
    for (std::size_t i = 0; i < y.size(); ++i)
        if (costs[i] > 0.0) b[i] = clamp01(y[i] - theta * costs[i]);
    return b;
}

QpResult solve_box_budget_qp(int dim, const LinearOperator& apply_a,
                             std::span<const double> linear, std::span<const double> costs,
                             double budget, const QpOptions& opt) {
    if (static_cast<int>(linear.size()) != dim || static_cast<int>(costs.size()) != dim)
        throw std::invalid_argument("solve_box_budget_qp: dimension mismatch");
    if (budget < 0.0) throw std::invalid_argument("solve_box_budget_qp: negative budget");

    QpResult res;
    res.solution.assign(dim, 0.0);
    if (dim == 0 || budget == 0.0) return res;

    const double lambda_max = estimate_lambda_max(dim, apply_a);
    const double step = lambda_max > 1e-12 ? 1.0 / lambda_max : 1.0;

    std::vector<double> b(dim, 0.0), ab(dim), y(dim);
    auto objective = [&](std::span<const double> point) {
        apply_a(point, ab);
        double s = 0.0;
        for (int i = 0; i < dim; ++i) s += (0.5 * ab[i] + linear[i]) * point[i];
        return s;
    };

    res.converged = false;
    if (opt.record_objectives) res.objective_trace.push_back(objective(b));
    for (int it = 0; it < opt.max_iter; ++it) {
        apply_a(b, ab);
        for (int i = 0; i < dim; ++i) y[i] = b[i] - step * (ab[i] + linear[i]);
        std::vector<double> next = project_box_budget(y, costs, budget);
        double move = 0.0;
        for (int i = 0; i < dim; ++i) move = std::max(move, std::fabs(next[i] - b[i]));
        b = std::move(next);
        res.iterations = it + 1;
        if (opt.record_objectives) res.objective_trace.push_back(objective(b));
        if (move <= opt.tol) {
            res.converged = true;
            break;
        }
    }
    res.objective = objective(b);
    res.solution = std::move(b);
    return res;
}

QpResult solve_box_budget_qp(const BudgetedQp& qp, const QpOptions& opt) {
    const int dim = static_cast<int>(qp.linear.size());
    if (qp.a.rows() != dim || qp.a.cols() != dim)
        throw std::invalid_argument("solve_box_budget_qp: quadratic term shape mismatch");
    if (!is_symmetric(qp.a, 1e-9))
        throw std::invalid_argument("solve_box_budget_qp: quadratic term not symmetric");
    LinearOperator apply = [&qp](std::span<const double> in, std::span<double> out) {
        for (int r = 0; r < qp.a.rows(); ++r) {
            double s = 0.0;
            auto row = qp.a.row(r);
            for (std::size_t c = 0; c < in.size(); ++c) s += row[c] * in[c];
            out[r] = s;
        }
    };
    return solve_box_budget_qp(dim, apply, qp.linear, qp.costs, qp.budget, opt);
}

LinkMask sample_mask(std::span<const double> probabilities, Rng& rng) {
    LinkMask mask(probabilities.size(), 0);
    for (std::size_t e = 0; e < probabilities.size(); ++e)
        mask[e] = rng.bernoulli(probabilities[e]) ? 1 : 0;
    return mask;
}

}  // namespace ac
