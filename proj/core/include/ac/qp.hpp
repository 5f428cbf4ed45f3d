#pragma once

#include <functional>
#include <span>
#include <vector>

#include "ac/consensus.hpp"
#include "ac/matrix.hpp"
#include "ac/rng.hpp"

namespace ac {

// Entry e is the probability of using link e this iteration.
using LinkProbabilities = std::vector<double>;

// minimize 1/2 b^T A b + g^T b  over  [0,1]^m intersected with c^T b <= C.
// A must be symmetric PSD, costs nonnegative, budget nonnegative.
struct BudgetedQp {
    Matrix a;
    std::vector<double> linear;
    std::vector<double> costs;
    double budget = 0.0;
};

struct QpOptions {
    double tol = 1e-7;  // stop when the iterate moves less than this (inf norm)
    int max_iter = 5000;
    bool record_objectives = false;
};

struct QpResult {
    std::vector<double> solution;
    double objective = 0.0;
    int iterations = 0;
    bool converged = true;  // false when max_iter ran out first
    std::vector<double> objective_trace;  // filled when record_objectives is set
};

// Euclidean projection onto {0 <= b <= 1, c^T b <= C}: entrywise clamp if
// the budget already holds, otherwise clamp(y - theta*c) with theta found
// by bisection so the budget is met within 1e-9.
std::vector<double> project_box_budget(std::vector<double> y, std::span<const double> costs,
                                       double budget);

using LinearOperator = std::function<void(std::span<const double>, std::span<double>)>;

// Projected gradient with fixed step 1/lambda_max(A) (power-iteration
// estimate). Starts from 0; a zero budget short-circuits to 0.
QpResult solve_box_budget_qp(int dim, const LinearOperator& apply_a,
                             std::span<const double> linear, std::span<const double> costs,
                             double budget, const QpOptions& opt = {});
QpResult solve_box_budget_qp(const BudgetedQp& qp, const QpOptions& opt = {});

// Independent Bernoulli draw per link, P(mask[e] = 1) = p[e].
LinkMask sample_mask(std::span<const double> probabilities, Rng& rng);

}  // namespace ac
