#pragma once

#include <span>

#include "ac/consensus.hpp"
#include "ac/graph.hpp"
#include "ac/qp.hpp"
#include "ac/rng.hpp"

namespace ac {

// n x m matrix of signed state differences: the column for edge e = {u, v}
// holds x_u - x_v at row u and x_v - x_u at row v. The masked update then
// factors as x - step * U * b.
Matrix build_difference_matrix(const Graph& g, const StateVector& x);

// Quadratic in the link indicators whose value (up to a constant) is the
// post-update disagreement: A = step^2 * U^T L U (symmetrized),
// g = -step * U^T L x, budget = alpha * total edge cost.
BudgetedQp build_global_qp(const Graph& g, const StateVector& x, double step, double alpha);

struct LinkSelection {
    LinkMask mask;
    LinkProbabilities probs;
    bool solver_converged = true;
};

// Solve the relaxed selection QP and round by independent sampling. The
// gradient is evaluated through the edge structure of U and L, so cost per
// solver iteration is linear in the number of edges.
LinkSelection select_links_global(const Graph& g, const StateVector& x, double step, double alpha,
                                  Rng& rng, const QpOptions& opt = {});

// Post-update disagreement x(t)^T L x(t) with x(t) = x - step * U * b,
// including the constant the QP drops. Accepts fractional b.
double objective_value(const Graph& g, const StateVector& x, double step,
                       std::span<const double> b);
double objective_value(const Graph& g, const StateVector& x, double step, const LinkMask& mask);

}  // namespace ac
