#include "ac/select_local.hpp"

#include <algorithm>
#include <limits>
#include <numeric>
#include <stdexcept>

namespace ac {
namespace {

// sum over w in N(u) ∩ N(v) of (x_u - x_w); adjacency lists are sorted
double shared_neighbor_gap(const Graph& g, const StateVector& x, int v, int u) {
    auto nu = g.neighbors(u);
    auto nv = g.neighbors(v);
    double sum = 0.0;
    std::size_t i = 0, j = 0;
    while (i < nu.size() && j < nv.size()) {
        if (nu[i] < nv[j]) {
            ++i;
        } else if (nu[i] > nv[j]) {
            ++j;
        } else {
            sum += x.values[u] - x.values[nu[i]];
            ++i;
            ++j;
        }
    }
    return sum;
}

}  // namespace

double shared_neighbor_prediction(const Graph& g, const StateVector& x, int v, int u, double step,
                                  PredictionSign sign) {
    if (static_cast<int>(x.values.size()) != g.node_count())
        throw std::invalid_argument("shared_neighbor_prediction: dimension mismatch");
    auto nv = g.neighbors(v);
    if (!std::binary_search(nv.begin(), nv.end(), u))
        throw std::invalid_argument("shared_neighbor_prediction: nodes are not adjacent");
    const double gap = shared_neighbor_gap(g, x, v, u);
    const double correction = sign == PredictionSign::consistent ? -step * gap : step * gap;
    return x.values[u] + correction;
}

LocalProblem build_local_qp(const Graph& g, const StateVector& x, int v, double step, double alpha,
                            PredictionSign sign) {
    if (static_cast<int>(x.values.size()) != g.node_count())
        throw std::invalid_argument("build_local_qp: dimension mismatch");
    if (alpha < 0.0 || alpha > 1.0) throw std::invalid_argument("build_local_qp: alpha in [0,1]");

    LocalProblem problem;
    problem.node = v;
    auto incident = g.incident_edges(v);
    problem.incident.assign(incident.begin(), incident.end());
    const int d = static_cast<int>(problem.incident.size());

    // Writing the local objective 1/2 Σ_u (x_v(t) - x̃_{v:u}(t))^2 in the d
    // local indicators gives the rank-one quadratic
    //   A = d * step^2 * G G^T,   g = -step * (Σ_u r_u) * G,
    // with G_k = x_v - x_{u_k} and r_u = x_v - x̃_{v:u}.
    std::vector<double>& gaps = problem.gaps;
    gaps.resize(d);
    double r_sum = 0.0;
    for (int k = 0; k < d; ++k) {
        const Edge& e = g.edges()[problem.incident[k]];
        const int u = e.u == v ? e.v : e.u;
        gaps[k] = x.values[v] - x.values[u];
        r_sum += x.values[v] - shared_neighbor_prediction(g, x, v, u, step, sign);
    }

    problem.qp.a = Matrix(d, d);
    for (int i = 0; i < d; ++i)
        for (int j = 0; j < d; ++j) problem.qp.a(i, j) = d * step * step * gaps[i] * gaps[j];
    problem.qp.linear.resize(d);
    for (int k = 0; k < d; ++k) problem.qp.linear[k] = -step * r_sum * gaps[k];
    problem.qp.costs.resize(d);
    for (int k = 0; k < d; ++k) problem.qp.costs[k] = g.edge_costs()[problem.incident[k]];
    problem.qp.budget = alpha * std::accumulate(problem.qp.costs.begin(), problem.qp.costs.end(), 0.0);
    return problem;
}

LinkProbabilities merge_probabilities(const Graph& g,
                                      const std::vector<std::vector<double>>& per_node) {
    if (static_cast<int>(per_node.size()) != g.node_count())
        throw std::invalid_argument("merge_probabilities: one entry per node required");
    LinkProbabilities merged(g.edge_count(), 0.0);
    for (int v = 0; v < g.node_count(); ++v) {
        auto incident = g.incident_edges(v);
        if (per_node[v].size() != incident.size())
            throw std::invalid_argument("merge_probabilities: missing endpoint entry");
        for (std::size_t k = 0; k < incident.size(); ++k) merged[incident[k]] += per_node[v][k];
    }
    for (double& p : merged) p *= 0.5;
    return merged;
}

namespace {

// The rank-one local objective sees the indicators only through gaps^T b,
// so the solver pins the size of the node's stationary correction but not
// which links carry it: every feasible b with the same gaps^T b is equally
// optimal, and the stationary point leaves most of the budget idle. Idle
// energy buys nothing, so the node spends its whole allowance instead,
// ranked by squared-difference-per-cost: |gap_e| is each link's own term in
// the objective, and both endpoints score an edge identically, so the two
// halves of a merged probability tend to agree. A zero correction (node
// already at its neighborhood optimum) keeps the energy-saving all-zeros
// solution.
std::vector<double> allocate_node_budget(const LocalProblem& problem, double y_opt) {
    const std::vector<double>& gaps = problem.gaps;
    const std::vector<double>& costs = problem.qp.costs;
    const int d = static_cast<int>(gaps.size());
    std::vector<double> b(d, 0.0);
    if (y_opt == 0.0) return b;

    std::vector<int> order;
    for (int k = 0; k < d; ++k)
        if (gaps[k] != 0.0) order.push_back(k);
    auto rate = [&](int k) {
        return costs[k] > 0.0 ? std::fabs(gaps[k]) / costs[k]
                              : std::numeric_limits<double>::infinity();
    };
    std::stable_sort(order.begin(), order.end(), [&](int a, int c) { return rate(a) > rate(c); });

    double budget_left = problem.qp.budget;
    for (int k : order) {
        double take = 1.0;
        if (costs[k] > 0.0) {
            if (budget_left <= 0.0) break;
            take = std::min(take, budget_left / costs[k]);
        }
        b[k] = take;
        budget_left -= take * costs[k];
    }
    return b;
}

}  // namespace

LinkSelection select_links_local(const Graph& g, const StateVector& x, double step, double alpha,
                                 Rng& rng, PredictionSign sign, const QpOptions& opt) {
    std::vector<std::vector<double>> per_node(g.node_count());
    bool all_converged = true;
    for (int v = 0; v < g.node_count(); ++v) {
        const LocalProblem problem = build_local_qp(g, x, v, step, alpha, sign);
        QpResult res = solve_box_budget_qp(problem.qp, opt);
        all_converged = all_converged && res.converged;
        double y_opt = 0.0;
        for (std::size_t k = 0; k < problem.gaps.size(); ++k)
            y_opt += problem.gaps[k] * res.solution[k];
        per_node[v] = allocate_node_budget(problem, y_opt);
    }

    LinkSelection sel;
    sel.probs = merge_probabilities(g, per_node);
    sel.mask = sample_mask(sel.probs, rng);
    sel.solver_converged = all_converged;
    return sel;
}

}  // namespace ac
