#include "ac/select_global.hpp"

#include <stdexcept>

namespace ac {
namespace {

std::vector<double> edge_differences(const Graph& g, const StateVector& x) {
    std::vector<double> diff(g.edge_count());
    for (int e = 0; e < g.edge_count(); ++e)
        diff[e] = x.values[g.edges()[e].u] - x.values[g.edges()[e].v];
    return diff;
}

// (L w)_v accumulated over edges
std::vector<double> laplacian_apply(const Graph& g, std::span<const double> w) {
    std::vector<double> out(g.node_count(), 0.0);
    for (const Edge& e : g.edges()) {
        const double d = w[e.u] - w[e.v];
        out[e.u] += d;
        out[e.v] -= d;
    }
    return out;
}

void check_dims(const Graph& g, const StateVector& x) {
    if (static_cast<int>(x.values.size()) != g.node_count())
        throw std::invalid_argument("link selection: state/graph dimension mismatch");
}

}  // namespace

Matrix build_difference_matrix(const Graph& g, const StateVector& x) {
    check_dims(g, x);
    Matrix u(g.node_count(), g.edge_count());
    for (int e = 0; e < g.edge_count(); ++e) {
        const Edge& edge = g.edges()[e];
        const double d = x.values[edge.u] - x.values[edge.v];
        u(edge.u, e) = d;
        u(edge.v, e) = -d;
    }
    return u;
}

BudgetedQp build_global_qp(const Graph& g, const StateVector& x, double step, double alpha) {
    check_dims(g, x);
    if (alpha < 0.0 || alpha > 1.0) throw std::invalid_argument("build_global_qp: alpha in [0,1]");
    const Matrix u = build_difference_matrix(g, x);
    const Matrix l = build_laplacian(g);
    const Matrix ut = transpose(u);

    BudgetedQp qp;
    qp.a = matmul(ut, matmul(l, u));
    for (double& v : qp.a.data()) v *= step * step;
    qp.a = symmetrize(qp.a);

    const std::vector<double> lx = matvec(l, x.values);
    qp.linear = matvec(ut, lx);
    for (double& v : qp.linear) v *= -step;

    qp.costs = g.edge_costs();
    qp.budget = alpha * g.total_cost();
    return qp;
}

LinkSelection select_links_global(const Graph& g, const StateVector& x, double step, double alpha,
                                  Rng& rng, const QpOptions& opt) {
    check_dims(g, x);
    if (alpha < 0.0 || alpha > 1.0)
        throw std::invalid_argument("select_links_global: alpha in [0,1]");
    const int m = g.edge_count();
    const std::vector<double> diff = edge_differences(g, x);
    const std::vector<double> lx = laplacian_apply(g, x.values);

    // g_e = -step * (U^T L x)_e
    std::vector<double> linear(m);
    for (int e = 0; e < m; ++e) {
        const Edge& edge = g.edges()[e];
        linear[e] = -step * diff[e] * (lx[edge.u] - lx[edge.v]);
    }

    // A b = step^2 * U^T (L (U b)), all applied through the edge list
    std::vector<double> ub(g.node_count());
    LinearOperator apply = [&](std::span<const double> b, std::span<double> out) {
        std::fill(ub.begin(), ub.end(), 0.0);
        for (int e = 0; e < m; ++e) {
            const Edge& edge = g.edges()[e];
            const double w = diff[e] * b[e];
            ub[edge.u] += w;
            ub[edge.v] -= w;
        }
        const std::vector<double> lub = laplacian_apply(g, ub);
        for (int e = 0; e < m; ++e) {
            const Edge& edge = g.edges()[e];
            out[e] = step * step * diff[e] * (lub[edge.u] - lub[edge.v]);
        }
    };

    const QpResult res =
        solve_box_budget_qp(m, apply, linear, g.edge_costs(), alpha * g.total_cost(), opt);

    LinkSelection sel;
    sel.probs = res.solution;
    sel.mask = sample_mask(sel.probs, rng);
    sel.solver_converged = res.converged;
    return sel;
}

double objective_value(const Graph& g, const StateVector& x, double step,
                       std::span<const double> b) {
    check_dims(g, x);
    if (static_cast<int>(b.size()) != g.edge_count())
        throw std::invalid_argument("objective_value: mask/graph dimension mismatch");
    std::vector<double> next = x.values;
    for (int e = 0; e < g.edge_count(); ++e) {
        const Edge& edge = g.edges()[e];
        const double w = step * (x.values[edge.u] - x.values[edge.v]) * b[e];
        next[edge.u] -= w;
        next[edge.v] += w;
    }
    double q = 0.0;
    for (const Edge& e : g.edges()) {
        const double d = next[e.u] - next[e.v];
        q += d * d;
    }
    return q;
}

double objective_value(const Graph& g, const StateVector& x, double step, const LinkMask& mask) {
    std::vector<double> b(mask.begin(), mask.end());
    return objective_value(g, x, step, b);
}

}  // namespace ac
