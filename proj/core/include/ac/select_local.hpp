#pragma once

#include <vector>

#include "ac/consensus.hpp"
#include "ac/graph.hpp"
#include "ac/qp.hpp"
#include "ac/rng.hpp"
#include "ac/select_global.hpp"

namespace ac {

// The printed prediction formula and the masked update disagree on the
// direction of the correction term. `consistent` follows the update rule
// (the prediction then tracks the neighbor's actual next value);
// `paper` keeps the literal formula for comparison.
enum class PredictionSign {
    consistent,
    paper,
};

// Node v's estimate of neighbor u's next value, computed only from x_v,
// x_u and the neighbors shared by u and v.
double shared_neighbor_prediction(const Graph& g, const StateVector& x, int v, int u, double step,
                                  PredictionSign sign = PredictionSign::consistent);

// Per-node selection problem over the node's incident edges: quadratic in
// the d_v local link indicators, budget alpha * (incident cost). The
// objective is rank-one: it depends on the indicators only through the
// inner product gaps^T b.
struct LocalProblem {
    int node = 0;
    std::vector<int> incident;  // edge indices, canonical order
    std::vector<double> gaps;   // x_v - x_u per incident edge
    BudgetedQp qp;
};

LocalProblem build_local_qp(const Graph& g, const StateVector& x, int v, double step, double alpha,
                            PredictionSign sign = PredictionSign::consistent);

// per_node[v] must hold one probability per incident edge of v, aligned
// with incident_edges(v); every edge then gets the average of its two
// endpoint values.
LinkProbabilities merge_probabilities(const Graph& g,
                                      const std::vector<std::vector<double>>& per_node);

// Distributed selection: every node solves its local QP, then spends its
// budget C_v on incident links in squared-difference-per-cost order (the
// rank-one QP leaves the link split degenerate; see allocate_node_budget in
// the implementation). Endpoint probabilities are averaged per edge and
// sampled once. Nodes are independent; the result does not depend on solve
// order.
LinkSelection select_links_local(const Graph& g, const StateVector& x, double step, double alpha,
                                 Rng& rng, PredictionSign sign = PredictionSign::consistent,
                                 const QpOptions& opt = {});

}  // namespace ac
