#include "ac/consensus.hpp"

#include <algorithm>
#include <stdexcept>

#include "ac/rng.hpp"

namespace ac {

int count_set(const LinkMask& mask) {
    int c = 0;
    for (auto b : mask) c += b != 0;
    return c;
}

StateVector init_states(int n, std::uint64_t seed) {
    if (n < 1) throw std::invalid_argument("init_states: n must be positive");
    Rng rng(seed);
    StateVector x;
    x.values.resize(n);
    for (double& v : x.values) v = rng.normal();
    return x;
}

StateVector full_update(const StateVector& x, const Matrix& laplacian, double step) {
    if (laplacian.rows() != static_cast<int>(x.values.size()))
        throw std::invalid_argument("full_update: dimension mismatch");
    std::vector<double> lx = matvec(laplacian, x.values);
    StateVector next;
    next.values.resize(x.values.size());
    for (std::size_t v = 0; v < x.values.size(); ++v)
        next.values[v] = x.values[v] - step * lx[v];
    next.time = x.time + 1;
    return next;
}

StateVector masked_update(const StateVector& x, const Graph& g, const LinkMask& mask, double step) {
    if (static_cast<int>(x.values.size()) != g.node_count() ||
        static_cast<int>(mask.size()) != g.edge_count())
        throw std::invalid_argument("masked_update: dimension mismatch");
    StateVector next;
    next.values = x.values;
    next.time = x.time + 1;
    for (int e = 0; e < g.edge_count(); ++e) {
        if (!mask[e]) continue;
        const Edge& edge = g.edges()[e];
        const double du = x.values[edge.u] - x.values[edge.v];
        next.values[edge.u] -= step * du;
        next.values[edge.v] += step * du;
    }
    return next;
}

double disagreement(const StateVector& x, const Matrix& laplacian) {
    return std::max(0.0, quad_form(laplacian, x.values));
}

double spread(const StateVector& x) {
    if (x.values.empty()) return 0.0;
    auto [lo, hi] = std::minmax_element(x.values.begin(), x.values.end());
    return *hi - *lo;
}

bool has_converged(const StateVector& x, double epsilon) {
    return spread(x) < epsilon;
}

Decomposition decompose(const StateVector& x) {
    Decomposition d;
    if (x.values.empty()) return d;
    double sum = 0.0;
    for (double v : x.values) sum += v;
    d.mean = sum / static_cast<double>(x.values.size());
    d.difference.resize(x.values.size());
    for (std::size_t i = 0; i < x.values.size(); ++i) d.difference[i] = x.values[i] - d.mean;
    return d;
}

}  // namespace ac
