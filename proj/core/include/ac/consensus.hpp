#pragma once

#include <cstdint>
#include <vector>

#include "ac/graph.hpp"
#include "ac/matrix.hpp"

namespace ac {

struct StateVector {
    std::vector<double> values;
    std::int64_t time = 0;
    bool operator==(const StateVector&) const = default;
};

// One byte per edge, indexed by canonical edge order; 1 = link used.
using LinkMask = std::vector<std::uint8_t>;

int count_set(const LinkMask& mask);

// i.i.d. standard normal initial states, deterministic for a given seed.
StateVector init_states(int n, std::uint64_t seed);

// x <- (I - step * L) x
StateVector full_update(const StateVector& x, const Matrix& laplacian, double step);

// Per-node update over the masked link set; with an all-ones mask this
// equals full_update. Reads x(t-1) for every node (double buffered).
StateVector masked_update(const StateVector& x, const Graph& g, const LinkMask& mask, double step);

// x^T L x, the sum of squared differences across edges.
double disagreement(const StateVector& x, const Matrix& laplacian);

double spread(const StateVector& x);
bool has_converged(const StateVector& x, double epsilon);

struct Decomposition {
    double mean = 0.0;
    std::vector<double> difference;  // x - mean * 1; sums to zero
};
Decomposition decompose(const StateVector& x);

}  // namespace ac
