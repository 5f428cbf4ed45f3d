#pragma once

#include <vector>

#include "ac/matrix.hpp"

namespace ac {

// Eigen-decomposition of a symmetric matrix, eigenvalues ascending.
// eigenvectors(r, i) holds component r of the i-th (orthonormal) eigenvector.
struct Spectrum {
    std::vector<double> eigenvalues;
    Matrix eigenvectors;
};

// Cyclic Jacobi rotations on a dense symmetric matrix. Throws
// std::invalid_argument if the input is asymmetric beyond 1e-9.
Spectrum sym_eigen(const Matrix& a);

// 2 / (lambda2 + lambda_max). Throws std::domain_error when lambda2 <= 0
// (disconnected graph: consensus is unreachable).
double optimal_step(double lambda2, double lambda_max);

// max{|1 - step*lambda2|, |1 - step*lambda_n|}: per-iteration attenuation
// of the disagreement component orthogonal to consensus.
double contraction_norm(const Matrix& laplacian, double step);

}  // namespace ac
