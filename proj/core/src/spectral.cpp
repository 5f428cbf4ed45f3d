#include "ac/spectral.hpp"

#include <algorithm>
#include <cmath>
#include <numeric>
#include <stdexcept>

namespace ac {
namespace {

double off_diagonal_norm(const Matrix& a) {
    double s = 0.0;
    for (int r = 0; r < a.rows(); ++r)
        for (int c = 0; c < a.cols(); ++c)
            if (r != c) s += a(r, c) * a(r, c);
    return std::sqrt(s);
}

double frobenius_norm(const Matrix& a) {
    double s = 0.0;
    for (double v : a.data()) s += v * v;
    return std::sqrt(s);
}

}  // namespace

Spectrum sym_eigen(const Matrix& input) {
    if (input.rows() != input.cols()) throw std::invalid_argument("sym_eigen: matrix not square");
    if (!is_symmetric(input, 1e-9)) throw std::invalid_argument("sym_eigen: matrix not symmetric");

    const int n = input.rows();
    Matrix a = input;
    Matrix v = Matrix::identity(n);

    const double stop = 1e-10 * std::max(1.0, frobenius_norm(input));
    constexpr int kMaxSweeps = 100;

    for (int sweep = 0; sweep < kMaxSweeps && off_diagonal_norm(a) > stop; ++sweep) {
        for (int p = 0; p < n - 1; ++p) {
            for (int q = p + 1; q < n; ++q) {
                const double apq = a(p, q);
                if (std::fabs(apq) < 1e-300) continue;
                const double theta = (a(q, q) - a(p, p)) / (2.0 * apq);
                const double t = (theta >= 0 ? 1.0 : -1.0) /
                                 (std::fabs(theta) + std::sqrt(theta * theta + 1.0));
                const double c = 1.0 / std::sqrt(t * t + 1.0);
                const double s = t * c;
                const double tau = s / (1.0 + c);

                const double app = a(p, p), aqq = a(q, q);
                a(p, p) = app - t * apq;
                a(q, q) = aqq + t * apq;
                a(p, q) = 0.0;
                a(q, p) = 0.0;
                for (int r = 0; r < n; ++r) {
                    if (r != p && r != q) {
                        const double arp = a(r, p), arq = a(r, q);
                        a(r, p) = a(p, r) = arp - s * (arq + tau * arp);
                        a(r, q) = a(q, r) = arq + s * (arp - tau * arq);
                    }
                    const double vrp = v(r, p), vrq = v(r, q);
                    v(r, p) = vrp - s * (vrq + tau * vrp);
                    v(r, q) = vrq + s * (vrp - tau * vrq);
                }
            }
        }
    }

    std::vector<int> order(n);
    std::iota(order.begin(), order.end(), 0);
    std::sort(order.begin(), order.end(), [&](int i, int j) { return a(i, i) < a(j, j); });

    Spectrum spec;
    spec.eigenvalues.resize(n);
    spec.eigenvectors = Matrix(n, n);
    for (int i = 0; i < n; ++i) {
        spec.eigenvalues[i] = a(order[i], order[i]);
        for (int r = 0; r < n; ++r) spec.eigenvectors(r, i) = v(r, order[i]);
    }
    return spec;
}

double optimal_step(double lambda2, double lambda_max) {
    if (lambda2 <= 0.0)
        throw std::domain_error("optimal_step: lambda2 <= 0, consensus unreachable");
    if (lambda_max < lambda2)
        throw std::invalid_argument("optimal_step: lambda_max < lambda2");
    return 2.0 / (lambda2 + lambda_max);
}

double contraction_norm(const Matrix& laplacian, double step) {
    const Spectrum spec = sym_eigen(laplacian);
    const int n = static_cast<int>(spec.eigenvalues.size());
    if (n < 2) return 0.0;
    const double lambda2 = spec.eigenvalues[1];
    const double lambda_n = spec.eigenvalues[n - 1];
    return std::max(std::fabs(1.0 - step * lambda2), std::fabs(1.0 - step * lambda_n));
}

}  // namespace ac
