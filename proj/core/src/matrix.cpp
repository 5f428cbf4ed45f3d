#include "ac/matrix.hpp"

#include <cmath>
#include <stdexcept>

namespace ac {

Matrix Matrix::identity(int n) {
    Matrix m(n, n);
    for (int i = 0; i < n; ++i) m(i, i) = 1.0;
    return m;
}

std::vector<double> matvec(const Matrix& a, std::span<const double> x) {
    if (static_cast<int>(x.size()) != a.cols())
        throw std::invalid_argument("matvec: dimension mismatch");
    std::vector<double> y(a.rows(), 0.0);
    for (int r = 0; r < a.rows(); ++r) {
        double s = 0.0;
        auto row = a.row(r);
        for (int c = 0; c < a.cols(); ++c) s += row[c] * x[c];
        y[r] = s;
    }
    return y;
}

Matrix matmul(const Matrix& a, const Matrix& b) {
    if (a.cols() != b.rows()) throw std::invalid_argument("matmul: dimension mismatch");
    Matrix c(a.rows(), b.cols());
    for (int i = 0; i < a.rows(); ++i) {
        for (int k = 0; k < a.cols(); ++k) {
            const double aik = a(i, k);
            if (aik == 0.0) continue;
            for (int j = 0; j < b.cols(); ++j) c(i, j) += aik * b(k, j);
        }
    }
    return c;
}

Matrix transpose(const Matrix& a) {
    Matrix t(a.cols(), a.rows());
    for (int r = 0; r < a.rows(); ++r)
        for (int c = 0; c < a.cols(); ++c) t(c, r) = a(r, c);
    return t;
}

double quad_form(const Matrix& a, std::span<const double> x) {
    std::vector<double> ax = matvec(a, x);
    double s = 0.0;
    for (std::size_t i = 0; i < x.size(); ++i) s += x[i] * ax[i];
    return s;
}

double max_abs_diff(const Matrix& a, const Matrix& b) {
    if (a.rows() != b.rows() || a.cols() != b.cols())
        throw std::invalid_argument("max_abs_diff: shape mismatch");
    double m = 0.0;
    for (std::size_t i = 0; i < a.data().size(); ++i)
        m = std::max(m, std::fabs(a.data()[i] - b.data()[i]));
    return m;
}

bool is_symmetric(const Matrix& a, double tol) {
    if (a.rows() != a.cols()) return false;
    for (int r = 0; r < a.rows(); ++r)
        for (int c = r + 1; c < a.cols(); ++c)
            if (std::fabs(a(r, c) - a(c, r)) > tol) return false;
    return true;
}

Matrix symmetrize(const Matrix& a) {
    if (a.rows() != a.cols()) throw std::invalid_argument("symmetrize: matrix not square");
    Matrix s(a.rows(), a.cols());
    for (int r = 0; r < a.rows(); ++r)
        for (int c = 0; c < a.cols(); ++c) s(r, c) = 0.5 * (a(r, c) + a(c, r));
    return s;
}

}  // namespace ac
