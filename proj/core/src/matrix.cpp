#include "trinum/matrix.hpp"

#include <algorithm>
#include <cmath>
#include <stdexcept>

namespace trinum {

ComplexMatrix ComplexMatrix::identity(std::size_t dim) {
    ComplexMatrix m(dim);
    for (std::size_t i = 0; i < dim; ++i) m(i, i) = 1.0;
    return m;
}

double ComplexMatrix::max_abs() const {
    double best = 0.0;
    for (const auto& e : entries_) best = std::max(best, std::abs(e));
    return best;
}

ComplexMatrix hermitian_part(const ComplexMatrix& m) {
    const std::size_t n = m.dim();
    ComplexMatrix h(n);
    for (std::size_t i = 0; i < n; ++i)
        for (std::size_t j = 0; j < n; ++j)
            h(i, j) = 0.5 * (m(i, j) + std::conj(m(j, i)));
    return h;
}

ComplexMatrix rotated(const ComplexMatrix& m, double theta) {
    const Complex phase = std::polar(1.0, -theta);
    const std::size_t n = m.dim();
    ComplexMatrix r(n);
    for (std::size_t i = 0; i < n; ++i)
        for (std::size_t j = 0; j < n; ++j)
            r(i, j) = phase * m(i, j);
    return r;
}

ComplexMatrix leading_principal_submatrix(const ComplexMatrix& m, std::size_t k) {
    if (k > m.dim()) throw std::invalid_argument("submatrix size exceeds matrix dimension");
    ComplexMatrix s(k);
    for (std::size_t i = 0; i < k; ++i)
        for (std::size_t j = 0; j < k; ++j)
            s(i, j) = m(i, j);
    return s;
}

bool is_hermitian(const ComplexMatrix& m, double tol) {
    const std::size_t n = m.dim();
    for (std::size_t i = 0; i < n; ++i)
        for (std::size_t j = i; j < n; ++j)
            if (std::abs(m(i, j) - std::conj(m(j, i))) > tol) return false;
    return true;
}

bool is_tridiagonal_with_corner(const ComplexMatrix& m) {
    const std::size_t n = m.dim();
    for (std::size_t i = 0; i < n; ++i) {
        for (std::size_t j = 0; j < n; ++j) {
            const std::size_t gap = i > j ? i - j : j - i;
            if (gap <= 1) continue;
            const bool corner = (i == 0 && j == n - 1) || (i == n - 1 && j == 0);
            if (corner) continue;
            if (m(i, j) != Complex{0.0, 0.0}) return false;
        }
    }
    return true;
}

Complex lu_determinant(ComplexMatrix m) {
    const std::size_t n = m.dim();
    if (n == 0) return 1.0;
    Complex det = 1.0;
    for (std::size_t k = 0; k < n; ++k) {
        std::size_t pivot = k;
        double best = std::abs(m(k, k));
        for (std::size_t i = k + 1; i < n; ++i) {
            const double v = std::abs(m(i, k));
            if (v > best) { best = v; pivot = i; }
        }
        if (best == 0.0) return 0.0;
        if (pivot != k) {
            for (std::size_t j = 0; j < n; ++j) std::swap(m(k, j), m(pivot, j));
            det = -det;
        }
        det *= m(k, k);
        for (std::size_t i = k + 1; i < n; ++i) {
            const Complex f = m(i, k) / m(k, k);
            m(i, k) = f;
            for (std::size_t j = k + 1; j < n; ++j) m(i, j) -= f * m(k, j);
        }
    }
    return det;
}

std::vector<Complex> lu_solve(ComplexMatrix m, std::vector<Complex> rhs) {
    const std::size_t n = m.dim();
    if (rhs.size() != n) throw std::invalid_argument("lu_solve: rhs length mismatch");
    // Tiny-pivot floor keeps inverse iteration at an exact eigenvalue alive.
    const double floor = 1e-300;
    for (std::size_t k = 0; k < n; ++k) {
        std::size_t pivot = k;
        double best = std::abs(m(k, k));
        for (std::size_t i = k + 1; i < n; ++i) {
            const double v = std::abs(m(i, k));
            if (v > best) { best = v; pivot = i; }
        }
        if (pivot != k) {
            for (std::size_t j = 0; j < n; ++j) std::swap(m(k, j), m(pivot, j));
            std::swap(rhs[k], rhs[pivot]);
        }
        if (std::abs(m(k, k)) < floor) m(k, k) = floor;
        for (std::size_t i = k + 1; i < n; ++i) {
            const Complex f = m(i, k) / m(k, k);
            for (std::size_t j = k + 1; j < n; ++j) m(i, j) -= f * m(k, j);
            rhs[i] -= f * rhs[k];
        }
    }
    for (std::size_t i = n; i-- > 0;) {
        Complex s = rhs[i];
        for (std::size_t j = i + 1; j < n; ++j) s -= m(i, j) * rhs[j];
        rhs[i] = s / m(i, i);
    }
    return rhs;
}

} // namespace trinum
