#ifndef TRINUM_MATRIX_HPP
#define TRINUM_MATRIX_HPP

#include <complex>
#include <cstddef>
#include <span>
#include <vector>

namespace trinum {

using Complex = std::complex<double>;

/// Dense complex square matrix, row-major.
class ComplexMatrix {
public:
    ComplexMatrix() = default;
    explicit ComplexMatrix(std::size_t dim)
        : dim_(dim), entries_(dim * dim, Complex{0.0, 0.0}) {}

    static ComplexMatrix identity(std::size_t dim);

    std::size_t dim() const { return dim_; }

    Complex& operator()(std::size_t i, std::size_t j) { return entries_[i * dim_ + j]; }
    const Complex& operator()(std::size_t i, std::size_t j) const { return entries_[i * dim_ + j]; }

    std::span<const Complex> entries() const { return entries_; }

    /// Largest |entry|.
    double max_abs() const;

private:
    std::size_t dim_ = 0;
    std::vector<Complex> entries_;
};

/// (M + M*) / 2
ComplexMatrix hermitian_part(const ComplexMatrix& m);

/// e^{-i.theta} M
ComplexMatrix rotated(const ComplexMatrix& m, double theta);

/// Leading k x k principal submatrix.
ComplexMatrix leading_principal_submatrix(const ComplexMatrix& m, std::size_t k);

bool is_hermitian(const ComplexMatrix& m, double tol);

/// True when every entry outside the tridiagonal band and the (0,m-1)/(m-1,0)
/// corner pair is exactly zero.
bool is_tridiagonal_with_corner(const ComplexMatrix& m);

/// Determinant by LU with partial pivoting. This is the single dense oracle
/// every recurrence-based determinant in the library is checked against.
Complex lu_determinant(ComplexMatrix m);

/// Solve m x = rhs by LU with partial pivoting. Near-singular systems are
/// solved as far as roundoff allows (used by inverse iteration).
std::vector<Complex> lu_solve(ComplexMatrix m, std::vector<Complex> rhs);

} // namespace trinum

#endif
