#ifndef TRINUM_DETERMINANTS_HPP
#define TRINUM_DETERMINANTS_HPP

#include <cstdint>
#include <span>

#include "trinum/matrix.hpp"
#include "trinum/period.hpp"

namespace trinum {

struct TridiagSpec {
    std::vector<Complex> diag;  // length m
    std::vector<Complex> upper; // length m-1
    std::vector<Complex> lower; // length m-1
};

/// Three-term recurrence D_k = diag_k D_{k-1} - upper_{k-1} lower_{k-1} D_{k-2}.
Complex tridiag_det(const TridiagSpec& s);

/// Tridiagonal matrix plus the (0,m-1) and (m-1,0) corner entries.
struct AlmostTridiagSpec {
    TridiagSpec band;
    Complex corner_top = 0.0;    // entry (0, m-1)
    Complex corner_bottom = 0.0; // entry (m-1, 0)
};

/// Laplace-expansion identity for the corner entries, m >= 3:
///   det = det(band) - top*bottom*det(inner band)
///         + (-1)^(m-1) * bottom * prod(upper) + (-1)^(m-1) * top * prod(lower).
Complex almost_tridiag_det(const AlmostTridiagSpec& s);

ComplexMatrix to_dense(const TridiagSpec& s);
ComplexMatrix to_dense(const AlmostTridiagSpec& s);

/// Determinant of the full (n+1)-pencil at (t,x,y): diagonal entries
/// t + Re(b_j) x + Im(b_j) y, off pair alpha_j x + i gamma_im_j y and its
/// conjugate. Exactly real by conjugate symmetry.
double pencil_det(const PeriodWords& p, double t, double x, double y);

/// Determinant of the inner block (rows/cols 1..n-1 of the same pencil);
/// identically 1 for period 2.
double pencil_minor_det(const PeriodWords& p, double t, double x, double y);

/// The degree-2(n+1) homogeneous polynomial whose largest t-root along
/// (x,y) = (-cos theta, -sin theta) is the support value of the operator:
///   (pencil_det - rho_n^2 * pencil_minor_det)^2 - 4 prod_j rho_j^2,
/// rho_j = |alpha_j x + i gamma_im_j y|.
double range_polynomial(const PeriodWords& p, double t, double x, double y);

struct FactorCheck {
    double lhs; // dense determinant of the full matrix
    double rhs; // product of the two smaller determinants
};

/// Corner-coupled symmetric matrix: diagonal t, band ell_0..ell_{n-1},
/// antidiagonal corners sign*ell_n. Requires ell_j = ell_{n-j+1} on the range
/// the parity of n+1 dictates. lhs is computed densely, rhs as the
/// centrosymmetric two-factor product.
FactorCheck factor_check_corner(std::span<const double> ell, double t, int sign);

/// Variant with the sign folded into the diagonal: (0,0) and (m-1,m-1) are
/// t + sign*ell_0, band ell_1..ell_n. Same palindromic requirement.
FactorCheck factor_check_folded(std::span<const double> ell, double t, int sign);

struct LemmaFuzzReport {
    std::size_t trials = 0;
    double max_rel_corner_expansion = 0.0; // almost_tridiag_det vs dense LU
    double max_rel_corner_factor = 0.0;    // factor_check_corner lhs vs rhs
    double max_rel_folded_factor = 0.0;    // factor_check_folded lhs vs rhs
    double worst() const;
};

/// Seeded fuzz pass over the three determinant identities, sizes 3..12,
/// entries in [-2,2] with occasional zeros.
LemmaFuzzReport fuzz_determinant_identities(std::size_t trials, std::uint64_t seed);

/// Mirror the tail of ell so the palindromic precondition of the factor
/// checks holds for the given length.
void make_palindromic(std::span<double> ell);

} // namespace trinum

#endif
