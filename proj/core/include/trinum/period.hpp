#ifndef TRINUM_PERIOD_HPP
#define TRINUM_PERIOD_HPP

#include <cstddef>
#include <stdexcept>
#include <string>
#include <vector>

#include "trinum/matrix.hpp"

namespace trinum {

/// Period words (a, b, c) of an (n+1)-periodic tridiagonal operator:
/// a is the subdiagonal word, b the diagonal word, c the superdiagonal word.
/// All three have length n+1 >= 2. a and c are real; b may be complex and
/// defaults to zero.
class PeriodWords {
public:
    PeriodWords(std::vector<double> a, std::vector<Complex> b, std::vector<double> c);

    /// Convenience for the b == 0 case every hull theorem requires.
    static PeriodWords zero_diagonal(std::vector<double> a, std::vector<double> c);

    std::size_t period() const { return a_.size(); } // n+1

    const std::vector<double>& a() const { return a_; }
    const std::vector<Complex>& b() const { return b_; }
    const std::vector<double>& c() const { return c_; }

    bool diagonal_is_zero(double tol = 0.0) const;

private:
    std::vector<double> a_;
    std::vector<Complex> b_;
    std::vector<double> c_;
};

/// Off-diagonal symbol data: alpha[j] real, gamma_j = i * gamma_im[j] purely
/// imaginary (real words). For 0 <= j < n these combine c_j with a_{j+1};
/// the last slot combines a_0 with c_n.
struct SymbolCoefficients {
    std::vector<double> alpha;
    std::vector<double> gamma_im;
};

/// alpha[j] = (c_j + a_{j+1})/2, gamma_im[j] = -(c_j - a_{j+1})/2 for j < n;
/// alpha[n] = (a_0 + c_n)/2,     gamma_im[n] = -(a_0 - c_n)/2.
SymbolCoefficients symbol_coefficients(const PeriodWords& p);

enum class Parity { Odd, Even };

struct ConditionFailure {
    std::string condition; // human-readable, e.g. "c_0 = a_1"
    std::size_t index;     // j for the indexed families, 0 otherwise
    double lhs;
    double rhs;
};

struct ValidationReport {
    bool hypotheses_hold = true;
    std::vector<ConditionFailure> failures;
    Parity parity = Parity::Even; // parity of n+1
    std::string summary() const;
};

/// Checks the hull-theorem hypotheses up to absolute tolerance tol:
///   b == 0,
///   c_0 = a_1,
///   |c_1 + a_2| = |c_n + a_0|,   |c_1 - a_2| = |c_n - a_0|,
///   and for j = 2..floor(n/2):
///   |c_j + a_{j+1}| = |c_{n-j+1} + a_{n-j+2}|  (indices cyclic mod n+1),
///   |c_j - a_{j+1}| = |c_{n-j+1} - a_{n-j+2}|.
ValidationReport validate_period(const PeriodWords& p, double tol = 1e-12);

/// Thrown when a matrix builder or range check is asked to run on words that
/// fail validate_period. Carries the full report.
class HypothesisError : public std::runtime_error {
public:
    explicit HypothesisError(ValidationReport report);
    const ValidationReport& report() const { return report_; }

private:
    ValidationReport report_;
};

/// The (n+1) x (n+1) symbol matrix with corner signs:
/// (0,0) = sign*a_1, (n,n) = sign*c_0, superdiagonal c_1..c_n,
/// subdiagonal a_2..a_n, a_0.  Requires validate_period to pass.
ComplexMatrix symbol_matrix(const PeriodWords& p, int sign, double tol = 1e-12);

/// Odd-period reduction to size n/2+1: (0,0) = sign*a_1, superdiagonal
/// c_1..c_{n/2-1} then sqrt(2)*c_{n/2}, subdiagonal a_2..a_{n/2} then
/// sqrt(2)*a_{n/2+1}, last diagonal entry 0.
ComplexMatrix reduced_symbol_matrix(const PeriodWords& p, int sign, double tol = 1e-12);

/// N x N leading principal submatrix of the periodic operator:
/// row k carries a_{k mod n+1} | b_{k mod n+1} | c_{k mod n+1}.
ComplexMatrix finite_section(const PeriodWords& p, std::size_t size);

} // namespace trinum

#endif
