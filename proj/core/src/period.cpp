#include "trinum/period.hpp"

#include <cmath>
#include <sstream>

namespace trinum {

PeriodWords::PeriodWords(std::vector<double> a, std::vector<Complex> b, std::vector<double> c)
    : a_(std::move(a)), b_(std::move(b)), c_(std::move(c)) {
    if (b_.empty()) b_.assign(a_.size(), Complex{0.0, 0.0});
    if (a_.size() < 2) throw std::invalid_argument("period words need length >= 2");
    if (b_.size() != a_.size() || c_.size() != a_.size())
        throw std::invalid_argument("period words a, b, c must have equal length");
}

PeriodWords PeriodWords::zero_diagonal(std::vector<double> a, std::vector<double> c) {
    return PeriodWords(std::move(a), {}, std::move(c));
}

bool PeriodWords::diagonal_is_zero(double tol) const {
    for (const auto& v : b_)
        if (std::abs(v) > tol) return false;
    return true;
}

SymbolCoefficients symbol_coefficients(const PeriodWords& p) {
    const std::size_t n = p.period() - 1;
    const auto& a = p.a();
    const auto& c = p.c();
    SymbolCoefficients sc;
    sc.alpha.resize(n + 1);
    sc.gamma_im.resize(n + 1);
    for (std::size_t j = 0; j < n; ++j) {
        sc.alpha[j] = 0.5 * (c[j] + a[j + 1]);
        sc.gamma_im[j] = -0.5 * (c[j] - a[j + 1]);
    }
    sc.alpha[n] = 0.5 * (a[0] + c[n]);
    sc.gamma_im[n] = -0.5 * (a[0] - c[n]);
    return sc;
}

std::string ValidationReport::summary() const {
    if (hypotheses_hold) return "hypotheses hold";
    std::ostringstream os;
    os << failures.size() << " violated condition(s):";
    for (const auto& f : failures)
        os << "\n  " << f.condition << " fails at j=" << f.index
           << " (lhs=" << f.lhs << ", rhs=" << f.rhs << ")";
    return os.str();
}

ValidationReport validate_period(const PeriodWords& p, double tol) {
    const std::size_t m = p.period(); // n+1
    const std::size_t n = m - 1;
    const auto& a = p.a();
    const auto& c = p.c();

    ValidationReport report;
    report.parity = (m % 2 == 1) ? Parity::Odd : Parity::Even;

    auto fail = [&](std::string cond, std::size_t j, double lhs, double rhs) {
        report.hypotheses_hold = false;
        report.failures.push_back({std::move(cond), j, lhs, rhs});
    };
    auto require_equal = [&](std::string cond, std::size_t j, double lhs, double rhs) {
        if (std::abs(lhs - rhs) > tol) fail(std::move(cond), j, lhs, rhs);
    };

    for (std::size_t j = 0; j < m; ++j) {
        if (std::abs(p.b()[j]) > tol) {
            fail("b = 0", j, std::abs(p.b()[j]), 0.0);
            break;
        }
    }

    require_equal("c_0 = a_1", 0, c[0], a[1]);
    // j = 1 instance of the cyclic family: a_{n+1} wraps to a_0.
    require_equal("|c_j+a_{j+1}| = |c_{n-j+1}+a_{n-j+2}|", 1,
                  std::abs(c[1] + a[2 % m]), std::abs(c[n] + a[0]));
    require_equal("|c_j-a_{j+1}| = |c_{n-j+1}-a_{n-j+2}|", 1,
                  std::abs(c[1] - a[2 % m]), std::abs(c[n] - a[0]));
    for (std::size_t j = 2; j <= n / 2; ++j) {
        require_equal("|c_j+a_{j+1}| = |c_{n-j+1}+a_{n-j+2}|", j,
                      std::abs(c[j] + a[j + 1]), std::abs(c[n - j + 1] + a[(n - j + 2) % m]));
        require_equal("|c_j-a_{j+1}| = |c_{n-j+1}-a_{n-j+2}|", j,
                      std::abs(c[j] - a[j + 1]), std::abs(c[n - j + 1] - a[(n - j + 2) % m]));
    }
    return report;
}

HypothesisError::HypothesisError(ValidationReport report)
    : std::runtime_error("period words fail the hull-theorem hypotheses: " + report.summary()),
      report_(std::move(report)) {}

namespace {

void require_sign(int sign) {
    if (sign != 1 && sign != -1) throw std::invalid_argument("sign must be +1 or -1");
}

void require_hypotheses(const PeriodWords& p, double tol) {
    ValidationReport report = validate_period(p, tol);
    if (!report.hypotheses_hold) throw HypothesisError(std::move(report));
}

} // namespace

ComplexMatrix symbol_matrix(const PeriodWords& p, int sign, double tol) {
    require_sign(sign);
    require_hypotheses(p, tol);
    const std::size_t m = p.period();
    const std::size_t n = m - 1;
    const auto& a = p.a();
    const auto& c = p.c();
    ComplexMatrix mat(m);
    mat(0, 0) = sign * a[1];
    mat(n, n) = sign * c[0];
    for (std::size_t j = 1; j <= n; ++j) mat(j - 1, j) = c[j];
    for (std::size_t j = 1; j < n; ++j) mat(j, j - 1) = a[j + 1];
    mat(n, n - 1) = a[0];
    return mat;
}

ComplexMatrix reduced_symbol_matrix(const PeriodWords& p, int sign, double tol) {
    require_sign(sign);
    if (p.period() % 2 == 0)
        throw std::domain_error("reduced symbol matrix requires odd period length");
    require_hypotheses(p, tol);
    const std::size_t n = p.period() - 1; // even
    const std::size_t h = n / 2;
    const auto& a = p.a();
    const auto& c = p.c();
    const double root2 = std::sqrt(2.0);
    ComplexMatrix mat(h + 1);
    mat(0, 0) = sign * a[1];
    for (std::size_t j = 1; j < h; ++j) mat(j - 1, j) = c[j];
    mat(h - 1, h) = root2 * c[h];
    for (std::size_t j = 1; j < h; ++j) mat(j, j - 1) = a[j + 1];
    mat(h, h - 1) = root2 * a[h + 1];
    return mat;
}

ComplexMatrix finite_section(const PeriodWords& p, std::size_t size) {
    if (size == 0) throw std::invalid_argument("finite section size must be positive");
    const std::size_t m = p.period();
    ComplexMatrix mat(size);
    for (std::size_t k = 0; k < size; ++k) {
        mat(k, k) = p.b()[k % m];
        if (k + 1 < size) mat(k, k + 1) = p.c()[k % m];
        if (k > 0) mat(k, k - 1) = p.a()[k % m];
    }
    return mat;
}

} // namespace trinum
