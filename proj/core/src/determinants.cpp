#include "trinum/determinants.hpp"

#include <algorithm>
#include <cmath>
#include <stdexcept>

#include "trinum/rng.hpp"

namespace trinum {

Complex tridiag_det(const TridiagSpec& s) {
    const std::size_t m = s.diag.size();
    if (m == 0) throw std::invalid_argument("tridiag_det: empty diagonal");
    if (s.upper.size() != m - 1 || s.lower.size() != m - 1)
        throw std::invalid_argument("tridiag_det: off-diagonal length mismatch");
    Complex prev{1.0, 0.0};      // D_0
    Complex cur = s.diag[0];     // D_1
    for (std::size_t k = 1; k < m; ++k) {
        const Complex next = s.diag[k] * cur - s.upper[k - 1] * s.lower[k - 1] * prev;
        prev = cur;
        cur = next;
    }
    return cur;
}

Complex almost_tridiag_det(const AlmostTridiagSpec& s) {
    const std::size_t m = s.band.diag.size();
    if (m < 3)
        throw std::invalid_argument("almost_tridiag_det needs size >= 3; use a dense determinant below that");
    if (s.band.upper.size() != m - 1 || s.band.lower.size() != m - 1)
        throw std::invalid_argument("almost_tridiag_det: off-diagonal length mismatch");

    TridiagSpec inner;
    inner.diag.assign(s.band.diag.begin() + 1, s.band.diag.end() - 1);
    inner.upper.assign(s.band.upper.begin() + 1, s.band.upper.end() - 1);
    inner.lower.assign(s.band.lower.begin() + 1, s.band.lower.end() - 1);

    Complex super_prod{1.0, 0.0};
    Complex sub_prod{1.0, 0.0};
    for (std::size_t k = 0; k < m - 1; ++k) {
        super_prod *= s.band.upper[k];
        sub_prod *= s.band.lower[k];
    }
    const double parity_sign = (m % 2 == 0) ? -1.0 : 1.0; // (-1)^(m-1)

    return tridiag_det(s.band) - s.corner_top * s.corner_bottom * tridiag_det(inner)
         + parity_sign * s.corner_bottom * super_prod
         + parity_sign * s.corner_top * sub_prod;
}

ComplexMatrix to_dense(const TridiagSpec& s) {
    const std::size_t m = s.diag.size();
    ComplexMatrix mat(m);
    for (std::size_t k = 0; k < m; ++k) mat(k, k) = s.diag[k];
    for (std::size_t k = 0; k + 1 < m; ++k) {
        mat(k, k + 1) = s.upper[k];
        mat(k + 1, k) = s.lower[k];
    }
    return mat;
}

ComplexMatrix to_dense(const AlmostTridiagSpec& s) {
    ComplexMatrix mat = to_dense(s.band);
    const std::size_t m = mat.dim();
    mat(0, m - 1) += s.corner_top;
    mat(m - 1, 0) += s.corner_bottom;
    return mat;
}

namespace {

TridiagSpec symbol_pencil(const PeriodWords& p, double t, double x, double y) {
    const std::size_t m = p.period();
    const SymbolCoefficients sc = symbol_coefficients(p);
    TridiagSpec s;
    s.diag.resize(m);
    s.upper.resize(m - 1);
    s.lower.resize(m - 1);
    for (std::size_t j = 0; j < m; ++j)
        s.diag[j] = t + p.b()[j].real() * x + p.b()[j].imag() * y;
    for (std::size_t j = 0; j + 1 < m; ++j) {
        s.upper[j] = Complex{sc.alpha[j] * x, sc.gamma_im[j] * y};
        s.lower[j] = std::conj(s.upper[j]);
    }
    return s;
}

double real_det(const TridiagSpec& s) {
    const Complex d = tridiag_det(s);
    if (std::abs(d.imag()) > 1e-12 * std::max(1.0, std::abs(d)))
        throw std::logic_error("pencil determinant acquired an imaginary part");
    return d.real();
}

} // namespace

double pencil_det(const PeriodWords& p, double t, double x, double y) {
    return real_det(symbol_pencil(p, t, x, y));
}

double pencil_minor_det(const PeriodWords& p, double t, double x, double y) {
    const std::size_t m = p.period();
    if (m == 2) return 1.0;
    TridiagSpec full = symbol_pencil(p, t, x, y);
    TridiagSpec inner;
    inner.diag.assign(full.diag.begin() + 1, full.diag.end() - 1);
    inner.upper.assign(full.upper.begin() + 1, full.upper.end() - 1);
    inner.lower.assign(full.lower.begin() + 1, full.lower.end() - 1);
    return real_det(inner);
}

double range_polynomial(const PeriodWords& p, double t, double x, double y) {
    const std::size_t n = p.period() - 1;
    const SymbolCoefficients sc = symbol_coefficients(p);
    double prod = 1.0;
    for (std::size_t j = 0; j <= n; ++j) {
        const double ax = sc.alpha[j] * x;
        const double gy = sc.gamma_im[j] * y;
        prod *= ax * ax + gy * gy;
    }
    const double an = sc.alpha[n] * x;
    const double gn = sc.gamma_im[n] * y;
    const double rho_n2 = an * an + gn * gn;
    const double g = pencil_det(p, t, x, y);
    const double h = pencil_minor_det(p, t, x, y);
    const double head = g - rho_n2 * h;
    return head * head - 4.0 * prod;
}

namespace {

void require_palindromic(std::span<const double> ell) {
    const std::size_t m = ell.size();
    const std::size_t n = m - 1;
    const std::size_t last = (m % 2 == 1) ? n / 2 : (n - 1) / 2;
    for (std::size_t j = 1; j <= last; ++j)
        if (std::abs(ell[j] - ell[n - j + 1]) > 1e-12)
            throw std::invalid_argument("factor check requires a palindromic band word");
}

double dense_symmetric_det(const std::vector<double>& diag,
                           std::span<const double> band,
                           double corner) {
    const std::size_t m = diag.size();
    ComplexMatrix mat(m);
    for (std::size_t k = 0; k < m; ++k) mat(k, k) = diag[k];
    for (std::size_t k = 0; k + 1 < m; ++k) {
        mat(k, k + 1) = band[k];
        mat(k + 1, k) = band[k];
    }
    mat(0, m - 1) += corner;
    mat(m - 1, 0) += corner;
    return lu_determinant(mat).real();
}

TridiagSpec real_tridiag(std::vector<double> diag, std::vector<double> upper,
                         std::vector<double> lower) {
    TridiagSpec s;
    s.diag.assign(diag.begin(), diag.end());
    s.upper.assign(upper.begin(), upper.end());
    s.lower.assign(lower.begin(), lower.end());
    return s;
}

} // namespace

FactorCheck factor_check_corner(std::span<const double> ell, double t, int sign) {
    const std::size_t m = ell.size();
    if (m < 3) throw std::invalid_argument("factor_check_corner needs at least 3 entries");
    if (sign != 1 && sign != -1) throw std::invalid_argument("sign must be +1 or -1");
    require_palindromic(ell);
    const std::size_t n = m - 1;

    const std::vector<double> diag(m, t);
    const double lhs = dense_symmetric_det(diag, ell.first(n), sign * ell[n]);

    double rhs;
    if (m % 2 == 1) {
        const std::size_t h = n / 2;
        std::vector<double> d1(h + 1, t);
        d1[0] = t + sign * ell[0];
        std::vector<double> up1(ell.begin() + 1, ell.begin() + h + 1);
        std::vector<double> lo1 = up1;
        lo1[h - 1] = 2.0 * ell[h];
        std::vector<double> d2(h, t);
        d2[0] = t - sign * ell[0];
        std::vector<double> band2(ell.begin() + 1, ell.begin() + h);
        rhs = tridiag_det(real_tridiag(d1, up1, lo1)).real()
            * tridiag_det(real_tridiag(d2, band2, band2)).real();
    } else {
        const std::size_t h = (n + 1) / 2;
        std::vector<double> band(ell.begin() + 1, ell.begin() + h);
        std::vector<double> d1(h, t);
        d1[0] = t + sign * ell[0];
        d1[h - 1] += ell[h];
        std::vector<double> d2(h, t);
        d2[0] = t - sign * ell[0];
        d2[h - 1] -= ell[h];
        rhs = tridiag_det(real_tridiag(d1, band, band)).real()
            * tridiag_det(real_tridiag(d2, band, band)).real();
    }
    return {lhs, rhs};
}

FactorCheck factor_check_folded(std::span<const double> ell, double t, int sign) {
    const std::size_t m = ell.size();
    if (m < 3) throw std::invalid_argument("factor_check_folded needs at least 3 entries");
    if (sign != 1 && sign != -1) throw std::invalid_argument("sign must be +1 or -1");
    require_palindromic(ell);
    const std::size_t n = m - 1;

    std::vector<double> diag(m, t);
    diag.front() += sign * ell[0];
    diag.back() += sign * ell[0];
    const double lhs = dense_symmetric_det(diag, ell.subspan(1), 0.0);

    double rhs;
    if (m % 2 == 1) {
        const std::size_t h = n / 2;
        std::vector<double> dl(h, t);
        dl[0] = t + sign * ell[0];
        std::vector<double> bandl(ell.begin() + 1, ell.begin() + h);
        std::vector<double> dr(h + 1, t);
        dr[0] = t + sign * ell[0];
        std::vector<double> upr(ell.begin() + 1, ell.begin() + h + 1);
        std::vector<double> lor = upr;
        lor[h - 1] = 2.0 * ell[h];
        rhs = tridiag_det(real_tridiag(dl, bandl, bandl)).real()
            * tridiag_det(real_tridiag(dr, upr, lor)).real();
    } else {
        const std::size_t h = (n + 1) / 2;
        std::vector<double> band(ell.begin() + 1, ell.begin() + h);
        std::vector<double> d1(h, t);
        d1[0] = t + sign * ell[0];
        d1[h - 1] += ell[h];
        std::vector<double> d2(h, t);
        d2[0] = t + sign * ell[0];
        d2[h - 1] -= ell[h];
        rhs = tridiag_det(real_tridiag(d1, band, band)).real()
            * tridiag_det(real_tridiag(d2, band, band)).real();
    }
    return {lhs, rhs};
}

double LemmaFuzzReport::worst() const {
    return std::max({max_rel_corner_expansion, max_rel_corner_factor, max_rel_folded_factor});
}

void make_palindromic(std::span<double> ell) {
    const std::size_t m = ell.size();
    if (m < 2) return;
    const std::size_t n = m - 1;
    const std::size_t last = (m % 2 == 1) ? n / 2 : (n - 1) / 2;
    for (std::size_t j = 1; j <= last; ++j) ell[n - j + 1] = ell[j];
}

LemmaFuzzReport fuzz_determinant_identities(std::size_t trials, std::uint64_t seed) {
    SplitMix64 rng(seed);
    LemmaFuzzReport report;
    report.trials = trials;

    auto rel = [](double diff, double scale) { return std::abs(diff) / std::max(1.0, std::abs(scale)); };

    for (std::size_t trial = 0; trial < trials; ++trial) {
        const std::size_t m = static_cast<std::size_t>(rng.uniform_int(3, 12));

        AlmostTridiagSpec spec;
        spec.band.diag.resize(m);
        spec.band.upper.resize(m - 1);
        spec.band.lower.resize(m - 1);
        auto draw = [&]() { return Complex{rng.uniform(-2.0, 2.0), rng.uniform(-2.0, 2.0)}; };
        for (auto& v : spec.band.diag) v = draw();
        for (auto& v : spec.band.upper) v = rng.uniform() < 0.1 ? Complex{} : draw();
        for (auto& v : spec.band.lower) v = rng.uniform() < 0.1 ? Complex{} : draw();
        spec.corner_top = rng.uniform() < 0.15 ? Complex{} : draw();
        spec.corner_bottom = rng.uniform() < 0.15 ? Complex{} : draw();
        const Complex dense = lu_determinant(to_dense(spec));
        report.max_rel_corner_expansion = std::max(
            report.max_rel_corner_expansion,
            std::abs(almost_tridiag_det(spec) - dense) / std::max(1.0, std::abs(dense)));

        std::vector<double> ell(m);
        for (auto& v : ell) v = rng.uniform(-2.0, 2.0);
        make_palindromic(ell);
        const double t = rng.uniform(-2.0, 2.0);
        const int sign = rng.uniform() < 0.5 ? 1 : -1;

        const FactorCheck corner = factor_check_corner(ell, t, sign);
        report.max_rel_corner_factor =
            std::max(report.max_rel_corner_factor, rel(corner.lhs - corner.rhs, corner.lhs));

        const FactorCheck folded = factor_check_folded(ell, t, sign);
        report.max_rel_folded_factor =
            std::max(report.max_rel_folded_factor, rel(folded.lhs - folded.rhs, folded.lhs));
    }
    return report;
}

} // namespace trinum
