#pragma once

#include <cmath>
#include <complex>
#include <cstdint>
#include <optional>

#include "cohen/config.hpp"
#include "cohen/divisor.hpp"
#include "cohen/errors.hpp"
#include "cohen/moments.hpp"
#include "cohen/zeta.hpp"

namespace cohen {

// Parameters of a primed partial sum of sigma_{z,beta} (z2 absent) or of
// sigma_{z1,beta} * sigma_{z2,beta} (z2 present).
struct PartialSumQuery {
    double x;
    std::uint32_t beta;
    std::complex<double> z1;
    std::optional<std::complex<double>> z2;
};

namespace detail {

inline bool x_is_integral(double x) { return std::abs(x - std::nearbyint(x)) < 1e-9; }

// Primed prefix sum of a 1-indexed table: ascending-n accumulation, with the
// final term halved when x is an integer.
template <typename T>
T primed_prefix(const std::vector<T>& table, double x) {
    const std::uint64_t xf = static_cast<std::uint64_t>(std::floor(x + 1e-9));
    T sum{};
    for (std::uint64_t n = 1; n <= xf; ++n) sum += table[n];
    if (x_is_integral(x)) sum -= table[xf] * 0.5;
    return sum;
}

}  // namespace detail

// Primed sum sum'_{n<=x} sigma_{z,beta}(n), exactly from the sieved table.
inline std::complex<double> sigma_partial_exact(const PartialSumQuery& query) {
    if (!(query.x >= 1.0)) throw DomainError("sigma_partial_exact: x must be >= 1");
    if (query.beta < 1) throw DomainError("sigma_partial_exact: beta must be >= 1");
    const std::uint64_t xf = static_cast<std::uint64_t>(std::floor(query.x + 1e-9));
    config::check_table_size(xf + 1, "sigma_partial_exact");
    if (query.z1.imag() == 0.0) {
        const std::vector<double> table = sigma_table_real(xf, query.z1.real(), query.beta);
        return {detail::primed_prefix(table, query.x), 0.0};
    }
    const std::vector<std::complex<double>> table = sigma_table(xf, query.z1, query.beta);
    return detail::primed_prefix(table, query.x);
}

// Primed sum sum'_{n<=x} sigma_{z1,beta}(n) sigma_{z2,beta}(n).
inline std::complex<double> sigma_pair_partial_exact(const PartialSumQuery& query) {
    if (!query.z2.has_value()) throw DomainError("sigma_pair_partial_exact: z2 is required");
    if (!(query.x >= 1.0)) throw DomainError("sigma_pair_partial_exact: x must be >= 1");
    if (query.beta < 1) throw DomainError("sigma_pair_partial_exact: beta must be >= 1");
    const std::uint64_t xf = static_cast<std::uint64_t>(std::floor(query.x + 1e-9));
    config::check_table_size(xf + 1, "sigma_pair_partial_exact");
    if (query.z1.imag() == 0.0 && query.z2->imag() == 0.0) {
        std::vector<double> a = sigma_table_real(xf, query.z1.real(), query.beta);
        const std::vector<double> b = sigma_table_real(xf, query.z2->real(), query.beta);
        for (std::size_t i = 0; i < a.size(); ++i) a[i] *= b[i];
        return {detail::primed_prefix(a, query.x), 0.0};
    }
    std::vector<std::complex<double>> a = sigma_table(xf, query.z1, query.beta);
    const std::vector<std::complex<double>> b = sigma_table(xf, *query.z2, query.beta);
    for (std::size_t i = 0; i < a.size(); ++i) a[i] *= b[i];
    return detail::primed_prefix(a, query.x);
}

// Main term D_{z,beta}(x):
//   beta = 1, 2 and -2/(3 beta^2) < Re(z) <= 0:
//       zeta(beta(1-z)) x + zeta(z + 1/beta) x^{z+1/beta} / (1 + beta z)
//   beta >= 3 and -1 < Re(z) <= 0:
//       zeta(beta(1-z)) x
// (beta, z) = (1, 0) is the Dirichlet divisor problem and is refused.
inline std::complex<double> main_term_sigma(const PartialSumQuery& query) {
    const std::uint32_t beta = query.beta;
    const std::complex<double> z = query.z1;
    if (beta < 1) throw DomainError("main_term_sigma: beta must be >= 1");
    if (beta == 1 && z == std::complex<double>(0.0, 0.0)) {
        throw ExcludedParameterError("main_term_sigma: (beta, z) = (1, 0) is excluded");
    }
    if (!(z.real() <= 0.0)) throw RegionError("main_term_sigma: Re(z) must be <= 0");
    const double x = query.x;
    const double b = static_cast<double>(beta);
    if (beta <= 2) {
        if (!(z.real() > -2.0 / (3.0 * b * b))) {
            throw RegionError("main_term_sigma: Re(z) outside (-2/(3 beta^2), 0]");
        }
        const std::complex<double> first = zeta(b * (1.0 - z)) * x;
        const std::complex<double> expo = z + 1.0 / b;
        const std::complex<double> second =
            zeta(expo) * std::exp(expo * std::log(x)) / (1.0 + b * z);
        return first + second;
    }
    if (!(z.real() > -1.0)) throw RegionError("main_term_sigma: Re(z) outside (-1, 0]");
    return zeta(b * (1.0 - z)) * x;
}

// Main term D_{z1,z2,beta}(x) of the pair sum: the residues at s = 1,
// z1 + 1/beta, z2 + 1/beta and z1 + z2 + 1/beta for beta = 1, 2; the residue
// at s = 1 alone for beta >= 3. The case regions follow the per-beta proof
// text (-1/2 for beta = 1, -1/10 for beta = 2).
inline std::complex<double> main_term_sigma_pair(const PartialSumQuery& query) {
    if (!query.z2.has_value()) throw DomainError("main_term_sigma_pair: z2 is required");
    const std::uint32_t beta = query.beta;
    const std::complex<double> z1 = query.z1;
    const std::complex<double> z2 = *query.z2;
    if (beta < 1) throw DomainError("main_term_sigma_pair: beta must be >= 1");
    const std::complex<double> zero(0.0, 0.0);
    if (z1 == zero || z2 == zero || z1 == z2) {
        throw DegenerateParameterError(
            "main_term_sigma_pair: z1 = 0, z2 = 0 or z1 = z2 collapses a pole");
    }
    const double a1 = z1.real(), a2 = z2.real();
    if (!(a1 <= 0.0 && a2 <= 0.0)) {
        throw RegionError("main_term_sigma_pair: Re(z1), Re(z2) must be <= 0");
    }
    if (!(a1 + a2 > -1.0)) throw RegionError("main_term_sigma_pair: Re(z1+z2) must be > -1");
    const double b = static_cast<double>(beta);
    if (!(std::abs(a1 - a2) < 1.0 / b)) {
        throw RegionError("main_term_sigma_pair: |Re(z1-z2)| must be < 1/beta");
    }
    const double x = query.x;

    const std::complex<double> res1 = zeta(b * (1.0 - z1)) * zeta(b * (1.0 - z2)) *
                                      zeta(b * (1.0 - z1 - z2)) / zeta(b * (2.0 - z1 - z2)) * x;
    if (beta >= 3) return res1;

    const double lower = (beta == 1) ? -0.5 : -0.1;
    if (!(a1 > lower && a2 > lower && a1 + a2 > lower)) {
        throw RegionError("main_term_sigma_pair: Re parts outside the beta = " +
                          std::to_string(beta) + " case region");
    }

    auto xpow = [&](std::complex<double> e) { return std::exp(e * std::log(x)); };
    const std::complex<double> res2 = zeta(z1 + 1.0 / b) * zeta(1.0 + b * z1 - b * z2) *
                                      zeta(1.0 - b * z2) /
                                      ((b * z1 + 1.0) * zeta(2.0 + b * z1 - b * z2)) *
                                      xpow(z1 + 1.0 / b);
    const std::complex<double> res3 = zeta(z2 + 1.0 / b) * zeta(1.0 + b * z2 - b * z1) *
                                      zeta(1.0 - b * z1) /
                                      ((b * z2 + 1.0) * zeta(2.0 + b * z2 - b * z1)) *
                                      xpow(z2 + 1.0 / b);
    const std::complex<double> res4 = zeta(z1 + z2 + 1.0 / b) * zeta(b * z2 + 1.0) *
                                      zeta(b * z1 + 1.0) /
                                      ((b * z1 + b * z2 + 1.0) * zeta(2.0 + b * z1 + b * z2)) *
                                      xpow(z1 + z2 + 1.0 / b);
    return res1 + res2 + res3 + res4;
}

enum class SumKind { single, pair };

// Error-shape of Delta for the single sum: x^{1/3} log^2 x.
inline double delta_bound_single(double x) {
    if (!(x > 1.0)) throw DomainError("delta_bound_single: need x > 1");
    const double lx = std::log(x);
    return std::cbrt(x) * lx * lx;
}

// Error-shape of Delta for the pair sum, piecewise in beta.
inline double delta_bound_pair(std::uint32_t beta, double x, double a1, double a2) {
    if (!(x > std::exp(1.0))) throw DomainError("delta_bound_pair: need x > e");
    const double b = static_cast<double>(beta);
    const double lx = std::log(x);
    double l5 = lx * lx * lx * lx * lx;
    const double common = std::pow(x, 1.0 / 3.0 + 1.0 / (6.0 * b) + (a1 + a2) / 6.0);
    if (beta <= 2) return common * l5 * std::log(lx);
    const double alt = std::pow(x, 1.0 / (2.0 * b) + (a1 + a2) / 2.0 + b * std::abs(a1 - a2) / 3.0);
    return std::max(common, alt) * l5 * std::log(lx);
}

// Full exact-vs-main report for real parameters. The exact and main values
// are provably real there (conjugate symmetry); the imaginary parts are
// checked, not assumed.
inline AsymptoticReport delta_report(SumKind kind, const PartialSumQuery& query) {
    if (query.z1.imag() != 0.0 || (query.z2 && query.z2->imag() != 0.0)) {
        throw DomainError("delta_report: z parameters must be real");
    }
    std::complex<double> exact, main;
    double bound;
    if (kind == SumKind::single) {
        exact = sigma_partial_exact(query);
        main = main_term_sigma(query);
        bound = delta_bound_single(query.x);
    } else {
        exact = sigma_pair_partial_exact(query);
        main = main_term_sigma_pair(query);
        bound = delta_bound_pair(query.beta, query.x, query.z1.real(), query.z2->real());
    }
    const double scale = 1.0 + std::abs(exact.real()) + std::abs(main.real());
    if (std::abs(exact.imag()) > 1e-9 * scale || std::abs(main.imag()) > 1e-9 * scale) {
        throw NumericIntegrityError("delta_report: non-negligible imaginary part");
    }
    AsymptoticReport report{};
    report.exact = exact.real();
    report.main_term = main.real();
    report.error = report.exact - report.main_term;
    report.bound_shape = bound;
    report.normalized_error = std::abs(report.error) / bound;
    return report;
}

}  // namespace cohen
