#pragma once

#include <cmath>
#include <complex>
#include <cstdint>
#include <vector>

#include "cohen/arith.hpp"
#include "cohen/divisor.hpp"
#include "cohen/errors.hpp"
#include "cohen/ramanujan.hpp"
#include "cohen/zeta.hpp"

namespace cohen {

// One truncated-series check: the partial sum, its closed form, and the
// residual |sum - reference|.
struct SeriesCheck {
    std::uint64_t truncation;
    std::complex<double> s;
    std::complex<double> sum;
    std::complex<double> reference;
    double residual;
};

namespace detail {

inline SeriesCheck make_check(std::uint64_t truncation, std::complex<double> s,
                              std::complex<double> sum, std::complex<double> reference) {
    return {truncation, s, sum, reference, std::abs(sum - reference)};
}

}  // namespace detail

// sum_{q<=Q} c_{q,beta}(n) / q^{beta s}  vs  sigma_{1-s,beta}(n) / zeta(beta s).
// Convergence margin: Re(s) >= 1 + 1/beta. (The identity itself holds for
// Re(s) > 1; the margin keeps the truncated tail decisively summable, and is
// inclusive so the classical s = 2, beta = 1 instance qualifies.)
inline SeriesCheck verify_cohen_series(std::uint64_t n, std::uint32_t beta,
                                       std::complex<double> s, std::uint64_t Q,
                                       const SieveTables& tables) {
    if (n < 1 || beta < 1 || Q < 1) throw DomainError("verify_cohen_series: n, beta, Q must be >= 1");
    if (!(s.real() >= 1.0 + 1.0 / beta)) {
        throw RegionError("verify_cohen_series: Re(s) must be >= 1 + 1/beta");
    }
    if (Q > tables.limit) throw RangeError("verify_cohen_series: Q outside sieve range");

    // Divisors d with d^beta | n, reused across every q.
    std::vector<std::uint64_t> dlist;
    std::vector<std::uint64_t> dpows;
    for (std::uint64_t d = 1;; ++d) {
        u128 p = 1;
        bool fits = true;
        for (std::uint32_t i = 0; i < beta; ++i) {
            p *= d;
            if (p > n) {
                fits = false;
                break;
            }
        }
        if (!fits) break;
        if (n % static_cast<std::uint64_t>(p) == 0) {
            dlist.push_back(d);
            dpows.push_back(static_cast<std::uint64_t>(p));
        }
    }

    std::complex<double> sum = 0.0;
    for (std::uint64_t q = 1; q <= Q; ++q) {
        std::int64_t c = 0;
        for (std::size_t i = 0; i < dlist.size(); ++i) {
            if (q % dlist[i] == 0) {
                c += static_cast<std::int64_t>(dpows[i]) * tables.mobius[q / dlist[i]];
            }
        }
        if (c != 0) {
            sum += static_cast<double>(c) *
                   std::exp(-double(beta) * s * std::log(static_cast<double>(q)));
        }
    }
    const std::complex<double> reference =
        sigma_z_beta(n, 1.0 - s, beta) / zeta(double(beta) * s);
    return detail::make_check(Q, s, sum, reference);
}

// sum_{n<=N} sigma_{z,beta}(n) / n^s  vs  zeta(s) zeta(beta (s - z)).
inline SeriesCheck verify_crum_single(std::complex<double> z, std::uint32_t beta,
                                      std::complex<double> s, std::uint64_t N) {
    if (beta < 1 || N < 1) throw DomainError("verify_crum_single: beta, N must be >= 1");
    const double abscissa = std::max(z.real() + 1.0 / beta, 1.0);
    if (!(s.real() > abscissa + 0.5)) {
        throw RegionError("verify_crum_single: Re(s) must exceed the abscissa plus 0.5");
    }
    const std::vector<std::complex<double>> table = sigma_table(N, z, beta);
    std::complex<double> sum = 0.0;
    for (std::uint64_t n = 1; n <= N; ++n) {
        sum += table[n] * std::exp(-s * std::log(static_cast<double>(n)));
    }
    const std::complex<double> reference = zeta(s) * zeta(double(beta) * (s - z));
    return detail::make_check(N, s, sum, reference);
}

// sum_{n<=N} sigma_{z1,beta}(n) sigma_{z2,beta}(n) / n^s  vs
// zeta(s) zeta(beta(s-z1)) zeta(beta(s-z2)) zeta(beta(s-z1-z2)) / zeta(beta(2s-z1-z2)).
inline SeriesCheck verify_crum_pair(std::complex<double> z1, std::complex<double> z2,
                                    std::uint32_t beta, std::complex<double> s,
                                    std::uint64_t N) {
    if (beta < 1 || N < 1) throw DomainError("verify_crum_pair: beta, N must be >= 1");
    const double abscissa = std::max(
        {1.0, z1.real() + 1.0 / beta, z2.real() + 1.0 / beta, z1.real() + z2.real() + 1.0 / beta});
    if (!(s.real() > abscissa + 0.5)) {
        throw RegionError("verify_crum_pair: Re(s) must exceed the abscissa plus 0.5");
    }
    const std::vector<std::complex<double>> table = sigma_pair_table(N, z1, z2, beta);
    std::complex<double> sum = 0.0;
    for (std::uint64_t n = 1; n <= N; ++n) {
        sum += table[n] * std::exp(-s * std::log(static_cast<double>(n)));
    }
    const double b = static_cast<double>(beta);
    const std::complex<double> reference = zeta(s) * zeta(b * (s - z1)) * zeta(b * (s - z2)) *
                                           zeta(b * (s - z1 - z2)) / zeta(b * (2.0 * s - z1 - z2));
    return detail::make_check(N, s, sum, reference);
}

// sum_{q<=Q} mu(q) c_q(n) / phi_{s+1}(q)  vs  zeta(s+1) phi_s(n) / n^s,
// for real s >= 1 (beta = 1 Ramanujan sums).
inline SeriesCheck verify_phi_series(std::uint64_t n, double s_real, std::uint64_t Q,
                                     const SieveTables& tables) {
    if (n < 1 || Q < 1) throw DomainError("verify_phi_series: n, Q must be >= 1");
    if (!(s_real >= 1.0)) throw RegionError("verify_phi_series: s must be >= 1");
    if (Q > tables.limit) throw RangeError("verify_phi_series: Q outside sieve range");

    std::vector<std::uint64_t> dlist;
    for (std::uint64_t a = 1; a * a <= n; ++a) {
        if (n % a != 0) continue;
        dlist.push_back(a);
        if (a != n / a) dlist.push_back(n / a);
    }
    const std::complex<double> s(s_real, 0.0);
    std::complex<double> sum = 0.0;
    for (std::uint64_t q = 1; q <= Q; ++q) {
        if (tables.mobius[q] == 0) continue;
        std::int64_t c = 0;
        for (std::uint64_t d : dlist) {
            if (q % d == 0) c += static_cast<std::int64_t>(d) * tables.mobius[q / d];
        }
        if (c == 0) continue;
        const std::complex<double> denom = phi_s(factorize(q, tables), s + 1.0);
        sum += static_cast<double>(tables.mobius[q]) * static_cast<double>(c) / denom;
    }
    const std::complex<double> reference =
        zeta(s + 1.0) * phi_s(n, s) / std::pow(static_cast<double>(n), s_real);
    return detail::make_check(Q, s, sum, reference);
}

}  // namespace cohen
