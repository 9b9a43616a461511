#pragma once

#include <array>
#include <cmath>
#include <complex>
#include <cstdint>
#include <vector>

#include "cohen/bigint.hpp"
#include "cohen/errors.hpp"

namespace cohen {

inline constexpr int kMaxBernoulliIndex = 60;

namespace detail {

// B_0..B_60 by the defining recurrence sum_{j<=m} C(m+1, j) B_j = 0,
// carried out in exact rationals.
inline const std::vector<Rational>& bernoulli_cache() {
    static const std::vector<Rational> cache = [] {
        std::vector<Rational> b;
        b.reserve(kMaxBernoulliIndex + 1);
        b.emplace_back(1);  // B_0
        for (int m = 1; m <= kMaxBernoulliIndex; ++m) {
            Rational acc;
            std::uint64_t binom = 1;  // C(m+1, 0)
            for (int j = 0; j < m; ++j) {
                acc = acc + Rational(BigInt::from_u64(binom), BigInt(1)) * b[j];
                // C(m+1, j+1) = C(m+1, j) * (m+1-j) / (j+1); fits u64 for m <= 60.
                binom = binom * std::uint64_t(m + 1 - j) / std::uint64_t(j + 1);
            }
            b.push_back((acc / Rational(m + 1)).negated());
        }
        return b;
    }();
    return cache;
}

}  // namespace detail

// Exact rational Bernoulli number, for even 2 <= index <= 60.
inline Rational bernoulli_rational(int index) {
    if (index < 2 || index > kMaxBernoulliIndex || index % 2 != 0) {
        throw DomainError("bernoulli: index must be even and in [2, 60]");
    }
    return detail::bernoulli_cache()[static_cast<std::size_t>(index)];
}

inline double bernoulli(int index) { return bernoulli_rational(index).to_double(); }

// Tuning knobs for the Euler-Maclaurin evaluation.
struct ZetaConfig {
    int series_terms = 30;       // direct-sum cutoff N
    int correction_terms = 12;   // number of Bernoulli corrections M (even)
    double target_abs_error = 1e-12;
};

inline ZetaConfig default_zeta_config(std::complex<double> s) {
    ZetaConfig cfg;
    cfg.series_terms = std::max(30, static_cast<int>(std::ceil(2.0 * std::abs(s.imag()))));
    return cfg;
}

// Riemann zeta by Euler-Maclaurin summation:
//   zeta(s) = sum_{k<=N} k^{-s} + N^{1-s}/(s-1) - N^{-s}/2
//             + sum_{m<=M} B_{2m}/(2m)! * s(s+1)...(s+2m-2) * N^{-s-2m+1}.
// Accurate to target_abs_error on the region this library uses
// (Re(s) >= -2, |Im(s)| <= 100) with the default config.
inline std::complex<double> zeta(std::complex<double> s, const ZetaConfig& cfg) {
    if (std::abs(s - std::complex<double>(1.0, 0.0)) < 1e-9) {
        throw PoleError("zeta: argument too close to the pole at s = 1");
    }
    if (cfg.series_terms < 10) throw DomainError("zeta: series_terms must be >= 10");
    if (cfg.correction_terms < 2 || cfg.correction_terms % 2 != 0) {
        throw DomainError("zeta: correction_terms must be even and >= 2");
    }
    if (!(cfg.target_abs_error > 0)) throw DomainError("zeta: target_abs_error must be positive");
    if (2 * cfg.correction_terms > kMaxBernoulliIndex) {
        throw DomainError("zeta: correction_terms beyond Bernoulli cache");
    }

    const double n = static_cast<double>(cfg.series_terms);
    std::complex<double> sum = 0.0;
    for (int k = 1; k <= cfg.series_terms; ++k) {
        sum += std::exp(-s * std::log(static_cast<double>(k)));
    }
    const std::complex<double> n_pow_ms = std::exp(-s * std::log(n));  // N^{-s}
    sum += n_pow_ms * n / (s - 1.0);
    sum -= 0.5 * n_pow_ms;

    // Correction terms. pochhammer tracks s(s+1)...(s+2m-2), n_factor tracks
    // N^{-s-2m+1}. Stop early once a term is far below target.
    std::complex<double> pochhammer = s;
    std::complex<double> n_factor = n_pow_ms / n;  // N^{-s-1}
    for (int m = 1; m <= cfg.correction_terms; ++m) {
        if (m > 1) {
            pochhammer *= (s + double(2 * m - 3)) * (s + double(2 * m - 2));
            n_factor /= n * n;
        }
        double coeff = bernoulli(2 * m);
        for (int j = 2; j <= 2 * m; ++j) coeff /= j;  // B_{2m} / (2m)!
        std::complex<double> term = coeff * pochhammer * n_factor;
        sum += term;
        if (std::abs(term) < 0.01 * cfg.target_abs_error) break;
    }
    return sum;
}

inline std::complex<double> zeta(std::complex<double> s) {
    return zeta(s, default_zeta_config(s));
}

inline double zeta_real(double s) { return zeta(std::complex<double>(s, 0.0)).real(); }

}  // namespace cohen
