#pragma once

#include <cmath>
#include <complex>
#include <cstdint>
#include <vector>

#include "cohen/arith.hpp"
#include "cohen/config.hpp"
#include "cohen/errors.hpp"

namespace cohen {

namespace detail {

// Largest d with d^beta <= y, by floating estimate plus integer correction.
inline std::uint64_t integer_root(std::uint64_t y, std::uint32_t beta) {
    if (beta == 1) return y;
    std::uint64_t d = static_cast<std::uint64_t>(
        std::floor(std::pow(static_cast<double>(y), 1.0 / beta)) + 0.5);
    auto pow_le = [&](std::uint64_t v) {
        u128 p = 1;
        for (std::uint32_t i = 0; i < beta; ++i) {
            p *= v;
            if (p > y) return false;
        }
        return true;
    };
    while (d > 0 && !pow_le(d)) --d;
    while (pow_le(d + 1)) ++d;
    return d;
}

}  // namespace detail

// sigma_{z,beta}(n) = sum over d with d^beta | n of d^{beta z}.
inline std::complex<double> sigma_z_beta(std::uint64_t n, std::complex<double> z,
                                         std::uint32_t beta) {
    if (n < 1) throw DomainError("sigma_z_beta: n must be >= 1");
    if (beta < 1) throw DomainError("sigma_z_beta: beta must be >= 1");
    std::complex<double> sum = 0.0;
    const std::uint64_t dmax = detail::integer_root(n, beta);
    auto add_if_power_divides = [&](std::uint64_t d) {
        if (d > dmax) return;
        std::uint64_t rem = n;
        for (std::uint32_t i = 0; i < beta; ++i) {
            if (rem % d != 0) return;
            rem /= d;
        }
        sum += std::exp(double(beta) * z * std::log(static_cast<double>(d)));
    };
    // Candidates d must divide n; walk divisor pairs up to sqrt(n).
    for (std::uint64_t a = 1; a * a <= n; ++a) {
        if (n % a != 0) continue;
        add_if_power_divides(a);
        if (a != n / a) add_if_power_divides(n / a);
    }
    return sum;
}

// Table of sigma_{z,beta}(n) for n = 1..y via the additive sieve: for each
// d <= y^{1/beta}, add d^{beta z} at the multiples of d^beta. Entries are
// accumulated in ascending d so the float association order is fixed.
inline std::vector<std::complex<double>> sigma_table(std::uint64_t y, std::complex<double> z,
                                                     std::uint32_t beta) {
    if (y < 1) throw DomainError("sigma_table: y must be >= 1");
    if (beta < 1) throw DomainError("sigma_table: beta must be >= 1");
    config::check_table_size(y + 1, "sigma_table");
    std::vector<std::complex<double>> table(y + 1, std::complex<double>(0.0, 0.0));
    const std::uint64_t dmax = detail::integer_root(y, beta);
    for (std::uint64_t d = 1; d <= dmax; ++d) {
        std::uint64_t step = 1;
        for (std::uint32_t i = 0; i < beta; ++i) step *= d;
        const std::complex<double> w =
            std::exp(double(beta) * z * std::log(static_cast<double>(d)));
        for (std::uint64_t n = step; n <= y; n += step) table[n] += w;
    }
    return table;
}

// Real fast path for real z; halves the memory of the dominant use case.
inline std::vector<double> sigma_table_real(std::uint64_t y, double z, std::uint32_t beta) {
    if (y < 1) throw DomainError("sigma_table_real: y must be >= 1");
    if (beta < 1) throw DomainError("sigma_table_real: beta must be >= 1");
    config::check_table_size(y + 1, "sigma_table_real");
    std::vector<double> table(y + 1, 0.0);
    const std::uint64_t dmax = detail::integer_root(y, beta);
    for (std::uint64_t d = 1; d <= dmax; ++d) {
        std::uint64_t step = 1;
        for (std::uint32_t i = 0; i < beta; ++i) step *= d;
        const double w = std::pow(static_cast<double>(d), double(beta) * z);
        for (std::uint64_t n = step; n <= y; n += step) table[n] += w;
    }
    return table;
}

// Pointwise product sigma_{z1,beta}(n) * sigma_{z2,beta}(n) for n = 1..y.
inline std::vector<std::complex<double>> sigma_pair_table(std::uint64_t y,
                                                          std::complex<double> z1,
                                                          std::complex<double> z2,
                                                          std::uint32_t beta) {
    std::vector<std::complex<double>> a = sigma_table(y, z1, beta);
    std::vector<std::complex<double>> b = sigma_table(y, z2, beta);
    for (std::size_t i = 0; i < a.size(); ++i) a[i] *= b[i];
    return a;
}

}  // namespace cohen
