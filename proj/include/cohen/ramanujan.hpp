#pragma once

#include <cmath>
#include <cstdint>
#include <numbers>
#include <numeric>
#include <vector>

#include "cohen/arith.hpp"
#include "cohen/config.hpp"
#include "cohen/errors.hpp"
#include "cohen/int128.hpp"

namespace cohen {

// Parameters of a generalized Ramanujan sum c_{q,beta}(n).
struct CohenQuery {
    std::uint64_t q;
    std::uint32_t beta;
    std::uint64_t n;
};

// True iff h and m share no beta-th power divisor d^beta with d >= 2.
// Every d^beta divides h = 0, so 0 is beta-power-coprime to m exactly when
// m itself is beta-power-free.
inline bool gcd_beta_coprime(std::uint64_t h, std::uint64_t m, std::uint32_t beta) {
    if (m < 1) throw DomainError("gcd_beta_coprime: m must be >= 1");
    if (beta < 1) throw DomainError("gcd_beta_coprime: beta must be >= 1");
    std::uint64_t g = (h == 0) ? m : std::gcd(h, m);
    if (beta == 1) return g == 1;
    for (std::uint64_t d = 2;; ++d) {
        u128 p = 1;
        for (std::uint32_t i = 0; i < beta; ++i) {
            p *= d;
            if (p > g) break;
        }
        if (p > g) return true;
        if (g % static_cast<std::uint64_t>(p) == 0) return false;
    }
}

namespace detail {

// Admissibility marks for h in [0, m): bad[h] iff some prime p | q has
// p^beta | h (p^beta always divides m = q^beta).
inline std::vector<std::uint8_t> direct_bad_marks(std::uint64_t q, std::uint32_t beta,
                                                  std::uint64_t m) {
    std::vector<std::uint8_t> bad(m, 0);
    for (const auto& pp : factorize(q).factors) {
        std::uint64_t step = 1;
        for (std::uint32_t i = 0; i < beta; ++i) step *= pp.prime;
        for (std::uint64_t h = 0; h < m; h += step) bad[h] = 1;
    }
    return bad;
}

inline std::int64_t round_checked(double cos_sum, double sin_sum) {
    const double rounded = std::nearbyint(cos_sum);
    if (std::abs(cos_sum - rounded) > 1e-6 || std::abs(sin_sum) > 1e-6) {
        throw NumericIntegrityError("cohen_sum_direct: rounding residual or imaginary part above 1e-6");
    }
    return static_cast<std::int64_t>(rounded);
}

}  // namespace detail

// Direct evaluation of c_{q,beta}(n) = sum over admissible h < q^beta of
// e^{2 pi i n h / q^beta}. The value is the rounded cosine sum; the sine sum
// is carried along and asserted small rather than assumed to cancel.
inline std::int64_t cohen_sum_direct(const CohenQuery& query,
                                     std::uint64_t term_cap = config::kDefaultDirectTermCap) {
    if (query.q < 1 || query.beta < 1 || query.n < 1) {
        throw DomainError("cohen_sum_direct: q, beta, n must be >= 1");
    }
    const std::uint64_t m = pow_exact_u64(query.q, query.beta);
    if (m > term_cap) {
        throw RangeError("cohen_sum_direct: q^beta exceeds the direct-method term cap");
    }
    const std::vector<std::uint8_t> bad = detail::direct_bad_marks(query.q, query.beta, m);
    const double step = 2.0 * std::numbers::pi / static_cast<double>(m);
    const std::uint64_t r = query.n % m;
    double cos_sum = 0.0, sin_sum = 0.0;
    for (std::uint64_t h = 0; h < m; ++h) {
        if (bad[h]) continue;
        const double angle =
            step * static_cast<double>(static_cast<std::uint64_t>(u128(r) * h % m));
        cos_sum += std::cos(angle);
        sin_sum += std::sin(angle);
    }
    return detail::round_checked(cos_sum, sin_sum);
}

// Direct values c_{q,beta}(n) for all n = 1..n_max, sharing the admissibility
// marks and a phase table across the whole row. Exists so the dual-route
// equivalence sweep stays a direct exponential sum without being O(q^beta)
// per point.
inline std::vector<std::int64_t> cohen_sum_direct_row(
    std::uint64_t q, std::uint32_t beta, std::uint64_t n_max,
    std::uint64_t term_cap = config::kDefaultDirectTermCap) {
    if (q < 1 || beta < 1 || n_max < 1) {
        throw DomainError("cohen_sum_direct_row: q, beta, n_max must be >= 1");
    }
    const std::uint64_t m = pow_exact_u64(q, beta);
    if (m > term_cap) {
        throw RangeError("cohen_sum_direct_row: q^beta exceeds the direct-method term cap");
    }
    const std::vector<std::uint8_t> bad = detail::direct_bad_marks(q, beta, m);
    std::vector<double> cos_tab(m), sin_tab(m);
    const double step = 2.0 * std::numbers::pi / static_cast<double>(m);
    for (std::uint64_t j = 0; j < m; ++j) {
        cos_tab[j] = std::cos(step * static_cast<double>(j));
        sin_tab[j] = std::sin(step * static_cast<double>(j));
    }
    std::vector<double> cos_sum(n_max + 1, 0.0), sin_sum(n_max + 1, 0.0);
    for (std::uint64_t h = 0; h < m; ++h) {
        if (bad[h]) continue;
        // (n*h) mod m walked incrementally over n.
        std::uint64_t idx = h % m;
        for (std::uint64_t n = 1; n <= n_max; ++n) {
            cos_sum[n] += cos_tab[idx];
            sin_sum[n] += sin_tab[idx];
            idx += h;
            if (idx >= m) idx -= m;
        }
    }
    std::vector<std::int64_t> row(n_max + 1, 0);
    for (std::uint64_t n = 1; n <= n_max; ++n) {
        row[n] = detail::round_checked(cos_sum[n], sin_sum[n]);
    }
    return row;
}

// Cohen's Moebius identity: c_{q,beta}(n) = sum_{d | q, d^beta | n} d^beta mu(q/d).
inline std::int64_t cohen_sum_identity(const CohenQuery& query) {
    if (query.q < 1 || query.beta < 1 || query.n < 1) {
        throw DomainError("cohen_sum_identity: q, beta, n must be >= 1");
    }
    pow_exact_u64(query.q, query.beta);  // guard: q^beta must be representable
    const Factorization fq = factorize(query.q);
    i128 sum = 0;
    // Walk divisors d of q with their exponent vectors so mu(q/d) is cheap.
    std::vector<std::uint32_t> exps(fq.factors.size(), 0);
    while (true) {
        std::uint64_t d = 1;
        int mu_cofactor = 1;
        for (std::size_t i = 0; i < fq.factors.size(); ++i) {
            for (std::uint32_t e = 0; e < exps[i]; ++e) d *= fq.factors[i].prime;
            const std::uint32_t co = fq.factors[i].exponent - exps[i];
            if (co >= 2) mu_cofactor = 0;
            else if (co == 1) mu_cofactor = -mu_cofactor;
        }
        if (mu_cofactor != 0) {
            // d^beta | n requires d^beta <= n in the first place.
            u128 dpow = 1;
            bool fits = true;
            for (std::uint32_t i = 0; i < query.beta; ++i) {
                dpow *= d;
                if (dpow > query.n) {
                    fits = false;
                    break;
                }
            }
            if (fits && query.n % static_cast<std::uint64_t>(dpow) == 0) {
                sum = add_exact(sum, mul_exact(i128(mu_cofactor), i128(dpow)));
            }
        }
        // Next exponent vector.
        std::size_t i = 0;
        while (i < exps.size() && exps[i] == fq.factors[i].exponent) exps[i++] = 0;
        if (i == exps.size()) break;
        ++exps[i];
    }
    return narrow_to_i64(sum, "cohen_sum_identity");
}

// S_beta(x, n) = sum_{q <= x} c_{q,beta}(n), evaluated through the rearranged
// identity sum_{d <= x, d^beta | n} d^beta * M(floor(x/d)) with Mertens
// partial sums from the tables.
inline std::int64_t row_sum(std::uint32_t beta, std::uint64_t n, std::uint64_t x,
                            const SieveTables& tables) {
    if (beta < 1 || n < 1 || x < 1) throw DomainError("row_sum: beta, n, x must be >= 1");
    if (x > tables.limit) throw RangeError("row_sum: x outside sieve range");
    i128 sum = 0;
    auto add_d = [&](std::uint64_t d) {
        if (d > x) return;
        u128 dpow = 1;
        for (std::uint32_t i = 0; i < beta; ++i) dpow *= d;
        sum = add_exact(sum, mul_exact(i128(dpow), i128(tables.mertens[x / d])));
    };
    if (beta == 1) {
        for (std::uint64_t a = 1; a * a <= n; ++a) {
            if (n % a != 0) continue;
            add_d(a);
            if (a != n / a) add_d(n / a);
        }
    } else {
        for (std::uint64_t d = 1;; ++d) {
            u128 dpow = 1;
            bool fits = true;
            for (std::uint32_t i = 0; i < beta; ++i) {
                dpow *= d;
                if (dpow > n) {
                    fits = false;
                    break;
                }
            }
            if (!fits) break;
            if (n % static_cast<std::uint64_t>(dpow) == 0) add_d(d);
        }
    }
    return narrow_to_i64(sum, "row_sum");
}

// Table of S_beta(x, n) for n = 1..y: for each d <= min(x, y^{1/beta}), add
// d^beta * M(floor(x/d)) at the multiples of d^beta.
inline std::vector<std::int64_t> row_table(std::uint32_t beta, std::uint64_t x, std::uint64_t y,
                                           const SieveTables& tables) {
    if (beta < 1 || x < 1 || y < 1) throw DomainError("row_table: beta, x, y must be >= 1");
    if (x > tables.limit) throw RangeError("row_table: x outside sieve range");
    config::check_table_size(y + 1, "row_table");
    std::vector<std::int64_t> row(y + 1, 0);
    for (std::uint64_t d = 1; d <= x; ++d) {
        u128 dpow = 1;
        bool fits = true;
        for (std::uint32_t i = 0; i < beta; ++i) {
            dpow *= d;
            if (dpow > y) {
                fits = false;
                break;
            }
        }
        if (!fits) break;
        const std::uint64_t step = static_cast<std::uint64_t>(dpow);
        const std::int64_t coeff =
            mul_exact64(static_cast<std::int64_t>(step), tables.mertens[x / d]);
        if (coeff == 0) continue;
        for (std::uint64_t n = step; n <= y; n += step) row[n] = add_exact64(row[n], coeff);
    }
    return row;
}

}  // namespace cohen
