#pragma once

#include <cmath>
#include <cstdint>
#include <string>
#include <vector>

#include "cohen/arith.hpp"
#include "cohen/config.hpp"
#include "cohen/errors.hpp"
#include "cohen/int128.hpp"
#include "cohen/ramanujan.hpp"
#include "cohen/zeta.hpp"

namespace cohen {

// Parameters of the k-th moment C_{k,beta}(x, y) = sum_{n<=y} S_beta(x,n)^k.
// y is a real; every n-sum runs to floor(y).
struct MomentQuery {
    std::uint32_t k;
    std::uint32_t beta;
    std::uint64_t x;
    double y;
};

// One asymptotic comparison: exact value, explicit main term, signed error,
// the O-term shape with implied constant 1, and |error| / shape.
struct AsymptoticReport {
    double exact;
    double main_term;
    double error;
    double bound_shape;
    double normalized_error;
};

inline std::uint64_t moment_floor_y(double y) {
    if (!(y >= 1.0)) throw DomainError("moment: y must be >= 1");
    return static_cast<std::uint64_t>(std::floor(y));
}

// Exact C_{k,beta}(x, y) through the sieved row table.
inline i128 moment_exact(const MomentQuery& query, const SieveTables& tables) {
    if (query.k < 1) throw DomainError("moment_exact: k must be >= 1");
    const std::uint64_t yf = moment_floor_y(query.y);
    const std::vector<std::int64_t> rows = row_table(query.beta, query.x, yf, tables);
    i128 total = 0;
    for (std::uint64_t n = 1; n <= yf; ++n) {
        try {
            i128 power = 1;
            for (std::uint32_t i = 0; i < query.k; ++i) power = mul_exact(power, i128(rows[n]));
            total = add_exact(total, power);
        } catch (const OverflowError&) {
            throw OverflowError("moment_exact: 128-bit overflow at n = " + std::to_string(n));
        }
    }
    return total;
}

// Independent oracle: the defining double loop over n <= y, q <= x with the
// divisor-sum identity per term. Limited to x * y <= 10^6.
inline i128 moment_brute(const MomentQuery& query) {
    if (query.k < 1) throw DomainError("moment_brute: k must be >= 1");
    const std::uint64_t yf = moment_floor_y(query.y);
    if (static_cast<double>(query.x) * static_cast<double>(yf) > 1e6) {
        throw ScaleError("moment_brute: x * y exceeds the oracle scale of 10^6");
    }
    i128 total = 0;
    for (std::uint64_t n = 1; n <= yf; ++n) {
        i128 s = 0;
        for (std::uint64_t q = 1; q <= query.x; ++q) {
            s = add_exact(s, i128(cohen_sum_identity({q, query.beta, n})));
        }
        i128 power = 1;
        for (std::uint32_t i = 0; i < query.k; ++i) power = mul_exact(power, s);
        total = add_exact(total, power);
    }
    return total;
}

// A_{k,beta}(x, y): y for k = 1, y x^{1+beta} / ((1+beta) zeta(1+beta)) for k >= 2.
inline double main_term_prop1(const MomentQuery& query) {
    if (query.k < 1) throw DomainError("main_term_prop1: k must be >= 1");
    if (query.k == 1) return query.y;
    const double zb = zeta_real(1.0 + query.beta);
    return query.y * std::pow(static_cast<double>(query.x), 1.0 + query.beta) /
           ((1.0 + query.beta) * zb);
}

// First-moment main term: y - x^{1+beta} / (2 (1+beta) zeta(1+beta)) for
// beta = 1, 2; the secondary term is absorbed in the error for beta >= 3.
inline double main_term_first(std::uint32_t beta, std::uint64_t x, double y) {
    if (beta < 1) throw DomainError("main_term_first: beta must be >= 1");
    if (beta >= 3) return y;
    const double zb = zeta_real(1.0 + beta);
    return y - std::pow(static_cast<double>(x), 1.0 + beta) / (2.0 * (1.0 + beta) * zb);
}

// Second-moment main term: y x^{1+beta} / ((1+beta) zeta(1+beta)) minus, for
// beta = 1, 2, half of x^{2+2beta} / ((1+beta)^2 zeta^2(1+beta)).
inline double main_term_second(std::uint32_t beta, std::uint64_t x, double y) {
    if (beta < 1) throw DomainError("main_term_second: beta must be >= 1");
    const double zb = zeta_real(1.0 + beta);
    const double xd = static_cast<double>(x);
    double main = y * std::pow(xd, 1.0 + beta) / ((1.0 + beta) * zb);
    if (beta <= 2) {
        main -= 0.5 * std::pow(xd, 2.0 + 2.0 * beta) / ((1.0 + beta) * (1.0 + beta) * zb * zb);
    }
    return main;
}

// O-shape of the first-moment error with implied constant 1:
// x^beta y^{1/3} log^4 y + x^{2beta+1} y^{-2/3} + x^{beta+1} y^{-1/3};
// only the first summand for beta >= 3.
inline double error_bound_first(std::uint32_t beta, std::uint64_t x, double y) {
    if (beta < 1) throw DomainError("error_bound_first: beta must be >= 1");
    if (!(y > std::exp(1.0))) throw DomainError("error_bound_first: need y > e");
    const double xd = static_cast<double>(x);
    const double ly = std::log(y);
    double bound = std::pow(xd, beta) * std::cbrt(y) * ly * ly * ly * ly;
    if (beta <= 2) {
        bound += std::pow(xd, 2.0 * beta + 1.0) * std::pow(y, -2.0 / 3.0);
        bound += std::pow(xd, beta + 1.0) * std::pow(y, -1.0 / 3.0);
    }
    return bound;
}

// O-shape of the second-moment error with implied constant 1, piecewise in beta.
inline double error_bound_second(std::uint32_t beta, std::uint64_t x, double y) {
    if (beta < 1) throw DomainError("error_bound_second: beta must be >= 1");
    const double xd = static_cast<double>(x);
    if (!(xd > std::exp(1.0)) || !(y > std::exp(std::exp(1.0)))) {
        throw DomainError("error_bound_second: need x > e and y > e^e");
    }
    const double lx = std::log(xd);
    const double ly = std::log(y);
    const double llx = std::log(lx);
    const double lly = std::log(ly);
    auto ipow = [](double v, int e) {
        double r = 1.0;
        for (int i = 0; i < e; ++i) r *= v;
        return r;
    };
    double bound = std::pow(xd, 2.0 * beta) * std::pow(y, 1.0 / 3.0 + 1.0 / (6.0 * beta)) *
                       ipow(ly, 5) * lly * (ipow(lx, 4) + ipow(llx, 4)) +
                   y * std::pow(xd, 0.5 + beta) * (ipow(lx, 3) + ipow(llx, 3));
    if (beta <= 2) {
        bound += std::pow(xd, 2.0 + 4.0 * beta) / y;
        bound += std::pow(xd, 2.0 * beta + 1.0) * (lx + llx);
    }
    return bound;
}

// The saw-tooth decomposition C_{1,beta} = C1 + C2 + C3 with
//   C1 = y * sum_{dk<=x} mu(k)  (= y),
//   C2 = -(1/2) sum_{dk<=x} d^beta mu(k),
//   C3 = -sum_{dk<=x} d^beta mu(k) psi(y / d^beta).
// For integral y both C2 and C3 are half-integers; two_c2/two_c3 carry the
// doubled values exactly so the identity against moment_exact has zero
// floating error on that path.
struct AppendixParts {
    double c1;
    double c2;
    double c3;
    bool exact_path;  // y was integral; two_c2/two_c3 are valid
    i128 two_c2;
    i128 two_c3;
    std::int64_t mu_total;  // sum_{dk<=x} mu(k), always 1
};

inline AppendixParts appendix_decomposition(std::uint32_t beta, std::uint64_t x, double y,
                                            const SieveTables& tables) {
    if (beta < 1 || x < 1) throw DomainError("appendix_decomposition: beta, x must be >= 1");
    if (!(y >= 1.0)) throw DomainError("appendix_decomposition: y must be >= 1");
    if (x > tables.limit) throw RangeError("appendix_decomposition: x outside sieve range");

    AppendixParts parts{};
    std::int64_t mu_total = 0;
    for (std::uint64_t k = 1; k <= x; ++k) {
        mu_total = add_exact64(mu_total, mul_exact64(tables.mobius[k],
                                                     static_cast<std::int64_t>(x / k)));
    }
    parts.mu_total = mu_total;
    parts.c1 = y * static_cast<double>(mu_total);

    const bool integral = std::abs(y - std::nearbyint(y)) < 1e-9;
    const std::uint64_t yi = integral ? static_cast<std::uint64_t>(std::nearbyint(y)) : 0;
    parts.exact_path = integral;

    i128 t_sum = 0;       // sum_{dk<=x} d^beta mu(k) = sum_d d^beta M(x/d)
    i128 two_c3 = 0;      // -sum_d M(x/d) (2 (y mod d^beta) - d^beta), integral y
    double c3_float = 0;  // float path for non-integral y
    for (std::uint64_t d = 1; d <= x; ++d) {
        i128 dpow = 1;
        for (std::uint32_t i = 0; i < beta; ++i) dpow = mul_exact(dpow, i128(d));
        const std::int64_t mert = tables.mertens[x / d];
        t_sum = add_exact(t_sum, mul_exact(dpow, i128(mert)));
        if (mert == 0) continue;
        if (integral) {
            const i128 two_psi = 2 * i128(yi % u128(dpow)) - dpow;  // 2 d^beta psi(y/d^beta)
            two_c3 = sub_exact(two_c3, mul_exact(i128(mert), two_psi));
        } else {
            c3_float -= i128_to_double(dpow) * static_cast<double>(mert) *
                        sawtooth(y / i128_to_double(dpow));
        }
    }
    parts.two_c2 = -t_sum;
    parts.c2 = -0.5 * i128_to_double(t_sum);
    if (integral) {
        parts.two_c3 = two_c3;
        parts.c3 = 0.5 * i128_to_double(two_c3);
    } else {
        parts.two_c3 = 0;
        parts.c3 = c3_float;
    }
    return parts;
}

enum class Theorem { prop1, thm2, thm3, thm4, thm5 };

// Range guard for the theorem a scan targets. Out-of-range points still
// compute; this only drives the in_range flag. thm4 and thm5 restrict their
// z-parameters, not the x-grid, so they always pass here.
inline bool in_theorem_range(Theorem theorem, std::uint32_t beta, double x, double y,
                             std::uint32_t k = 1) {
    if (beta < 1) throw DomainError("in_theorem_range: beta must be >= 1");
    const double lx = std::log(x);
    switch (theorem) {
        case Theorem::prop1:
            if (!(x > 1.0)) return false;
            return y > std::pow(x, double(k) * (1.0 + beta)) * std::pow(lx, double(k) + 1.0);
        case Theorem::thm2:
            if (!(x > 1.0)) return false;
            // unit slack so integer-floored y-rules sit inside the window
            return y >= std::pow(x, 1.5 * beta) * std::pow(lx, 5.0) - 1.0;
        case Theorem::thm3:
            if (!(x > 1.0)) return false;
            if (beta >= 3) return y > std::pow(x, 1.5 * beta);
            return y > std::pow(x, 2.0 * beta) &&
                   y < std::pow(x, 2.0 * beta + double(beta) * beta) *
                           std::pow(lx, 2.5 * (beta + 1.0));
        case Theorem::thm4:
        case Theorem::thm5:
            return true;
    }
    return false;
}

// sum_{dk<=x} d^beta mu(k), the quantity behind C2; exposed for the
// Mertens-accelerated identity checks.
inline i128 dbmu_sum(std::uint32_t beta, std::uint64_t x, const SieveTables& tables) {
    if (x > tables.limit) throw RangeError("dbmu_sum: x outside sieve range");
    i128 sum = 0;
    for (std::uint64_t d = 1; d <= x; ++d) {
        i128 dpow = 1;
        for (std::uint32_t i = 0; i < beta; ++i) dpow = mul_exact(dpow, i128(d));
        sum = add_exact(sum, mul_exact(dpow, i128(tables.mertens[x / d])));
    }
    return sum;
}

}  // namespace cohen
