#pragma once

#include <cmath>
#include <complex>
#include <cstdint>
#include <utility>
#include <vector>

#include "cohen/config.hpp"
#include "cohen/errors.hpp"
#include "cohen/int128.hpp"

namespace cohen {

struct PrimePower {
    std::uint64_t prime;
    std::uint32_t exponent;
    friend bool operator==(const PrimePower&, const PrimePower&) = default;
};

// Canonical factorization n = p1^a1 * ... * pk^ak with primes strictly
// increasing. n = 1 carries an empty factor list.
struct Factorization {
    std::uint64_t n = 1;
    std::vector<PrimePower> factors;
};

// Mobius, Mertens and smallest-prime-factor tables for 1..limit, built by a
// single linear sieve. Immutable after construction; safe to share across
// threads.
struct SieveTables {
    std::uint64_t limit = 0;
    std::vector<std::int8_t> mobius;           // index 1..limit
    std::vector<std::int64_t> mertens;         // mertens[x] = sum_{k<=x} mobius[k]
    std::vector<std::uint32_t> smallest_prime; // smallest prime factor, smallest_prime[1] = 1

    std::int8_t mu(std::uint64_t n) const {
        if (n < 1 || n > limit) throw RangeError("mu: argument outside sieve range");
        return mobius[n];
    }
    std::int64_t mertens_at(std::uint64_t x) const {
        if (x < 1 || x > limit) throw RangeError("mertens_at: argument outside sieve range");
        return mertens[x];
    }
};

inline SieveTables build_sieve(std::uint64_t limit) {
    if (limit < 1) throw DomainError("build_sieve: limit must be >= 1");
    config::check_table_size(limit + 1, "build_sieve");
    if (limit > UINT32_MAX) throw ResourceError("build_sieve: limit exceeds 32-bit prime index");

    SieveTables t;
    t.limit = limit;
    t.mobius.assign(limit + 1, 0);
    t.mertens.assign(limit + 1, 0);
    t.smallest_prime.assign(limit + 1, 0);

    t.mobius[1] = 1;
    t.smallest_prime[1] = 1;
    std::vector<std::uint32_t> primes;
    for (std::uint64_t i = 2; i <= limit; ++i) {
        if (t.smallest_prime[i] == 0) {
            t.smallest_prime[i] = static_cast<std::uint32_t>(i);
            t.mobius[i] = -1;
            primes.push_back(static_cast<std::uint32_t>(i));
        }
        for (std::uint32_t p : primes) {
            if (p > t.smallest_prime[i] || i * p > limit) break;
            t.smallest_prime[i * p] = p;
            t.mobius[i * p] = (p == t.smallest_prime[i]) ? std::int8_t{0}
                                                         : std::int8_t(-t.mobius[i]);
        }
    }

    std::int64_t acc = 0;
    for (std::uint64_t i = 1; i <= limit; ++i) {
        acc += t.mobius[i];
        t.mertens[i] = acc;
    }
    return t;
}

// Factorization by trial division; adequate for the desk-scale arguments the
// library sees outside of sieved loops.
inline Factorization factorize(std::uint64_t n) {
    if (n < 1) throw DomainError("factorize: n must be >= 1");
    Factorization f;
    f.n = n;
    std::uint64_t m = n;
    for (std::uint64_t p = 2; p * p <= m; p += (p == 2 ? 1 : 2)) {
        if (m % p != 0) continue;
        std::uint32_t e = 0;
        while (m % p == 0) {
            m /= p;
            ++e;
        }
        f.factors.push_back({p, e});
    }
    if (m > 1) f.factors.push_back({m, 1});
    return f;
}

// Factorization via the smallest-prime-factor chain; requires n <= limit.
inline Factorization factorize(std::uint64_t n, const SieveTables& tables) {
    if (n < 1) throw DomainError("factorize: n must be >= 1");
    if (n > tables.limit) throw RangeError("factorize: n outside sieve range");
    Factorization f;
    f.n = n;
    std::uint64_t m = n;
    while (m > 1) {
        std::uint64_t p = tables.smallest_prime[m];
        std::uint32_t e = 0;
        while (m % p == 0) {
            m /= p;
            ++e;
        }
        f.factors.push_back({p, e});
    }
    return f;
}

inline int mobius(std::uint64_t n) {
    Factorization f = factorize(n);
    int sign = 1;
    for (const auto& pp : f.factors) {
        if (pp.exponent >= 2) return 0;
        sign = -sign;
    }
    return sign;
}

inline std::uint64_t euler_phi(std::uint64_t n) {
    Factorization f = factorize(n);
    std::uint64_t r = n;
    for (const auto& pp : f.factors) {
        r -= r / pp.prime;
    }
    return r;
}

// phi_s(n) = n^s * prod_{p | n} (1 - p^{-s}), the Jordan-style totient with a
// complex exponent. phi_s(1) = 1 by the empty product.
inline std::complex<double> phi_s(std::uint64_t n, std::complex<double> s) {
    Factorization f = factorize(n);
    std::complex<double> r = std::exp(s * std::log(static_cast<double>(n)));
    for (const auto& pp : f.factors) {
        r *= 1.0 - std::exp(-s * std::log(static_cast<double>(pp.prime)));
    }
    return r;
}

inline std::complex<double> phi_s(const Factorization& f, std::complex<double> s) {
    std::complex<double> r = std::exp(s * std::log(static_cast<double>(f.n)));
    for (const auto& pp : f.factors) {
        r *= 1.0 - std::exp(-s * std::log(static_cast<double>(pp.prime)));
    }
    return r;
}

// Saw-tooth psi(t) = t - floor(t) - 1/2; returns -1/2 at exact integers.
inline double sawtooth(double t) {
    if (!std::isfinite(t)) throw DomainError("sawtooth: argument must be finite");
    return t - std::floor(t) - 0.5;
}

// All divisors of n, unsorted order not guaranteed beyond being a complete
// list. Small helper shared by several modules.
inline std::vector<std::uint64_t> divisors(const Factorization& f) {
    std::vector<std::uint64_t> divs{1};
    for (const auto& pp : f.factors) {
        std::size_t count = divs.size();
        std::uint64_t pe = 1;
        for (std::uint32_t e = 1; e <= pp.exponent; ++e) {
            pe *= pp.prime;
            for (std::size_t i = 0; i < count; ++i) divs.push_back(divs[i] * pe);
        }
    }
    return divs;
}

}  // namespace cohen
