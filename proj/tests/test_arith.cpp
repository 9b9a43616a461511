#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include <numeric>
#include <random>

#include "cohen/arith.hpp"
#include "oracles.hpp"

using namespace cohen;

TEST_CASE("build_sieve small values") {
    SieveTables t1 = build_sieve(1);
    CHECK(t1.mobius[1] == 1);
    CHECK(t1.mertens[1] == 1);

    SieveTables t = build_sieve(10);
    CHECK(t.mertens[10] == -1);  // mu(1..10) = 1,-1,-1,0,-1,1,-1,0,0,1
    CHECK(t.mobius[4] == 0);
    CHECK(t.mobius[1] == 1);
    // mobius(p) = -1 for every prime up to the limit
    for (std::uint64_t p : {2, 3, 5, 7}) CHECK(t.mobius[p] == -1);
}

TEST_CASE("build_sieve against brute mobius and mertens difference") {
    SieveTables t = build_sieve(5000);
    std::int64_t acc = 0;
    for (std::uint64_t n = 1; n <= 5000; ++n) {
        CHECK(t.mobius[n] == oracles::brute_mobius(n));
        acc += t.mobius[n];
        CHECK(t.mertens[n] == acc);
        if (n >= 2) CHECK(t.mertens[n] - t.mertens[n - 1] == t.mobius[n]);
    }
}

TEST_CASE("build_sieve resource guard") {
    CHECK_THROWS_AS(build_sieve(config::memory_cap_entries() + 10), ResourceError);
    CHECK_THROWS_AS(build_sieve(0), DomainError);
    CHECK_THROWS_AS(factorize(0), DomainError);
}

TEST_CASE("mobius examples and multiplicativity") {
    CHECK(mobius(1) == 1);
    CHECK(mobius(6) == 1);
    CHECK(mobius(12) == 0);

    std::mt19937_64 rng(20240811);
    std::uniform_int_distribution<std::uint64_t> dist(1, 400);
    int checked = 0;
    while (checked < 500) {
        std::uint64_t a = dist(rng), b = dist(rng);
        if (std::gcd(a, b) != 1) continue;
        CHECK(mobius(a * b) == mobius(a) * mobius(b));
        ++checked;
    }
}

TEST_CASE("sum of mobius over divisors is the unit function") {
    SieveTables t = build_sieve(10000);
    for (std::uint64_t n = 1; n <= 10000; ++n) {
        int sum = 0;
        for (std::uint64_t d = 1; d * d <= n; ++d) {
            if (n % d != 0) continue;
            sum += t.mobius[d];
            if (d != n / d) sum += t.mobius[n / d];
        }
        CHECK(sum == (n == 1 ? 1 : 0));
    }
}

TEST_CASE("euler_phi examples") {
    CHECK(euler_phi(1) == 1);
    CHECK(euler_phi(12) == 4);
    for (std::uint64_t p : {2, 3, 5, 7, 97, 1009}) CHECK(euler_phi(p) == p - 1);
    for (std::uint64_t n = 1; n <= 300; ++n) CHECK(euler_phi(n) == oracles::brute_phi(n));
}

TEST_CASE("phi_s examples and agreement with euler_phi at s = 1") {
    CHECK(phi_s(1, {2.5, 0.0}) == std::complex<double>(1.0, 0.0));
    CHECK(phi_s(6, {1.0, 0.0}).real() == doctest::Approx(2.0).epsilon(1e-12));
    CHECK(phi_s(6, {2.0, 0.0}).real() == doctest::Approx(24.0).epsilon(1e-12));
    for (std::uint64_t n = 1; n <= 1000; ++n) {
        std::complex<double> v = phi_s(n, {1.0, 0.0});
        CHECK(std::abs(v.real() - double(euler_phi(n))) < 1e-12 * std::max(1.0, v.real()));
        CHECK(std::abs(v.imag()) < 1e-12);
    }
}

TEST_CASE("sawtooth examples, periodicity and range") {
    CHECK(sawtooth(0.5) == doctest::Approx(0.0));
    CHECK(sawtooth(7.0) == doctest::Approx(-0.5));
    CHECK(sawtooth(1.25) == doctest::Approx(-0.25));
    CHECK(sawtooth(-3.0) == doctest::Approx(-0.5));  // floor convention at integers

    std::mt19937_64 rng(7);
    std::uniform_real_distribution<double> dist(-1e4, 1e4);
    for (int i = 0; i < 10000; ++i) {
        double t = dist(rng);
        CHECK(sawtooth(t + 1.0) == doctest::Approx(sawtooth(t)).epsilon(1e-9));
        CHECK(sawtooth(t) >= -0.5);
        CHECK(sawtooth(t) < 0.5);
    }
}

TEST_CASE("factorize via sieve chain") {
    SieveTables t = build_sieve(1000);
    Factorization one = factorize(1, t);
    CHECK(one.factors.empty());

    Factorization f12 = factorize(12, t);
    REQUIRE(f12.factors.size() == 2);
    CHECK(f12.factors[0] == PrimePower{2, 2});
    CHECK(f12.factors[1] == PrimePower{3, 1});

    Factorization f97 = factorize(97, t);
    REQUIRE(f97.factors.size() == 1);
    CHECK(f97.factors[0] == PrimePower{97, 1});

    CHECK_THROWS_AS(factorize(1001, t), RangeError);

    // invariants: product restores n, primes strictly increasing
    for (std::uint64_t n = 1; n <= 1000; ++n) {
        Factorization f = factorize(n, t);
        std::uint64_t prod = 1;
        std::uint64_t last_prime = 0;
        for (const auto& pp : f.factors) {
            CHECK(pp.prime > last_prime);
            CHECK(pp.exponent >= 1);
            last_prime = pp.prime;
            for (std::uint32_t e = 0; e < pp.exponent; ++e) prod *= pp.prime;
        }
        CHECK(prod == n);
        Factorization g = factorize(n);  // trial-division route agrees
        CHECK(f.factors.size() == g.factors.size());
        for (std::size_t i = 0; i < f.factors.size(); ++i) CHECK(f.factors[i] == g.factors[i]);
    }
}
