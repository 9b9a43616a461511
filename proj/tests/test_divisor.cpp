#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include <numeric>
#include <random>

#include "cohen/divisor.hpp"
#include "oracles.hpp"

using namespace cohen;

TEST_CASE("sigma_z_beta examples") {
    CHECK(sigma_z_beta(6, {0, 0}, 1).real() == doctest::Approx(4.0));   // d(6)
    CHECK(sigma_z_beta(4, {0, 0}, 2).real() == doctest::Approx(2.0));   // d in {1, 2}
    CHECK(sigma_z_beta(4, {-1, 0}, 1).real() == doctest::Approx(1.75));
    CHECK(sigma_z_beta(1, {0.3, -0.7}, 3) == std::complex<double>(1.0, 0.0));
}

TEST_CASE("sigma_z_beta against the definition oracle") {
    std::mt19937_64 rng(5);
    std::uniform_real_distribution<double> re(-1.0, 0.0), im(-1.0, 1.0);
    for (std::uint32_t beta : {1u, 2u, 3u}) {
        for (int rep = 0; rep < 4; ++rep) {
            std::complex<double> z{re(rng), im(rng)};
            for (std::uint64_t n = 1; n <= 200; ++n) {
                std::complex<double> got = sigma_z_beta(n, z, beta);
                std::complex<double> want = oracles::brute_sigma(n, z, beta);
                CHECK(std::abs(got - want) < 1e-10 * (1.0 + std::abs(want)));
            }
        }
    }
}

TEST_CASE("multiplicativity for coprime arguments") {
    std::mt19937_64 rng(6);
    std::uniform_real_distribution<double> re(-1.0, 0.0), im(-0.5, 0.5);
    std::uniform_int_distribution<std::uint64_t> ms(1, 100);
    for (std::uint32_t beta : {1u, 2u}) {
        int checked = 0;
        while (checked < 300) {
            std::uint64_t m = ms(rng), n = ms(rng);
            if (std::gcd(m, n) != 1) continue;
            std::complex<double> z{re(rng), im(rng)};
            std::complex<double> lhs = sigma_z_beta(m * n, z, beta);
            std::complex<double> rhs = sigma_z_beta(m, z, beta) * sigma_z_beta(n, z, beta);
            CHECK(std::abs(lhs - rhs) < 1e-9 * (1.0 + std::abs(rhs)));
            ++checked;
        }
    }
}

TEST_CASE("conjugation symmetry") {
    std::mt19937_64 rng(8);
    std::uniform_real_distribution<double> re(-1.5, 0.5), im(-2.0, 2.0);
    for (int rep = 0; rep < 50; ++rep) {
        std::complex<double> z{re(rng), im(rng)};
        std::uint64_t n = 1 + rep * 7;
        std::complex<double> a = sigma_z_beta(n, std::conj(z), 1);
        std::complex<double> b = std::conj(sigma_z_beta(n, z, 1));
        CHECK(std::abs(a - b) < 1e-12 * (1.0 + std::abs(b)));
    }
}

TEST_CASE("bound: |sigma_{z,beta}(n)| <= sigma_{0,beta}(n) for Re z <= 0") {
    std::mt19937_64 rng(9);
    std::uniform_real_distribution<double> re(-2.0, 0.0), im(-3.0, 3.0);
    for (std::uint32_t beta : {1u, 2u}) {
        for (int rep = 0; rep < 200; ++rep) {
            std::uint64_t n = 1 + (rng() % 2000);
            std::complex<double> z{re(rng), im(rng)};
            double lhs = std::abs(sigma_z_beta(n, z, beta));
            double rhs = sigma_z_beta(n, {0, 0}, beta).real();
            CHECK(lhs <= rhs + 1e-9);
        }
    }
}

TEST_CASE("sigma_table examples") {
    std::vector<std::complex<double>> t1 = sigma_table(1, {-0.3, 0.4}, 2);
    REQUIRE(t1.size() == 2);
    CHECK(std::abs(t1[1] - std::complex<double>(1, 0)) < 1e-15);

    std::vector<std::complex<double>> t2 = sigma_table(4, {0, 0}, 2);
    CHECK(t2[1].real() == doctest::Approx(1));
    CHECK(t2[2].real() == doctest::Approx(1));
    CHECK(t2[3].real() == doctest::Approx(1));
    CHECK(t2[4].real() == doctest::Approx(2));

    std::vector<std::complex<double>> t3 = sigma_table(6, {0, 0}, 1);
    const double want[7] = {0, 1, 2, 2, 3, 2, 4};
    for (int n = 1; n <= 6; ++n) CHECK(t3[n].real() == doctest::Approx(want[n]));
}

TEST_CASE("table and pointwise evaluation agree") {
    std::mt19937_64 rng(10);
    std::uniform_real_distribution<double> re(-1.0, 0.0), im(-1.0, 1.0);
    for (int rep = 0; rep < 3; ++rep) {
        std::complex<double> z{re(rng), im(rng)};
        std::uint32_t beta = 1 + rep;
        std::vector<std::complex<double>> table = sigma_table(10000, z, beta);
        for (std::uint64_t n = 1; n <= 10000; ++n) {
            std::complex<double> want = sigma_z_beta(n, z, beta);
            CHECK(std::abs(table[n] - want) < 1e-9 * (1.0 + std::abs(want)));
        }
    }
}

TEST_CASE("real fast path matches the complex table") {
    std::vector<double> real_t = sigma_table_real(5000, -0.25, 1);
    std::vector<std::complex<double>> cplx_t = sigma_table(5000, {-0.25, 0}, 1);
    for (std::uint64_t n = 1; n <= 5000; ++n) {
        CHECK(real_t[n] == doctest::Approx(cplx_t[n].real()).epsilon(1e-12));
        CHECK(cplx_t[n].imag() == 0.0);
    }
}

TEST_CASE("sigma_pair_table examples") {
    std::vector<std::complex<double>> p1 = sigma_pair_table(1, {0, 0}, {0, 0}, 1);
    CHECK(p1[1].real() == doctest::Approx(1));

    std::vector<std::complex<double>> p2 = sigma_pair_table(4, {0, 0}, {0, 0}, 1);
    const double want[5] = {0, 1, 4, 4, 9};  // d(n)^2
    for (int n = 1; n <= 4; ++n) CHECK(p2[n].real() == doctest::Approx(want[n]));

    std::vector<std::complex<double>> p3 = sigma_pair_table(4, {0, 0}, {-1, 0}, 1);
    CHECK(p3[4].real() == doctest::Approx(3.0 * 1.75));
}

TEST_CASE("table memory cap") {
    CHECK_THROWS_AS(sigma_table(config::memory_cap_entries() + 5, {0, 0}, 1), ResourceError);
}
