// Acceptance suite: runs every criterion at its stated tolerance and prints
// one PASS/FAIL line per criterion. Exit code is the number of failures.

#include <chrono>
#include <cmath>
#include <complex>
#include <cstdio>
#include <fstream>
#include <numbers>
#include <random>
#include <sstream>
#include <string>
#include <vector>

#include "cohen/moments.hpp"
#include "cohen/partial_sums.hpp"
#include "cohen/ramanujan.hpp"
#include "cohen/scan.hpp"
#include "cohen/series.hpp"
#include "cohen/zeta.hpp"
#include "oracles.hpp"

using namespace cohen;

namespace {

int g_failures = 0;

void report(int index, const char* name, bool pass, const std::string& detail) {
    std::printf("[%s] criterion %2d: %s%s%s\n", pass ? "PASS" : "FAIL", index, name,
                detail.empty() ? "" : " -- ", detail.c_str());
    std::fflush(stdout);
    if (!pass) ++g_failures;
}

template <typename Fn>
void run_criterion(int index, const char* name, Fn&& fn) {
    const auto t0 = std::chrono::steady_clock::now();
    bool pass = false;
    std::string detail;
    try {
        pass = fn(detail);
    } catch (const std::exception& e) {
        detail = std::string("exception: ") + e.what();
    }
    const double secs =
        std::chrono::duration<double>(std::chrono::steady_clock::now() - t0).count();
    char buf[64];
    std::snprintf(buf, sizeof(buf), " [%.1fs]", secs);
    report(index, name, pass, detail + buf);
}

std::string fmt(const char* f, double v) {
    char buf[64];
    std::snprintf(buf, sizeof(buf), f, v);
    return buf;
}

std::string strip_timing_column(const std::string& csv) {
    std::istringstream in(csv);
    std::string out, line;
    while (std::getline(in, line)) {
        out += line.substr(0, line.rfind(','));
        out += '\n';
    }
    return out;
}

// 1. cohen_sum_direct = cohen_sum_identity for q <= 128, n <= 128,
//    beta in {1,2,3}; ~49k cases, exact.
bool criterion_method_equivalence(std::string& detail) {
    const std::uint64_t term_cap = 4'000'000;  // q = 128, beta = 3 needs 2^21 terms
    long cases = 0, bad = 0;
    for (std::uint32_t beta : {1u, 2u, 3u}) {
        for (std::uint64_t q = 1; q <= 128; ++q) {
            const std::vector<std::int64_t> direct = cohen_sum_direct_row(q, beta, 128, term_cap);
            for (std::uint64_t n = 1; n <= 128; ++n) {
                ++cases;
                if (direct[n] != cohen_sum_identity({q, beta, n})) ++bad;
            }
        }
    }
    detail = std::to_string(cases - bad) + "/" + std::to_string(cases) + " exact matches";
    return bad == 0;
}

// 2. c_q(1) = mu(q) and c_q(q) = phi(q) for q <= 2000, exact.
bool criterion_classical_values(std::string& detail) {
    long bad = 0;
    for (std::uint64_t q = 1; q <= 2000; ++q) {
        if (cohen_sum_identity({q, 1, 1}) != mobius(q)) ++bad;
        if (cohen_sum_identity({q, 1, q}) != std::int64_t(euler_phi(q))) ++bad;
    }
    detail = "q <= 2000, both identities" + std::string(bad ? " with mismatches" : "");
    return bad == 0;
}

// 3. c_{q,beta}(n) c_{r,beta}(n) = c_{qr,beta}(n) for coprime q, r <= 60,
//    n <= 200, beta in {1,2}, exact.
bool criterion_multiplicativity(std::string& detail) {
    long cases = 0, bad = 0;
    for (std::uint64_t q = 1; q <= 60; ++q) {
        for (std::uint64_t r = q; r <= 60; ++r) {
            if (std::gcd(q, r) != 1) continue;
            for (std::uint32_t beta : {1u, 2u}) {
                for (std::uint64_t n = 1; n <= 200; ++n) {
                    ++cases;
                    const std::int64_t a = cohen_sum_identity({q, beta, n});
                    const std::int64_t b = cohen_sum_identity({r, beta, n});
                    if (a * b != cohen_sum_identity({q * r, beta, n})) ++bad;
                }
            }
        }
    }
    detail = std::to_string(cases) + " coprime cases";
    return bad == 0;
}

// 4. moment_exact = moment_brute on a 200-sample grid, exact.
bool criterion_moment_oracle(std::string& detail) {
    const SieveTables tables = build_sieve(40);
    std::mt19937_64 rng(0xC0FFEE);
    std::uniform_int_distribution<std::uint64_t> xd(1, 40), yd(1, 400);
    std::uniform_int_distribution<std::uint32_t> kd(1, 3), bd(1, 2);
    long bad = 0;
    for (int i = 0; i < 196; ++i) {
        const MomentQuery q{kd(rng), bd(rng), xd(rng), double(yd(rng))};
        if (moment_exact(q, tables) != moment_brute(q)) ++bad;
    }
    // corner samples
    for (std::uint32_t k : {1u, 3u}) {
        for (std::uint32_t beta : {1u, 2u}) {
            const MomentQuery q{k, beta, 40, 400.0};
            if (moment_exact(q, tables) != moment_brute(q)) ++bad;
        }
    }
    detail = "200 samples, exact integer equality";
    return bad == 0;
}

// 5. Appendix decomposition reproduces the first moment; zero error on the
//    integer-y exact path.
bool criterion_appendix(std::string& detail) {
    const SieveTables tables = build_sieve(100);
    long bad = 0, cases = 0;
    for (std::uint32_t beta : {1u, 2u, 3u}) {
        for (std::uint64_t x = 1; x <= 100; ++x) {
            for (double y : {1000.0, 1000.5, 12345.0}) {
                ++cases;
                const AppendixParts p = appendix_decomposition(beta, x, y, tables);
                const i128 exact = moment_exact({1, beta, x, y}, tables);
                const double total = p.c1 + p.c2 + p.c3;
                const double tol = 1e-6 * (1.0 + std::abs(i128_to_double(exact)));
                if (std::abs(total - i128_to_double(exact)) > tol) ++bad;
                if (p.exact_path) {
                    const i128 two_c1 = 2 * i128(std::int64_t(y)) * p.mu_total;
                    if (two_c1 + p.two_c2 + p.two_c3 != 2 * exact) ++bad;
                }
            }
        }
    }
    detail = std::to_string(cases) + " decompositions, exact on integer y";
    return bad == 0;
}

// 6. zeta closed forms to 1e-12 and eta-oracle agreement to 1e-10 on the grid.
bool criterion_zeta(std::string& detail) {
    using std::numbers::pi;
    double worst = 0.0;
    bool ok = std::abs(zeta_real(2.0) - pi * pi / 6.0) <= 1e-12 &&
              std::abs(zeta_real(4.0) - pi * pi * pi * pi / 90.0) <= 1e-12;
    const double res[10] = {0.2, 0.5, 0.8, 1.2, 1.5, 1.9, 2.2, 2.5, 2.8, 3.0};
    const double ims[5] = {-20.0, -7.0, 0.0, 7.0, 20.0};
    for (double re : res) {
        for (double im : ims) {
            const std::complex<double> s{re, im};
            worst = std::max(worst, std::abs(zeta(s) - oracles::eta_zeta(s)));
        }
    }
    ok = ok && worst <= 1e-10;
    detail = "closed forms to 1e-12, oracle gap " + fmt("%.2e", worst) + " on 50 points";
    return ok;
}

// 7. Each Dirichlet-series identity: strictly decreasing residuals across
//    {1e2, 1e3, 1e4, 1e5} and final residual <= 1e-3.
bool criterion_series(std::string& detail) {
    const SieveTables tables = build_sieve(100000);
    const std::vector<std::uint64_t> ladder{100, 1000, 10000, 100000};
    bool ok = true;
    double finals[4] = {0, 0, 0, 0};
    auto run_ladder = [&](int which, auto&& residual_at) {
        double prev = -1.0;
        for (std::uint64_t t : ladder) {
            const double r = residual_at(t);
            if (prev >= 0.0 && !(r < prev)) ok = false;
            prev = r;
        }
        finals[which] = prev;
        if (!(prev <= 1e-3)) ok = false;
    };
    run_ladder(0, [&](std::uint64_t t) {
        return verify_cohen_series(12, 1, {2.0, 0.0}, t, tables).residual;
    });
    run_ladder(1, [&](std::uint64_t t) {
        return verify_crum_single({0, 0}, 1, {3.0, 0.0}, t).residual;
    });
    run_ladder(2, [&](std::uint64_t t) {
        return verify_crum_pair({0, 0}, {0, 0}, 1, {3.0, 0.0}, t).residual;
    });
    run_ladder(3, [&](std::uint64_t t) {
        return verify_phi_series(1, 1.0, t, tables).residual;
    });
    detail = "final residuals " + fmt("%.1e", finals[0]) + ", " + fmt("%.1e", finals[1]) + ", " +
             fmt("%.1e", finals[2]) + ", " + fmt("%.1e", finals[3]);
    return ok;
}

ScanConfig thm4_config() {
    ScanConfig cfg;
    cfg.target = Theorem::thm4;
    cfg.beta = 1;
    cfg.z1 = std::complex<double>(-0.25, 0.0);
    for (int e = 10; e <= 20; ++e) cfg.x_grid.push_back(std::uint64_t(1) << e);
    return cfg;
}

// 8. thm4 scan (single sigma partial sum) at beta = 1, z = -1/4 over
//    {2^10..2^20}:
//    max |Delta|/(x^{1/3} log^2 x) <= 5 and fitted slope <= 0.40.
bool criterion_thm4_scan(std::string& detail) {
    ScanConfig cfg = thm4_config();
    cfg.output_path = "acceptance_thm4.csv";
    const ScanResult res = run_scan(cfg);
    bool all_ok = true;
    for (const auto& r : res.records) all_ok = all_ok && r.status == "ok";
    const double max_norm = res.regression.max_normalized_error;
    const double slope = res.regression.slope;
    detail = "max normalized " + fmt("%.4f", max_norm) + " (<= 5), slope " +
             fmt("%.4f", slope) + " (<= 0.40)";
    return all_ok && max_norm <= 5.0 && slope <= 0.40;
}

// 9. thm5 scan (sigma-pair partial sum) at beta = 1, z1 = -0.1, z2 = -0.2,
//    grid up to 1e6:
//    fitted slope <= 0.55 and normalized error <= 10.
bool criterion_thm5_scan(std::string& detail) {
    ScanConfig cfg;
    cfg.target = Theorem::thm5;
    cfg.beta = 1;
    cfg.z1 = std::complex<double>(-0.1, 0.0);
    cfg.z2 = std::complex<double>(-0.2, 0.0);
    cfg.x_grid = {1u << 14, 1u << 15, 1u << 16, 1u << 17, 1u << 18, 1u << 19, 1000000};
    const ScanResult res = run_scan(cfg);
    bool all_ok = true;
    for (const auto& r : res.records) all_ok = all_ok && r.status == "ok";
    detail = "slope " + fmt("%.4f", res.regression.slope) + " (<= 0.55), max normalized " +
             fmt("%.2e", res.regression.max_normalized_error) + " (<= 10)";
    return all_ok && res.regression.slope <= 0.55 &&
           res.regression.max_normalized_error <= 10.0;
}

// 10. thm2 scan (first moment) at beta = 1, x in {50,100,150,200},
//     y = floor(x^1.5 log^5 x): normalized <= 10 everywhere and
//     |exact - main| / main <= 1e-3 at x = 200.
bool criterion_thm2_scan(std::string& detail) {
    ScanConfig cfg;
    cfg.target = Theorem::thm2;
    cfg.beta = 1;
    cfg.x_grid = {50, 100, 150, 200};
    cfg.y_rule = "floor(x^1.5*log(x)^5)";
    const ScanResult res = run_scan(cfg);
    bool ok = true;
    double rel200 = 0.0;
    for (const auto& r : res.records) {
        ok = ok && r.status == "ok" && r.normalized_error <= 10.0 && r.in_range;
        if (r.x == 200) rel200 = std::abs(r.error) / r.main_term;
    }
    ok = ok && rel200 <= 1e-3;
    detail = "max normalized " + fmt("%.2e", res.regression.max_normalized_error) +
             ", relative gap at x=200 " + fmt("%.2e", rel200) + " (<= 1e-3)";
    return ok;
}

// 11. thm3 scan (second moment) at beta = 1, x in {20,30,40,60},
//     y = floor(x^2.5):
//     relative error decreasing along the grid and <= 0.10 at x = 60.
bool criterion_thm3_scan(std::string& detail) {
    ScanConfig cfg;
    cfg.target = Theorem::thm3;
    cfg.beta = 1;
    cfg.x_grid = {20, 30, 40, 60};
    cfg.y_rule = "floor(x^2.5)";
    const ScanResult res = run_scan(cfg);
    bool ok = true;
    double prev = std::numeric_limits<double>::infinity(), last = 0.0;
    for (const auto& r : res.records) {
        ok = ok && r.status == "ok" && r.in_range;
        const double rel = std::abs(r.error) / r.main_term;
        if (!(rel < prev)) ok = false;
        prev = rel;
        last = rel;
    }
    ok = ok && last <= 0.10;
    detail = "relative errors decreasing to " + fmt("%.4f", last) + " (<= 0.10)";
    return ok;
}

// 12. prop1 sanity (k-th moment main term): k = 3, beta = 1, x = 5, y = 2e5:
//     |C3 - A3| / A3 <= 0.25.
bool criterion_prop1(std::string& detail) {
    const SieveTables tables = build_sieve(5);
    const MomentQuery q{3, 1, 5, 2e5};
    const i128 c3 = moment_exact(q, tables);
    const double a3 = main_term_prop1(q);
    const double rel = std::abs(i128_to_double(c3) - a3) / a3;
    detail = "C3 = " + i128_to_string(c3) + ", A3 = " + fmt("%.1f", a3) + ", relative " +
             fmt("%.4f", rel) + " (<= 0.25)";
    return rel <= 0.25;
}

// 13. Criterion-8 scan reruns are byte-identical modulo the timing column,
//     including under different parallelism degrees.
bool criterion_determinism(std::string& detail) {
    ScanConfig cfg = thm4_config();
    cfg.threads = 1;
    const std::string a = strip_timing_column(scan_to_csv(run_scan(cfg).records));
    const std::string b = strip_timing_column(scan_to_csv(run_scan(cfg).records));
    cfg.threads = 2;
    const std::string c = strip_timing_column(scan_to_csv(run_scan(cfg).records));

    // the CSV written during criterion 8 must agree as well
    std::ifstream f("acceptance_thm4.csv");
    std::stringstream buf;
    buf << f.rdbuf();
    const std::string d = strip_timing_column(buf.str());
    std::remove("acceptance_thm4.csv");

    const bool ok = a == b && a == c && a == d;
    detail = ok ? "byte-identical across reruns and 1-vs-2 threads" : "CSV outputs differ";
    return ok;
}

}  // namespace

int main() {
    std::printf("acceptance suite: generalized Ramanujan sum moments\n");
    run_criterion(1, "method equivalence (direct vs identity)", criterion_method_equivalence);
    run_criterion(2, "classical values c_q(1) = mu, c_q(q) = phi", criterion_classical_values);
    run_criterion(3, "multiplicativity in q", criterion_multiplicativity);
    run_criterion(4, "moment oracle equality", criterion_moment_oracle);
    run_criterion(5, "appendix decomposition", criterion_appendix);
    run_criterion(6, "zeta engine accuracy", criterion_zeta);
    run_criterion(7, "Dirichlet series residual decay", criterion_series);
    run_criterion(8, "sigma partial-sum scan (thm4)", criterion_thm4_scan);
    run_criterion(9, "sigma-pair partial-sum scan (thm5)", criterion_thm5_scan);
    run_criterion(10, "first-moment scan (thm2)", criterion_thm2_scan);
    run_criterion(11, "second-moment scan (thm3)", criterion_thm3_scan);
    run_criterion(12, "k-th moment main-term sanity (prop1)", criterion_prop1);
    run_criterion(13, "scan determinism", criterion_determinism);
    std::printf("%d/13 criteria passed\n", 13 - g_failures);
    return g_failures;
}
