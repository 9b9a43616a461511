// Command-line front end: single-query evaluation, Dirichlet-series
// verification, and error-scan campaigns with exponent regression.
//
// Exit codes: 0 success, 1 computation error, 2 usage error,
// 3 numeric-integrity failure.

#include <cmath>
#include <complex>
#include <cstdio>
#include <iostream>
#include <optional>
#include <string>

#include <CLI11.hpp>

#include "cohen/arith.hpp"
#include "cohen/divisor.hpp"
#include "cohen/moments.hpp"
#include "cohen/partial_sums.hpp"
#include "cohen/ramanujan.hpp"
#include "cohen/scan.hpp"
#include "cohen/scan_json.hpp"
#include "cohen/series.hpp"
#include "cohen/textio.hpp"
#include "cohen/zeta.hpp"

namespace {

using namespace cohen;

std::complex<double> require_complex(const std::string& text, const char* flag) {
    if (text.empty()) throw DomainError(std::string("missing required flag ") + flag);
    return parse_complex(text);
}

void print_report(const AsymptoticReport& r) {
    std::printf("exact      = %s\n", format_real(r.exact).c_str());
    std::printf("main       = %s\n", format_real(r.main_term).c_str());
    std::printf("error      = %s\n", format_real(r.error).c_str());
    std::printf("bound      = %s\n", format_real(r.bound_shape).c_str());
    std::printf("normalized = %s\n", format_real(r.normalized_error).c_str());
}

void print_series_check(const SeriesCheck& c) {
    std::printf("truncation = %llu\n", static_cast<unsigned long long>(c.truncation));
    std::printf("sum        = %s\n", format_complex(c.sum).c_str());
    std::printf("reference  = %s\n", format_complex(c.reference).c_str());
    std::printf("residual   = %.12g\n", c.residual);
}

// 0 iff every requested point computed; per-point range flags are fine.
int scan_exit_code(const ScanResult& result) {
    for (const auto& r : result.records) {
        if (r.status != "ok") return 1;
    }
    return 0;
}

int run_app(int argc, char** argv) {
    CLI::App app{"Generalized Ramanujan sums, divisor-function averages and "
                 "their asymptotic main terms"};
    app.require_subcommand(1);

    // ---- csum -----------------------------------------------------------
    auto* csum = app.add_subcommand("csum", "Evaluate c_{q,beta}(n)");
    std::uint64_t c_q = 1, c_n = 1;
    std::uint32_t c_beta = 1;
    std::string c_method = "identity";
    std::uint64_t c_cap = config::kDefaultDirectTermCap;
    csum->add_option("--q", c_q, "modulus base q")->required();
    csum->add_option("--beta", c_beta, "power parameter beta")->default_val(1);
    csum->add_option("--n", c_n, "argument n")->required();
    csum->add_option("--method", c_method, "identity | direct | both")
        ->check(CLI::IsMember({"identity", "direct", "both"}));
    csum->add_option("--cap", c_cap, "direct-method term cap");

    // ---- sigma ----------------------------------------------------------
    auto* sigma = app.add_subcommand("sigma", "Evaluate sigma_{z,beta}(n)");
    std::uint64_t s_n = 1;
    std::uint32_t s_beta = 1;
    std::string s_z = "0";
    sigma->add_option("--n", s_n, "argument n")->required();
    sigma->add_option("--z", s_z, "complex exponent z, as \"a+bi\"");
    sigma->add_option("--beta", s_beta, "power parameter beta")->default_val(1);

    // ---- row ------------------------------------------------------------
    auto* row = app.add_subcommand("row", "Averaged row sum S_beta(x, n) or a full table");
    std::uint64_t r_x = 1, r_n = 0, r_y = 0;
    std::uint32_t r_beta = 1;
    std::string r_out, r_format = "csv";
    row->add_option("--beta", r_beta, "power parameter beta")->default_val(1);
    row->add_option("--x", r_x, "modulus cutoff x")->required();
    row->add_option("--n", r_n, "single argument n");
    row->add_option("--y", r_y, "table cutoff: emit S(n) for n = 1..y");
    row->add_option("--out", r_out, "write table to this path");
    row->add_option("--format", r_format, "csv | json")->check(CLI::IsMember({"csv", "json"}));

    // ---- moment ---------------------------------------------------------
    auto* moment = app.add_subcommand("moment", "Exact moment C_{k,beta}(x, y)");
    std::uint32_t m_k = 1, m_beta = 1;
    std::uint64_t m_x = 1;
    double m_y = 1.0;
    bool m_oracle = false;
    moment->add_option("--k", m_k, "moment order k")->default_val(1);
    moment->add_option("--beta", m_beta, "power parameter beta")->default_val(1);
    moment->add_option("--x", m_x, "modulus cutoff x")->required();
    moment->add_option("--y", m_y, "argument cutoff y (real)")->required();
    moment->add_flag("--oracle", m_oracle, "use the brute-force oracle (x*y <= 1e6)");

    // ---- partial-sum ----------------------------------------------------
    auto* psum = app.add_subcommand("partial-sum", "Primed partial sum of sigma_{z,beta}");
    double p_x = 1.0;
    std::uint32_t p_beta = 1;
    std::string p_z;
    bool p_report = false, p_integer_x = false;
    psum->add_option("--x", p_x, "cutoff x (real)")->required();
    psum->add_option("--z", p_z, "complex exponent z")->required();
    psum->add_option("--beta", p_beta, "power parameter beta")->default_val(1);
    psum->add_flag("--report", p_report, "print the exact/main/error report");
    psum->add_flag("--integer-x", p_integer_x, "treat x as an exact integer");

    // ---- pair-sum -------------------------------------------------------
    auto* qsum = app.add_subcommand("pair-sum",
                                    "Primed partial sum of sigma_{z1,beta} sigma_{z2,beta}");
    double q_x = 1.0;
    std::uint32_t q_beta = 1;
    std::string q_z1, q_z2;
    bool q_report = false, q_integer_x = false;
    qsum->add_option("--x", q_x, "cutoff x (real)")->required();
    qsum->add_option("--z1", q_z1, "first complex exponent")->required();
    qsum->add_option("--z2", q_z2, "second complex exponent")->required();
    qsum->add_option("--beta", q_beta, "power parameter beta")->default_val(1);
    qsum->add_flag("--report", q_report, "print the exact/main/error report");
    qsum->add_flag("--integer-x", q_integer_x, "treat x as an exact integer");

    // ---- zeta -----------------------------------------------------------
    auto* zsub = app.add_subcommand("zeta", "Riemann zeta at complex s != 1");
    std::string z_s;
    int z_terms = 0, z_corrections = 0;
    zsub->add_option("--s", z_s, "argument s, as \"a+bi\"")->required();
    zsub->add_option("--terms", z_terms, "direct-sum cutoff N");
    zsub->add_option("--corrections", z_corrections, "Bernoulli corrections M (even)");

    // ---- verify-series --------------------------------------------------
    auto* vs = app.add_subcommand("verify-series", "Truncated Dirichlet-series residual");
    std::string v_identity;
    std::uint64_t v_n = 1, v_Q = 1000, v_N = 1000;
    std::uint32_t v_beta = 1;
    std::string v_s = "2", v_z = "0", v_z1, v_z2;
    vs->add_option("--identity", v_identity, "cohen | crum | crum-pair | phi")
        ->required()
        ->check(CLI::IsMember({"cohen", "crum", "crum-pair", "phi"}));
    vs->add_option("--n", v_n, "argument n (cohen, phi)");
    vs->add_option("--beta", v_beta, "power parameter beta")->default_val(1);
    vs->add_option("--s", v_s, "series variable s");
    vs->add_option("--z", v_z, "exponent z (crum)");
    vs->add_option("--z1", v_z1, "first exponent (crum-pair)");
    vs->add_option("--z2", v_z2, "second exponent (crum-pair)");
    vs->add_option("--Q", v_Q, "modulus truncation (cohen, phi)");
    vs->add_option("--N", v_N, "argument truncation (crum, crum-pair)");

    // ---- scan -----------------------------------------------------------
    auto* scan = app.add_subcommand("scan", "Error-scan campaign from a JSON config");
    std::string sc_config, sc_out, sc_format = "csv";
    int sc_threads = 0;
    scan->add_option("--config", sc_config, "JSON scan configuration")->required();
    scan->add_option("--out", sc_out, "output path (overrides the config)");
    scan->add_option("--format", sc_format, "csv | json")->check(CLI::IsMember({"csv", "json"}));
    scan->add_option("--threads", sc_threads, "parallelism degree");

    try {
        app.parse(argc, argv);
    } catch (const CLI::CallForHelp& e) {
        return app.exit(e);
    } catch (const CLI::CallForAllHelp& e) {
        return app.exit(e);
    } catch (const CLI::ParseError& e) {
        app.exit(e);
        return 2;
    }

    if (csum->parsed()) {
        const CohenQuery query{c_q, c_beta, c_n};
        if (c_method == "identity") {
            std::printf("%lld\n", static_cast<long long>(cohen_sum_identity(query)));
        } else if (c_method == "direct") {
            std::printf("%lld\n", static_cast<long long>(cohen_sum_direct(query, c_cap)));
        } else {
            const std::int64_t a = cohen_sum_identity(query);
            const std::int64_t b = cohen_sum_direct(query, c_cap);
            std::printf("identity=%lld direct=%lld %s\n", static_cast<long long>(a),
                        static_cast<long long>(b), a == b ? "agree" : "DISAGREE");
            if (a != b) throw NumericIntegrityError("csum: methods disagree");
        }
        return 0;
    }
    if (sigma->parsed()) {
        std::printf("%s\n",
                    format_complex(sigma_z_beta(s_n, require_complex(s_z, "--z"), s_beta)).c_str());
        return 0;
    }
    if (row->parsed()) {
        const SieveTables tables = build_sieve(r_x);
        if (r_y == 0) {
            if (r_n == 0) throw DomainError("row: need --n (single value) or --y (table)");
            std::printf("%lld\n", static_cast<long long>(row_sum(r_beta, r_n, r_x, tables)));
            return 0;
        }
        const std::vector<std::int64_t> table = row_table(r_beta, r_x, r_y, tables);
        std::string out;
        if (r_format == "csv") {
            out = "n,value\n";
            for (std::uint64_t n = 1; n <= r_y; ++n) {
                out += std::to_string(n) + "," + std::to_string(table[n]) + "\n";
            }
        } else {
            nlohmann::json j = nlohmann::json::array();
            for (std::uint64_t n = 1; n <= r_y; ++n) {
                j.push_back({{"n", n}, {"value", table[n]}});
            }
            out = j.dump(2) + "\n";
        }
        if (r_out.empty()) {
            std::fputs(out.c_str(), stdout);
        } else {
            write_file_atomic(r_out, out);
        }
        return 0;
    }
    if (moment->parsed()) {
        const MomentQuery query{m_k, m_beta, m_x, m_y};
        i128 value;
        if (m_oracle) {
            value = moment_brute(query);
        } else {
            const SieveTables tables = build_sieve(m_x);
            value = moment_exact(query, tables);
        }
        std::printf("%s\n", i128_to_string(value).c_str());
        return 0;
    }
    if (psum->parsed()) {
        if (p_integer_x) p_x = std::nearbyint(p_x);
        const PartialSumQuery query{p_x, p_beta, require_complex(p_z, "--z"), std::nullopt};
        if (p_report) {
            print_report(delta_report(SumKind::single, query));
        } else {
            std::printf("%s\n", format_complex(sigma_partial_exact(query)).c_str());
        }
        return 0;
    }
    if (qsum->parsed()) {
        if (q_integer_x) q_x = std::nearbyint(q_x);
        const PartialSumQuery query{q_x, q_beta, require_complex(q_z1, "--z1"),
                                    require_complex(q_z2, "--z2")};
        if (q_report) {
            print_report(delta_report(SumKind::pair, query));
        } else {
            std::printf("%s\n", format_complex(sigma_pair_partial_exact(query)).c_str());
        }
        return 0;
    }
    if (zsub->parsed()) {
        const std::complex<double> s = require_complex(z_s, "--s");
        ZetaConfig cfg = default_zeta_config(s);
        if (z_terms > 0) cfg.series_terms = z_terms;
        if (z_corrections > 0) cfg.correction_terms = z_corrections;
        std::printf("%s\n", format_complex(zeta(s, cfg)).c_str());
        return 0;
    }
    if (vs->parsed()) {
        SeriesCheck check{};
        if (v_identity == "cohen") {
            const SieveTables tables = build_sieve(v_Q);
            check = verify_cohen_series(v_n, v_beta, require_complex(v_s, "--s"), v_Q, tables);
        } else if (v_identity == "crum") {
            check = verify_crum_single(require_complex(v_z, "--z"), v_beta,
                                       require_complex(v_s, "--s"), v_N);
        } else if (v_identity == "crum-pair") {
            check = verify_crum_pair(require_complex(v_z1, "--z1"), require_complex(v_z2, "--z2"),
                                     v_beta, require_complex(v_s, "--s"), v_N);
        } else {
            const SieveTables tables = build_sieve(v_Q);
            check = verify_phi_series(v_n, require_complex(v_s, "--s").real(), v_Q, tables);
        }
        print_series_check(check);
        return 0;
    }
    if (scan->parsed()) {
        ScanConfig cfg = load_scan_config(sc_config);
        if (!sc_out.empty()) cfg.output_path = sc_out;
        if (sc_threads > 0) cfg.threads = sc_threads;
        if (sc_format == "json") {
            const std::string out_path = cfg.output_path;
            cfg.output_path.clear();  // JSON requested: no CSV side file
            ScanResult result = run_scan(cfg);
            const std::string payload = scan_to_json(result).dump(2) + "\n";
            if (out_path.empty()) {
                std::fputs(payload.c_str(), stdout);
            } else {
                write_file_atomic(out_path, payload);
            }
            return scan_exit_code(result);
        }
        ScanResult result = run_scan(cfg);
        if (cfg.output_path.empty()) std::fputs(scan_to_csv(result.records).c_str(), stdout);
        std::fprintf(stderr, "points=%zu used=%d slope=%s max_normalized=%s\n",
                     result.records.size(), result.regression.points_used,
                     format_real(result.regression.slope).c_str(),
                     format_real(result.regression.max_normalized_error).c_str());
        return scan_exit_code(result);
    }
    return 0;
}

}  // namespace

int main(int argc, char** argv) {
    try {
        return run_app(argc, argv);
    } catch (const cohen::NumericIntegrityError& e) {
        std::cerr << "numeric-integrity error: " << e.what() << "\n";
        return 3;
    } catch (const cohen::Error& e) {
        std::cerr << "error: " << e.what() << "\n";
        return 1;
    } catch (const std::exception& e) {
        std::cerr << "error: " << e.what() << "\n";
        return 1;
    }
}
