#pragma once

#include <algorithm>
#include <atomic>
#include <cctype>
#include <chrono>
#include <cmath>
#include <complex>
#include <cstdint>
#include <cstdio>
#include <fstream>
#include <functional>
#include <limits>
#include <memory>
#include <optional>
#include <string>
#include <thread>
#include <vector>

#include "cohen/errors.hpp"
#include "cohen/moments.hpp"
#include "cohen/partial_sums.hpp"
#include "cohen/textio.hpp"

namespace cohen {

// Tiny expression language for y-rules: multiply, power, log, floor over x.
// Examples: "floor(x^1.5*log(x)^5)", "x^2.5", "2*x".
namespace yrule {

using Fn = std::function<double(double)>;

class Parser {
public:
    static Fn parse(std::string_view text) {
        Parser p(text);
        Fn f = p.expr();
        p.skip_ws();
        if (p.pos_ != p.src_.size()) {
            throw DomainError("y_rule: trailing input at '" + std::string(p.src_.substr(p.pos_)) + "'");
        }
        return f;
    }

private:
    explicit Parser(std::string_view src) : src_(src) {}

    std::string_view src_;
    std::size_t pos_ = 0;

    void skip_ws() {
        while (pos_ < src_.size() && (src_[pos_] == ' ' || src_[pos_] == '\t')) ++pos_;
    }
    bool consume(char c) {
        skip_ws();
        if (pos_ < src_.size() && src_[pos_] == c) {
            ++pos_;
            return true;
        }
        return false;
    }
    void expect(char c) {
        if (!consume(c)) throw DomainError(std::string("y_rule: expected '") + c + "'");
    }

    Fn expr() {
        Fn left = unit();
        while (consume('*')) {
            Fn right = unit();
            left = [left, right](double x) { return left(x) * right(x); };
        }
        return left;
    }

    Fn unit() {
        Fn base = atom();
        if (consume('^')) {
            Fn exponent = atom();
            return [base, exponent](double x) { return std::pow(base(x), exponent(x)); };
        }
        return base;
    }

    Fn atom() {
        skip_ws();
        if (pos_ >= src_.size()) throw DomainError("y_rule: unexpected end of input");
        const char c = src_[pos_];
        if (c == '(') {
            ++pos_;
            Fn inner = expr();
            expect(')');
            return inner;
        }
        if (std::isdigit(static_cast<unsigned char>(c)) || c == '.') {
            std::size_t start = pos_;
            while (pos_ < src_.size() &&
                   (std::isdigit(static_cast<unsigned char>(src_[pos_])) || src_[pos_] == '.')) {
                ++pos_;
            }
            const double v = std::stod(std::string(src_.substr(start, pos_ - start)));
            return [v](double) { return v; };
        }
        if (src_.substr(pos_).rfind("log", 0) == 0) {
            pos_ += 3;
            // "log(expr)" or "log x" style with parentheses required.
            expect('(');
            Fn inner = expr();
            expect(')');
            return [inner](double x) { return std::log(inner(x)); };
        }
        if (src_.substr(pos_).rfind("floor", 0) == 0) {
            pos_ += 5;
            expect('(');
            Fn inner = expr();
            expect(')');
            return [inner](double x) { return std::floor(inner(x)); };
        }
        if (c == 'x') {
            ++pos_;
            return [](double x) { return x; };
        }
        throw DomainError("y_rule: unexpected character '" + std::string(1, c) + "'");
    }
};

inline Fn parse(std::string_view text) { return Parser::parse(text); }

}  // namespace yrule

struct ScanConfig {
    Theorem target;
    std::uint32_t beta = 1;
    std::uint32_t k = 1;  // moment order, prop1 only
    std::optional<std::complex<double>> z1;
    std::optional<std::complex<double>> z2;
    std::vector<std::uint64_t> x_grid;
    std::string y_rule;       // required for prop1 / thm2 / thm3
    std::string output_path;  // CSV written here when nonempty
    int threads = 1;
};

struct ScanRecord {
    std::uint64_t x = 0;
    double y = 0.0;
    std::string exact;  // exact integers verbatim, reals at full precision
    double main_term = 0.0;
    double error = 0.0;
    double bound_shape = 0.0;
    double normalized_error = 0.0;
    bool in_range = false;
    std::string status = "ok";
    double wall_time_ms = 0.0;
};

struct RegressionResult {
    double slope = std::numeric_limits<double>::quiet_NaN();
    double intercept = std::numeric_limits<double>::quiet_NaN();
    double max_normalized_error = 0.0;
    int points_used = 0;
};

struct ScanResult {
    std::vector<ScanRecord> records;
    RegressionResult regression;
};

namespace detail {

inline const char* error_status(const std::exception& e) {
    if (dynamic_cast<const ExcludedParameterError*>(&e)) return "excluded_parameter";
    if (dynamic_cast<const DegenerateParameterError*>(&e)) return "degenerate_parameter";
    if (dynamic_cast<const RegionError*>(&e)) return "region_error";
    if (dynamic_cast<const ResourceError*>(&e)) return "resource_error";
    if (dynamic_cast<const RangeError*>(&e)) return "range_error";
    if (dynamic_cast<const OverflowError*>(&e)) return "overflow_error";
    if (dynamic_cast<const NumericIntegrityError*>(&e)) return "numeric_integrity";
    if (dynamic_cast<const PoleError*>(&e)) return "pole_error";
    if (dynamic_cast<const ScaleError*>(&e)) return "scale_error";
    if (dynamic_cast<const DomainError*>(&e)) return "domain_error";
    return "error";
}

// Least squares of log|error| against log x over the usable points.
inline RegressionResult regress(const std::vector<ScanRecord>& records) {
    RegressionResult r;
    double sx = 0, sy = 0, sxx = 0, sxy = 0;
    int n = 0;
    for (const auto& rec : records) {
        if (rec.status != "ok") continue;
        r.max_normalized_error = std::max(r.max_normalized_error, rec.normalized_error);
        if (rec.error == 0.0) continue;  // log undefined; dropped and counted out
        const double lx = std::log(static_cast<double>(rec.x));
        const double le = std::log(std::max(std::abs(rec.error), 1e-300));
        sx += lx;
        sy += le;
        sxx += lx * lx;
        sxy += lx * le;
        ++n;
    }
    r.points_used = n;
    if (n >= 2) {
        const double denom = n * sxx - sx * sx;
        if (denom != 0.0) {
            r.slope = (n * sxy - sx * sy) / denom;
            r.intercept = (sy - r.slope * sx) / n;
        }
    }
    return r;
}

inline std::string csv_line(const ScanRecord& r) {
    std::string line;
    line += std::to_string(r.x);
    line += ',';
    line += csv_double(r.y);
    line += ',';
    line += r.exact;
    line += ',';
    line += csv_double(r.main_term);
    line += ',';
    line += csv_double(r.error);
    line += ',';
    line += csv_double(r.bound_shape);
    line += ',';
    line += csv_double(r.normalized_error);
    line += ',';
    line += r.in_range ? '1' : '0';
    line += ',';
    line += r.status;
    line += ',';
    char buf[32];
    std::snprintf(buf, sizeof(buf), "%.3f", r.wall_time_ms);
    line += buf;
    return line;
}

}  // namespace detail

inline constexpr const char* kScanCsvHeader =
    "x,y,exact,main,error,bound,normalized,in_range,status,wall_time_ms";

inline std::string scan_to_csv(const std::vector<ScanRecord>& records) {
    std::string out = kScanCsvHeader;
    out += '\n';
    for (const auto& r : records) {
        out += detail::csv_line(r);
        out += '\n';
    }
    return out;
}

// Write-then-rename so a failed run never leaves a truncated CSV behind.
inline void write_file_atomic(const std::string& path, const std::string& content) {
    const std::string tmp = path + ".tmp";
    {
        std::ofstream f(tmp, std::ios::binary | std::ios::trunc);
        if (!f) throw Error("cannot open " + tmp + " for writing");
        f << content;
        if (!f.good()) throw Error("write failed for " + tmp);
    }
    if (std::rename(tmp.c_str(), path.c_str()) != 0) {
        throw Error("rename failed for " + path);
    }
}

inline ScanResult run_scan(const ScanConfig& cfg) {
    // Config-level validation aborts; per-point failures only mark the row.
    if (cfg.beta < 1) throw DomainError("scan: beta must be >= 1");
    if (cfg.x_grid.size() < 3) throw DomainError("scan: x_grid needs at least 3 points");
    for (std::size_t i = 1; i < cfg.x_grid.size(); ++i) {
        if (cfg.x_grid[i] <= cfg.x_grid[i - 1]) {
            throw DomainError("scan: x_grid must be strictly increasing");
        }
    }
    const bool moment_target = cfg.target == Theorem::prop1 || cfg.target == Theorem::thm2 ||
                               cfg.target == Theorem::thm3;
    yrule::Fn rule;
    if (moment_target) {
        if (cfg.y_rule.empty()) throw DomainError("scan: this target requires a y_rule");
        rule = yrule::parse(cfg.y_rule);
        for (std::uint64_t x : cfg.x_grid) {
            const double y = rule(static_cast<double>(x));
            if (!(y >= static_cast<double>(x))) {
                throw DomainError("scan: y_rule must yield y >= x at every grid point");
            }
        }
    } else {
        if (!cfg.z1.has_value()) throw DomainError("scan: thm4/thm5 require z parameters");
        if (cfg.target == Theorem::thm5 && !cfg.z2.has_value()) {
            throw DomainError("scan: thm5 requires z2");
        }
        if (cfg.z1->imag() != 0.0 || (cfg.z2 && cfg.z2->imag() != 0.0)) {
            throw DomainError("scan: z parameters must be real for error reports");
        }
    }

    std::shared_ptr<const SieveTables> tables;
    if (moment_target) {
        tables = std::make_shared<const SieveTables>(build_sieve(cfg.x_grid.back()));
    }

    std::vector<ScanRecord> records(cfg.x_grid.size());
    auto compute_point = [&](std::size_t i) {
        ScanRecord& rec = records[i];
        rec.x = cfg.x_grid[i];
        const auto t0 = std::chrono::steady_clock::now();
        try {
            switch (cfg.target) {
                case Theorem::prop1:
                case Theorem::thm2:
                case Theorem::thm3: {
                    rec.y = rule(static_cast<double>(rec.x));
                    const std::uint32_t k = cfg.target == Theorem::prop1 ? cfg.k
                                            : cfg.target == Theorem::thm2 ? 1u
                                                                          : 2u;
                    const MomentQuery q{k, cfg.beta, rec.x, rec.y};
                    const i128 exact = moment_exact(q, *tables);
                    rec.exact = i128_to_string(exact);
                    const double exact_d = i128_to_double(exact);
                    if (cfg.target == Theorem::prop1) {
                        rec.main_term = main_term_prop1(q);
                        const double lx = std::log(static_cast<double>(rec.x));
                        double bound = std::pow(static_cast<double>(rec.x),
                                                double(k) * (1.0 + cfg.beta)) *
                                       std::pow(std::max(lx, 0.0), double(k));
                        if (k >= 2) {
                            const double log_exp = cfg.beta == 1 ? std::max(lx, 0.0) : 1.0;
                            bound += rec.y * std::pow(static_cast<double>(rec.x),
                                                      double(cfg.beta)) * log_exp;
                        }
                        rec.bound_shape = bound;
                    } else if (cfg.target == Theorem::thm2) {
                        rec.main_term = main_term_first(cfg.beta, rec.x, rec.y);
                        rec.bound_shape = error_bound_first(cfg.beta, rec.x, rec.y);
                    } else {
                        rec.main_term = main_term_second(cfg.beta, rec.x, rec.y);
                        rec.bound_shape = error_bound_second(cfg.beta, rec.x, rec.y);
                    }
                    rec.error = exact_d - rec.main_term;
                    rec.normalized_error = rec.bound_shape > 0.0
                                               ? std::abs(rec.error) / rec.bound_shape
                                               : (rec.error == 0.0 ? 0.0
                                                                   : std::numeric_limits<double>::infinity());
                    rec.in_range = in_theorem_range(cfg.target, cfg.beta,
                                                    static_cast<double>(rec.x), rec.y, k);
                    break;
                }
                case Theorem::thm4:
                case Theorem::thm5: {
                    rec.y = static_cast<double>(rec.x);
                    PartialSumQuery q{static_cast<double>(rec.x), cfg.beta, *cfg.z1,
                                      cfg.target == Theorem::thm5 ? cfg.z2 : std::nullopt};
                    const AsymptoticReport rep = delta_report(
                        cfg.target == Theorem::thm4 ? SumKind::single : SumKind::pair, q);
                    rec.exact = csv_double(rep.exact);
                    rec.main_term = rep.main_term;
                    rec.error = rep.error;
                    rec.bound_shape = rep.bound_shape;
                    rec.normalized_error = rep.normalized_error;
                    rec.in_range = true;
                    break;
                }
            }
        } catch (const std::exception& e) {
            rec.status = detail::error_status(e);
            rec.exact = "nan";
        }
        const auto t1 = std::chrono::steady_clock::now();
        rec.wall_time_ms = std::chrono::duration<double, std::milli>(t1 - t0).count();
    };

    const int threads = std::max(1, cfg.threads);
    if (threads == 1 || records.size() <= 1) {
        for (std::size_t i = 0; i < records.size(); ++i) compute_point(i);
    } else {
        std::atomic<std::size_t> next{0};
        std::vector<std::thread> pool;
        const std::size_t nthreads =
            std::min(static_cast<std::size_t>(threads), records.size());
        pool.reserve(nthreads);
        for (std::size_t t = 0; t < nthreads; ++t) {
            pool.emplace_back([&] {
                for (std::size_t i = next.fetch_add(1); i < records.size();
                     i = next.fetch_add(1)) {
                    compute_point(i);
                }
            });
        }
        for (auto& th : pool) th.join();
    }

    ScanResult result{std::move(records), {}};
    result.regression = detail::regress(result.records);
    if (!cfg.output_path.empty()) {
        write_file_atomic(cfg.output_path, scan_to_csv(result.records));
    }
    return result;
}

}  // namespace cohen
