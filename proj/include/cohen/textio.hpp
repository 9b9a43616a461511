#pragma once

#include <algorithm>
#include <cmath>
#include <complex>
#include <cstdio>
#include <string>
#include <string_view>

#include "cohen/errors.hpp"
#include "cohen/int128.hpp"

namespace cohen {

// Parses "a+bi" style complex literals: "-0.25", "0.1-2e-3i", "i", "-i", "2i".
inline std::complex<double> parse_complex(std::string_view text) {
    std::string s(text);
    s.erase(std::remove_if(s.begin(), s.end(), [](char c) { return c == ' '; }), s.end());
    if (s.empty()) throw DomainError("parse_complex: empty string");

    auto parse_real = [](const std::string& t) {
        std::size_t pos = 0;
        double v;
        try {
            v = std::stod(t, &pos);
        } catch (const std::exception&) {
            throw DomainError("parse_complex: bad number '" + t + "'");
        }
        if (pos != t.size()) throw DomainError("parse_complex: bad number '" + t + "'");
        return v;
    };

    const bool has_i = s.back() == 'i' || s.back() == 'j';
    if (!has_i) return {parse_real(s), 0.0};
    s.pop_back();

    // Split at the last top-level +/- that is not an exponent sign.
    std::size_t split = std::string::npos;
    for (std::size_t i = s.size(); i-- > 1;) {
        if ((s[i] == '+' || s[i] == '-') && s[i - 1] != 'e' && s[i - 1] != 'E') {
            split = i;
            break;
        }
    }
    if (split == std::string::npos) {
        if (s.empty() || s == "+" || s == "-") return {0.0, s == "-" ? -1.0 : 1.0};
        return {0.0, parse_real(s)};
    }
    const std::string re_part = s.substr(0, split);
    std::string im_part = s.substr(split);
    if (im_part == "+" || im_part == "-") im_part += "1";
    return {parse_real(re_part), parse_real(im_part)};
}

// 12-significant-digit rendering; integers print exactly, complex values
// print as "re+imi".
inline std::string format_real(double v) {
    if (std::abs(v - std::nearbyint(v)) < 1e-9 && std::abs(v) < 1e15) {
        char buf[32];
        std::snprintf(buf, sizeof(buf), "%.0f", std::nearbyint(v));
        return buf;
    }
    char buf[40];
    std::snprintf(buf, sizeof(buf), "%.12g", v);
    return buf;
}

inline std::string format_complex(std::complex<double> v) {
    if (std::abs(v.imag()) <= 1e-9 * std::max(1.0, std::abs(v.real()))) {
        return format_real(v.real());
    }
    char buf[96];
    std::snprintf(buf, sizeof(buf), "%.12g%+.12gi", v.real(), v.imag());
    return buf;
}

// Locale-free full-precision rendering for CSV cells.
inline std::string csv_double(double v) {
    char buf[48];
    std::snprintf(buf, sizeof(buf), "%.17g", v);
    return buf;
}

}  // namespace cohen
