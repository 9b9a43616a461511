#pragma once

#include <algorithm>
#include <cstdint>
#include <string>
#include <vector>

#include "cohen/errors.hpp"

namespace cohen {

// Sign-magnitude arbitrary-precision integer over 32-bit limbs. Only the
// operations the exact rational Bernoulli recurrence needs; numbers stay in
// the few-hundred-bit range, so schoolbook algorithms are plenty.
class BigInt {
public:
    BigInt() = default;
    BigInt(std::int64_t v) {  // implicit, so integer literals work in expressions
        if (v == 0) return;
        sign_ = v < 0 ? -1 : 1;
        std::uint64_t m = v < 0 ? ~static_cast<std::uint64_t>(v) + 1 : static_cast<std::uint64_t>(v);
        push_u64(m);
    }
    static BigInt from_u64(std::uint64_t m) {
        BigInt r;
        if (m != 0) {
            r.sign_ = 1;
            r.push_u64(m);
        }
        return r;
    }

    bool is_zero() const { return sign_ == 0; }
    int sign() const { return sign_; }
    BigInt negated() const {
        BigInt r = *this;
        r.sign_ = -r.sign_;
        return r;
    }
    BigInt abs() const {
        BigInt r = *this;
        r.sign_ = r.sign_ == 0 ? 0 : 1;
        return r;
    }

    friend bool operator==(const BigInt& a, const BigInt& b) {
        return a.sign_ == b.sign_ && a.limbs_ == b.limbs_;
    }
    friend bool operator<(const BigInt& a, const BigInt& b) {
        if (a.sign_ != b.sign_) return a.sign_ < b.sign_;
        int c = cmp_mag(a.limbs_, b.limbs_);
        return a.sign_ >= 0 ? c < 0 : c > 0;
    }

    friend BigInt operator+(const BigInt& a, const BigInt& b) {
        if (a.sign_ == 0) return b;
        if (b.sign_ == 0) return a;
        BigInt r;
        if (a.sign_ == b.sign_) {
            r.limbs_ = add_mag(a.limbs_, b.limbs_);
            r.sign_ = a.sign_;
        } else {
            int c = cmp_mag(a.limbs_, b.limbs_);
            if (c == 0) return BigInt();
            if (c > 0) {
                r.limbs_ = sub_mag(a.limbs_, b.limbs_);
                r.sign_ = a.sign_;
            } else {
                r.limbs_ = sub_mag(b.limbs_, a.limbs_);
                r.sign_ = b.sign_;
            }
        }
        return r;
    }
    friend BigInt operator-(const BigInt& a, const BigInt& b) { return a + b.negated(); }

    friend BigInt operator*(const BigInt& a, const BigInt& b) {
        if (a.sign_ == 0 || b.sign_ == 0) return BigInt();
        BigInt r;
        r.limbs_.assign(a.limbs_.size() + b.limbs_.size(), 0);
        for (std::size_t i = 0; i < a.limbs_.size(); ++i) {
            std::uint64_t carry = 0;
            for (std::size_t j = 0; j < b.limbs_.size(); ++j) {
                std::uint64_t cur = std::uint64_t(a.limbs_[i]) * b.limbs_[j] +
                                    r.limbs_[i + j] + carry;
                r.limbs_[i + j] = static_cast<std::uint32_t>(cur);
                carry = cur >> 32;
            }
            std::size_t k = i + b.limbs_.size();
            while (carry != 0) {
                std::uint64_t cur = r.limbs_[k] + carry;
                r.limbs_[k] = static_cast<std::uint32_t>(cur);
                carry = cur >> 32;
                ++k;
            }
        }
        r.trim();
        r.sign_ = a.sign_ * b.sign_;
        return r;
    }

    // Truncated division: q = trunc(a / b), r = a - q * b (r has a's sign).
    static void divmod(const BigInt& a, const BigInt& b, BigInt& q, BigInt& r) {
        if (b.sign_ == 0) throw DomainError("BigInt: division by zero");
        if (cmp_mag(a.limbs_, b.limbs_) < 0) {
            q = BigInt();
            r = a;
            return;
        }
        // Bit-by-bit long division on magnitudes.
        BigInt rem, quot;
        std::size_t nbits = a.bit_length();
        quot.limbs_.assign(a.limbs_.size(), 0);
        for (std::size_t i = nbits; i-- > 0;) {
            rem.shift_left1();
            if (a.get_bit(i)) rem.set_bit(0);
            if (cmp_mag(rem.limbs_, b.limbs_) >= 0) {
                rem.limbs_ = sub_mag(rem.limbs_, b.limbs_);
                rem.trim();
                quot.set_bit(i);
            }
        }
        quot.trim();
        quot.sign_ = quot.limbs_.empty() ? 0 : a.sign_ * b.sign_;
        rem.sign_ = rem.limbs_.empty() ? 0 : a.sign_;
        q = quot;
        r = rem;
    }

    friend BigInt operator/(const BigInt& a, const BigInt& b) {
        BigInt q, r;
        divmod(a, b, q, r);
        return q;
    }
    friend BigInt operator%(const BigInt& a, const BigInt& b) {
        BigInt q, r;
        divmod(a, b, q, r);
        return r;
    }

    static BigInt gcd(BigInt a, BigInt b) {
        a = a.abs();
        b = b.abs();
        while (!b.is_zero()) {
            BigInt q, r;
            divmod(a, b, q, r);
            a = b;
            b = r;
        }
        return a;
    }

    double to_double() const {
        double r = 0.0;
        for (std::size_t i = limbs_.size(); i-- > 0;) r = r * 4294967296.0 + limbs_[i];
        return sign_ < 0 ? -r : r;
    }

    std::string to_string() const {
        if (sign_ == 0) return "0";
        BigInt t = abs();
        const BigInt ten(10);
        std::string s;
        while (!t.is_zero()) {
            BigInt q, r;
            divmod(t, ten, q, r);
            s += char('0' + (r.limbs_.empty() ? 0 : r.limbs_[0]));
            t = q;
        }
        if (sign_ < 0) s += '-';
        std::reverse(s.begin(), s.end());
        return s;
    }

private:
    int sign_ = 0;
    std::vector<std::uint32_t> limbs_;  // little-endian, no trailing zero limbs

    void push_u64(std::uint64_t m) {
        limbs_.push_back(static_cast<std::uint32_t>(m));
        if (m >> 32) limbs_.push_back(static_cast<std::uint32_t>(m >> 32));
    }
    void trim() {
        while (!limbs_.empty() && limbs_.back() == 0) limbs_.pop_back();
        if (limbs_.empty()) sign_ = 0;
    }
    std::size_t bit_length() const {
        if (limbs_.empty()) return 0;
        std::uint32_t top = limbs_.back();
        std::size_t bits = (limbs_.size() - 1) * 32;
        while (top != 0) {
            ++bits;
            top >>= 1;
        }
        return bits;
    }
    bool get_bit(std::size_t i) const {
        std::size_t limb = i / 32;
        if (limb >= limbs_.size()) return false;
        return (limbs_[limb] >> (i % 32)) & 1u;
    }
    void set_bit(std::size_t i) {
        std::size_t limb = i / 32;
        if (limb >= limbs_.size()) limbs_.resize(limb + 1, 0);
        limbs_[limb] |= std::uint32_t{1} << (i % 32);
        if (sign_ == 0) sign_ = 1;
    }
    void shift_left1() {
        std::uint32_t carry = 0;
        for (auto& l : limbs_) {
            std::uint32_t next = l >> 31;
            l = (l << 1) | carry;
            carry = next;
        }
        if (carry) limbs_.push_back(carry);
        if (sign_ == 0 && !limbs_.empty()) sign_ = 1;
        trim();
    }

    static int cmp_mag(const std::vector<std::uint32_t>& a, const std::vector<std::uint32_t>& b) {
        if (a.size() != b.size()) return a.size() < b.size() ? -1 : 1;
        for (std::size_t i = a.size(); i-- > 0;) {
            if (a[i] != b[i]) return a[i] < b[i] ? -1 : 1;
        }
        return 0;
    }
    static std::vector<std::uint32_t> add_mag(const std::vector<std::uint32_t>& a,
                                              const std::vector<std::uint32_t>& b) {
        const auto& big = a.size() >= b.size() ? a : b;
        const auto& small = a.size() >= b.size() ? b : a;
        std::vector<std::uint32_t> r(big.size(), 0);
        std::uint64_t carry = 0;
        for (std::size_t i = 0; i < big.size(); ++i) {
            std::uint64_t cur = std::uint64_t(big[i]) + (i < small.size() ? small[i] : 0) + carry;
            r[i] = static_cast<std::uint32_t>(cur);
            carry = cur >> 32;
        }
        if (carry) r.push_back(static_cast<std::uint32_t>(carry));
        return r;
    }
    // Requires |a| >= |b|.
    static std::vector<std::uint32_t> sub_mag(const std::vector<std::uint32_t>& a,
                                              const std::vector<std::uint32_t>& b) {
        std::vector<std::uint32_t> r(a.size(), 0);
        std::int64_t borrow = 0;
        for (std::size_t i = 0; i < a.size(); ++i) {
            std::int64_t cur = std::int64_t(a[i]) - (i < b.size() ? b[i] : 0) - borrow;
            if (cur < 0) {
                cur += std::int64_t{1} << 32;
                borrow = 1;
            } else {
                borrow = 0;
            }
            r[i] = static_cast<std::uint32_t>(cur);
        }
        while (!r.empty() && r.back() == 0) r.pop_back();
        return r;
    }
};

// Reduced fraction num/den with den > 0.
class Rational {
public:
    Rational() : num_(0), den_(1) {}
    Rational(BigInt num, BigInt den) : num_(std::move(num)), den_(std::move(den)) { normalize(); }
    Rational(std::int64_t num, std::int64_t den = 1) : num_(num), den_(den) { normalize(); }

    const BigInt& num() const { return num_; }
    const BigInt& den() const { return den_; }

    friend Rational operator+(const Rational& a, const Rational& b) {
        return Rational(a.num_ * b.den_ + b.num_ * a.den_, a.den_ * b.den_);
    }
    friend Rational operator-(const Rational& a, const Rational& b) {
        return Rational(a.num_ * b.den_ - b.num_ * a.den_, a.den_ * b.den_);
    }
    friend Rational operator*(const Rational& a, const Rational& b) {
        return Rational(a.num_ * b.num_, a.den_ * b.den_);
    }
    friend Rational operator/(const Rational& a, const Rational& b) {
        if (b.num_.is_zero()) throw DomainError("Rational: division by zero");
        return Rational(a.num_ * b.den_, a.den_ * b.num_);
    }
    Rational negated() const { return Rational(num_.negated(), den_); }
    friend bool operator==(const Rational& a, const Rational& b) {
        return a.num_ == b.num_ && a.den_ == b.den_;
    }

    double to_double() const { return num_.to_double() / den_.to_double(); }
    std::string to_string() const { return num_.to_string() + "/" + den_.to_string(); }

private:
    BigInt num_, den_;
    void normalize() {
        if (den_.is_zero()) throw DomainError("Rational: zero denominator");
        if (den_.sign() < 0) {
            num_ = num_.negated();
            den_ = den_.negated();
        }
        if (num_.is_zero()) {
            den_ = BigInt(1);
            return;
        }
        BigInt g = BigInt::gcd(num_, den_);
        num_ = num_ / g;
        den_ = den_ / g;
    }
};

}  // namespace cohen
