#pragma once

// Exact rational arithmetic on top of GMP integers.
//
// A Rational is always in lowest terms with a positive denominator;
// zero is represented as 0/1. Every operation is a pure function and
// produces a canonical result, so values can move freely between
// threads. Division by zero throws, there is no NaN-like state.

#include <gmpxx.h>

#include <ostream>
#include <stdexcept>
#include <string>
#include <string_view>
#include <utility>

namespace dnamat {

// Arbitrary-precision signed integer.
using Int = mpz_class;

inline std::string to_string(const Int& v) { return v.get_str(); }

// Exact power with non-negative exponent.
inline Int pow(const Int& base, unsigned long exp) {
    Int r;
    mpz_pow_ui(r.get_mpz_t(), base.get_mpz_t(), exp);
    return r;
}

namespace detail {

// Strict integer literal: optional minus sign, then digits only.
// GMP's own string constructor silently skips whitespace, which is too
// permissive for round-trip parsing.
inline bool is_integer_literal(std::string_view s) {
    if (!s.empty() && s.front() == '-') s.remove_prefix(1);
    if (s.empty()) return false;
    for (char c : s)
        if (c < '0' || c > '9') return false;
    return true;
}

}  // namespace detail

class Rational {
public:
    Rational() : num_(0), den_(1) {}
    Rational(int v) : num_(v), den_(1) {}
    Rational(long v) : num_(v), den_(1) {}
    Rational(Int v) : num_(std::move(v)), den_(1) {}

    Rational(Int num, Int den) : num_(std::move(num)), den_(std::move(den)) {
        if (den_ == 0) throw std::domain_error("Rational: zero denominator");
        canonicalize();
    }
    Rational(long num, long den) : Rational(Int(num), Int(den)) {}

    const Int& num() const { return num_; }
    const Int& den() const { return den_; }

    bool is_zero() const { return num_ == 0; }
    bool is_integer() const { return den_ == 1; }
    int sign() const { return sgn(num_); }

    // In canonical form equality is componentwise.
    friend bool operator==(const Rational& a, const Rational& b) {
        return a.num_ == b.num_ && a.den_ == b.den_;
    }
    friend bool operator!=(const Rational& a, const Rational& b) { return !(a == b); }

    friend bool operator<(const Rational& a, const Rational& b) {
        return a.num_ * b.den_ < b.num_ * a.den_;
    }
    friend bool operator>(const Rational& a, const Rational& b) { return b < a; }
    friend bool operator<=(const Rational& a, const Rational& b) { return !(b < a); }
    friend bool operator>=(const Rational& a, const Rational& b) { return !(a < b); }

    friend Rational operator-(const Rational& a) {
        Rational r;
        r.num_ = -a.num_;
        r.den_ = a.den_;
        return r;
    }

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
        if (b.num_ == 0) throw std::domain_error("Rational: division by zero");
        return Rational(a.num_ * b.den_, a.den_ * b.num_);
    }

    Rational& operator+=(const Rational& b) { return *this = *this + b; }
    Rational& operator-=(const Rational& b) { return *this = *this - b; }
    Rational& operator*=(const Rational& b) { return *this = *this * b; }
    Rational& operator/=(const Rational& b) { return *this = *this / b; }

    // "num/den", with the denominator omitted when it is 1.
    std::string to_string() const {
        std::string s = num_.get_str();
        if (den_ != 1) {
            s += '/';
            s += den_.get_str();
        }
        return s;
    }

    // Inverse of to_string; also accepts a signed or unreduced denominator.
    static Rational parse(std::string_view s) {
        auto slash = s.find('/');
        std::string_view num_part = s.substr(0, slash);
        if (!detail::is_integer_literal(num_part))
            throw std::invalid_argument("Rational: cannot parse '" + std::string(s) + "'");
        if (slash == std::string_view::npos)
            return Rational(Int(std::string(num_part)));
        std::string_view den_part = s.substr(slash + 1);
        if (!detail::is_integer_literal(den_part))
            throw std::invalid_argument("Rational: cannot parse '" + std::string(s) + "'");
        return Rational(Int(std::string(num_part)), Int(std::string(den_part)));
    }

    friend std::ostream& operator<<(std::ostream& os, const Rational& r) {
        return os << r.to_string();
    }

private:
    Int num_;
    Int den_;  // always >= 1

    void canonicalize() {
        if (num_ == 0) {
            den_ = 1;
            return;
        }
        if (den_ < 0) {
            num_ = -num_;
            den_ = -den_;
        }
        Int g = gcd(num_, den_);
        if (g != 1) {
            num_ /= g;
            den_ /= g;
        }
    }
};

inline Rational abs(const Rational& r) { return r.sign() < 0 ? -r : r; }

inline Rational pow(const Rational& base, unsigned long exp) {
    // base is canonical, so num^e / den^e is already in lowest terms
    return Rational(pow(base.num(), exp), pow(base.den(), exp));
}

}  // namespace dnamat
