#pragma once

#include <cstdint>
#include <numeric>
#include <string>

#include "shellfill/errors.hpp"

namespace shellfill {

/// Exact rational number on int64 storage. All intermediates go through
/// __int128 and the reduced result is range-checked, so overflow surfaces
/// as an Error instead of silent wraparound.
class Rational {
public:
    Rational() : num_(0), den_(1) {}
    Rational(std::int64_t n) : num_(n), den_(1) {}
    Rational(std::int64_t num, std::int64_t den) { *this = normalize(num, den); }

    std::int64_t num() const { return num_; }
    std::int64_t den() const { return den_; }

    static Rational normalize(__int128 num, __int128 den) {
        if (den == 0) fail(ErrorCode::InvalidArgument, "zero denominator");
        if (den < 0) {
            num = -num;
            den = -den;
        }
        __int128 g = gcd128(num < 0 ? -num : num, den);
        if (g > 1) {
            num /= g;
            den /= g;
        }
        Rational r;
        r.num_ = narrow(num);
        r.den_ = narrow(den);
        return r;
    }

    Rational operator+(const Rational& o) const {
        return normalize((__int128)num_ * o.den_ + (__int128)o.num_ * den_, (__int128)den_ * o.den_);
    }
    Rational operator-(const Rational& o) const {
        return normalize((__int128)num_ * o.den_ - (__int128)o.num_ * den_, (__int128)den_ * o.den_);
    }
    Rational operator*(const Rational& o) const {
        return normalize((__int128)num_ * o.num_, (__int128)den_ * o.den_);
    }
    Rational operator/(const Rational& o) const {
        if (o.num_ == 0) fail(ErrorCode::InvalidArgument, "division by zero");
        return normalize((__int128)num_ * o.den_, (__int128)den_ * o.num_);
    }
    Rational operator-() const { return normalize(-(__int128)num_, den_); }

    bool operator==(const Rational& o) const { return num_ == o.num_ && den_ == o.den_; }
    bool operator!=(const Rational& o) const { return !(*this == o); }
    bool operator<(const Rational& o) const {
        return (__int128)num_ * o.den_ < (__int128)o.num_ * den_;
    }
    bool operator<=(const Rational& o) const { return !(o < *this); }
    bool operator>(const Rational& o) const { return o < *this; }
    bool operator>=(const Rational& o) const { return !(*this < o); }

    bool is_integer() const { return den_ == 1; }

    /// Largest integer <= value.
    std::int64_t floor() const {
        std::int64_t q = num_ / den_;
        if (num_ < 0 && num_ % den_ != 0) --q;
        return q;
    }

    /// Value reduced into [0, 1).
    Rational mod1() const {
        Rational r = *this - Rational(floor());
        return r;
    }

    std::string str() const { return std::to_string(num_) + "/" + std::to_string(den_); }

    /// Parses the "p/q" literal form (reduced, q > 0).
    static Rational parse(const std::string& text) {
        auto slash = text.find('/');
        if (slash == std::string::npos || slash == 0 || slash + 1 >= text.size())
            fail(ErrorCode::ParseError, "rational literal must be p/q: " + text);
        std::int64_t num = 0, den = 0;
        try {
            std::size_t used = 0;
            num = std::stoll(text.substr(0, slash), &used);
            if (used != slash) fail(ErrorCode::ParseError, "bad numerator: " + text);
            std::string dpart = text.substr(slash + 1);
            den = std::stoll(dpart, &used);
            if (used != dpart.size()) fail(ErrorCode::ParseError, "bad denominator: " + text);
        } catch (const Error&) {
            throw;
        } catch (const std::exception&) {
            fail(ErrorCode::ParseError, "bad rational literal: " + text);
        }
        if (den <= 0) fail(ErrorCode::ParseError, "denominator must be positive: " + text);
        Rational r(num, den);
        if (r.num() != num || r.den() != den)
            fail(ErrorCode::ParseError, "rational literal not reduced: " + text);
        return r;
    }

private:
    static __int128 gcd128(__int128 a, __int128 b) {
        while (b != 0) {
            __int128 t = a % b;
            a = b;
            b = t;
        }
        return a;
    }

    static std::int64_t narrow(__int128 v) {
        if (v > INT64_MAX || v < INT64_MIN) fail(ErrorCode::Overflow, "rational out of 64-bit range");
        return (std::int64_t)v;
    }

    std::int64_t num_;
    std::int64_t den_;
};

} // namespace shellfill
