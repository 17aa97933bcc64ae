#pragma once

#include <cstdint>
#include <numeric>
#include <string>

#include "causalex/errors.hpp"

namespace causalex {

// Exact rational on int64 with overflow-checked arithmetic. All probability
// and score computations go through this type; no floating point anywhere.
class Rational {
public:
    Rational() : num_(0), den_(1) {}
    Rational(std::int64_t numerator, std::int64_t denominator) : num_(numerator), den_(denominator) {
        normalize();
    }
    static Rational from_int(std::int64_t n) { return Rational(n, 1); }

    std::int64_t num() const { return num_; }
    std::int64_t den() const { return den_; }

    bool is_zero() const { return num_ == 0; }
    bool is_positive() const { return num_ > 0; }

    Rational operator+(const Rational& o) const {
        return Rational::checked(i128(num_) * o.den_ + i128(o.num_) * den_, i128(den_) * o.den_);
    }
    Rational operator-(const Rational& o) const {
        return Rational::checked(i128(num_) * o.den_ - i128(o.num_) * den_, i128(den_) * o.den_);
    }
    Rational operator*(const Rational& o) const {
        return Rational::checked(i128(num_) * o.num_, i128(den_) * o.den_);
    }
    Rational operator/(const Rational& o) const {
        if (o.num_ == 0) throw DomainError("division by zero rational");
        return Rational::checked(i128(num_) * o.den_, i128(den_) * o.num_);
    }

    friend bool operator==(const Rational& a, const Rational& b) {
        return a.num_ == b.num_ && a.den_ == b.den_;
    }
    friend bool operator!=(const Rational& a, const Rational& b) { return !(a == b); }
    friend bool operator<(const Rational& a, const Rational& b) {
        return i128(a.num_) * b.den_ < i128(b.num_) * a.den_;
    }
    friend bool operator<=(const Rational& a, const Rational& b) { return a == b || a < b; }
    friend bool operator>(const Rational& a, const Rational& b) { return b < a; }
    friend bool operator>=(const Rational& a, const Rational& b) { return b <= a; }

    // Canonical spelling: always "num/den", e.g. "1/1", "4/7", "-1/2".
    std::string str() const { return std::to_string(num_) + "/" + std::to_string(den_); }

    // Accepts "p" or "p/q" with an optional leading minus on p.
    static Rational parse(const std::string& text) {
        auto bad = [&] { throw DomainError("not a rational: '" + text + "'"); };
        std::size_t slash = text.find('/');
        try {
            std::size_t used = 0;
            std::int64_t p = std::stoll(text.substr(0, slash), &used);
            if (used != (slash == std::string::npos ? text.size() : slash)) bad();
            std::int64_t q = 1;
            if (slash != std::string::npos) {
                q = std::stoll(text.substr(slash + 1), &used);
                if (used != text.size() - slash - 1) bad();
            }
            return Rational(p, q);
        } catch (const std::invalid_argument&) {
            bad();
        } catch (const std::out_of_range&) {
            throw OverflowError("rational out of range: '" + text + "'");
        }
        return Rational();  // unreachable
    }

private:
    using i128 = __int128;

    static Rational checked(i128 p, i128 q) {
        if (q == 0) throw DomainError("zero denominator");
        if (q < 0) {
            p = -p;
            q = -q;
        }
        i128 g = gcd128(p < 0 ? -p : p, q);
        if (g > 1) {
            p /= g;
            q /= g;
        }
        constexpr i128 lo = INT64_MIN, hi = INT64_MAX;
        if (p < lo || p > hi || q > hi) throw OverflowError("rational overflow");
        Rational r;
        r.num_ = static_cast<std::int64_t>(p);
        r.den_ = static_cast<std::int64_t>(q);
        return r;
    }

    static i128 gcd128(i128 a, i128 b) {
        while (b != 0) {
            i128 t = a % b;
            a = b;
            b = t;
        }
        return a == 0 ? 1 : a;
    }

    void normalize() {
        if (den_ == 0) throw DomainError("zero denominator");
        *this = checked(num_, den_);
    }

    std::int64_t num_;
    std::int64_t den_;
};

}  // namespace causalex
