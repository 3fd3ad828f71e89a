#pragma once

// Exact rational numbers for vertex weights. Every comparison the safe-set
// predicate makes (w(C) >= w(D), s < cs) is decided without rounding.

#include <boost/multiprecision/cpp_int.hpp>

#include <compare>
#include <cstdint>
#include <ostream>
#include <stdexcept>
#include <string>
#include <string_view>

namespace safeset {

using BigInt = boost::multiprecision::cpp_int;

class Rational {
 public:
    using value_type = boost::multiprecision::cpp_rational;

    Rational() = default;
    Rational(std::int64_t v) : value_(v) {}  // NOLINT(google-explicit-constructor)
    Rational(const BigInt& num, const BigInt& den) {
        if (den == 0) throw std::invalid_argument("rational with zero denominator");
        value_ = value_type(num, den);
    }
    explicit Rational(value_type v) : value_(std::move(v)) {}

    // Accepts "p" or "p/q" with an optional leading '-'; q must be positive.
    static Rational parse(std::string_view text) {
        auto fail = [&](const char* why) {
            throw std::invalid_argument("bad rational \"" + std::string(text) + "\": " + why);
        };
        if (text.empty()) fail("empty");
        auto slash = text.find('/');
        auto num_text = text.substr(0, slash);
        auto den_text = slash == std::string_view::npos ? std::string_view("1") : text.substr(slash + 1);
        auto digits_ok = [](std::string_view s, bool allow_sign) {
            if (allow_sign && !s.empty() && s.front() == '-') s.remove_prefix(1);
            if (s.empty()) return false;
            for (char c : s)
                if (c < '0' || c > '9') return false;
            return true;
        };
        if (!digits_ok(num_text, true)) fail("numerator is not an integer");
        if (!digits_ok(den_text, false)) fail("denominator is not a positive integer");
        BigInt num{std::string(num_text)};
        BigInt den{std::string(den_text)};
        if (den == 0) fail("zero denominator");
        return Rational(num, den);
    }

    BigInt numerator() const { return boost::multiprecision::numerator(value_); }
    BigInt denominator() const { return boost::multiprecision::denominator(value_); }
    const value_type& value() const { return value_; }

    bool is_integer() const { return denominator() == 1; }
    bool is_zero() const { return value_ == 0; }
    int sign() const { return value_.sign(); }

    // Canonical text: "p" for integers, "p/q" otherwise (always lowest terms).
    std::string str() const {
        if (is_integer()) return numerator().str();
        return numerator().str() + "/" + denominator().str();
    }

    Rational& operator+=(const Rational& o) { value_ += o.value_; return *this; }
    Rational& operator-=(const Rational& o) { value_ -= o.value_; return *this; }
    Rational& operator*=(const Rational& o) { value_ *= o.value_; return *this; }
    Rational& operator/=(const Rational& o) {
        if (o.is_zero()) throw std::domain_error("division by zero rational");
        value_ /= o.value_;
        return *this;
    }

    friend Rational operator+(Rational a, const Rational& b) { return a += b; }
    friend Rational operator-(Rational a, const Rational& b) { return a -= b; }
    friend Rational operator*(Rational a, const Rational& b) { return a *= b; }
    friend Rational operator/(Rational a, const Rational& b) { return a /= b; }
    friend Rational operator-(const Rational& a) { return Rational(value_type(-a.value_)); }

    friend bool operator==(const Rational& a, const Rational& b) { return a.value_ == b.value_; }
    friend std::strong_ordering operator<=>(const Rational& a, const Rational& b) {
        if (a.value_ < b.value_) return std::strong_ordering::less;
        if (a.value_ > b.value_) return std::strong_ordering::greater;
        return std::strong_ordering::equal;
    }

    friend std::ostream& operator<<(std::ostream& os, const Rational& r) { return os << r.str(); }

 private:
    value_type value_{0};
};

}  // namespace safeset
