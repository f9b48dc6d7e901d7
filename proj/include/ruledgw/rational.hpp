#pragma once

#include <boost/multiprecision/cpp_int.hpp>

#include <cstdint>
#include <stdexcept>
#include <string>
#include <string_view>

namespace exactalg {

using Integer = boost::multiprecision::cpp_int;

/// Arbitrary-precision rational number, always in lowest terms with a
/// positive denominator. All arithmetic is exact.
class Rational {
public:
    Rational() = default;
    Rational(std::int64_t n) : v_(n) {}
    Rational(const Integer& n) : v_(n) {}
    Rational(const Integer& num, const Integer& den) {
        if (den == 0)
            throw std::invalid_argument("Rational: zero denominator");
        // division canonicalizes (lowest terms, positive denominator)
        v_ = boost::multiprecision::cpp_rational(num) /
             boost::multiprecision::cpp_rational(den);
    }
    Rational(std::int64_t num, std::int64_t den)
        : Rational(Integer(num), Integer(den)) {}

    /// Accepts "n", "-n" or "n/d" with optional leading sign.
    static Rational from_string(std::string_view s);

    Integer numerator() const { return boost::multiprecision::numerator(v_); }
    Integer denominator() const { return boost::multiprecision::denominator(v_); }

    bool is_zero() const { return v_.is_zero(); }
    bool is_integer() const { return denominator() == 1; }
    int sign() const { return v_.sign(); }

    Rational& operator+=(const Rational& o) { v_ += o.v_; return *this; }
    Rational& operator-=(const Rational& o) { v_ -= o.v_; return *this; }
    Rational& operator*=(const Rational& o) { v_ *= o.v_; return *this; }
    Rational& operator/=(const Rational& o) {
        if (o.is_zero())
            throw std::invalid_argument("Rational: division by zero");
        v_ /= o.v_;
        return *this;
    }

    friend Rational operator+(Rational a, const Rational& b) { return a += b; }
    friend Rational operator-(Rational a, const Rational& b) { return a -= b; }
    friend Rational operator*(Rational a, const Rational& b) { return a *= b; }
    friend Rational operator/(Rational a, const Rational& b) { return a /= b; }
    friend Rational operator-(const Rational& a) { Rational r; r.v_ = -a.v_; return r; }

    friend bool operator==(const Rational& a, const Rational& b) { return a.v_ == b.v_; }
    friend bool operator!=(const Rational& a, const Rational& b) { return a.v_ != b.v_; }
    friend bool operator<(const Rational& a, const Rational& b) { return a.v_ < b.v_; }
    friend bool operator<=(const Rational& a, const Rational& b) { return a.v_ <= b.v_; }
    friend bool operator>(const Rational& a, const Rational& b) { return a.v_ > b.v_; }
    friend bool operator>=(const Rational& a, const Rational& b) { return a.v_ >= b.v_; }

    Rational abs() const { Rational r; r.v_ = boost::multiprecision::abs(v_); return r; }

    /// "n" when integral, "n/d" otherwise.
    std::string to_string() const;

private:
    boost::multiprecision::cpp_rational v_;
};

inline std::string Rational::to_string() const {
    if (is_integer())
        return numerator().str();
    return numerator().str() + "/" + denominator().str();
}

inline Rational Rational::from_string(std::string_view s) {
    auto bad = [&] {
        return std::invalid_argument("Rational: cannot parse \"" + std::string(s) + "\"");
    };
    if (s.empty())
        throw bad();
    auto is_int = [](std::string_view t) {
        if (!t.empty() && (t[0] == '+' || t[0] == '-'))
            t.remove_prefix(1);
        if (t.empty())
            return false;
        for (char c : t)
            if (c < '0' || c > '9')
                return false;
        return true;
    };
    auto slash = s.find('/');
    if (slash == std::string_view::npos) {
        if (!is_int(s))
            throw bad();
        return Rational(Integer(std::string(s)));
    }
    auto num = s.substr(0, slash);
    auto den = s.substr(slash + 1);
    if (!is_int(num) || !is_int(den))
        throw bad();
    Integer d{std::string(den)};
    if (d == 0)
        throw bad();
    return Rational(Integer(std::string(num)), d);
}

}  // namespace exactalg
