#pragma once

#include <boost/multiprecision/cpp_int.hpp>
#include <string>

#include "superfermat/errors.hpp"

namespace superfermat {

using BigInt = boost::multiprecision::cpp_int;

// Exact rational scalar. Always in lowest terms with positive denominator;
// zero is 0/1. The backend (boost cpp_rational) maintains the canonical form,
// so equal values compare equal componentwise.
class Rational {
  public:
    Rational() = default;
    Rational(int v) : v_(v) {}
    Rational(long long v) : v_(v) {}
    explicit Rational(BigInt v) : v_(std::move(v)) {}
    Rational(BigInt num, BigInt den) {
        if (den == 0)
            throw DivisionByZero();
        if (den < 0) {
            num = -num;
            den = -den;
        }
        v_ = boost::multiprecision::cpp_rational(std::move(num), std::move(den));
    }

    static Rational from_string(const std::string &text);

    BigInt numerator() const { return boost::multiprecision::numerator(v_); }
    BigInt denominator() const { return boost::multiprecision::denominator(v_); }

    bool is_zero() const { return v_.is_zero(); }
    bool is_one() const { return v_ == 1; }
    bool is_integer() const { return denominator() == 1; }
    int sign() const { return v_.sign(); }

    Rational operator-() const { return Rational(-v_); }
    Rational &operator+=(const Rational &o) { v_ += o.v_; return *this; }
    Rational &operator-=(const Rational &o) { v_ -= o.v_; return *this; }
    Rational &operator*=(const Rational &o) { v_ *= o.v_; return *this; }
    Rational &operator/=(const Rational &o) {
        if (o.is_zero())
            throw DivisionByZero();
        v_ /= o.v_;
        return *this;
    }

    friend Rational operator+(Rational a, const Rational &b) { return a += b; }
    friend Rational operator-(Rational a, const Rational &b) { return a -= b; }
    friend Rational operator*(Rational a, const Rational &b) { return a *= b; }
    friend Rational operator/(Rational a, const Rational &b) { return a /= b; }

    bool operator==(const Rational &) const = default;
    auto operator<=>(const Rational &o) const {
        return v_ < o.v_   ? std::strong_ordering::less
               : v_ > o.v_ ? std::strong_ordering::greater
                           : std::strong_ordering::equal;
    }

    Rational reciprocal() const {
        if (is_zero())
            throw DivisionByZero();
        return Rational(1) /= *this;
    }

    // Correctly rounded conversion.
    double to_double() const { return v_.convert_to<double>(); }

    // Exact: every finite double is a dyadic rational.
    static Rational from_double(double x) {
        Rational r;
        r.v_.assign(x);
        return r;
    }

    // "p/q", or just "p" when q = 1.
    std::string to_string() const {
        std::string s = numerator().str();
        if (!is_integer())
            s += "/" + denominator().str();
        return s;
    }

  private:
    explicit Rational(boost::multiprecision::cpp_rational v) : v_(std::move(v)) {}
    boost::multiprecision::cpp_rational v_;
};

inline Rational rat_add(const Rational &a, const Rational &b) { return a + b; }
inline Rational rat_mul(const Rational &a, const Rational &b) { return a * b; }
inline Rational rat_div(const Rational &a, const Rational &b) { return a / b; }

inline Rational Rational::from_string(const std::string &text) {
    auto slash = text.find('/');
    if (slash == std::string::npos)
        return Rational(BigInt(text));
    return Rational(BigInt(text.substr(0, slash)), BigInt(text.substr(slash + 1)));
}

// IEEE double carrier for the smooth layer. Successful operations never
// return NaN; evaluators raise DomainError instead.
using Numeric = double;

} // namespace superfermat
