#pragma once

#include <compare>
#include <cstdint>
#include <limits>
#include <ostream>
#include <string>
#include <utility>

#include <boost/multiprecision/cpp_int.hpp>

#include "secant/error.hpp"

namespace secant {

using BigInt = boost::multiprecision::cpp_int;

/// Exact rational number, always in lowest terms with a positive denominator.
///
/// Thin value wrapper over Boost's cpp_rational; the wrapper fixes the
/// interface the rest of the engine relies on (no implicit conversion from
/// floating point, no implicit narrowing out).
class Rational {
public:
    using value_type = boost::multiprecision::cpp_rational;

    Rational() = default;
    Rational(int v) : v_(v) {}
    Rational(long v) : v_(v) {}
    Rational(long long v) : v_(v) {}
    Rational(const BigInt& v) : v_(v) {}

    Rational(const BigInt& num, const BigInt& den)
    {
        if (den == 0)
            throw DomainError("rational with zero denominator");
        v_ = value_type(num) / value_type(den);
    }

    Rational(double) = delete;
    Rational(float) = delete;

    [[nodiscard]] BigInt numerator() const { return boost::multiprecision::numerator(v_); }
    [[nodiscard]] BigInt denominator() const { return boost::multiprecision::denominator(v_); }

    [[nodiscard]] bool is_zero() const { return v_.is_zero(); }
    [[nodiscard]] bool is_integer() const { return denominator() == 1; }
    [[nodiscard]] int sign() const { return v_.sign(); }

    /// Integer value; throws IntegralityError when the denominator is not 1.
    [[nodiscard]] BigInt to_integer() const
    {
        if (!is_integer())
            throw IntegralityError("expected an integer, got " + to_string());
        return numerator();
    }

    [[nodiscard]] std::int64_t to_int64() const
    {
        BigInt n = to_integer();
        if (n > std::numeric_limits<std::int64_t>::max() ||
            n < std::numeric_limits<std::int64_t>::min())
            throw IntegralityError("integer " + n.str() + " does not fit in 64 bits");
        return n.convert_to<std::int64_t>();
    }

    [[nodiscard]] std::string to_string() const
    {
        if (is_integer())
            return numerator().str();
        return numerator().str() + "/" + denominator().str();
    }

    Rational operator-() const { return Rational(value_type(-v_)); }

    Rational& operator+=(const Rational& o)
    {
        if (!o.v_.is_zero())
            v_ += o.v_;
        return *this;
    }
    Rational& operator-=(const Rational& o)
    {
        if (!o.v_.is_zero())
            v_ -= o.v_;
        return *this;
    }
    Rational& operator*=(const Rational& o)
    {
        v_ *= o.v_;
        return *this;
    }
    Rational& operator/=(const Rational& o)
    {
        if (o.is_zero())
            throw DomainError("rational division by zero");
        v_ /= o.v_;
        return *this;
    }

    friend Rational operator+(Rational a, const Rational& b) { return a += b; }
    friend Rational operator-(Rational a, const Rational& b) { return a -= b; }
    friend Rational operator*(Rational a, const Rational& b) { return a *= b; }
    friend Rational operator/(Rational a, const Rational& b) { return a /= b; }

    friend bool operator==(const Rational& a, const Rational& b) { return a.v_ == b.v_; }
    friend std::strong_ordering operator<=>(const Rational& a, const Rational& b)
    {
        if (a.v_ < b.v_)
            return std::strong_ordering::less;
        if (a.v_ > b.v_)
            return std::strong_ordering::greater;
        return std::strong_ordering::equal;
    }

    friend std::ostream& operator<<(std::ostream& os, const Rational& r) { return os << r.to_string(); }

    [[nodiscard]] const value_type& value() const { return v_; }

private:
    explicit Rational(value_type v) : v_(std::move(v)) {}

    value_type v_;
};

} // namespace secant
