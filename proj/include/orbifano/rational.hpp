/**
 * @file rational.hpp
 * @brief Exact arbitrary-precision rational numbers.
 *
 * Stored reduced: denominator > 0 and gcd(|num|, den) = 1 after every
 * operation. No rounding ever occurs; conversion to floating point is
 * deliberately absent.
 */
#ifndef ORBIFANO_RATIONAL_HPP
#define ORBIFANO_RATIONAL_HPP

#include <boost/multiprecision/cpp_int.hpp>
#include <compare>
#include <cstdint>
#include <ostream>
#include <string>
#include <string_view>

#include "orbifano/error.hpp"

namespace orbifano {

/// Arbitrary-precision integer. All quantities that can grow (series
/// coefficients, monomial counts, plurigenera) use this type.
using Int = boost::multiprecision::cpp_int;

class Rational {
public:
    Rational() : num_(0), den_(1) {}
    Rational(std::int64_t n) : num_(n), den_(1) {}
    Rational(Int n) : num_(std::move(n)), den_(1) {}
    Rational(Int n, Int d) : num_(std::move(n)), den_(std::move(d)) { reduce(); }

    const Int& numerator() const { return num_; }
    const Int& denominator() const { return den_; }

    bool is_zero() const { return num_ == 0; }
    bool is_integer() const { return den_ == 1; }
    int sign() const { return num_.sign(); }

    /// Largest integer <= *this (floor division, exact).
    Int floor() const {
        Int q = num_ / den_;
        if (num_ < 0 && q * den_ != num_) --q;
        return q;
    }

    Rational operator-() const { return Rational(-num_, den_, already_reduced{}); }

    Rational operator+(const Rational& o) const {
        return Rational(num_ * o.den_ + o.num_ * den_, den_ * o.den_);
    }
    Rational operator-(const Rational& o) const {
        return Rational(num_ * o.den_ - o.num_ * den_, den_ * o.den_);
    }
    Rational operator*(const Rational& o) const {
        return Rational(num_ * o.num_, den_ * o.den_);
    }
    Rational operator/(const Rational& o) const {
        if (o.num_ == 0) fail(Errc::zero_denominator, "division by zero rational");
        return Rational(num_ * o.den_, den_ * o.num_);
    }

    Rational& operator+=(const Rational& o) { return *this = *this + o; }
    Rational& operator-=(const Rational& o) { return *this = *this - o; }
    Rational& operator*=(const Rational& o) { return *this = *this * o; }
    Rational& operator/=(const Rational& o) { return *this = *this / o; }

    bool operator==(const Rational& o) const {
        return num_ == o.num_ && den_ == o.den_;
    }
    std::strong_ordering operator<=>(const Rational& o) const {
        // a/b <=> c/d  iff  a*d <=> c*b  (denominators positive)
        Int l = num_ * o.den_, r = o.num_ * den_;
        return l < r ? std::strong_ordering::less
             : l > r ? std::strong_ordering::greater
                     : std::strong_ordering::equal;
    }

    /// "p/q", or just "p" when the value is an integer.
    std::string str() const {
        std::string s = num_.str();
        if (den_ != 1) s += "/" + den_.str();
        return s;
    }

    /// Parses "p", "p/q" or "-p/q". Throws BadArgument naming the token.
    static Rational parse(std::string_view text);

private:
    struct already_reduced {};
    Rational(Int n, Int d, already_reduced) : num_(std::move(n)), den_(std::move(d)) {}

    void reduce() {
        if (den_ == 0) fail(Errc::zero_denominator, "rational with zero denominator");
        if (den_ < 0) { num_ = -num_; den_ = -den_; }
        if (num_ == 0) { den_ = 1; return; }
        Int g = boost::multiprecision::gcd(num_ < 0 ? Int(-num_) : num_, den_);
        if (g != 1) { num_ /= g; den_ /= g; }
    }

    Int num_;
    Int den_; // always > 0
};

inline std::ostream& operator<<(std::ostream& os, const Rational& r) {
    return os << r.str();
}

} // namespace orbifano

#endif
