#pragma once

#include <gmpxx.h>

#include <compare>
#include <iosfwd>
#include <string>

#include "funl/errors.hpp"

namespace funl {

/// Arbitrary-precision rational, always kept in canonical reduced form
/// (gcd 1, positive denominator). Backed by GMP; all arithmetic is
/// exact, there is no rounding anywhere in the weighted domain.
class Rational {
public:
    Rational() : v_(0) {}
    Rational(long n) : v_(n) {}
    Rational(long num, long den) : v_(num, den) {
        if (den == 0) throw Error("rational with zero denominator");
        v_.canonicalize();
    }
    explicit Rational(const mpq_class& q) : v_(q) { v_.canonicalize(); }

    /// Parses "p" or "p/q" in base 10 ("-" allowed on p only). Throws
    /// ParseError on malformed input or zero denominator.
    static Rational parse(const std::string& text) {
        if (!well_formed(text))
            throw ParseError("malformed rational: '" + text + "'");
        mpq_class q;
        if (q.set_str(text, 10) != 0)
            throw ParseError("malformed rational: '" + text + "'");
        if (q.get_den() == 0)
            throw ParseError("rational with zero denominator: '" + text + "'");
        q.canonicalize();
        return Rational(q);
    }

    /// Canonical form: "p/q", with "/q" omitted when q == 1.
    std::string str() const { return v_.get_str(); }

    std::string numerator_str() const { return v_.get_num().get_str(); }
    std::string denominator_str() const { return v_.get_den().get_str(); }

    bool is_zero() const { return sgn(v_) == 0; }
    int sign() const { return sgn(v_); }

    Rational operator-() const { return Rational(mpq_class(-v_)); }
    Rational& operator+=(const Rational& o) { v_ += o.v_; return *this; }
    Rational& operator-=(const Rational& o) { v_ -= o.v_; return *this; }
    Rational& operator*=(const Rational& o) { v_ *= o.v_; return *this; }
    Rational& operator/=(const Rational& o) {
        if (o.is_zero()) throw Error("rational division by zero");
        v_ /= o.v_;
        return *this;
    }

    friend Rational operator+(Rational a, const Rational& b) { return a += b; }
    friend Rational operator-(Rational a, const Rational& b) { return a -= b; }
    friend Rational operator*(Rational a, const Rational& b) { return a *= b; }
    friend Rational operator/(Rational a, const Rational& b) { return a /= b; }

    friend bool operator==(const Rational& a, const Rational& b) { return a.v_ == b.v_; }
    friend bool operator!=(const Rational& a, const Rational& b) { return a.v_ != b.v_; }
    friend bool operator<(const Rational& a, const Rational& b) { return a.v_ < b.v_; }
    friend bool operator<=(const Rational& a, const Rational& b) { return a.v_ <= b.v_; }
    friend bool operator>(const Rational& a, const Rational& b) { return a.v_ > b.v_; }
    friend bool operator>=(const Rational& a, const Rational& b) { return a.v_ >= b.v_; }

    Rational inverse() const {
        if (is_zero()) throw Error("rational inverse of zero");
        return Rational(mpq_class(1) / v_);
    }

private:
    static bool well_formed(const std::string& s) {
        std::size_t i = 0;
        if (i < s.size() && s[i] == '-') ++i;
        std::size_t digits = 0;
        while (i < s.size() && s[i] >= '0' && s[i] <= '9') ++i, ++digits;
        if (digits == 0) return false;
        if (i == s.size()) return true;
        if (s[i] != '/') return false;
        ++i;
        digits = 0;
        while (i < s.size() && s[i] >= '0' && s[i] <= '9') ++i, ++digits;
        return digits > 0 && i == s.size();
    }

    mpq_class v_;
};

inline std::ostream& operator<<(std::ostream& os, const Rational& r) {
    return os << r.str();
}

} // namespace funl
