#pragma once

// Exact scalars: arbitrary-precision rationals and the quadratic field Q(sqrt 2).

#include <compare>
#include <cstddef>
#include <ostream>
#include <string>
#include <string_view>
#include <utility>

#include <boost/multiprecision/cpp_int.hpp>

#include "cutkit/errors.hpp"

namespace cutkit {

using Integer = boost::multiprecision::cpp_int;
using Rational = boost::multiprecision::cpp_rational;

inline int sign(const Integer& v) { return v.sign(); }
inline int sign(const Rational& v) { return v.sign(); }

inline Integer floor_div(const Integer& num, const Integer& den) {
    Integer q = num / den;
    Integer r = num % den;
    if (r != 0 && ((r < 0) != (den < 0))) --q;
    return q;
}

inline Integer floor(const Rational& q) {
    return floor_div(boost::multiprecision::numerator(q), boost::multiprecision::denominator(q));
}

inline std::string to_string(const Rational& q) {
    const Integer& den = boost::multiprecision::denominator(q);
    std::string s = boost::multiprecision::numerator(q).str();
    if (den != 1) s += "/" + den.str();
    return s;
}

namespace detail {

inline bool is_digit(char c) { return c >= '0' && c <= '9'; }

// Cursor over a coordinate literal; positions are reported 1-based.
struct literal_cursor {
    std::string_view text;
    std::size_t pos = 0;

    bool done() const { return pos >= text.size(); }
    char peek() const { return done() ? '\0' : text[pos]; }

    [[noreturn]] void fail(const std::string& what) const {
        throw parse_error("invalid literal '" + std::string(text) + "': " + what, 1, pos + 1);
    }

    Integer digits() {
        std::size_t start = pos;
        while (!done() && is_digit(text[pos])) ++pos;
        if (start == pos) fail("expected digit");
        return Integer(std::string(text.substr(start, pos - start)));
    }

    // RAT := ['-'] DIGITS ['/' DIGITS]
    Rational rational() {
        bool negative = false;
        if (peek() == '-') {
            negative = true;
            ++pos;
        }
        Integer num = digits();
        Integer den = 1;
        if (peek() == '/') {
            ++pos;
            std::size_t at = pos;
            den = digits();
            if (den == 0) {
                pos = at;
                fail("zero denominator");
            }
        }
        Rational q(num, den);
        return negative ? Rational(-q) : q;
    }

    bool try_r2_suffix() {
        if (text.substr(pos, 3) == "*r2") {
            pos += 3;
            return true;
        }
        return false;
    }
};

} // namespace detail

inline Rational parse_rational(std::string_view text) {
    detail::literal_cursor cur{text};
    Rational q = cur.rational();
    if (!cur.done()) cur.fail("unexpected character");
    return q;
}

/// An element a + b*sqrt(2) of Q(sqrt 2). Rational iff b == 0.
class Coordinate {
public:
    Coordinate() = default;
    Coordinate(Rational a) : a_(std::move(a)) {} // NOLINT(implicit)
    Coordinate(long long a) : a_(a) {}            // NOLINT(implicit)
    Coordinate(Rational a, Rational b) : a_(std::move(a)), b_(std::move(b)) {}

    static Coordinate sqrt2() { return {Rational(0), Rational(1)}; }

    const Rational& rational_part() const { return a_; }
    const Rational& sqrt2_part() const { return b_; }

    bool is_rational() const { return b_ == 0; }
    bool is_zero() const { return a_ == 0 && b_ == 0; }

    /// Sign decided by integer arithmetic: a and b*sqrt2 disagree in sign, so
    /// the larger of a^2 and 2b^2 wins.
    int sign() const {
        int sa = a_.sign();
        int sb = b_.sign();
        if (sb == 0) return sa;
        if (sa == 0 || sa == sb) return sb;
        return a_ * a_ > 2 * b_ * b_ ? sa : sb;
    }

    Coordinate operator-() const { return {-a_, -b_}; }
    friend Coordinate operator+(const Coordinate& x, const Coordinate& y) { return {x.a_ + y.a_, x.b_ + y.b_}; }
    friend Coordinate operator-(const Coordinate& x, const Coordinate& y) { return {x.a_ - y.a_, x.b_ - y.b_}; }
    friend Coordinate operator*(const Coordinate& x, const Coordinate& y) {
        return {x.a_ * y.a_ + 2 * x.b_ * y.b_, x.a_ * y.b_ + x.b_ * y.a_};
    }
    Coordinate& operator+=(const Coordinate& y) { return *this = *this + y; }
    Coordinate& operator-=(const Coordinate& y) { return *this = *this - y; }

    /// 1 / (a + b sqrt2) = (a - b sqrt2) / (a^2 - 2 b^2).
    Coordinate reciprocal() const {
        if (is_zero()) throw precondition_error("reciprocal of zero");
        Rational norm = a_ * a_ - 2 * b_ * b_;
        return {a_ / norm, -b_ / norm};
    }

    /// Largest integer n with n <= value.
    Integer floor() const {
        if (b_ == 0) return cutkit::floor(a_);
        // Put both parts over a common denominator d: value = (A + B sqrt2) / d.
        Integer da = boost::multiprecision::denominator(a_);
        Integer db = boost::multiprecision::denominator(b_);
        Integer d = boost::multiprecision::lcm(da, db);
        Integer A = boost::multiprecision::numerator(a_) * (d / da);
        Integer B = boost::multiprecision::numerator(b_) * (d / db);
        Integer root = boost::multiprecision::sqrt(Integer(2 * B * B));
        Integer floor_b_sqrt2 = B > 0 ? root : Integer(-root - 1);
        return floor_div(A + floor_b_sqrt2, d);
    }

    friend bool operator==(const Coordinate& x, const Coordinate& y) { return x.a_ == y.a_ && x.b_ == y.b_; }
    friend std::strong_ordering operator<=>(const Coordinate& x, const Coordinate& y) {
        int s = (x - y).sign();
        return s < 0 ? std::strong_ordering::less
                     : (s > 0 ? std::strong_ordering::greater : std::strong_ordering::equal);
    }

    /// Canonical text form: "a", "b*r2", "a+b*r2" or "a-b*r2".
    std::string str() const {
        if (b_ == 0) return to_string(a_);
        std::string sq = to_string(b_ < 0 ? Rational(-b_) : b_) + "*r2";
        if (a_ == 0) return (b_ < 0 ? "-" : "") + sq;
        return to_string(a_) + (b_ < 0 ? "-" : "+") + sq;
    }

    friend std::ostream& operator<<(std::ostream& os, const Coordinate& c) { return os << c.str(); }

private:
    Rational a_{0};
    Rational b_{0};
};

/// COORD := RAT | RAT ('+'|'-') RAT '*' 'r2' | RAT '*' 'r2'
inline Coordinate parse_coordinate(std::string_view text) {
    detail::literal_cursor cur{text};
    Rational first = cur.rational();
    if (cur.done()) return Coordinate(first);
    if (cur.try_r2_suffix()) {
        if (!cur.done()) cur.fail("unexpected character");
        return {Rational(0), first};
    }
    char op = cur.peek();
    if (op != '+' && op != '-') cur.fail("expected '+', '-' or '*r2'");
    ++cur.pos;
    Rational second = cur.rational();
    if (!cur.try_r2_suffix()) cur.fail("expected '*r2'");
    if (!cur.done()) cur.fail("unexpected character");
    return {first, op == '+' ? second : Rational(-second)};
}

} // namespace cutkit
