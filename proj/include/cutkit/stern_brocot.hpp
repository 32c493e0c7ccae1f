#pragma once

// Denominator-minimal rationals inside intervals with endpoints in Q(sqrt 2),
// found by descending the Stern-Brocot tree, and continued-fraction
// approximations from below.

#include <optional>
#include <vector>

#include "cutkit/errors.hpp"
#include "cutkit/rational.hpp"

namespace cutkit {

struct Endpoint {
    Coordinate value;
    bool closed = false;
};

namespace detail {

inline bool admits_from_below(const std::optional<Endpoint>& lo, const Coordinate& x) {
    return !lo || lo->value < x || (lo->closed && lo->value == x);
}

inline bool admits_from_above(const std::optional<Endpoint>& hi, const Coordinate& x) {
    return !hi || x < hi->value || (hi->closed && hi->value == x);
}

} // namespace detail

/// The simplest rational (smallest denominator, then smallest absolute
/// numerator) in the interval between `lo` and `hi`; a missing endpoint is
/// infinite. Throws when the interval holds no rational.
inline Rational simplest_rational_between(std::optional<Endpoint> lo, std::optional<Endpoint> hi) {
    if (lo && hi) {
        auto c = lo->value <=> hi->value;
        if (c > 0 || (c == 0 && !(lo->closed && hi->closed))) throw precondition_error("empty interval");
    }
    const Coordinate zero(0);
    if (detail::admits_from_below(lo, zero) && detail::admits_from_above(hi, zero)) return 0;
    if (hi && hi->value.sign() <= 0) {
        std::optional<Endpoint> nlo = Endpoint{-hi->value, hi->closed};
        std::optional<Endpoint> nhi;
        if (lo) nhi = Endpoint{-lo->value, lo->closed};
        return -simplest_rational_between(nlo, nhi);
    }
    // Positive interval: lo is finite and >= 0.
    Integer n = lo->value.floor();
    Coordinate n_coord{Rational(n)};
    if (lo->value == n_coord && lo->closed) return Rational(n);
    Coordinate next{Rational(n + 1)};
    if (detail::admits_from_above(hi, next)) return Rational(n + 1);
    // Both ends inside [n, n+1]: write x = n + 1/y and recurse on y.
    std::optional<Endpoint> ylo = Endpoint{(hi->value - n_coord).reciprocal(), hi->closed};
    std::optional<Endpoint> yhi;
    if (!(lo->value == n_coord)) yhi = Endpoint{(lo->value - n_coord).reciprocal(), lo->closed};
    Rational y = simplest_rational_between(ylo, yhi);
    return Rational(n) + 1 / y;
}

inline Rational simplest_rational_in_open(const Coordinate& lo, const Coordinate& hi) {
    return simplest_rational_between(Endpoint{lo, false}, Endpoint{hi, false});
}

/// Continued-fraction convergents of x lying strictly below it, increasing.
/// Stops early when x is rational and the expansion terminates.
inline std::vector<Rational> lower_convergents(const Coordinate& x, std::size_t count) {
    std::vector<Rational> out;
    Integer p_prev = 0, q_prev = 1;
    Integer p = 1, q = 0;
    Coordinate rest = x;
    for (std::size_t k = 0; out.size() < count; ++k) {
        Integer a = rest.floor();
        Integer p_next = a * p + p_prev;
        Integer q_next = a * q + q_prev;
        p_prev = p;
        q_prev = q;
        p = p_next;
        q = q_next;
        Rational conv(p, q);
        if (Coordinate(conv) < x) out.push_back(conv);
        Coordinate frac = rest - Coordinate(Rational(a));
        if (frac.is_zero()) break;
        rest = frac.reciprocal();
    }
    return out;
}

} // namespace cutkit
