#pragma once

// Γ_sme = Γ_Q ⊔ Γ_nbc ⊔ Γ_bc: group elements and cut points in one total order.

#include <compare>
#include <optional>
#include <stdexcept>
#include <utility>
#include <variant>

#include "cutkit/cuts.hpp"
#include "cutkit/errors.hpp"
#include "cutkit/hahn.hpp"
#include "cutkit/stern_brocot.hpp"

namespace cutkit {

class QuasiCutPoint {
public:
    static QuasiCutPoint interior(RealVector a) {
        if (!in_gamma(a)) throw validation_error("interior points must be elements of the group");
        return QuasiCutPoint(std::move(a));
    }
    static QuasiCutPoint cut(CutDescriptor d) { return QuasiCutPoint(std::move(d)); }

    bool is_interior() const { return std::holds_alternative<RealVector>(value_); }
    const RealVector& as_interior() const { return std::get<RealVector>(value_); }
    const CutDescriptor& as_cut() const { return std::get<CutDescriptor>(value_); }

    RealVector realization() const { return is_interior() ? as_interior() : realize(as_cut()); }

    friend bool operator==(const QuasiCutPoint&, const QuasiCutPoint&) = default;

private:
    explicit QuasiCutPoint(RealVector a) : value_(std::move(a)) {}
    explicit QuasiCutPoint(CutDescriptor d) : value_(std::move(d)) {}

    std::variant<RealVector, CutDescriptor> value_;
};

inline std::strong_ordering qcut_compare(const QuasiCutPoint& p, const QuasiCutPoint& q) {
    return cmp_lex(p.realization(), q.realization());
}

/// The quasi-cut point an element of R_sme induces.
inline QuasiCutPoint quasi_cut_of(const RealVector& x) {
    if (in_gamma(x)) return QuasiCutPoint::interior(x);
    return QuasiCutPoint::cut(cut_of(x));
}

/// x ∼_sme y: both induce the same quasi-cut of Γ_Q.
inline bool sme_equivalent(const RealVector& x, const RealVector& y) { return quasi_cut_of(x) == quasi_cut_of(y); }

namespace detail {

inline RealVector below_position(const RealVector& x, const ExtendedIndex& v) {
    if (v.is_added()) return truncate(base_part(x), v.segment());
    return truncate(base_part(x), InitialSegment::below(x.space(), v.index()));
}

inline Coordinate coordinate_at(const RealVector& x, const ExtendedIndex& v) {
    if (v.is_base()) return x.at(v.index());
    if (x.added() && x.added()->segment == v.segment()) return x.added()->value;
    return Coordinate(0);
}

inline RealVector require_group(RealVector v) {
    if (!in_gamma(v)) throw std::logic_error("common prefix of two realizations is not a group element");
    return v;
}

// a ∈ Γ_Q with p < a < q for realizations p < q of quasi-cut points.
inline RealVector strictly_between(const RealVector& p, const RealVector& q) {
    const IndexSet& space = p.space();
    auto v = first_difference(q, p);
    if (!v) throw precondition_error("between: points coincide");
    RealVector prefix = require_group(below_position(p, *v));
    Coordinate cp = coordinate_at(p, *v);
    Coordinate cq = coordinate_at(q, *v);
    if (v->is_base()) {
        Rational t = simplest_rational_in_open(cp, cq);
        return prefix + RealVector::unit(space, v->index(), Coordinate(t));
    }
    if (cp.sign() < 0 && cq.sign() > 0) return prefix;
    if (cq.sign() == 0 && cp.sign() < 0) return -strictly_between(-q, -p);
    if (cp.sign() != 0 || cq.sign() <= 0) throw std::logic_error("between: no group element separates the points");
    // p agrees with prefix up to and including i_S; its first later term decides.
    auto w = first_difference(p, prefix);
    if (!w) return prefix;
    Coordinate cw = coordinate_at(p, *w);
    if (w->is_base()) {
        Rational t = simplest_rational_between(Endpoint{cw, false}, std::nullopt);
        return prefix + RealVector::unit(space, w->index(), Coordinate(t));
    }
    if (cw.sign() < 0) return prefix;
    // p = prefix + c·e_T with T ⊋ S: step up at an index of T \ S.
    Index k = seg_difference_element(v->segment(), w->segment(), space);
    return prefix + RealVector::unit(space, k);
}

} // namespace detail

/// Density of Γ_Q in Γ_sme: some a ∈ Γ_Q with p ≤ a ≤ q. An interior p is
/// returned as is; otherwise the witness is the simplest rational step at the
/// first index where the two realizations part.
inline RealVector between(const QuasiCutPoint& p, const QuasiCutPoint& q) {
    if (qcut_compare(p, q) >= 0) throw precondition_error("between requires p < q");
    if (p.is_interior()) return p.as_interior();
    return detail::strictly_between(p.realization(), q.realization());
}

} // namespace cutkit
