#pragma once

// The small extension Γ(D) = Z·x_D ⊕ Γ_Q generated by a cut D, ordered by
// realizing x_D in R_sme.

#include <compare>
#include <optional>
#include <utility>

#include "cutkit/cuts.hpp"
#include "cutkit/errors.hpp"
#include "cutkit/hahn.hpp"

namespace cutkit {

/// m·x_D + b.
struct GammaDElement {
    CutDescriptor cut;
    Integer m;
    RealVector b;

    GammaDElement(CutDescriptor d, Integer coeff, RealVector base)
        : cut(std::move(d)), m(std::move(coeff)), b(std::move(base)) {
        if (!in_gamma(b)) throw validation_error("the Γ-component of a Γ(D) element must lie in the group");
        if (!(b.space() == cut.space())) throw validation_error("element and cut live over different index sets");
    }

    friend bool operator==(const GammaDElement&, const GammaDElement&) = default;
};

inline RealVector gd_realization(const GammaDElement& u) {
    return scale(Rational(u.m), realize(u.cut)) + u.b;
}

inline GammaDElement operator+(const GammaDElement& u, const GammaDElement& v) {
    if (!(u.cut == v.cut)) throw validation_error("elements of different extensions");
    return GammaDElement(u.cut, u.m + v.m, u.b + v.b);
}

inline GammaDElement operator-(const GammaDElement& u) { return GammaDElement(u.cut, -u.m, -u.b); }

inline std::strong_ordering gd_compare(const GammaDElement& u, const GammaDElement& v) {
    if (!(u.cut == v.cut)) throw validation_error("elements of different extensions");
    return cmp_lex(gd_realization(u), gd_realization(v));
}

/// Natural valuation in Γ(D); Added(S) marks the archimedean class that Γ lacks.
inline std::optional<ExtendedIndex> gd_valuation(const GammaDElement& u) {
    return natural_valuation(gd_realization(u));
}

/// Γ ⊂ Γ(D) adds a principal convex subgroup exactly for ball cuts.
inline bool rank_increases(const CutDescriptor& d) { return d.is_ball(); }

/// The same question answered through the realization: does x_D need an added index?
inline bool realization_has_added_coordinate(const CutDescriptor& d) { return realize(d).added().has_value(); }

/// The Γ-isomorphism Γ(D) → Γ(ε·D + a) fixing Γ: x_D ↦ ε·(x_{εD+a} − a).
inline GammaDElement transport(const GammaDElement& u, int epsilon, const RealVector& a) {
    CutDescriptor target = act(u.cut, epsilon, a);
    Integer em = epsilon < 0 ? Integer(-u.m) : u.m;
    return GammaDElement(std::move(target), em, u.b - scale(Rational(em), a));
}

} // namespace cutkit
