#pragma once

// Cuts of the divisible group Γ_Q = Q^(I), in canonical form, and their
// classification into six types (eight subtypes for proper ball cuts).

#include <array>
#include <compare>
#include <cstddef>
#include <optional>
#include <string>
#include <utility>
#include <variant>

#include "cutkit/errors.hpp"
#include "cutkit/hahn.hpp"
#include "cutkit/index_order.hpp"

namespace cutkit {

enum class Side { Plus, Minus };

inline Side opposite(Side s) { return s == Side::Plus ? Side::Minus : Side::Plus; }
inline const char* to_string(Side s) { return s == Side::Plus ? "+" : "-"; }

/// (center + H_S)^±. The center is reduced modulo H_S, i.e. truncated to S.
struct BallCut {
    RealVector center;
    InitialSegment segment;
    Side side = Side::Plus;

    friend bool operator==(const BallCut&, const BallCut&) = default;
};

/// The cut of Γ_Q filled by `realization`, an element of nbc(S).
struct NonBallCut {
    RealVector realization;
    InitialSegment segment;

    friend bool operator==(const NonBallCut&, const NonBallCut&) = default;
};

/// A cut in canonical form: two descriptors are equal iff they denote the same cut.
class CutDescriptor {
public:
    /// (center + H_S)^side. The center must lie in Γ_Q.
    static CutDescriptor ball(const RealVector& center, const InitialSegment& s, Side side) {
        if (!in_gamma(center)) throw validation_error("ball center must be an element of the group");
        return CutDescriptor(BallCut{truncate(center, s), s, side});
    }

    /// The principal cut a^±.
    static CutDescriptor principal(const RealVector& a, Side side) {
        return ball(a, InitialSegment::full(a.space()), side);
    }

    /// The cut filled by x ∉ Γ_Q: truncation to the least S with x_S ∉ Γ_Q.
    static CutDescriptor from_vector(const RealVector& x) {
        if (x.added()) throw validation_error("a non-ball realization cannot carry an added coordinate");
        if (in_gamma(x)) throw precondition_error("not a cut realization: the vector is an element of the group");
        const IndexSet& space = x.space();
        // The least such S is I_{<=i} for the first irrational coordinate i, or
        // all of I when only the tail keeps x out of Γ_Q.
        InitialSegment s = InitialSegment::full(space);
        for (const Term& t : x.finite()) {
            if (!t.second.is_rational()) {
                s = InitialSegment::up_to(space, t.first);
                break;
            }
        }
        return CutDescriptor(NonBallCut{truncate(x, s), s});
    }

    bool is_ball() const { return std::holds_alternative<BallCut>(value_); }
    const BallCut& as_ball() const { return std::get<BallCut>(value_); }
    const NonBallCut& as_nonball() const { return std::get<NonBallCut>(value_); }

    const InitialSegment& segment() const { return is_ball() ? as_ball().segment : as_nonball().segment; }
    const IndexSet& space() const { return is_ball() ? as_ball().center.space() : as_nonball().realization.space(); }

    /// Both sides nonempty.
    bool is_proper() const { return !is_ball() || !as_ball().segment.is_empty(); }

    friend bool operator==(const CutDescriptor&, const CutDescriptor&) = default;

private:
    explicit CutDescriptor(BallCut b) : value_(std::move(b)) {}
    explicit CutDescriptor(NonBallCut n) : value_(std::move(n)) {}

    std::variant<BallCut, NonBallCut> value_;
};

// ---------------------------------------------------------------------------
// Realization in R_sme

/// b_S ± e_S for ball cuts, the nbc(S) vector for non-ball cuts. For a ∈ Γ_Q,
/// a lies left of the cut iff a < realize(D).
inline RealVector realize(const CutDescriptor& d) {
    if (!d.is_ball()) return d.as_nonball().realization;
    const BallCut& b = d.as_ball();
    Coordinate unit(b.side == Side::Plus ? 1 : -1);
    return RealVector::make(b.center.space(), b.center.finite(), b.center.tail(), AddedCoordinate{b.segment, unit});
}

/// The cut D_x determined by x ∈ R_sme \ Γ_Q.
inline CutDescriptor cut_of(const RealVector& x) {
    if (!x.added()) return CutDescriptor::from_vector(x);
    const AddedCoordinate& a = *x.added();
    RealVector below = truncate(base_part(x), a.segment);
    if (!in_gamma(below)) return CutDescriptor::from_vector(below);
    return CutDescriptor::ball(below, a.segment, a.value.sign() > 0 ? Side::Plus : Side::Minus);
}

enum class SideOf { Left, Right };

inline SideOf side_of(const RealVector& a, const CutDescriptor& d) {
    if (!in_gamma(a)) throw validation_error("side_of expects an element of the group");
    return cmp_lex(a, realize(d)) < 0 ? SideOf::Left : SideOf::Right;
}

// ---------------------------------------------------------------------------
// Invariance group and its successor

/// H(D) = H_S.
inline const InitialSegment& invariance_segment(const CutDescriptor& d) { return d.segment(); }

/// Segment of H': S minus its maximum when there is one, else S.
inline InitialSegment h_prime_segment(const CutDescriptor& d) { return seg_without_max(d.segment(), d.space()); }

// ---------------------------------------------------------------------------
// Classification

enum class CutType { BallGapPlus, BallNoGapPlus, BallGapMinus, BallNoGapMinus, NonBallGap, NonBallNoGap };

inline constexpr std::array<CutType, 6> kAllCutTypes = {CutType::BallGapPlus,  CutType::BallNoGapPlus,
                                                        CutType::BallGapMinus, CutType::BallNoGapMinus,
                                                        CutType::NonBallGap,   CutType::NonBallNoGap};

inline const char* to_string(CutType t) {
    switch (t) {
    case CutType::BallGapPlus: return "(b+G)+";
    case CutType::BallNoGapPlus: return "(b+NG)+";
    case CutType::BallGapMinus: return "(b+G)-";
    case CutType::BallNoGapMinus: return "(b+NG)-";
    case CutType::NonBallGap: return "nb+G";
    case CutType::NonBallNoGap: return "nb+NG";
    }
    return "?";
}

inline bool is_ball_type(CutType t) { return t != CutType::NonBallGap && t != CutType::NonBallNoGap; }

inline CutType negated(CutType t) {
    switch (t) {
    case CutType::BallGapPlus: return CutType::BallGapMinus;
    case CutType::BallGapMinus: return CutType::BallGapPlus;
    case CutType::BallNoGapPlus: return CutType::BallNoGapMinus;
    case CutType::BallNoGapMinus: return CutType::BallNoGapPlus;
    default: return t;
    }
}

/// Which candidate a covariance group equals: H = H(D) or its successor H'.
enum class CovarianceGroup { H, HPrime };

struct CovarianceCell {
    CovarianceGroup group;
    bool stable;

    friend bool operator==(const CovarianceCell&, const CovarianceCell&) = default;
};

struct CovarianceRow {
    CovarianceCell vf;
    CovarianceCell vi;

    friend bool operator==(const CovarianceRow&, const CovarianceRow&) = default;
};

/// One row per CutType, in kAllCutTypes order.
using CovarianceTable = std::array<CovarianceRow, 6>;

inline constexpr CovarianceTable kCovarianceTable = {{
    {{CovarianceGroup::H, true}, {CovarianceGroup::HPrime, true}},       // (b+G)+
    {{CovarianceGroup::H, true}, {CovarianceGroup::H, false}},           // (b+NG)+
    {{CovarianceGroup::HPrime, true}, {CovarianceGroup::H, true}},       // (b+G)-
    {{CovarianceGroup::H, false}, {CovarianceGroup::H, true}},           // (b+NG)-
    {{CovarianceGroup::HPrime, true}, {CovarianceGroup::HPrime, true}},  // nb+G
    {{CovarianceGroup::H, false}, {CovarianceGroup::H, false}},          // nb+NG
}};

enum class SymbolicCardinal { Aleph0, KappaS, LambdaS, CofinS };

inline const char* to_string(SymbolicCardinal s) {
    switch (s) {
    case SymbolicCardinal::Aleph0: return "aleph0";
    case SymbolicCardinal::KappaS: return "kappa(S)";
    case SymbolicCardinal::LambdaS: return "lambda(S)";
    case SymbolicCardinal::CofinS: return "cofin(S)";
    }
    return "?";
}

struct CardinalReport {
    SymbolicCardinal symbolic;
    CardinalValue value;

    friend bool operator==(const CardinalReport&, const CardinalReport&) = default;
};

/// (side, max(S) exists, min(S^c) exists) for a proper ball cut.
struct Subtype {
    bool plus;
    bool has_max;
    bool has_min;

    std::string str() const {
        auto sg = [](bool b) { return b ? "+" : "-"; };
        return std::string("(") + sg(plus) + "," + sg(has_max) + "," + sg(has_min) + ")";
    }

    friend bool operator==(const Subtype&, const Subtype&) = default;
};

struct ClassificationReport {
    CutType type6;
    std::optional<Subtype> subtype;
    InitialSegment invariance;
    InitialSegment h_prime;
    InitialSegment vf;
    bool vf_stable;
    InitialSegment vi;
    bool vi_stable;
    CardinalReport kappa;
    CardinalReport lambda;
    bool rank_increases;

    friend bool operator==(const ClassificationReport&, const ClassificationReport&) = default;
};

inline CutType cut_type(const CutDescriptor& d) {
    bool gap = seg_has_max(d.segment(), d.space()).has_value();
    if (!d.is_ball()) return gap ? CutType::NonBallGap : CutType::NonBallNoGap;
    bool plus = d.as_ball().side == Side::Plus;
    if (gap) return plus ? CutType::BallGapPlus : CutType::BallGapMinus;
    return plus ? CutType::BallNoGapPlus : CutType::BallNoGapMinus;
}

inline std::optional<Subtype> subtype(const CutDescriptor& d) {
    if (!d.is_ball() || !d.is_proper()) return std::nullopt;
    const IndexSet& space = d.space();
    return Subtype{d.as_ball().side == Side::Plus, seg_has_max(d.segment(), space).has_value(),
                   comp_has_min(d.segment(), space).has_value()};
}

inline std::pair<CardinalReport, CardinalReport> kappa_lambda(const CutDescriptor& d) {
    const IndexSet& space = d.space();
    const InitialSegment& s = d.segment();
    BoundaryCardinals bc = boundary_cardinals(s, space);
    auto eval = [&](SymbolicCardinal sym) {
        switch (sym) {
        case SymbolicCardinal::Aleph0: return CardinalReport{sym, CardinalValue::Aleph0};
        case SymbolicCardinal::KappaS:
        case SymbolicCardinal::CofinS: return CardinalReport{sym, bc.kappa};
        case SymbolicCardinal::LambdaS: return CardinalReport{sym, bc.lambda};
        }
        return CardinalReport{sym, CardinalValue::Aleph0};
    };
    using S = SymbolicCardinal;

    if (!d.is_ball()) {
        S sym = cut_type(d) == CutType::NonBallGap ? S::Aleph0 : S::CofinS;
        return {eval(sym), eval(sym)};
    }
    if (!d.is_proper()) {
        // (Γ,∅) or (∅,Γ): the nonempty side is all of Γ, cofinal in itself.
        CardinalReport whole = space.empty() ? eval(S::LambdaS) : eval(S::Aleph0);
        CardinalReport none = eval(S::KappaS);
        if (d.as_ball().side == Side::Plus) return {whole, none};
        return {none, whole};
    }
    Subtype st = *subtype(d);
    S kappa{}, lambda{};
    if (st.plus) {
        kappa = st.has_min ? S::Aleph0 : S::LambdaS;
        lambda = st.has_max ? S::Aleph0 : S::KappaS;
    } else {
        kappa = st.has_max ? S::Aleph0 : S::KappaS;
        lambda = st.has_min ? S::Aleph0 : S::LambdaS;
    }
    return {eval(kappa), eval(lambda)};
}

inline ClassificationReport classify(const CutDescriptor& d, const CovarianceTable& table = kCovarianceTable) {
    CutType t = cut_type(d);
    InitialSegment h = d.segment();
    InitialSegment hp = h_prime_segment(d);
    const CovarianceRow& row = table[static_cast<std::size_t>(t)];
    auto pick = [&](CovarianceGroup g) { return g == CovarianceGroup::H ? h : hp; };
    auto [kappa, lambda] = kappa_lambda(d);
    return ClassificationReport{t,
                                subtype(d),
                                h,
                                hp,
                                pick(row.vf.group),
                                row.vf.stable,
                                pick(row.vi.group),
                                row.vi.stable,
                                kappa,
                                lambda,
                                is_ball_type(t)};
}

// ---------------------------------------------------------------------------
// The action of Γ^± on cuts

inline CutDescriptor shift(const CutDescriptor& d, const RealVector& a) {
    if (!in_gamma(a)) throw validation_error("shift expects an element of the group");
    if (d.is_ball()) {
        const BallCut& b = d.as_ball();
        return CutDescriptor::ball(b.center + a, b.segment, b.side);
    }
    return CutDescriptor::from_vector(d.as_nonball().realization + a);
}

/// -(D^L, D^R) = (-D^R, -D^L).
inline CutDescriptor negate(const CutDescriptor& d) {
    if (d.is_ball()) {
        const BallCut& b = d.as_ball();
        return CutDescriptor::ball(-b.center, b.segment, opposite(b.side));
    }
    return CutDescriptor::from_vector(-d.as_nonball().realization);
}

/// ε·D + a.
inline CutDescriptor act(const CutDescriptor& d, int epsilon, const RealVector& a) {
    return shift(epsilon < 0 ? negate(d) : d, a);
}

struct OrbitWitness {
    int epsilon;
    RealVector shift;
};

/// (ε, a) with d2 = ε·d + a, when the two cuts lie in one Γ^±-orbit.
inline std::optional<OrbitWitness> orbit_equivalent(const CutDescriptor& d, const CutDescriptor& d2) {
    if (!(d.space() == d2.space())) throw validation_error("cuts over different index sets");
    if (d.is_ball() != d2.is_ball() || !(d.segment() == d2.segment())) return std::nullopt;
    if (d.is_ball()) {
        int eps = d.as_ball().side == d2.as_ball().side ? 1 : -1;
        RealVector a = d2.as_ball().center - scale(eps, d.as_ball().center);
        return OrbitWitness{eps, std::move(a)};
    }
    const RealVector& x = d.as_nonball().realization;
    const RealVector& x2 = d2.as_nonball().realization;
    for (int eps : {1, -1}) {
        RealVector a = x2 - scale(eps, x);
        if (in_gamma(a) && act(d, eps, a) == d2) return OrbitWitness{eps, std::move(a)};
    }
    return std::nullopt;
}

} // namespace cutkit
