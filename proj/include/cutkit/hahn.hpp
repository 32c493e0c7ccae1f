#pragma once

// Vectors of the lexicographic power R^I (and of R^{I_S}, one added index at a
// time) with exact coordinates in Q(sqrt 2). The divisible group Γ_Q is the
// Hahn sum Q^(I): finite support, rational coordinates.

#include <algorithm>
#include <compare>
#include <cstddef>
#include <cstdint>
#include <optional>
#include <string>
#include <utility>
#include <vector>

#include "cutkit/errors.hpp"
#include "cutkit/index_order.hpp"
#include "cutkit/rational.hpp"

namespace cutkit {

/// Every index >= `from` inside the trailing omega atom carries `value`.
struct ConstantTail {
    Rational value;
    Index from;

    friend bool operator==(const ConstantTail&, const ConstantTail&) = default;
};

/// The coordinate at the formal index i_S.
struct AddedCoordinate {
    InitialSegment segment;
    Coordinate value;

    friend bool operator==(const AddedCoordinate&, const AddedCoordinate&) = default;
};

using Term = std::pair<Index, Coordinate>;

enum class Membership { InGamma, InHahnProductOnly, OutsideHahnProduct };

inline const char* to_string(Membership m) {
    switch (m) {
    case Membership::InGamma: return "in_gamma";
    case Membership::InHahnProductOnly: return "in_hahn_product_only";
    case Membership::OutsideHahnProduct: return "outside_hahn_product";
    }
    return "?";
}

namespace detail {

// α·x + β·y spread over the whole hull; may carry two added coordinates.
struct Combination {
    std::vector<Term> base; // sorted, nonzero
    std::vector<AddedCoordinate> added;
    std::optional<ConstantTail> tail;
};

} // namespace detail

/// Canonical vector: finite part sorted with no zeros, the tail starts right
/// after the last finite entry that differs from it, at most one added index.
class RealVector {
public:
    RealVector() = default;
    explicit RealVector(IndexSet space) : space_(std::move(space)) {}

    /// Validates and canonicalizes. Finite entries and tail add up where they overlap.
    static RealVector make(IndexSet space, std::vector<Term> finite, std::optional<ConstantTail> tail = std::nullopt,
                           std::optional<AddedCoordinate> added = std::nullopt) {
        RealVector v(std::move(space));
        for (const Term& t : finite) v.space_.validate(t.first);
        std::sort(finite.begin(), finite.end(), [&](const Term& a, const Term& b) {
            return cmp_index(a.first, b.first, v.space_) < 0;
        });
        std::vector<Term> merged;
        for (Term& t : finite) {
            if (!merged.empty() && merged.back().first == t.first) merged.back().second += t.second;
            else merged.push_back(std::move(t));
        }
        if (tail) {
            if (!v.space_.ends_with_omega())
                throw validation_error("a constant tail requires the index set to end with an omega atom");
            if (tail->from.atom != v.space_.size() || !v.space_.valid(tail->from))
                throw validation_error("tail must start inside the trailing omega atom");
        }
        if (added && added->value.is_zero()) added.reset();
        v.added_ = std::move(added);
        v.assign_base(std::move(merged), std::move(tail));
        return v;
    }

    static RealVector zero(IndexSet space) { return RealVector(std::move(space)); }

    static RealVector unit(IndexSet space, const Index& i, Coordinate c = Coordinate(1)) {
        return make(std::move(space), {{i, std::move(c)}});
    }

    /// e_S scaled by c: the only nonzero coordinate sits at i_S.
    static RealVector unit_added(IndexSet space, InitialSegment s, Coordinate c = Coordinate(1)) {
        return make(std::move(space), {}, std::nullopt, AddedCoordinate{std::move(s), std::move(c)});
    }

    const IndexSet& space() const { return space_; }
    const std::vector<Term>& finite() const { return finite_; }
    const std::optional<ConstantTail>& tail() const { return tail_; }
    const std::optional<AddedCoordinate>& added() const { return added_; }

    bool is_zero() const { return finite_.empty() && !tail_ && !added_; }

    /// Base coordinate at i.
    Coordinate at(const Index& i) const {
        space_.validate(i);
        if (tail_ && i.atom == tail_->from.atom && i.inner >= tail_->from.inner) return Coordinate(tail_->value);
        auto it = std::lower_bound(finite_.begin(), finite_.end(), i, [&](const Term& t, const Index& key) {
            return cmp_index(t.first, key, space_) < 0;
        });
        if (it != finite_.end() && it->first == i) return it->second;
        return Coordinate(0);
    }

    /// The k-th element (0-based) of the base support, in increasing order.
    Index base_support(std::size_t k) const {
        if (k < finite_.size()) return finite_[k].first;
        if (!tail_) throw precondition_error("support index out of range");
        return Index{tail_->from.atom, tail_->from.inner + (k - finite_.size())};
    }

    bool has_infinite_support() const { return tail_.has_value(); }

    friend bool operator==(const RealVector&, const RealVector&) = default;

    // Used by the arithmetic below.
    static RealVector from_combination(IndexSet space, detail::Combination c) {
        if (c.added.size() > 1) throw outside_rsme_error("result has two different added indices; it lies outside R_sme");
        RealVector v(std::move(space));
        v.finite_ = std::move(c.base);
        v.tail_ = std::move(c.tail);
        if (!c.added.empty()) v.added_ = std::move(c.added.front());
        return v;
    }

private:
    // Pushes the tail start past every finite entry of the last atom, then pulls
    // it back over trailing entries that equal the tail value.
    void assign_base(std::vector<Term> merged, std::optional<ConstantTail> tail) {
        if (tail && tail->value == 0) tail.reset();
        if (tail) {
            const std::size_t last = space_.size();
            std::uint64_t boundary = tail->from.inner;
            for (const Term& t : merged)
                if (t.first.atom == last) boundary = std::max(boundary, t.first.inner + 1);
            std::vector<Term> out;
            std::size_t k = 0;
            while (k < merged.size() && !(merged[k].first.atom == last && merged[k].first.inner >= tail->from.inner))
                out.push_back(std::move(merged[k++]));
            for (std::uint64_t p = tail->from.inner; p < boundary; ++p) {
                Coordinate c(tail->value);
                if (k < merged.size() && merged[k].first.inner == p) c += merged[k++].second;
                out.emplace_back(Index{last, p}, std::move(c));
            }
            merged = std::move(out);
            tail->from.inner = boundary;
        }
        std::erase_if(merged, [](const Term& t) { return t.second.is_zero(); });
        if (tail) {
            while (tail->from.inner > 1 && !merged.empty() && merged.back().first.atom == tail->from.atom &&
                   merged.back().first.inner + 1 == tail->from.inner && merged.back().second == Coordinate(tail->value)) {
                merged.pop_back();
                --tail->from.inner;
            }
        }
        finite_ = std::move(merged);
        tail_ = std::move(tail);
    }

    IndexSet space_;
    std::vector<Term> finite_;
    std::optional<ConstantTail> tail_;
    std::optional<AddedCoordinate> added_;
};

namespace detail {

inline void require_same_space(const RealVector& x, const RealVector& y) {
    if (!(x.space() == y.space())) throw validation_error("vectors live over different index sets");
}

inline Combination combine(const RealVector& x, const Rational& alpha, const RealVector& y, const Rational& beta) {
    require_same_space(x, y);
    const IndexSet& space = x.space();
    Combination out;

    std::vector<Index> positions;
    for (const Term& t : x.finite()) positions.push_back(t.first);
    for (const Term& t : y.finite()) positions.push_back(t.first);
    std::optional<Index> tail_from;
    Rational tail_value = 0;
    if (x.tail() || y.tail()) {
        const std::size_t last = space.size();
        std::uint64_t lo = UINT64_MAX;
        std::uint64_t boundary = 0;
        for (const auto* v : {&x, &y}) {
            if (!v->tail()) continue;
            lo = std::min(lo, v->tail()->from.inner);
            boundary = std::max(boundary, v->tail()->from.inner);
        }
        for (const Index& p : positions)
            if (p.atom == last) boundary = std::max(boundary, p.inner + 1);
        for (std::uint64_t p = lo; p < boundary; ++p) positions.push_back(Index{last, p});
        tail_from = Index{last, boundary};
        if (x.tail()) tail_value += alpha * x.tail()->value;
        if (y.tail()) tail_value += beta * y.tail()->value;
    }
    std::sort(positions.begin(), positions.end(),
              [&](const Index& a, const Index& b) { return cmp_index(a, b, space) < 0; });
    positions.erase(std::unique(positions.begin(), positions.end()), positions.end());
    for (const Index& p : positions) {
        Coordinate c = Coordinate(alpha) * x.at(p) + Coordinate(beta) * y.at(p);
        if (!c.is_zero()) out.base.emplace_back(p, std::move(c));
    }
    if (tail_from && tail_value != 0) {
        ConstantTail tail{tail_value, *tail_from};
        while (tail.from.inner > 1 && !out.base.empty() && out.base.back().first.atom == tail.from.atom &&
               out.base.back().first.inner + 1 == tail.from.inner && out.base.back().second == Coordinate(tail.value)) {
            out.base.pop_back();
            --tail.from.inner;
        }
        out.tail = std::move(tail);
    }

    auto push_added = [&](const std::optional<AddedCoordinate>& a, const Rational& k) {
        if (!a) return;
        Coordinate c = Coordinate(k) * a->value;
        for (AddedCoordinate& e : out.added) {
            if (e.segment == a->segment) {
                e.value += c;
                return;
            }
        }
        out.added.push_back({a->segment, std::move(c)});
    };
    push_added(x.added(), alpha);
    push_added(y.added(), beta);
    std::erase_if(out.added, [](const AddedCoordinate& a) { return a.value.is_zero(); });
    return out;
}

// Least index of the support with the sign of its coordinate.
inline std::optional<std::pair<ExtendedIndex, int>> leading_term(const Combination& c, const IndexSet& space) {
    std::optional<std::pair<ExtendedIndex, int>> best;
    auto offer = [&](ExtendedIndex at, int s) {
        if (!best || cmp_extended(at, best->first, space) < 0) best.emplace(std::move(at), s);
    };
    if (!c.base.empty()) offer(ExtendedIndex::base(c.base.front().first), c.base.front().second.sign());
    if (c.tail) offer(ExtendedIndex::base(c.tail->from), c.tail->value.sign());
    for (const AddedCoordinate& a : c.added) offer(ExtendedIndex::added(a.segment), a.value.sign());
    return best;
}

inline int leading_sign(const Combination& c, const IndexSet& space) {
    auto t = leading_term(c, space);
    return t ? t->second : 0;
}

} // namespace detail

inline RealVector add(const RealVector& x, const RealVector& y) {
    return RealVector::from_combination(x.space(), detail::combine(x, 1, y, 1));
}

inline RealVector subtract(const RealVector& x, const RealVector& y) {
    return RealVector::from_combination(x.space(), detail::combine(x, 1, y, -1));
}

inline RealVector negate(const RealVector& x) {
    return RealVector::from_combination(x.space(), detail::combine(x, -1, x, 0));
}

inline RealVector scale(const Rational& q, const RealVector& x) {
    return RealVector::from_combination(x.space(), detail::combine(x, q, x, 0));
}

inline RealVector operator+(const RealVector& x, const RealVector& y) { return add(x, y); }
inline RealVector operator-(const RealVector& x, const RealVector& y) { return subtract(x, y); }
inline RealVector operator-(const RealVector& x) { return negate(x); }

/// Lexicographic comparison over the hull. Works for any two vectors of
/// R_sme, including ones whose added indices differ.
inline std::strong_ordering cmp_lex(const RealVector& x, const RealVector& y) {
    int s = detail::leading_sign(detail::combine(x, 1, y, -1), x.space());
    return s < 0 ? std::strong_ordering::less : (s > 0 ? std::strong_ordering::greater : std::strong_ordering::equal);
}

inline int sign(const RealVector& x) { return detail::leading_sign(detail::combine(x, 1, x, 0), x.space()); }

inline RealVector abs(const RealVector& x) { return sign(x) < 0 ? negate(x) : x; }

/// Least index at which x and y differ (over the whole hull), or nullopt when equal.
inline std::optional<ExtendedIndex> first_difference(const RealVector& x, const RealVector& y) {
    auto t = detail::leading_term(detail::combine(x, 1, y, -1), x.space());
    if (!t) return std::nullopt;
    return t->first;
}

/// Least index of the support; nullopt stands for val(0) = ∞.
inline std::optional<ExtendedIndex> natural_valuation(const RealVector& x) {
    std::optional<ExtendedIndex> best;
    auto offer = [&](ExtendedIndex at) {
        if (!best || cmp_extended(at, *best, x.space()) < 0) best = std::move(at);
    };
    if (!x.finite().empty()) offer(ExtendedIndex::base(x.finite().front().first));
    if (x.tail()) offer(ExtendedIndex::base(x.tail()->from));
    if (x.added()) offer(ExtendedIndex::added(x.added()->segment));
    return best;
}

/// Keeps coordinates on S. An added coordinate at i_T survives iff T ⊊ S.
inline RealVector truncate(const RealVector& x, const InitialSegment& s) {
    const IndexSet& space = x.space();
    std::vector<Term> kept;
    for (const Term& t : x.finite())
        if (s.contains(t.first, space)) kept.push_back(t);
    std::optional<ConstantTail> tail;
    if (x.tail()) {
        if (s.is_full(space)) {
            tail = x.tail();
        } else if (s.cut_atom() == x.tail()->from.atom && s.within() == Within::UpTo) {
            for (std::uint64_t p = x.tail()->from.inner; p <= s.bound(); ++p)
                kept.emplace_back(Index{s.cut_atom(), p}, Coordinate(x.tail()->value));
        }
    }
    std::optional<AddedCoordinate> added;
    if (x.added() && seg_proper_subset(x.added()->segment, s, space)) added = x.added();
    return RealVector::make(space, std::move(kept), std::move(tail), std::move(added));
}

/// Drops the added coordinate.
inline RealVector base_part(const RealVector& x) { return RealVector::make(x.space(), x.finite(), x.tail()); }

inline Membership classify_membership(const RealVector& x) {
    if (x.added()) throw validation_error("membership is defined for base vectors only (added coordinate present)");
    for (const Term& t : x.finite())
        if (!t.second.is_rational()) return Membership::OutsideHahnProduct;
    return x.tail() ? Membership::InHahnProductOnly : Membership::InGamma;
}

inline bool in_gamma(const RealVector& x) { return !x.added() && classify_membership(x) == Membership::InGamma; }

} // namespace cutkit
