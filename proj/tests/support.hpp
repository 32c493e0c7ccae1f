#pragma once

// Test-side helpers: independent enumerations and small constructors.

#include <algorithm>
#include <cstdint>
#include <optional>
#include <random>
#include <string>
#include <utility>
#include <vector>

#include "cutkit/cuts.hpp"
#include "cutkit/hahn.hpp"
#include "cutkit/index_order.hpp"
#include "cutkit/rational.hpp"

namespace cutkit::testing {

inline IndexSet Q() { return IndexSet({Atom::fin(1)}); }
inline IndexSet W() { return IndexSet({Atom::omega()}); }
inline IndexSet WW() { return IndexSet({Atom::omega(), Atom::omega()}); }
inline IndexSet F1Wop() { return IndexSet({Atom::fin(1), Atom::omega_opp()}); }
inline IndexSet WWop() { return IndexSet({Atom::omega(), Atom::omega_opp()}); }

/// Every index with label <= n, listed in increasing order. Built from the
/// atom kinds alone, so it can referee cmp_index.
inline std::vector<Index> ascending(const IndexSet& space, std::uint64_t n) {
    std::vector<Index> out;
    for (std::size_t a = 1; a <= space.size(); ++a) {
        const Atom& atom = space.atoms()[a - 1];
        std::uint64_t top = atom.kind == AtomKind::Fin ? std::min<std::uint64_t>(n, atom.length) : n;
        if (atom.kind == AtomKind::OmegaOpp)
            for (std::uint64_t k = top; k >= 1; --k) out.push_back({a, k});
        else
            for (std::uint64_t k = 1; k <= top; ++k) out.push_back({a, k});
    }
    return out;
}

/// All canonical segments whose boundary label is <= n.
inline std::vector<InitialSegment> segments(const IndexSet& space, std::uint64_t n) {
    std::vector<InitialSegment> out{InitialSegment::empty_segment()};
    for (std::size_t a = 1; a <= space.size(); ++a) {
        const Atom& atom = space.atoms()[a - 1];
        std::uint64_t top = atom.kind == AtomKind::Fin ? atom.length : n;
        std::uint64_t first = atom.kind == AtomKind::OmegaOpp ? 2 : 1;
        for (std::uint64_t k = first; k <= top; ++k) out.push_back(InitialSegment::make(space, a, Within::UpTo, k));
        out.push_back(InitialSegment::make(space, a, Within::All));
    }
    std::vector<InitialSegment> unique;
    for (auto& s : out)
        if (std::find(unique.begin(), unique.end(), s) == unique.end()) unique.push_back(s);
    return unique;
}

inline Rational R(long long p, long long q = 1) { return Rational(p, q); }
inline Coordinate C(const std::string& s) { return parse_coordinate(s); }

/// Finite-support vector from (atom, inner, coordinate) triples.
inline RealVector vec(const IndexSet& space, std::vector<std::pair<Index, std::string>> terms) {
    std::vector<Term> t;
    for (auto& [i, c] : terms) t.emplace_back(i, parse_coordinate(c));
    return RealVector::make(space, std::move(t));
}

inline RealVector ones_tail(const IndexSet& space, long long value = 1) {
    return RealVector::make(space, {}, ConstantTail{Rational(value), Index{space.size(), 1}});
}

inline CutDescriptor zero_plus(const IndexSet& space) {
    return CutDescriptor::ball(RealVector::zero(space), InitialSegment::full(space), Side::Plus);
}
inline CutDescriptor zero_minus(const IndexSet& space) {
    return CutDescriptor::ball(RealVector::zero(space), InitialSegment::full(space), Side::Minus);
}

inline int ord(std::strong_ordering c) { return c < 0 ? -1 : (c > 0 ? 1 : 0); }

/// Seeded random values for property tests.
class Gen {
public:
    explicit Gen(std::uint64_t seed) : rng_(seed) {}

    std::int64_t between(std::int64_t lo, std::int64_t hi) {
        return std::uniform_int_distribution<std::int64_t>(lo, hi)(rng_);
    }
    bool coin(int percent = 50) { return between(1, 100) <= percent; }

    Rational rational(std::int64_t bound = 6) {
        Rational q(between(-bound, bound), between(1, bound));
        return q;
    }
    Rational nonzero_rational(std::int64_t bound = 6) {
        Rational q = 0;
        while (q == 0) q = rational(bound);
        return q;
    }
    Coordinate coordinate(int irrational_percent) {
        if (coin(irrational_percent)) return Coordinate(rational(), nonzero_rational());
        return Coordinate(rational());
    }

    Index index(const IndexSet& space, std::uint64_t max_label) {
        for (;;) {
            std::size_t a = static_cast<std::size_t>(between(1, static_cast<std::int64_t>(space.size())));
            Index i{a, static_cast<std::uint64_t>(between(1, static_cast<std::int64_t>(max_label)))};
            if (space.valid(i)) return i;
        }
    }

    InitialSegment segment(const IndexSet& space, std::uint64_t max_label) {
        auto all = segments(space, max_label);
        return all[static_cast<std::size_t>(between(0, static_cast<std::int64_t>(all.size()) - 1))];
    }

    /// Finite-support rational vector: an element of the group.
    RealVector group_element(const IndexSet& space, std::uint64_t max_label = 5, std::int64_t max_terms = 4) {
        std::vector<Term> t;
        std::int64_t n = between(0, max_terms);
        for (std::int64_t k = 0; k < n; ++k) t.emplace_back(index(space, max_label), Coordinate(rational()));
        return RealVector::make(space, std::move(t));
    }

    /// Anything representable: irrational entries, a tail, an added coordinate.
    RealVector vector(const IndexSet& space, int irrational_percent = 20, int tail_percent = 30, int added_percent = 30,
                      std::uint64_t max_label = 5) {
        std::vector<Term> t;
        std::int64_t n = between(0, 4);
        for (std::int64_t k = 0; k < n; ++k) t.emplace_back(index(space, max_label), coordinate(irrational_percent));
        std::optional<ConstantTail> tail;
        if (space.ends_with_omega() && coin(tail_percent))
            tail = ConstantTail{nonzero_rational(), Index{space.size(), static_cast<std::uint64_t>(between(1, static_cast<std::int64_t>(max_label)))}};
        std::optional<AddedCoordinate> added;
        if (coin(added_percent)) added = AddedCoordinate{segment(space, max_label), Coordinate(nonzero_rational())};
        return RealVector::make(space, std::move(t), tail, added);
    }

    std::mt19937_64& engine() { return rng_; }

private:
    std::mt19937_64 rng_;
};

/// Coordinates of x laid out on a finite window of the hull: every base index
/// with label <= n, and one slot per segment in `extra` (ordered by the
/// defining rules S < i_S < S^c and i_S < i_T iff S ⊊ T, applied directly).
struct Window {
    struct Slot {
        std::optional<Index> base;
        std::optional<InitialSegment> added;
    };
    std::vector<Slot> slots;

    Window(const IndexSet& space, std::uint64_t n, std::vector<InitialSegment> extra) {
        auto list = ascending(space, n);
        std::sort(extra.begin(), extra.end(), [&](const auto& a, const auto& b) { return seg_proper_subset(a, b, space); });
        extra.erase(std::unique(extra.begin(), extra.end()), extra.end());
        std::size_t e = 0;
        for (const Index& i : list) {
            while (e < extra.size() && !extra[e].contains(i, space)) slots.push_back({std::nullopt, extra[e++]});
            slots.push_back({i, std::nullopt});
        }
        while (e < extra.size()) slots.push_back({std::nullopt, extra[e++]});
    }

    std::vector<Coordinate> read(const RealVector& x) const {
        std::vector<Coordinate> out;
        for (const Slot& s : slots) {
            if (s.base) out.push_back(x.at(*s.base));
            else out.push_back(x.added() && x.added()->segment == *s.added ? x.added()->value : Coordinate(0));
        }
        return out;
    }
};

inline std::vector<InitialSegment> added_segments(std::initializer_list<const RealVector*> xs) {
    std::vector<InitialSegment> out;
    for (const RealVector* x : xs)
        if (x->added()) out.push_back(x->added()->segment);
    return out;
}

/// Sign of the first nonzero entry of a - b.
inline int lex_sign(const std::vector<Coordinate>& a, const std::vector<Coordinate>& b) {
    for (std::size_t k = 0; k < a.size(); ++k) {
        Coordinate d = a[k] - b[k];
        if (!d.is_zero()) return d.sign();
    }
    return 0;
}

} // namespace cutkit::testing
