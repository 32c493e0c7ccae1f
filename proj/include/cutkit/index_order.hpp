#pragma once

// Finitely described totally ordered index sets I (the archimedean classes of
// the group), their initial segments, and the one-added-element hull.

#include <compare>
#include <cstddef>
#include <cstdint>
#include <optional>
#include <ostream>
#include <string>
#include <utility>
#include <variant>
#include <vector>

#include "cutkit/errors.hpp"

namespace cutkit {

enum class AtomKind { Fin, Omega, OmegaOpp };

/// One block of the index set: a finite chain, a copy of omega, or a copy of omega*.
struct Atom {
    AtomKind kind = AtomKind::Omega;
    std::uint64_t length = 0; // Fin only

    static Atom fin(std::uint64_t n) {
        if (n == 0) throw validation_error("Fin(n) requires n >= 1");
        return {AtomKind::Fin, n};
    }
    static Atom omega() { return {AtomKind::Omega, 0}; }
    static Atom omega_opp() { return {AtomKind::OmegaOpp, 0}; }

    bool is_finite() const { return kind == AtomKind::Fin; }
    bool reversed() const { return kind == AtomKind::OmegaOpp; }
    bool valid_inner(std::uint64_t inner) const {
        return inner >= 1 && (kind != AtomKind::Fin || inner <= length);
    }

    friend bool operator==(const Atom&, const Atom&) = default;
};

/// An element of I. Both fields are 1-based. Inside an omega* atom a larger
/// label is a smaller element.
struct Index {
    std::size_t atom = 1;
    std::uint64_t inner = 1;

    friend bool operator==(const Index&, const Index&) = default;
};

inline std::ostream& operator<<(std::ostream& os, const Index& i) {
    return os << "(" << i.atom << "," << i.inner << ")";
}

/// Ordered concatenation of atoms. May be empty (the rank-0 group).
class IndexSet {
public:
    IndexSet() = default;
    explicit IndexSet(std::vector<Atom> atoms) : atoms_(std::move(atoms)) {
        for (const Atom& a : atoms_)
            if (a.kind == AtomKind::Fin && a.length == 0) throw validation_error("Fin(n) requires n >= 1");
    }

    const std::vector<Atom>& atoms() const { return atoms_; }
    std::size_t size() const { return atoms_.size(); }
    bool empty() const { return atoms_.empty(); }

    const Atom& atom(std::size_t pos) const {
        if (pos < 1 || pos > atoms_.size())
            throw validation_error("atom position " + std::to_string(pos) + " out of range");
        return atoms_[pos - 1];
    }

    bool valid(const Index& i) const {
        return i.atom >= 1 && i.atom <= atoms_.size() && atoms_[i.atom - 1].valid_inner(i.inner);
    }

    void validate(const Index& i) const {
        if (!valid(i))
            throw validation_error("index (" + std::to_string(i.atom) + "," + std::to_string(i.inner) +
                                   ") is not an element of the index set");
    }

    /// True when the final atom is omega; constant tails live there.
    bool ends_with_omega() const { return !atoms_.empty() && atoms_.back().kind == AtomKind::Omega; }

    friend bool operator==(const IndexSet&, const IndexSet&) = default;

private:
    std::vector<Atom> atoms_;
};

inline std::strong_ordering cmp_index(const Index& i, const Index& j, const IndexSet& space) {
    space.validate(i);
    space.validate(j);
    if (i.atom != j.atom) return i.atom <=> j.atom;
    if (space.atom(i.atom).reversed()) return j.inner <=> i.inner;
    return i.inner <=> j.inner;
}

// ---------------------------------------------------------------------------
// Initial segments

/// The part of the cut atom that belongs to the segment.
enum class Within { Empty, UpTo, All };

/// Downward-closed subset of an IndexSet. Atoms before `cut_atom` are wholly
/// included, atoms after it wholly excluded. For Fin/omega atoms UpTo(k)
/// keeps inner labels <= k; for omega* atoms it keeps labels >= k.
/// Canonical form never stores Within::All, and the full segment is
/// {size()+1, Empty}.
class InitialSegment {
public:
    InitialSegment() = default;

    static InitialSegment empty_segment() { return {}; }
    static InitialSegment full(const IndexSet& space) { return InitialSegment(space.size() + 1, Within::Empty, 0); }

    /// Builds and normalizes a segment; throws on encodings that are not downward closed.
    static InitialSegment make(const IndexSet& space, std::size_t cut_atom, Within within, std::uint64_t bound = 0) {
        if (cut_atom < 1 || cut_atom > space.size() + 1)
            throw validation_error("segment atom " + std::to_string(cut_atom) + " out of range");
        if (cut_atom == space.size() + 1) {
            if (within != Within::Empty) throw validation_error("segment cannot extend past the last atom");
            return full(space);
        }
        const Atom& atom = space.atom(cut_atom);
        if (within == Within::All) return InitialSegment(cut_atom + 1, Within::Empty, 0);
        if (within == Within::Empty) return InitialSegment(cut_atom, Within::Empty, 0);
        switch (atom.kind) {
        case AtomKind::Fin:
            if (bound > atom.length) throw validation_error("segment bound exceeds Fin length");
            if (bound == 0) return InitialSegment(cut_atom, Within::Empty, 0);
            if (bound == atom.length) return InitialSegment(cut_atom + 1, Within::Empty, 0);
            return InitialSegment(cut_atom, Within::UpTo, bound);
        case AtomKind::Omega:
            if (bound == 0) return InitialSegment(cut_atom, Within::Empty, 0);
            return InitialSegment(cut_atom, Within::UpTo, bound);
        case AtomKind::OmegaOpp:
            if (bound == 0) throw validation_error("omega* segment bound must be >= 1");
            if (bound == 1) return InitialSegment(cut_atom + 1, Within::Empty, 0);
            return InitialSegment(cut_atom, Within::UpTo, bound);
        }
        return {};
    }

    /// I_{<i}
    static InitialSegment below(const IndexSet& space, const Index& i) {
        space.validate(i);
        if (space.atom(i.atom).reversed()) return make(space, i.atom, Within::UpTo, i.inner + 1);
        return make(space, i.atom, Within::UpTo, i.inner - 1);
    }

    /// I_{<=i}
    static InitialSegment up_to(const IndexSet& space, const Index& i) {
        space.validate(i);
        return make(space, i.atom, Within::UpTo, i.inner);
    }

    std::size_t cut_atom() const { return cut_atom_; }
    Within within() const { return within_; }
    std::uint64_t bound() const { return bound_; }

    bool is_empty() const { return cut_atom_ == 1 && within_ == Within::Empty; }
    bool is_full(const IndexSet& space) const { return cut_atom_ == space.size() + 1; }

    bool contains(const Index& i, const IndexSet& space) const {
        space.validate(i);
        if (i.atom < cut_atom_) return true;
        if (i.atom > cut_atom_ || within_ == Within::Empty) return false;
        return space.atom(i.atom).reversed() ? i.inner >= bound_ : i.inner <= bound_;
    }

    friend bool operator==(const InitialSegment&, const InitialSegment&) = default;

private:
    InitialSegment(std::size_t atom, Within within, std::uint64_t bound)
        : cut_atom_(atom), within_(within), bound_(bound) {}

    std::size_t cut_atom_ = 1;
    Within within_ = Within::Empty;
    std::uint64_t bound_ = 0;
};

/// Inclusion order; segments of one index set form a chain.
inline std::strong_ordering seg_compare(const InitialSegment& s, const InitialSegment& t, const IndexSet& space) {
    if (s.cut_atom() != t.cut_atom()) return s.cut_atom() <=> t.cut_atom();
    if (s.within() != t.within()) return s.within() == Within::Empty ? std::strong_ordering::less
                                                                      : std::strong_ordering::greater;
    if (s.within() == Within::Empty) return std::strong_ordering::equal;
    if (space.atom(s.cut_atom()).reversed()) return t.bound() <=> s.bound();
    return s.bound() <=> t.bound();
}

inline bool seg_proper_subset(const InitialSegment& s, const InitialSegment& t, const IndexSet& space) {
    return seg_compare(s, t, space) == std::strong_ordering::less;
}

inline std::optional<Index> seg_has_max(const InitialSegment& s, const IndexSet& space) {
    if (s.within() == Within::UpTo) return Index{s.cut_atom(), s.bound()};
    if (s.cut_atom() == 1) return std::nullopt;
    std::size_t prev = s.cut_atom() - 1;
    const Atom& atom = space.atom(prev);
    switch (atom.kind) {
    case AtomKind::Fin: return Index{prev, atom.length};
    case AtomKind::Omega: return std::nullopt;
    case AtomKind::OmegaOpp: return Index{prev, 1};
    }
    return std::nullopt;
}

inline std::optional<Index> comp_has_min(const InitialSegment& s, const IndexSet& space) {
    if (s.is_full(space)) return std::nullopt;
    const Atom& atom = space.atom(s.cut_atom());
    if (s.within() == Within::Empty) {
        if (atom.reversed()) return std::nullopt;
        return Index{s.cut_atom(), 1};
    }
    if (atom.reversed()) return Index{s.cut_atom(), s.bound() - 1};
    return Index{s.cut_atom(), s.bound() + 1};
}

/// S with its maximum removed when it has one; otherwise S itself.
inline InitialSegment seg_without_max(const InitialSegment& s, const IndexSet& space) {
    if (auto m = seg_has_max(s, space)) return InitialSegment::below(space, *m);
    return s;
}

/// Some element of t \ s, chosen next to the boundary of s. Requires s strictly inside t.
inline Index seg_difference_element(const InitialSegment& s, const InitialSegment& t, const IndexSet& space) {
    if (!seg_proper_subset(s, t, space)) throw precondition_error("segment difference is empty");
    const Atom& atom = space.atom(s.cut_atom());
    std::uint64_t k = s.within() == Within::UpTo ? s.bound() : 0;
    if (!atom.reversed()) return Index{s.cut_atom(), k + 1};
    if (t.cut_atom() > s.cut_atom()) return Index{s.cut_atom(), k == 0 ? 1 : k - 1};
    return Index{s.cut_atom(), t.bound()};
}

// ---------------------------------------------------------------------------
// The hull I ∪ {i_S}

/// Base(i) or the added element i_S of I_S = S + {i_S} + S^c.
class ExtendedIndex {
public:
    static ExtendedIndex base(Index i) { return ExtendedIndex(std::move(i)); }
    static ExtendedIndex added(InitialSegment s) { return ExtendedIndex(std::move(s)); }

    bool is_base() const { return std::holds_alternative<Index>(value_); }
    bool is_added() const { return !is_base(); }
    const Index& index() const { return std::get<Index>(value_); }
    const InitialSegment& segment() const { return std::get<InitialSegment>(value_); }

    friend bool operator==(const ExtendedIndex&, const ExtendedIndex&) = default;

private:
    explicit ExtendedIndex(Index i) : value_(std::move(i)) {}
    explicit ExtendedIndex(InitialSegment s) : value_(std::move(s)) {}

    std::variant<Index, InitialSegment> value_;
};

inline std::strong_ordering cmp_extended(const ExtendedIndex& u, const ExtendedIndex& v, const IndexSet& space) {
    if (u.is_base() && v.is_base()) return cmp_index(u.index(), v.index(), space);
    if (u.is_added() && v.is_added()) return seg_compare(u.segment(), v.segment(), space);
    // i < i_S exactly when i ∈ S.
    if (u.is_base())
        return v.segment().contains(u.index(), space) ? std::strong_ordering::less : std::strong_ordering::greater;
    return u.segment().contains(v.index(), space) ? std::strong_ordering::greater : std::strong_ordering::less;
}

// ---------------------------------------------------------------------------
// Cardinal invariants

enum class CardinalValue { Zero, One, Aleph0 };

inline const char* to_string(CardinalValue c) {
    switch (c) {
    case CardinalValue::Zero: return "0";
    case CardinalValue::One: return "1";
    case CardinalValue::Aleph0: return "aleph0";
    }
    return "?";
}

struct BoundaryCardinals {
    CardinalValue kappa; // cofinality of S
    CardinalValue lambda; // coinitiality of S^c, with lambda = 1 when S^c is empty
};

inline BoundaryCardinals boundary_cardinals(const InitialSegment& s, const IndexSet& space) {
    BoundaryCardinals out{};
    if (s.is_empty()) out.kappa = CardinalValue::Zero;
    else out.kappa = seg_has_max(s, space) ? CardinalValue::One : CardinalValue::Aleph0;
    if (s.is_full(space)) out.lambda = CardinalValue::One;
    else out.lambda = comp_has_min(s, space) ? CardinalValue::One : CardinalValue::Aleph0;
    return out;
}

} // namespace cutkit
