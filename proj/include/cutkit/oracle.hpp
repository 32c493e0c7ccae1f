#pragma once

// Brute-force checks of cut invariants straight from their definitions, used
// to cross-examine the closed-form classification.
//
// Invariance group: H(D) = {h : D + h = D}. Non-membership of h is certified
// by an exact separator d ∈ D^L with d + h ∈ D^R; membership can only be
// sampled.
//
// Covariance groups: for d ∈ D^L the convex subgroup V_f(d) generated by
// D_{>=d} - d is {a : val(a) >= val(x - d)} where x realizes D, so it is
// encoded by the segment T(d) = {i ∈ I : i < val(x - d)}. V_f(D) is the
// intersection, i.e. the union of the T(d), and it is stable iff some T(d)
// attains it. V_i is V_f of the negated cut.

#include <algorithm>
#include <cstddef>
#include <cstdint>
#include <optional>
#include <random>
#include <string>
#include <utility>
#include <vector>

#include "cutkit/cuts.hpp"
#include "cutkit/errors.hpp"
#include "cutkit/hahn.hpp"
#include "cutkit/index_order.hpp"
#include "cutkit/small_ext.hpp"
#include "cutkit/stern_brocot.hpp"

namespace cutkit {

struct SampleConfig {
    std::int64_t max_denominator = 8;
    std::int64_t max_support = 4;
    std::int64_t max_label = 6;
    std::int64_t count = 200;
    std::uint64_t seed = 1;

    void validate() const {
        if (max_denominator < 1 || max_support < 1 || max_label < 1 || count < 1)
            throw validation_error("sample bounds must all be >= 1");
    }
};

/// Every index whose inner label is at most `max_label`, in increasing order.
inline std::vector<Index> bounded_indices(const IndexSet& space, std::int64_t max_label) {
    std::vector<Index> out;
    for (std::size_t a = 1; a <= space.size(); ++a) {
        const Atom& atom = space.atom(a);
        std::uint64_t top = static_cast<std::uint64_t>(max_label);
        if (atom.is_finite()) top = std::min(top, atom.length);
        if (atom.reversed())
            for (std::uint64_t k = top; k >= 1; --k) out.push_back({a, k});
        else
            for (std::uint64_t k = 1; k <= top; ++k) out.push_back({a, k});
    }
    return out;
}

/// Deterministic finite-support rational vectors. Always starts with 0 and the
/// unit vectors e_i for labels <= max_label, then adds distinct random vectors
/// until `count` elements are present (or attempts run out).
inline std::vector<RealVector> sample_elements(const IndexSet& space, const SampleConfig& cfg) {
    cfg.validate();
    std::vector<RealVector> out{RealVector::zero(space)};
    const std::vector<Index> slots = bounded_indices(space, cfg.max_label);
    for (const Index& i : slots) out.push_back(RealVector::unit(space, i));
    if (slots.empty()) return out;

    std::mt19937_64 rng(cfg.seed);
    auto uniform = [&](std::int64_t lo, std::int64_t hi) {
        return std::uniform_int_distribution<std::int64_t>(lo, hi)(rng);
    };
    const auto target = static_cast<std::size_t>(cfg.count);
    for (std::size_t attempt = 0; out.size() < target && attempt < 20 * target; ++attempt) {
        std::int64_t terms = uniform(1, std::min<std::int64_t>(cfg.max_support, static_cast<std::int64_t>(slots.size())));
        std::vector<Index> pool = slots;
        std::vector<Term> finite;
        for (std::int64_t t = 0; t < terms; ++t) {
            auto pick = static_cast<std::size_t>(uniform(t, static_cast<std::int64_t>(pool.size()) - 1));
            std::swap(pool[static_cast<std::size_t>(t)], pool[pick]);
            const Index& at = pool[static_cast<std::size_t>(t)];
            Rational q(uniform(1, cfg.max_denominator), uniform(1, cfg.max_denominator));
            if (uniform(0, 1) == 1) q = -q;
            finite.emplace_back(at, Coordinate(q));
        }
        RealVector v = RealVector::make(space, std::move(finite));
        if (std::find(out.begin(), out.end(), v) == out.end()) out.push_back(std::move(v));
    }
    return out;
}

namespace detail {

// d = x_{<i} + q·e_i with q just below x_i, without checking i ∈ S. Returns
// nullopt when x_{<i} is not a group element.
inline std::optional<RealVector> separator_candidate(const CutDescriptor& d, const Index& i, const Coordinate& h_i) {
    const IndexSet& space = d.space();
    RealVector x = realize(d);
    RealVector prefix = truncate(base_part(x), InitialSegment::below(space, i));
    if (!in_gamma(prefix)) return std::nullopt;
    Coordinate x_i = x.at(i);
    // The upper end x_i is admissible when what follows i in x is a positive
    // infinitesimal at an added index.
    RealVector rest = x - truncate(base_part(x), InitialSegment::up_to(space, i));
    auto lead = natural_valuation(rest);
    bool closed = x_i.is_rational() && lead && lead->is_added() && rest.added()->value.sign() > 0;
    Rational q = simplest_rational_between(Endpoint{x_i - h_i, false}, Endpoint{x_i, closed});
    return prefix + RealVector::unit(space, i, Coordinate(q));
}

} // namespace detail

/// d ∈ D^L with d + h ∈ D^R, certifying h ∉ H(D). Requires h > 0 with val(h) ∈ S.
inline RealVector witness_separator(const CutDescriptor& d, const RealVector& h) {
    if (!in_gamma(h) || sign(h) <= 0) throw precondition_error("separator needs a positive group element");
    ExtendedIndex v = *natural_valuation(h);
    if (!d.segment().contains(v.index(), d.space()))
        throw precondition_error("h lies in the invariance group; no separator exists");
    auto sep = detail::separator_candidate(d, v.index(), h.at(v.index()));
    if (!sep) throw std::logic_error("separator prefix is not a group element");
    return *sep;
}

/// z(1) < ... < z(n) in D^L for an nb+NG cut: the realization truncated before
/// its k-th support index, plus that coordinate lowered by 1/2.
inline std::vector<RealVector> cofinal_sequence(const CutDescriptor& d, std::size_t n) {
    if (cut_type(d) != CutType::NonBallNoGap) throw precondition_error("cofinal_sequence expects an nb+NG cut");
    if (n < 1) throw precondition_error("cofinal_sequence needs n >= 1");
    const RealVector& x = d.as_nonball().realization;
    const IndexSet& space = x.space();
    std::vector<RealVector> out;
    for (std::size_t k = 0; k < n; ++k) {
        Index at = x.base_support(k);
        RealVector prefix = truncate(x, InitialSegment::below(space, at));
        Coordinate lowered = x.at(at) - Coordinate(Rational(1, 2));
        out.push_back(prefix + RealVector::unit(space, at, lowered));
    }
    return out;
}

/// For an nb+G cut realized by x_T + ξ·e_m: x_T + q_k·e_m with q_k the
/// continued-fraction convergents of ξ from below.
inline std::vector<RealVector> approach_sequence(const CutDescriptor& d, std::size_t n) {
    if (cut_type(d) != CutType::NonBallGap) throw precondition_error("approach_sequence expects an nb+G cut");
    const RealVector& x = d.as_nonball().realization;
    const IndexSet& space = x.space();
    Index top = *seg_has_max(d.segment(), space);
    RealVector prefix = truncate(x, InitialSegment::below(space, top));
    std::vector<RealVector> out;
    for (const Rational& q : lower_convergents(x.at(top), n))
        out.push_back(prefix + RealVector::unit(space, top, Coordinate(q)));
    return out;
}

// ---------------------------------------------------------------------------
// Reports

struct Violation {
    std::string check;
    std::string detail;

    friend bool operator==(const Violation&, const Violation&) = default;
};

struct OracleReport {
    std::vector<Violation> violations;
    std::size_t checked = 0;
    std::uint64_t seed = 0;

    bool ok() const { return violations.empty(); }

    void merge(OracleReport other) {
        for (Violation& v : other.violations) violations.push_back(std::move(v));
        checked += other.checked;
    }

    friend bool operator==(const OracleReport&, const OracleReport&) = default;
};

/// Group elements next to the cut at every bounded level, plus the sample.
inline std::vector<RealVector> probe_points(const CutDescriptor& d, const SampleConfig& cfg) {
    const IndexSet& space = d.space();
    std::vector<RealVector> out = sample_elements(space, cfg);
    RealVector x = realize(d);
    for (const RealVector& center : {truncate(base_part(x), d.segment())})
        if (in_gamma(center)) out.push_back(center);
    for (const Index& i : bounded_indices(space, cfg.max_label + 1)) {
        if (auto sep = detail::separator_candidate(d, i, Coordinate(1))) {
            out.push_back(*sep);
            out.push_back(*sep + RealVector::unit(space, i));
        }
    }
    return out;
}

/// Definitional test of the claimed invariance segment (default: the computed one).
inline OracleReport check_invariance(const CutDescriptor& d, const SampleConfig& cfg,
                                     std::optional<InitialSegment> claimed = std::nullopt) {
    const IndexSet& space = d.space();
    InitialSegment s = claimed ? *claimed : invariance_segment(d);
    OracleReport report;
    report.seed = cfg.seed;
    const std::vector<RealVector> samples = sample_elements(space, cfg);
    const std::vector<RealVector> probes = probe_points(d, cfg);
    for (const RealVector& raw : samples) {
        if (raw.is_zero()) continue;
        RealVector h = abs(raw);
        Index i = natural_valuation(h)->index();
        if (!s.contains(i, space)) {
            for (const RealVector& a : probes) {
                ++report.checked;
                if (side_of(a, d) != side_of(a + h, d))
                    report.violations.push_back({"invariance", "h claimed in H(D) moves the cut across a probe point"});
            }
        } else {
            ++report.checked;
            auto sep = detail::separator_candidate(d, i, h.at(i));
            if (!sep || side_of(*sep, d) != SideOf::Left || side_of(*sep + h, d) != SideOf::Right)
                report.violations.push_back({"invariance", "h claimed outside H(D) has no separator"});
        }
    }
    return report;
}

namespace detail {

inline InitialSegment segment_below(const ExtendedIndex& v, const IndexSet& space) {
    if (v.is_added()) return v.segment();
    return InitialSegment::below(space, v.index());
}

// V_f of the left side of d against the claim (segment, stable).
inline OracleReport check_final_covariance(const CutDescriptor& d, const InitialSegment& claim, bool stable,
                                           const SampleConfig& cfg, const std::string& label) {
    const IndexSet& space = d.space();
    OracleReport report;
    RealVector x = realize(d);
    std::vector<InitialSegment> spans;
    for (const RealVector& a : probe_points(d, cfg)) {
        if (side_of(a, d) != SideOf::Left) continue;
        spans.push_back(segment_below(*natural_valuation(x - a), space));
    }
    bool attained = false;
    for (const InitialSegment& t : spans) {
        ++report.checked;
        if (seg_compare(t, claim, space) > 0)
            report.violations.push_back({label, "some V(d) is smaller than the claimed group"});
        if (t == claim) attained = true;
    }
    for (const Index& j : bounded_indices(space, cfg.max_label)) {
        if (!claim.contains(j, space)) continue;
        ++report.checked;
        bool reached = std::any_of(spans.begin(), spans.end(), [&](const InitialSegment& t) { return t.contains(j, space); });
        if (!reached) report.violations.push_back({label, "the claimed group is smaller than every sampled V(d)"});
    }
    ++report.checked;
    if (stable && !attained) report.violations.push_back({label, "claimed stable but no element attains it"});
    if (!stable && attained) report.violations.push_back({label, "claimed unstable but an element attains it"});
    return report;
}

} // namespace detail

/// Definitional test of the covariance columns of a classification report.
inline OracleReport check_covariance(const CutDescriptor& d, const ClassificationReport& claim, const SampleConfig& cfg) {
    OracleReport report;
    report.seed = cfg.seed;
    report.merge(detail::check_final_covariance(d, claim.vf, claim.vf_stable, cfg, "covariance V_f"));
    report.merge(detail::check_final_covariance(negate(d), claim.vi, claim.vi_stable, cfg, "covariance V_i"));
    return report;
}

/// Everything the oracle can say about one cut and its claimed classification.
inline OracleReport check_cut(const CutDescriptor& d, const ClassificationReport& claim, const SampleConfig& cfg) {
    OracleReport report = check_invariance(d, cfg, claim.invariance);
    report.merge(check_covariance(d, claim, cfg));
    if (claim.rank_increases != realization_has_added_coordinate(d))
        report.violations.push_back({"rank", "rank increase disagrees with the realization"});
    ++report.checked;
    return report;
}

} // namespace cutkit
