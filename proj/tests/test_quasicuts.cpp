#include <gtest/gtest.h>

#include "cutkit/quasicuts.hpp"
#include "support.hpp"

using namespace cutkit;
using namespace cutkit::testing;

namespace {

std::vector<IndexSet> spaces() { return {Q(), IndexSet({Atom::fin(3)}), W(), WW(), F1Wop(), WWop()}; }

CutDescriptor random_cut(Gen& g, const IndexSet& space) {
    if (g.coin(50)) {
        Side side = g.coin() ? Side::Plus : Side::Minus;
        return CutDescriptor::ball(g.group_element(space), g.segment(space, 5), side);
    }
    for (;;) {
        RealVector x = g.vector(space, 40, 50, 0);
        if (!in_gamma(x)) return CutDescriptor::from_vector(x);
    }
}

QuasiCutPoint random_point(Gen& g, const IndexSet& space) {
    if (g.coin(35)) return QuasiCutPoint::interior(g.group_element(space));
    return QuasiCutPoint::cut(random_cut(g, space));
}

// Window-based comparison of two realizations, independent of cmp_lex.
int window_cmp(const QuasiCutPoint& p, const QuasiCutPoint& q) {
    RealVector a = p.realization(), b = q.realization();
    Window w(a.space(), 12, added_segments({&a, &b}));
    return lex_sign(w.read(a), w.read(b));
}

// Where a group element sits against a point, asked through side_of for cuts.
int against(const RealVector& a, const QuasiCutPoint& p) {
    if (p.is_interior()) return ord(cmp_lex(a, p.as_interior()));
    return side_of(a, p.as_cut()) == SideOf::Left ? -1 : 1;
}

} // namespace

TEST(QcutCompare, Examples) {
    IndexSet q = Q();
    auto zero = QuasiCutPoint::interior(RealVector::zero(q));
    auto zp = QuasiCutPoint::cut(zero_plus(q)), zm = QuasiCutPoint::cut(zero_minus(q));
    EXPECT_LT(ord(qcut_compare(zm, zero)), 0);
    EXPECT_LT(ord(qcut_compare(zero, zp)), 0);
    EXPECT_LT(ord(qcut_compare(zm, zp)), 0);
    auto s = QuasiCutPoint::cut(CutDescriptor::from_vector(vec(q, {{{1, 1}, "1*r2"}})));
    EXPECT_LT(ord(qcut_compare(QuasiCutPoint::interior(vec(q, {{{1, 1}, "1"}})), s)), 0);
    EXPECT_EQ(ord(qcut_compare(s, s)), 0);
    EXPECT_THROW(QuasiCutPoint::interior(vec(q, {{{1, 1}, "1*r2"}})), validation_error);
}

TEST(QcutCompare, ChainAroundEveryCoset) {
    for (const IndexSet& space : spaces())
        for (const InitialSegment& s : segments(space, 4)) {
            RealVector b = vec(space, {{{1, 1}, "3/4"}});
            auto lo = QuasiCutPoint::cut(CutDescriptor::ball(b, s, Side::Minus));
            auto hi = QuasiCutPoint::cut(CutDescriptor::ball(b, s, Side::Plus));
            auto mid = QuasiCutPoint::interior(b);
            ASSERT_LT(ord(qcut_compare(lo, mid)), 0);
            ASSERT_LT(ord(qcut_compare(mid, hi)), 0);
        }
}

TEST(QcutCompare, TotalOrderAgreeingWithWindow) {
    Gen g(51);
    for (const IndexSet& space : spaces())
        for (int n = 0; n < 400; ++n) {
            QuasiCutPoint p = random_point(g, space), q = random_point(g, space), r = random_point(g, space);
            int pq = ord(qcut_compare(p, q));
            ASSERT_EQ(pq, window_cmp(p, q));
            ASSERT_EQ(pq, -ord(qcut_compare(q, p)));
            ASSERT_EQ(pq == 0, p == q);
            if (pq <= 0 && qcut_compare(q, r) <= 0) { ASSERT_LE(ord(qcut_compare(p, r)), 0); }
        }
}

TEST(QcutCompare, InteriorIsOrderEmbedding) {
    Gen g(52);
    for (const IndexSet& space : spaces())
        for (int n = 0; n < 300; ++n) {
            RealVector a = g.group_element(space), b = g.group_element(space);
            ASSERT_EQ(ord(qcut_compare(QuasiCutPoint::interior(a), QuasiCutPoint::interior(b))), ord(cmp_lex(a, b)));
        }
}

TEST(SmeEquivalent, Examples) {
    IndexSet f2({Atom::fin(2)});
    EXPECT_TRUE(sme_equivalent(vec(f2, {{{1, 1}, "1*r2"}}), vec(f2, {{{1, 1}, "1*r2"}, {{1, 2}, "5"}})));
    EXPECT_FALSE(sme_equivalent(vec(f2, {{{1, 1}, "1*r2"}}), vec(f2, {{{1, 1}, "1+1*r2"}})));
    EXPECT_TRUE(sme_equivalent(vec(f2, {{{1, 1}, "3/2"}}), vec(f2, {{{1, 1}, "3/2"}})));
    EXPECT_FALSE(sme_equivalent(vec(f2, {{{1, 1}, "3/2"}}), vec(f2, {{{1, 1}, "3/2"}, {{1, 2}, "1"}})));
}

TEST(SmeEquivalent, EquivalentVectorsSeparateTheGroupAlike) {
    Gen g(53);
    int pairs = 0;
    for (const IndexSet& space : spaces())
        for (int n = 0; n < 200; ++n) {
            RealVector x = g.vector(space, 40, 40, 0);
            if (in_gamma(x)) continue;
            // Perturb below the valuation of the hull: stays in the same class.
            CutDescriptor d = cut_of(x);
            RealVector y = x;
            for (const Index& i : ascending(space, 6))
                if (!invariance_segment(d).contains(i, space)) {
                    y = x + RealVector::unit(space, i, Coordinate(g.rational()));
                    break;
                }
            ASSERT_TRUE(sme_equivalent(x, x));
            ASSERT_EQ(sme_equivalent(x, y), sme_equivalent(y, x));
            if (!sme_equivalent(x, y)) continue;
            ++pairs;
            for (int k = 0; k < 20; ++k) {
                RealVector a = g.group_element(space, 7);
                ASSERT_EQ(ord(cmp_lex(a, x)), ord(cmp_lex(a, y)));
            }
        }
    EXPECT_GT(pairs, 100);
}

TEST(Between, Examples) {
    IndexSet q = Q();
    auto zp = QuasiCutPoint::cut(zero_plus(q)), zm = QuasiCutPoint::cut(zero_minus(q));
    EXPECT_EQ(between(zm, zp), RealVector::zero(q));
    auto s = QuasiCutPoint::cut(CutDescriptor::from_vector(vec(q, {{{1, 1}, "1*r2"}})));
    EXPECT_EQ(between(s, QuasiCutPoint::interior(vec(q, {{{1, 1}, "2"}}))), vec(q, {{{1, 1}, "3/2"}}));
    EXPECT_EQ(between(QuasiCutPoint::interior(vec(q, {{{1, 1}, "1"}})), s), vec(q, {{{1, 1}, "1"}}));
    EXPECT_THROW(between(s, s), precondition_error);
    EXPECT_THROW(between(zp, zm), precondition_error);
}

TEST(Between, WitnessOnRandomPairs) {
    Gen g(54);
    int checked = 0;
    for (const IndexSet& space : spaces())
        for (int n = 0; n < 100;) {
            QuasiCutPoint p = random_point(g, space), q = random_point(g, space);
            int c = ord(qcut_compare(p, q));
            if (c == 0) continue;
            if (c > 0) std::swap(p, q);
            RealVector a = between(p, q);
            ASSERT_TRUE(in_gamma(a));
            ASSERT_GE(against(a, p), 0);
            ASSERT_LE(against(a, q), 0);
            if (!p.is_interior()) { ASSERT_EQ(against(a, p), 1); }
            ++checked;
            ++n;
        }
    EXPECT_GE(checked, 500);
}

TEST(Between, SupremumOfFiniteInteriorSetIsItsMax) {
    Gen g(55);
    for (const IndexSet& space : spaces())
        for (int n = 0; n < 50; ++n) {
            std::vector<QuasiCutPoint> pts;
            for (int k = 0; k < 5; ++k) pts.push_back(QuasiCutPoint::interior(g.group_element(space)));
            auto top = *std::max_element(pts.begin(), pts.end(),
                                         [](const auto& a, const auto& b) { return qcut_compare(a, b) < 0; });
            for (const auto& p : pts) ASSERT_LE(ord(qcut_compare(p, top)), 0);
        }
}
