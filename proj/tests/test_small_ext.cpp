#include <gtest/gtest.h>

#include "cutkit/small_ext.hpp"
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

GammaDElement random_element(Gen& g, const CutDescriptor& d) {
    return GammaDElement(d, Integer(g.between(-3, 3)), g.group_element(d.space()));
}

// m·x + b <= n·x + a  iff  (m - n)·x <= a - b, decided by asking on which side
// of D the group element (a - b)/(m - n) falls.
bool le_by_cut_rule(const GammaDElement& u, const GammaDElement& v) {
    Integer k = u.m - v.m;
    RealVector c = v.b - u.b;
    if (k == 0) return sign(c) >= 0;
    RealVector q = scale(Rational(1) / Rational(k), c);
    SideOf side = side_of(q, u.cut);
    return k > 0 ? side == SideOf::Right : side == SideOf::Left;
}

int cmp_by_cut_rule(const GammaDElement& u, const GammaDElement& v) {
    bool le = le_by_cut_rule(u, v), ge = le_by_cut_rule(v, u);
    if (le && ge) return 0;
    return le ? -1 : 1;
}

} // namespace

TEST(Realize, Examples) {
    IndexSet q = Q();
    EXPECT_EQ(realize(zero_plus(q)), RealVector::unit_added(q, InitialSegment::full(q)));
    EXPECT_EQ(realize(zero_minus(q)), RealVector::unit_added(q, InitialSegment::full(q), Coordinate(-1)));
    RealVector s = vec(q, {{{1, 1}, "1*r2"}});
    EXPECT_EQ(realize(CutDescriptor::from_vector(s)), s);
}

TEST(GdCompare, Examples) {
    IndexSet q = Q();
    CutDescriptor s = CutDescriptor::from_vector(vec(q, {{{1, 1}, "1*r2"}}));
    EXPECT_LT(ord(gd_compare(GammaDElement(s, 1, RealVector::zero(q)), GammaDElement(s, 0, vec(q, {{{1, 1}, "3/2"}})))), 0);

    RealVector b = vec(q, {{{1, 1}, "2/3"}}), b2 = vec(q, {{{1, 1}, "-5"}});
    EXPECT_EQ(gd_compare(GammaDElement(s, 0, b), GammaDElement(s, 0, b2)), cmp_lex(b, b2));

    CutDescriptor zp = zero_plus(q);
    GammaDElement x(zp, 1, RealVector::zero(q));
    for (auto r : {"1", "1/1000", "7"}) EXPECT_LT(ord(gd_compare(x, GammaDElement(zp, 0, vec(q, {{{1, 1}, r}})))), 0);
    for (auto r : {"0", "-1/1000", "-7"}) EXPECT_GT(ord(gd_compare(x, GammaDElement(zp, 0, vec(q, {{{1, 1}, r}})))), 0);
}

TEST(GdCompare, MismatchedCutsRejected) {
    IndexSet q = Q();
    EXPECT_THROW(gd_compare(GammaDElement(zero_plus(q), 1, RealVector::zero(q)), GammaDElement(zero_minus(q), 1, RealVector::zero(q))),
                 validation_error);
    EXPECT_THROW(GammaDElement(zero_plus(W()), 1, ones_tail(W())), validation_error);
}

TEST(GdCompare, AgreesWithCutRule) {
    Gen g(41);
    for (const IndexSet& space : spaces())
        for (int n = 0; n < 150; ++n) {
            CutDescriptor d = random_cut(g, space);
            for (int k = 0; k < 10; ++k) {
                GammaDElement u = random_element(g, d), v = random_element(g, d);
                ASSERT_EQ(ord(gd_compare(u, v)), cmp_by_cut_rule(u, v));
            }
        }
}

TEST(GdCompare, TotalOrderCompatibleWithAddition) {
    Gen g(42);
    for (const IndexSet& space : spaces())
        for (int n = 0; n < 100; ++n) {
            CutDescriptor d = random_cut(g, space);
            for (int k = 0; k < 10; ++k) {
                GammaDElement u = random_element(g, d), v = random_element(g, d), w = random_element(g, d);
                int uv = ord(gd_compare(u, v));
                ASSERT_EQ(uv, -ord(gd_compare(v, u)));
                ASSERT_EQ(uv == 0, u == v);
                if (uv < 0 && gd_compare(v, w) < 0) { ASSERT_LT(ord(gd_compare(u, w)), 0); }
                ASSERT_EQ(ord(gd_compare(u + w, v + w)), uv);
                ASSERT_EQ(ord(gd_compare(-v, -u)), uv);
            }
        }
}

TEST(GdValuation, Examples) {
    IndexSet q = Q();
    CutDescriptor zp = zero_plus(q);
    EXPECT_EQ(gd_valuation(GammaDElement(zp, 1, RealVector::zero(q))), ExtendedIndex::added(InitialSegment::full(q)));
    EXPECT_EQ(gd_valuation(GammaDElement(zp, 1, vec(q, {{{1, 1}, "1"}}))), ExtendedIndex::base({1, 1}));
    EXPECT_FALSE(gd_valuation(GammaDElement(zp, 0, RealVector::zero(q))));
}

TEST(GdValuation, NewClassExactlyForBalls) {
    Gen g(43);
    for (const IndexSet& space : spaces())
        for (int n = 0; n < 150; ++n) {
            CutDescriptor d = random_cut(g, space);
            bool added_seen = false;
            for (int k = 0; k < 20; ++k) {
                auto v = gd_valuation(random_element(g, d));
                if (v && v->is_added()) added_seen = true;
                if (v && !d.is_ball()) { ASSERT_TRUE(v->is_base()); }
            }
            if (d.is_ball()) {
                GammaDElement u(d, 1, -d.as_ball().center);
                ASSERT_EQ(gd_valuation(u), ExtendedIndex::added(d.segment()));
            } else {
                ASSERT_FALSE(added_seen);
            }
        }
}

TEST(RankIncreases, Examples) {
    EXPECT_TRUE(rank_increases(zero_plus(Q())));
    EXPECT_FALSE(rank_increases(CutDescriptor::from_vector(vec(Q(), {{{1, 1}, "1*r2"}}))));
    EXPECT_FALSE(rank_increases(CutDescriptor::from_vector(ones_tail(W()))));
}

TEST(RankIncreases, ThreeWaysAgree) {
    Gen g(44);
    for (const IndexSet& space : spaces())
        for (int n = 0; n < 100; ++n) {
            CutDescriptor d = random_cut(g, space);
            ASSERT_EQ(rank_increases(d), realization_has_added_coordinate(d));
            ASSERT_EQ(rank_increases(d), is_ball_type(classify(d).type6));
        }
}

TEST(Transport, OrderIsomorphism) {
    Gen g(45);
    for (const IndexSet& space : spaces())
        for (int n = 0; n < 100; ++n) {
            CutDescriptor d = random_cut(g, space);
            int eps = g.coin() ? 1 : -1;
            RealVector a = g.group_element(space);
            for (int k = 0; k < 20; ++k) {
                GammaDElement u = random_element(g, d), v = random_element(g, d);
                GammaDElement tu = transport(u, eps, a), tv = transport(v, eps, a);
                ASSERT_EQ(tu.cut, act(d, eps, a));
                ASSERT_EQ(ord(gd_compare(tu, tv)), ord(gd_compare(u, v)));
                // Γ is fixed pointwise.
                if (u.m == 0) { ASSERT_EQ(tu.b, u.b); }
            }
        }
}
