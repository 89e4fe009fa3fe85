#include <gtest/gtest.h>

#include <facial/facial.hpp>

#include "corpus.hpp"

using namespace facial;
using namespace facial::testing;

namespace {

ErrorCode code_of(const std::function<void()>& fn)
{
    try {
        fn();
    } catch (const Error& e) {
        return e.code();
    }
    return ErrorCode::Format;
}

bool in_open_square(const QVec& p)
{
    return p[0] > 0 && p[0] < 1 && p[1] > 0 && p[1] < 1;
}

// (0,1)×{0} with strict ends, and {0}×[0,1]
HSet open_bottom() { return strict_corpus()[2].set.h(); }
VSet left_edge() { return vset(2, {q({0, 0}), q({0, 1})}); }

} // namespace

TEST(IcrContains, SquareAndFlatSegment)
{
    ConvexSet sq = unit_square();
    EXPECT_TRUE(icr_contains(sq, {Rat(1, 2), Rat(1, 2)}));
    EXPECT_FALSE(icr_contains(sq, {Rat(1, 2), Rat(0)}));
    // relative, not ambient, interior
    EXPECT_TRUE(icr_contains(flat_segment(), {Rat(1, 2), Rat(0)}));
    EXPECT_FALSE(icr_contains(flat_segment(), q({1, 0})));
    for (auto m : kIcrMethods) {
        EXPECT_TRUE(icr_contains(flat_segment(), {Rat(1, 2), Rat(0)}, m)) << method_name(m);
        EXPECT_FALSE(icr_contains(sq, q({0, 1}), m)) << method_name(m);
    }
    EXPECT_EQ(code_of([&] { icr_contains(sq, q({2, 2})); }), ErrorCode::NotMember);
}

TEST(IcrContains, SingletonIsItsOwnCore)
{
    EXPECT_TRUE(icr_contains(corpus()[2].set, q({2})));
    EXPECT_TRUE(icr_contains(corpus()[15].set, {Rat(1, 2), Rat(1, 3)}));
}

TEST(IcrContains, StrictSets)
{
    auto hos = strict_corpus()[0].set;
    EXPECT_TRUE(icr_contains(hos, {Rat(1, 2), Rat(1, 2)}));
    EXPECT_FALSE(icr_contains(hos, {Rat(1, 2), Rat(1)}));
    EXPECT_FALSE(icr_contains(hos, {Rat(0), Rat(1, 2)}));
    EXPECT_TRUE(icr_contains(strict_corpus()[1].set, {Rat(1, 3), Rat(2, 3)}));
}

TEST(IcrContains, FourWayAgreementOnCorpus)
{
    Lcg rng(0);
    std::size_t pairs = 0;
    for (const auto& e : corpus()) {
        auto pts = sample_points(e.set, rng, 12);
        auto ri = sample_relative_interior(e.set, rng, 4);
        pts.insert(pts.end(), ri.begin(), ri.end());
        for (const auto& x : pts) {
            auto r = icr_report(e.set, x);
            EXPECT_TRUE(r.agree()) << e.name << " at " << to_string(x);
            ++pairs;
        }
    }
    EXPECT_GE(pairs, 300u);
}

TEST(RelativeInterior, Examples)
{
    auto ri = relative_interior(unit_square());
    ASSERT_TRUE(ri.is_h());
    EXPECT_EQ(ri.h().lt.size(), 4u);
    EXPECT_TRUE(ri.h().le.empty());
    for (const auto& p : grid_points(box(q({-1, -1}), q({2, 2})), 6))
        EXPECT_EQ(contains(ri, p), in_open_square(p));

    auto seg = relative_interior(flat_segment());
    EXPECT_EQ(seg.h().eq.size(), 2u);
    EXPECT_EQ(seg.h().lt.size(), 2u);
    EXPECT_TRUE(contains(seg, {Rat(1, 2), Rat(0)}));
    EXPECT_FALSE(contains(seg, q({0, 0})));

    auto pt = relative_interior(corpus()[2].set);
    EXPECT_TRUE(contains(pt, q({2})));
    EXPECT_FALSE(contains(pt, {Rat(21, 10)}));

    EXPECT_EQ(code_of([] { relative_interior(hset(1, {{q({1}), 0}, {q({-1}), -1}})); }), ErrorCode::EmptySet);
}

TEST(RelativeInterior, IdempotentConvexAndMatchesIcr)
{
    Lcg rng(6);
    for (const auto& e : corpus()) {
        if (!e.bounded && e.set.dim() > 2)
            continue;
        auto ri = relative_interior(e.set);
        auto ri2 = relative_interior(ri);
        auto pts = sample_points(e.set, rng, 16);
        for (const auto& x : pts) {
            EXPECT_EQ(contains(ri, x), contains(ri2, x)) << e.name;
            EXPECT_EQ(contains(ri, x), icr_contains(e.set, x, IcrMethod::MinFace)) << e.name;
        }
        auto inner = sample_relative_interior(e.set, rng, 10);
        for (std::size_t i = 0; i + 1 < inner.size(); ++i) {
            ASSERT_TRUE(contains(ri, inner[i]));
            EXPECT_TRUE(contains(ri, Rat(1, 2) * (inner[i] + inner[i + 1]))) << e.name;
        }
    }
}

// x ∈ icr C, y ∈ C: [x, y) ⊆ icr C, and some z ∈ icr C has x ∈ (z, y)
TEST(RelativeInterior, HalfOpenSegments)
{
    Lcg rng(12);
    for (const auto& e : corpus()) {
        if (!e.bounded)
            continue;
        HSet h = as_hset(e.set);
        auto ri = relative_interior(e.set);
        auto xs = sample_relative_interior(e.set, rng, 4);
        auto ys = sample_points(e.set, rng, 4);
        for (const auto& x : xs)
            for (const auto& y : ys) {
                for (const auto& s : {Rat(0), Rat(1, 3), Rat(9, 10), Rat(99, 100)})
                    EXPECT_TRUE(contains(ri, x + s * (y - x))) << e.name;
                if (y == x)
                    continue;
                // largest t with x + t(x - y) ∈ C, then halve it
                LinearSystem s;
                s.dim = 1;
                for (const auto& r : h.le)
                    s.le.push_back({QVec{dot(r.a, x - y)}, r.b - dot(r.a, x)});
                for (const auto& r : h.eq)
                    s.eq.push_back({QVec{dot(r.a, x - y)}, r.b - dot(r.a, x)});
                s.le.push_back({QVec{Rat(1)}, 1});
                auto lp = lp_solve(QVec{Rat(1)}, s);
                ASSERT_EQ(lp.status, LpStatus::Optimal);
                ASSERT_GT(lp.value, 0) << e.name;
                QVec z = x + lp.value / 2 * (x - y);
                EXPECT_TRUE(contains(ri, z)) << e.name;
            }
    }
}

TEST(Decompose, Counts)
{
    EXPECT_EQ(decompose(unit_square()).size(), 9u);
    EXPECT_EQ(decompose(box(q({0}), q({1}))).size(), 3u);
    EXPECT_EQ(decompose(corpus()[2].set).size(), 1u);
    EXPECT_TRUE(decompose(hset(1, {{q({1}), 0}, {q({-1}), -1}})).empty());
}

TEST(Decompose, GridPartition)
{
    for (const auto& e : corpus()) {
        if (!e.bounded || e.set.dim() > 3)
            continue;
        Decomposition d(e.set);
        for (const auto& x : grid_points(e.set, 3)) {
            auto holders = d.holders(x);
            ASSERT_EQ(holders.size(), 1u) << e.name << " at " << to_string(x);
            EXPECT_EQ(d.faces()[holders[0]], minimal_face(e.set, x)) << e.name;
        }
    }
}

TEST(Locate, Examples)
{
    ConvexSet sq = unit_square();
    EXPECT_EQ(locate(sq, {Rat(1, 2), Rat(0)}).active, (std::vector<std::size_t>{2}));
    EXPECT_EQ(locate(sq, q({0, 0})).dim, 0);
    EXPECT_EQ(locate(sq, {Rat(1, 3), Rat(2, 3)}), full_face(sq));
    EXPECT_EQ(code_of([&] { locate(sq, q({3, 0})); }), ErrorCode::NotMember);
    // strict sets fall back to the minimal face
    auto hos = strict_corpus()[0].set;
    EXPECT_EQ(locate(hos, {Rat(0), Rat(1, 2)}), minimal_face(hos, {Rat(0), Rat(1, 2)}));
}

TEST(HasProperFaces, Examples)
{
    EXPECT_FALSE(has_proper_faces(hset(2, {}, {{q({0, 1}), 1}})));
    EXPECT_TRUE(has_proper_faces(unit_square()));
    EXPECT_FALSE(has_proper_faces(strict_corpus()[1].set));
    EXPECT_TRUE(has_proper_faces(strict_corpus()[0].set));
    EXPECT_FALSE(has_proper_faces(corpus()[23].set)); // line in R^3
    EXPECT_FALSE(has_proper_faces(corpus()[15].set)); // single point
    EXPECT_TRUE(has_proper_faces(triangle()));
    for (const auto& e : corpus()) {
        auto ri = relative_interior(e.set);
        EXPECT_FALSE(has_proper_faces(ri)) << e.name;
    }
}

TEST(Calculus, SumOfOrthogonalSegments)
{
    CalcOperands ops{{ConvexSet(vset(2, {q({0, 0}), q({1, 0})})), ConvexSet(left_edge())}, {}, {}, {}};
    auto v = check_calculus(CalcLaw::Sum, ops, {200, 0});
    EXPECT_TRUE(v.holds);
    EXPECT_GE(v.checked, 200u);
    auto s = calculus_composite(CalcLaw::Sum, ops);
    auto ri = relative_interior(s);
    for (const auto& p : grid_points(box(q({-1, -1}), q({2, 2})), 6))
        EXPECT_EQ(contains(ri, p), in_open_square(p));
}

TEST(Calculus, HalfOpenSumIsNotItsCore)
{
    CalcOperands ops{{ConvexSet(open_bottom()), ConvexSet(left_edge())}, {}, {}, {}};
    auto v = check_calculus(CalcLaw::Sum, ops, {200, 0});
    EXPECT_TRUE(v.holds);
    auto s = calculus_composite(CalcLaw::Sum, ops);
    const QVec witness{Rat(1, 2), Rat(0)};
    EXPECT_TRUE(contains(s, witness));
    EXPECT_FALSE(icr_contains(s, witness));
    for (const auto& p : grid_points(box(q({-1, -1}), q({2, 2})), 6))
        if (contains(s, p))
            EXPECT_EQ(icr_contains(s, p), in_open_square(p)) << to_string(p);
}

TEST(Calculus, ScaleTranslateImageProductHull)
{
    const CalcOperands sq{{ConvexSet(unit_square())}, {}, {}, {}};
    auto with = [](CalcOperands o, auto edit) {
        edit(o);
        return o;
    };
    EXPECT_TRUE(check_calculus(CalcLaw::Scale, with(sq, [](auto& o) { o.scalar = Rat(-2); })).holds);
    EXPECT_TRUE(check_calculus(CalcLaw::Translate, with(sq, [](auto& o) { o.vector = QVec{Rat(3), Rat(-1, 2)}; })).holds);
    auto proj = with(sq, [](auto& o) { o.map = LinearMap{QMat::from_rows({q({1, 0})})}; });
    EXPECT_TRUE(check_calculus(CalcLaw::LinearImage, proj).holds);
    auto img = calculus_composite(CalcLaw::LinearImage, proj);
    EXPECT_TRUE(icr_contains(img, {Rat(1, 2)}));
    EXPECT_FALSE(icr_contains(img, q({0})));
    EXPECT_TRUE(
        check_calculus(CalcLaw::Product, CalcOperands{{ConvexSet(unit_square()), ConvexSet(triangle())}, {}, {}, {}})
            .holds);
    EXPECT_TRUE(check_calculus(CalcLaw::PositiveHull,
                               CalcOperands{{ConvexSet(vset(2, {q({1, 1}), q({2, 1})}))}, {}, {}, {}})
                    .holds);
}

TEST(Calculus, Errors)
{
    CalcOperands hull{{ConvexSet(vset(2, {q({-1, 0}), q({1, 0})}))}, {}, {}, {}};
    EXPECT_EQ(code_of([&] { check_calculus(CalcLaw::PositiveHull, hull); }), ErrorCode::UnsupportedComposite);
    CalcOperands image{{strict_corpus()[0].set}, {}, {}, LinearMap{QMat::from_rows({q({1, 0})})}};
    EXPECT_EQ(code_of([&] { check_calculus(CalcLaw::LinearImage, image); }), ErrorCode::UnsupportedComposite);
    CalcOperands one{{ConvexSet(unit_square())}, {}, {}, {}};
    EXPECT_EQ(code_of([&] { check_calculus(CalcLaw::Sum, one); }), ErrorCode::EmptyInput);
    EXPECT_EQ(code_of([&] { check_calculus(CalcLaw::Scale, one); }), ErrorCode::EmptyInput);
    EXPECT_EQ(code_of([&] { check_calculus(CalcLaw::Scale, one, {0, 0}); }), ErrorCode::EmptyInput);
}

TEST(Calculus, HoldingLawHasNoCounterexample)
{
    auto v = check_calculus(CalcLaw::Product, CalcOperands{{ConvexSet(box(q({0}), q({1}))),
                                                            ConvexSet(box(q({0}), q({1})))},
                                                           {}, {}, {}},
                            {50, 3});
    EXPECT_TRUE(v.holds);
    EXPECT_FALSE(v.counterexample.has_value());
}

TEST(Calculus, Deterministic)
{
    CalcOperands ops{{ConvexSet(triangle()), ConvexSet(unit_square())}, {}, {}, {}};
    auto a = check_calculus(CalcLaw::Sum, ops, {60, 42});
    auto b = check_calculus(CalcLaw::Sum, ops, {60, 42});
    EXPECT_EQ(a.holds, b.holds);
    EXPECT_EQ(a.checked, b.checked);
}
