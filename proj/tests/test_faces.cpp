#include <gtest/gtest.h>

#include <facial/facial.hpp>

#include "corpus.hpp"
#include "oracles.hpp"

using namespace facial;
using namespace facial::testing;

namespace {

// square rows: 0: -x ≤ 0, 1: x ≤ 1, 2: -y ≤ 0, 3: y ≤ 1
const std::vector<std::size_t> kBottom{2}, kLeft{0}, kTop{3}, kOrigin{0, 2};

std::vector<std::size_t> active(const FaceDescriptor& f) { return f.active; }

ErrorCode code_of(const std::function<void()>& fn)
{
    try {
        fn();
    } catch (const Error& e) {
        return e.code();
    }
    return ErrorCode::Format;
}

bool lattice_capable(const CorpusEntry& e)
{
    return e.bounded || !e.set.is_h() || e.set.h().le.size() <= kLatticeMaxRows;
}

} // namespace

TEST(MinimalFace, SquareExamples)
{
    ConvexSet sq = unit_square();
    EXPECT_EQ(active(minimal_face(sq, q({0, 0}))), kOrigin);
    EXPECT_EQ(minimal_face(sq, q({0, 0})).dim, 0);
    auto edge = minimal_face(sq, {Rat(1, 2), Rat(0)});
    EXPECT_EQ(active(edge), kBottom);
    EXPECT_EQ(edge.dim, 1);
    auto full = minimal_face(sq, {Rat(1, 2), Rat(1, 2)});
    EXPECT_TRUE(full.active.empty());
    EXPECT_EQ(full, full_face(sq));
    EXPECT_EQ(code_of([&] { minimal_face(sq, q({2, 0})); }), ErrorCode::NotMember);
}

TEST(MinimalFace, GeneratorForm)
{
    ConvexSet t = triangle();
    auto f = minimal_face(t, {Rat(1, 2), Rat(0)});
    EXPECT_EQ(f.points, (std::vector<std::size_t>{0, 1}));
    EXPECT_EQ(f.dim, 1);
    auto quad = minimal_face(corpus()[8].set, q({3, 0}));
    EXPECT_EQ(quad.points, (std::vector<std::size_t>{0}));
    EXPECT_EQ(quad.rays, (std::vector<std::size_t>{0}));
}

TEST(MinimalFace, OfSet)
{
    ConvexSet sq = unit_square();
    EXPECT_EQ(active(minimal_face_of_set(sq, {q({0, 0}), q({1, 0})})), kBottom);
    EXPECT_EQ(minimal_face_of_set(sq, {{Rat(1, 2), Rat(1, 2)}}), full_face(sq));
    EXPECT_EQ(minimal_face_of_set(sq, {q({0, 0}), q({1, 1})}), full_face(sq));
    EXPECT_EQ(code_of([&] { minimal_face_of_set(sq, {}); }), ErrorCode::EmptyInput);
    EXPECT_EQ(code_of([&] { minimal_face_of_set(sq, {q({0, 0}), q({3, 0})}); }), ErrorCode::NotMember);
}

TEST(MinimalFace, OfSetIsLeastLatticeNode)
{
    Lcg rng(31);
    for (const auto& e : corpus()) {
        if (!e.bounded || e.set.dim() > 3)
            continue;
        auto lattice = face_lattice(e.set);
        auto pool = sample_points(e.set, rng, 12);
        for (int t = 0; t < 6; ++t) {
            std::vector<QVec> s;
            for (int k = rng.uniform(1, 3); k > 0; --k)
                s.push_back(pool[rng.uniform(0, static_cast<long>(pool.size()) - 1)]);
            auto f = minimal_face_of_set(e.set, s);
            EXPECT_EQ(f, minimal_face(e.set, barycenter(s)));
            // least node containing every point of s
            const FaceDescriptor* least = nullptr;
            for (const auto& n : lattice.nodes) {
                if (n.empty())
                    continue;
                bool all = std::all_of(s.begin(), s.end(), [&](const QVec& p) { return face_contains(n, p); });
                if (all && (!least || face_subset(n, *least)))
                    least = &n;
            }
            ASSERT_NE(least, nullptr);
            EXPECT_EQ(f, *least) << e.name;
        }
    }
}

TEST(IsFace, Examples)
{
    ConvexSet sq = unit_square();
    EXPECT_TRUE(is_face(sq, active_face(sq, kBottom)));
    EXPECT_TRUE(is_face(sq, minimal_face(sq, q({0, 0}))));
    EXPECT_TRUE(is_face(sq, facial::detail::empty_face(facial::detail::share(sq))));
    HSet diagonal = hset(2, {{q({-1, 0}), 0}, {q({1, 0}), 1}, {q({0, -1}), 0}, {q({0, 1}), 1}}, {{q({1, 1}), 1}});
    EXPECT_FALSE(is_face(sq, ConvexSet(diagonal)));
    EXPECT_TRUE(is_face(sq, ConvexSet(vset(2, {q({0, 1}), q({1, 1})}))));
    EXPECT_FALSE(is_face(sq, ConvexSet(vset(2, {q({0, 1}), {Rat(1, 2), Rat(1)}}))));
}

TEST(FaceIntersection, Examples)
{
    ConvexSet sq = unit_square();
    auto s = facial::detail::share(sq);
    auto bottom = active_face(s, kBottom), left = active_face(s, kLeft), top = active_face(s, kTop);
    EXPECT_EQ(active(face_intersection(bottom, left)), kOrigin);
    EXPECT_TRUE(face_intersection(bottom, top).empty());
    EXPECT_EQ(face_intersection(full_face(s), bottom), bottom);
    auto other = active_face(box(q({0, 0}), q({2, 2})), kBottom);
    EXPECT_EQ(code_of([&] { face_intersection(bottom, other); }), ErrorCode::ParentMismatch);
}

TEST(FaceIntersection, GeneratorFaces)
{
    ConvexSet t = triangle();
    auto s = facial::detail::share(t);
    auto a = minimal_face(s, {Rat(1, 2), Rat(0)});
    auto b = minimal_face(s, {Rat(0), Rat(1, 2)});
    auto v = face_intersection(a, b);
    EXPECT_EQ(v.points, (std::vector<std::size_t>{0}));
    EXPECT_EQ(v.dim, 0);
}

TEST(Lattice, Counts)
{
    EXPECT_EQ(face_lattice(triangle()).nodes.size(), 8u);
    EXPECT_EQ(face_lattice(unit_square()).nodes.size(), 10u);
    EXPECT_EQ(face_lattice(unit_cube(3)).nodes.size(), 28u);
    EXPECT_EQ(face_lattice(unit_cube(4)).nodes.size(), 82u); // 3^4 nonempty faces plus the empty one
    EXPECT_EQ(face_lattice(corpus()[2].set).nodes.size(), 2u);
}

TEST(Lattice, Errors)
{
    EXPECT_EQ(code_of([] { face_lattice(strict_corpus()[0].set); }), ErrorCode::UnsupportedStrict);
    std::vector<Constraint> rows;
    for (int i = 0; i < 14; ++i)
        rows.push_back({q({i, 1}), i * i});
    EXPECT_EQ(code_of([&] { face_lattice(hset(2, rows)); }), ErrorCode::TooLarge);
    EXPECT_EQ(code_of([] { face_lattice(hset(1, {{q({1}), 0}, {q({-1}), -1}})); }), ErrorCode::EmptySet);
}

TEST(Lattice, ChainLengths)
{
    auto sq = maximal_chains(face_lattice(unit_square()));
    EXPECT_EQ(sq.size(), 8u);
    for (const auto& c : sq)
        EXPECT_EQ(c.size(), 4u);
    auto pt = maximal_chains(face_lattice(corpus()[2].set));
    ASSERT_EQ(pt.size(), 1u);
    EXPECT_EQ(pt[0].size(), 2u);
    auto seg = maximal_chains(face_lattice(box(q({0}), q({1}))));
    EXPECT_EQ(seg.size(), 2u);
    for (const auto& c : seg)
        EXPECT_EQ(c.size(), 3u);
}

TEST(Lattice, StructuralInvariants)
{
    for (const auto& e : corpus()) {
        if (!lattice_capable(e))
            continue;
        auto l = face_lattice(e.set);
        ASSERT_TRUE(l.nodes.front().empty()) << e.name;
        EXPECT_EQ(l.nodes.back(), full_face(e.set)) << e.name;
        // covers raise dimension
        for (const auto& [lo, hi] : l.covers) {
            EXPECT_LT(l.nodes[lo].dim, l.nodes[hi].dim) << e.name;
            EXPECT_TRUE(face_subset(l.nodes[lo], l.nodes[hi]));
        }
        // every node is a face; face-of-face: E ⊆ F implies E is a face of F
        for (const auto& f : l.nodes) {
            EXPECT_TRUE(is_face(e.set, f)) << e.name << " " << describe(f);
            if (f.empty())
                continue;
            ConvexSet fs = *face_set(f);
            for (const auto& g : l.nodes)
                if (!g.empty() && face_subset(g, f))
                    EXPECT_TRUE(is_face(fs, *face_set(g))) << e.name;
        }
        // union of a chain is its top
        for (const auto& chain : maximal_chains(l)) {
            EXPECT_EQ(chain.back(), l.nodes.back());
            for (const auto& f : chain)
                EXPECT_TRUE(face_subset(f, chain.back()));
            // d + 2 is attained by polytopes; lineality shortens chains
            if (e.bounded)
                EXPECT_EQ(chain.size(), intrinsic_dim(e.set) + 2) << e.name;
            else
                EXPECT_LE(chain.size(), intrinsic_dim(e.set) + 2) << e.name;
        }
    }
}

TEST(Lattice, MinimalFaceIsLeastNode)
{
    for (const auto& e : corpus()) {
        if (!e.bounded || e.set.dim() > 3)
            continue;
        auto l = face_lattice(e.set);
        for (const auto& x : grid_points(e.set, 2)) {
            auto f = minimal_face(e.set, x);
            for (const auto& n : l.nodes)
                if (face_contains(n, x))
                    EXPECT_TRUE(face_subset(f, n)) << e.name << " " << to_string(x);
        }
    }
}

TEST(Lattice, Dot)
{
    auto dot = to_dot(face_lattice(triangle()));
    EXPECT_NE(dot.find("digraph face_lattice"), std::string::npos);
    EXPECT_EQ(std::count(dot.begin(), dot.end(), '>'), 12);
}

TEST(MinimalFace, GridOracle)
{
    for (const auto& e : corpus()) {
        if (!e.bounded || e.set.dim() > 2)
            continue;
        GridOracle oracle(e.set);
        for (const auto& x : oracle.points()) {
            auto f = minimal_face(e.set, oracle.to_rat(x));
            auto s = oracle.segment_union(x);
            std::vector<IVec> diffs;
            for (const auto& y : s) {
                EXPECT_TRUE(face_contains(f, oracle.to_rat(y))) << e.name;
                IVec d(x.size());
                for (std::size_t k = 0; k < x.size(); ++k)
                    d[k] = y[k] - x[k];
                diffs.push_back(d);
            }
            EXPECT_EQ(int_rank(diffs), f.dim) << e.name << " at " << to_string(oracle.to_rat(x));
        }
    }
}

TEST(SetMinusFace, Examples)
{
    ConvexSet sq = unit_square();
    auto no_bottom = set_minus_face(sq, active_face(sq, kBottom));
    auto no_origin = set_minus_face(sq, active_face(sq, kOrigin));
    for (const auto& p : grid_points(box(q({-1, -1}), q({2, 2})), 6)) {
        bool in = contains(sq, p);
        EXPECT_EQ(contains(no_bottom, p), in && p[1] > 0);
        EXPECT_EQ(contains(no_origin, p), in && p[0] + p[1] > 0);
    }
    ConvexSet seg = box(q({0}), q({1}));
    auto half = set_minus_face(seg, active_face(seg, {0}));
    EXPECT_FALSE(contains(half, q({0})));
    EXPECT_TRUE(contains(half, q({1})));
    EXPECT_TRUE(contains(half, {Rat(1, 1000)}));
    EXPECT_EQ(code_of([&] { set_minus_face(sq, full_face(sq)); }), ErrorCode::NotProperFace);
}

TEST(SetMinusFace, EveryProperFaceOfTheCorpus)
{
    Lcg rng(13);
    for (const auto& e : corpus()) {
        if (!e.bounded || e.set.dim() > 3)
            continue;
        auto l = face_lattice(e.set);
        auto probes = sample_points(e.set, rng, 16);
        for (std::size_t i = 1; i + 1 < l.nodes.size(); ++i) {
            const auto& f = l.nodes[i];
            auto d = set_minus_face(e.set, f);
            for (const auto& p : probes)
                EXPECT_EQ(contains(d, p), !face_contains(f, p)) << e.name << " " << describe(f);
            // D \ F is convex: midpoints of members stay members
            std::vector<QVec> in;
            for (const auto& p : probes)
                if (contains(d, p))
                    in.push_back(p);
            for (std::size_t a = 0; a + 1 < in.size(); ++a)
                EXPECT_TRUE(contains(d, Rat(1, 2) * (in[a] + in[a + 1])));
            // icr(D \ F) agrees with icr D on members
            for (const auto& p : in)
                EXPECT_EQ(icr_contains(d, p, IcrMethod::MinFace), icr_contains(e.set, p, IcrMethod::MinFace)) << e.name;
        }
    }
}

// a ∈ (u,v), c ∈ (a,b) ⇒ w ∈ (v,b) with c ∈ (u,w), w explicit
TEST(SegmentGadget, ExplicitWitness)
{
    Lcg rng(99);
    for (int t = 0; t < 500; ++t) {
        auto pt = [&] { return QVec{rng.rational(-5, 5, 7), rng.rational(-5, 5, 7)}; };
        QVec u = pt(), v = pt(), b = pt();
        Rat alpha = frac(rng.uniform(1, 99), 100), beta = frac(rng.uniform(1, 99), 100);
        QVec a = alpha * u + (1 - alpha) * v;
        QVec c = beta * a + (1 - beta) * b;
        QVec w = Rat(1) / (1 - alpha * beta) * (beta * (1 - alpha) * v + (1 - beta) * b);
        Rat lambda = beta * (1 - alpha) / (1 - alpha * beta);
        EXPECT_TRUE(lambda > 0 && lambda < 1);
        EXPECT_EQ(w, lambda * v + (1 - lambda) * b);
        Rat mu = alpha * beta;
        EXPECT_EQ(c, mu * u + (1 - mu) * w);
    }
}
