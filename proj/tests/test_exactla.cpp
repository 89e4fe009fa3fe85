#include <gtest/gtest.h>

#include <facial/exactla.hpp>
#include <facial/sampling.hpp>

#include "corpus.hpp"

using namespace facial;
using facial::testing::q;

namespace {

LinearSystem sys(std::size_t dim, std::vector<Constraint> le, std::vector<Constraint> eq = {},
                 std::vector<Constraint> lt = {})
{
    LinearSystem s;
    s.dim = dim;
    s.le = std::move(le);
    s.eq = std::move(eq);
    s.lt = std::move(lt);
    return s;
}

LinearSystem unit_square_sys()
{
    return sys(2, {{q({-1, 0}), 0}, {q({1, 0}), 1}, {q({0, -1}), 0}, {q({0, 1}), 1}});
}

} // namespace

TEST(Rational, CanonicalForm)
{
    Rat r(6, -4);
    r.canonicalize();
    EXPECT_EQ(to_string(r), "-3/2");
    EXPECT_EQ(parse_rat("4/6"), Rat(2, 3));
    EXPECT_EQ(to_string(parse_rat("0/5")), "0");
    EXPECT_THROW(parse_rat("1/0"), Error);
    EXPECT_THROW(parse_rat("abc"), Error);
    EXPECT_EQ(parse_point("1/2, -3"), (QVec{Rat(1, 2), Rat(-3)}));
}

TEST(Rref, Identity)
{
    auto r = rref(QMat::from_rows({q({1, 0}), q({0, 1})}));
    EXPECT_EQ(r.reduced, QMat::from_rows({q({1, 0}), q({0, 1})}));
    EXPECT_EQ(r.pivots, (std::vector<std::size_t>{0, 1}));
    EXPECT_EQ(r.rank, 2u);
}

TEST(Rref, DependentRows)
{
    auto r = rref(QMat::from_rows({q({1, 2}), q({2, 4})}));
    EXPECT_EQ(r.reduced, QMat::from_rows({q({1, 2}), q({0, 0})}));
    EXPECT_EQ(r.rank, 1u);
}

TEST(Rref, Swap)
{
    auto r = rref(QMat::from_rows({q({0, 1}), q({1, 0})}));
    EXPECT_EQ(r.reduced, QMat::from_rows({q({1, 0}), q({0, 1})}));
    EXPECT_EQ(r.rank, 2u);
}

TEST(Rref, IdempotentOnRandomMatrices)
{
    Lcg rng(11);
    for (int t = 0; t < 60; ++t) {
        std::size_t rows = rng.uniform(1, 4), cols = rng.uniform(1, 4);
        QMat m(rows, cols);
        for (std::size_t i = 0; i < rows; ++i)
            for (std::size_t j = 0; j < cols; ++j)
                m(i, j) = rng.uniform(0, 2) == 0 ? Rat(0) : rng.rational(-3, 3, 4);
        auto once = rref(m);
        auto twice = rref(once.reduced);
        EXPECT_EQ(once.reduced, twice.reduced);
        EXPECT_EQ(once.rank, once.pivots.size());
        EXPECT_LE(once.rank, std::min(rows, cols));
    }
}

TEST(Lp, CornerOptimum)
{
    auto r = lp_solve(q({1, 1}), unit_square_sys());
    ASSERT_EQ(r.status, LpStatus::Optimal);
    EXPECT_EQ(r.value, 2);
    EXPECT_EQ(r.point, q({1, 1}));
}

TEST(Lp, Unbounded)
{
    auto r = lp_solve(q({1}), sys(1, {{q({-1}), 0}}));
    ASSERT_EQ(r.status, LpStatus::Unbounded);
    ASSERT_EQ(r.ray.size(), 1u);
    EXPECT_GT(r.ray[0], 0);
}

TEST(Lp, Infeasible)
{
    auto r = lp_solve(q({1}), sys(1, {{q({1}), 0}, {q({-1}), -1}}));
    EXPECT_EQ(r.status, LpStatus::Infeasible);
}

TEST(Lp, DimensionMismatch)
{
    EXPECT_THROW(lp_solve(q({1, 1, 1}), unit_square_sys()), Error);
    auto bad = unit_square_sys();
    bad.le.push_back({q({1}), 0});
    EXPECT_THROW(lp_solve(q({1, 1}), bad), Error);
}

TEST(Lp, RejectsStrictRows)
{
    auto s = unit_square_sys();
    s.lt.push_back({q({1, 0}), 1});
    try {
        lp_solve(q({1, 1}), s);
        FAIL();
    } catch (const Error& e) {
        EXPECT_EQ(e.code(), ErrorCode::UnsupportedStrict);
    }
}

// max c·x s.t. Ax ≤ b, x free   vs   min b·y s.t. Aᵀy = c, y ≥ 0,
// the dual solved as max -b·y by the same routine.
TEST(Lp, StrongDualityOnRandomPrograms)
{
    Lcg rng(5);
    int checked = 0;
    for (int t = 0; checked < 60 && t < 400; ++t) {
        std::size_t n = rng.uniform(1, 4), m = n + rng.uniform(1, 3);
        LinearSystem primal;
        primal.dim = n;
        for (std::size_t i = 0; i < m; ++i) {
            QVec a(n);
            for (auto& x : a)
                x = rng.rational(-3, 3, 3);
            primal.le.push_back({a, rng.rational(0, 4, 2)});
        }
        // box keeps it bounded
        for (std::size_t k = 0; k < n; ++k) {
            primal.le.push_back({unit(n, k), 5});
            primal.le.push_back({-unit(n, k), 5});
        }
        QVec c(n);
        for (auto& x : c)
            x = rng.rational(-2, 2, 3);
        auto p = lp_solve(c, primal);
        ASSERT_NE(p.status, LpStatus::Unbounded);
        if (p.status != LpStatus::Optimal)
            continue;
        for (const auto& r : primal.le)
            EXPECT_LE(dot(r.a, p.point), r.b);
        EXPECT_EQ(dot(c, p.point), p.value);

        const std::size_t rows = primal.le.size();
        LinearSystem dual;
        dual.dim = rows;
        for (std::size_t k = 0; k < n; ++k) {
            QVec e(rows);
            for (std::size_t i = 0; i < rows; ++i)
                e[i] = primal.le[i].a[k];
            dual.eq.push_back({e, c[k]});
        }
        for (std::size_t i = 0; i < rows; ++i)
            dual.le.push_back({-unit(rows, i), 0});
        QVec obj(rows);
        for (std::size_t i = 0; i < rows; ++i)
            obj[i] = -primal.le[i].b;
        auto d = lp_solve(obj, dual);
        ASSERT_EQ(d.status, LpStatus::Optimal);
        EXPECT_EQ(-d.value, p.value);
        ++checked;
    }
    EXPECT_GE(checked, 50);
}

TEST(StrictFeasible, SegmentWithStrictRow)
{
    auto s = sys(2, {{q({-1, 0}), 0}, {q({1, 0}), 1}}, {{q({0, 1}), 0}}, {{q({0, 1}), 1}});
    auto p = strict_feasible(s);
    ASSERT_TRUE(p);
    EXPECT_TRUE(s.satisfied_by(*p));
}

TEST(StrictFeasible, ContradictoryStricts)
{
    EXPECT_FALSE(strict_feasible(sys(1, {}, {}, {{q({1}), 0}, {q({-1}), 0}})));
}

TEST(StrictFeasible, StrictOnImplicitEquality)
{
    EXPECT_FALSE(strict_feasible(sys(1, {{q({1}), 0}, {q({-1}), 0}}, {}, {{q({1}), 0}})));
}

TEST(Lineality, Line)
{
    auto b = lineality_space({q({1, 0}), q({-1, 0})}, {}, 2);
    ASSERT_EQ(b.size(), 1u);
    EXPECT_EQ(b[0][0], 0);
    EXPECT_NE(b[0][1], 0);
}

TEST(Lineality, Pointed)
{
    EXPECT_TRUE(lineality_space({q({1, 0}), q({0, 1})}, {}, 2).empty());
}

TEST(Lineality, Halfspace)
{
    auto b = lineality_space({q({1, 0})}, {}, 2);
    ASSERT_EQ(b.size(), 1u);
    EXPECT_EQ(b[0][0], 0);
}

TEST(Lineality, BothDirectionsFeasible)
{
    Lcg rng(3);
    for (int t = 0; t < 40; ++t) {
        std::size_t n = rng.uniform(1, 4);
        std::vector<QVec> g, h;
        for (int i = rng.uniform(0, 3); i > 0; --i) {
            QVec a(n);
            for (auto& x : a)
                x = rng.uniform(-2, 2);
            g.push_back(a);
        }
        for (int i = rng.uniform(0, 1); i > 0; --i) {
            QVec a(n);
            for (auto& x : a)
                x = rng.uniform(-2, 2);
            h.push_back(a);
        }
        for (const auto& d : lineality_space(g, h, n))
            for (const QVec& v : {d, -d}) {
                for (const auto& a : g)
                    EXPECT_LE(dot(a, v), 0);
                for (const auto& a : h)
                    EXPECT_EQ(dot(a, v), 0);
            }
    }
}

// Fourier–Motzkin and the ε-LP decide strict feasibility independently.
TEST(StrictFeasible, AgreesWithElimination)
{
    Lcg rng(17);
    int feasible = 0, infeasible = 0;
    for (int t = 0; t < 150; ++t) {
        std::size_t n = rng.uniform(1, 3);
        LinearSystem s;
        s.dim = n;
        auto row = [&] {
            QVec a(n);
            for (auto& x : a)
                x = rng.uniform(-2, 2);
            return Constraint{a, rng.uniform(-2, 2)};
        };
        for (int i = rng.uniform(1, 4); i > 0; --i)
            s.le.push_back(row());
        for (int i = rng.uniform(0, 2); i > 0; --i)
            s.lt.push_back(row());
        if (rng.uniform(0, 3) == 0)
            s.eq.push_back(row());
        auto p = strict_feasible(s);
        EXPECT_EQ(p.has_value(), fm_feasible(s)) << "trial " << t;
        if (p) {
            EXPECT_TRUE(s.satisfied_by(*p));
            ++feasible;
        } else {
            ++infeasible;
        }
    }
    EXPECT_GT(feasible, 10);
    EXPECT_GT(infeasible, 10);
}
