#ifndef FACIAL_CLOSURE_HPP
#define FACIAL_CLOSURE_HPP

#include <algorithm>
#include <string>
#include <utility>
#include <vector>

#include <facial/icore.hpp>
#include <facial/json_io.hpp>

namespace facial {

/// lin C. In finite dimensions one accessibility step already gives the
/// smallest linearly closed superset, and for a nonempty system it is the
/// weak relaxation of every strict row. V-sets are closed already.
inline ConvexSet lin_closure(const ConvexSet& c)
{
    if (is_empty(c))
        throw Error(ErrorCode::EmptySet, "linear closure of an empty set");
    if (c.is_v())
        return c;
    return HSet(relax(c.h()));
}

inline bool lin_contains(const ConvexSet& c, const QVec& x)
{
    return contains(lin_closure(c), x);
}

/// lbd C = lin C \ icr C.
inline bool lbd_contains(const ConvexSet& c, const QVec& x)
{
    ConvexSet closed = lin_closure(c);
    return contains(closed, x) && !contains(relative_interior(closed), x);
}

/// Hyperplane {phi·x = alpha} with A on the low side and B on the high side,
/// plus a pair a ∈ A, b ∈ B with phi·a < phi·b.
struct SeparationCertificate {
    QVec phi;
    Rat alpha;
    QVec witness_a;
    QVec witness_b;

    /// Re-checks every claim against the generators of both closures.
    bool verify(const ConvexSet& a, const ConvexSet& b) const
    {
        if (is_zero(phi) || phi.size() != a.dim() || phi.size() != b.dim())
            return false;
        VSet ga = closure_generators(a), gb = closure_generators(b);
        for (const auto& p : ga.points)
            if (dot(phi, p) > alpha)
                return false;
        for (const auto& r : ga.rays)
            if (sgn(dot(phi, r)) > 0)
                return false;
        for (const auto& p : gb.points)
            if (dot(phi, p) < alpha)
                return false;
        for (const auto& r : gb.rays)
            if (sgn(dot(phi, r)) < 0)
                return false;
        return contains(a, witness_a) && contains(b, witness_b) && dot(phi, witness_a) < dot(phi, witness_b);
    }
};

inline json certificate_to_json(const SeparationCertificate& s)
{
    return {{"phi", vec_to_json(s.phi)},
            {"alpha", rat_to_json(s.alpha)},
            {"witness", json::array({vec_to_json(s.witness_a), vec_to_json(s.witness_b)})}};
}

inline SeparationCertificate certificate_from_json(const json& j)
{
    const json& w = detail::require(j, "witness");
    if (!w.is_array() || w.size() != 2)
        throw Error(ErrorCode::Format, "field 'witness' must hold two points");
    return {vec_from_json(detail::require(j, "phi"), "phi"), rat_from_json(detail::require(j, "alpha"), "alpha"),
            vec_from_json(w[0], "witness"), vec_from_json(w[1], "witness")};
}

/// Proper supporting hyperplane of C at a boundary point x: the lowest-index
/// non-implicit weak row tight at x. The certificate reads A = C, B = {x}.
inline SeparationCertificate support_functional(const ConvexSet& c, const QVec& x)
{
    if (!contains(c, x))
        throw Error(ErrorCode::NotMember, "point " + to_string(x) + " is not in the set");
    HSet h = as_hset(c);
    auto imp = implicit_equalities(h);
    for (std::size_t i = 0; i < h.le.size(); ++i) {
        if (dot(h.le[i].a, x) != h.le[i].b || std::binary_search(imp.begin(), imp.end(), i))
            continue;
        // non-implicit rows are slack on the relative interior
        return {h.le[i].a, h.le[i].b, relative_interior_point(h), x};
    }
    throw Error(ErrorCode::IsInteriorPoint, "point " + to_string(x) + " lies in the intrinsic core");
}

/// Proper separation of A and B when their intrinsic cores are disjoint.
///
/// LP over (phi, alpha): phi·a ≤ alpha ≤ phi·b on the points, phi·r ≤ 0 on
/// rays of A, phi·r ≥ 0 on rays of B, -1 ≤ phi ≤ 1. The objective is the
/// gap between point means plus the ray slopes; a hyperplane is proper iff
/// some point or ray leaves it, which the objective then sees as positive.
inline SeparationCertificate properly_separate(const ConvexSet& a, const ConvexSet& b)
{
    if (a.dim() != b.dim())
        throw Error(ErrorCode::DimensionMismatch, "sets live in different dimensions");
    if (is_empty(a) || is_empty(b))
        throw Error(ErrorCode::EmptySet, "separation needs nonempty sets");
    const std::size_t n = a.dim();
    {
        HSet both = relative_interior_system(as_hset(a));
        HSet rb = relative_interior_system(as_hset(b));
        both.le.insert(both.le.end(), rb.le.begin(), rb.le.end());
        both.lt.insert(both.lt.end(), rb.lt.begin(), rb.lt.end());
        both.eq.insert(both.eq.end(), rb.eq.begin(), rb.eq.end());
        if (strict_feasible(both))
            throw Error(ErrorCode::OverlappingInteriors, "intrinsic cores intersect");
    }
    VSet ga = closure_generators(a), gb = closure_generators(b);
    auto lift = [n](const QVec& p, const Rat& alpha_coef) {
        QVec r = p;
        r.push_back(alpha_coef);
        return r;
    };
    LinearSystem s;
    s.dim = n + 1;
    for (const auto& p : ga.points)
        s.le.push_back({lift(p, -1), 0});
    for (const auto& p : gb.points)
        s.le.push_back({lift(-p, 1), 0});
    for (const auto& r : ga.rays)
        s.le.push_back({lift(r, 0), 0});
    for (const auto& r : gb.rays)
        s.le.push_back({lift(-r, 0), 0});
    for (std::size_t k = 0; k < n; ++k) {
        s.le.push_back({unit(n + 1, k), 1});
        s.le.push_back({-unit(n + 1, k), 1});
    }
    QVec obj = zeros(n);
    obj = obj + barycenter(gb.points) - barycenter(ga.points);
    for (const auto& r : gb.rays)
        obj = obj + r;
    for (const auto& r : ga.rays)
        obj = obj - r;
    obj.push_back(0);
    auto lp = lp_solve(obj, s);
    if (lp.status != LpStatus::Optimal || sgn(lp.value) <= 0)
        throw Error(ErrorCode::NotProperlySeparable, "every separating hyperplane contains both sets");

    // among optimal hyperplanes take one with least |phi|_1; variables
    // (phi, alpha, s) with -s ≤ phi ≤ s
    LinearSystem tie;
    tie.dim = 2 * n + 1;
    auto widen = [&](const QVec& a) {
        QVec r = a;
        r.resize(2 * n + 1);
        return r;
    };
    for (const auto& r : s.le)
        tie.le.push_back({widen(r.a), r.b});
    tie.eq.push_back({widen(obj), lp.value});
    QVec cost = zeros(2 * n + 1);
    for (std::size_t k = 0; k < n; ++k) {
        QVec up = zeros(2 * n + 1), down = zeros(2 * n + 1);
        up[k] = 1;
        up[n + 1 + k] = -1;
        down[k] = -1;
        down[n + 1 + k] = -1;
        tie.le.push_back({std::move(up), 0});
        tie.le.push_back({std::move(down), 0});
        cost[n + 1 + k] = -1;
    }
    auto best = lp_solve(cost, tie);

    SeparationCertificate cert;
    cert.phi = QVec(best.point.begin(), best.point.begin() + static_cast<long>(n));
    cert.alpha = best.point[n];
    const QVec& phi = cert.phi;
    // lowest generator of A and the first generator of B above it; strict
    // sets may exclude them, so fall back to relative-interior points, which
    // sit strictly off the hyperplane on at least one side once it is proper
    QVec wa = ga.points.front(), wb = gb.points.front();
    for (const auto& p : ga.points)
        if (dot(phi, p) < dot(phi, wa))
            wa = p;
    auto above = std::find_if(gb.points.begin(), gb.points.end(),
                              [&](const QVec& p) { return dot(phi, p) > dot(phi, wa); });
    if (above != gb.points.end())
        wb = *above;
    if (!(dot(phi, wa) < dot(phi, wb))) {
        for (const auto& r : ga.rays)
            if (sgn(dot(phi, r)) < 0) {
                wa = wa + r;
                break;
            }
        for (const auto& r : gb.rays)
            if (sgn(dot(phi, r)) > 0) {
                wb = wb + r;
                break;
            }
    }
    if (!contains(a, wa) || !contains(b, wb) || !(dot(phi, wa) < dot(phi, wb))) {
        wa = relative_interior_point(a);
        wb = relative_interior_point(b);
    }
    cert.witness_a = std::move(wa);
    cert.witness_b = std::move(wb);
    return cert;
}

} // namespace facial

#endif // FACIAL_CLOSURE_HPP
