#ifndef FACIAL_POLYSET_HPP
#define FACIAL_POLYSET_HPP

#include <algorithm>
#include <cstddef>
#include <optional>
#include <set>
#include <string>
#include <utility>
#include <variant>
#include <vector>

#include <facial/exactla.hpp>

namespace facial {

/// Conversions between H- and V-form are exponential and only offered at
/// this scale.
inline constexpr std::size_t kDeskMaxDim = 4;
inline constexpr std::size_t kDeskMaxGenerators = 24;

/// {x : a_i·x ≤ b_i, c_j·x < d_j, e_k·x = f_k}. Without strict rows the set
/// is linearly closed.
struct HSet : LinearSystem {
    HSet() = default;
    explicit HSet(LinearSystem s) : LinearSystem(std::move(s)) { check(); }

    bool has_strict() const { return !lt.empty(); }
    friend bool operator==(const HSet&, const HSet&) = default;
};

/// conv(points) + cone(rays); at least one point.
struct VSet {
    std::size_t dim = 0;
    std::vector<QVec> points;
    std::vector<QVec> rays;

    VSet() = default;
    VSet(std::size_t d, std::vector<QVec> pts, std::vector<QVec> rs = {})
        : dim(d), points(std::move(pts)), rays(std::move(rs))
    {
        if (points.empty())
            throw Error(ErrorCode::EmptyInput, "a V-set needs at least one point");
        for (const auto* list : {&points, &rays})
            for (const auto& v : *list)
                if (v.size() != dim)
                    throw Error(ErrorCode::DimensionMismatch, "generator length differs from V-set dimension");
    }
    friend bool operator==(const VSet&, const VSet&) = default;
};

class ConvexSet {
public:
    ConvexSet(HSet h) : rep_(std::move(h)) {}
    ConvexSet(VSet v) : rep_(std::move(v)) {}

    bool is_h() const { return std::holds_alternative<HSet>(rep_); }
    bool is_v() const { return std::holds_alternative<VSet>(rep_); }
    const HSet& h() const { return std::get<HSet>(rep_); }
    const VSet& v() const { return std::get<VSet>(rep_); }
    std::size_t dim() const { return is_h() ? h().dim : v().dim; }
    bool has_strict() const { return is_h() && h().has_strict(); }

    friend bool operator==(const ConvexSet&, const ConvexSet&) = default;

private:
    std::variant<HSet, VSet> rep_;
};

struct LinearMap {
    QMat matrix; // rows = target dim, cols = source dim
    std::size_t source_dim() const { return matrix.cols(); }
    std::size_t target_dim() const { return matrix.rows(); }
    QVec operator()(const QVec& x) const { return matrix.apply(x); }
};

// ---------------------------------------------------------------------------
// Builders
// ---------------------------------------------------------------------------

/// Axis-aligned box prod [lo_i, hi_i] as a weak H-set, rows ordered
/// -x_0 ≤ -lo_0, x_0 ≤ hi_0, -x_1 ≤ -lo_1, ...
inline HSet box(const QVec& lo, const QVec& hi)
{
    if (lo.size() != hi.size())
        throw Error(ErrorCode::DimensionMismatch, "box bounds of different lengths");
    LinearSystem s;
    s.dim = lo.size();
    for (std::size_t i = 0; i < s.dim; ++i) {
        s.le.push_back({-unit(s.dim, i), -lo[i]});
        s.le.push_back({unit(s.dim, i), hi[i]});
    }
    return HSet(std::move(s));
}

inline HSet unit_cube(std::size_t n)
{
    return box(zeros(n), QVec(n, Rat(1)));
}

// ---------------------------------------------------------------------------
// Membership
// ---------------------------------------------------------------------------

namespace detail {

// Variables (lambda_points..., mu_rays...) with sum lambda p + sum mu r = x,
// sum lambda = 1, lambda, mu ≥ 0.
inline LinearSystem combination_system(const VSet& v, const QVec& x)
{
    const std::size_t np = v.points.size(), nr = v.rays.size(), nv = np + nr;
    LinearSystem s;
    s.dim = nv;
    for (std::size_t j = 0; j < nv; ++j)
        s.le.push_back({-unit(nv, j), 0});
    for (std::size_t k = 0; k < v.dim; ++k) {
        QVec row(nv);
        for (std::size_t j = 0; j < np; ++j)
            row[j] = v.points[j][k];
        for (std::size_t j = 0; j < nr; ++j)
            row[np + j] = v.rays[j][k];
        s.eq.push_back({std::move(row), x[k]});
    }
    QVec ones(nv, Rat(0));
    for (std::size_t j = 0; j < np; ++j)
        ones[j] = 1;
    s.eq.push_back({std::move(ones), 1});
    return s;
}

} // namespace detail

inline bool contains(const ConvexSet& c, const QVec& x)
{
    if (x.size() != c.dim())
        throw Error(ErrorCode::DimensionMismatch, "point dimension differs from set dimension");
    if (c.is_h())
        return c.h().satisfied_by(x);
    return strict_feasible(detail::combination_system(c.v(), x)).has_value();
}

/// Some member of the set, or nullopt when it is empty.
inline std::optional<QVec> any_point(const ConvexSet& c)
{
    if (c.is_v())
        return c.v().points.front();
    return strict_feasible(c.h());
}

inline bool is_empty(const ConvexSet& c)
{
    return !any_point(c).has_value();
}

/// Indices of weak rows that hold with equality on the whole (nonempty) set.
/// Decided on the weak relaxation, which has the same affine hull.
inline std::vector<std::size_t> implicit_equalities(const HSet& c)
{
    auto x0 = strict_feasible(c);
    if (!x0)
        throw Error(ErrorCode::EmptySet, "implicit equalities of an empty set");
    LinearSystem closed = relax(c);
    std::vector<std::size_t> out;
    for (std::size_t i = 0; i < c.le.size(); ++i) {
        const auto& row = c.le[i];
        if (dot(row.a, *x0) < row.b)
            continue;
        auto lp = lp_solve(-row.a, closed);
        if (lp.status == LpStatus::Optimal && -lp.value == row.b)
            out.push_back(i);
    }
    return out;
}

/// Weak rows of the closure that are implicit stay equations, every other
/// row becomes strict: the relative interior as a mixed H-system.
inline HSet relative_interior_system(const HSet& c)
{
    auto imp = implicit_equalities(c);
    std::set<std::size_t> keep(imp.begin(), imp.end());
    HSet ri = c;
    ri.le.clear();
    for (std::size_t i = 0; i < c.le.size(); ++i)
        (keep.count(i) ? ri.eq : ri.lt).push_back(c.le[i]);
    return ri;
}

/// A point of the relative interior of a nonempty set.
inline QVec relative_interior_point(const ConvexSet& c)
{
    if (c.is_v()) {
        const VSet& v = c.v();
        QVec x = barycenter(v.points);
        for (const auto& r : v.rays)
            x = x + r;
        return x;
    }
    auto x = strict_feasible(relative_interior_system(c.h()));
    if (!x)
        throw Error(ErrorCode::EmptySet, "relative interior of an empty set");
    return *x;
}

/// Whether d is a recession direction of the (closure of the) set.
inline bool recedes(const ConvexSet& c, const QVec& d)
{
    if (d.size() != c.dim())
        throw Error(ErrorCode::DimensionMismatch, "direction has wrong length");
    if (c.is_v())
        return strict_feasible(detail::combination_system(VSet(c.dim(), {zeros(c.dim())}, c.v().rays), d)).has_value();
    const HSet& h = c.h();
    for (const auto* rows : {&h.le, &h.lt})
        for (const auto& r : *rows)
            if (sgn(dot(r.a, d)) > 0)
                return false;
    for (const auto& r : h.eq)
        if (sgn(dot(r.a, d)) != 0)
            return false;
    return true;
}

// ---------------------------------------------------------------------------
// Affine hull
// ---------------------------------------------------------------------------

struct AffineHull {
    QVec base;
    std::vector<QVec> basis;
    std::size_t dim() const { return basis.size(); }
};

inline AffineHull affine_hull(const ConvexSet& c)
{
    if (c.is_h()) {
        const HSet& h = c.h();
        auto x0 = strict_feasible(h);
        if (!x0)
            throw Error(ErrorCode::EmptySet, "affine hull of an empty set");
        std::vector<QVec> rows;
        for (const auto& e : h.eq)
            rows.push_back(e.a);
        for (auto i : implicit_equalities(h))
            rows.push_back(h.le[i].a);
        return {*x0, nullspace(rows, h.dim)};
    }
    const VSet& v = c.v();
    std::vector<QVec> dirs;
    for (std::size_t i = 1; i < v.points.size(); ++i)
        dirs.push_back(v.points[i] - v.points[0]);
    dirs.insert(dirs.end(), v.rays.begin(), v.rays.end());
    std::vector<QVec> basis;
    if (!dirs.empty()) {
        auto red = rref(QMat(dirs, v.dim));
        for (std::size_t i = 0; i < red.rank; ++i)
            basis.push_back(red.reduced.row(i));
    }
    return {v.points[0], std::move(basis)};
}

inline std::size_t intrinsic_dim(const ConvexSet& c)
{
    return affine_hull(c).dim();
}

// ---------------------------------------------------------------------------
// H <-> V at desk scale
// ---------------------------------------------------------------------------

namespace detail {

template <typename F>
void for_each_subset(std::size_t n, std::size_t k, F&& f)
{
    if (k > n)
        return;
    std::vector<std::size_t> idx(k);
    for (std::size_t i = 0; i < k; ++i)
        idx[i] = i;
    while (true) {
        f(idx);
        std::size_t i = k;
        while (i > 0 && idx[i - 1] == n - k + i - 1)
            --i;
        if (i == 0)
            return;
        ++idx[i - 1];
        for (std::size_t j = i; j < k; ++j)
            idx[j] = idx[j - 1] + 1;
    }
}

inline void push_unique(std::vector<QVec>& list, std::set<QVec>& seen, QVec v)
{
    if (seen.insert(v).second)
        list.push_back(std::move(v));
}

struct ConeH {
    std::vector<QVec> equations;   // e·y = 0
    std::vector<QVec> inequalities; // a·y ≤ 0
};

// H-description of cone(gens) in R^n: each facet normal is orthogonal to
// (k-1) independent generators inside the span (k = rank).
inline ConeH cone_facets(const std::vector<QVec>& raw_gens, std::size_t n)
{
    std::vector<QVec> gens;
    std::set<QVec> seen;
    for (const auto& g : raw_gens)
        if (!is_zero(g))
            push_unique(gens, seen, primitive(g));
    ConeH out;
    out.equations = nullspace(gens, n);
    const std::size_t k = rank_of(gens, n);
    if (k == 0)
        return out;
    std::set<QVec> facet_seen;
    for_each_subset(gens.size(), k - 1, [&](const std::vector<std::size_t>& idx) {
        std::vector<QVec> rows;
        for (auto i : idx)
            rows.push_back(gens[i]);
        if (rank_of(rows, n) != k - 1)
            return;
        rows.insert(rows.end(), out.equations.begin(), out.equations.end());
        auto ns = nullspace(rows, n);
        if (ns.size() != 1)
            return;
        QVec a = ns.front();
        bool any_pos = false, any_neg = false;
        for (const auto& g : gens) {
            int s = sgn(dot(a, g));
            any_pos |= s > 0;
            any_neg |= s < 0;
        }
        if (any_pos && any_neg)
            return;
        if (any_pos)
            a = -a;
        push_unique(out.inequalities, facet_seen, primitive(a));
    });
    return out;
}

struct ConeV {
    std::vector<QVec> lineality;
    std::vector<QVec> rays;
};

// Generators of {y : G·y ≤ 0, H·y = 0}: a lineality basis plus the extreme
// rays of the pointed part, each cut out by n-1 independent active rows.
inline ConeV cone_generators(const std::vector<QVec>& g, const std::vector<QVec>& h, std::size_t n)
{
    ConeV out;
    out.lineality = lineality_space(g, h, n);
    std::vector<QVec> base = h;
    base.insert(base.end(), out.lineality.begin(), out.lineality.end());
    const std::size_t rb = rank_of(base, n);
    if (rb >= n)
        return out;
    const std::size_t need = n - 1 - rb;
    std::set<QVec> seen;
    for_each_subset(g.size(), need, [&](const std::vector<std::size_t>& idx) {
        std::vector<QVec> rows = base;
        for (auto i : idx)
            rows.push_back(g[i]);
        auto ns = nullspace(rows, n);
        if (ns.size() != 1)
            return;
        for (const QVec& y : {ns.front(), -ns.front()}) {
            bool ok = std::all_of(g.begin(), g.end(), [&](const QVec& row) { return sgn(dot(row, y)) <= 0; });
            if (ok) {
                push_unique(out.rays, seen, primitive(y));
                break;
            }
        }
    });
    return out;
}

inline void require_desk(std::size_t dim, std::size_t count, const char* what)
{
    if (dim > kDeskMaxDim || count > kDeskMaxGenerators)
        throw Error(ErrorCode::TooLarge, std::string(what) + " beyond desk scale (dim ≤ 4, ≤ 24 rows/generators)");
}

} // namespace detail

/// Drops duplicate points and generators that are combinations of the others.
inline VSet reduce(const VSet& v)
{
    std::vector<QVec> pts;
    std::set<QVec> seen;
    for (const auto& p : v.points)
        detail::push_unique(pts, seen, p);
    std::vector<QVec> rays;
    std::set<QVec> rseen;
    for (const auto& r : v.rays)
        if (!is_zero(r))
            detail::push_unique(rays, rseen, primitive(r));

    for (std::size_t i = 0; i < pts.size() && pts.size() > 1;) {
        std::vector<QVec> others = pts;
        others.erase(others.begin() + static_cast<std::ptrdiff_t>(i));
        if (contains(VSet(v.dim, others, rays), pts[i]))
            pts = std::move(others);
        else
            ++i;
    }
    for (std::size_t i = 0; i < rays.size();) {
        std::vector<QVec> others = rays;
        others.erase(others.begin() + static_cast<std::ptrdiff_t>(i));
        // r is redundant iff it lies in cone(other rays)
        VSet cone(v.dim, {zeros(v.dim)}, others);
        if (contains(cone, rays[i]))
            rays = std::move(others);
        else
            ++i;
    }
    std::sort(pts.begin(), pts.end());
    std::sort(rays.begin(), rays.end());
    return VSet(v.dim, std::move(pts), std::move(rays));
}

/// V-form of a weak H-set via its homogenization.
inline VSet to_vset(const HSet& h)
{
    if (h.has_strict())
        throw Error(ErrorCode::UnsupportedStrict, "V-form of a set with strict rows does not exist");
    detail::require_desk(h.dim, h.le.size() + h.eq.size(), "H-to-V conversion");
    const std::size_t n = h.dim, N = n + 1;
    std::vector<QVec> g, e;
    for (const auto& c : h.le) {
        QVec row = c.a;
        row.push_back(-c.b);
        g.push_back(std::move(row));
    }
    g.push_back(-unit(N, n));
    for (const auto& c : h.eq) {
        QVec row = c.a;
        row.push_back(-c.b);
        e.push_back(std::move(row));
    }
    auto cone = detail::cone_generators(g, e, N);
    std::vector<QVec> pts, rays;
    for (const auto& y : cone.rays) {
        QVec x(y.begin(), y.end() - 1);
        if (sgn(y[n]) > 0)
            pts.push_back(Rat(1) / y[n] * x);
        else
            rays.push_back(std::move(x));
    }
    for (const auto& l : cone.lineality) {
        QVec x(l.begin(), l.end() - 1);
        rays.push_back(x);
        rays.push_back(-x);
    }
    if (pts.empty())
        throw Error(ErrorCode::EmptySet, "H-set is empty");
    std::sort(pts.begin(), pts.end());
    return VSet(n, std::move(pts), std::move(rays));
}

/// Weak H-form of a V-set via facets of its homogenization.
inline HSet to_hset(const VSet& raw)
{
    VSet v = reduce(raw);
    detail::require_desk(v.dim, v.points.size() + v.rays.size(), "V-to-H conversion");
    const std::size_t n = v.dim;
    std::vector<QVec> gens;
    for (const auto& p : v.points) {
        QVec y = p;
        y.push_back(1);
        gens.push_back(std::move(y));
    }
    for (const auto& r : v.rays) {
        QVec y = r;
        y.push_back(0);
        gens.push_back(std::move(y));
    }
    auto cone = detail::cone_facets(gens, n + 1);
    LinearSystem s;
    s.dim = n;
    for (const auto& e : cone.equations)
        s.eq.push_back({QVec(e.begin(), e.end() - 1), -e.back()});
    for (const auto& a : cone.inequalities) {
        QVec row(a.begin(), a.end() - 1);
        if (is_zero(row))
            continue;
        s.le.push_back({std::move(row), -a.back()});
    }
    return HSet(std::move(s));
}

inline VSet as_vset(const ConvexSet& c)
{
    return c.is_v() ? c.v() : to_vset(c.h());
}

inline HSet as_hset(const ConvexSet& c)
{
    return c.is_h() ? c.h() : to_hset(c.v());
}

/// V-form of the linear closure (strict rows relaxed).
inline VSet closure_generators(const ConvexSet& c)
{
    if (c.is_v())
        return c.v();
    return to_vset(HSet(relax(c.h())));
}

// ---------------------------------------------------------------------------
// Calculus constructors
// ---------------------------------------------------------------------------

inline ConvexSet minkowski_sum(const ConvexSet& a, const ConvexSet& b)
{
    if (a.dim() != b.dim())
        throw Error(ErrorCode::DimensionMismatch, "Minkowski sum of sets with different dimensions");
    if (a.has_strict() || b.has_strict())
        throw Error(ErrorCode::UnsupportedStrict, "representation-level sum needs linearly closed operands");
    VSet va = as_vset(a), vb = as_vset(b);
    std::vector<QVec> pts, rays;
    std::set<QVec> seen, rseen;
    for (const auto& p : va.points)
        for (const auto& q : vb.points)
            detail::push_unique(pts, seen, p + q);
    for (const auto* list : {&va.rays, &vb.rays})
        for (const auto& r : *list)
            detail::push_unique(rays, rseen, r);
    return VSet(a.dim(), std::move(pts), std::move(rays));
}

/// Exact sum of two H-sets (strict rows allowed) by eliminating the summand
/// coordinates from {(z, x) : x ∈ A, z - x ∈ B} with Fourier–Motzkin.
inline HSet sum_by_elimination(const HSet& a, const HSet& b)
{
    if (a.dim != b.dim)
        throw Error(ErrorCode::DimensionMismatch, "sum of sets with different dimensions");
    const std::size_t n = a.dim;
    detail::require_desk(n, a.le.size() + a.lt.size() + b.le.size() + b.lt.size(), "sum by elimination");
    LinearSystem s;
    s.dim = 2 * n;
    auto on_x = [n](const Constraint& r) {
        QVec row = zeros(2 * n);
        for (std::size_t k = 0; k < n; ++k)
            row[n + k] = r.a[k];
        return Constraint{std::move(row), r.b};
    };
    auto on_z_minus_x = [n](const Constraint& r) {
        QVec row = zeros(2 * n);
        for (std::size_t k = 0; k < n; ++k) {
            row[k] = r.a[k];
            row[n + k] = -r.a[k];
        }
        return Constraint{std::move(row), r.b};
    };
    for (const auto& r : a.le)
        s.le.push_back(on_x(r));
    for (const auto& r : a.lt)
        s.lt.push_back(on_x(r));
    for (const auto& r : a.eq)
        s.eq.push_back(on_x(r));
    for (const auto& r : b.le)
        s.le.push_back(on_z_minus_x(r));
    for (const auto& r : b.lt)
        s.lt.push_back(on_z_minus_x(r));
    for (const auto& r : b.eq)
        s.eq.push_back(on_z_minus_x(r));
    while (s.dim > n)
        s = fm_eliminate(s, s.dim - 1);
    return HSet(std::move(s));
}

inline ConvexSet translate(const ConvexSet& c, const QVec& t)
{
    if (t.size() != c.dim())
        throw Error(ErrorCode::DimensionMismatch, "translation vector has wrong length");
    if (c.is_v()) {
        VSet v = c.v();
        for (auto& p : v.points)
            p = p + t;
        return v;
    }
    HSet h = c.h();
    for (auto* rows : {&h.le, &h.lt, &h.eq})
        for (auto& r : *rows)
            r.b += dot(r.a, t);
    return h;
}

inline ConvexSet scale(const ConvexSet& c, const Rat& lambda)
{
    if (sgn(lambda) == 0)
        throw Error(ErrorCode::ZeroScale, "scaling by zero collapses the set");
    if (c.is_v()) {
        VSet v = c.v();
        for (auto& p : v.points)
            p = lambda * p;
        for (auto& r : v.rays)
            r = lambda * r;
        return v;
    }
    // x ∈ λC iff a·x ≤ λb (λ > 0) or -a·x ≤ -λb (λ < 0)
    HSet h = c.h();
    int s = sgn(lambda);
    for (auto* rows : {&h.le, &h.lt})
        for (auto& r : *rows) {
            r.b *= lambda;
            if (s < 0) {
                r.a = -r.a;
                r.b = -r.b;
            }
        }
    for (auto& r : h.eq)
        r.b *= lambda;
    return h;
}

inline ConvexSet product(const ConvexSet& c, const ConvexSet& d)
{
    const std::size_t n = c.dim(), m = d.dim();
    if (c.is_v() && d.is_v()) {
        std::vector<QVec> pts, rays;
        for (const auto& p : c.v().points)
            for (const auto& q : d.v().points) {
                QVec pq = p;
                pq.insert(pq.end(), q.begin(), q.end());
                pts.push_back(std::move(pq));
            }
        for (const auto& r : c.v().rays) {
            QVec rr = r;
            rr.resize(n + m);
            rays.push_back(std::move(rr));
        }
        for (const auto& r : d.v().rays) {
            QVec rr = zeros(n);
            rr.insert(rr.end(), r.begin(), r.end());
            rays.push_back(std::move(rr));
        }
        return VSet(n + m, std::move(pts), std::move(rays));
    }
    HSet hc = as_hset(c), hd = as_hset(d);
    LinearSystem s;
    s.dim = n + m;
    auto lift = [&](const LinearSystem& src, std::size_t offset, LinearSystem& dst) {
        auto pad = [&](const Constraint& r) {
            QVec a = zeros(n + m);
            for (std::size_t k = 0; k < r.a.size(); ++k)
                a[offset + k] = r.a[k];
            return Constraint{std::move(a), r.b};
        };
        for (const auto& r : src.le)
            dst.le.push_back(pad(r));
        for (const auto& r : src.lt)
            dst.lt.push_back(pad(r));
        for (const auto& r : src.eq)
            dst.eq.push_back(pad(r));
    };
    lift(hc, 0, s);
    lift(hd, n, s);
    return HSet(std::move(s));
}

inline ConvexSet linear_image(const ConvexSet& c, const LinearMap& map)
{
    if (map.source_dim() != c.dim())
        throw Error(ErrorCode::DimensionMismatch, "linear map source dimension differs from set dimension");
    if (c.has_strict())
        throw Error(ErrorCode::UnsupportedStrict, "linear image of a set with strict rows");
    VSet v = as_vset(c);
    std::vector<QVec> pts, rays;
    std::set<QVec> seen, rseen;
    for (const auto& p : v.points)
        detail::push_unique(pts, seen, map(p));
    for (const auto& r : v.rays) {
        QVec img = map(r);
        if (!is_zero(img))
            detail::push_unique(rays, rseen, img);
    }
    return VSet(map.target_dim(), std::move(pts), std::move(rays));
}

/// {t·x : x ∈ C, t > 0} for a polytope C not containing the origin, as the
/// generated cone with its apex cut off by one strict row c·y > 0, where
/// c·p ≥ 1 on every vertex.
inline ConvexSet positive_hull(const ConvexSet& c)
{
    if (c.has_strict())
        throw Error(ErrorCode::UnsupportedStrict, "positive hull of a set with strict rows");
    VSet v = as_vset(c);
    if (!v.rays.empty())
        throw Error(ErrorCode::UnsupportedRays, "positive hull needs a polytope");
    const std::size_t n = v.dim;
    if (contains(v, zeros(n)))
        throw Error(ErrorCode::ContainsOrigin, "origin lies in the set; its positive hull is not represented");
    VSet r = reduce(v);
    detail::require_desk(n, r.points.size(), "positive hull");
    auto cone = detail::cone_facets(r.points, n);

    LinearSystem sep;
    sep.dim = n;
    for (const auto& p : r.points)
        sep.le.push_back({-p, -1});
    auto lp = lp_solve(zeros(n), sep);
    if (lp.status != LpStatus::Optimal)
        throw Error(ErrorCode::ContainsOrigin, "no functional is positive on every vertex");

    LinearSystem s;
    s.dim = n;
    for (const auto& e : cone.equations)
        s.eq.push_back({e, 0});
    for (const auto& a : cone.inequalities)
        s.le.push_back({a, 0});
    s.lt.push_back({-primitive(lp.point), 0});
    return HSet(std::move(s));
}

} // namespace facial

#endif // FACIAL_POLYSET_HPP
