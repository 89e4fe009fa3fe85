#ifndef FACIAL_FACES_HPP
#define FACIAL_FACES_HPP

#include <algorithm>
#include <cstddef>
#include <map>
#include <memory>
#include <optional>
#include <set>
#include <sstream>
#include <string>
#include <utility>
#include <vector>

#include <facial/polyset.hpp>

namespace facial {

/// Lattice enumeration limits (the weak-row count is the facet budget).
inline constexpr std::size_t kLatticeMaxDim = 4;
inline constexpr std::size_t kLatticeMaxRows = 12;

/// Canonical identification of a face of `parent`.
///
/// ActiveSet faces (H parents) list every weak row that holds with equality
/// on the face, so the list is closed under implied equalities.
/// GeneratorSubset faces (V parents) list every point and ray generator that
/// lies on the face. Two descriptors are equal iff parents and canonical
/// forms are equal.
struct FaceDescriptor {
    enum class Kind { Empty, ActiveSet, GeneratorSubset };

    std::shared_ptr<const ConvexSet> parent;
    Kind kind = Kind::Empty;
    std::vector<std::size_t> active;
    std::vector<std::size_t> points;
    std::vector<std::size_t> rays;
    int dim = -1;

    bool empty() const { return kind == Kind::Empty; }

    friend bool operator==(const FaceDescriptor& a, const FaceDescriptor& b)
    {
        if (a.kind != b.kind || a.active != b.active || a.points != b.points || a.rays != b.rays)
            return false;
        return a.parent == b.parent || (a.parent && b.parent && *a.parent == *b.parent);
    }
};

inline std::string describe(const FaceDescriptor& f)
{
    std::ostringstream os;
    auto list = [&os](const std::vector<std::size_t>& v) {
        os << '{';
        for (std::size_t i = 0; i < v.size(); ++i)
            os << (i ? "," : "") << v[i];
        os << '}';
    };
    switch (f.kind) {
    case FaceDescriptor::Kind::Empty:
        os << "empty";
        break;
    case FaceDescriptor::Kind::ActiveSet:
        os << "dim " << f.dim << " active ";
        list(f.active);
        break;
    case FaceDescriptor::Kind::GeneratorSubset:
        os << "dim " << f.dim << " points ";
        list(f.points);
        os << " rays ";
        list(f.rays);
        break;
    }
    return os.str();
}

namespace detail {

inline std::shared_ptr<const ConvexSet> share(const ConvexSet& c)
{
    return std::make_shared<const ConvexSet>(c);
}

// Parent system with the listed weak rows also imposed as equations.
inline HSet active_system(const HSet& c, const std::vector<std::size_t>& active)
{
    HSet f = c;
    for (auto i : active)
        f.eq.push_back(c.le.at(i));
    return f;
}

inline int active_dim(const HSet& c, const std::vector<std::size_t>& active)
{
    std::vector<QVec> rows;
    for (const auto& e : c.eq)
        rows.push_back(e.a);
    for (auto i : active)
        rows.push_back(c.le[i].a);
    return static_cast<int>(c.dim - rank_of(rows, c.dim));
}

inline int generator_dim(const VSet& v, const std::vector<std::size_t>& pts, const std::vector<std::size_t>& rays)
{
    std::vector<QVec> dirs;
    for (std::size_t k = 1; k < pts.size(); ++k)
        dirs.push_back(v.points[pts[k]] - v.points[pts[0]]);
    for (auto r : rays)
        dirs.push_back(v.rays[r]);
    return static_cast<int>(rank_of(dirs, v.dim));
}

inline FaceDescriptor empty_face(std::shared_ptr<const ConvexSet> parent)
{
    FaceDescriptor f;
    f.parent = std::move(parent);
    return f;
}

// Closure of an active set under implied equalities; Empty when the rows
// cannot all be tight on the parent.
inline FaceDescriptor canonical_active(std::shared_ptr<const ConvexSet> parent, std::vector<std::size_t> active)
{
    const HSet& c = parent->h();
    HSet sys = active_system(c, active);
    if (!strict_feasible(sys))
        return empty_face(std::move(parent));
    FaceDescriptor f;
    f.kind = FaceDescriptor::Kind::ActiveSet;
    f.active = implicit_equalities(sys);
    f.dim = active_dim(c, f.active);
    f.parent = std::move(parent);
    return f;
}

inline FaceDescriptor generator_face(std::shared_ptr<const ConvexSet> parent, std::vector<std::size_t> pts,
                                     std::vector<std::size_t> rays)
{
    if (pts.empty())
        return empty_face(std::move(parent));
    FaceDescriptor f;
    f.kind = FaceDescriptor::Kind::GeneratorSubset;
    f.dim = generator_dim(parent->v(), pts, rays);
    f.points = std::move(pts);
    f.rays = std::move(rays);
    f.parent = std::move(parent);
    return f;
}

inline std::vector<std::size_t> tight_rows(const HSet& c, const QVec& x)
{
    std::vector<std::size_t> out;
    for (std::size_t i = 0; i < c.le.size(); ++i)
        if (dot(c.le[i].a, x) == c.le[i].b)
            out.push_back(i);
    return out;
}

} // namespace detail

/// The described subset as a convex set (nullopt for Empty).
inline std::optional<ConvexSet> face_set(const FaceDescriptor& f)
{
    switch (f.kind) {
    case FaceDescriptor::Kind::Empty:
        return std::nullopt;
    case FaceDescriptor::Kind::ActiveSet:
        return ConvexSet(detail::active_system(f.parent->h(), f.active));
    case FaceDescriptor::Kind::GeneratorSubset: {
        const VSet& v = f.parent->v();
        std::vector<QVec> pts, rays;
        for (auto i : f.points)
            pts.push_back(v.points[i]);
        for (auto i : f.rays)
            rays.push_back(v.rays[i]);
        return ConvexSet(VSet(v.dim, std::move(pts), std::move(rays)));
    }
    }
    return std::nullopt;
}

inline bool face_contains(const FaceDescriptor& f, const QVec& x)
{
    auto s = face_set(f);
    return s && contains(*s, x);
}

/// The whole set as a face of itself.
inline FaceDescriptor full_face(std::shared_ptr<const ConvexSet> c)
{
    if (c->is_h())
        return detail::canonical_active(c, {});
    std::vector<std::size_t> pts(c->v().points.size()), rays(c->v().rays.size());
    for (std::size_t i = 0; i < pts.size(); ++i)
        pts[i] = i;
    for (std::size_t i = 0; i < rays.size(); ++i)
        rays[i] = i;
    return detail::generator_face(c, std::move(pts), std::move(rays));
}

inline FaceDescriptor full_face(const ConvexSet& c)
{
    return full_face(detail::share(c));
}

/// Face of C spanned by the given weak rows of an H parent, canonicalized.
inline FaceDescriptor active_face(std::shared_ptr<const ConvexSet> c, std::vector<std::size_t> active)
{
    if (!c->is_h())
        throw Error(ErrorCode::ParentMismatch, "active-set faces need an H-form parent");
    for (auto i : active)
        if (i >= c->h().le.size())
            throw Error(ErrorCode::DimensionMismatch, "active row index out of range");
    return detail::canonical_active(std::move(c), std::move(active));
}

inline FaceDescriptor active_face(const ConvexSet& c, std::vector<std::size_t> active)
{
    return active_face(detail::share(c), std::move(active));
}

/// Smallest face containing x, F_min(x, C) = C ∩ (lin cone(C - x) + x).
///
/// H: the weak rows tight at x. This set is already closed under implied
/// equalities since x lies on the face. V: generator g belongs iff some
/// representation of x gives g a positive weight (one LP per generator).
inline FaceDescriptor minimal_face(std::shared_ptr<const ConvexSet> c, const QVec& x)
{
    if (!contains(*c, x))
        throw Error(ErrorCode::NotMember, "point " + to_string(x) + " is not in the set");
    if (c->is_h()) {
        FaceDescriptor f;
        f.kind = FaceDescriptor::Kind::ActiveSet;
        f.active = detail::tight_rows(c->h(), x);
        f.dim = detail::active_dim(c->h(), f.active);
        f.parent = std::move(c);
        return f;
    }
    const VSet& v = c->v();
    LinearSystem sys = detail::combination_system(v, x);
    const std::size_t np = v.points.size();
    std::vector<std::size_t> pts, rays;
    for (std::size_t j = 0; j < sys.dim; ++j) {
        auto lp = lp_solve(unit(sys.dim, j), sys);
        bool positive = lp.status == LpStatus::Unbounded || (lp.status == LpStatus::Optimal && sgn(lp.value) > 0);
        if (positive)
            (j < np ? pts : rays).push_back(j < np ? j : j - np);
    }
    return detail::generator_face(std::move(c), std::move(pts), std::move(rays));
}

inline FaceDescriptor minimal_face(const ConvexSet& c, const QVec& x)
{
    return minimal_face(detail::share(c), x);
}

/// Smallest face containing every point of S; the barycenter of a finite S
/// lies in the intrinsic core of conv S, so its minimal face is the answer.
inline FaceDescriptor minimal_face_of_set(const ConvexSet& c, const std::vector<QVec>& s)
{
    if (s.empty())
        throw Error(ErrorCode::EmptyInput, "minimal face of an empty point set");
    for (const auto& p : s)
        if (!contains(c, p))
            throw Error(ErrorCode::NotMember, "point " + to_string(p) + " is not in the set");
    return minimal_face(c, barycenter(s));
}

namespace detail {

// A point in the relative interior of a nonempty described face.
inline QVec face_interior_point(const FaceDescriptor& f)
{
    return relative_interior_point(*face_set(f));
}

} // namespace detail

/// Whether the candidate describes a face of C. ActiveSet candidates pass
/// iff their canonical closure is the tight set of their own relative
/// interior point; GeneratorSubset candidates pass iff they already span the
/// minimal face of their relative interior point.
inline bool is_face(const ConvexSet& c, const FaceDescriptor& candidate)
{
    if (candidate.empty())
        return true;
    if (!candidate.parent || !(*candidate.parent == c))
        throw Error(ErrorCode::ParentMismatch, "candidate does not reference this set");
    auto parent = candidate.parent;
    if (candidate.kind == FaceDescriptor::Kind::ActiveSet) {
        if (!strict_feasible(detail::active_system(c.h(), candidate.active)))
            return true; // describes the empty set
        auto closed = detail::canonical_active(parent, candidate.active);
        auto x = detail::face_interior_point(closed);
        return detail::tight_rows(c.h(), x) == closed.active;
    }
    auto x = detail::face_interior_point(candidate);
    auto fmin = minimal_face(parent, x);
    auto described = face_set(candidate);
    const VSet& v = c.v();
    for (auto i : fmin.points)
        if (!contains(*described, v.points[i]))
            return false;
    for (auto r : fmin.rays)
        if (!recedes(*described, v.rays[r]))
            return false;
    return true;
}

/// Whether an arbitrary convex subset of C is a face: it must lie in C and
/// contain the minimal face of one of its relative interior points.
inline bool is_face(const ConvexSet& c, const ConvexSet& subset)
{
    if (is_empty(subset))
        return true;
    QVec x = relative_interior_point(subset);
    if (!contains(c, x))
        return false;
    VSet gens = closure_generators(subset);
    for (const auto& p : gens.points)
        if (contains(subset, p) && !contains(c, p))
            return false;
    VSet fg = closure_generators(*face_set(minimal_face(c, x)));
    for (const auto& p : fg.points)
        if (!contains(subset, p))
            return false;
    for (const auto& r : fg.rays)
        if (!recedes(subset, r))
            return false;
    return true;
}

inline FaceDescriptor face_intersection(const FaceDescriptor& f, const FaceDescriptor& g)
{
    if (!f.parent || !g.parent || !(f.parent == g.parent || *f.parent == *g.parent))
        throw Error(ErrorCode::ParentMismatch, "faces of different sets");
    if (f.empty() || g.empty())
        return detail::empty_face(f.parent);
    if (f.kind == FaceDescriptor::Kind::ActiveSet) {
        std::vector<std::size_t> u;
        std::set_union(f.active.begin(), f.active.end(), g.active.begin(), g.active.end(), std::back_inserter(u));
        return detail::canonical_active(f.parent, std::move(u));
    }
    std::vector<std::size_t> pts, rays;
    std::set_intersection(f.points.begin(), f.points.end(), g.points.begin(), g.points.end(), std::back_inserter(pts));
    std::set_intersection(f.rays.begin(), f.rays.end(), g.rays.begin(), g.rays.end(), std::back_inserter(rays));
    return detail::generator_face(f.parent, std::move(pts), std::move(rays));
}

/// Set inclusion between faces of the same parent.
inline bool face_subset(const FaceDescriptor& f, const FaceDescriptor& g)
{
    if (f.empty())
        return true;
    if (g.empty())
        return false;
    if (f.kind == FaceDescriptor::Kind::ActiveSet)
        return std::includes(f.active.begin(), f.active.end(), g.active.begin(), g.active.end());
    return std::includes(g.points.begin(), g.points.end(), f.points.begin(), f.points.end()) &&
           std::includes(g.rays.begin(), g.rays.end(), f.rays.begin(), f.rays.end());
}

// ---------------------------------------------------------------------------
// Lattice
// ---------------------------------------------------------------------------

/// Faces ordered by (dim, canonical key); node 0 is Empty, the last node is
/// the full face. `covers` lists (lower, upper) index pairs.
struct LatticeGraph {
    std::vector<FaceDescriptor> nodes;
    std::vector<std::pair<std::size_t, std::size_t>> covers;

    std::size_t bottom() const { return 0; }
    std::size_t top() const { return nodes.size() - 1; }
};

namespace detail {

inline void require_lattice_input(const ConvexSet& c)
{
    if (c.has_strict())
        throw Error(ErrorCode::UnsupportedStrict, "face lattices are enumerated for linearly closed sets only");
    if (c.dim() > kLatticeMaxDim)
        throw Error(ErrorCode::TooLarge, "face lattice needs dim ≤ 4");
    if (is_empty(c))
        throw Error(ErrorCode::EmptySet, "face lattice of an empty set");
}

// Breadth-first from the full face: tighten one more inactive row at a time.
inline std::vector<std::vector<std::size_t>> enumerate_active_sets(std::shared_ptr<const ConvexSet> h)
{
    if (h->h().le.size() > kLatticeMaxRows)
        throw Error(ErrorCode::TooLarge, "face lattice needs ≤ 12 inequalities");
    std::set<std::vector<std::size_t>> seen;
    std::vector<std::vector<std::size_t>> order;
    std::vector<std::vector<std::size_t>> frontier{full_face(h).active};
    seen.insert(frontier.front());
    order.push_back(frontier.front());
    while (!frontier.empty()) {
        std::vector<std::vector<std::size_t>> next;
        for (const auto& s : frontier)
            for (std::size_t j = 0; j < h->h().le.size(); ++j) {
                if (std::binary_search(s.begin(), s.end(), j))
                    continue;
                auto t = s;
                t.insert(std::upper_bound(t.begin(), t.end(), j), j);
                auto f = canonical_active(h, t);
                if (f.empty() || !seen.insert(f.active).second)
                    continue;
                order.push_back(f.active);
                next.push_back(f.active);
            }
        frontier = std::move(next);
    }
    return order;
}

} // namespace detail

inline LatticeGraph face_lattice(std::shared_ptr<const ConvexSet> c)
{
    detail::require_lattice_input(*c);
    std::vector<FaceDescriptor> faces;
    if (c->is_h()) {
        for (auto& s : detail::enumerate_active_sets(c)) {
            FaceDescriptor f;
            f.kind = FaceDescriptor::Kind::ActiveSet;
            f.dim = detail::active_dim(c->h(), s);
            f.active = std::move(s);
            f.parent = c;
            faces.push_back(std::move(f));
        }
    } else {
        // Enumerate on the H-form, then record which generators lie on each face.
        auto h = std::make_shared<const ConvexSet>(to_hset(c->v()));
        const VSet& v = c->v();
        for (const auto& s : detail::enumerate_active_sets(h)) {
            HSet sys = detail::active_system(h->h(), s);
            std::vector<std::size_t> pts, rays;
            for (std::size_t i = 0; i < v.points.size(); ++i)
                if (sys.satisfied_by(v.points[i]))
                    pts.push_back(i);
            for (std::size_t i = 0; i < v.rays.size(); ++i) {
                bool on = true;
                for (const auto& e : sys.eq)
                    on = on && sgn(dot(e.a, v.rays[i])) == 0;
                for (const auto& r : sys.le)
                    on = on && sgn(dot(r.a, v.rays[i])) <= 0;
                if (on)
                    rays.push_back(i);
            }
            faces.push_back(detail::generator_face(c, std::move(pts), std::move(rays)));
        }
    }
    auto key = [](const FaceDescriptor& f) {
        return std::make_tuple(f.dim, f.active, f.points, f.rays);
    };
    std::sort(faces.begin(), faces.end(), [&](const auto& a, const auto& b) { return key(a) < key(b); });

    LatticeGraph g;
    g.nodes.push_back(detail::empty_face(c));
    g.nodes.insert(g.nodes.end(), faces.begin(), faces.end());
    const std::size_t n = g.nodes.size();
    std::vector<std::vector<bool>> below(n, std::vector<bool>(n, false));
    for (std::size_t i = 0; i < n; ++i)
        for (std::size_t j = 0; j < n; ++j)
            below[i][j] = i != j && face_subset(g.nodes[i], g.nodes[j]);
    for (std::size_t i = 0; i < n; ++i)
        for (std::size_t j = 0; j < n; ++j) {
            if (!below[i][j])
                continue;
            bool cover = true;
            for (std::size_t k = 0; k < n && cover; ++k)
                cover = !(below[i][k] && below[k][j]);
            if (cover)
                g.covers.emplace_back(i, j);
        }
    return g;
}

inline LatticeGraph face_lattice(const ConvexSet& c)
{
    return face_lattice(detail::share(c));
}

/// Every maximal chain from Empty to the full face, in lexicographic order of
/// node indices.
inline std::vector<std::vector<FaceDescriptor>> maximal_chains(const LatticeGraph& l)
{
    std::vector<std::vector<std::size_t>> up(l.nodes.size());
    for (const auto& [lo, hi] : l.covers)
        up[lo].push_back(hi);
    for (auto& u : up)
        std::sort(u.begin(), u.end());
    std::vector<std::vector<FaceDescriptor>> chains;
    std::vector<std::size_t> path{l.bottom()};
    auto walk = [&](auto&& self, std::size_t node) -> void {
        if (node == l.top()) {
            std::vector<FaceDescriptor> chain;
            for (auto i : path)
                chain.push_back(l.nodes[i]);
            chains.push_back(std::move(chain));
            return;
        }
        for (auto next : up[node]) {
            path.push_back(next);
            self(self, next);
            path.pop_back();
        }
    };
    if (l.nodes.size() == 1) {
        chains.push_back({l.nodes.front()});
        return chains;
    }
    walk(walk, l.bottom());
    return chains;
}

/// Hasse diagram in Graphviz DOT: one node per face, one edge per cover.
inline std::string to_dot(const LatticeGraph& l)
{
    std::ostringstream os;
    os << "digraph face_lattice {\n  rankdir=BT;\n  node [shape=box];\n";
    for (std::size_t i = 0; i < l.nodes.size(); ++i)
        os << "  n" << i << " [label=\"" << describe(l.nodes[i]) << "\"];\n";
    for (const auto& [lo, hi] : l.covers)
        os << "  n" << lo << " -> n" << hi << ";\n";
    os << "}\n";
    return os.str();
}

// ---------------------------------------------------------------------------
// D \ F
// ---------------------------------------------------------------------------

/// C ∖ F for a proper nonempty face F of a linearly closed H-set C.
///
/// The rows of F's active set that are not implicit on C sum to a row g·x ≤ h
/// that is valid on C and tight exactly on F, so C ∖ F = C ∩ {g·x < h}. With
/// a single such row the row itself is flipped to strict.
inline ConvexSet set_minus_face(const ConvexSet& c, const FaceDescriptor& f)
{
    if (c.has_strict())
        throw Error(ErrorCode::UnsupportedStrict, "set_minus_face needs a linearly closed set");
    if (f.empty())
        throw Error(ErrorCode::NotProperFace, "the empty face is not proper");
    if (!f.parent || !(*f.parent == c))
        throw Error(ErrorCode::ParentMismatch, "face does not belong to this set");
    if (c.is_v()) {
        auto h = std::make_shared<const ConvexSet>(to_hset(c.v()));
        auto fh = minimal_face(h, detail::face_interior_point(f));
        return set_minus_face(*h, fh);
    }
    const HSet& h = c.h();
    auto implicit = implicit_equalities(h);
    std::vector<std::size_t> cut;
    std::set_difference(f.active.begin(), f.active.end(), implicit.begin(), implicit.end(), std::back_inserter(cut));
    if (cut.empty())
        throw Error(ErrorCode::NotProperFace, "face coincides with the whole set");

    HSet out = h;
    if (cut.size() == 1) {
        out.le.erase(out.le.begin() + static_cast<std::ptrdiff_t>(cut.front()));
        out.lt.push_back(h.le[cut.front()]);
        return out;
    }
    Constraint g{zeros(h.dim), 0};
    for (auto i : cut) {
        g.a = g.a + h.le[i].a;
        g.b += h.le[i].b;
    }
    HSet probe = h;
    probe.eq.push_back(g);
    if (!strict_feasible(probe) || implicit_equalities(probe) != f.active)
        throw Error(ErrorCode::Unrepresentable, "no single positive combination cuts exactly this face");
    out.lt.push_back(std::move(g));
    return out;
}

} // namespace facial

#endif // FACIAL_FACES_HPP
