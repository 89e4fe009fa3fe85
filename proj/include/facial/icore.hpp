#ifndef FACIAL_ICORE_HPP
#define FACIAL_ICORE_HPP

#include <array>
#include <cstddef>
#include <memory>
#include <optional>
#include <string>
#include <utility>
#include <vector>

#include <facial/faces.hpp>
#include <facial/sampling.hpp>

namespace facial {

/// The four equivalent characterizations of the intrinsic core.
///  - Segments: every segment from a point of C through x extends beyond x.
///  - FeasibleCone: cone(C - x) is a linear subspace.
///  - AffineCore: x is in the algebraic core of C relative to aff C.
///  - MinFace: the minimal face of x is C itself.
enum class IcrMethod { Segments, FeasibleCone, AffineCore, MinFace, All };

inline constexpr std::array<IcrMethod, 4> kIcrMethods{IcrMethod::Segments, IcrMethod::FeasibleCone,
                                                      IcrMethod::AffineCore, IcrMethod::MinFace};

inline std::string method_name(IcrMethod m)
{
    switch (m) {
    case IcrMethod::Segments: return "segments";
    case IcrMethod::FeasibleCone: return "feasible-cone";
    case IcrMethod::AffineCore: return "affine-core";
    case IcrMethod::MinFace: return "min-face";
    case IcrMethod::All: return "all";
    }
    return "?";
}

inline IcrMethod parse_method(const std::string& s)
{
    for (auto m : {IcrMethod::Segments, IcrMethod::FeasibleCone, IcrMethod::AffineCore, IcrMethod::MinFace,
                   IcrMethod::All})
        if (method_name(m) == s)
            return m;
    throw Error(ErrorCode::Format, "unknown icr method '" + s + "'");
}

namespace detail {

// Largest t in [0, 1] with x + t·d in the closure of C, compared against 0.
inline bool can_step(const ConvexSet& c, const QVec& x, const QVec& d)
{
    if (c.is_h()) {
        const HSet& h = c.h();
        for (const auto& r : h.eq)
            if (sgn(dot(r.a, d)) != 0)
                return false;
        for (const auto* rows : {&h.le, &h.lt})
            for (const auto& r : *rows)
                if (sgn(dot(r.a, d)) > 0 && dot(r.a, x) == r.b)
                    return false;
        return true;
    }
    // variables (t, lambda..., mu...): sum lambda p + sum mu r - t d = x
    const VSet& v = c.v();
    LinearSystem base = combination_system(v, x);
    LinearSystem s;
    s.dim = base.dim + 1;
    auto lift = [](const QVec& a, const Rat& t) {
        QVec r{t};
        r.insert(r.end(), a.begin(), a.end());
        return r;
    };
    for (const auto& r : base.le)
        s.le.push_back({lift(r.a, 0), r.b});
    s.le.push_back({unit(s.dim, 0), 1});
    for (std::size_t k = 0; k < base.eq.size(); ++k) {
        Rat coef = k < v.dim ? Rat(-d[k]) : Rat(0);
        s.eq.push_back({lift(base.eq[k].a, coef), base.eq[k].b});
    }
    auto lp = lp_solve(unit(s.dim, 0), s);
    return lp.status == LpStatus::Optimal && sgn(lp.value) > 0;
}

inline bool icr_by_segments(const ConvexSet& c, const QVec& x)
{
    VSet gens = closure_generators(c);
    ConvexSet closed = c.is_h() ? ConvexSet(HSet(relax(c.h()))) : c;
    for (const auto& y : gens.points)
        if (y != x && !can_step(closed, x, x - y))
            return false;
    for (const auto& r : gens.rays)
        if (!can_step(closed, x, -r))
            return false;
    return true;
}

inline bool icr_by_feasible_cone(const ConvexSet& c, const QVec& x)
{
    if (c.is_h()) {
        // cone(C - x) = {d : a_i·d ≤ 0 (i tight at x), e·d = 0}; it is a
        // subspace iff no tight row can be strictly negative on it.
        const HSet& h = c.h();
        LinearSystem cone;
        cone.dim = h.dim;
        auto tight = tight_rows(h, x);
        for (auto i : tight)
            cone.le.push_back({h.le[i].a, 0});
        for (const auto& e : h.eq)
            cone.eq.push_back({e.a, 0});
        for (std::size_t k = 0; k < h.dim; ++k) {
            cone.le.push_back({unit(h.dim, k), 1});
            cone.le.push_back({-unit(h.dim, k), 1});
        }
        for (auto i : tight) {
            auto lp = lp_solve(-h.le[i].a, cone);
            if (sgn(lp.value) > 0)
                return false;
        }
        return true;
    }
    const VSet& v = c.v();
    std::vector<QVec> gens;
    for (const auto& p : v.points)
        if (p != x)
            gens.push_back(p - x);
    gens.insert(gens.end(), v.rays.begin(), v.rays.end());
    if (gens.empty())
        return true;
    VSet cone(v.dim, {zeros(v.dim)}, gens);
    for (const auto& g : gens)
        if (!contains(cone, -g))
            return false;
    return true;
}

inline bool icr_by_affine_core(const ConvexSet& c, const QVec& x)
{
    auto hull = affine_hull(c);
    if (c.is_h()) {
        // one-variable LP per signed direction: max t ≤ 1 with x + t d ∈ cl C
        const HSet& h = c.h();
        for (const auto& d : hull.basis)
            for (const QVec& dir : {d, -d}) {
                LinearSystem s;
                s.dim = 1;
                for (const auto* rows : {&h.le, &h.lt})
                    for (const auto& r : *rows)
                        s.le.push_back({QVec{dot(r.a, dir)}, r.b - dot(r.a, x)});
                for (const auto& r : h.eq)
                    s.eq.push_back({QVec{dot(r.a, dir)}, r.b - dot(r.a, x)});
                s.le.push_back({QVec{Rat(1)}, 1});
                auto lp = lp_solve(QVec{Rat(1)}, s);
                if (lp.status != LpStatus::Optimal || sgn(lp.value) <= 0)
                    return false;
            }
        return true;
    }
    for (const auto& d : hull.basis)
        for (const QVec& dir : {d, -d})
            if (!can_step(c, x, dir))
                return false;
    return true;
}

inline bool icr_by_min_face(const ConvexSet& c, const QVec& x)
{
    auto shared = share(c);
    return minimal_face(shared, x) == full_face(shared);
}

inline bool icr_by(IcrMethod m, const ConvexSet& c, const QVec& x)
{
    switch (m) {
    case IcrMethod::Segments: return icr_by_segments(c, x);
    case IcrMethod::FeasibleCone: return icr_by_feasible_cone(c, x);
    case IcrMethod::AffineCore: return icr_by_affine_core(c, x);
    case IcrMethod::MinFace: return icr_by_min_face(c, x);
    case IcrMethod::All: break;
    }
    throw Error(ErrorCode::Format, "icr_by needs a single method");
}

} // namespace detail

struct IcrReport {
    std::vector<std::pair<IcrMethod, bool>> verdicts;
    bool agree() const
    {
        for (const auto& v : verdicts)
            if (v.second != verdicts.front().second)
                return false;
        return true;
    }
};

/// Every method's verdict on x ∈ icr C, without demanding agreement.
inline IcrReport icr_report(const ConvexSet& c, const QVec& x)
{
    if (!contains(c, x))
        throw Error(ErrorCode::NotMember, "point " + to_string(x) + " is not in the set");
    IcrReport r;
    for (auto m : kIcrMethods)
        r.verdicts.emplace_back(m, detail::icr_by(m, c, x));
    return r;
}

inline bool icr_contains(const ConvexSet& c, const QVec& x, IcrMethod method = IcrMethod::All)
{
    if (method != IcrMethod::All) {
        if (!contains(c, x))
            throw Error(ErrorCode::NotMember, "point " + to_string(x) + " is not in the set");
        return detail::icr_by(method, c, x);
    }
    auto r = icr_report(c, x);
    if (!r.agree()) {
        std::string msg = "methods disagree at " + to_string(x) + ":";
        for (const auto& [m, v] : r.verdicts)
            msg += " " + method_name(m) + "=" + (v ? "true" : "false");
        throw Error(ErrorCode::MethodDisagreement, msg);
    }
    return r.verdicts.front().second;
}

/// icr C as a mixed H-set: implicit equalities become equations and every
/// other row becomes strict. A singleton is its own intrinsic core.
inline ConvexSet relative_interior(const ConvexSet& c)
{
    HSet h = as_hset(c);
    if (is_empty(h))
        throw Error(ErrorCode::EmptySet, "relative interior of an empty set");
    return relative_interior_system(h);
}

/// The nonempty faces of C; their intrinsic cores partition C.
inline std::vector<FaceDescriptor> decompose(const ConvexSet& c)
{
    if (is_empty(c))
        return {};
    auto lattice = face_lattice(c);
    return std::vector<FaceDescriptor>(lattice.nodes.begin() + 1, lattice.nodes.end());
}

/// The faces of C with their intrinsic cores, built once for repeated
/// point location.
class Decomposition {
public:
    explicit Decomposition(const ConvexSet& c) : faces_(decompose(c))
    {
        for (const auto& f : faces_)
            cores_.push_back(relative_interior(*face_set(f)));
    }

    const std::vector<FaceDescriptor>& faces() const { return faces_; }

    /// Indices of the faces whose intrinsic core holds x.
    std::vector<std::size_t> holders(const QVec& x) const
    {
        std::vector<std::size_t> out;
        for (std::size_t i = 0; i < cores_.size(); ++i)
            if (contains(cores_[i], x))
                out.push_back(i);
        return out;
    }

    const FaceDescriptor& locate(const QVec& x) const
    {
        auto h = holders(x);
        if (h.size() != 1)
            throw Error(h.empty() ? ErrorCode::NotMember : ErrorCode::MethodDisagreement,
                        std::to_string(h.size()) + " faces hold " + to_string(x) + " in their intrinsic cores");
        return faces_[h.front()];
    }

private:
    std::vector<FaceDescriptor> faces_;
    std::vector<ConvexSet> cores_;
};

/// The unique face whose intrinsic core holds x, found by scanning the
/// decomposition. Sets outside lattice scope fall back to minimal_face.
inline FaceDescriptor locate(const ConvexSet& c, const QVec& x)
{
    if (!contains(c, x))
        throw Error(ErrorCode::NotMember, "point " + to_string(x) + " is not in the set");
    if (c.has_strict() || c.dim() > kLatticeMaxDim || (c.is_h() && c.h().le.size() > kLatticeMaxRows))
        return minimal_face(c, x);
    return Decomposition(c).locate(x);
}

/// False iff C equals its own intrinsic core.
inline bool has_proper_faces(const ConvexSet& c)
{
    if (is_empty(c))
        throw Error(ErrorCode::EmptySet, "has_proper_faces of an empty set");
    if (c.is_v()) {
        auto shared = detail::share(c);
        auto full = full_face(shared);
        for (const auto& p : c.v().points)
            if (!(minimal_face(shared, p) == full))
                return true;
        return false;
    }
    const HSet& h = c.h();
    auto imp = implicit_equalities(h);
    for (std::size_t i = 0; i < h.le.size(); ++i) {
        if (std::binary_search(imp.begin(), imp.end(), i))
            continue;
        HSet touch = h;
        touch.eq.push_back(h.le[i]);
        if (strict_feasible(touch))
            return true;
    }
    return false;
}

// ---------------------------------------------------------------------------
// Calculus
// ---------------------------------------------------------------------------

enum class CalcLaw { Sum, Translate, Scale, LinearImage, Product, PositiveHull };

inline std::string law_name(CalcLaw l)
{
    switch (l) {
    case CalcLaw::Sum: return "sum";
    case CalcLaw::Translate: return "translate";
    case CalcLaw::Scale: return "scale";
    case CalcLaw::LinearImage: return "linear-image";
    case CalcLaw::Product: return "product";
    case CalcLaw::PositiveHull: return "positive-hull";
    }
    return "?";
}

inline CalcLaw parse_law(const std::string& s)
{
    for (auto l : {CalcLaw::Sum, CalcLaw::Translate, CalcLaw::Scale, CalcLaw::LinearImage, CalcLaw::Product,
                   CalcLaw::PositiveHull})
        if (law_name(l) == s)
            return l;
    throw Error(ErrorCode::Format, "unknown law '" + s + "'");
}

/// Inputs for one law: `sets` holds one operand (two for Sum and Product);
/// Translate reads `vector`, Scale reads `scalar`, LinearImage reads `map`.
struct CalcOperands {
    std::vector<ConvexSet> sets;
    std::optional<QVec> vector;
    std::optional<Rat> scalar;
    std::optional<LinearMap> map;
};

struct Counterexample {
    QVec point;
    std::string side; // which inclusion failed
};

struct CalcVerdict {
    CalcLaw law;
    bool holds = true;
    std::optional<Counterexample> counterexample;
    std::size_t checked = 0;
};

namespace detail {

// Whether some x ∈ icr C maps to y under `map` (identity when map is empty).
// ri_c is relative_interior_system of C.
inline bool icr_preimage(const HSet& ri_c, const LinearMap& map, const QVec& y)
{
    HSet ri = ri_c;
    for (std::size_t i = 0; i < map.target_dim(); ++i)
        ri.eq.push_back({map.matrix.row(i), y[i]});
    return strict_feasible(ri).has_value();
}

// Whether z = a + b with a ∈ icr A, b ∈ icr B, given both relative
// interior systems.
inline bool icr_splits(const HSet& ra, const HSet& rb, const QVec& z)
{
    const std::size_t n = ra.dim;
    LinearSystem s;
    s.dim = 2 * n;
    auto place = [n](const LinearSystem& src, std::size_t off, LinearSystem& dst) {
        auto pad = [&](const Constraint& r) {
            QVec a = zeros(2 * n);
            for (std::size_t k = 0; k < n; ++k)
                a[off + k] = r.a[k];
            return Constraint{std::move(a), r.b};
        };
        for (const auto& r : src.le)
            dst.le.push_back(pad(r));
        for (const auto& r : src.lt)
            dst.lt.push_back(pad(r));
        for (const auto& r : src.eq)
            dst.eq.push_back(pad(r));
    };
    place(ra, 0, s);
    place(rb, n, s);
    for (std::size_t k = 0; k < n; ++k) {
        QVec row = zeros(2 * n);
        row[k] = 1;
        row[n + k] = 1;
        s.eq.push_back({std::move(row), z[k]});
    }
    return strict_feasible(s).has_value();
}

inline LinearMap identity_map(std::size_t n)
{
    QMat m(n, n);
    for (std::size_t i = 0; i < n; ++i)
        m(i, i) = 1;
    return {m};
}

} // namespace detail

/// The composite set a law talks about (A+B, C+t, λC, AC, C×D, pos C).
inline ConvexSet calculus_composite(CalcLaw law, const CalcOperands& ops)
{
    auto need = [&](std::size_t k) {
        if (ops.sets.size() != k)
            throw Error(ErrorCode::EmptyInput, law_name(law) + " takes " + std::to_string(k) + " set operand(s)");
    };
    switch (law) {
    case CalcLaw::Sum:
        need(2);
        if (ops.sets[0].has_strict() || ops.sets[1].has_strict())
            return sum_by_elimination(as_hset(ops.sets[0]), as_hset(ops.sets[1]));
        return minkowski_sum(ops.sets[0], ops.sets[1]);
    case CalcLaw::Translate:
        need(1);
        if (!ops.vector)
            throw Error(ErrorCode::EmptyInput, "translate needs a vector");
        return translate(ops.sets[0], *ops.vector);
    case CalcLaw::Scale:
        need(1);
        if (!ops.scalar)
            throw Error(ErrorCode::EmptyInput, "scale needs a scalar");
        return scale(ops.sets[0], *ops.scalar);
    case CalcLaw::LinearImage:
        need(1);
        if (!ops.map)
            throw Error(ErrorCode::EmptyInput, "linear image needs a map");
        return linear_image(ops.sets[0], *ops.map);
    case CalcLaw::Product:
        need(2);
        return product(ops.sets[0], ops.sets[1]);
    case CalcLaw::PositiveHull:
        need(1);
        return positive_hull(ops.sets[0]);
    }
    throw Error(ErrorCode::Format, "unknown law");
}

/// Checks an intrinsic-core calculus law membership-wise on reproducible
/// samples. Equalities are tested in both directions:
///  - operand-side samples (icr points of the operands) must land in icr of
///    the composite;
///  - composite-side samples (boundary included) must be in icr of the
///    composite exactly when they come from icr points of the operands.
/// PositiveHull is one inclusion (icr C ⊆ icr pos C).
inline CalcVerdict check_calculus(CalcLaw law, const CalcOperands& ops, SamplerConfig cfg = {},
                                  IcrMethod method = IcrMethod::MinFace)
{
    if (cfg.count == 0)
        throw Error(ErrorCode::EmptyInput, "sampler count must be at least 1");
    ConvexSet composite = [&]() -> ConvexSet {
        try {
            return calculus_composite(law, ops);
        } catch (const Error& e) {
            if (e.code() == ErrorCode::UnsupportedStrict || e.code() == ErrorCode::UnsupportedRays ||
                e.code() == ErrorCode::ContainsOrigin || e.code() == ErrorCode::TooLarge)
                throw Error(ErrorCode::UnsupportedComposite, e.what());
            throw;
        }
    }();

    Lcg rng(cfg.seed);
    CalcVerdict verdict{law, true, std::nullopt, 0};
    auto fail = [&](QVec p, std::string side) {
        if (verdict.holds) {
            verdict.holds = false;
            verdict.counterexample = Counterexample{std::move(p), std::move(side)};
        }
    };
    // Queries run on H copies with the full face computed once; a V-form
    // minimal face costs one LP per generator.
    struct Probe {
        std::shared_ptr<const ConvexSet> set;
        FaceDescriptor full;
    };
    auto probe = [](const ConvexSet& s) {
        std::shared_ptr<const ConvexSet> p;
        try {
            p = detail::share(s.is_v() ? ConvexSet(as_hset(s)) : s);
        } catch (const Error& e) {
            if (e.code() != ErrorCode::TooLarge)
                throw;
            p = detail::share(s);
        }
        return Probe{p, full_face(p)};
    };
    auto icr = [&](const Probe& s, const QVec& p) {
        if (!contains(*s.set, p))
            return false;
        if (method == IcrMethod::MinFace)
            return minimal_face(s.set, p) == s.full;
        return icr_contains(*s.set, p, method);
    };
    const ConvexSet& c0 = ops.sets.front();
    const Probe pc = probe(c0), pz = probe(composite);

    // Forward map from operand space to composite space for bijective laws.
    auto forward = [&](const QVec& x) -> QVec {
        switch (law) {
        case CalcLaw::Translate: return x + *ops.vector;
        case CalcLaw::Scale: return *ops.scalar * x;
        default: return x;
        }
    };
    auto backward = [&](const QVec& y) -> QVec {
        switch (law) {
        case CalcLaw::Translate: return y - *ops.vector;
        case CalcLaw::Scale: return Rat(1) / *ops.scalar * y;
        default: return y;
        }
    };

    switch (law) {
    case CalcLaw::Translate:
    case CalcLaw::Scale:
        for (const auto& x : sample_points(c0, rng, cfg.count)) {
            ++verdict.checked;
            if (icr(pc, x) != icr(pz, forward(x)))
                fail(forward(x), icr(pc, x) ? "image of icr point not in icr of composite"
                                            : "image of boundary point in icr of composite");
        }
        for (const auto& y : sample_points(composite, rng, cfg.count)) {
            ++verdict.checked;
            if (icr(pz, y) != icr(pc, backward(y)))
                fail(y, "composite icr membership differs from operand icr membership");
        }
        break;
    case CalcLaw::Product: {
        const ConvexSet& d0 = ops.sets[1];
        const Probe pd = probe(d0);
        auto xs = sample_points(c0, rng, cfg.count);
        auto ys = sample_points(d0, rng, cfg.count);
        for (std::size_t i = 0; i < std::max(xs.size(), ys.size()); ++i) {
            const QVec& x = xs[i % xs.size()];
            const QVec& y = ys[(i * 7 + 3) % ys.size()];
            QVec xy = x;
            xy.insert(xy.end(), y.begin(), y.end());
            ++verdict.checked;
            if (icr(pz, xy) != (icr(pc, x) && icr(pd, y)))
                fail(xy, "icr of product differs from product of icr");
        }
        break;
    }
    case CalcLaw::Sum: {
        const ConvexSet& d0 = ops.sets[1];
        const HSet ra = relative_interior_system(as_hset(c0)), rb = relative_interior_system(as_hset(d0));
        auto as = sample_relative_interior(c0, rng, cfg.count);
        auto bs = sample_relative_interior(d0, rng, cfg.count);
        for (std::size_t i = 0; i < as.size(); ++i) {
            ++verdict.checked;
            QVec z = as[i] + bs[i];
            if (!icr(pz, z))
                fail(z, "icr A + icr B not in icr(A+B)");
        }
        for (const auto& z : sample_points(composite, rng, cfg.count)) {
            ++verdict.checked;
            if (icr(pz, z) != detail::icr_splits(ra, rb, z))
                fail(z, icr(pz, z) ? "icr(A+B) point does not split into icr A + icr B"
                                          : "icr A + icr B point on the boundary of A+B");
        }
        break;
    }
    case CalcLaw::LinearImage: {
        const HSet ri = relative_interior_system(as_hset(c0));
        for (const auto& x : sample_relative_interior(c0, rng, cfg.count)) {
            ++verdict.checked;
            QVec y = (*ops.map)(x);
            if (!icr(pz, y))
                fail(y, "A icr C not in icr(AC)");
        }
        for (const auto& y : sample_points(composite, rng, cfg.count)) {
            ++verdict.checked;
            if (icr(pz, y) != detail::icr_preimage(ri, *ops.map, y))
                fail(y, icr(pz, y) ? "icr(AC) point has no icr preimage" : "icr preimage of a boundary point");
        }
        break;
    }
    case CalcLaw::PositiveHull:
        for (const auto& x : sample_relative_interior(c0, rng, cfg.count)) {
            ++verdict.checked;
            if (!icr(pz, x))
                fail(x, "icr C not in icr of positive hull");
        }
        for (const auto& x : sample_points(c0, rng, cfg.count)) {
            ++verdict.checked;
            if (!contains(*pz.set, x))
                fail(x, "C not contained in its positive hull");
        }
        break;
    }
    return verdict;
}

} // namespace facial

#endif // FACIAL_ICORE_HPP
