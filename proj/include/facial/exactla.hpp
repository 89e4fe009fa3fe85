#ifndef FACIAL_EXACTLA_HPP
#define FACIAL_EXACTLA_HPP

#include <algorithm>
#include <cstddef>
#include <optional>
#include <set>
#include <utility>
#include <vector>

#include <facial/rational.hpp>

namespace facial {

// ---------------------------------------------------------------------------
// Row reduction
// ---------------------------------------------------------------------------

struct RrefResult {
    QMat reduced;
    std::vector<std::size_t> pivots;
    std::size_t rank = 0;
};

/// Reduced row echelon form over the rationals. Zero rows are kept at the
/// bottom so the shape of the input is preserved.
inline RrefResult rref(const QMat& m)
{
    RrefResult out{m, {}, 0};
    QMat& a = out.reduced;
    std::size_t r = 0;
    for (std::size_t c = 0; c < a.cols() && r < a.rows(); ++c) {
        std::size_t p = r;
        while (p < a.rows() && sgn(a(p, c)) == 0)
            ++p;
        if (p == a.rows())
            continue;
        std::swap(a.row(p), a.row(r));
        Rat inv = 1 / a(r, c);
        for (auto& v : a.row(r))
            v *= inv;
        for (std::size_t i = 0; i < a.rows(); ++i) {
            if (i == r || sgn(a(i, c)) == 0)
                continue;
            Rat f = a(i, c);
            for (std::size_t j = c; j < a.cols(); ++j)
                a(i, j) -= f * a(r, j);
        }
        out.pivots.push_back(c);
        ++r;
    }
    out.rank = r;
    return out;
}

inline std::size_t rank_of(const std::vector<QVec>& rows, std::size_t cols)
{
    if (rows.empty())
        return 0;
    return rref(QMat(rows, cols)).rank;
}

/// Basis of {x : row · x = 0 for every row}; one vector per free column.
inline std::vector<QVec> nullspace(const std::vector<QVec>& rows, std::size_t cols)
{
    std::vector<QVec> basis;
    if (rows.empty()) {
        for (std::size_t j = 0; j < cols; ++j)
            basis.push_back(unit(cols, j));
        return basis;
    }
    auto red = rref(QMat(rows, cols));
    std::vector<bool> is_pivot(cols, false);
    for (auto p : red.pivots)
        is_pivot[p] = true;
    for (std::size_t f = 0; f < cols; ++f) {
        if (is_pivot[f])
            continue;
        QVec v = zeros(cols);
        v[f] = 1;
        for (std::size_t i = 0; i < red.rank; ++i)
            v[red.pivots[i]] = -red.reduced(i, f);
        basis.push_back(std::move(v));
    }
    return basis;
}

/// Keeps a maximal linearly independent prefix-greedy subset of `vecs`.
inline std::vector<QVec> independent_subset(const std::vector<QVec>& vecs, std::size_t cols)
{
    std::vector<QVec> kept;
    for (const auto& v : vecs) {
        kept.push_back(v);
        if (rank_of(kept, cols) < kept.size())
            kept.pop_back();
    }
    return kept;
}

// ---------------------------------------------------------------------------
// Linear systems
// ---------------------------------------------------------------------------

/// One row a·x (rel) b.
struct Constraint {
    QVec a;
    Rat b;
    friend bool operator==(const Constraint&, const Constraint&) = default;
};

/// {x : le rows a·x ≤ b, lt rows a·x < b, eq rows a·x = b}.
struct LinearSystem {
    std::size_t dim = 0;
    std::vector<Constraint> le;
    std::vector<Constraint> lt;
    std::vector<Constraint> eq;

    friend bool operator==(const LinearSystem&, const LinearSystem&) = default;

    void check() const
    {
        for (const auto* rows : {&le, &lt, &eq})
            for (const auto& c : *rows)
                if (c.a.size() != dim)
                    throw Error(ErrorCode::DimensionMismatch, "constraint row length differs from system dimension");
    }

    bool satisfied_by(const QVec& x) const
    {
        if (x.size() != dim)
            throw Error(ErrorCode::DimensionMismatch, "point dimension differs from system dimension");
        for (const auto& c : le)
            if (dot(c.a, x) > c.b)
                return false;
        for (const auto& c : lt)
            if (dot(c.a, x) >= c.b)
                return false;
        for (const auto& c : eq)
            if (dot(c.a, x) != c.b)
                return false;
        return true;
    }
};

// ---------------------------------------------------------------------------
// Simplex
// ---------------------------------------------------------------------------

enum class LpStatus { Optimal, Infeasible, Unbounded };

struct LpOutcome {
    LpStatus status = LpStatus::Infeasible;
    Rat value;   // Optimal only
    QVec point;  // Optimal only
    QVec ray;    // Unbounded only: feasible direction with objective·ray > 0
};

namespace detail {

// Dense tableau over nonnegative columns. Row i reads
// x_basis[i] + sum_j t[i][j] x_j = t[i][ncols]; z holds reduced costs with
// z[ncols] = -objective value.
struct Tableau {
    std::size_t ncols = 0;
    std::vector<QVec> t;
    std::vector<std::size_t> basis;
    QVec z;

    void pivot(std::size_t r, std::size_t c)
    {
        Rat inv = 1 / t[r][c];
        for (auto& v : t[r])
            if (sgn(v) != 0)
                v *= inv;
        auto eliminate = [&](QVec& row) {
            if (sgn(row[c]) == 0)
                return;
            Rat f = row[c];
            for (std::size_t j = 0; j <= ncols; ++j)
                if (sgn(t[r][j]) != 0)
                    row[j] -= f * t[r][j];
        };
        for (std::size_t i = 0; i < t.size(); ++i)
            if (i != r)
                eliminate(t[i]);
        eliminate(z);
        basis[r] = c;
    }

    void price(const QVec& cost)
    {
        z.assign(ncols + 1, Rat(0));
        for (std::size_t j = 0; j < ncols; ++j)
            z[j] = cost[j];
        for (std::size_t i = 0; i < t.size(); ++i) {
            const Rat& cb = cost[basis[i]];
            if (sgn(cb) == 0)
                continue;
            for (std::size_t j = 0; j <= ncols; ++j)
                z[j] -= cb * t[i][j];
        }
    }

    // Bland's rule: lowest-index improving column enters; ratio ties leave by
    // lowest basic variable index. Returns the unbounded column, if any.
    std::optional<std::size_t> run(const std::vector<bool>& allowed)
    {
        while (true) {
            std::optional<std::size_t> enter;
            for (std::size_t j = 0; j < ncols; ++j)
                if (allowed[j] && sgn(z[j]) > 0) {
                    enter = j;
                    break;
                }
            if (!enter)
                return std::nullopt;
            std::optional<std::size_t> leave;
            Rat best;
            for (std::size_t i = 0; i < t.size(); ++i) {
                if (sgn(t[i][*enter]) <= 0)
                    continue;
                Rat ratio = t[i][ncols] / t[i][*enter];
                if (!leave || ratio < best || (ratio == best && basis[i] < basis[*leave])) {
                    leave = i;
                    best = ratio;
                }
            }
            if (!leave)
                return enter;
            pivot(*leave, *enter);
        }
    }
};

} // namespace detail

/// Maximizes objective·x over the weak system (strict rows are rejected).
/// Free variables are split x = u - v; phase one uses one artificial per row.
inline LpOutcome lp_solve(const QVec& objective, const LinearSystem& sys)
{
    sys.check();
    if (objective.size() != sys.dim)
        throw Error(ErrorCode::DimensionMismatch, "objective length differs from system dimension");
    if (!sys.lt.empty())
        throw Error(ErrorCode::UnsupportedStrict, "lp_solve takes weak systems only; use strict_feasible");

    const std::size_t n = sys.dim;
    const std::size_t mle = sys.le.size();
    const std::size_t m = mle + sys.eq.size();
    const std::size_t slack0 = 2 * n;
    const std::size_t art0 = slack0 + mle;
    const std::size_t ncols = art0 + m;

    detail::Tableau tab;
    tab.ncols = ncols;
    tab.t.assign(m, zeros(ncols + 1));
    tab.basis.resize(m);
    for (std::size_t i = 0; i < m; ++i) {
        const Constraint& c = i < mle ? sys.le[i] : sys.eq[i - mle];
        QVec& row = tab.t[i];
        for (std::size_t k = 0; k < n; ++k) {
            row[k] = c.a[k];
            row[n + k] = -c.a[k];
        }
        if (i < mle)
            row[slack0 + i] = 1;
        row[ncols] = c.b;
        if (sgn(c.b) < 0)
            for (auto& v : row)
                v = -v;
        row[art0 + i] = 1;
        tab.basis[i] = art0 + i;
    }

    QVec phase1(ncols, Rat(0));
    for (std::size_t i = 0; i < m; ++i)
        phase1[art0 + i] = -1;
    tab.price(phase1);
    std::vector<bool> allowed(ncols, true);
    tab.run(allowed);
    if (sgn(tab.z[ncols]) != 0) // optimum of -sum(artificials) is -(-z) < 0
        return LpOutcome{LpStatus::Infeasible, 0, {}, {}};

    // Drive artificials out of the basis; rows with no other support are redundant.
    for (std::size_t i = 0; i < tab.t.size();) {
        if (tab.basis[i] < art0) {
            ++i;
            continue;
        }
        std::optional<std::size_t> col;
        for (std::size_t j = 0; j < art0; ++j)
            if (sgn(tab.t[i][j]) != 0) {
                col = j;
                break;
            }
        if (col) {
            tab.pivot(i, *col);
            ++i;
        } else {
            tab.t.erase(tab.t.begin() + static_cast<std::ptrdiff_t>(i));
            tab.basis.erase(tab.basis.begin() + static_cast<std::ptrdiff_t>(i));
        }
    }

    QVec phase2(ncols, Rat(0));
    for (std::size_t k = 0; k < n; ++k) {
        phase2[k] = objective[k];
        phase2[n + k] = -objective[k];
    }
    tab.price(phase2);
    for (std::size_t j = art0; j < ncols; ++j)
        allowed[j] = false;
    auto unbounded = tab.run(allowed);

    if (unbounded) {
        QVec dir(ncols, Rat(0));
        dir[*unbounded] = 1;
        for (std::size_t i = 0; i < tab.t.size(); ++i)
            dir[tab.basis[i]] = -tab.t[i][*unbounded];
        QVec ray(n);
        for (std::size_t k = 0; k < n; ++k)
            ray[k] = dir[k] - dir[n + k];
        return LpOutcome{LpStatus::Unbounded, 0, {}, std::move(ray)};
    }

    QVec vals(ncols, Rat(0));
    for (std::size_t i = 0; i < tab.t.size(); ++i)
        vals[tab.basis[i]] = tab.t[i][ncols];
    QVec x(n);
    for (std::size_t k = 0; k < n; ++k)
        x[k] = vals[k] - vals[n + k];
    Rat value = dot(objective, x);
    return LpOutcome{LpStatus::Optimal, std::move(value), std::move(x), {}};
}

/// A point meeting weak rows weakly and strict rows strictly, or nullopt.
/// Each strict row a·x < b becomes a·x + eps ≤ b with eps ≤ 1, and eps is
/// maximized; the system is strictly feasible iff the optimum is positive.
inline std::optional<QVec> strict_feasible(const LinearSystem& sys)
{
    sys.check();
    if (sys.lt.empty()) {
        auto out = lp_solve(zeros(sys.dim), sys);
        if (out.status == LpStatus::Infeasible)
            return std::nullopt;
        return out.point;
    }
    const std::size_t n = sys.dim;
    LinearSystem aug;
    aug.dim = n + 1;
    auto lift = [n](const QVec& a, const Rat& eps_coef) {
        QVec r(a);
        r.resize(n + 1);
        r[n] = eps_coef;
        return r;
    };
    for (const auto& c : sys.le)
        aug.le.push_back({lift(c.a, 0), c.b});
    for (const auto& c : sys.lt)
        aug.le.push_back({lift(c.a, 1), c.b});
    aug.le.push_back({unit(n + 1, n), 1});
    for (const auto& c : sys.eq)
        aug.eq.push_back({lift(c.a, 0), c.b});
    auto out = lp_solve(unit(n + 1, n), aug);
    if (out.status != LpStatus::Optimal || sgn(out.value) <= 0)
        return std::nullopt;
    out.point.resize(n);
    return out.point;
}

/// Weak relaxation: every strict row becomes weak.
inline LinearSystem relax(const LinearSystem& sys)
{
    LinearSystem out = sys;
    out.le.insert(out.le.end(), out.lt.begin(), out.lt.end());
    out.lt.clear();
    return out;
}

/// Basis of the lineality space {d : G·d ≤ 0, H·d = 0}, i.e. of
/// {d : G·d = 0, H·d = 0}. Empty when the lineality space is {0}.
inline std::vector<QVec> lineality_space(const std::vector<QVec>& g, const std::vector<QVec>& h, std::size_t dim)
{
    std::vector<QVec> rows = g;
    rows.insert(rows.end(), h.begin(), h.end());
    for (const auto& r : rows)
        if (r.size() != dim)
            throw Error(ErrorCode::DimensionMismatch, "cone row length differs from dimension");
    return nullspace(rows, dim);
}

// ---------------------------------------------------------------------------
// Fourier–Motzkin
// ---------------------------------------------------------------------------

namespace detail {

inline Constraint scaled_row(const Constraint& c)
{
    QVec ab(c.a);
    ab.push_back(c.b);
    ab = primitive(ab);
    Rat b = ab.back();
    ab.pop_back();
    return {std::move(ab), std::move(b)};
}

inline void dedupe(std::vector<Constraint>& rows)
{
    std::set<std::vector<std::string>> seen;
    std::vector<Constraint> out;
    for (auto& c : rows) {
        auto s = scaled_row(c);
        std::vector<std::string> key;
        for (const auto& v : s.a)
            key.push_back(to_string(v));
        key.push_back(to_string(s.b));
        if (seen.insert(key).second)
            out.push_back(std::move(s));
    }
    rows = std::move(out);
}

} // namespace detail

/// Eliminates variable `var` from the mixed system, returning the projection
/// onto the remaining coordinates (in order). Strictness propagates: a
/// combination is strict if either parent row is.
inline LinearSystem fm_eliminate(const LinearSystem& sys, std::size_t var)
{
    sys.check();
    if (var >= sys.dim)
        throw Error(ErrorCode::DimensionMismatch, "eliminated variable out of range");
    auto drop = [var](const QVec& a) {
        QVec r;
        for (std::size_t k = 0; k < a.size(); ++k)
            if (k != var)
                r.push_back(a[k]);
        return r;
    };

    LinearSystem out;
    out.dim = sys.dim - 1;

    // An equation touching var lets us substitute it away exactly.
    auto sub = std::find_if(sys.eq.begin(), sys.eq.end(), [var](const Constraint& c) { return sgn(c.a[var]) != 0; });
    if (sub != sys.eq.end()) {
        const Constraint& e = *sub;
        auto substitute = [&](const Constraint& c) {
            Rat f = c.a[var] / e.a[var];
            Constraint r{drop(c.a - f * e.a), c.b - f * e.b};
            return r;
        };
        for (const auto& c : sys.le)
            out.le.push_back(substitute(c));
        for (const auto& c : sys.lt)
            out.lt.push_back(substitute(c));
        for (auto it = sys.eq.begin(); it != sys.eq.end(); ++it)
            if (it != sub)
                out.eq.push_back(substitute(*it));
    } else {
        struct Row {
            Constraint c;
            bool strict;
        };
        std::vector<Row> pos, neg;
        auto route = [&](const Constraint& c, bool strict) {
            int s = sgn(c.a[var]);
            if (s == 0)
                (strict ? out.lt : out.le).push_back({drop(c.a), c.b});
            else
                (s > 0 ? pos : neg).push_back({c, strict});
        };
        for (const auto& c : sys.le)
            route(c, false);
        for (const auto& c : sys.lt)
            route(c, true);
        for (const auto& c : sys.eq)
            out.eq.push_back({drop(c.a), c.b});
        for (const auto& p : pos)
            for (const auto& q : neg) {
                Rat fp = -q.c.a[var];
                Rat fq = p.c.a[var];
                Constraint r{drop(fp * p.c.a + fq * q.c.a), fp * p.c.b + fq * q.c.b};
                (p.strict || q.strict ? out.lt : out.le).push_back(std::move(r));
            }
    }

    // Constant rows are decided now; a violated one collapses the system.
    bool infeasible = false;
    auto prune = [&](std::vector<Constraint>& rows, auto violated) {
        std::vector<Constraint> kept;
        for (auto& c : rows) {
            if (is_zero(c.a)) {
                if (violated(c.b))
                    infeasible = true;
                continue;
            }
            kept.push_back(std::move(c));
        }
        rows = std::move(kept);
    };
    prune(out.le, [](const Rat& b) { return sgn(b) < 0; });
    prune(out.lt, [](const Rat& b) { return sgn(b) <= 0; });
    prune(out.eq, [](const Rat& b) { return sgn(b) != 0; });
    if (infeasible) {
        LinearSystem bad;
        bad.dim = out.dim;
        bad.le.push_back({zeros(out.dim), -1});
        return bad;
    }
    detail::dedupe(out.le);
    detail::dedupe(out.lt);
    detail::dedupe(out.eq);
    return out;
}

/// Feasibility decided purely by Fourier–Motzkin elimination, independent of
/// the simplex path. Exponential; intended for dimension ≤ 4.
inline bool fm_feasible(LinearSystem sys)
{
    while (sys.dim > 0)
        sys = fm_eliminate(sys, sys.dim - 1);
    for (const auto& c : sys.le)
        if (sgn(c.b) < 0)
            return false;
    for (const auto& c : sys.lt)
        if (sgn(c.b) <= 0)
            return false;
    for (const auto& c : sys.eq)
        if (sgn(c.b) != 0)
            return false;
    return true;
}

} // namespace facial

#endif // FACIAL_EXACTLA_HPP
