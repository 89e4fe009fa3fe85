#ifndef FACIAL_SAMPLING_HPP
#define FACIAL_SAMPLING_HPP

#include <algorithm>
#include <cstdint>
#include <set>
#include <vector>

#include <facial/polyset.hpp>

namespace facial {

/// 64-bit linear congruential generator (Knuth's MMIX constants):
///   state <- state * 6364136223846793005 + 1442695040888963407  (mod 2^64)
/// Outputs are the high 32 bits of the new state. Seeds map to states by
/// state = seed ^ 0x9E3779B97F4A7C15, so seed 0 is usable.
class Lcg {
public:
    explicit Lcg(std::uint64_t seed = 0) : state_(seed ^ 0x9E3779B97F4A7C15ULL) {}

    std::uint32_t next()
    {
        state_ = state_ * 6364136223846793005ULL + 1442695040888963407ULL;
        return static_cast<std::uint32_t>(state_ >> 32);
    }

    /// Uniform in [lo, hi] (inclusive); modulo bias is irrelevant here.
    long uniform(long lo, long hi) { return lo + static_cast<long>(next() % static_cast<std::uint32_t>(hi - lo + 1)); }

    /// p/q with p in [lo*q, hi*q], q in [1, max_den].
    Rat rational(long lo, long hi, long max_den)
    {
        long q = uniform(1, max_den);
        return frac(uniform(lo * q, hi * q), q);
    }

private:
    std::uint64_t state_;
};

struct SamplerConfig {
    std::size_t count = 200;
    std::uint64_t seed = 0;
};

namespace detail {

inline QVec weighted_point(const VSet& v, Lcg& rng, long min_weight)
{
    std::vector<long> w(v.points.size());
    long total = 0;
    for (auto& x : w) {
        x = rng.uniform(min_weight, 6);
        total += x;
    }
    if (total == 0) {
        w[rng.uniform(0, static_cast<long>(w.size()) - 1)] = 1;
        total = 1;
    }
    QVec x = zeros(v.dim);
    for (std::size_t i = 0; i < w.size(); ++i)
        if (w[i])
            x = x + frac(w[i], total) * v.points[i];
    for (const auto& r : v.rays)
        x = x + frac(rng.uniform(min_weight, 6), 6) * r;
    return x;
}

} // namespace detail

/// Points of the relative interior: all-positive combinations of the
/// closure's generators.
inline std::vector<QVec> sample_relative_interior(const ConvexSet& c, Lcg& rng, std::size_t count)
{
    VSet v = closure_generators(c);
    std::vector<QVec> out;
    for (std::size_t i = 0; i < count; ++i)
        out.push_back(detail::weighted_point(v, rng, 1));
    return out;
}

/// Members of the set, boundary included: generators, edge midpoints, and
/// random combinations with some zero weights.
inline std::vector<QVec> sample_points(const ConvexSet& c, Lcg& rng, std::size_t count)
{
    VSet v = closure_generators(c);
    std::vector<QVec> out;
    auto keep = [&](QVec x) {
        if (out.size() < count && contains(c, x))
            out.push_back(std::move(x));
    };
    for (const auto& p : v.points)
        keep(p);
    for (std::size_t i = 0; i < v.points.size(); ++i)
        for (std::size_t j = i + 1; j < v.points.size(); ++j)
            keep(Rat(1, 2) * (v.points[i] + v.points[j]));
    for (std::size_t attempts = 0; out.size() < count && attempts < 20 * count; ++attempts)
        keep(detail::weighted_point(v, rng, 0));
    return out;
}

/// Every point of (1/denominator)·Z^n inside the set, within the bounding box
/// of the closure's points (extended along rays by one unit).
inline std::vector<QVec> grid_points(const ConvexSet& c, long denominator = 6)
{
    VSet v = closure_generators(c);
    const std::size_t n = v.dim;
    std::vector<QVec> corners = v.points;
    for (const auto& p : v.points)
        for (const auto& r : v.rays)
            corners.push_back(p + r);
    QVec lo = corners.front(), hi = corners.front();
    for (const auto& p : corners)
        for (std::size_t k = 0; k < n; ++k) {
            lo[k] = std::min(lo[k], p[k]);
            hi[k] = std::max(hi[k], p[k]);
        }
    std::vector<mpz_class> lo_i(n), hi_i(n);
    for (std::size_t k = 0; k < n; ++k) {
        Rat l = lo[k] * denominator, h = hi[k] * denominator;
        mpz_fdiv_q(lo_i[k].get_mpz_t(), l.get_num_mpz_t(), l.get_den_mpz_t());
        mpz_cdiv_q(hi_i[k].get_mpz_t(), h.get_num_mpz_t(), h.get_den_mpz_t());
    }
    std::vector<QVec> out;
    std::vector<mpz_class> cur = lo_i;
    while (true) {
        QVec x(n);
        for (std::size_t k = 0; k < n; ++k)
            x[k] = frac(cur[k], denominator);
        if (contains(c, x))
            out.push_back(std::move(x));
        std::size_t k = 0;
        while (k < n && cur[k] == hi_i[k]) {
            cur[k] = lo_i[k];
            ++k;
        }
        if (k == n)
            break;
        ++cur[k];
    }
    return out;
}

} // namespace facial

#endif // FACIAL_SAMPLING_HPP
