#ifndef FACIAL_SEQGALLERY_HPP
#define FACIAL_SEQGALLERY_HPP

// Finite models of three sets living in spaces of eventually-zero sequences
// (the box in c00, the Hilbert cube, and a ubiquitous set) plus the
// nonnegative orthant cone. Claims that need topology or uncountability are
// replaced by algebraic witnesses that re-verify exactly.

#include <algorithm>
#include <map>
#include <optional>
#include <set>
#include <sstream>
#include <string>
#include <utility>
#include <vector>

#include <facial/json_io.hpp>

namespace facial {

/// Finitely supported sequence x_1, x_2, ... with rational entries.
class FinSeq {
public:
    using Entry = std::pair<long, Rat>;

    FinSeq() = default;

    /// Entries may come in any order; zeros are dropped. Indices start at 1.
    explicit FinSeq(std::vector<Entry> entries)
    {
        std::sort(entries.begin(), entries.end(),
                  [](const Entry& a, const Entry& b) { return a.first < b.first; });
        for (std::size_t k = 0; k < entries.size(); ++k) {
            if (entries[k].first < 1)
                throw Error(ErrorCode::Format, "sequence indices start at 1, got " + std::to_string(entries[k].first));
            if (k > 0 && entries[k].first == entries[k - 1].first)
                throw Error(ErrorCode::Format, "index " + std::to_string(entries[k].first) + " listed twice");
            if (sgn(entries[k].second) != 0)
                support_.push_back(std::move(entries[k]));
        }
    }

    static FinSeq unit(long i) { return FinSeq({{i, Rat(1)}}); }

    const std::vector<Entry>& support() const { return support_; }
    bool is_zero() const { return support_.empty(); }

    Rat at(long i) const
    {
        for (const auto& [k, v] : support_)
            if (k == i)
                return v;
        return 0;
    }

    /// Largest index with a nonzero entry; nullopt for the zero sequence.
    std::optional<long> maxindex() const
    {
        if (support_.empty())
            return std::nullopt;
        return support_.back().first;
    }

    /// maxindex + 1, or 1 for the zero sequence.
    long fresh_index() const { return support_.empty() ? 1 : support_.back().first + 1; }

    std::set<long> indices() const
    {
        std::set<long> out;
        for (const auto& e : support_)
            out.insert(e.first);
        return out;
    }

    friend FinSeq operator+(const FinSeq& a, const FinSeq& b)
    {
        std::map<long, Rat> m;
        for (const auto& [k, v] : a.support_)
            m[k] += v;
        for (const auto& [k, v] : b.support_)
            m[k] += v;
        return FinSeq(std::vector<Entry>(m.begin(), m.end()));
    }
    friend FinSeq operator*(const Rat& t, const FinSeq& a)
    {
        std::vector<Entry> out;
        for (const auto& [k, v] : a.support_)
            out.emplace_back(k, t * v);
        return FinSeq(std::move(out));
    }
    friend FinSeq operator-(const FinSeq& a, const FinSeq& b) { return a + Rat(-1) * b; }
    friend bool operator==(const FinSeq&, const FinSeq&) = default;

private:
    std::vector<Entry> support_;
};

/// "i:v,j:w" with rational values; the empty string is the zero sequence.
inline FinSeq parse_finseq(const std::string& text)
{
    std::vector<FinSeq::Entry> entries;
    std::stringstream in(text);
    std::string item;
    while (std::getline(in, item, ',')) {
        auto colon = item.find(':');
        if (colon == std::string::npos)
            throw Error(ErrorCode::Format, "sequence entry '" + item + "' must look like index:value");
        long idx = 0;
        try {
            std::size_t used = 0;
            idx = std::stol(item.substr(0, colon), &used);
            if (used != colon)
                throw std::invalid_argument("trailing");
        } catch (const std::exception&) {
            throw Error(ErrorCode::Format, "bad sequence index in '" + item + "'");
        }
        entries.emplace_back(idx, parse_rat(item.substr(colon + 1)));
    }
    return FinSeq(std::move(entries));
}

inline std::string to_string(const FinSeq& x)
{
    std::string out;
    for (const auto& [k, v] : x.support()) {
        if (!out.empty())
            out += ",";
        out += std::to_string(k) + ":" + to_string(v);
    }
    return out;
}

inline json finseq_to_json(const FinSeq& x)
{
    json sup = json::array();
    for (const auto& [k, v] : x.support())
        sup.push_back({k, rat_to_json(v)});
    return {{"support", sup}};
}

inline FinSeq finseq_from_json(const json& j)
{
    const json& sup = detail::require(j, "support");
    if (!sup.is_array())
        throw Error(ErrorCode::Format, "field 'support' must be an array of [index, value] pairs");
    std::vector<FinSeq::Entry> entries;
    for (const auto& e : sup) {
        if (!e.is_array() || e.size() != 2 || !e[0].is_number_integer())
            throw Error(ErrorCode::Format, "field 'support' entries must be [index, \"p/q\"]");
        entries.emplace_back(e[0].get<long>(), rat_from_json(e[1], "support"));
    }
    return FinSeq(std::move(entries));
}

// ---------------------------------------------------------------------------
// Box {x ∈ c00 : 0 ≤ x_i ≤ 1}
// ---------------------------------------------------------------------------

inline bool box_contains(const FinSeq& x)
{
    for (const auto& e : x.support())
        if (sgn(e.second) < 0 || e.second > 1)
            return false;
    return true;
}

/// Face {u : u_i = 1 on `ones`, 0 ≤ u_i ≤ 1 on `free`, u_i = 0 elsewhere}.
struct BoxFaceDescriptor {
    std::set<long> ones;
    std::set<long> free;
    bool operator==(const BoxFaceDescriptor&) const = default;

    bool contains(const FinSeq& u) const
    {
        if (!box_contains(u))
            return false;
        for (long i : ones)
            if (u.at(i) != 1)
                return false;
        for (const auto& [k, v] : u.support())
            if (!ones.count(k) && !free.count(k))
                return false;
        return true;
    }
};

inline BoxFaceDescriptor box_minimal_face(const FinSeq& x)
{
    if (!box_contains(x))
        throw Error(ErrorCode::NotMember, "sequence " + to_string(x) + " is not in the box");
    BoxFaceDescriptor f;
    for (const auto& [k, v] : x.support())
        (v == 1 ? f.ones : f.free).insert(k);
    return f;
}

// ---------------------------------------------------------------------------
// Hilbert cube {x : 0 ≤ x_n ≤ 1/n}
// ---------------------------------------------------------------------------

/// F_c: coordinates in `full` range over [0, 1/n], all others are 0.
struct CubeFaceDescriptor {
    std::set<long> full;
    bool operator==(const CubeFaceDescriptor&) const = default;
};

inline bool cube_face_subset(const CubeFaceDescriptor& c1, const CubeFaceDescriptor& c2)
{
    return std::includes(c2.full.begin(), c2.full.end(), c1.full.begin(), c1.full.end());
}

/// The first n positive rationals in Calkin–Wilf order:
/// q_1 = 1, q_{k+1} = 1 / (2 floor(q_k) - q_k + 1).
inline std::vector<Rat> calkin_wilf(std::size_t n)
{
    std::vector<Rat> out;
    Rat q = 1;
    for (std::size_t k = 0; k < n; ++k) {
        out.push_back(q);
        mpz_class fl;
        mpz_fdiv_q(fl.get_mpz_t(), q.get_num_mpz_t(), q.get_den_mpz_t());
        q = Rat(1) / (2 * Rat(fl) - q + 1);
    }
    return out;
}

struct CubeChain {
    std::vector<CubeFaceDescriptor> faces;
    std::vector<std::size_t> coincident; // k where faces[k] == faces[k+1]
};

/// Faces F_{c(t)} with c(t) = {k ≤ N : q_k < t} for each threshold t.
inline CubeChain cube_chain_from_cuts(const std::vector<Rat>& thresholds, std::size_t n)
{
    if (n == 0)
        throw Error(ErrorCode::EmptyInput, "enumeration prefix length must be at least 1");
    for (std::size_t k = 1; k < thresholds.size(); ++k)
        if (!(thresholds[k - 1] < thresholds[k]))
            throw Error(ErrorCode::Format, "thresholds must be strictly increasing");
    auto qs = calkin_wilf(n);
    CubeChain chain;
    for (const auto& t : thresholds) {
        CubeFaceDescriptor f;
        for (std::size_t k = 0; k < n; ++k)
            if (qs[k] < t)
                f.full.insert(static_cast<long>(k) + 1);
        chain.faces.push_back(std::move(f));
    }
    for (std::size_t k = 0; k + 1 < chain.faces.size(); ++k)
        if (chain.faces[k] == chain.faces[k + 1])
            chain.coincident.push_back(k);
    return chain;
}

// ---------------------------------------------------------------------------
// Ubiquitous set {x ≠ 0 : x_maxindex > 0} and the orthant cone
// ---------------------------------------------------------------------------

inline bool ubiq_contains(const FinSeq& x)
{
    return !x.is_zero() && sgn(x.support().back().second) > 0;
}

/// u ∈ F_min(x): u ∈ C and its leading index does not exceed x's.
inline bool ubiq_minface_contains(const FinSeq& x, const FinSeq& u)
{
    if (!ubiq_contains(x))
        throw Error(ErrorCode::NotMember, "sequence " + to_string(x) + " is not in the set");
    return ubiq_contains(u) && *u.maxindex() <= *x.maxindex();
}

inline bool orthant_contains(const FinSeq& x)
{
    for (const auto& e : x.support())
        if (sgn(e.second) < 0)
            return false;
    return true;
}

/// Cone over the basis vectors in the support.
inline std::set<long> orthant_minimal_face(const FinSeq& x)
{
    if (!orthant_contains(x))
        throw Error(ErrorCode::NotMember, "sequence " + to_string(x) + " is not in the orthant");
    return x.indices();
}

// ---------------------------------------------------------------------------
// Witnesses
// ---------------------------------------------------------------------------

enum class GallerySet { Box, Ubiquitous, Orthant };

/// A certificate with its own checking procedure.
///  - EmptyIcr: y in the set and index i such that, for x = t·y + (1-t)·z,
///    z_i = -t/(1-t) < 0, so the segment from y through x cannot be extended
///    and x is not in the intrinsic core.
///  - LinMember: y + t·u lies in the set for every t in (0, 1], so y is in
///    the linear closure.
///  - ChainGap: e_index lies in the orthant but in no face of the chain.
struct Witness {
    enum class Kind { EmptyIcr, LinMember, ChainGap };
    Kind kind = Kind::EmptyIcr;
    GallerySet set = GallerySet::Box;
    FinSeq x;                           // EmptyIcr: the point; LinMember: y
    FinSeq y;                           // EmptyIcr: the far endpoint
    FinSeq u;                           // LinMember: the direction
    long index = 0;                     // EmptyIcr: certified coordinate; ChainGap: fresh index
    std::vector<std::set<long>> chain;  // ChainGap

    bool verify() const
    {
        auto member = [&](const FinSeq& s) { return set == GallerySet::Box ? box_contains(s) : ubiq_contains(s); };
        switch (kind) {
        case Kind::EmptyIcr:
            if (!member(x) || !member(y))
                return false;
            for (const Rat& t : {Rat(1, 2), Rat(1, 3)}) {
                FinSeq z = Rat(1) / (1 - t) * (x - t * y);
                if (z.at(index) != -t / (1 - t) || sgn(z.at(index)) >= 0 || member(z))
                    return false;
            }
            return true;
        case Kind::LinMember:
            for (const Rat& t : {Rat(1), Rat(1, 2), Rat(1, 7)}) {
                FinSeq p = x + t * u;
                if (!member(p) || p.support().back() != FinSeq::Entry{index, t})
                    return false;
            }
            return true;
        case Kind::ChainGap: {
            if (!orthant_contains(FinSeq::unit(index)))
                return false;
            for (const auto& c : chain)
                if (c.count(index))
                    return false;
            return true;
        }
        }
        return false;
    }
};

inline json witness_to_json(const Witness& w)
{
    static const char* sets[] = {"box", "ubiquitous", "orthant"};
    json out{{"set", sets[static_cast<int>(w.set)]}};
    switch (w.kind) {
    case Witness::Kind::EmptyIcr:
        out["kind"] = "empty-icr";
        out["x"] = finseq_to_json(w.x);
        out["y"] = finseq_to_json(w.y);
        out["cert_index"] = w.index;
        out["z_at_half"] = rat_to_json(Rat(-1));
        break;
    case Witness::Kind::LinMember:
        out["kind"] = "lin-member";
        out["y"] = finseq_to_json(w.x);
        out["u"] = finseq_to_json(w.u);
        out["leading_index"] = w.index;
        break;
    case Witness::Kind::ChainGap: {
        out["kind"] = "chain-gap";
        json chain = json::array();
        for (const auto& c : w.chain)
            chain.push_back(c);
        out["chain"] = std::move(chain);
        out["gap_index"] = w.index;
        out["point"] = finseq_to_json(FinSeq::unit(w.index));
        break;
    }
    }
    out["verified"] = w.verify();
    return out;
}

namespace detail {

inline Witness empty_icr_witness(GallerySet set, const FinSeq& x, FinSeq y, long i)
{
    Witness w;
    w.kind = Witness::Kind::EmptyIcr;
    w.set = set;
    w.x = x;
    w.y = std::move(y);
    w.index = i;
    return w;
}

} // namespace detail

/// y agrees with x except for a 1 at the first index past x's support.
inline Witness box_empty_icr_witness(const FinSeq& x)
{
    if (!box_contains(x))
        throw Error(ErrorCode::NotMember, "sequence " + to_string(x) + " is not in the box");
    long i = x.fresh_index();
    return detail::empty_icr_witness(GallerySet::Box, x, x + FinSeq::unit(i), i);
}

/// Any y is the limit of y + t·e_j with j past y's support: the leading
/// coordinate of y + t·e_j is t > 0.
inline Witness ubiq_lin_witness(const FinSeq& y)
{
    Witness w;
    w.kind = Witness::Kind::LinMember;
    w.set = GallerySet::Ubiquitous;
    w.x = y;
    w.index = y.fresh_index();
    w.u = FinSeq::unit(w.index);
    return w;
}

inline Witness ubiq_not_icr_witness(const FinSeq& x)
{
    if (!ubiq_contains(x))
        throw Error(ErrorCode::NotMember, "sequence " + to_string(x) + " is not in the set");
    long i = x.fresh_index();
    return detail::empty_icr_witness(GallerySet::Ubiquitous, x, x + FinSeq::unit(i), i);
}

/// Smallest basis index outside every set of a nested chain of minimal faces.
inline Witness orthant_chain_gap(std::vector<std::set<long>> chain)
{
    auto sorted = chain;
    std::stable_sort(sorted.begin(), sorted.end(), [](const auto& a, const auto& b) { return a.size() < b.size(); });
    for (std::size_t k = 1; k < sorted.size(); ++k)
        if (!std::includes(sorted[k].begin(), sorted[k].end(), sorted[k - 1].begin(), sorted[k - 1].end()))
            throw Error(ErrorCode::ChainNotNested, "chain sets are not totally ordered by inclusion");
    std::set<long> all;
    for (const auto& c : chain)
        all.insert(c.begin(), c.end());
    long gap = 1;
    while (all.count(gap))
        ++gap;
    Witness w;
    w.kind = Witness::Kind::ChainGap;
    w.set = GallerySet::Orthant;
    w.index = gap;
    w.chain = std::move(chain);
    return w;
}

} // namespace facial

#endif // FACIAL_SEQGALLERY_HPP
