#ifndef FACIAL_JSON_IO_HPP
#define FACIAL_JSON_IO_HPP

#include <string>

#include <json.hpp>

#include <facial/polyset.hpp>

namespace facial {

using json = nlohmann::json;

inline Rat rat_from_json(const json& j, const std::string& field)
{
    if (j.is_string())
        return parse_rat(j.get<std::string>());
    if (j.is_number_integer())
        return Rat(j.get<long>());
    throw Error(ErrorCode::Format, "field '" + field + "' must be a rational string like \"p/q\"");
}

inline json rat_to_json(const Rat& r)
{
    return to_string(r);
}

inline QVec vec_from_json(const json& j, const std::string& field)
{
    if (!j.is_array())
        throw Error(ErrorCode::Format, "field '" + field + "' must be an array of rationals");
    QVec out;
    for (const auto& e : j)
        out.push_back(rat_from_json(e, field));
    return out;
}

inline json vec_to_json(const QVec& v)
{
    json out = json::array();
    for (const auto& r : v)
        out.push_back(rat_to_json(r));
    return out;
}

namespace detail {

inline const json& require(const json& j, const char* key)
{
    if (!j.is_object() || !j.contains(key))
        throw Error(ErrorCode::Format, std::string("missing field '") + key + "'");
    return j.at(key);
}

inline std::size_t dim_from_json(const json& j)
{
    const json& d = require(j, "dim");
    if (!d.is_number_integer() || d.get<long>() < 1)
        throw Error(ErrorCode::Format, "field 'dim' must be a positive integer");
    return d.get<std::size_t>();
}

inline QVec sized_vec(const json& j, const char* field, std::size_t dim)
{
    QVec v = vec_from_json(j, field);
    if (v.size() != dim)
        throw Error(ErrorCode::Format, std::string("field '") + field + "' has length " + std::to_string(v.size()) +
                                           ", expected " + std::to_string(dim));
    return v;
}

} // namespace detail

/// Weak rows keep their relative order; face descriptors index them.
inline ConvexSet set_from_json(const json& j)
{
    const std::string type = detail::require(j, "type").is_string() ? j.at("type").get<std::string>() : "";
    const std::size_t dim = detail::dim_from_json(j);
    if (type == "hset") {
        LinearSystem s;
        s.dim = dim;
        if (j.contains("ineqs"))
            for (const auto& row : j.at("ineqs")) {
                Constraint c{detail::sized_vec(detail::require(row, "a"), "a", dim),
                             rat_from_json(detail::require(row, "b"), "b")};
                bool strict = row.contains("strict") && row.at("strict").get<bool>();
                (strict ? s.lt : s.le).push_back(std::move(c));
            }
        if (j.contains("eqs"))
            for (const auto& row : j.at("eqs"))
                s.eq.push_back({detail::sized_vec(detail::require(row, "e"), "e", dim),
                                rat_from_json(detail::require(row, "f"), "f")});
        return HSet(std::move(s));
    }
    if (type == "vset") {
        std::vector<QVec> pts, rays;
        for (const auto& p : detail::require(j, "points"))
            pts.push_back(detail::sized_vec(p, "points", dim));
        if (j.contains("rays"))
            for (const auto& r : j.at("rays"))
                rays.push_back(detail::sized_vec(r, "rays", dim));
        if (pts.empty())
            throw Error(ErrorCode::Format, "field 'points' must be nonempty");
        return VSet(dim, std::move(pts), std::move(rays));
    }
    throw Error(ErrorCode::Format, "field 'type' must be \"hset\" or \"vset\"");
}

inline json set_to_json(const ConvexSet& c)
{
    json out;
    if (c.is_h()) {
        const HSet& h = c.h();
        out["type"] = "hset";
        out["dim"] = h.dim;
        json ineqs = json::array();
        for (const auto& r : h.le)
            ineqs.push_back({{"a", vec_to_json(r.a)}, {"b", rat_to_json(r.b)}, {"strict", false}});
        for (const auto& r : h.lt)
            ineqs.push_back({{"a", vec_to_json(r.a)}, {"b", rat_to_json(r.b)}, {"strict", true}});
        json eqs = json::array();
        for (const auto& r : h.eq)
            eqs.push_back({{"e", vec_to_json(r.a)}, {"f", rat_to_json(r.b)}});
        out["ineqs"] = std::move(ineqs);
        out["eqs"] = std::move(eqs);
        return out;
    }
    const VSet& v = c.v();
    out["type"] = "vset";
    out["dim"] = v.dim;
    json pts = json::array(), rays = json::array();
    for (const auto& p : v.points)
        pts.push_back(vec_to_json(p));
    for (const auto& r : v.rays)
        rays.push_back(vec_to_json(r));
    out["points"] = std::move(pts);
    out["rays"] = std::move(rays);
    return out;
}

inline ConvexSet parse_set(const std::string& text)
{
    json j;
    try {
        j = json::parse(text);
    } catch (const json::exception& e) {
        throw Error(ErrorCode::Format, std::string("invalid JSON: ") + e.what());
    }
    try {
        return set_from_json(j);
    } catch (const json::exception& e) {
        throw Error(ErrorCode::Format, std::string("bad set description: ") + e.what());
    }
}

} // namespace facial

#endif // FACIAL_JSON_IO_HPP
