#ifndef FACIAL_TOOLS_FACIAL_CLI_HPP
#define FACIAL_TOOLS_FACIAL_CLI_HPP

// Command-line front end. `run` is side-effect free apart from --dot and
// reading --set files, so tests drive it in-process.
//
// Exit codes: 0 success or "true", 1 valid negative answer, 2 usage or
// input error, 3 the icr characterizations disagree.

#include <algorithm>
#include <fstream>
#include <iterator>
#include <sstream>
#include <string>
#include <vector>

#include <CLI11.hpp>

#include <facial/facial.hpp>

namespace facial::cli {

struct Result {
    int code = 0;
    std::string out;
    std::string err;
};

namespace detail {

inline std::string read_text(const std::string& path, const std::string& stdin_text)
{
    if (path == "-")
        return stdin_text;
    std::ifstream in(path);
    if (!in)
        throw Error(ErrorCode::Format, "cannot read '" + path + "'");
    return {std::istreambuf_iterator<char>(in), std::istreambuf_iterator<char>()};
}

inline ConvexSet load_set(const std::string& flag, const std::string& path, const std::string& stdin_text)
{
    try {
        return parse_set(read_text(path, stdin_text));
    } catch (const Error& e) {
        throw Error(e.code(), flag + ": " + e.detail());
    }
}

inline QVec point_arg(const std::string& text, std::size_t dim, const std::string& flag = "--point")
{
    QVec p;
    try {
        p = parse_point(text);
    } catch (const Error& e) {
        throw Error(ErrorCode::Format, flag + ": " + e.detail());
    }
    if (p.size() != dim)
        throw Error(ErrorCode::Format, flag + ": has " + std::to_string(p.size()) + " coordinates, set has dimension " +
                                           std::to_string(dim));
    return p;
}

// "1,0;0,1" row by row
inline LinearMap map_arg(const std::string& text)
{
    std::vector<QVec> rows;
    std::stringstream in(text);
    std::string row;
    try {
        while (std::getline(in, row, ';'))
            rows.push_back(parse_point(row));
    } catch (const Error& e) {
        throw Error(ErrorCode::Format, "--map: " + e.detail());
    }
    if (rows.empty())
        throw Error(ErrorCode::Format, "--map: no rows");
    for (const auto& r : rows)
        if (r.size() != rows.front().size())
            throw Error(ErrorCode::Format, "--map: rows differ in length");
    return {QMat::from_rows(std::move(rows))};
}

inline json index_list(const std::vector<std::size_t>& v)
{
    return json(v);
}

inline json face_json(const FaceDescriptor& f)
{
    switch (f.kind) {
    case FaceDescriptor::Kind::Empty:
        return {{"kind", "empty"}, {"dim", -1}};
    case FaceDescriptor::Kind::ActiveSet:
        return {{"kind", "active-set"}, {"dim", f.dim}, {"active", index_list(f.active)}};
    case FaceDescriptor::Kind::GeneratorSubset:
        return {{"kind", "generator-subset"},
                {"dim", f.dim},
                {"points", index_list(f.points)},
                {"rays", index_list(f.rays)}};
    }
    return {};
}

inline std::string row_text(const Constraint& r, const char* rel)
{
    std::string s = "[";
    for (std::size_t k = 0; k < r.a.size(); ++k)
        s += (k ? ", " : "") + to_string(r.a[k]);
    return s + "]·x " + rel + " " + to_string(r.b);
}

inline std::string set_text(const ConvexSet& c)
{
    std::string s;
    if (c.is_h()) {
        const HSet& h = c.h();
        for (const auto& r : h.le)
            s += row_text(r, "<=") + "\n";
        for (const auto& r : h.lt)
            s += row_text(r, "<") + "\n";
        for (const auto& r : h.eq)
            s += row_text(r, "=") + "\n";
        if (s.empty())
            s = "all of R^" + std::to_string(h.dim) + "\n";
        return s;
    }
    for (const auto& p : c.v().points)
        s += "point " + to_string(p) + "\n";
    for (const auto& r : c.v().rays)
        s += "ray " + to_string(r) + "\n";
    return s;
}

inline std::string cert_text(const SeparationCertificate& c)
{
    return "phi " + to_string(c.phi) + "\nalpha " + to_string(c.alpha) + "\nwitness " + to_string(c.witness_a) +
           " " + to_string(c.witness_b) + "\n";
}

inline int exit_code(ErrorCode c)
{
    switch (c) {
    case ErrorCode::MethodDisagreement:
        return 3;
    case ErrorCode::NotMember:
    case ErrorCode::EmptySet:
    case ErrorCode::IsInteriorPoint:
    case ErrorCode::OverlappingInteriors:
    case ErrorCode::NotProperlySeparable:
        return 1;
    default:
        return 2;
    }
}

inline std::set<long> index_set(const std::string& text)
{
    std::set<long> out;
    std::stringstream in(text);
    std::string item;
    while (std::getline(in, item, ','))
        try {
            out.insert(std::stol(item));
        } catch (const std::exception&) {
            throw Error(ErrorCode::Format, "--chain: bad index '" + item + "'");
        }
    return out;
}

inline FinSeq seq_arg(const std::string& flag, const std::string& text)
{
    try {
        return parse_finseq(text);
    } catch (const Error& e) {
        throw Error(e.code(), flag + ": " + e.detail());
    }
}

} // namespace detail

/// Runs one command. `args` excludes the program name.
inline Result run(const std::vector<std::string>& args, const std::string& stdin_text = "")
{
    CLI::App app{"Facial structure of convex sets in exact arithmetic", "facial"};
    app.require_subcommand(1);

    std::string set_path, other_path, point, method = "all", law, vec, scalar, map, dot_path, u_text, thresholds,
                                                   chain_text;
    bool as_json = false;
    std::uint64_t seed = 0;
    std::size_t samples = 200, prefix = 64;

    auto with_set = [&](CLI::App* s) { s->add_option("--set", set_path, "set description (JSON file, - for stdin)")->required(); };
    auto with_point = [&](CLI::App* s) { s->add_option("--point", point, "comma-separated rationals")->required(); };
    auto with_json = [&](CLI::App* s) { s->add_flag("--json", as_json, "machine-readable output"); };

    auto* minface = app.add_subcommand("minface", "minimal face of a point");
    auto* icr = app.add_subcommand("icr-test", "intrinsic-core membership");
    auto* ri = app.add_subcommand("ri", "intrinsic core as a strict system");
    auto* lattice = app.add_subcommand("lattice", "face lattice");
    auto* chains = app.add_subcommand("chains", "maximal chains of the face lattice");
    auto* decompose_cmd = app.add_subcommand("decompose", "faces whose intrinsic cores partition the set");
    auto* locate_cmd = app.add_subcommand("locate", "face whose intrinsic core holds a point");
    auto* separate = app.add_subcommand("separate", "proper separation certificate");
    auto* support = app.add_subcommand("support", "proper supporting hyperplane at a point");
    auto* check = app.add_subcommand("check", "check an intrinsic-core calculus law");
    auto* gallery = app.add_subcommand("gallery", "sequence-space examples");

    for (auto* s : {minface, icr, ri, lattice, chains, decompose_cmd, locate_cmd, separate, support, check}) {
        with_set(s);
        with_json(s);
    }
    for (auto* s : {minface, icr, locate_cmd, support})
        with_point(s);
    icr->add_option("--method", method, "segments | feasible-cone | affine-core | min-face | all");
    lattice->add_option("--dot", dot_path, "write the Hasse diagram as DOT");
    separate->add_option("--other", other_path, "second set")->required();
    check->add_option("--law", law, "sum | translate | scale | linear-image | product | positive-hull")->required();
    check->add_option("--other", other_path, "second operand for sum and product");
    check->add_option("--vector", vec, "translation vector");
    check->add_option("--scalar", scalar, "scale factor");
    check->add_option("--map", map, "matrix rows separated by ';'");
    check->add_option("--seed", seed, "sampler seed");
    check->add_option("--samples", samples, "sample count");
    check->add_option("--method", method, "icr method used by the checker");

    gallery->require_subcommand(1);
    auto* g_box_face = gallery->add_subcommand("box-minface", "minimal face in the c00 box");
    auto* g_box_icr = gallery->add_subcommand("box-empty-icr", "witness that the c00 box has empty icr");
    auto* g_ubiq = gallery->add_subcommand("ubiq-contains", "membership in the ubiquitous set");
    auto* g_ubiq_lin = gallery->add_subcommand("ubiq-lin", "witness that a sequence is in lin of the ubiquitous set");
    auto* g_ubiq_icr = gallery->add_subcommand("ubiq-not-icr", "witness that a member is not in icr");
    auto* g_ubiq_face = gallery->add_subcommand("ubiq-minface", "membership of --u in the minimal face of --point");
    auto* g_orth_face = gallery->add_subcommand("orthant-minface", "minimal face in the orthant cone");
    auto* g_orth_gap = gallery->add_subcommand("orthant-gap", "basis index missed by a chain of faces");
    auto* g_cube = gallery->add_subcommand("cube-chain", "Hilbert-cube faces from rational cuts");
    for (auto* s : {g_box_face, g_box_icr, g_ubiq, g_ubiq_lin, g_ubiq_icr, g_ubiq_face, g_orth_face})
        s->add_option("--point", point, "sequence as index:value pairs")->required();
    g_ubiq_face->add_option("--u", u_text, "candidate member")->required();
    g_orth_gap->add_option("--chain", chain_text, "index sets separated by ';'")->required();
    g_cube->add_option("--thresholds", thresholds, "increasing rationals")->required();
    g_cube->add_option("--n", prefix, "enumeration prefix length");

    Result res;
    try {
        std::vector<std::string> rev(args.rbegin(), args.rend());
        app.parse(rev);
    } catch (const CLI::CallForHelp&) {
        res.out = app.help();
        return res;
    } catch (const CLI::ParseError& e) {
        res.code = 2;
        res.err = std::string(e.what()) + "\n";
        return res;
    }

    std::ostringstream out;
    auto emit = [&](const json& j) { out << j.dump(2) << "\n"; };
    try {
        if (*gallery) {
            if (*g_box_face) {
                auto f = box_minimal_face(detail::seq_arg("--point", point));
                emit({{"ones", f.ones}, {"free", f.free}});
            } else if (*g_box_icr) {
                emit(witness_to_json(box_empty_icr_witness(detail::seq_arg("--point", point))));
            } else if (*g_ubiq) {
                bool in = ubiq_contains(detail::seq_arg("--point", point));
                out << (in ? "true" : "false") << "\n";
                res.code = in ? 0 : 1;
            } else if (*g_ubiq_lin) {
                emit(witness_to_json(ubiq_lin_witness(detail::seq_arg("--point", point))));
            } else if (*g_ubiq_icr) {
                emit(witness_to_json(ubiq_not_icr_witness(detail::seq_arg("--point", point))));
            } else if (*g_ubiq_face) {
                bool in = ubiq_minface_contains(detail::seq_arg("--point", point), detail::seq_arg("--u", u_text));
                out << (in ? "true" : "false") << "\n";
                res.code = in ? 0 : 1;
            } else if (*g_orth_face) {
                emit({{"face", orthant_minimal_face(detail::seq_arg("--point", point))}});
            } else if (*g_orth_gap) {
                std::vector<std::set<long>> chain;
                std::stringstream in(chain_text);
                std::string item;
                while (std::getline(in, item, ';'))
                    chain.push_back(detail::index_set(item));
                emit(witness_to_json(orthant_chain_gap(std::move(chain))));
            } else if (*g_cube) {
                QVec ts;
                try {
                    ts = parse_point(thresholds);
                } catch (const Error& e) {
                    throw Error(ErrorCode::Format, "--thresholds: " + e.detail());
                }
                auto c = cube_chain_from_cuts(ts, prefix);
                json faces = json::array();
                for (const auto& f : c.faces)
                    faces.push_back(f.full);
                emit({{"faces", faces}, {"coincident", c.coincident}});
            }
            res.out = out.str();
            return res;
        }

        ConvexSet c = detail::load_set("--set", set_path, stdin_text);
        if (*minface || *locate_cmd) {
            QVec x = detail::point_arg(point, c.dim());
            auto f = *minface ? minimal_face(c, x) : locate(c, x);
            if (as_json)
                emit({{"face", detail::face_json(f)}});
            else
                out << (*minface ? "minimal face: " : "located face: ") << describe(f) << "\n";
        } else if (*icr) {
            QVec x = detail::point_arg(point, c.dim());
            IcrMethod m = parse_method(method);
            if (m == IcrMethod::All) {
                auto r = icr_report(c, x);
                json verdicts = json::object();
                for (const auto& [mm, v] : r.verdicts)
                    verdicts[method_name(mm)] = v;
                bool v0 = r.verdicts.front().second;
                if (!r.agree()) {
                    res.code = 3;
                    res.err = "methods disagree at " + to_string(x) + "\n";
                    if (as_json)
                        emit({{"agree", false}, {"methods", verdicts}});
                    else
                        for (const auto& [mm, v] : r.verdicts)
                            out << method_name(mm) << ": " << (v ? "true" : "false") << "\n";
                } else {
                    res.code = v0 ? 0 : 1;
                    if (as_json)
                        emit({{"icr", v0}, {"agree", true}, {"methods", verdicts}});
                    else
                        out << (v0 ? "true" : "false") << " (all 4 methods agree)\n";
                }
            } else {
                bool v = icr_contains(c, x, m);
                res.code = v ? 0 : 1;
                if (as_json)
                    emit({{"icr", v}, {"method", method_name(m)}});
                else
                    out << (v ? "true" : "false") << " (" << method_name(m) << ")\n";
            }
        } else if (*ri) {
            ConvexSet r = relative_interior(c);
            if (as_json)
                emit(set_to_json(r));
            else
                out << detail::set_text(r);
        } else if (*lattice) {
            auto l = face_lattice(c);
            if (!dot_path.empty()) {
                std::ofstream f(dot_path);
                if (!f)
                    throw Error(ErrorCode::Format, "--dot: cannot write '" + dot_path + "'");
                f << to_dot(l);
            }
            if (as_json) {
                json nodes = json::array();
                for (const auto& n : l.nodes)
                    nodes.push_back(detail::face_json(n));
                emit({{"nodes", nodes}, {"covers", l.covers}});
            } else {
                out << l.nodes.size() << " faces, " << l.covers.size() << " covers\n";
                for (std::size_t i = 0; i < l.nodes.size(); ++i)
                    out << "n" << i << ": " << describe(l.nodes[i]) << "\n";
                for (const auto& [lo, hi] : l.covers)
                    out << "n" << lo << " < n" << hi << "\n";
            }
        } else if (*chains) {
            auto all = maximal_chains(face_lattice(c));
            if (as_json) {
                json js = json::array();
                for (const auto& ch : all) {
                    json one = json::array();
                    for (const auto& f : ch)
                        one.push_back(detail::face_json(f));
                    js.push_back(one);
                }
                emit({{"chains", js}});
            } else {
                out << all.size() << " maximal chains\n";
                for (const auto& ch : all) {
                    for (std::size_t i = 0; i < ch.size(); ++i)
                        out << (i ? " < " : "") << describe(ch[i]);
                    out << "\n";
                }
            }
        } else if (*decompose_cmd) {
            auto faces = decompose(c);
            json js = json::array();
            for (const auto& f : faces) {
                QVec p = facial::detail::face_interior_point(f);
                if (as_json) {
                    json fj = detail::face_json(f);
                    fj["interior_point"] = vec_to_json(p);
                    js.push_back(fj);
                } else {
                    out << describe(f) << " contains " << to_string(p) << "\n";
                }
            }
            if (as_json)
                emit({{"faces", js}});
        } else if (*separate || *support) {
            SeparationCertificate cert;
            if (*separate)
                cert = properly_separate(c, detail::load_set("--other", other_path, stdin_text));
            else
                cert = support_functional(c, detail::point_arg(point, c.dim()));
            if (as_json)
                emit(certificate_to_json(cert));
            else
                out << detail::cert_text(cert);
        } else if (*check) {
            CalcLaw l = parse_law(law);
            CalcOperands ops;
            ops.sets.push_back(c);
            if (!other_path.empty())
                ops.sets.push_back(detail::load_set("--other", other_path, stdin_text));
            if (!vec.empty())
                ops.vector = detail::point_arg(vec, c.dim(), "--vector");
            if (!scalar.empty())
                try {
                    ops.scalar = parse_rat(scalar);
                } catch (const Error& e) {
                    throw Error(ErrorCode::Format, "--scalar: " + e.detail());
                }
            if (!map.empty())
                ops.map = detail::map_arg(map);
            auto v = check_calculus(l, ops, {samples, seed}, parse_method(method));
            res.code = v.holds ? 0 : 1;
            if (as_json) {
                json j{{"law", law_name(l)}, {"holds", v.holds}, {"checked", v.checked}};
                if (v.counterexample)
                    j["counterexample"] = {{"point", vec_to_json(v.counterexample->point)},
                                           {"side", v.counterexample->side}};
                emit(j);
            } else if (v.holds) {
                out << law_name(l) << " holds (" << v.checked << " checks)\n";
            } else {
                out << law_name(l) << " fails at " << to_string(v.counterexample->point) << ": "
                    << v.counterexample->side << "\n";
            }
        }
    } catch (const Error& e) {
        res.code = detail::exit_code(e.code());
        res.err = std::string(e.what()) + "\n";
    }
    res.out = out.str();
    return res;
}

} // namespace facial::cli

#endif // FACIAL_TOOLS_FACIAL_CLI_HPP
