#include "qgp/json_io.hpp"

#include <fstream>

#include "qgp/errors.hpp"

namespace qgp {

namespace {

[[noreturn]] void parse_fail(const std::string& what) {
    throw Error(ErrorKind::ParseError, what);
}

const Json& need(const Json& j, const char* key) {
    if (!j.is_object() || !j.contains(key))
        parse_fail(std::string("missing field '") + key + "'");
    return j.at(key);
}

std::uint64_t need_uint(const Json& j, const char* key) {
    const Json& v = need(j, key);
    if (!v.is_number_unsigned() && !(v.is_number_integer() && v.get<std::int64_t>() >= 0))
        parse_fail(std::string("field '") + key + "' must be a non-negative integer");
    return v.get<std::uint64_t>();
}

} // namespace

Json ring_to_json(const RingSpec& r) {
    Json j;
    if (r.kind() == RingKind::ZMod) {
        j["kind"] = "z-mod";
        j["modulus"] = r.modulus();
    } else {
        j["kind"] = "truncated-poly";
        j["p"] = r.prime();
        j["nilpotency"] = r.nilpotency();
    }
    return j;
}

RingSpec ring_from_json(const Json& j) {
    const Json& kind = need(j, "kind");
    if (!kind.is_string()) parse_fail("ring kind must be a string");
    std::string k = kind.get<std::string>();
    if (k == "z-mod") return RingSpec::z_mod(need_uint(j, "modulus"));
    if (k == "truncated-poly")
        return RingSpec::truncated_poly(need_uint(j, "p"),
                                        unsigned(need_uint(j, "nilpotency")));
    parse_fail("unknown ring kind '" + k + "'");
}

Json elem_to_json(const RingSpec& r, RingElem e) {
    if (r.kind() == RingKind::ZMod) return e.v;
    Json arr = Json::array();
    for (auto c : r.poly_coeffs(e)) arr.push_back(c);
    return arr;
}

RingElem elem_from_json(const RingSpec& r, const Json& j) {
    if (r.kind() == RingKind::ZMod) {
        if (!j.is_number_unsigned() &&
            !(j.is_number_integer() && j.get<std::int64_t>() >= 0))
            parse_fail("z-mod element must be a non-negative integer");
        std::uint64_t v = j.get<std::uint64_t>();
        if (v >= r.modulus())
            parse_fail("element " + std::to_string(v) +
                       " is out of the canonical range of " + r.describe());
        return {v};
    }
    if (!j.is_array() || j.size() != r.nilpotency())
        parse_fail("truncated-poly element must be an array of " +
                   std::to_string(r.nilpotency()) + " coefficients");
    std::vector<std::uint64_t> c;
    for (const auto& x : j) {
        if (!x.is_number_unsigned() &&
            !(x.is_number_integer() && x.get<std::int64_t>() >= 0))
            parse_fail("polynomial coefficients must be non-negative integers");
        std::uint64_t v = x.get<std::uint64_t>();
        if (v >= r.prime()) parse_fail("coefficient out of canonical range");
        c.push_back(v);
    }
    return r.from_poly_coeffs(c);
}

Json matrix_to_json(const RingSpec& r, const Matrix& m) {
    Json rows = Json::array();
    for (int i = 0; i < m.rows(); ++i) {
        Json row = Json::array();
        for (int j = 0; j < m.cols(); ++j) row.push_back(elem_to_json(r, m.at(i, j)));
        rows.push_back(std::move(row));
    }
    return rows;
}

Matrix matrix_from_json(const RingSpec& r, const Json& j, int expected_cols) {
    if (!j.is_array()) parse_fail("matrix must be an array of rows");
    std::vector<std::vector<RingElem>> rows;
    for (const auto& row : j) {
        if (!row.is_array()) parse_fail("matrix row must be an array");
        if (int(row.size()) != expected_cols)
            parse_fail("matrix row has " + std::to_string(row.size()) +
                       " entries, expected " + std::to_string(expected_cols));
        std::vector<RingElem> conv;
        for (const auto& x : row) conv.push_back(elem_from_json(r, x));
        rows.push_back(std::move(conv));
    }
    return Matrix::from_rows(r, expected_cols, rows);
}

Json module_to_json(const FPModule& m) {
    Json j;
    j["generators"] = m.generators();
    j["relations"] = matrix_to_json(m.ring(), m.relations());
    return j;
}

FPModule module_from_json(const RingSpec& r, const Json& j) {
    int gens = int(need_uint(j, "generators"));
    Matrix rel = matrix_from_json(r, need(j, "relations"), gens);
    return FPModule(r, gens, std::move(rel));
}

Json quiver_to_json(const Quiver& q) {
    Json j;
    j["vertices"] = q.vertices();
    Json arrows = Json::array();
    for (const auto& a : q.arrows()) {
        Json ja;
        ja["name"] = a.name;
        ja["src"] = a.src;
        ja["tgt"] = a.tgt;
        arrows.push_back(std::move(ja));
    }
    j["arrows"] = std::move(arrows);
    return j;
}

Quiver quiver_from_json(const Json& j) {
    const Json& vs = need(j, "vertices");
    if (!vs.is_array()) parse_fail("vertices must be an array");
    std::vector<std::string> vertices;
    for (const auto& v : vs) {
        if (!v.is_string()) parse_fail("vertex names must be strings");
        vertices.push_back(v.get<std::string>());
    }
    const Json& as = need(j, "arrows");
    if (!as.is_array()) parse_fail("arrows must be an array");
    std::vector<Arrow> arrows;
    for (const auto& a : as) {
        const Json& n = need(a, "name");
        const Json& s = need(a, "src");
        const Json& t = need(a, "tgt");
        if (!n.is_string() || !s.is_string() || !t.is_string())
            parse_fail("arrow fields must be strings");
        arrows.push_back(
            {n.get<std::string>(), s.get<std::string>(), t.get<std::string>()});
    }
    return Quiver(std::move(vertices), std::move(arrows));
}

Json rep_to_json(const Rep& m) {
    Json j;
    j["ring"] = ring_to_json(m.ring());
    j["quiver"] = quiver_to_json(m.quiver());
    Json mods;
    for (int v = 0; v < m.quiver().vertex_count(); ++v)
        mods[m.quiver().vertices()[std::size_t(v)]] =
            module_to_json(m.vertex_module(v));
    j["modules"] = std::move(mods);
    Json maps;
    for (int a = 0; a < m.quiver().arrow_count(); ++a)
        maps[m.quiver().arrows()[std::size_t(a)].name] =
            matrix_to_json(m.ring(), m.arrow_matrix(a));
    j["maps"] = std::move(maps);
    return j;
}

Rep rep_from_json(const Json& j) {
    RingSpec ring = ring_from_json(need(j, "ring"));
    Quiver q = quiver_from_json(need(j, "quiver"));
    auto val = validate_quiver(q);
    if (!val.ok()) {
        std::string cyc;
        for (const auto& v : val.cycle) cyc += (cyc.empty() ? "" : " -> ") + v;
        throw Error(ErrorKind::ValidationError,
                    val.detail + (cyc.empty() ? "" : " (" + cyc + ")"));
    }
    QuiverCtxPtr ctx = make_quiver_ctx(q);
    const Json& mods = need(j, "modules");
    std::vector<FPModule> vertex_modules;
    for (const auto& name : q.vertices()) {
        if (!mods.contains(name))
            parse_fail("missing module for vertex '" + name + "'");
        vertex_modules.push_back(module_from_json(ring, mods.at(name)));
    }
    const Json& maps = need(j, "maps");
    std::vector<Matrix> arrows;
    for (const auto& a : q.arrows()) {
        if (!maps.contains(a.name))
            parse_fail("missing map for arrow '" + a.name + "'");
        int src = *q.vertex_index(a.src);
        int tgt = *q.vertex_index(a.tgt);
        Matrix m = matrix_from_json(
            ring, maps.at(a.name),
            vertex_modules[std::size_t(tgt)].generators());
        if (m.rows() != vertex_modules[std::size_t(src)].generators())
            parse_fail("arrow '" + a.name + "' has the wrong number of rows");
        arrows.push_back(std::move(m));
    }
    return Rep(std::move(ctx), std::move(ring), std::move(vertex_modules),
               std::move(arrows));
}

Json rep_map_to_json(const RepMap& f) {
    Json j;
    j["source"] = rep_to_json(f.source());
    j["target"] = rep_to_json(f.target());
    Json comps;
    for (int v = 0; v < f.source().quiver().vertex_count(); ++v)
        comps[f.source().quiver().vertices()[std::size_t(v)]] =
            matrix_to_json(f.source().ring(), f.component_matrix(v));
    j["components"] = std::move(comps);
    return j;
}

namespace {

Rep rep_from_json_or_path(const Json& j, const std::string& base_dir) {
    if (j.is_string()) {
        std::string path = j.get<std::string>();
        if (!path.empty() && path.front() != '/' && !base_dir.empty())
            path = base_dir + "/" + path;
        return rep_from_json(load_json_file(path));
    }
    return rep_from_json(j);
}

} // namespace

RepMap rep_map_from_json(const Json& j, const std::string& base_dir) {
    Rep src = rep_from_json_or_path(need(j, "source"), base_dir);
    Rep tgt = rep_from_json_or_path(need(j, "target"), base_dir);
    if (!(src.quiver() == tgt.quiver()))
        throw Error(ErrorKind::ValidationError,
                    "morphism endpoints live over different quivers");
    // share one context so the maps compose with downstream constructions
    Rep tgt_shared(src.ctx(), tgt.ring(),
                   [&] {
                       std::vector<FPModule> m;
                       for (int v = 0; v < tgt.quiver().vertex_count(); ++v)
                           m.push_back(tgt.vertex_module(v));
                       return m;
                   }(),
                   [&] {
                       std::vector<Matrix> a;
                       for (int i = 0; i < tgt.quiver().arrow_count(); ++i)
                           a.push_back(tgt.arrow_matrix(i));
                       return a;
                   }());
    const Json& comps = need(j, "components");
    std::vector<Matrix> components;
    for (const auto& name : src.quiver().vertices()) {
        if (!comps.contains(name))
            parse_fail("missing component for vertex '" + name + "'");
        int v = *src.quiver().vertex_index(name);
        Matrix m = matrix_from_json(
            src.ring(), comps.at(name),
            tgt_shared.vertex_module(v).generators());
        if (m.rows() != src.vertex_module(v).generators())
            parse_fail("component at vertex '" + name +
                       "' has the wrong number of rows");
        components.push_back(std::move(m));
    }
    return RepMap(std::move(src), std::move(tgt_shared), std::move(components));
}

Json object_flags_to_json(const ObjectFlags& f) {
    Json j;
    j["gorenstein_projective"] = f.gorenstein_projective;
    j["gorenstein_injective"] = f.gorenstein_injective;
    j["projective_object"] = f.projective_object;
    j["injective_object"] = f.injective_object;
    j["trivial"] = f.trivial;
    return j;
}

Json morphism_flags_to_json(const MorphismFlags& f) {
    Json j;
    j["weak_equivalence"] = f.weak_equivalence;
    j["rp_fibration"] = f.rp_fibration;
    j["rp_cofibration"] = f.rp_cofibration;
    j["ri_fibration"] = f.ri_fibration;
    j["ri_cofibration"] = f.ri_cofibration;
    j["rp_trivial_fibration"] = f.rp_trivial_fibration;
    j["ri_trivial_cofibration"] = f.ri_trivial_cofibration;
    return j;
}

Json invariants_to_json(const RingSpec& r, const std::vector<RingElem>& inv) {
    Json arr = Json::array();
    for (auto d : inv) arr.push_back(elem_to_json(r, d));
    return arr;
}

Json load_json_file(const std::string& path) {
    std::ifstream in(path);
    if (!in) throw Error(ErrorKind::ParseError, "cannot open file " + path);
    Json j;
    try {
        in >> j;
    } catch (const std::exception& e) {
        throw Error(ErrorKind::ParseError,
                    "malformed JSON in " + path + ": " + e.what());
    }
    return j;
}

} // namespace qgp
