#include "qs/json_io.hpp"

#include <stdexcept>

namespace qs {

Json quiver_to_json(const Quiver& q) {
    Json j;
    j["vertices"] = q.vertex_labels();
    Json arrows = Json::array();
    for (auto [t, h] : q.arrows())
        arrows.push_back({q.vertex_labels()[t], q.vertex_labels()[h]});
    j["arrows"] = std::move(arrows);
    return j;
}

Quiver quiver_from_json(const Json& j) {
    if (!j.contains("vertices") || !j.contains("arrows"))
        throw std::invalid_argument("quiver JSON needs 'vertices' and 'arrows'");
    std::vector<std::string> labels = j.at("vertices").get<std::vector<std::string>>();
    std::vector<std::pair<int, int>> arrows;
    Quiver probe(labels, {});
    for (const auto& a : j.at("arrows")) {
        if (!a.is_array() || a.size() != 2)
            throw std::invalid_argument("arrow must be a [tail, head] pair");
        int t = probe.index_of(a[0].get<std::string>());
        int h = probe.index_of(a[1].get<std::string>());
        if (t < 0 || h < 0) throw std::invalid_argument("arrow endpoint not a vertex");
        arrows.push_back({t, h});
    }
    return Quiver(std::move(labels), std::move(arrows));
}

namespace {

void check_labels(const Quiver& q, const Json& j, const char* what) {
    if (!j.is_object()) throw std::invalid_argument(std::string(what) + ": not an object");
    if (static_cast<int>(j.size()) != q.num_vertices())
        throw std::invalid_argument(std::string(what) + ": vertex set mismatch");
    for (const auto& label : q.vertex_labels())
        if (!j.contains(label))
            throw std::invalid_argument(std::string(what) + ": missing vertex '" + label + "'");
}

} // namespace

Json dim_to_json(const Quiver& q, const DimVector& v) {
    validate_dim(q, v, "dim_to_json");
    Json j = Json::object();
    for (int i = 0; i < q.num_vertices(); ++i) j[q.vertex_labels()[i]] = v[i];
    return j;
}

DimVector dim_from_json(const Quiver& q, const Json& j) {
    check_labels(q, j, "dimension vector");
    DimVector v(q.num_vertices());
    for (int i = 0; i < q.num_vertices(); ++i) {
        const auto& cell = j.at(q.vertex_labels()[i]);
        if (!cell.is_number_integer())
            throw std::invalid_argument("dimension entries must be integers");
        v[i] = cell.get<long long>();
    }
    return v;
}

Json char_to_json(const Quiver& q, const Character& c) {
    if (static_cast<int>(c.size()) != q.num_vertices())
        throw std::invalid_argument("char_to_json: length mismatch");
    Json j = Json::object();
    for (int i = 0; i < q.num_vertices(); ++i)
        j[q.vertex_labels()[i]] = rat_to_string(c[i]);
    return j;
}

Character char_from_json(const Quiver& q, const Json& j) {
    check_labels(q, j, "character");
    Character c(q.num_vertices());
    for (int i = 0; i < q.num_vertices(); ++i)
        c[i] = parse_rat(j.at(q.vertex_labels()[i]).get<std::string>());
    return c;
}

Json framed_to_json(const FramedSetting& s) {
    Json j;
    j["quiver"] = quiver_to_json(s.quiver);
    j["v"] = dim_to_json(s.quiver, s.v);
    j["w"] = dim_to_json(s.quiver, s.w);
    return j;
}

FramedSetting framed_from_json(const Json& j) {
    FramedSetting s;
    s.quiver = quiver_from_json(j.at("quiver"));
    s.v = dim_from_json(s.quiver, j.at("v"));
    s.w = dim_from_json(s.quiver, j.at("w"));
    return s;
}

Json rep_type_to_json(const Quiver& q, const RepresentationType& tau) {
    Json parts = Json::array();
    for (const auto& part : tau.parts) {
        Json p;
        p["root"] = dim_to_json(q, part.root);
        p["mult"] = part.mult;
        parts.push_back(std::move(p));
    }
    return parts;
}

RepresentationType rep_type_from_json(const Quiver& q, const Json& j) {
    RepresentationType tau;
    for (const auto& p : j) {
        RepPart part;
        part.root = dim_from_json(q, p.at("root"));
        part.mult = p.at("mult").get<long long>();
        tau.parts.push_back(std::move(part));
    }
    return tau;
}

namespace {

Json row_to_json(const LinRow& r) {
    Json j;
    Json a = Json::array();
    for (const auto& c : r.a) a.push_back(rat_to_string(c));
    j["a"] = std::move(a);
    j["b"] = rat_to_string(r.b);
    return j;
}

LinRow row_from_json(const Json& j) {
    LinRow r;
    for (const auto& c : j.at("a")) r.a.push_back(parse_rat(c.get<std::string>()));
    r.b = parse_rat(j.at("b").get<std::string>());
    return r;
}

} // namespace

Json polyhedron_to_json(const Polyhedron& p) {
    Json j;
    j["num_vars"] = p.num_vars;
    Json eq = Json::array(), le = Json::array();
    for (const auto& r : p.eq) eq.push_back(row_to_json(r));
    for (const auto& r : p.le) le.push_back(row_to_json(r));
    j["eq"] = std::move(eq);
    j["le"] = std::move(le);
    return j;
}

Polyhedron polyhedron_from_json(const Json& j) {
    Polyhedron p;
    p.num_vars = j.at("num_vars").get<int>();
    for (const auto& r : j.at("eq")) p.eq.push_back(row_from_json(r));
    for (const auto& r : j.at("le")) p.le.push_back(row_from_json(r));
    p.validate();
    return p;
}

Json sign_vector_to_json(const Arrangement& arr, const SignVector& s) {
    if (s.signs.size() != arr.vars.size())
        throw std::invalid_argument("sign_vector_to_json: length mismatch");
    Json j = Json::object();
    for (size_t i = 0; i < arr.vars.size(); ++i)
        j[arr.vars[i]] = s.signs[i] > 0 ? "+" : "-";
    return j;
}

Json chamber_to_json(const Arrangement& arr, const Chamber& ch) {
    Json j;
    j["signs"] = sign_vector_to_json(arr, ch.sign);
    if (arr.reduced && ch.status == ChamberStatus::Bounded) {
        Json ordering = Json::array();
        for (int v : chamber_to_ordering(ch.sign, arr.n)) ordering.push_back(v + 1);
        j["ordering"] = std::move(ordering);
    }
    j["lattice_points"] = ch.lattice;
    return j;
}

Json matrix_to_json(const RatMat& m) {
    Json rows = Json::array();
    for (const auto& row : m) {
        Json r = Json::array();
        for (const auto& c : row) r.push_back(rat_to_string(c));
        rows.push_back(std::move(r));
    }
    return rows;
}

} // namespace qs
