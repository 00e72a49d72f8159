#include "tensorcycle/instance_io.hpp"

#include <fstream>
#include <map>
#include <set>
#include <sstream>

namespace tcyc {

namespace {

using NameIndex = std::map<std::string, VertexId>;

NameIndex index_names(const std::vector<std::string>& names) {
    NameIndex index;
    for (std::size_t i = 0; i < names.size(); ++i)
        if (!index.emplace(names[i], static_cast<VertexId>(i)).second)
            fail(ErrorKind::ParseError, "duplicate vertex name '" + names[i] + "'");
    return index;
}

VertexId vertex_of(const Json& j, const NameIndex& index) {
    if (!j.is_string()) fail(ErrorKind::ParseError, "vertex references must be names");
    auto it = index.find(j.get<std::string>());
    if (it == index.end()) fail(ErrorKind::UnknownVertex, "unknown vertex '" + j.get<std::string>() + "'");
    return it->second;
}

std::vector<VertexId> vertices_of(const Json& j, const NameIndex& index) {
    if (!j.is_array()) fail(ErrorKind::ParseError, "expected a list of vertex names");
    std::vector<VertexId> out;
    for (const Json& v : j) out.push_back(vertex_of(v, index));
    return out;
}

const Json& require(const Json& obj, const char* key) {
    if (!obj.contains(key)) fail(ErrorKind::ParseError, std::string("missing key '") + key + "'");
    return obj.at(key);
}

Scalar scalar_of(const Json& j, FieldSpec field) {
    if (j.is_string()) return Scalar::parse(field, j.get<std::string>());
    if (j.is_number_integer()) return Scalar::from_int(field, j.get<long>());
    fail(ErrorKind::ParseError, "scalars must be strings or integers");
}

TensorElem tensor_of(const Json& j, const NameIndex& index, FieldSpec field) {
    if (!j.is_array()) fail(ErrorKind::ParseError, "tensors are lists of {word, coeff} terms");
    TensorElem t(field);
    for (const Json& term : j) {
        if (!term.is_object()) fail(ErrorKind::ParseError, "tensor terms must be objects");
        const Word w = vertices_of(require(term, "word"), index);
        const Scalar c = term.contains("coeff") ? scalar_of(term.at("coeff"), field) : Scalar::one(field);
        t.add_term(w, c);
    }
    return t;
}

EdgeSpec edge_of(const Json& j, const NameIndex& index, FieldSpec field) {
    if (!j.is_object()) fail(ErrorKind::ParseError, "edges must be objects");
    const Json& tag = require(j, "construction");
    if (!tag.is_string()) fail(ErrorKind::ParseError, "construction must be a string");
    const auto c = construction_from_name(tag.get<std::string>());
    if (!c) fail(ErrorKind::ParseError, "unknown construction '" + tag.get<std::string>() + "'");
    switch (*c) {
        case Construction::SymQuad: return SymQuadEdge{vertices_of(require(j, "members"), index)};
        case Construction::Directed:
            return DirectedEdge{vertex_of(require(j, "source"), index), vertex_of(require(j, "target"), index)};
        case Construction::Multiset: return MultisetEdge{vertices_of(require(j, "members"), index)};
        case Construction::Ordered: return OrderedEdge{vertices_of(require(j, "tuple"), index)};
        case Construction::MultisetDirected:
            return MultisetDirectedEdge{vertices_of(require(j, "source"), index),
                                        vertices_of(require(j, "target"), index)};
        case Construction::OrderedDirected:
            return OrderedDirectedEdge{vertices_of(require(j, "source"), index),
                                       vertices_of(require(j, "target"), index)};
        case Construction::Raw:
            return RawEdge{tensor_of(require(j, "source"), index, field), tensor_of(require(j, "target"), index, field)};
    }
    fail(ErrorKind::ParseError, "unknown construction");
}

std::string edge_id(const Json& j, std::size_t i) {
    if (!j.contains("id")) return "e" + std::to_string(i);
    if (!j.at("id").is_string()) fail(ErrorKind::ParseError, "edge ids must be strings");
    return j.at("id").get<std::string>();
}

void check_unique_ids(const std::vector<std::string>& ids) {
    std::set<std::string> seen;
    for (const auto& id : ids)
        if (!seen.insert(id).second) fail(ErrorKind::ParseError, "duplicate edge id '" + id + "'");
}

OrientedHypergraph oriented_of(const Json& doc, const std::vector<std::string>& names, const NameIndex& index) {
    std::vector<std::string> ids;
    std::vector<std::vector<int>> incidence(names.size());
    if (doc.contains("oriented_edges")) {
        const Json& edges = doc.at("oriented_edges");
        if (!edges.is_array()) fail(ErrorKind::ParseError, "oriented_edges must be a list");
        for (std::size_t e = 0; e < edges.size(); ++e) {
            const Json& j = edges[e];
            if (!j.is_object()) fail(ErrorKind::ParseError, "oriented edges must be objects");
            ids.push_back(edge_id(j, e));
            for (auto& row : incidence) row.push_back(0);
            for (VertexId v : vertices_of(j.value("minus", Json::array()), index)) incidence[v][e] = -1;
            for (VertexId v : vertices_of(j.value("plus", Json::array()), index)) {
                if (incidence[v][e] != 0) fail(ErrorKind::ParseError, "vertex on both sides of an oriented edge");
                incidence[v][e] = 1;
            }
        }
    } else {
        const Json& rows = doc.at("incidence");
        if (!rows.is_array() || rows.size() != names.size())
            fail(ErrorKind::ParseError, "incidence needs one row per vertex");
        const std::size_t m = rows.empty() ? 0 : rows[0].size();
        for (std::size_t v = 0; v < names.size(); ++v) {
            if (!rows[v].is_array() || rows[v].size() != m) fail(ErrorKind::ParseError, "ragged incidence matrix");
            for (const Json& x : rows[v]) {
                if (!x.is_number_integer()) fail(ErrorKind::ParseError, "incidence entries must be integers");
                incidence[v].push_back(x.get<int>());
            }
        }
        if (doc.contains("edge_ids")) {
            for (const Json& id : doc.at("edge_ids")) ids.push_back(id.get<std::string>());
            if (ids.size() != m) fail(ErrorKind::ParseError, "edge_ids length differs from the column count");
        } else {
            for (std::size_t e = 0; e < m; ++e) ids.push_back("e" + std::to_string(e));
        }
    }
    check_unique_ids(ids);
    return OrientedHypergraph(names, ids, incidence);
}

InstanceFile parse_checked(const Json& doc, std::optional<FieldSpec> field_override) {
    if (!doc.is_object()) fail(ErrorKind::ParseError, "instance must be a JSON object");
    InstanceFile file;
    if (field_override) {
        file.field = *field_override;
    } else if (doc.contains("field")) {
        const Json& f = doc.at("field");
        if (!f.is_string()) fail(ErrorKind::ParseError, "field must be a string");
        file.field = FieldSpec::parse(f.get<std::string>());
    }
    for (const Json& name : require(doc, "vertices")) {
        if (!name.is_string()) fail(ErrorKind::ParseError, "vertex names must be strings");
        file.vertices.push_back(name.get<std::string>());
    }
    const NameIndex index = index_names(file.vertices);

    const int kinds = int(doc.contains("edges")) + int(doc.contains("oriented_edges")) + int(doc.contains("incidence"));
    if (kinds != 1) fail(ErrorKind::ParseError, "exactly one of edges, oriented_edges, incidence is required");
    if (doc.contains("edges")) {
        const Json& edges = doc.at("edges");
        if (!edges.is_array()) fail(ErrorKind::ParseError, "edges must be a list");
        std::vector<std::string> ids;
        for (std::size_t e = 0; e < edges.size(); ++e) {
            ids.push_back(edge_id(edges[e], e));
            file.edges.push_back({ids.back(), edge_of(edges[e], index, file.field)});
        }
        check_unique_ids(ids);
        // Surfaces EmptyStructuralData and range errors at load time.
        (void)TensorHypergraph::build(file.vertices, file.edges, file.field);
    } else {
        file.oriented = oriented_of(doc, file.vertices, index);
    }
    if (doc.contains("expect")) file.expect = doc.at("expect");
    return file;
}

Json vertex_list(const std::vector<VertexId>& vs, const std::vector<std::string>& names) {
    Json out = Json::array();
    for (VertexId v : vs) out.push_back(names.at(v));
    return out;
}

}  // namespace

TensorHypergraph InstanceFile::hypergraph() const {
    if (oriented) return to_tensor_hg(*oriented, field);
    return TensorHypergraph::build(vertices, edges, field);
}

InstanceFile parse_instance(const Json& doc, std::optional<FieldSpec> field_override) {
    try {
        return parse_checked(doc, field_override);
    } catch (const nlohmann::json::exception& e) {
        fail(ErrorKind::ParseError, e.what());
    }
}

InstanceFile load_instance(const std::filesystem::path& path, std::optional<FieldSpec> field_override) {
    std::ifstream in(path);
    if (!in) fail(ErrorKind::ParseError, "cannot open " + path.string());
    Json doc;
    try {
        doc = Json::parse(in);
    } catch (const nlohmann::json::exception& e) {
        fail(ErrorKind::ParseError, path.string() + ": " + e.what());
    }
    return parse_instance(doc, field_override);
}

Json tensor_to_json(const TensorElem& t, const std::vector<std::string>& names) {
    Json out = Json::array();
    for (const auto& [w, c] : t.terms()) out.push_back(Json{{"word", vertex_list(w, names)}, {"coeff", c.to_string()}});
    return out;
}

TensorElem tensor_from_json(const Json& j, const std::vector<std::string>& names, FieldSpec field) {
    try {
        return tensor_of(j, index_names(names), field);
    } catch (const nlohmann::json::exception& e) {
        fail(ErrorKind::ParseError, e.what());
    }
}

Json vector_to_json(const Vector& v) {
    Json out = Json::array();
    for (const Scalar& x : v) out.push_back(x.to_string());
    return out;
}

Json vectors_to_json(const std::vector<Vector>& vs) {
    Json out = Json::array();
    for (const Vector& v : vs) out.push_back(vector_to_json(v));
    return out;
}

Json matrix_to_json(const Matrix& m) { return vectors_to_json(m.row_vectors()); }

Json instance_to_json(const TensorHypergraph& h) {
    const auto& names = h.vertex_names();
    Json edges = Json::array();
    for (const HyperEdge& e : h.edges()) {
        Json j{{"id", e.id}, {"construction", construction_name(construction_of(e.spec))}};
        std::visit(
            [&](const auto& s) {
                using T = std::decay_t<decltype(s)>;
                if constexpr (std::is_same_v<T, SymQuadEdge> || std::is_same_v<T, MultisetEdge>) {
                    j["members"] = vertex_list(s.members, names);
                } else if constexpr (std::is_same_v<T, DirectedEdge>) {
                    j["source"] = names.at(s.source);
                    j["target"] = names.at(s.target);
                } else if constexpr (std::is_same_v<T, OrderedEdge>) {
                    j["tuple"] = vertex_list(s.tuple, names);
                } else if constexpr (std::is_same_v<T, RawEdge>) {
                    j["source"] = tensor_to_json(s.source, names);
                    j["target"] = tensor_to_json(s.target, names);
                } else {
                    j["source"] = vertex_list(s.source, names);
                    j["target"] = vertex_list(s.target, names);
                }
            },
            e.spec);
        edges.push_back(std::move(j));
    }
    return Json{{"field", h.field().to_string()}, {"vertices", names}, {"edges", std::move(edges)}};
}

Json analysis_to_json(const AnalysisReport& r) {
    Json profile = Json::object();
    for (std::size_t i = 0; i < kConstructionCount; ++i)
        profile[std::string(construction_name(static_cast<Construction>(i)))] = r.construction_profile[i];
    return Json{{"q1", r.q1},           {"v_macro", r.v_macro},   {"c_macro", r.c_macro},
                {"delta", r.delta},     {"dim_z", r.dim_z},       {"dim_z_top", r.dim_z_top},
                {"standard", r.standard}, {"construction_profile", std::move(profile)}};
}

Json spectrum_to_json(const Spectrum& s) {
    Json out{{"status", s.full ? "Full" : "Partial"}, {"rank", s.rank}, {"psd", s.psd}};
    if (s.full) {
        Json values = Json::array();
        for (const Eigenvalue& ev : s.eigenvalues)
            values.push_back(Json{{"value", ev.value.to_string()}, {"multiplicity", ev.multiplicity}});
        out["eigenvalues"] = std::move(values);
    }
    return out;
}

Json report_header(const std::string& command, const TensorHypergraph& h, bool oriented) {
    return Json{{"tool", "tcycle"},
                {"version", kToolVersion},
                {"command", command},
                {"instance",
                 Json{{"field", h.field().to_string()},
                      {"kind", oriented ? "oriented" : "tensor"},
                      {"vertices", h.vertex_count()},
                      {"edges", h.edge_count()}}}};
}

std::optional<std::string> check_expectation(const Json& expect, const AnalysisReport& r) {
    if (expect.is_null()) return std::nullopt;
    if (!expect.is_object()) return "expect block is not an object";
    const Json actual = analysis_to_json(r);
    for (const auto& [key, value] : expect.items()) {
        if (!actual.contains(key)) return "expect block pins unknown key '" + key + "'";
        if (actual.at(key) != value) {
            std::ostringstream msg;
            msg << key << ": expected " << value.dump() << ", computed " << actual.at(key).dump();
            return msg.str();
        }
    }
    return std::nullopt;
}

}  // namespace tcyc
