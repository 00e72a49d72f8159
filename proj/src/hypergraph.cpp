#include "tensorcycle/hypergraph.hpp"

#include <algorithm>
#include <map>
#include <string>

namespace tcyc {

namespace {

struct CanonicalLess {
    bool operator()(const TensorElem& a, const TensorElem& b) const { return canonical_less(a, b); }
};

template <class... F>
struct Overloaded : F... {
    using F::operator()...;
};
template <class... F>
Overloaded(F...) -> Overloaded<F...>;

void check_vertices(const std::vector<VertexId>& vs, std::size_t vertex_count) {
    for (VertexId v : vs)
        if (v >= vertex_count) fail(ErrorKind::UnknownVertex, "vertex index " + std::to_string(v) + " out of range");
}

void check_nonempty(const std::vector<VertexId>& vs, const char* what) {
    if (vs.empty()) fail(ErrorKind::EmptyStructuralData, what);
}

void check_tensor(const TensorElem& t, std::size_t vertex_count, FieldSpec field) {
    require_same_field(t.field(), field);
    for (const auto& [w, c] : t.terms()) check_vertices(w, vertex_count);
}

std::vector<VertexId> mapped(const std::vector<VertexId>& vs, const std::vector<VertexId>& vertex_map) {
    std::vector<VertexId> out;
    out.reserve(vs.size());
    for (VertexId v : vs) out.push_back(vertex_map.at(v));
    return out;
}

std::size_t index_in(const std::vector<TensorElem>& sorted, const TensorElem& t) {
    auto it = std::lower_bound(sorted.begin(), sorted.end(), t, CanonicalLess{});
    ensure(it != sorted.end() && *it == t, "boundary tensor missing from V_macro");
    return static_cast<std::size_t>(it - sorted.begin());
}

}  // namespace

Construction construction_of(const EdgeSpec& spec) noexcept { return static_cast<Construction>(spec.index()); }

std::string_view construction_name(Construction c) noexcept {
    switch (c) {
        case Construction::SymQuad: return "sym_quad";
        case Construction::Directed: return "directed";
        case Construction::Multiset: return "multiset";
        case Construction::Ordered: return "ordered";
        case Construction::MultisetDirected: return "multiset_directed";
        case Construction::OrderedDirected: return "ordered_directed";
        case Construction::Raw: return "raw";
    }
    return "raw";
}

std::optional<Construction> construction_from_name(std::string_view name) noexcept {
    for (std::size_t i = 0; i < kConstructionCount; ++i) {
        const auto c = static_cast<Construction>(i);
        if (construction_name(c) == name) return c;
    }
    return std::nullopt;
}

std::pair<TensorElem, TensorElem> boundary_of(const EdgeSpec& spec, std::size_t vertex_count, FieldSpec field) {
    const TensorElem unit = TensorElem::unit(field);
    return std::visit(
        Overloaded{
            [&](const SymQuadEdge& e) -> std::pair<TensorElem, TensorElem> {
                check_nonempty(e.members, "sym_quad edge without members");
                if (e.members.size() > 2) fail(ErrorKind::ParseError, "sym_quad edge takes one or two members");
                check_vertices(e.members, vertex_count);
                const VertexId u = e.members.front(), v = e.members.back();
                if (u == v) return {TensorElem::word(field, {v, v}, Scalar::from_int(field, 2)), unit};
                return {TensorElem::word(field, {u, v}) + TensorElem::word(field, {v, u}), unit};
            },
            [&](const DirectedEdge& e) -> std::pair<TensorElem, TensorElem> {
                check_vertices({e.source, e.target}, vertex_count);
                return {TensorElem::letter(field, e.source), TensorElem::letter(field, e.target)};
            },
            [&](const MultisetEdge& e) -> std::pair<TensorElem, TensorElem> {
                check_nonempty(e.members, "multiset edge without members");
                check_vertices(e.members, vertex_count);
                return {sym(field, e.members), unit};
            },
            [&](const OrderedEdge& e) -> std::pair<TensorElem, TensorElem> {
                check_nonempty(e.tuple, "ordered edge with an empty tuple");
                check_vertices(e.tuple, vertex_count);
                return {TensorElem::word(field, e.tuple), unit};
            },
            [&](const MultisetDirectedEdge& e) -> std::pair<TensorElem, TensorElem> {
                check_nonempty(e.source, "directed multiset edge with an empty source");
                check_nonempty(e.target, "directed multiset edge with an empty target");
                check_vertices(e.source, vertex_count);
                check_vertices(e.target, vertex_count);
                return {sym(field, e.source), sym(field, e.target)};
            },
            [&](const OrderedDirectedEdge& e) -> std::pair<TensorElem, TensorElem> {
                check_nonempty(e.source, "directed ordered edge with an empty source");
                check_nonempty(e.target, "directed ordered edge with an empty target");
                check_vertices(e.source, vertex_count);
                check_vertices(e.target, vertex_count);
                return {TensorElem::word(field, e.source), TensorElem::word(field, e.target)};
            },
            [&](const RawEdge& e) -> std::pair<TensorElem, TensorElem> {
                check_tensor(e.source, vertex_count, field);
                check_tensor(e.target, vertex_count, field);
                return {e.source, e.target};
            },
        },
        spec);
}

EdgeSpec relabel(const EdgeSpec& spec, const std::vector<VertexId>& m) {
    return std::visit(
        Overloaded{
            [&](const SymQuadEdge& e) -> EdgeSpec { return SymQuadEdge{mapped(e.members, m)}; },
            [&](const DirectedEdge& e) -> EdgeSpec { return DirectedEdge{m.at(e.source), m.at(e.target)}; },
            [&](const MultisetEdge& e) -> EdgeSpec { return MultisetEdge{mapped(e.members, m)}; },
            [&](const OrderedEdge& e) -> EdgeSpec { return OrderedEdge{mapped(e.tuple, m)}; },
            [&](const MultisetDirectedEdge& e) -> EdgeSpec {
                return MultisetDirectedEdge{mapped(e.source, m), mapped(e.target, m)};
            },
            [&](const OrderedDirectedEdge& e) -> EdgeSpec {
                return OrderedDirectedEdge{mapped(e.source, m), mapped(e.target, m)};
            },
            [&](const RawEdge& e) -> EdgeSpec { return RawEdge{e.source.relabel(m), e.target.relabel(m)}; },
        },
        spec);
}

TensorHypergraph TensorHypergraph::build(std::vector<std::string> vertex_names, std::vector<HyperEdge> edges,
                                         FieldSpec field) {
    TensorHypergraph h;
    h.vertex_names_ = std::move(vertex_names);
    h.edges_ = std::move(edges);
    h.field_ = field;
    h.boundary_.reserve(h.edges_.size());
    for (const HyperEdge& e : h.edges_) h.boundary_.push_back(boundary_of(e.spec, h.vertex_names_.size(), field));
    return h;
}

std::array<std::size_t, kConstructionCount> TensorHypergraph::construction_profile() const {
    std::array<std::size_t, kConstructionCount> profile{};
    for (const HyperEdge& e : edges_) ++profile[static_cast<std::size_t>(construction_of(e.spec))];
    return profile;
}

bool TensorHypergraph::is_single_standard() const {
    const auto profile = construction_profile();
    const auto used = std::count_if(profile.begin(), profile.end(), [](std::size_t n) { return n > 0; });
    return used == 1 && profile[static_cast<std::size_t>(Construction::Raw)] == 0;
}

std::size_t TensorHypergraph::max_degree() const {
    std::size_t k = 0;
    for (const auto& [a, b] : boundary_) k = std::max({k, a.max_degree(), b.max_degree()});
    return k;
}

Labeling Macrograph::evaluation(FieldSpec field) const { return Labeling::from_tensors(graph, vertices, field); }

Macrograph macrograph(const TensorHypergraph& h) {
    Macrograph m;
    for (std::size_t e = 0; e < h.edge_count(); ++e) {
        m.vertices.push_back(h.source(e));
        m.vertices.push_back(h.target(e));
    }
    std::sort(m.vertices.begin(), m.vertices.end(), CanonicalLess{});
    m.vertices.erase(std::unique(m.vertices.begin(), m.vertices.end()), m.vertices.end());
    m.graph.vertex_count = m.vertices.size();
    for (std::size_t e = 0; e < h.edge_count(); ++e)
        m.graph.edges.push_back({index_in(m.vertices, h.source(e)), index_in(m.vertices, h.target(e))});
    ensure(m.vertices.size() <= 2 * h.edge_count(), "|V_macro| exceeds 2|Q_1|");
    return m;
}

TensorIncidence tensor_incidence(const TensorHypergraph& h) {
    const FieldSpec field = h.field();
    const Macrograph m = macrograph(h);
    const Labeling l = m.evaluation(field);
    TensorIncidence out{word_index_of(m.vertices), Matrix(field, 0, 0)};
    out.matrix = Matrix(field, out.index.size(), h.edge_count());
    for (std::size_t e = 0; e < h.edge_count(); ++e) {
        const Vector col = out.index.coordinates(h.difference(e));
        for (std::size_t i = 0; i < col.size(); ++i) out.matrix(i, e) = col[i];
    }
    ensure(out.matrix == l.evaluation * incidence_matrix(m.graph, field), "∂_beta does not factor through B_macro");
    return out;
}

Subspace cycle_space(const TensorHypergraph& h) { return kernel_basis(tensor_incidence(h).matrix); }

AnalysisReport analyze(const TensorHypergraph& h) {
    const FieldSpec field = h.field();
    const Macrograph m = macrograph(h);
    const Labeling l = m.evaluation(field);
    const DefectResult d = defect(l);
    const Matrix boundary = tensor_incidence(h).matrix;

    AnalysisReport r;
    r.q1 = h.edge_count();
    r.v_macro = m.vertices.size();
    r.c_macro = weak_components(m.graph).count;
    r.delta = d.delta;
    r.dim_z = kernel_basis(boundary).dim();
    r.dim_z_top = kernel_basis(incidence_matrix(m.graph, field)).dim();
    r.construction_profile = h.construction_profile();
    r.standard = h.is_single_standard();

    ensure(r.dim_z + r.v_macro == r.q1 + r.c_macro + r.delta, "dim Z != |Q_1| - |V_macro| + c_macro + delta");
    ensure(r.dim_z == r.dim_z_top + r.delta, "dim Z != dim Z_top + delta");
    ensure(r.delta + rank(boundary) + r.c_macro == r.v_macro, "delta differs from the rank drop of ∂_beta");
    return r;
}

CycleDecomposition cycle_decomposition(const TensorHypergraph& h) {
    const FieldSpec field = h.field();
    const Macrograph m = macrograph(h);
    const Labeling l = m.evaluation(field);
    const Matrix b = incidence_matrix(m.graph, field);
    const ExtendedBasis basis = extended_kernel_basis(l);

    CycleDecomposition out{kernel_basis(b), defect(l).z_alg, basis.topological, basis.lifted};
    ensure(Subspace::span(field, h.edge_count(), basis.topological) == out.z_top,
           "topological cycles do not span Ker(B_macro)");
    const auto alg = out.z_alg.basis_vectors();
    for (std::size_t i = 0; i < alg.size(); ++i)
        ensure(b.apply(out.lifts[i]) == alg[i], "lift does not map onto the Z_alg basis");
    ensure(Subspace::span(field, h.edge_count(), basis.all()) == cycle_space(h),
           "extended basis does not span Z(H)");
    return out;
}

VanishingAudit vanishing_audit(const TensorHypergraph& h) {
    VanishingAudit audit;
    if (!h.is_single_standard()) {
        audit.detail = "mixed or raw constructions";
        return audit;
    }
    const FieldSpec field = h.field();
    const Macrograph m = macrograph(h);
    const DefectResult d = defect(m.evaluation(field));
    if (d.delta > 0) {
        audit.status = VanishingAudit::Status::Violation;
        audit.detail = "nonzero algebraic cycle space, delta = " + std::to_string(d.delta);
        audit.witness = d.z_alg.basis_vectors().front();
        return audit;
    }
    std::map<Word, std::size_t, GradedLex> owner;
    for (std::size_t i = 0; i < m.vertices.size(); ++i)
        for (const auto& [w, c] : m.vertices[i].terms()) {
            auto [it, inserted] = owner.emplace(w, i);
            if (inserted) continue;
            audit.status = VanishingAudit::Status::Violation;
            audit.detail = "macro vertices " + std::to_string(it->second) + " and " + std::to_string(i) +
                           " share a support word";
            audit.witness = add(unit_vector(field, m.vertices.size(), it->second),
                                unit_vector(field, m.vertices.size(), i));
            return audit;
        }
    audit.status = VanishingAudit::Status::Vanishes;
    return audit;
}

std::optional<StarDefect> star_defect(const TensorHypergraph& h) {
    const FieldSpec field = h.field();
    if (h.edge_count() == 0) fail(ErrorKind::NotStarShaped, "no edges");
    const TensorElem& w0 = h.source(0);
    std::vector<TensorElem> targets;
    for (std::size_t e = 0; e < h.edge_count(); ++e) {
        if (!(h.source(e) == w0)) fail(ErrorKind::NotStarShaped, "edges do not share one source tensor");
        if (h.target(e) == w0) fail(ErrorKind::NotStarShaped, "a target equals the common source");
        targets.push_back(h.target(e));
    }
    std::sort(targets.begin(), targets.end(), CanonicalLess{});
    if (std::adjacent_find(targets.begin(), targets.end()) != targets.end())
        fail(ErrorKind::NotStarShaped, "targets are not distinct");

    // Columns w_i - w_0; this is ∂_beta itself.
    const Matrix differences = tensor_incidence(h).matrix;
    const Subspace k = kernel_basis(differences);
    if (k.dim() == 0) return std::nullopt;

    StarDefect out{k.dim(), k.basis_vectors().front()};
    const Macrograph m = macrograph(h);
    ensure(is_zero(differences.apply(out.xi)), "star witness is not a cycle");
    ensure(!is_zero(incidence_matrix(m.graph, field).apply(out.xi)), "star witness is topological");
    return out;
}

bool minimality_check(const TensorHypergraph& h) {
    const AnalysisReport r = analyze(h);
    return r.delta == 0 || (r.q1 >= 2 && r.v_macro >= 3);
}

TensorHypergraph relabel(const TensorHypergraph& h, const std::vector<VertexId>& vertex_map,
                         const std::vector<std::size_t>& edge_order) {
    if (vertex_map.size() != h.vertex_count() || edge_order.size() != h.edge_count())
        fail(ErrorKind::AmbientMismatch, "relabeling has the wrong size");
    std::vector<std::string> names(h.vertex_count());
    for (std::size_t v = 0; v < h.vertex_count(); ++v) names.at(vertex_map[v]) = h.vertex_names()[v];
    std::vector<HyperEdge> edges;
    edges.reserve(h.edge_count());
    for (std::size_t old : edge_order) {
        const HyperEdge& e = h.edges().at(old);
        edges.push_back({e.id, relabel(e.spec, vertex_map)});
    }
    return TensorHypergraph::build(std::move(names), std::move(edges), h.field());
}

}  // namespace tcyc
