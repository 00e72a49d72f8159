#include "tensorcycle/observe.hpp"

namespace tcyc {

namespace {

Matrix selection(const WordIndex& index, FieldSpec field, bool (*keep)(std::size_t, std::size_t), std::size_t k) {
    std::vector<std::size_t> kept;
    for (std::size_t j = 0; j < index.size(); ++j)
        if (keep(index.words[j].size(), k)) kept.push_back(j);
    Matrix r(field, kept.size(), index.size());
    for (std::size_t i = 0; i < kept.size(); ++i) r(i, kept[i]) = Scalar::one(field);
    return r;
}

struct Observed {
    Macrograph macro;
    Matrix boundary;    // ∂_beta in word coordinates
    Matrix projection;  // rho on the occurring words
};

Observed observe(const TensorHypergraph& h, const ObservationMap& rho) {
    const TensorIncidence t = tensor_incidence(h);
    return {macrograph(h), t.matrix, observation_matrix(rho, t.index, h.vertex_count(), h.field())};
}

}  // namespace

Matrix observation_matrix(const ObservationMap& rho, const WordIndex& index, std::size_t vertex_count,
                          FieldSpec field) {
    if (const auto* t = std::get_if<DegreeTruncation>(&rho))
        return selection(index, field, [](std::size_t len, std::size_t k) { return len <= k; }, t->k);
    if (const auto* c = std::get_if<DegreeComponent>(&rho))
        return selection(index, field, [](std::size_t len, std::size_t k) { return len == k; }, c->k);
    if (std::holds_alternative<FirstLetter>(rho)) {
        Matrix r(field, vertex_count, index.size());
        for (std::size_t j = 0; j < index.size(); ++j)
            if (!index.words[j].empty()) r(index.words[j].front(), j) = Scalar::one(field);
        return r;
    }
    const auto& custom = std::get<CustomLinear>(rho);
    Matrix r(field, custom.codomain_dim, index.size());
    for (std::size_t j = 0; j < index.size(); ++j) {
        auto it = custom.images.find(index.words[j]);
        if (it == custom.images.end()) continue;
        if (it->second.size() != custom.codomain_dim)
            fail(ErrorKind::AmbientMismatch, "custom observation image has the wrong length");
        for (std::size_t i = 0; i < custom.codomain_dim; ++i) {
            require_same_field(it->second[i].field(), field);
            r(i, j) = it->second[i];
        }
    }
    return r;
}

ProjectedAnalysis projected_analysis(const TensorHypergraph& h, const ObservationMap& rho) {
    const FieldSpec field = h.field();
    const Observed o = observe(h, rho);
    const Labeling l = o.macro.evaluation(field);
    const Labeling observed{l.graph, o.projection * l.evaluation};

    ProjectedAnalysis out;
    out.z_rho = kernel_basis(o.projection * o.boundary);
    out.dim_z_rho = out.z_rho.dim();
    out.delta_rho = defect(observed).delta;
    const std::size_t c = weak_components(l.graph).count;
    ensure(out.dim_z_rho + o.macro.vertices.size() == h.edge_count() + c + out.delta_rho,
           "dim Z_rho != |Q_1| - |V_macro| + c_macro + delta_rho");
    return out;
}

std::size_t quotient_dim(const TensorHypergraph& h, const ObservationMap& rho) {
    const Observed o = observe(h, rho);
    const std::size_t q = intersect(image_basis(o.boundary), kernel_basis(o.projection)).dim();
    const ProjectedAnalysis p = projected_analysis(h, rho);
    const AnalysisReport r = analyze(h);
    ensure(q + r.delta == p.delta_rho, "quotient dimension != delta_rho - delta");
    ensure(q + r.dim_z == p.dim_z_rho, "quotient dimension != dim Z_rho - dim Z");
    return q;
}

std::vector<FiltrationLevel> degree_filtration(const TensorHypergraph& h) {
    const std::size_t top = h.max_degree();
    std::vector<FiltrationLevel> levels;
    for (std::size_t k = 0; k <= top; ++k) {
        ProjectedAnalysis p = projected_analysis(h, DegreeTruncation{k});
        levels.push_back({k, p.dim_z_rho, p.delta_rho, std::move(p.z_rho)});
    }
    for (std::size_t k = 0; k + 1 < levels.size(); ++k) {
        ensure(levels[k].z.contains(levels[k + 1].z), "filtration is not a descending chain");
        ensure(levels[k].delta >= levels[k + 1].delta, "filtration defects are not monotone");
    }
    const AnalysisReport r = analyze(h);
    ensure(levels.back().delta == r.delta, "delta_{<=K} != delta");
    ensure(levels.back().z == cycle_space(h), "Z_{<=K} != Z(H)");
    return levels;
}

std::vector<std::size_t> graded_quotients(const TensorHypergraph& h) {
    const FieldSpec field = h.field();
    const std::vector<FiltrationLevel> levels = degree_filtration(h);
    const AnalysisReport r = analyze(h);
    const TensorIncidence t = tensor_incidence(h);

    std::vector<std::size_t> drops;
    std::size_t previous_delta = r.v_macro - r.c_macro;
    Subspace previous_z = Subspace::full(field, h.edge_count());
    for (const FiltrationLevel& level : levels) {
        const std::size_t drop = previous_delta - level.delta;
        const Matrix graded =
            observation_matrix(DegreeComponent{level.k}, t.index, h.vertex_count(), field) * t.matrix;
        const std::size_t quotient =
            previous_z.dim() == 0 ? 0 : rank(graded * previous_z.basis().transpose());
        ensure(drop == quotient, "defect drop differs from the graded quotient dimension");
        drops.push_back(drop);
        previous_delta = level.delta;
        previous_z = level.z;
    }
    std::size_t total = 0;
    for (std::size_t d : drops) total += d;
    ensure(total + r.delta == r.v_macro - r.c_macro, "defect drops do not sum to (|V_macro| - c_macro) - delta");
    return drops;
}

ClassicalRecovery classical_recovery(const TensorHypergraph& h) {
    const FieldSpec field = h.field();
    if (field.characteristic() != 2) fail(ErrorKind::WrongCharacteristic, "classical recovery needs characteristic 2");
    for (const HyperEdge& e : h.edges())
        if (construction_of(e.spec) != Construction::SymQuad)
            fail(ErrorKind::WrongConstruction, "classical recovery needs sym_quad edges only");

    ClassicalRecovery out;
    const Observed o = observe(h, FirstLetter{});
    out.observed = o.projection * o.boundary;
    out.classical = Matrix(field, h.vertex_count(), h.edge_count());
    for (std::size_t e = 0; e < h.edge_count(); ++e) {
        const auto& members = std::get<SymQuadEdge>(h.edges()[e].spec).members;
        if (members.front() == members.back()) continue;
        for (VertexId v : members) out.classical(v, e) = Scalar::one(field);
    }
    for (std::size_t v = 0; v < h.vertex_count(); ++v)
        for (std::size_t e = 0; e < h.edge_count(); ++e)
            if (!(out.observed(v, e) == out.classical(v, e))) out.differences.emplace_back(v, e);
    out.observed_kernel = kernel_basis(out.observed);
    out.classical_kernel = kernel_basis(out.classical);
    out.match = out.differences.empty() && out.observed_kernel == out.classical_kernel;
    return out;
}

}  // namespace tcyc
