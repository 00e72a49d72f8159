#include "tensorcycle/ohg.hpp"

#include <algorithm>

namespace tcyc {

OrientedHypergraph::OrientedHypergraph(std::vector<std::string> vertex_names, std::vector<std::string> edge_ids,
                                       std::vector<std::vector<int>> incidence)
    : vertex_names_(std::move(vertex_names)), edge_ids_(std::move(edge_ids)), incidence_(std::move(incidence)) {
    if (incidence_.size() != vertex_names_.size())
        fail(ErrorKind::ParseError, "incidence needs one row per vertex");
    for (const auto& row : incidence_) {
        if (row.size() != edge_ids_.size()) fail(ErrorKind::ParseError, "incidence needs one column per edge");
        for (int x : row)
            if (x < -1 || x > 1) fail(ErrorKind::ParseError, "incidence entries must lie in {-1, 0, +1}");
    }
}

Matrix OrientedHypergraph::incidence_matrix(FieldSpec field) const {
    Matrix b(field, vertex_count(), edge_count());
    for (std::size_t v = 0; v < vertex_count(); ++v)
        for (std::size_t e = 0; e < edge_count(); ++e) b(v, e) = Scalar::from_int(field, incidence_[v][e]);
    return b;
}

std::vector<VertexId> OrientedHypergraph::side(std::size_t e, int sign) const {
    std::vector<VertexId> out;
    for (std::size_t v = 0; v < vertex_count(); ++v)
        if (incidence_[v].at(e) == sign) out.push_back(static_cast<VertexId>(v));
    return out;
}

TensorHypergraph to_tensor_hg(const OrientedHypergraph& o, FieldSpec field) {
    auto letters = [field](const std::vector<VertexId>& vs) {
        TensorElem t(field);
        for (VertexId v : vs) t.add_term({v}, Scalar::one(field));
        return t;
    };
    std::vector<HyperEdge> edges;
    for (std::size_t e = 0; e < o.edge_count(); ++e)
        edges.push_back({o.edge_ids()[e], RawEdge{letters(o.side(e, -1)), letters(o.side(e, 1))}});
    return TensorHypergraph::build(o.vertex_names(), std::move(edges), field);
}

KernelEquivalence kernel_equivalence(const OrientedHypergraph& o, FieldSpec field) {
    KernelEquivalence out{0, kernel_basis(o.incidence_matrix(field))};
    out.dim = out.kernel.dim();
    ensure(out.kernel == cycle_space(to_tensor_hg(o, field)), "Z(F(H_o)) != Ker(B^oh)");
    return out;
}

std::optional<StarAnalysis> star_analysis(const OrientedHypergraph& o, FieldSpec field) {
    const std::size_t r = o.edge_count();
    if (r == 0) return std::nullopt;
    const std::vector<VertexId> common = o.side(0, -1);
    if (common.empty()) return std::nullopt;
    std::vector<std::vector<VertexId>> targets;
    for (std::size_t e = 0; e < r; ++e) {
        if (o.side(e, -1) != common) return std::nullopt;
        targets.push_back(o.side(e, 1));
    }
    auto sorted = targets;
    std::sort(sorted.begin(), sorted.end());
    if (std::adjacent_find(sorted.begin(), sorted.end()) != sorted.end()) return std::nullopt;

    // Columns (1_{H_i}, 1); a nonzero kernel vector is an affine dependence.
    Matrix augmented(field, o.vertex_count() + 1, r);
    for (std::size_t i = 0; i < r; ++i) {
        for (VertexId v : targets[i]) augmented(v, i) = Scalar::one(field);
        augmented(o.vertex_count(), i) = Scalar::one(field);
    }
    const Subspace dependencies = kernel_basis(augmented);

    StarAnalysis out;
    out.r = r;
    out.delta = analyze(to_tensor_hg(o, field)).delta;
    if (dependencies.dim() > 0) out.affine_dependence = dependencies.basis_vectors().front();
    ensure((out.delta > 0) == out.affine_dependence.has_value(), "star defect disagrees with affine dependence");
    ensure(r >= 4 || out.delta == 0, "star with fewer than four targets has positive defect");
    return out;
}

AnalysisReport oh_dimension_report(const OrientedHypergraph& o, FieldSpec field) {
    const AnalysisReport r = analyze(to_tensor_hg(o, field));
    ensure(r.dim_z == kernel_basis(o.incidence_matrix(field)).dim(), "dim Z(F(H_o)) != dim Ker(B^oh)");
    return r;
}

}  // namespace tcyc
