#pragma once

// Oriented hypergraphs with signed incidence in {-1, 0, +1} and their image
// in tensor-labeled hypergraphs with degree-1 boundary tensors.

#include <optional>
#include <string>
#include <vector>

#include "tensorcycle/hypergraph.hpp"

namespace tcyc {

class OrientedHypergraph {
public:
    /// incidence[v][e] in {-1, 0, +1}; throws ParseError otherwise.
    OrientedHypergraph(std::vector<std::string> vertex_names, std::vector<std::string> edge_ids,
                       std::vector<std::vector<int>> incidence);

    const std::vector<std::string>& vertex_names() const noexcept { return vertex_names_; }
    const std::vector<std::string>& edge_ids() const noexcept { return edge_ids_; }
    std::size_t vertex_count() const noexcept { return vertex_names_.size(); }
    std::size_t edge_count() const noexcept { return edge_ids_.size(); }
    int entry(std::size_t v, std::size_t e) const { return incidence_.at(v).at(e); }

    /// B^oh over the given field.
    Matrix incidence_matrix(FieldSpec field) const;
    /// Vertices with entry -1 (sign < 0) or +1 (sign > 0) in column e.
    std::vector<VertexId> side(std::size_t e, int sign) const;

private:
    std::vector<std::string> vertex_names_;
    std::vector<std::string> edge_ids_;
    std::vector<std::vector<int>> incidence_;
};

/// Every edge becomes a raw edge (sum of its -1 vertices, sum of its +1 vertices).
TensorHypergraph to_tensor_hg(const OrientedHypergraph& o, FieldSpec field);

struct KernelEquivalence {
    std::size_t dim = 0;
    Subspace kernel;
};

/// Ker(B^oh) by direct elimination, asserted equal to Z of the tensor image.
KernelEquivalence kernel_equivalence(const OrientedHypergraph& o, FieldSpec field);

struct StarAnalysis {
    std::size_t r = 0;
    std::size_t delta = 0;
    /// alpha with sum alpha_i 1_{H_i} = 0 and sum alpha_i = 0, when one exists.
    std::optional<Vector> affine_dependence;
};

/// Requires one common non-empty -1 side S, disjoint from every +1 side H_i,
/// with pairwise distinct H_i; returns nullopt otherwise.
std::optional<StarAnalysis> star_analysis(const OrientedHypergraph& o, FieldSpec field);

/// Analysis of the tensor image, with dim Z cross-checked against dim Ker(B^oh).
AnalysisReport oh_dimension_report(const OrientedHypergraph& o, FieldSpec field);

}  // namespace tcyc
