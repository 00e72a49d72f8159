#pragma once

// Directed multigraphs (loops and parallel edges allowed), their incidence
// matrices, spanning forests, and vector-valued labelings.

#include <cstddef>
#include <limits>
#include <vector>

#include "tensorcycle/exactla.hpp"
#include "tensorcycle/tensor.hpp"

namespace tcyc {

struct Edge {
    std::size_t source;
    std::size_t target;
    bool is_loop() const noexcept { return source == target; }
};

struct Multigraph {
    std::size_t vertex_count = 0;
    std::vector<Edge> edges;

    std::size_t edge_count() const noexcept { return edges.size(); }
    /// Throws UnknownVertex when an endpoint is out of range.
    void validate() const;
};

/// |X| x |E|; column e is 1_{t(e)} - 1_{s(e)}, zero for loops.
Matrix incidence_matrix(const Multigraph& g, FieldSpec field);

struct Components {
    /// Component id per vertex, numbered in order of each component's smallest vertex.
    std::vector<std::size_t> labels;
    std::size_t count = 0;
};

Components weak_components(const Multigraph& g);

inline constexpr std::size_t kNoEdge = std::numeric_limits<std::size_t>::max();

struct SpanningForest {
    std::vector<bool> in_tree;               // per edge
    std::vector<std::size_t> parent_edge;    // per vertex; kNoEdge at roots
    std::vector<std::size_t> parent_vertex;  // per vertex; itself at roots
    std::vector<std::size_t> depth;          // per vertex
    std::vector<std::size_t> root_of;        // per vertex
    std::vector<std::size_t> roots;          // one per component, ascending

    std::size_t tree_size() const;
    std::vector<std::size_t> tree_edges() const;
};

/// Edges are scanned in index order and accepted when they join two different
/// trees, so the forest is the lexicographically first one; each component is
/// rooted at its smallest vertex. Loops never enter the forest.
SpanningForest spanning_forest(const Multigraph& g);

/// F[a, b]: signed tree path from a to b, as an edge vector.
/// Throws DifferentComponents.
Vector signed_path_vector(const Multigraph& g, const SpanningForest& f, std::size_t a, std::size_t b,
                          FieldSpec field);

/// 1_e - F[s(e), t(e)] for every non-tree edge, in edge order.
std::vector<Vector> topological_cycle_basis(const Multigraph& g, const SpanningForest& f, FieldSpec field);

/// A labeling phi: X -> U with U coordinatized; column x of `evaluation` holds
/// the coordinates of phi(x), so `evaluation` is the matrix of phi-hat.
struct Labeling {
    Multigraph graph;
    Matrix evaluation;

    FieldSpec field() const noexcept { return evaluation.field(); }

    /// Coordinatizes tensor labels over the graded-lex word basis of their supports.
    static Labeling from_tensors(const Multigraph& graph, const std::vector<TensorElem>& labels, FieldSpec field);
    static Labeling identity(const Multigraph& graph, FieldSpec field);
};

/// Matrix of the vector-valued incidence map; asserted equal to phi-hat * B_D.
Matrix labeled_incidence(const Labeling& l);

struct DefectResult {
    std::size_t delta = 0;
    /// Im(B_D) ∩ Ker(phi-hat) inside F^X.
    Subspace z_alg;
};

/// Intersection dimension, cross-checked against the rank drop
/// (|X| - c) - rank(∂_phi).
DefectResult defect(const Labeling& l);

/// Nullity of 1_x -> phi(x) - phi(r_C) with the forest roots as basepoints.
std::size_t rooted_difference_nullity(const Labeling& l, const SpanningForest& f);
/// Same with explicit basepoints: basepoint[c] is a vertex of component c.
std::size_t rooted_difference_nullity(const Labeling& l, const std::vector<std::size_t>& basepoints);

/// Edge vector zeta with B_D zeta = r and ∂_phi zeta = 0.
/// Throws NotInAlgebraicCycleSpace unless r ∈ Im(B_D) ∩ Ker(phi-hat).
Vector algebraic_lift(const Labeling& l, const SpanningForest& f, const Vector& r);

struct ExtendedBasis {
    std::vector<Vector> topological;
    std::vector<Vector> lifted;

    std::size_t size() const noexcept { return topological.size() + lifted.size(); }
    std::vector<Vector> all() const;
};

/// Topological cycles plus lifts of the RREF basis of Z_alg; a basis of Ker(∂_phi).
ExtendedBasis extended_kernel_basis(const Labeling& l);

}  // namespace tcyc
