#pragma once

// Directed tensor-labeled hypergraphs H = (Q_0, Q_1, beta), where every edge
// carries a (source tensor, target tensor) pair, and their cycle spaces.

#include <array>
#include <optional>
#include <string>
#include <variant>
#include <vector>

#include "tensorcycle/multigraph.hpp"
#include "tensorcycle/tensor.hpp"

namespace tcyc {

/// (1) symmetric quadratic encoding: {u,v} -> (u⊗v + v⊗u, 1), {v} -> (2 v⊗v, 1).
struct SymQuadEdge {
    std::vector<VertexId> members;  // one or two vertices
};
/// (2) ordinary directed edge: (s, t).
struct DirectedEdge {
    VertexId source;
    VertexId target;
};
/// (3) multiset hyperedge: (Sym_k(u_1⊗...⊗u_k), 1).
struct MultisetEdge {
    std::vector<VertexId> members;
};
/// (4) ordered tuple hyperedge: (u_1⊗...⊗u_k, 1).
struct OrderedEdge {
    std::vector<VertexId> tuple;
};
/// (5) directed hyperedge with multiset components: (Sym_p(..), Sym_q(..)).
struct MultisetDirectedEdge {
    std::vector<VertexId> source;
    std::vector<VertexId> target;
};
/// (6) directed hyperedge with ordered components.
struct OrderedDirectedEdge {
    std::vector<VertexId> source;
    std::vector<VertexId> target;
};
/// Arbitrary boundary pair outside the standard constructions.
struct RawEdge {
    TensorElem source;
    TensorElem target;
};

using EdgeSpec = std::variant<SymQuadEdge, DirectedEdge, MultisetEdge, OrderedEdge, MultisetDirectedEdge,
                              OrderedDirectedEdge, RawEdge>;

enum class Construction { SymQuad, Directed, Multiset, Ordered, MultisetDirected, OrderedDirected, Raw };
inline constexpr std::size_t kConstructionCount = 7;
inline constexpr std::array<Construction, 6> kStandardConstructions = {
    Construction::SymQuad,  Construction::Directed,         Construction::Multiset,
    Construction::Ordered,  Construction::MultisetDirected, Construction::OrderedDirected};

Construction construction_of(const EdgeSpec& spec) noexcept;
/// Interchange name: "sym_quad", "directed", "multiset", "ordered",
/// "multiset_directed", "ordered_directed", "raw".
std::string_view construction_name(Construction c) noexcept;
std::optional<Construction> construction_from_name(std::string_view name) noexcept;

/// Boundary pair (A_e, B_e) for one edge. Throws EmptyStructuralData and UnknownVertex.
std::pair<TensorElem, TensorElem> boundary_of(const EdgeSpec& spec, std::size_t vertex_count, FieldSpec field);

/// Relabels vertex indices of an edge spec through vertex_map.
EdgeSpec relabel(const EdgeSpec& spec, const std::vector<VertexId>& vertex_map);

struct HyperEdge {
    std::string id;
    EdgeSpec spec;
};

class TensorHypergraph {
public:
    static TensorHypergraph build(std::vector<std::string> vertex_names, std::vector<HyperEdge> edges, FieldSpec field);

    FieldSpec field() const noexcept { return field_; }
    const std::vector<std::string>& vertex_names() const noexcept { return vertex_names_; }
    std::size_t vertex_count() const noexcept { return vertex_names_.size(); }
    const std::vector<HyperEdge>& edges() const noexcept { return edges_; }
    std::size_t edge_count() const noexcept { return edges_.size(); }
    const TensorElem& source(std::size_t e) const { return boundary_.at(e).first; }
    const TensorElem& target(std::size_t e) const { return boundary_.at(e).second; }
    /// B_e - A_e
    TensorElem difference(std::size_t e) const { return target(e) - source(e); }

    /// Per-construction edge counts, indexed by Construction.
    std::array<std::size_t, kConstructionCount> construction_profile() const;
    /// Exactly one construction tag in use and it is not Raw.
    bool is_single_standard() const;
    /// Largest word length over all boundary tensors.
    std::size_t max_degree() const;

private:
    std::vector<std::string> vertex_names_;
    std::vector<HyperEdge> edges_;
    FieldSpec field_ = FieldSpec::rationals();
    std::vector<std::pair<TensorElem, TensorElem>> boundary_;
};

struct Macrograph {
    /// Distinct boundary tensors; zero tensor first when present, then canonical order.
    std::vector<TensorElem> vertices;
    /// Edge e runs from index(A_e) to index(B_e).
    Multigraph graph;

    /// Labeling w -> w coordinatized over the occurring words.
    Labeling evaluation(FieldSpec field) const;
};

Macrograph macrograph(const TensorHypergraph& h);

struct TensorIncidence {
    WordIndex index;
    /// One row per word, one column per edge.
    Matrix matrix;
};

/// Coordinate matrix of ∂_beta; asserted equal to phi-hat * B_macro.
TensorIncidence tensor_incidence(const TensorHypergraph& h);

struct AnalysisReport {
    std::size_t q1 = 0;
    std::size_t v_macro = 0;
    std::size_t c_macro = 0;
    std::size_t delta = 0;
    std::size_t dim_z = 0;
    std::size_t dim_z_top = 0;
    std::array<std::size_t, kConstructionCount> construction_profile{};
    bool standard = false;

    friend bool operator==(const AnalysisReport&, const AnalysisReport&) = default;
};

/// Full dimension analysis with every identity cross-checked.
AnalysisReport analyze(const TensorHypergraph& h);

/// Z(H) = Ker(∂_beta) as a subspace of F^{Q_1}.
Subspace cycle_space(const TensorHypergraph& h);

struct CycleDecomposition {
    /// Ker(B_macro) in F^{Q_1}.
    Subspace z_top;
    /// Im(B_macro) ∩ Ker(phi-hat) in F^{V_macro}.
    Subspace z_alg;
    std::vector<Vector> topological;
    std::vector<Vector> lifts;
};

CycleDecomposition cycle_decomposition(const TensorHypergraph& h);

struct VanishingAudit {
    enum class Status { Vanishes, NotStandard, Violation };
    Status status = Status::NotStandard;
    std::string detail;
    /// For Violation: a nonzero element of Z_alg, or the two macro vertex
    /// indices whose supports overlap.
    Vector witness;
};

VanishingAudit vanishing_audit(const TensorHypergraph& h);

struct StarDefect {
    std::size_t delta_lower_bound = 0;
    /// ξ = sum alpha_i 1_{e_i}, with ∂_beta ξ = 0 and B_macro ξ != 0.
    Vector xi;
};

/// Requires every edge to share one source tensor w_0 with pairwise distinct
/// targets different from w_0 (else NotStarShaped).
std::optional<StarDefect> star_defect(const TensorHypergraph& h);

/// delta >= 1 implies |Q_1| >= 2 and |V_macro| >= 3.
bool minimality_check(const TensorHypergraph& h);

/// Relabels vertices by vertex_map (old index -> new index) and reorders edges
/// so that new edge i is old edge edge_order[i].
TensorHypergraph relabel(const TensorHypergraph& h, const std::vector<VertexId>& vertex_map,
                         const std::vector<std::size_t>& edge_order);

}  // namespace tcyc
