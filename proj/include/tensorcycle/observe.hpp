#pragma once

// Observation maps rho on T(F^{Q_0}) and the projected cycle spaces
// Z_rho(H) = Ker(rho ∘ ∂_beta), including the degree filtration.

#include <map>
#include <optional>
#include <variant>
#include <vector>

#include "tensorcycle/hypergraph.hpp"

namespace tcyc {

/// pi_{<=k}
struct DegreeTruncation {
    std::size_t k;
};
/// pi_k
struct DegreeComponent {
    std::size_t k;
};
/// 1 -> 0, u_1 ⊗ ... ⊗ u_k -> u_1, landing in F^{Q_0}.
struct FirstLetter {};
/// Images of individual words in F^{codomain_dim}; unlisted words map to zero.
struct CustomLinear {
    std::size_t codomain_dim = 0;
    std::map<Word, Vector, GradedLex> images;
};

using ObservationMap = std::variant<DegreeTruncation, DegreeComponent, FirstLetter, CustomLinear>;

/// The zero observation map.
inline ObservationMap zero_observation() { return CustomLinear{}; }

/// Matrix of rho restricted to the span of the indexed words.
Matrix observation_matrix(const ObservationMap& rho, const WordIndex& index, std::size_t vertex_count,
                          FieldSpec field);

struct ProjectedAnalysis {
    std::size_t dim_z_rho = 0;
    std::size_t delta_rho = 0;
    Subspace z_rho;
};

ProjectedAnalysis projected_analysis(const TensorHypergraph& h, const ObservationMap& rho);

/// dim(Im(∂_beta) ∩ Ker(rho)); equals delta_rho - delta.
std::size_t quotient_dim(const TensorHypergraph& h, const ObservationMap& rho);

struct FiltrationLevel {
    std::size_t k = 0;
    std::size_t dim_z = 0;
    std::size_t delta = 0;
    Subspace z;
};

/// Levels k = 0..K with K the largest occurring word length.
std::vector<FiltrationLevel> degree_filtration(const TensorHypergraph& h);

/// delta_{<=k-1} - delta_{<=k} for k = 0..K, with delta_{<=-1} = |V_macro| - c_macro.
std::vector<std::size_t> graded_quotients(const TensorHypergraph& h);

struct ClassicalRecovery {
    bool match = false;
    /// FirstLetter ∘ ∂_beta, |Q_0| x |Q_1|.
    Matrix observed;
    /// B^cl: 1 iff the vertex lies on a non-loop edge.
    Matrix classical;
    Subspace observed_kernel;
    Subspace classical_kernel;
    /// (vertex, edge) positions where the two matrices differ.
    std::vector<std::pair<std::size_t, std::size_t>> differences;
};

/// Requires characteristic 2 (WrongCharacteristic) and only sym_quad edges (WrongConstruction).
ClassicalRecovery classical_recovery(const TensorHypergraph& h);

}  // namespace tcyc
