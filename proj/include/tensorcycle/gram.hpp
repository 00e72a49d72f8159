#pragma once

// Edge Gram operator L_beta = ∂_beta^* ∂_beta and its degree-truncated family,
// computed exactly over Q with the word basis orthonormal.

#include <optional>
#include <vector>

#include "tensorcycle/hypergraph.hpp"

namespace tcyc {

struct GramMatrix {
    Matrix entries;
    std::optional<std::size_t> truncation_level;
};

/// (L_beta)_{e,e'} = <B_e - A_e, B_e' - A_e'>. Q only (FieldMismatch).
/// PSD is certified; entries are asserted integral when no edge is raw.
GramMatrix gram(const TensorHypergraph& h);
/// L_{<=k}.
GramMatrix truncated_gram(const TensorHypergraph& h, std::size_t k);

struct GramRankReport {
    std::size_t rank = 0;
    Subspace kernel;
};

/// Kernel asserted equal to Z(H); rank asserted equal to |V_macro| - c_macro - delta.
GramRankReport gram_rank_report(const TensorHypergraph& h);

struct TruncatedGram {
    std::size_t k = 0;
    Matrix up_to;     // L_{<=k}
    Matrix component; // L^{(k)}
};

/// Levels k = 0..K; asserts L_{<=k} = sum_{j<=k} L^{(j)} and L_{<=K} = L_beta.
std::vector<TruncatedGram> truncated_grams(const TensorHypergraph& h);

/// Certificates for L_{<=k+1} - L_{<=k}, k = 0..K-1; each must be PSD.
std::vector<PsdCertificate> loewner_chain_certify(const TensorHypergraph& h);

/// rank(L_{<=k}) - rank(L_{<=k-1}) == delta_{<=k-1} - delta_{<=k} for k = 0..K,
/// with L_{<=-1} = 0 and delta_{<=-1} = |V_macro| - c_macro.
bool rank_increment_check(const TensorHypergraph& h);

struct StructuredSpectrum {
    enum class Kind { LooplessSimple, DirectedGraph, General };
    Kind kind = Kind::General;
    Spectrum spectrum;
    Scalar determinant;
};

/// Loopless simple sym_quad: L = 2I + J, spectrum (m+2, x1), (2, x(m-1)).
/// Directed edges only: L = B^T B. Otherwise the rational spectrum of L.
StructuredSpectrum structured_spectrum(const TensorHypergraph& h);

struct SpectralBounds {
    enum class Status { Holds, Violated, Skipped };
    Status status = Status::Skipped;
    Scalar energy;    // ||∂_beta xi||^2
    Scalar residual;  // ||xi - P_Z xi||^2
    Scalar lambda_min_positive;
    Scalar lambda_max;
};

/// Checks lambda_min^+ ||xi - P_Z xi||^2 <= ||∂_beta xi||^2 <= lambda_max ||xi - P_Z xi||^2.
/// Skipped when the spectrum of L_beta does not split over Q.
SpectralBounds spectral_bounds_check(const TensorHypergraph& h, const Vector& xi);

/// Orthogonal projection of xi onto s, via the normal equations of its RREF basis.
Vector orthogonal_projection(const Subspace& s, const Vector& xi);

}  // namespace tcyc
