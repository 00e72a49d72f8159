#pragma once

// Runs every cross-check of the library on one instance and reports the first
// failure. Used by `tcycle verify` and the property tests.

#include <cstdint>
#include <optional>
#include <string>
#include <vector>

#include "tensorcycle/hypergraph.hpp"
#include "tensorcycle/ohg.hpp"

namespace tcyc {

struct VerifyResult {
    bool ok = true;
    /// First failed check, empty when ok.
    std::string failure;
    AnalysisReport report;
};

/// `seed` drives the relabelings and random test vectors.
VerifyResult verify_instance(const TensorHypergraph& h, std::uint64_t seed);
/// Oriented checks followed by verify_instance on the tensor image.
VerifyResult verify_oriented(const OrientedHypergraph& o, FieldSpec field, std::uint64_t seed);

/// Number of edge vectors over F_2 killed by ∂_beta, by enumeration; q1 <= 20.
std::uint64_t f2_kernel_count(const TensorHypergraph& h);

struct GeneratedInstance {
    std::string name;
    TensorHypergraph hypergraph;
};

/// Instance i uses the generator stream seeded by (seed, i); without a field
/// override fields cycle through Q, F2, F3, F5 and kinds through the six
/// standard constructions, mixed, and raw.
GeneratedInstance generate_corpus_instance(std::uint64_t seed, std::size_t i, std::optional<FieldSpec> field);

}  // namespace tcyc
