#pragma once

// JSON interchange: instance files in, deterministic reports out.
// Scalars are written as strings so no value passes through floating point.

#include <filesystem>
#include <optional>
#include <string>
#include <vector>

#include <json.hpp>

#include "tensorcycle/gram.hpp"
#include "tensorcycle/hypergraph.hpp"
#include "tensorcycle/observe.hpp"
#include "tensorcycle/ohg.hpp"

namespace tcyc {

using Json = nlohmann::ordered_json;

struct InstanceFile {
    FieldSpec field = FieldSpec::rationals();
    std::vector<std::string> vertices;
    std::vector<HyperEdge> edges;
    std::optional<OrientedHypergraph> oriented;
    /// Optional golden values; null when absent.
    Json expect;

    bool is_oriented() const noexcept { return oriented.has_value(); }
    /// The tensor hypergraph, converting oriented input through to_tensor_hg.
    TensorHypergraph hypergraph() const;
};

/// Throws ParseError, UnknownVertex, EmptyStructuralData, InvalidField.
InstanceFile parse_instance(const Json& doc, std::optional<FieldSpec> field_override = std::nullopt);
InstanceFile load_instance(const std::filesystem::path& path, std::optional<FieldSpec> field_override = std::nullopt);

Json tensor_to_json(const TensorElem& t, const std::vector<std::string>& names);
TensorElem tensor_from_json(const Json& j, const std::vector<std::string>& names, FieldSpec field);
Json vector_to_json(const Vector& v);
Json vectors_to_json(const std::vector<Vector>& vs);
Json matrix_to_json(const Matrix& m);

/// Instance document with one raw or tagged edge per entry; parse_instance inverts it.
Json instance_to_json(const TensorHypergraph& h);

Json analysis_to_json(const AnalysisReport& r);
Json spectrum_to_json(const Spectrum& s);

/// Header fields shared by every report.
Json report_header(const std::string& command, const TensorHypergraph& h, bool oriented);

/// Compares an "expect" block against a report; returns a description of the
/// first mismatch, or nullopt when every pinned value agrees.
std::optional<std::string> check_expectation(const Json& expect, const AnalysisReport& r);

inline constexpr const char* kToolVersion = "0.1.0";

}  // namespace tcyc
