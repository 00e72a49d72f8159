#include "tensorcycle/verify.hpp"

#include <algorithm>
#include <map>
#include <numeric>

#include "tensorcycle/gram.hpp"
#include "tensorcycle/observe.hpp"
#include "tensorcycle/random_instances.hpp"

namespace tcyc {

namespace {

struct CheckFailed {
    std::string what;
};

void check(bool condition, const std::string& what) {
    if (!condition) throw CheckFailed{what};
}

std::vector<Scalar> expanded(const Spectrum& s) {
    std::vector<Scalar> out;
    for (const Eigenvalue& ev : s.eigenvalues) out.insert(out.end(), ev.multiplicity, ev.value);
    return out;
}

Vector random_edge_vector(Rng& rng, FieldSpec field, std::size_t n) {
    Vector v;
    for (std::size_t i = 0; i < n; ++i) v.push_back(Scalar::from_int(field, static_cast<long>(draw(rng, 7)) - 3));
    return v;
}

void check_structure(const TensorHypergraph& h, const AnalysisReport& r) {
    const CycleDecomposition d = cycle_decomposition(h);
    check(d.topological.size() == r.dim_z_top, "topological basis size != dim Z_top");
    check(d.lifts.size() == r.delta, "lift count != delta");

    const VanishingAudit audit = vanishing_audit(h);
    check(audit.status != VanishingAudit::Status::Violation, "vanishing audit: " + audit.detail);
    check(!r.standard || audit.status == VanishingAudit::Status::Vanishes, "standard instance not audited as vanishing");
    check(minimality_check(h), "positive defect below the minimal size");

    if (h.field().characteristic() == 2 && h.edge_count() <= 12) {
        const std::uint64_t expected = std::uint64_t{1} << r.dim_z;
        check(f2_kernel_count(h) == expected, "F_2 kernel count differs from 2^dim Z");
    }
}

void check_relabelings(const TensorHypergraph& h, const AnalysisReport& r, Rng& rng) {
    for (int round = 0; round < 3; ++round) {
        std::vector<VertexId> vertex_map(h.vertex_count());
        std::iota(vertex_map.begin(), vertex_map.end(), 0);
        std::vector<std::size_t> edge_order(h.edge_count());
        std::iota(edge_order.begin(), edge_order.end(), 0);
        for (std::size_t i = vertex_map.size(); i > 1; --i) std::swap(vertex_map[i - 1], vertex_map[draw(rng, i)]);
        for (std::size_t i = edge_order.size(); i > 1; --i) std::swap(edge_order[i - 1], edge_order[draw(rng, i)]);
        check(analyze(relabel(h, vertex_map, edge_order)) == r, "analysis changed under relabeling");
    }
}

void check_observations(const TensorHypergraph& h, const AnalysisReport& r) {
    const Subspace z = cycle_space(h);
    std::vector<ObservationMap> maps{FirstLetter{}, zero_observation()};
    for (std::size_t k = 0; k <= h.max_degree(); ++k) {
        maps.push_back(DegreeTruncation{k});
        maps.push_back(DegreeComponent{k});
    }
    for (const ObservationMap& rho : maps) {
        const ProjectedAnalysis p = projected_analysis(h, rho);
        check(p.z_rho.contains(z), "Z(H) not contained in Z_rho(H)");
        (void)quotient_dim(h, rho);
    }
    const std::vector<std::size_t> drops = graded_quotients(h);
    check(drops.size() == h.max_degree() + 1, "graded quotient count != K + 1");
    std::size_t total = std::accumulate(drops.begin(), drops.end(), std::size_t{0});
    check(total + r.delta + r.c_macro == r.v_macro, "graded quotients do not sum to the defect range");

    if (h.field().characteristic() == 2) {
        const bool sym_quad_only = std::all_of(h.edges().begin(), h.edges().end(), [](const HyperEdge& e) {
            return construction_of(e.spec) == Construction::SymQuad;
        });
        if (sym_quad_only) check(classical_recovery(h).match, "classical recovery mismatch");
    }
}

void check_gram(const TensorHypergraph& h, const AnalysisReport& r, Rng& rng) {
    const GramRankReport g = gram_rank_report(h);
    check(g.rank + r.c_macro + r.delta == r.v_macro, "Gram rank identity");
    const std::vector<TruncatedGram> levels = truncated_grams(h);
    (void)loewner_chain_certify(h);
    check(rank_increment_check(h), "Gram rank increments differ from defect drops");

    const Matrix l = gram(h).entries;
    const Vector xi = random_edge_vector(rng, h.field(), h.edge_count());
    Scalar parts = Scalar::zero(h.field());
    for (const TruncatedGram& level : levels) parts += quadratic_form(level.component, xi);
    check(parts == quadratic_form(l, xi), "quadratic form does not split over degrees");

    const StructuredSpectrum s = structured_spectrum(h);
    check(s.spectrum.rank == g.rank, "spectrum rank != Gram rank");
    check(spectral_bounds_check(h, xi).status != SpectralBounds::Status::Violated, "spectral bounds violated");

    const std::vector<Scalar> top = expanded(s.spectrum);
    for (const TruncatedGram& level : levels) {
        const Spectrum lower = rational_spectrum(level.up_to);
        if (!lower.full || !s.spectrum.full) continue;
        const std::vector<Scalar> low = expanded(lower);
        for (std::size_t i = 0; i < low.size(); ++i)
            check((low[i] - top[i]).sign() <= 0, "eigenvalues are not monotone along the filtration");
    }
}

VerifyResult run_checks(const TensorHypergraph& h, std::uint64_t seed) {
    VerifyResult result;
    try {
        Rng rng(seed);
        result.report = analyze(h);
        check_structure(h, result.report);
        check_relabelings(h, result.report, rng);
        check_observations(h, result.report);
        if (h.field().is_rationals()) check_gram(h, result.report, rng);
    } catch (const CheckFailed& e) {
        result.ok = false;
        result.failure = e.what;
    } catch (const Error& e) {
        result.ok = false;
        result.failure = std::string(to_string(e.kind())) + ": " + e.what();
    }
    return result;
}

}  // namespace

VerifyResult verify_instance(const TensorHypergraph& h, std::uint64_t seed) { return run_checks(h, seed); }

VerifyResult verify_oriented(const OrientedHypergraph& o, FieldSpec field, std::uint64_t seed) {
    try {
        const KernelEquivalence k = kernel_equivalence(o, field);
        const AnalysisReport r = oh_dimension_report(o, field);
        if (r.dim_z != k.dim) return {false, "oriented kernel dimension mismatch", r};
        if (const auto star = star_analysis(o, field); star && star->delta > 0 && star->r < 4)
            return {false, "star defect with fewer than four targets", r};
    } catch (const Error& e) {
        return {false, std::string(to_string(e.kind())) + ": " + e.what(), {}};
    }
    return run_checks(to_tensor_hg(o, field), seed);
}

std::uint64_t f2_kernel_count(const TensorHypergraph& h) {
    if (h.field().characteristic() != 2) fail(ErrorKind::FieldMismatch, "enumeration needs F_2");
    const std::size_t m = h.edge_count();
    if (m > 20) fail(ErrorKind::AmbientMismatch, "too many edges to enumerate");
    // Column e of ∂_beta as a set of words with odd coefficient.
    std::map<Word, std::size_t, GradedLex> position;
    std::vector<std::vector<std::size_t>> columns(m);
    for (std::size_t e = 0; e < m; ++e) {
        const TensorElem d = h.difference(e);
        for (const auto& [w, c] : d.terms()) columns[e].push_back(position.emplace(w, position.size()).first->second);
    }

    std::vector<std::uint8_t> image(position.size(), 0);
    std::size_t nonzero = 0;
    std::uint64_t count = 1;  // the zero vector
    for (std::uint64_t step = 1; step < (std::uint64_t{1} << m); ++step) {
        const auto flip = static_cast<std::size_t>(__builtin_ctzll(step));  // Gray code
        for (std::size_t i : columns[flip]) {
            image[i] ^= 1;
            if (image[i]) ++nonzero;
            else --nonzero;
        }
        if (nonzero == 0) ++count;
    }
    return count;
}

GeneratedInstance generate_corpus_instance(std::uint64_t seed, std::size_t i, std::optional<FieldSpec> field) {
    static const FieldSpec fields[] = {FieldSpec::rationals(), FieldSpec::prime(2), FieldSpec::prime(3),
                                       FieldSpec::prime(5)};
    std::seed_seq sequence{static_cast<std::uint32_t>(seed), static_cast<std::uint32_t>(seed >> 32),
                           static_cast<std::uint32_t>(i)};
    Rng rng(sequence);
    const FieldSpec f = field ? *field : fields[i % 4];
    const std::size_t kind = field ? i % 8 : (i / 4) % 8;
    GeneratedInstance out{"", TensorHypergraph()};
    std::string label;
    if (kind < 6) {
        const auto tag = static_cast<Construction>(kind);
        out.hypergraph = random_standard_instance(rng, tag, f);
        label = std::string(construction_name(tag));
    } else if (kind == 6) {
        out.hypergraph = random_mixed_instance(rng, f);
        label = "mixed";
    } else {
        out.hypergraph = random_raw_instance(rng, f);
        label = "raw";
    }
    out.name = "random-" + std::to_string(i) + "-" + label + "-" + f.to_string();
    return out;
}

}  // namespace tcyc
