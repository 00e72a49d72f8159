#include "tensorcycle/gram.hpp"

#include <set>

#include "tensorcycle/observe.hpp"

namespace tcyc {

namespace {

void require_rationals(const TensorHypergraph& h) {
    if (!h.field().is_rationals()) fail(ErrorKind::FieldMismatch, "Gram operators are computed over Q only");
}

Matrix gram_of(const std::vector<TensorElem>& columns, FieldSpec field) {
    const std::size_t m = columns.size();
    Matrix g(field, m, m);
    for (std::size_t i = 0; i < m; ++i)
        for (std::size_t j = i; j < m; ++j) g(i, j) = g(j, i) = inner_product(columns[i], columns[j]);
    return g;
}

std::vector<TensorElem> differences(const TensorHypergraph& h) {
    std::vector<TensorElem> out;
    for (std::size_t e = 0; e < h.edge_count(); ++e) out.push_back(h.difference(e));
    return out;
}

bool has_raw_edge(const TensorHypergraph& h) {
    return h.construction_profile()[static_cast<std::size_t>(Construction::Raw)] > 0;
}

bool is_loopless_simple_sym_quad(const TensorHypergraph& h) {
    std::set<std::pair<VertexId, VertexId>> seen;
    for (const HyperEdge& e : h.edges()) {
        const auto* q = std::get_if<SymQuadEdge>(&e.spec);
        if (q == nullptr) return false;
        VertexId u = q->members.front(), v = q->members.back();
        if (u == v) return false;
        if (v < u) std::swap(u, v);
        if (!seen.emplace(u, v).second) return false;
    }
    return true;
}

bool is_directed_graph(const TensorHypergraph& h) {
    for (const HyperEdge& e : h.edges())
        if (!std::holds_alternative<DirectedEdge>(e.spec)) return false;
    return true;
}

}  // namespace

GramMatrix gram(const TensorHypergraph& h) {
    require_rationals(h);
    GramMatrix g{gram_of(differences(h), h.field()), std::nullopt};
    ensure(psd_certificate(g.entries).psd, "Gram matrix is not PSD");
    if (!has_raw_edge(h))
        for (std::size_t i = 0; i < g.entries.rows(); ++i)
            for (std::size_t j = 0; j < g.entries.cols(); ++j)
                ensure(g.entries(i, j).rational().get_den() == 1, "Gram entry of a standard instance is not an integer");
    return g;
}

GramMatrix truncated_gram(const TensorHypergraph& h, std::size_t k) {
    require_rationals(h);
    std::vector<TensorElem> columns;
    for (const TensorElem& d : differences(h)) columns.push_back(truncate_le(d, k));
    return {gram_of(columns, h.field()), k};
}

GramRankReport gram_rank_report(const TensorHypergraph& h) {
    const Matrix l = gram(h).entries;
    GramRankReport out{rank(l), kernel_basis(l)};
    const AnalysisReport r = analyze(h);
    ensure(out.kernel == cycle_space(h), "Ker(L_beta) != Z(H)");
    ensure(out.rank + r.c_macro + r.delta == r.v_macro, "rank(L_beta) != |V_macro| - c_macro - delta");
    return out;
}

std::vector<TruncatedGram> truncated_grams(const TensorHypergraph& h) {
    require_rationals(h);
    const FieldSpec field = h.field();
    const std::vector<TensorElem> diffs = differences(h);
    const std::size_t top = h.max_degree();
    std::vector<TruncatedGram> out;
    Matrix running(field, h.edge_count(), h.edge_count());
    for (std::size_t k = 0; k <= top; ++k) {
        std::vector<TensorElem> graded;
        for (const TensorElem& d : diffs) graded.push_back(degree_component(d, k));
        TruncatedGram level{k, truncated_gram(h, k).entries, gram_of(graded, field)};
        running = running + level.component;
        ensure(running == level.up_to, "L_{<=k} != sum of L^{(j)}");
        out.push_back(std::move(level));
    }
    ensure(out.back().up_to == gram(h).entries, "L_{<=K} != L_beta");
    return out;
}

std::vector<PsdCertificate> loewner_chain_certify(const TensorHypergraph& h) {
    const std::vector<TruncatedGram> levels = truncated_grams(h);
    std::vector<PsdCertificate> out;
    for (std::size_t k = 0; k + 1 < levels.size(); ++k) {
        out.push_back(psd_certificate(levels[k + 1].up_to - levels[k].up_to));
        ensure(out.back().psd, "Loewner chain step is not PSD");
    }
    return out;
}

bool rank_increment_check(const TensorHypergraph& h) {
    const std::vector<TruncatedGram> levels = truncated_grams(h);
    const std::vector<std::size_t> drops = graded_quotients(h);
    if (drops.size() != levels.size()) return false;
    std::size_t previous = 0;
    for (std::size_t k = 0; k < levels.size(); ++k) {
        const std::size_t current = rank(levels[k].up_to);
        if (current < previous || current - previous != drops[k]) return false;
        previous = current;
    }
    return true;
}

StructuredSpectrum structured_spectrum(const TensorHypergraph& h) {
    const FieldSpec field = h.field();
    const Matrix l = gram(h).entries;
    const std::size_t m = h.edge_count();
    StructuredSpectrum out;
    out.determinant = determinant(l);
    if (m > 0 && is_loopless_simple_sym_quad(h)) {
        out.kind = StructuredSpectrum::Kind::LooplessSimple;
        Matrix expected = Scalar::from_int(field, 2) * Matrix::identity(field, m);
        for (std::size_t i = 0; i < m; ++i)
            for (std::size_t j = 0; j < m; ++j) expected(i, j) += Scalar::one(field);
        ensure(l == expected, "loopless simple Gram matrix is not 2I + J");
        out.spectrum.full = true;
        out.spectrum.rank = m;
        out.spectrum.psd = true;
        if (m > 1) out.spectrum.eigenvalues.push_back({Scalar::from_int(field, 2), m - 1});
        out.spectrum.eigenvalues.push_back({Scalar::from_int(field, static_cast<long>(m) + 2), 1});
        return out;
    }
    if (m > 0 && is_directed_graph(h)) {
        out.kind = StructuredSpectrum::Kind::DirectedGraph;
        Multigraph g{h.vertex_count(), {}};
        for (const HyperEdge& e : h.edges()) {
            const auto& d = std::get<DirectedEdge>(e.spec);
            g.edges.push_back({d.source, d.target});
        }
        const Matrix b = incidence_matrix(g, field);
        ensure(l == b.transpose() * b, "directed-graph Gram matrix is not B^T B");
    }
    out.spectrum = rational_spectrum(l);
    return out;
}

Vector orthogonal_projection(const Subspace& s, const Vector& xi) {
    const FieldSpec field = s.field();
    if (s.dim() == 0) return zero_vector(field, xi.size());
    const Matrix& b = s.basis();
    const std::optional<Vector> c = solve(b * b.transpose(), b.apply(xi));
    ensure(c.has_value(), "normal equations of an independent basis are singular");
    return b.transpose().apply(*c);
}

SpectralBounds spectral_bounds_check(const TensorHypergraph& h, const Vector& xi) {
    const FieldSpec field = h.field();
    require_rationals(h);
    if (xi.size() != h.edge_count()) fail(ErrorKind::AmbientMismatch, "edge vector has the wrong length");
    const Matrix l = gram(h).entries;
    SpectralBounds out{SpectralBounds::Status::Skipped, quadratic_form(l, xi), Scalar::zero(field),
                       Scalar::zero(field), Scalar::zero(field)};
    const Vector perp = subtract(xi, orthogonal_projection(cycle_space(h), xi));
    out.residual = dot(perp, perp);

    const Spectrum spectrum = structured_spectrum(h).spectrum;
    if (!spectrum.full) return out;
    for (const Eigenvalue& ev : spectrum.eigenvalues) {
        if (ev.value.is_zero()) continue;
        if (out.lambda_min_positive.is_zero()) out.lambda_min_positive = ev.value;
        out.lambda_max = ev.value;
    }
    const bool lower = (out.lambda_min_positive * out.residual - out.energy).sign() <= 0;
    const bool upper = (out.energy - out.lambda_max * out.residual).sign() <= 0;
    out.status = lower && upper ? SpectralBounds::Status::Holds : SpectralBounds::Status::Violated;
    return out;
}

}  // namespace tcyc
