#include "tensorcycle/random_instances.hpp"

#include <string>

namespace tcyc {

namespace {

std::vector<std::string> vertex_names(std::size_t n) {
    std::vector<std::string> names;
    for (std::size_t i = 0; i < n; ++i) names.push_back("v" + std::to_string(i));
    return names;
}

std::vector<VertexId> random_tuple(Rng& rng, std::size_t n, std::size_t length) {
    const std::size_t pool = coin(rng, 0.5) ? std::min<std::size_t>(n, 2) : n;
    std::vector<VertexId> out;
    for (std::size_t i = 0; i < length; ++i) out.push_back(static_cast<VertexId>(draw(rng, pool)));
    return out;
}

std::vector<VertexId> random_tuple(Rng& rng, std::size_t n) {
    return random_tuple(rng, n, 1 + draw(rng, kMaxRandomDegree));
}

TensorElem random_tensor(Rng& rng, FieldSpec field, std::size_t n) {
    TensorElem t(field);
    const std::size_t terms = draw(rng, 4);
    for (std::size_t i = 0; i < terms; ++i) {
        const Word w = random_tuple(rng, n, draw(rng, kMaxRandomDegree + 1));
        t.add_term(w, Scalar::from_int(field, static_cast<long>(draw(rng, 5)) - 2));
    }
    return t;
}

EdgeSpec random_edge(Rng& rng, Construction tag, FieldSpec field, std::size_t n) {
    const bool loop = coin(rng, 0.2);
    switch (tag) {
        case Construction::SymQuad: {
            const auto u = static_cast<VertexId>(draw(rng, n));
            if (loop) return SymQuadEdge{{u}};
            return SymQuadEdge{{u, static_cast<VertexId>(draw(rng, n))}};
        }
        case Construction::Directed: {
            const auto s = static_cast<VertexId>(draw(rng, n));
            return DirectedEdge{s, loop ? s : static_cast<VertexId>(draw(rng, n))};
        }
        case Construction::Multiset: return MultisetEdge{random_tuple(rng, n)};
        case Construction::Ordered: return OrderedEdge{random_tuple(rng, n)};
        case Construction::MultisetDirected: {
            auto s = random_tuple(rng, n);
            return MultisetDirectedEdge{s, loop ? s : random_tuple(rng, n)};
        }
        case Construction::OrderedDirected: {
            auto s = random_tuple(rng, n);
            return OrderedDirectedEdge{s, loop ? s : random_tuple(rng, n)};
        }
        case Construction::Raw: {
            TensorElem s = random_tensor(rng, field, n);
            return RawEdge{s, loop ? s : random_tensor(rng, field, n)};
        }
    }
    return RawEdge{TensorElem(field), TensorElem(field)};
}

template <class NextTag>
TensorHypergraph random_instance(Rng& rng, FieldSpec field, NextTag next_tag) {
    const std::size_t n = 1 + draw(rng, kMaxRandomVertices);
    const std::size_t m = 1 + draw(rng, kMaxRandomEdges);
    std::vector<HyperEdge> edges;
    for (std::size_t e = 0; e < m; ++e) {
        const std::string id = "e" + std::to_string(e);
        if (!edges.empty() && coin(rng, 0.2)) {
            edges.push_back({id, edges[draw(rng, edges.size())].spec});
            continue;
        }
        edges.push_back({id, random_edge(rng, next_tag(), field, n)});
    }
    return TensorHypergraph::build(vertex_names(n), std::move(edges), field);
}

}  // namespace

std::size_t draw(Rng& rng, std::size_t n) { return n == 0 ? 0 : static_cast<std::size_t>(rng() % n); }

bool coin(Rng& rng, double p) { return static_cast<double>(rng() >> 11) * 0x1.0p-53 < p; }

TensorHypergraph random_standard_instance(Rng& rng, Construction tag, FieldSpec field) {
    return random_instance(rng, field, [tag] { return tag; });
}

TensorHypergraph random_mixed_instance(Rng& rng, FieldSpec field) {
    return random_instance(rng, field, [&rng] { return static_cast<Construction>(draw(rng, kConstructionCount)); });
}

TensorHypergraph random_raw_instance(Rng& rng, FieldSpec field) {
    return random_instance(rng, field, [] { return Construction::Raw; });
}

TensorHypergraph random_sym_quad_graph(Rng& rng, FieldSpec field, std::size_t vertices) {
    const std::size_t m = 1 + draw(rng, kMaxRandomEdges);
    std::vector<HyperEdge> edges;
    for (std::size_t e = 0; e < m; ++e)
        edges.push_back({"e" + std::to_string(e), random_edge(rng, Construction::SymQuad, field, vertices)});
    return TensorHypergraph::build(vertex_names(vertices), std::move(edges), field);
}

OrientedHypergraph random_oriented(Rng& rng, std::size_t vertices, std::size_t edges) {
    std::vector<std::vector<int>> incidence(vertices, std::vector<int>(edges));
    for (auto& row : incidence)
        for (int& x : row) x = static_cast<int>(draw(rng, 3)) - 1;
    std::vector<std::string> ids;
    for (std::size_t e = 0; e < edges; ++e) ids.push_back("e" + std::to_string(e));
    return OrientedHypergraph(vertex_names(vertices), std::move(ids), std::move(incidence));
}

}  // namespace tcyc
