#include "tensorcycle/multigraph.hpp"

#include <algorithm>
#include <numeric>
#include <queue>
#include <string>

namespace tcyc {

namespace {

struct DisjointSets {
    std::vector<std::size_t> parent;
    explicit DisjointSets(std::size_t n) : parent(n) { std::iota(parent.begin(), parent.end(), 0); }
    std::size_t find(std::size_t x) {
        while (parent[x] != x) x = parent[x] = parent[parent[x]];
        return x;
    }
    bool unite(std::size_t a, std::size_t b) {
        a = find(a);
        b = find(b);
        if (a == b) return false;
        if (b < a) std::swap(a, b);
        parent[b] = a;
        return true;
    }
};

}  // namespace

void Multigraph::validate() const {
    for (std::size_t e = 0; e < edges.size(); ++e)
        if (edges[e].source >= vertex_count || edges[e].target >= vertex_count)
            fail(ErrorKind::UnknownVertex, "edge " + std::to_string(e) + " has an endpoint outside the vertex set");
}

Matrix incidence_matrix(const Multigraph& g, FieldSpec field) {
    g.validate();
    Matrix b(field, g.vertex_count, g.edge_count());
    for (std::size_t e = 0; e < g.edge_count(); ++e) {
        const Edge& edge = g.edges[e];
        if (edge.is_loop()) continue;
        b(edge.target, e) = Scalar::one(field);
        b(edge.source, e) = -Scalar::one(field);
    }
    return b;
}

Components weak_components(const Multigraph& g) {
    g.validate();
    DisjointSets sets(g.vertex_count);
    for (const Edge& e : g.edges) sets.unite(e.source, e.target);
    Components c;
    c.labels.assign(g.vertex_count, 0);
    std::vector<std::size_t> id_of_rep(g.vertex_count, kNoEdge);
    for (std::size_t v = 0; v < g.vertex_count; ++v) {
        const std::size_t rep = sets.find(v);
        if (id_of_rep[rep] == kNoEdge) id_of_rep[rep] = c.count++;
        c.labels[v] = id_of_rep[rep];
    }
    return c;
}

std::size_t SpanningForest::tree_size() const {
    return static_cast<std::size_t>(std::count(in_tree.begin(), in_tree.end(), true));
}

std::vector<std::size_t> SpanningForest::tree_edges() const {
    std::vector<std::size_t> out;
    for (std::size_t e = 0; e < in_tree.size(); ++e)
        if (in_tree[e]) out.push_back(e);
    return out;
}

SpanningForest spanning_forest(const Multigraph& g) {
    g.validate();
    const std::size_t n = g.vertex_count;
    SpanningForest f;
    f.in_tree.assign(g.edge_count(), false);
    DisjointSets sets(n);
    std::vector<std::vector<std::size_t>> adjacent(n);
    for (std::size_t e = 0; e < g.edge_count(); ++e) {
        const Edge& edge = g.edges[e];
        if (edge.is_loop() || !sets.unite(edge.source, edge.target)) continue;
        f.in_tree[e] = true;
        adjacent[edge.source].push_back(e);
        adjacent[edge.target].push_back(e);
    }
    f.parent_edge.assign(n, kNoEdge);
    f.parent_vertex.resize(n);
    f.depth.assign(n, 0);
    f.root_of.assign(n, kNoEdge);
    for (std::size_t r = 0; r < n; ++r) {
        if (f.root_of[r] != kNoEdge) continue;
        f.roots.push_back(r);
        f.root_of[r] = r;
        f.parent_vertex[r] = r;
        std::queue<std::size_t> queue;
        queue.push(r);
        while (!queue.empty()) {
            const std::size_t x = queue.front();
            queue.pop();
            for (std::size_t e : adjacent[x]) {
                const std::size_t y = g.edges[e].source == x ? g.edges[e].target : g.edges[e].source;
                if (f.root_of[y] != kNoEdge) continue;
                f.root_of[y] = r;
                f.parent_vertex[y] = x;
                f.parent_edge[y] = e;
                f.depth[y] = f.depth[x] + 1;
                queue.push(y);
            }
        }
    }
    return f;
}

Vector signed_path_vector(const Multigraph& g, const SpanningForest& f, std::size_t a, std::size_t b,
                          FieldSpec field) {
    if (a >= g.vertex_count || b >= g.vertex_count) fail(ErrorKind::UnknownVertex, "path endpoint out of range");
    if (f.root_of[a] != f.root_of[b]) fail(ErrorKind::DifferentComponents, "path endpoints lie in different components");
    Vector v = zero_vector(field, g.edge_count());
    const Scalar one = Scalar::one(field);
    std::size_t x = a, y = b;
    // Climb from a towards the meeting vertex (steps x -> parent(x)), and from b
    // (steps parent(y) -> y, traversed in the forward direction of the path).
    while (x != y) {
        if (f.depth[x] >= f.depth[y]) {
            const std::size_t e = f.parent_edge[x];
            v[e] += g.edges[e].source == x ? one : -one;
            x = f.parent_vertex[x];
        } else {
            const std::size_t e = f.parent_edge[y];
            v[e] += g.edges[e].source == f.parent_vertex[y] ? one : -one;
            y = f.parent_vertex[y];
        }
    }
    return v;
}

std::vector<Vector> topological_cycle_basis(const Multigraph& g, const SpanningForest& f, FieldSpec field) {
    std::vector<Vector> basis;
    for (std::size_t e = 0; e < g.edge_count(); ++e) {
        if (f.in_tree[e]) continue;
        Vector z = scale(-Scalar::one(field), signed_path_vector(g, f, g.edges[e].source, g.edges[e].target, field));
        z[e] += Scalar::one(field);
        basis.push_back(std::move(z));
    }
    return basis;
}

Labeling Labeling::from_tensors(const Multigraph& graph, const std::vector<TensorElem>& labels, FieldSpec field) {
    if (labels.size() != graph.vertex_count) fail(ErrorKind::AmbientMismatch, "one label per vertex required");
    return Labeling{graph, basis_of_span(field, labels).matrix.transpose()};
}

Labeling Labeling::identity(const Multigraph& graph, FieldSpec field) {
    return Labeling{graph, Matrix::identity(field, graph.vertex_count)};
}

Matrix labeled_incidence(const Labeling& l) {
    const FieldSpec field = l.field();
    const Multigraph& g = l.graph;
    if (l.evaluation.cols() != g.vertex_count) fail(ErrorKind::AmbientMismatch, "labeling/vertex count mismatch");
    Matrix d(field, l.evaluation.rows(), g.edge_count());
    for (std::size_t e = 0; e < g.edge_count(); ++e)
        for (std::size_t i = 0; i < d.rows(); ++i)
            d(i, e) = l.evaluation(i, g.edges[e].target) - l.evaluation(i, g.edges[e].source);
    ensure(d == l.evaluation * incidence_matrix(g, field), "labeled incidence does not factor through B_D");
    return d;
}

DefectResult defect(const Labeling& l) {
    const FieldSpec field = l.field();
    const Matrix b = incidence_matrix(l.graph, field);
    DefectResult out{0, intersect(image_basis(b), kernel_basis(l.evaluation))};
    out.delta = out.z_alg.dim();
    const std::size_t forest_rank = l.graph.vertex_count - weak_components(l.graph).count;
    ensure(out.delta + rank(labeled_incidence(l)) == forest_rank, "defect: intersection dimension differs from rank drop");
    return out;
}

std::size_t rooted_difference_nullity(const Labeling& l, const std::vector<std::size_t>& basepoints) {
    const Components comps = weak_components(l.graph);
    if (basepoints.size() != comps.count) fail(ErrorKind::AmbientMismatch, "one basepoint per component required");
    for (std::size_t c = 0; c < comps.count; ++c)
        if (basepoints[c] >= l.graph.vertex_count || comps.labels[basepoints[c]] != c)
            fail(ErrorKind::DifferentComponents, "basepoint outside its component");
    std::vector<Vector> columns;
    for (std::size_t x = 0; x < l.graph.vertex_count; ++x) {
        const std::size_t r = basepoints[comps.labels[x]];
        if (x != r) columns.push_back(subtract(l.evaluation.column(x), l.evaluation.column(r)));
    }
    if (columns.empty()) return 0;
    return columns.size() - rank(Matrix::from_columns(l.field(), l.evaluation.rows(), columns));
}

std::size_t rooted_difference_nullity(const Labeling& l, const SpanningForest& f) {
    return rooted_difference_nullity(l, f.roots);
}

Vector algebraic_lift(const Labeling& l, const SpanningForest& f, const Vector& r) {
    const FieldSpec field = l.field();
    const Multigraph& g = l.graph;
    if (r.size() != g.vertex_count) fail(ErrorKind::AmbientMismatch, "lift target has wrong length");
    const Matrix b = incidence_matrix(g, field);
    if (!image_basis(b).contains(r) || !is_zero(l.evaluation.apply(r)))
        fail(ErrorKind::NotInAlgebraicCycleSpace, "vector is not in Im(B_D) ∩ Ker(phi-hat)");
    Vector zeta = zero_vector(field, g.edge_count());
    for (std::size_t x = 0; x < g.vertex_count; ++x) {
        if (r[x].is_zero() || f.root_of[x] == x) continue;
        zeta = add(zeta, scale(r[x], signed_path_vector(g, f, f.root_of[x], x, field)));
    }
    ensure(b.apply(zeta) == r, "lift: B_D zeta != r");
    ensure(is_zero(labeled_incidence(l).apply(zeta)), "lift: zeta not in Ker(∂_phi)");
    return zeta;
}

std::vector<Vector> ExtendedBasis::all() const {
    std::vector<Vector> out(topological);
    out.insert(out.end(), lifted.begin(), lifted.end());
    return out;
}

ExtendedBasis extended_kernel_basis(const Labeling& l) {
    const FieldSpec field = l.field();
    const Multigraph& g = l.graph;
    const SpanningForest f = spanning_forest(g);
    ExtendedBasis basis;
    basis.topological = topological_cycle_basis(g, f, field);
    const DefectResult d = defect(l);
    for (const Vector& r : d.z_alg.basis_vectors()) basis.lifted.push_back(algebraic_lift(l, f, r));

    const Matrix dphi = labeled_incidence(l);
    const std::size_t expected = g.edge_count() - g.vertex_count + weak_components(g).count + d.delta;
    ensure(basis.size() == expected, "extended basis has the wrong cardinality");
    for (const Vector& v : basis.all()) ensure(is_zero(dphi.apply(v)), "extended basis vector outside Ker(∂_phi)");
    if (basis.size() > 0)
        ensure(rank(Matrix::from_rows(field, g.edge_count(), basis.all())) == basis.size(),
               "extended basis is linearly dependent");
    return basis;
}

}  // namespace tcyc
