#pragma once

// Instance builders and independent oracles shared by the test binaries.
// The oracles avoid the library's elimination, Sym and incidence code paths.

#include <algorithm>
#include <cstdint>
#include <numeric>
#include <string>
#include <utility>
#include <vector>

#include <gmpxx.h>

#include "tensorcycle/hypergraph.hpp"
#include "tensorcycle/ohg.hpp"

namespace test {

using namespace tcyc;

inline const FieldSpec Q = FieldSpec::rationals();
inline const FieldSpec F2 = FieldSpec::prime(2);
inline const FieldSpec F3 = FieldSpec::prime(3);
inline const FieldSpec F5 = FieldSpec::prime(5);
inline const std::vector<FieldSpec> kAllFields = {Q, F2, F3, F5};

inline std::vector<std::string> names(std::size_t n) {
    std::vector<std::string> out;
    for (std::size_t i = 0; i < n; ++i) out.push_back(std::string(1, static_cast<char>('a' + i)));
    return out;
}

inline std::vector<HyperEdge> numbered(std::vector<EdgeSpec> specs) {
    std::vector<HyperEdge> out;
    for (std::size_t i = 0; i < specs.size(); ++i) out.push_back({"e" + std::to_string(i + 1), std::move(specs[i])});
    return out;
}

/// sym_quad graph; a pair (v, v) is a loop.
inline TensorHypergraph sym_quad_graph(std::size_t n, const std::vector<std::pair<VertexId, VertexId>>& edges,
                                       FieldSpec field) {
    std::vector<EdgeSpec> specs;
    for (auto [u, v] : edges) specs.push_back(u == v ? SymQuadEdge{{u}} : SymQuadEdge{{u, v}});
    return TensorHypergraph::build(names(n), numbered(std::move(specs)), field);
}

inline TensorHypergraph directed_graph(std::size_t n, const std::vector<std::pair<VertexId, VertexId>>& edges,
                                       FieldSpec field) {
    std::vector<EdgeSpec> specs;
    for (auto [u, v] : edges) specs.push_back(DirectedEdge{u, v});
    return TensorHypergraph::build(names(n), numbered(std::move(specs)), field);
}

inline std::vector<std::pair<VertexId, VertexId>> complete_edges(std::size_t n) {
    std::vector<std::pair<VertexId, VertexId>> out;
    for (VertexId u = 0; u < n; ++u)
        for (VertexId v = u + 1; v < n; ++v) out.emplace_back(u, v);
    return out;
}

inline std::vector<std::pair<VertexId, VertexId>> path_edges(std::size_t n) {
    std::vector<std::pair<VertexId, VertexId>> out;
    for (VertexId u = 0; u + 1 < n; ++u) out.emplace_back(u, u + 1);
    return out;
}

inline std::vector<std::pair<VertexId, VertexId>> cycle_edges(std::size_t n) {
    auto out = path_edges(n);
    out.emplace_back(static_cast<VertexId>(n - 1), 0);
    return out;
}

/// Sum of coeff * letter.
inline TensorElem linear(FieldSpec field, const std::vector<std::pair<VertexId, long>>& terms) {
    TensorElem t(field);
    for (auto [v, c] : terms) t.add_term({v}, Scalar::from_int(field, c));
    return t;
}

/// beta(e1) = (a, a + b), beta(e2) = (a, a - b).
inline TensorHypergraph alg_cycle(FieldSpec field) {
    const TensorElem a = TensorElem::letter(field, 0);
    return TensorHypergraph::build(names(2),
                                   numbered({RawEdge{a, linear(field, {{0, 1}, {1, 1}})},
                                             RawEdge{a, linear(field, {{0, 1}, {1, -1}})}}),
                                   field);
}

/// Targets {c}, {a,c}, {b,c}, {a,b,c} from the common source d.
inline OrientedHypergraph oh_defect() {
    // rows a, b, c, d
    return OrientedHypergraph(names(4), {"e0", "e1", "e2", "e3"},
                              {{0, 1, 0, 1}, {0, 0, 1, 1}, {1, 1, 1, 1}, {-1, -1, -1, -1}});
}

/// Kind of the Error thrown by f; InternalInconsistency marks "nothing thrown".
template <class F>
ErrorKind kind_of(F&& f) {
    try {
        f();
    } catch (const Error& e) {
        return e.kind();
    }
    return ErrorKind::InternalInconsistency;
}

inline Vector ints(FieldSpec field, std::initializer_list<long> values) { return int_vector(field, values); }

namespace oracle {

/// Rank by textbook Gauss-Jordan on raw mpq_class / residue arrays, sweeping
/// columns right to left.
inline std::size_t rank(const Matrix& m) {
    const std::size_t rows = m.rows(), cols = m.cols();
    const FieldSpec f = m.field();
    if (f.is_rationals()) {
        std::vector<std::vector<mpq_class>> a(rows, std::vector<mpq_class>(cols));
        for (std::size_t i = 0; i < rows; ++i)
            for (std::size_t j = 0; j < cols; ++j) a[i][j] = m(i, j).rational();
        std::size_t r = 0;
        for (std::size_t c = cols; c-- > 0 && r < rows;) {
            std::size_t pivot = rows;
            for (std::size_t i = rows; i-- > r;)
                if (sgn(a[i][c]) != 0) pivot = i;
            if (pivot == rows) continue;
            std::swap(a[pivot], a[r]);
            for (std::size_t i = 0; i < rows; ++i) {
                if (i == r || sgn(a[i][c]) == 0) continue;
                const mpq_class factor = a[i][c] / a[r][c];
                for (std::size_t j = 0; j < cols; ++j) a[i][j] -= factor * a[r][j];
            }
            ++r;
        }
        return r;
    }
    const long p = f.characteristic();
    std::vector<std::vector<long>> a(rows, std::vector<long>(cols));
    for (std::size_t i = 0; i < rows; ++i)
        for (std::size_t j = 0; j < cols; ++j) a[i][j] = m(i, j).residue();
    auto inv = [p](long x) {
        long result = 1, base = x % p, e = p - 2;
        while (e) {
            if (e & 1) result = result * base % p;
            base = base * base % p;
            e >>= 1;
        }
        return result;
    };
    std::size_t r = 0;
    for (std::size_t c = cols; c-- > 0 && r < rows;) {
        std::size_t pivot = rows;
        for (std::size_t i = rows; i-- > r;)
            if (a[i][c] != 0) pivot = i;
        if (pivot == rows) continue;
        std::swap(a[pivot], a[r]);
        const long scale = inv(a[r][c]);
        for (long& x : a[r]) x = x * scale % p;
        for (std::size_t i = 0; i < rows; ++i) {
            if (i == r || a[i][c] == 0) continue;
            const long factor = a[i][c];
            for (std::size_t j = 0; j < cols; ++j) a[i][j] = ((a[i][j] - factor * a[r][j]) % p + p) % p;
        }
        ++r;
    }
    return r;
}

inline std::size_t nullity(const Matrix& m) { return m.cols() - oracle::rank(m); }

inline Matrix rows_of(FieldSpec f, std::size_t cols, const std::vector<Vector>& rows) {
    return Matrix::from_rows(f, cols, rows);
}

/// Span equality via three ranks.
inline bool same_span(FieldSpec f, std::size_t n, const std::vector<Vector>& a, const std::vector<Vector>& b) {
    std::vector<Vector> both(a);
    both.insert(both.end(), b.begin(), b.end());
    const std::size_t ra = a.empty() ? 0 : oracle::rank(rows_of(f, n, a));
    const std::size_t rb = b.empty() ? 0 : oracle::rank(rows_of(f, n, b));
    const std::size_t rab = both.empty() ? 0 : oracle::rank(rows_of(f, n, both));
    return ra == rb && rb == rab;
}

/// Leibniz expansion; n <= 8.
inline mpq_class determinant(const Matrix& m) {
    const std::size_t n = m.rows();
    std::vector<std::size_t> perm(n);
    std::iota(perm.begin(), perm.end(), 0);
    mpq_class total = 0;
    do {
        int inversions = 0;
        for (std::size_t i = 0; i < n; ++i)
            for (std::size_t j = i + 1; j < n; ++j)
                if (perm[i] > perm[j]) ++inversions;
        mpq_class term = inversions % 2 ? -1 : 1;
        for (std::size_t i = 0; i < n; ++i) term *= m(i, perm[i]).rational();
        total += term;
    } while (std::next_permutation(perm.begin(), perm.end()));
    return total;
}

/// Sym_k by summing all k! index permutations, one unit each.
inline TensorElem sym(FieldSpec field, const std::vector<VertexId>& multiset) {
    std::vector<std::size_t> idx(multiset.size());
    std::iota(idx.begin(), idx.end(), 0);
    TensorElem t(field);
    do {
        Word w;
        for (std::size_t i : idx) w.push_back(multiset[i]);
        t.add_term(w, Scalar::one(field));
    } while (std::next_permutation(idx.begin(), idx.end()));
    return t;
}

/// Number of x in F_2^n with m x = 0, by direct evaluation of every x.
inline std::uint64_t f2_kernel_count(const Matrix& m) {
    const std::size_t n = m.cols();
    std::uint64_t count = 0;
    for (std::uint64_t x = 0; x < (std::uint64_t{1} << n); ++x) {
        bool zero = true;
        for (std::size_t i = 0; i < m.rows() && zero; ++i) {
            unsigned acc = 0;
            for (std::size_t j = 0; j < n; ++j)
                if ((x >> j) & 1) acc ^= m(i, j).residue();
            zero = acc == 0;
        }
        if (zero) ++count;
    }
    return count;
}

/// Coordinates of B_e - A_e over the union of all words, from the boundary pairs.
inline Matrix boundary_matrix(const TensorHypergraph& h) {
    std::vector<Word> words;
    for (std::size_t e = 0; e < h.edge_count(); ++e) {
        for (const auto& [w, c] : h.source(e).terms()) words.push_back(w);
        for (const auto& [w, c] : h.target(e).terms()) words.push_back(w);
    }
    std::sort(words.begin(), words.end());
    words.erase(std::unique(words.begin(), words.end()), words.end());
    Matrix m(h.field(), words.size(), h.edge_count());
    for (std::size_t e = 0; e < h.edge_count(); ++e)
        for (std::size_t i = 0; i < words.size(); ++i)
            m(i, e) = h.target(e).coefficient(words[i]) - h.source(e).coefficient(words[i]);
    return m;
}

/// dim Ker(∂_beta) from the oracle rank.
inline std::size_t cycle_dim(const TensorHypergraph& h) { return nullity(boundary_matrix(h)); }

/// Number of distinct boundary tensors.
inline std::size_t macro_vertex_count(const TensorHypergraph& h) {
    std::vector<TensorElem> seen;
    auto add = [&](const TensorElem& t) {
        if (std::none_of(seen.begin(), seen.end(), [&](const TensorElem& s) { return s == t; })) seen.push_back(t);
    };
    for (std::size_t e = 0; e < h.edge_count(); ++e) {
        add(h.source(e));
        add(h.target(e));
    }
    return seen.size();
}

/// Weak components of the macrograph by repeated relaxation.
inline std::size_t macro_component_count(const TensorHypergraph& h) {
    std::vector<TensorElem> vs;
    auto index = [&](const TensorElem& t) {
        for (std::size_t i = 0; i < vs.size(); ++i)
            if (vs[i] == t) return i;
        vs.push_back(t);
        return vs.size() - 1;
    };
    std::vector<std::pair<std::size_t, std::size_t>> edges;
    for (std::size_t e = 0; e < h.edge_count(); ++e) edges.emplace_back(index(h.source(e)), index(h.target(e)));
    std::vector<std::size_t> label(vs.size());
    std::iota(label.begin(), label.end(), 0);
    for (bool changed = true; changed;) {
        changed = false;
        for (auto [a, b] : edges) {
            const std::size_t m = std::min(label[a], label[b]);
            if (label[a] != m || label[b] != m) changed = true;
            label[a] = label[b] = m;
        }
    }
    std::sort(label.begin(), label.end());
    return static_cast<std::size_t>(std::unique(label.begin(), label.end()) - label.begin());
}

}  // namespace oracle

}  // namespace test
