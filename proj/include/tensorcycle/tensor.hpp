#pragma once

// Sparse elements of the tensor algebra T(F^{Q_0}) in the word basis.

#include <cstdint>
#include <map>
#include <utility>
#include <vector>

#include "tensorcycle/exactla.hpp"

namespace tcyc {

using VertexId = std::uint32_t;

/// A word over the vertex set; the empty word is the unit of T^0.
using Word = std::vector<VertexId>;

/// Graded-lex order: shorter words first, then letterwise by vertex index.
struct GradedLex {
    bool operator()(const Word& a, const Word& b) const {
        if (a.size() != b.size()) return a.size() < b.size();
        return a < b;
    }
};

class TensorElem {
public:
    using Terms = std::map<Word, Scalar, GradedLex>;

    explicit TensorElem(FieldSpec field = FieldSpec::rationals()) : field_(field) {}

    static TensorElem zero(FieldSpec field) { return TensorElem(field); }
    static TensorElem unit(FieldSpec field) { return word(field, {}); }
    static TensorElem letter(FieldSpec field, VertexId v) { return word(field, {v}); }
    static TensorElem word(FieldSpec field, Word w, Scalar coeff);
    static TensorElem word(FieldSpec field, Word w) { return word(field, std::move(w), Scalar::one(field)); }

    FieldSpec field() const noexcept { return field_; }
    const Terms& terms() const noexcept { return terms_; }
    bool is_zero() const noexcept { return terms_.empty(); }
    std::size_t support_size() const noexcept { return terms_.size(); }
    Scalar coefficient(const Word& w) const;
    /// Largest word length in the support; 0 for the zero element.
    std::size_t max_degree() const noexcept;

    /// Adds c * w, dropping the term if it cancels.
    void add_term(const Word& w, const Scalar& c);

    TensorElem operator-() const;
    friend TensorElem operator+(const TensorElem& a, const TensorElem& b);
    friend TensorElem operator-(const TensorElem& a, const TensorElem& b);
    friend TensorElem operator*(const Scalar& c, const TensorElem& t);
    /// Concatenation product of the tensor algebra.
    friend TensorElem operator*(const TensorElem& a, const TensorElem& b);

    friend bool operator==(const TensorElem& a, const TensorElem& b) {
        return a.field_ == b.field_ && a.terms_ == b.terms_;
    }

    /// Relabels every letter through the given vertex map.
    TensorElem relabel(const std::vector<VertexId>& vertex_map) const;

private:
    FieldSpec field_;
    Terms terms_;
};

/// Canonical total order on normalized elements: compares term lists in
/// graded-lex word order, then coefficients; the zero element is smallest.
bool canonical_less(const TensorElem& a, const TensorElem& b);

/// Degree-k homogeneous component.
TensorElem degree_component(const TensorElem& t, std::size_t k);
/// Components of degree <= k.
TensorElem truncate_le(const TensorElem& t, std::size_t k);

/// Sym_k of a multiset of vertices, via the closed form
/// (prod_v m_v!) * sum of distinct arrangements. Throws EmptyMultiset.
TensorElem sym(FieldSpec field, std::vector<VertexId> multiset);
/// True iff char p > 0 and some multiplicity reaches p.
bool sym_vanishes(const std::vector<VertexId>& multiset, FieldSpec field);

/// Standard inner product with the word basis orthonormal; Q only.
Scalar inner_product(const TensorElem& s, const TensorElem& t);

struct WordIndex {
    std::vector<Word> words;
    std::map<Word, std::size_t, GradedLex> position;

    std::size_t size() const noexcept { return words.size(); }
    /// Coordinates of t over these words; throws if t has a word outside.
    Vector coordinates(const TensorElem& t) const;
};

WordIndex word_index_of(const std::vector<TensorElem>& elems);

struct SpanCoordinates {
    WordIndex index;
    /// One row per element, one column per word.
    Matrix matrix;
};

SpanCoordinates basis_of_span(FieldSpec field, const std::vector<TensorElem>& elems);

}  // namespace tcyc
