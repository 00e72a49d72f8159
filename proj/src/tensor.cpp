#include "tensorcycle/tensor.hpp"

#include <algorithm>

namespace tcyc {

TensorElem TensorElem::word(FieldSpec field, Word w, Scalar coeff) {
    TensorElem t(field);
    t.add_term(w, coeff);
    return t;
}

Scalar TensorElem::coefficient(const Word& w) const {
    auto it = terms_.find(w);
    return it == terms_.end() ? Scalar::zero(field_) : it->second;
}

std::size_t TensorElem::max_degree() const noexcept {
    return terms_.empty() ? 0 : terms_.rbegin()->first.size();
}

void TensorElem::add_term(const Word& w, const Scalar& c) {
    require_same_field(field_, c.field());
    if (c.is_zero()) return;
    auto [it, inserted] = terms_.try_emplace(w, c);
    if (inserted) return;
    it->second += c;
    if (it->second.is_zero()) terms_.erase(it);
}

TensorElem TensorElem::operator-() const {
    TensorElem r(field_);
    for (const auto& [w, c] : terms_) r.terms_.emplace(w, -c);
    return r;
}

TensorElem operator+(const TensorElem& a, const TensorElem& b) {
    require_same_field(a.field_, b.field_);
    TensorElem r(a);
    for (const auto& [w, c] : b.terms_) r.add_term(w, c);
    return r;
}

TensorElem operator-(const TensorElem& a, const TensorElem& b) {
    require_same_field(a.field_, b.field_);
    TensorElem r(a);
    for (const auto& [w, c] : b.terms_) r.add_term(w, -c);
    return r;
}

TensorElem operator*(const Scalar& c, const TensorElem& t) {
    require_same_field(c.field(), t.field_);
    TensorElem r(t.field_);
    if (c.is_zero()) return r;
    for (const auto& [w, x] : t.terms_) r.add_term(w, c * x);
    return r;
}

TensorElem operator*(const TensorElem& a, const TensorElem& b) {
    require_same_field(a.field_, b.field_);
    TensorElem r(a.field_);
    for (const auto& [wa, ca] : a.terms_)
        for (const auto& [wb, cb] : b.terms_) {
            Word w(wa);
            w.insert(w.end(), wb.begin(), wb.end());
            r.add_term(w, ca * cb);
        }
    return r;
}

TensorElem TensorElem::relabel(const std::vector<VertexId>& vertex_map) const {
    TensorElem r(field_);
    for (const auto& [w, c] : terms_) {
        Word mapped;
        mapped.reserve(w.size());
        for (VertexId v : w) mapped.push_back(vertex_map.at(v));
        r.add_term(mapped, c);
    }
    return r;
}

bool canonical_less(const TensorElem& a, const TensorElem& b) {
    auto ia = a.terms().begin(), ib = b.terms().begin();
    const GradedLex word_less;
    for (; ia != a.terms().end() && ib != b.terms().end(); ++ia, ++ib) {
        if (word_less(ia->first, ib->first)) return true;
        if (word_less(ib->first, ia->first)) return false;
        const auto c = canonical_compare(ia->second, ib->second);
        if (c != 0) return c < 0;
    }
    return ia == a.terms().end() && ib != b.terms().end();
}

TensorElem degree_component(const TensorElem& t, std::size_t k) {
    TensorElem r(t.field());
    for (const auto& [w, c] : t.terms())
        if (w.size() == k) r.add_term(w, c);
    return r;
}

TensorElem truncate_le(const TensorElem& t, std::size_t k) {
    TensorElem r(t.field());
    for (const auto& [w, c] : t.terms())
        if (w.size() <= k) r.add_term(w, c);
    return r;
}

TensorElem sym(FieldSpec field, std::vector<VertexId> multiset) {
    if (multiset.empty()) fail(ErrorKind::EmptyMultiset, "Sym of an empty multiset");
    std::sort(multiset.begin(), multiset.end());
    // prod_v m_v! reduced into the field
    mpz_class coeff = 1;
    for (std::size_t i = 0; i < multiset.size();) {
        std::size_t j = i;
        while (j < multiset.size() && multiset[j] == multiset[i]) ++j;
        mpz_class f;
        mpz_fac_ui(f.get_mpz_t(), j - i);
        coeff *= f;
        i = j;
    }
    const Scalar c = Scalar::from_mpz(field, coeff);
    TensorElem t(field);
    if (c.is_zero()) return t;
    do {
        t.add_term(multiset, c);
    } while (std::next_permutation(multiset.begin(), multiset.end()));
    return t;
}

bool sym_vanishes(const std::vector<VertexId>& multiset, FieldSpec field) {
    if (multiset.empty()) fail(ErrorKind::EmptyMultiset, "Sym of an empty multiset");
    const std::uint32_t p = field.characteristic();
    if (p == 0) return false;
    std::map<VertexId, std::size_t> counts;
    for (VertexId v : multiset) ++counts[v];
    return std::any_of(counts.begin(), counts.end(), [p](const auto& kv) { return kv.second >= p; });
}

Scalar inner_product(const TensorElem& s, const TensorElem& t) {
    if (!s.field().is_rationals() || !t.field().is_rationals())
        fail(ErrorKind::FieldMismatch, "inner product is defined over Q only");
    Scalar acc = Scalar::zero(s.field());
    const TensorElem& small = s.support_size() <= t.support_size() ? s : t;
    const TensorElem& large = s.support_size() <= t.support_size() ? t : s;
    for (const auto& [w, c] : small.terms()) {
        auto it = large.terms().find(w);
        if (it != large.terms().end()) acc += c * it->second;
    }
    return acc;
}

Vector WordIndex::coordinates(const TensorElem& t) const {
    Vector v = zero_vector(t.field(), words.size());
    for (const auto& [w, c] : t.terms()) {
        auto it = position.find(w);
        if (it == position.end()) fail(ErrorKind::AmbientMismatch, "word outside the coordinate index");
        v[it->second] = c;
    }
    return v;
}

WordIndex word_index_of(const std::vector<TensorElem>& elems) {
    WordIndex index;
    for (const auto& t : elems)
        for (const auto& [w, c] : t.terms()) index.position.emplace(w, 0);
    for (auto& [w, pos] : index.position) {
        pos = index.words.size();
        index.words.push_back(w);
    }
    return index;
}

SpanCoordinates basis_of_span(FieldSpec field, const std::vector<TensorElem>& elems) {
    SpanCoordinates out{word_index_of(elems), Matrix(field, elems.size(), 0)};
    out.matrix = Matrix(field, elems.size(), out.index.size());
    for (std::size_t i = 0; i < elems.size(); ++i) {
        require_same_field(field, elems[i].field());
        const Vector row = out.index.coordinates(elems[i]);
        for (std::size_t j = 0; j < row.size(); ++j) out.matrix(i, j) = row[j];
    }
    return out;
}

}  // namespace tcyc
