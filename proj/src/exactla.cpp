#include "tensorcycle/exactla.hpp"

#include <algorithm>
#include <string>

namespace tcyc {

namespace {

void require_dims(bool ok, const char* what) {
    if (!ok) fail(ErrorKind::AmbientMismatch, what);
}

// Row-major elimination on a raw grid. Ops supplies the field operations for
// the representation T (mpq_class or a residue).
template <class T, class Ops>
std::vector<std::size_t> eliminate(std::vector<T>& a, std::size_t rows, std::size_t cols, const Ops& ops) {
    std::vector<std::size_t> pivots;
    std::size_t r = 0;
    for (std::size_t c = 0; c < cols && r < rows; ++c) {
        std::size_t found = rows;
        for (std::size_t i = r; i < rows; ++i)
            if (!ops.is_zero(a[i * cols + c])) {
                found = i;
                break;
            }
        if (found == rows) continue;
        if (found != r)
            for (std::size_t j = 0; j < cols; ++j) std::swap(a[found * cols + j], a[r * cols + j]);
        const T inv = ops.inverse(a[r * cols + c]);
        for (std::size_t j = c; j < cols; ++j) a[r * cols + j] = ops.mul(a[r * cols + j], inv);
        for (std::size_t i = 0; i < rows; ++i) {
            if (i == r || ops.is_zero(a[i * cols + c])) continue;
            const T factor = a[i * cols + c];
            for (std::size_t j = c; j < cols; ++j)
                if (!ops.is_zero(a[r * cols + j])) a[i * cols + j] = ops.sub(a[i * cols + j], ops.mul(factor, a[r * cols + j]));
        }
        pivots.push_back(c);
        ++r;
    }
    return pivots;
}

struct RationalOps {
    bool is_zero(const mpq_class& x) const { return sgn(x) == 0; }
    mpq_class inverse(const mpq_class& x) const { return 1 / x; }
    mpq_class mul(const mpq_class& x, const mpq_class& y) const { return x * y; }
    mpq_class sub(const mpq_class& x, const mpq_class& y) const { return x - y; }
};

struct ModOps {
    std::uint64_t p;
    bool is_zero(std::uint32_t x) const { return x == 0; }
    std::uint32_t mul(std::uint32_t x, std::uint32_t y) const {
        return static_cast<std::uint32_t>(std::uint64_t{x} * y % p);
    }
    std::uint32_t sub(std::uint32_t x, std::uint32_t y) const {
        return static_cast<std::uint32_t>(x >= y ? x - y : x + p - y);
    }
    std::uint32_t inverse(std::uint32_t x) const {
        std::uint64_t result = 1, base = x, e = p - 2;
        while (e) {
            if (e & 1) result = result * base % p;
            base = base * base % p;
            e >>= 1;
        }
        return static_cast<std::uint32_t>(result);
    }
};

mpz_class lcm_of_denominators(const Matrix& m) {
    mpz_class l = 1;
    for (std::size_t i = 0; i < m.rows(); ++i)
        for (std::size_t j = 0; j < m.cols(); ++j) mpz_lcm(l.get_mpz_t(), l.get_mpz_t(), m(i, j).rational().get_den_mpz_t());
    return l;
}

std::vector<mpq_class> to_rational_grid(const Matrix& m) {
    std::vector<mpq_class> g;
    g.reserve(m.rows() * m.cols());
    for (std::size_t i = 0; i < m.rows(); ++i)
        for (std::size_t j = 0; j < m.cols(); ++j) g.push_back(m(i, j).rational());
    return g;
}

void require_rational(const Matrix& m, const char* op) {
    if (!m.field().is_rationals()) fail(ErrorKind::FieldMismatch, std::string(op) + " requires Q, got " + m.field().to_string());
}

}  // namespace

Vector zero_vector(FieldSpec field, std::size_t n) { return Vector(n, Scalar::zero(field)); }

Vector unit_vector(FieldSpec field, std::size_t n, std::size_t index) {
    Vector v = zero_vector(field, n);
    v.at(index) = Scalar::one(field);
    return v;
}

Vector int_vector(FieldSpec field, std::initializer_list<long> values) {
    Vector v;
    for (long x : values) v.push_back(Scalar::from_int(field, x));
    return v;
}

bool is_zero(const Vector& v) {
    return std::all_of(v.begin(), v.end(), [](const Scalar& s) { return s.is_zero(); });
}

Scalar dot(const Vector& a, const Vector& b) {
    require_dims(a.size() == b.size(), "dot: length mismatch");
    if (a.empty()) return Scalar();
    Scalar s = Scalar::zero(a.front().field());
    for (std::size_t i = 0; i < a.size(); ++i)
        if (!a[i].is_zero() && !b[i].is_zero()) s += a[i] * b[i];
    return s;
}

Vector add(const Vector& a, const Vector& b) {
    require_dims(a.size() == b.size(), "add: length mismatch");
    Vector r(a);
    for (std::size_t i = 0; i < a.size(); ++i) r[i] += b[i];
    return r;
}

Vector subtract(const Vector& a, const Vector& b) {
    require_dims(a.size() == b.size(), "subtract: length mismatch");
    Vector r(a);
    for (std::size_t i = 0; i < a.size(); ++i) r[i] -= b[i];
    return r;
}

Vector scale(const Scalar& c, const Vector& v) {
    Vector r;
    r.reserve(v.size());
    for (const auto& x : v) r.push_back(c * x);
    return r;
}

Matrix::Matrix(FieldSpec field, std::size_t rows, std::size_t cols)
    : field_(field), rows_(rows), cols_(cols), entries_(rows * cols, Scalar::zero(field)) {}

Matrix Matrix::identity(FieldSpec field, std::size_t n) {
    Matrix m(field, n, n);
    for (std::size_t i = 0; i < n; ++i) m(i, i) = Scalar::one(field);
    return m;
}

Matrix Matrix::from_rows(FieldSpec field, std::size_t cols, const std::vector<Vector>& rows) {
    Matrix m(field, rows.size(), cols);
    for (std::size_t i = 0; i < rows.size(); ++i) {
        require_dims(rows[i].size() == cols, "from_rows: ragged rows");
        for (std::size_t j = 0; j < cols; ++j) {
            require_same_field(field, rows[i][j].field());
            m(i, j) = rows[i][j];
        }
    }
    return m;
}

Matrix Matrix::from_columns(FieldSpec field, std::size_t rows, const std::vector<Vector>& cols) {
    return from_rows(field, rows, cols).transpose();
}

Matrix Matrix::from_ints(FieldSpec field, std::initializer_list<std::initializer_list<long>> rows) {
    std::vector<std::vector<long>> v;
    for (const auto& r : rows) v.emplace_back(r);
    return from_ints(field, v);
}

Matrix Matrix::from_ints(FieldSpec field, const std::vector<std::vector<long>>& rows) {
    const std::size_t cols = rows.empty() ? 0 : rows.front().size();
    Matrix m(field, rows.size(), cols);
    for (std::size_t i = 0; i < rows.size(); ++i) {
        require_dims(rows[i].size() == cols, "from_ints: ragged rows");
        for (std::size_t j = 0; j < cols; ++j) m(i, j) = Scalar::from_int(field, rows[i][j]);
    }
    return m;
}

Vector Matrix::row(std::size_t r) const {
    return Vector(entries_.begin() + static_cast<std::ptrdiff_t>(r * cols_),
                  entries_.begin() + static_cast<std::ptrdiff_t>((r + 1) * cols_));
}

Vector Matrix::column(std::size_t c) const {
    Vector v;
    v.reserve(rows_);
    for (std::size_t i = 0; i < rows_; ++i) v.push_back((*this)(i, c));
    return v;
}

std::vector<Vector> Matrix::row_vectors() const {
    std::vector<Vector> out;
    out.reserve(rows_);
    for (std::size_t i = 0; i < rows_; ++i) out.push_back(row(i));
    return out;
}

Matrix Matrix::transpose() const {
    Matrix t(field_, cols_, rows_);
    for (std::size_t i = 0; i < rows_; ++i)
        for (std::size_t j = 0; j < cols_; ++j) t(j, i) = (*this)(i, j);
    return t;
}

Vector Matrix::apply(const Vector& x) const {
    require_dims(x.size() == cols_, "apply: dimension mismatch");
    Vector y = zero_vector(field_, rows_);
    for (std::size_t j = 0; j < cols_; ++j) {
        if (x[j].is_zero()) continue;
        for (std::size_t i = 0; i < rows_; ++i)
            if (!(*this)(i, j).is_zero()) y[i] += (*this)(i, j) * x[j];
    }
    return y;
}

bool Matrix::is_zero() const {
    return std::all_of(entries_.begin(), entries_.end(), [](const Scalar& s) { return s.is_zero(); });
}

bool Matrix::is_symmetric() const {
    if (!is_square()) return false;
    for (std::size_t i = 0; i < rows_; ++i)
        for (std::size_t j = i + 1; j < cols_; ++j)
            if (!((*this)(i, j) == (*this)(j, i))) return false;
    return true;
}

Matrix Matrix::row_range(std::size_t begin, std::size_t end) const {
    Matrix m(field_, end - begin, cols_);
    for (std::size_t i = begin; i < end; ++i)
        for (std::size_t j = 0; j < cols_; ++j) m(i - begin, j) = (*this)(i, j);
    return m;
}

bool operator==(const Matrix& a, const Matrix& b) {
    return a.field_ == b.field_ && a.rows_ == b.rows_ && a.cols_ == b.cols_ && a.entries_ == b.entries_;
}

Matrix operator+(const Matrix& a, const Matrix& b) {
    require_dims(a.rows_ == b.rows_ && a.cols_ == b.cols_, "matrix +: shape mismatch");
    Matrix r(a);
    for (std::size_t k = 0; k < r.entries_.size(); ++k) r.entries_[k] += b.entries_[k];
    return r;
}

Matrix operator-(const Matrix& a, const Matrix& b) {
    require_dims(a.rows_ == b.rows_ && a.cols_ == b.cols_, "matrix -: shape mismatch");
    Matrix r(a);
    for (std::size_t k = 0; k < r.entries_.size(); ++k) r.entries_[k] -= b.entries_[k];
    return r;
}

Matrix operator*(const Matrix& a, const Matrix& b) {
    require_dims(a.cols_ == b.rows_, "matrix *: shape mismatch");
    require_same_field(a.field_, b.field_);
    Matrix r(a.field_, a.rows_, b.cols_);
    for (std::size_t i = 0; i < a.rows_; ++i)
        for (std::size_t k = 0; k < a.cols_; ++k) {
            const Scalar& aik = a(i, k);
            if (aik.is_zero()) continue;
            for (std::size_t j = 0; j < b.cols_; ++j)
                if (!b(k, j).is_zero()) r(i, j) += aik * b(k, j);
        }
    return r;
}

Matrix operator*(const Scalar& c, const Matrix& m) {
    Matrix r(m);
    for (auto& x : r.entries_) x = c * x;
    return r;
}

Matrix vstack(const Matrix& a, const Matrix& b) {
    require_dims(a.cols() == b.cols(), "vstack: column mismatch");
    Matrix m(a.field(), a.rows() + b.rows(), a.cols());
    for (std::size_t i = 0; i < a.rows(); ++i)
        for (std::size_t j = 0; j < a.cols(); ++j) m(i, j) = a(i, j);
    for (std::size_t i = 0; i < b.rows(); ++i)
        for (std::size_t j = 0; j < b.cols(); ++j) m(a.rows() + i, j) = b(i, j);
    return m;
}

RrefResult rref(const Matrix& m) {
    const FieldSpec f = m.field();
    const std::size_t rows = m.rows(), cols = m.cols();
    RrefResult result{Matrix(f, rows, cols), 0, {}};
    if (f.is_rationals()) {
        auto grid = to_rational_grid(m);
        result.pivots = eliminate(grid, rows, cols, RationalOps{});
        for (std::size_t i = 0; i < rows; ++i)
            for (std::size_t j = 0; j < cols; ++j) result.rref(i, j) = Scalar::from_rational(f, grid[i * cols + j]);
    } else {
        std::vector<std::uint32_t> grid(rows * cols);
        for (std::size_t i = 0; i < rows; ++i)
            for (std::size_t j = 0; j < cols; ++j) grid[i * cols + j] = m(i, j).residue();
        result.pivots = eliminate(grid, rows, cols, ModOps{f.characteristic()});
        for (std::size_t i = 0; i < rows; ++i)
            for (std::size_t j = 0; j < cols; ++j) result.rref(i, j) = Scalar::from_int(f, grid[i * cols + j]);
    }
    result.rank = result.pivots.size();
    return result;
}

std::size_t rank(const Matrix& m) { return rref(m).rank; }

Subspace::Subspace(FieldSpec field, std::size_t ambient_dim) : basis_(field, 0, ambient_dim) {}

Subspace Subspace::full(FieldSpec field, std::size_t ambient_dim) {
    Subspace s(field, ambient_dim);
    s.basis_ = Matrix::identity(field, ambient_dim);
    return s;
}

Subspace Subspace::span(FieldSpec field, std::size_t ambient_dim, const std::vector<Vector>& generators) {
    return row_space(Matrix::from_rows(field, ambient_dim, generators));
}

Subspace Subspace::row_space(const Matrix& m) {
    RrefResult r = rref(m);
    Subspace s(m.field(), m.cols());
    s.basis_ = r.rref.row_range(0, r.rank);
    return s;
}

bool Subspace::contains(const Vector& v) const {
    if (v.size() != ambient_dim()) fail(ErrorKind::AmbientMismatch, "member: ambient dimension mismatch");
    // Reduce v against the RREF rows; v is in the span iff the residual vanishes.
    Vector residual(v);
    for (std::size_t i = 0; i < basis_.rows(); ++i) {
        std::size_t pivot = 0;
        while (basis_(i, pivot).is_zero()) ++pivot;
        const Scalar c = residual[pivot];
        if (c.is_zero()) continue;
        for (std::size_t j = pivot; j < ambient_dim(); ++j) residual[j] -= c * basis_(i, j);
    }
    return is_zero(residual);
}

bool Subspace::contains(const Subspace& other) const {
    if (other.ambient_dim() != ambient_dim()) fail(ErrorKind::AmbientMismatch, "contains: ambient dimension mismatch");
    for (std::size_t i = 0; i < other.dim(); ++i)
        if (!contains(other.basis_.row(i))) return false;
    return true;
}

Subspace kernel_basis(const Matrix& m) {
    const RrefResult r = rref(m);
    const FieldSpec f = m.field();
    std::vector<bool> is_pivot(m.cols(), false);
    for (auto p : r.pivots) is_pivot[p] = true;
    std::vector<Vector> gens;
    for (std::size_t free = 0; free < m.cols(); ++free) {
        if (is_pivot[free]) continue;
        Vector v = unit_vector(f, m.cols(), free);
        for (std::size_t i = 0; i < r.rank; ++i) v[r.pivots[i]] = -r.rref(i, free);
        gens.push_back(std::move(v));
    }
    return Subspace::span(f, m.cols(), gens);
}

Subspace image_basis(const Matrix& m) { return Subspace::row_space(m.transpose()); }

Subspace intersect(const Subspace& a, const Subspace& b) {
    if (a.ambient_dim() != b.ambient_dim()) fail(ErrorKind::AmbientMismatch, "intersect: ambient dimension mismatch");
    require_same_field(a.field(), b.field());
    const FieldSpec f = a.field();
    const std::size_t n = a.ambient_dim();
    // [A | A ; B | 0]: rows of the RREF with zero left half carry a basis of a ∩ b.
    Matrix block(f, a.dim() + b.dim(), 2 * n);
    for (std::size_t i = 0; i < a.dim(); ++i)
        for (std::size_t j = 0; j < n; ++j) {
            block(i, j) = a.basis()(i, j);
            block(i, n + j) = a.basis()(i, j);
        }
    for (std::size_t i = 0; i < b.dim(); ++i)
        for (std::size_t j = 0; j < n; ++j) block(a.dim() + i, j) = b.basis()(i, j);
    const RrefResult r = rref(block);
    std::vector<Vector> gens;
    for (std::size_t i = 0; i < r.rank; ++i) {
        if (r.pivots[i] < n) continue;
        Vector v;
        for (std::size_t j = 0; j < n; ++j) v.push_back(r.rref(i, n + j));
        gens.push_back(std::move(v));
    }
    return Subspace::span(f, n, gens);
}

Subspace sum(const Subspace& a, const Subspace& b) {
    if (a.ambient_dim() != b.ambient_dim()) fail(ErrorKind::AmbientMismatch, "sum: ambient dimension mismatch");
    return Subspace::row_space(vstack(a.basis(), b.basis()));
}

bool member(const Subspace& s, const Vector& v) { return s.contains(v); }

std::optional<Vector> solve(const Matrix& m, const Vector& b) {
    require_dims(b.size() == m.rows(), "solve: rhs length mismatch");
    const FieldSpec f = m.field();
    Matrix aug(f, m.rows(), m.cols() + 1);
    for (std::size_t i = 0; i < m.rows(); ++i) {
        for (std::size_t j = 0; j < m.cols(); ++j) aug(i, j) = m(i, j);
        aug(i, m.cols()) = b[i];
    }
    const RrefResult r = rref(aug);
    if (!r.pivots.empty() && r.pivots.back() == m.cols()) return std::nullopt;
    Vector x = zero_vector(f, m.cols());
    for (std::size_t i = 0; i < r.rank; ++i) x[r.pivots[i]] = r.rref(i, m.cols());
    return x;
}

Scalar determinant(const Matrix& m) {
    if (!m.is_square()) fail(ErrorKind::NotSquare, "determinant of non-square matrix");
    const FieldSpec f = m.field();
    const std::size_t n = m.rows();
    if (n == 0) return Scalar::one(f);
    if (!f.is_rationals()) {
        const RrefResult r = rref(m);
        if (r.rank < n) return Scalar::zero(f);
        // Plain elimination with row swaps to accumulate the pivot product.
        Matrix a(m);
        Scalar det = Scalar::one(f);
        for (std::size_t c = 0; c < n; ++c) {
            std::size_t p = c;
            while (a(p, c).is_zero()) ++p;
            if (p != c) {
                for (std::size_t j = 0; j < n; ++j) std::swap(a(p, j), a(c, j));
                det = -det;
            }
            det *= a(c, c);
            const Scalar inv = a(c, c).inverse();
            for (std::size_t i = c + 1; i < n; ++i) {
                if (a(i, c).is_zero()) continue;
                const Scalar factor = a(i, c) * inv;
                for (std::size_t j = c; j < n; ++j) a(i, j) -= factor * a(c, j);
            }
        }
        return det;
    }
    // Bareiss on the integer matrix obtained by clearing each row's denominators.
    std::vector<mpz_class> a(n * n);
    mpz_class scale_product = 1;
    for (std::size_t i = 0; i < n; ++i) {
        mpz_class l = 1;
        for (std::size_t j = 0; j < n; ++j) mpz_lcm(l.get_mpz_t(), l.get_mpz_t(), m(i, j).rational().get_den_mpz_t());
        scale_product *= l;
        for (std::size_t j = 0; j < n; ++j) {
            const mpq_class& q = m(i, j).rational();
            a[i * n + j] = q.get_num() * (l / q.get_den());
        }
    }
    int sign = 1;
    mpz_class prev = 1;
    for (std::size_t k = 0; k + 1 < n; ++k) {
        if (a[k * n + k] == 0) {
            std::size_t p = k + 1;
            while (p < n && a[p * n + k] == 0) ++p;
            if (p == n) return Scalar::zero(f);
            for (std::size_t j = 0; j < n; ++j) std::swap(a[p * n + j], a[k * n + j]);
            sign = -sign;
        }
        for (std::size_t i = k + 1; i < n; ++i) {
            for (std::size_t j = k + 1; j < n; ++j) {
                mpz_class v = a[i * n + j] * a[k * n + k] - a[i * n + k] * a[k * n + j];
                mpz_divexact(v.get_mpz_t(), v.get_mpz_t(), prev.get_mpz_t());
                a[i * n + j] = v;
            }
        }
        prev = a[k * n + k];
    }
    mpq_class det(a[n * n - 1] * sign, scale_product);
    det.canonicalize();
    return Scalar::from_rational(f, det);
}

Scalar quadratic_form(const Matrix& m, const Vector& v) { return dot(v, m.apply(v)); }

PsdCertificate psd_certificate(const Matrix& m) {
    require_rational(m, "psd_certificate");
    if (!m.is_symmetric()) fail(ErrorKind::NotSymmetric, "psd_certificate on a non-symmetric matrix");
    const FieldSpec f = m.field();
    const std::size_t n = m.rows();
    std::vector<mpq_class> s = to_rational_grid(m);
    std::vector<bool> done(n, false);
    // Pivot history for witness back-substitution: index, pivot value, pivot row.
    struct Step {
        std::size_t index;
        mpq_class value;
        std::vector<mpq_class> row;
    };
    std::vector<Step> steps;
    PsdCertificate cert;

    auto back_substitute = [&](std::vector<mpq_class> x) {
        // x is set on the residual coordinates; solve eliminated coordinates in reverse.
        for (auto it = steps.rbegin(); it != steps.rend(); ++it) {
            mpq_class acc = 0;
            for (std::size_t j = 0; j < n; ++j)
                if (j != it->index) acc += it->row[j] * x[j];
            x[it->index] = -acc / it->value;
        }
        Vector w;
        for (auto& q : x) w.push_back(Scalar::from_rational(f, q));
        return w;
    };

    for (std::size_t step = 0; step < n; ++step) {
        std::size_t best = n;
        for (std::size_t i = 0; i < n; ++i)
            if (!done[i] && (best == n || s[i * n + i] > s[best * n + best])) best = i;
        const mpq_class d = s[best * n + best];
        if (sgn(d) < 0) {
            std::vector<mpq_class> x(n, 0);
            x[best] = 1;
            cert.psd = false;
            cert.witness = back_substitute(std::move(x));
        } else if (sgn(d) == 0) {
            // Every remaining diagonal entry is <= 0; prefer a strictly negative one.
            std::size_t neg = n, off_i = n, off_j = n;
            for (std::size_t i = 0; i < n; ++i) {
                if (done[i]) continue;
                if (sgn(s[i * n + i]) < 0 && neg == n) neg = i;
                for (std::size_t j = 0; j < n; ++j)
                    if (!done[j] && j != i && sgn(s[i * n + j]) != 0 && off_i == n) {
                        off_i = i;
                        off_j = j;
                    }
            }
            if (neg == n && off_i == n) {
                // Residual is identically zero: PSD with zero pivots for the rest.
                for (std::size_t i = 0; i < n; ++i)
                    if (!done[i]) {
                        cert.order.push_back(i);
                        cert.pivots.push_back(Scalar::zero(f));
                    }
                cert.psd = true;
                break;
            }
            std::vector<mpq_class> x(n, 0);
            if (neg != n) {
                x[neg] = 1;
            } else {
                // Zero diagonal with nonzero off-diagonal b: x_i = 1, x_j = -b gives -2 b^2.
                x[off_i] = 1;
                x[off_j] = -s[off_i * n + off_j];
            }
            cert.psd = false;
            cert.witness = back_substitute(std::move(x));
        } else {
            std::vector<mpq_class> row(s.begin() + static_cast<std::ptrdiff_t>(best * n),
                                       s.begin() + static_cast<std::ptrdiff_t>((best + 1) * n));
            done[best] = true;
            for (std::size_t i = 0; i < n; ++i) {
                if (done[i] || sgn(row[i]) == 0) continue;
                const mpq_class factor = row[i] / d;
                for (std::size_t j = 0; j < n; ++j)
                    if (!done[j]) s[i * n + j] -= factor * row[j];
            }
            for (std::size_t j = 0; j < n; ++j)
                if (done[j] && j != best) row[j] = 0;
            cert.order.push_back(best);
            cert.pivots.push_back(Scalar::from_rational(f, d));
            steps.push_back(Step{best, d, std::move(row)});
            if (step + 1 == n) cert.psd = true;
            continue;
        }
        break;
    }
    if (n == 0) cert.psd = true;
    if (!cert.psd) {
        cert.pivots.clear();
        cert.order.clear();
        cert.witness_value = quadratic_form(m, cert.witness);
        ensure(cert.witness_value.sign() < 0, "psd_certificate: witness has nonnegative quadratic form");
    }
    return cert;
}

std::vector<Scalar> char_poly(const Matrix& m) {
    require_rational(m, "char_poly");
    if (!m.is_square()) fail(ErrorKind::NotSquare, "char_poly of non-square matrix");
    const FieldSpec f = m.field();
    const std::size_t n = m.rows();
    std::vector<Scalar> c(n + 1, Scalar::zero(f));
    c[n] = Scalar::one(f);
    // M_k = A M_{k-1} + c_{n-k+1} I,  c_{n-k} = -tr(A M_k) / k.
    Matrix mk(f, n, n);
    for (std::size_t k = 1; k <= n; ++k) {
        mk = m * mk;
        for (std::size_t i = 0; i < n; ++i) mk(i, i) += c[n - k + 1];
        const Matrix amk = m * mk;
        Scalar trace = Scalar::zero(f);
        for (std::size_t i = 0; i < n; ++i) trace += amk(i, i);
        c[n - k] = -(trace / Scalar::from_int(f, static_cast<long>(k)));
    }
    return c;
}

namespace {

// Divides the integer polynomial (ascending coefficients) by (x - t); returns
// false when t is not a root.
bool divide_root(std::vector<mpz_class>& poly, const mpz_class& t) {
    const std::size_t deg = poly.size() - 1;
    std::vector<mpz_class> q(deg);
    mpz_class carry = 0;
    for (std::size_t i = deg + 1; i-- > 0;) {
        const mpz_class v = poly[i] + carry * t;
        if (i == 0) {
            if (v != 0) return false;
        } else {
            q[i - 1] = v;
        }
        carry = v;
    }
    poly = std::move(q);
    return true;
}

constexpr unsigned long kRootSearchLimit = 4'000'000;

}  // namespace

Spectrum rational_spectrum(const Matrix& m) {
    require_rational(m, "rational_spectrum");
    if (!m.is_symmetric()) fail(ErrorKind::NotSymmetric, "rational_spectrum on a non-symmetric matrix");
    const FieldSpec f = m.field();
    const std::size_t n = m.rows();
    Spectrum out;
    out.rank = rank(m);
    out.psd = psd_certificate(m).psd;

    // Eigenvalues of the integer matrix L*m are algebraic integers, so rational
    // ones are integers bounded by the largest absolute row sum.
    const mpz_class l = lcm_of_denominators(m);
    const Matrix scaled = Scalar::from_mpz(f, l) * m;
    std::vector<mpz_class> poly;
    for (const auto& coeff : char_poly(scaled)) poly.push_back(coeff.rational().get_num());
    mpz_class bound = 0;
    for (std::size_t i = 0; i < n; ++i) {
        mpz_class row_sum = 0;
        for (std::size_t j = 0; j < n; ++j) row_sum += abs(scaled(i, j).rational().get_num());
        if (row_sum > bound) bound = row_sum;
    }

    std::vector<std::pair<mpz_class, std::size_t>> roots;
    std::size_t zero_mult = 0;
    while (poly.size() > 1 && poly.front() == 0) {
        poly.erase(poly.begin());
        ++zero_mult;
    }
    if (zero_mult) roots.emplace_back(0, zero_mult);
    if (poly.size() > 1) {
        if (bound > kRootSearchLimit) return out;
        const unsigned long limit = bound.get_ui();
        for (unsigned long t = 1; t <= limit && poly.size() > 1; ++t) {
            for (long sign : {1L, -1L}) {
                const mpz_class root = mpz_class(t) * sign;
                if (poly.size() <= 1 || !mpz_divisible_ui_p(poly.front().get_mpz_t(), t)) continue;
                std::size_t mult = 0;
                while (poly.size() > 1 && divide_root(poly, root)) ++mult;
                if (mult) roots.emplace_back(root, mult);
            }
        }
    }
    std::size_t total = 0;
    for (const auto& [root, mult] : roots) total += mult;
    if (total != n) return out;
    std::sort(roots.begin(), roots.end(), [](const auto& a, const auto& b) { return a.first < b.first; });
    out.full = true;
    for (const auto& [root, mult] : roots) {
        mpq_class value(root, l);
        value.canonicalize();
        out.eigenvalues.push_back(Eigenvalue{Scalar::from_rational(f, value), mult});
    }
    return out;
}

}  // namespace tcyc
