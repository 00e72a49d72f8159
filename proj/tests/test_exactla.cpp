#include <doctest.h>

#include <random>

#include "support.hpp"

using namespace test;

namespace {

Matrix random_matrix(std::mt19937_64& rng, FieldSpec f, std::size_t rows, std::size_t cols, long spread) {
    Matrix m(f, rows, cols);
    for (std::size_t i = 0; i < rows; ++i)
        for (std::size_t j = 0; j < cols; ++j)
            m(i, j) = Scalar::from_int(f, static_cast<long>(rng() % (2 * spread + 1)) - spread);
    return m;
}

/// Low-rank matrices are the interesting ones: product of thin factors.
Matrix random_low_rank(std::mt19937_64& rng, FieldSpec f, std::size_t rows, std::size_t cols) {
    const std::size_t inner = 1 + rng() % 3;
    return random_matrix(rng, f, rows, inner, 2) * random_matrix(rng, f, inner, cols, 2);
}

}  // namespace

TEST_CASE("rank agrees with the independent elimination") {
    std::mt19937_64 rng(11);
    for (FieldSpec f : kAllFields)
        for (int round = 0; round < 150; ++round) {
            const std::size_t rows = 1 + rng() % 6, cols = 1 + rng() % 6;
            const Matrix m = round % 2 ? random_low_rank(rng, f, rows, cols) : random_matrix(rng, f, rows, cols, 2);
            CHECK(rank(m) == oracle::rank(m));
            CHECK(kernel_basis(m).dim() + rank(m) == cols);
            CHECK(image_basis(m).dim() == rank(m));
        }
}

TEST_CASE("kernel vectors are annihilated and rref is idempotent") {
    std::mt19937_64 rng(12);
    for (FieldSpec f : kAllFields)
        for (int round = 0; round < 100; ++round) {
            const Matrix m = random_low_rank(rng, f, 1 + rng() % 5, 1 + rng() % 6);
            for (const Vector& v : kernel_basis(m).basis_vectors()) CHECK(is_zero(m.apply(v)));
            const RrefResult once = rref(m);
            CHECK(rref(once.rref).rref == once.rref);
            CHECK(once.pivots.size() == once.rank);
        }
}

TEST_CASE("subspace intersection and sum satisfy the dimension formula") {
    std::mt19937_64 rng(13);
    for (FieldSpec f : kAllFields)
        for (int round = 0; round < 100; ++round) {
            const std::size_t n = 1 + rng() % 6;
            const Subspace a = Subspace::row_space(random_low_rank(rng, f, 1 + rng() % 4, n));
            const Subspace b = Subspace::row_space(random_low_rank(rng, f, 1 + rng() % 4, n));
            const Subspace cap = intersect(a, b), cup = sum(a, b);
            CHECK(cap.dim() + cup.dim() == a.dim() + b.dim());
            CHECK(a.contains(cap));
            CHECK(b.contains(cap));
            CHECK(cup.contains(a));
            CHECK(cup.contains(b));
            CHECK(intersect(a, b) == intersect(b, a));
        }
}

TEST_CASE("subspace identity is basis independent") {
    const Subspace a = Subspace::span(Q, 3, {ints(Q, {1, 1, 0}), ints(Q, {0, 1, 1})});
    const Subspace b = Subspace::span(Q, 3, {ints(Q, {1, 2, 1}), ints(Q, {1, 0, -1})});
    CHECK(a == b);
    CHECK(a.contains(ints(Q, {1, 0, -1})));
    CHECK(!a.contains(ints(Q, {1, 0, 0})));
    CHECK(Subspace::full(Q, 3).dim() == 3);
    CHECK(Subspace::zero(Q, 3).dim() == 0);
}

TEST_CASE("solve returns a solution or reports inconsistency") {
    const Matrix m = Matrix::from_ints(Q, {{1, 1}, {2, 2}});
    const auto x = solve(m, ints(Q, {3, 6}));
    REQUIRE(x);
    CHECK(m.apply(*x) == ints(Q, {3, 6}));
    CHECK(!solve(m, ints(Q, {3, 5})));
}

TEST_CASE("determinant agrees with the Leibniz expansion") {
    std::mt19937_64 rng(14);
    for (int round = 0; round < 200; ++round) {
        const std::size_t n = 1 + rng() % 5;
        Matrix m = random_matrix(rng, Q, n, n, 4);
        if (round % 3 == 0) m = (Scalar::parse(Q, "1/3")) * m;
        CHECK(determinant(m).rational() == oracle::determinant(m));
    }
    CHECK(determinant(Matrix::from_ints(Q, {{3, 1, 1}, {1, 3, 1}, {1, 1, 3}})).rational() == 20);
    CHECK(determinant(Matrix::from_ints(F3, {{1, 2}, {2, 1}})).residue() == 0);
    CHECK(determinant(Matrix(Q, 0, 0)).is_one());
    CHECK(kind_of([] { determinant(Matrix(Q, 2, 3)); }) == ErrorKind::NotSquare);
}

TEST_CASE("PSD certificate") {
    const PsdCertificate pd = psd_certificate(Matrix::from_ints(Q, {{2, -1}, {-1, 2}}));
    CHECK(pd.psd);
    const PsdCertificate semi = psd_certificate(Matrix::from_ints(Q, {{1, 1}, {1, 1}}));
    CHECK(semi.psd);
    const Matrix indefinite = Matrix::from_ints(Q, {{1, 2}, {2, 1}});
    const PsdCertificate no = psd_certificate(indefinite);
    CHECK(!no.psd);
    CHECK(no.witness_value.sign() < 0);
    CHECK(quadratic_form(indefinite, no.witness) == no.witness_value);
    const PsdCertificate zero_diag = psd_certificate(Matrix::from_ints(Q, {{0, 1}, {1, 0}}));
    CHECK(!zero_diag.psd);
    CHECK(quadratic_form(Matrix::from_ints(Q, {{0, 1}, {1, 0}}), zero_diag.witness).sign() < 0);
    CHECK(kind_of([] { psd_certificate(Matrix::from_ints(Q, {{1, 2}, {0, 1}})); }) == ErrorKind::NotSymmetric);
    CHECK(kind_of([] { psd_certificate(Matrix::from_ints(F5, {{1}})); }) == ErrorKind::FieldMismatch);
}

TEST_CASE("Gram matrices of random integer matrices are PSD") {
    std::mt19937_64 rng(15);
    for (int round = 0; round < 100; ++round) {
        const Matrix b = random_matrix(rng, Q, 1 + rng() % 5, 1 + rng() % 5, 3);
        const Matrix g = b.transpose() * b;
        const PsdCertificate c = psd_certificate(g);
        CHECK(c.psd);
        for (const Scalar& p : c.pivots) CHECK(p.sign() >= 0);
    }
}

TEST_CASE("characteristic polynomial") {
    // (x - 5)(x - 2)^2 = x^3 - 9x^2 + 24x - 20
    const auto k3 = char_poly(Matrix::from_ints(Q, {{3, 1, 1}, {1, 3, 1}, {1, 1, 3}}));
    REQUIRE(k3.size() == 4);
    CHECK(k3[0].rational() == -20);
    CHECK(k3[1].rational() == 24);
    CHECK(k3[2].rational() == -9);
    CHECK(k3[3].rational() == 1);
    std::mt19937_64 rng(16);
    for (int round = 0; round < 50; ++round) {
        const std::size_t n = 1 + rng() % 5;
        const Matrix m = random_matrix(rng, Q, n, n, 3);
        const auto c = char_poly(m);
        const mpq_class sign = n % 2 ? -1 : 1;
        CHECK(c[0].rational() == sign * oracle::determinant(m));
    }
}

TEST_CASE("rational spectrum") {
    const Spectrum k3 = rational_spectrum(Matrix::from_ints(Q, {{3, 1, 1}, {1, 3, 1}, {1, 1, 3}}));
    REQUIRE(k3.full);
    REQUIRE(k3.eigenvalues.size() == 2);
    CHECK(k3.eigenvalues[0].value.rational() == 2);
    CHECK(k3.eigenvalues[0].multiplicity == 2);
    CHECK(k3.eigenvalues[1].value.rational() == 5);
    CHECK(k3.eigenvalues[1].multiplicity == 1);
    CHECK(k3.rank == 3);
    CHECK(k3.psd);

    const Spectrum half = rational_spectrum(Matrix::from_ints(Q, {{1, 1}, {1, 1}}));
    REQUIRE(half.full);
    CHECK(half.eigenvalues[0].value.is_zero());
    CHECK(half.rank == 1);

    // x^2 - 2x - 1 has irrational roots 1 +- sqrt 2.
    const Spectrum partial = rational_spectrum(Matrix::from_ints(Q, {{1, 1}, {1, 0}}));
    CHECK(!partial.full);
    CHECK(partial.eigenvalues.empty());
    CHECK(partial.rank == 2);
    CHECK(!partial.psd);

    const Spectrum scaled = rational_spectrum(Scalar::parse(Q, "1/2") * Matrix::from_ints(Q, {{2, 1}, {1, 2}}));
    REQUIRE(scaled.full);
    CHECK(scaled.eigenvalues[0].value.rational() == mpq_class(1, 2));
    CHECK(scaled.eigenvalues[1].value.rational() == mpq_class(3, 2));
}

TEST_CASE("matrix shape errors") {
    CHECK(kind_of([] { (void)(Matrix(Q, 2, 3) * Matrix(Q, 2, 3)); }) == ErrorKind::AmbientMismatch);
    CHECK(kind_of([] { (void)(Matrix(Q, 2, 2) + Matrix(F2, 2, 2)); }) == ErrorKind::FieldMismatch);
    CHECK(kind_of([] { (void)dot(ints(Q, {1}), ints(Q, {1, 2})); }) == ErrorKind::AmbientMismatch);
}
