#include <doctest.h>

#include <random>

#include "support.hpp"
#include "tensorcycle/observe.hpp"
#include "tensorcycle/random_instances.hpp"

using namespace test;

namespace {

/// dim Ker(rho ∘ ∂_beta) from the oracle rank.
std::size_t observed_dim(const TensorHypergraph& h, const ObservationMap& rho) {
    const TensorIncidence t = tensor_incidence(h);
    return oracle::nullity(observation_matrix(rho, t.index, h.vertex_count(), h.field()) * t.matrix);
}

}  // namespace

TEST_CASE("first-letter observation of the triangle over F2") {
    const TensorHypergraph h = sym_quad_graph(3, cycle_edges(3), F2);
    const ProjectedAnalysis p = projected_analysis(h, FirstLetter{});
    CHECK(p.dim_z_rho == 1);
    CHECK(p.z_rho.contains(ints(F2, {1, 1, 1})));
    CHECK(p.delta_rho == 1);
    CHECK(quotient_dim(h, FirstLetter{}) == 1);
}

TEST_CASE("zero observation sees every edge vector") {
    for (FieldSpec f : kAllFields) {
        const TensorHypergraph h = sym_quad_graph(4, complete_edges(4), f);
        const ProjectedAnalysis p = projected_analysis(h, zero_observation());
        CHECK(p.dim_z_rho == 6);
        CHECK(p.delta_rho == 6);  // |V_macro| - c_macro
        CHECK(quotient_dim(h, zero_observation()) == 6);
    }
}

TEST_CASE("custom linear maps") {
    const TensorHypergraph h = sym_quad_graph(3, cycle_edges(3), Q);
    CustomLinear unit_only{1, {}};
    unit_only.images.emplace(Word{}, ints(Q, {1}));
    CHECK(projected_analysis(h, unit_only).z_rho == projected_analysis(h, DegreeTruncation{0}).z_rho);
    // Reading only the coefficients of ab and bc.
    CustomLinear partial{1, {}};
    partial.images.emplace(Word{0, 1}, ints(Q, {1}));
    partial.images.emplace(Word{1, 2}, ints(Q, {1}));
    const ProjectedAnalysis p = projected_analysis(h, partial);
    CHECK(p.dim_z_rho == 2);
    CHECK(p.z_rho.contains(ints(Q, {1, -1, 0})));
    CHECK(p.z_rho.contains(ints(Q, {0, 0, 1})));
}

TEST_CASE("degree filtration of the triangle") {
    const TensorHypergraph h = sym_quad_graph(3, cycle_edges(3), Q);
    const auto levels = degree_filtration(h);
    REQUIRE(levels.size() == 3);
    CHECK(levels[0].delta == 2);
    CHECK(levels[1].delta == 2);
    CHECK(levels[2].delta == 0);
    CHECK(levels[0].dim_z == 2);
    CHECK(levels[2].dim_z == 0);
    CHECK(levels[0].z.contains(ints(Q, {1, -1, 0})));
    CHECK(graded_quotients(h) == std::vector<std::size_t>{1, 0, 2});
}

TEST_CASE("degree filtration of the alg-cycle example") {
    const TensorHypergraph h = alg_cycle(Q);
    const auto levels = degree_filtration(h);
    REQUIRE(levels.size() == 2);
    CHECK(levels[0].delta == 2);
    CHECK(levels[1].delta == 1);
    CHECK(graded_quotients(h) == std::vector<std::size_t>{0, 1});
}

TEST_CASE("classical recovery over F2") {
    CHECK(classical_recovery(sym_quad_graph(3, cycle_edges(3), F2)).match);
    const ClassicalRecovery loop = classical_recovery(sym_quad_graph(2, {{0, 0}, {0, 1}}, F2));
    CHECK(loop.match);
    CHECK(loop.classical.column(0) == ints(F2, {0, 0}));
    CHECK(loop.observed_kernel.contains(ints(F2, {1, 0})));
    CHECK(kind_of([] { classical_recovery(sym_quad_graph(3, cycle_edges(3), Q)); }) ==
          ErrorKind::WrongCharacteristic);
    CHECK(kind_of([] { classical_recovery(directed_graph(2, {{0, 1}}, F2)); }) == ErrorKind::WrongConstruction);
    Rng rng(51);
    for (int round = 0; round < 100; ++round) {
        const ClassicalRecovery r = classical_recovery(random_sym_quad_graph(rng, F2, 1 + round % 6));
        CHECK(r.match);
        CHECK(r.differences.empty());
        CHECK(r.observed_kernel == r.classical_kernel);
    }
}

TEST_CASE("observed dimensions agree with the oracle on random instances") {
    Rng rng(52);
    for (FieldSpec f : kAllFields)
        for (int round = 0; round < 80; ++round) {
            const TensorHypergraph h = round % 2 ? random_mixed_instance(rng, f) : random_raw_instance(rng, f);
            const AnalysisReport r = analyze(h);
            std::vector<ObservationMap> maps{FirstLetter{}, zero_observation()};
            for (std::size_t k = 0; k <= h.max_degree(); ++k) {
                maps.push_back(DegreeTruncation{k});
                maps.push_back(DegreeComponent{k});
            }
            for (const ObservationMap& rho : maps) {
                const ProjectedAnalysis p = projected_analysis(h, rho);
                CHECK(p.dim_z_rho == observed_dim(h, rho));
                CHECK(p.dim_z_rho + r.v_macro == r.q1 + r.c_macro + p.delta_rho);
                CHECK(p.z_rho.contains(cycle_space(h)));
                CHECK(quotient_dim(h, rho) == p.delta_rho - r.delta);
            }
            const auto levels = degree_filtration(h);
            for (std::size_t k = 1; k < levels.size(); ++k) {
                CHECK(levels[k - 1].z.contains(levels[k].z));
                CHECK(levels[k - 1].delta >= levels[k].delta);
            }
            CHECK(levels.back().delta == r.delta);
            std::size_t total = 0;
            for (std::size_t d : graded_quotients(h)) total += d;
            CHECK(total == r.v_macro - r.c_macro - r.delta);
        }
}
