// Acceptance gate: one PASS/FAIL line per criterion, timed against its limit.
// Usage: acceptance <path-to-tcycle>

#include <array>
#include <chrono>
#include <cstdio>
#include <functional>
#include <iostream>
#include <numeric>
#include <sstream>
#include <string>

#include "support.hpp"
#include "tensorcycle/gram.hpp"
#include "tensorcycle/observe.hpp"
#include "tensorcycle/random_instances.hpp"
#include "tensorcycle/verify.hpp"

using namespace test;

namespace {

constexpr std::size_t kPerPair = 200;

struct CorpusEntry {
    std::string name;
    TensorHypergraph h;
    bool standard = false;
};

Rng stream(std::uint32_t family, std::uint32_t tag, FieldSpec f, std::uint32_t i) {
    std::seed_seq seq{0xACCEu, family, tag, f.characteristic(), i};
    return Rng(seq);
}

/// 200 single-construction instances per (construction, field), then 200 mixed
/// and 200 raw instances per field.
const std::vector<CorpusEntry>& corpus() {
    static const std::vector<CorpusEntry> entries = [] {
        std::vector<CorpusEntry> out;
        for (Construction c : kStandardConstructions)
            for (FieldSpec f : kAllFields)
                for (std::uint32_t i = 0; i < kPerPair; ++i) {
                    Rng rng = stream(0, static_cast<std::uint32_t>(c), f, i);
                    out.push_back({std::string(construction_name(c)) + "-" + f.to_string() + "-" + std::to_string(i),
                                   random_standard_instance(rng, c, f), true});
                }
        for (FieldSpec f : kAllFields)
            for (std::uint32_t i = 0; i < kPerPair; ++i) {
                Rng mixed = stream(1, 0, f, i);
                out.push_back({"mixed-" + f.to_string() + "-" + std::to_string(i), random_mixed_instance(mixed, f)});
                Rng raw = stream(2, 0, f, i);
                out.push_back({"raw-" + f.to_string() + "-" + std::to_string(i), random_raw_instance(raw, f)});
            }
        return out;
    }();
    return entries;
}

/// Criterion body: returns an empty string on success, else the first failure.
using Check = std::function<std::string()>;

struct Failure {
    std::string what;
};

void require(bool condition, const std::string& what) {
    if (!condition) throw Failure{what};
}

/// A limit of 0 means the criterion is untimed.
bool run(int id, const char* title, double limit_seconds, const Check& body) {
    const auto start = std::chrono::steady_clock::now();
    std::string failure;
    try {
        failure = body();
    } catch (const Failure& f) {
        failure = f.what;
    } catch (const std::exception& e) {
        failure = std::string("exception: ") + e.what();
    }
    const double seconds = std::chrono::duration<double>(std::chrono::steady_clock::now() - start).count();
    if (failure.empty() && limit_seconds > 0 && seconds >= limit_seconds) failure = "time limit exceeded";
    const std::string limit = limit_seconds > 0 ? "limit " + std::to_string(static_cast<int>(limit_seconds)) + "s" : "no limit";
    std::printf("AC%-2d %s  %-58s %8.3fs (%s)%s%s\n", id, failure.empty() ? "PASS" : "FAIL", title, seconds,
                limit.c_str(), failure.empty() ? "" : "  ", failure.c_str());
    std::fflush(stdout);
    return failure.empty();
}

void check_dims(const AnalysisReport& r, std::array<std::size_t, 5> expected, const std::string& label) {
    const std::array<std::size_t, 5> got{r.q1, r.v_macro, r.c_macro, r.delta, r.dim_z};
    require(got == expected, label + ": (q1, v_macro, c_macro, delta, dim Z) mismatch");
}

void check_spectrum(const TensorHypergraph& h, std::vector<std::pair<long, std::size_t>> expected,
                    const std::string& label) {
    const Spectrum s = structured_spectrum(h).spectrum;
    require(s.full && s.eigenvalues.size() == expected.size(), label + ": spectrum shape");
    for (std::size_t i = 0; i < expected.size(); ++i)
        require(s.eigenvalues[i].value.rational() == expected[i].first &&
                    s.eigenvalues[i].multiplicity == expected[i].second,
                label + ": eigenvalue " + std::to_string(i));
}

std::string capture(const std::string& command) {
    FILE* pipe = popen(command.c_str(), "r");
    if (!pipe) throw Failure{"cannot run " + command};
    std::string out;
    std::array<char, 4096> buffer;
    while (std::size_t n = std::fread(buffer.data(), 1, buffer.size(), pipe)) out.append(buffer.data(), n);
    const int status = pclose(pipe);
    if (status != 0) throw Failure{command + " exited with status " + std::to_string(status)};
    return out;
}

OrientedHypergraph star(std::size_t ground, std::size_t source_size, const std::vector<unsigned>& targets) {
    const std::size_t n = ground + source_size;
    std::vector<std::vector<int>> inc(n, std::vector<int>(targets.size(), 0));
    std::vector<std::string> ids;
    for (std::size_t e = 0; e < targets.size(); ++e) {
        for (std::size_t v = 0; v < ground; ++v)
            if ((targets[e] >> v) & 1u) inc[v][e] = 1;
        for (std::size_t s = ground; s < n; ++s) inc[s][e] = -1;
        ids.push_back("e" + std::to_string(e));
    }
    return OrientedHypergraph(names(n), ids, inc);
}

/// Affine dependence of the indicator vectors, by the oracle rank of the columns (1_H; 1).
bool affinely_dependent(FieldSpec f, std::size_t ground, const std::vector<unsigned>& targets) {
    std::vector<Vector> rows;
    for (unsigned t : targets) {
        Vector v;
        for (std::size_t i = 0; i < ground; ++i) v.push_back(Scalar::from_int(f, (t >> i) & 1u));
        v.push_back(Scalar::one(f));
        rows.push_back(v);
    }
    return oracle::rank(oracle::rows_of(f, ground + 1, rows)) < targets.size();
}

}  // namespace

int main(int argc, char** argv) {
    if (argc != 2) {
        std::cerr << "usage: acceptance <path-to-tcycle>\n";
        return 2;
    }
    const std::string tool = argv[1];
    bool all = true;

    all &= run(1, "triangle example", 1, [] {
        check_dims(analyze(sym_quad_graph(3, cycle_edges(3), Q)), {3, 4, 1, 0, 0}, "K3");
        return std::string();
    });

    all &= run(2, "positive-defect example", 1, [] {
        const TensorHypergraph h = alg_cycle(Q);
        const AnalysisReport r = analyze(h);
        require(r.delta == 1, "delta != 1");
        require(cycle_space(h) == Subspace::span(Q, 2, {ints(Q, {1, 1})}), "Z != span{1_e1 + 1_e2}");
        return std::string();
    });

    all &= run(3, "characteristic-2 degeneration", 1, [] {
        const TensorHypergraph h = sym_quad_graph(1, {{0, 0}, {0, 0}, {0, 0}}, F2);
        const Macrograph m = macrograph(h);
        require(m.vertices.size() == 2 && m.vertices[0].is_zero() && m.vertices[1] == TensorElem::unit(F2),
                "V_macro != {0, 1}");
        const AnalysisReport r = analyze(h);
        require(r.delta == 0 && r.dim_z == 2, "delta or dim Z");
        const Subspace expected = Subspace::span(F2, 3, {ints(F2, {1, -1, 0}), ints(F2, {1, 0, -1})});
        require(cycle_space(h) == expected, "Z != span{1_e1 - 1_ei}");
        return std::string();
    });

    all &= run(4, "oriented-hypergraph example", 1, [] {
        const OrientedHypergraph o = oh_defect();
        const AnalysisReport r = oh_dimension_report(o, Q);
        require(r.delta == 1 && r.dim_z == 1, "delta or dim Z");
        const Subspace expected = Subspace::span(Q, 4, {ints(Q, {1, -1, -1, 1})});
        require(kernel_basis(o.incidence_matrix(Q)) == expected, "Ker(B^oh) != span{(1,-1,-1,1)}");
        require(cycle_space(to_tensor_hg(o, Q)) == expected, "Z(F(H_o)) != Ker(B^oh)");
        return std::string();
    });

    all &= run(5, "vanishing theorem on 4800 single-construction instances", 60, [] {
        for (const CorpusEntry& e : corpus())
            if (e.standard) require(analyze(e.h).delta == 0, e.name + ": delta != 0");
        return std::string();
    });

    all &= run(6, "dimension formula and F2 enumeration", 120, [] {
        for (const CorpusEntry& e : corpus()) {
            const AnalysisReport r = analyze(e.h);
            const std::size_t kernel = oracle::cycle_dim(e.h);
            require(kernel + r.v_macro == r.q1 + r.c_macro + r.delta, e.name + ": dimension formula");
            require(r.v_macro == oracle::macro_vertex_count(e.h) && r.c_macro == oracle::macro_component_count(e.h),
                    e.name + ": macrograph counts");
            if (e.h.field().characteristic() == 2 && r.q1 <= 12)
                require(f2_kernel_count(e.h) == (std::uint64_t{1} << kernel), e.name + ": F2 kernel cardinality");
        }
        return std::string();
    });

    all &= run(7, "extended basis spans the cycle space", 60, [] {
        for (const CorpusEntry& e : corpus()) {
            const FieldSpec f = e.h.field();
            const CycleDecomposition d = cycle_decomposition(e.h);
            std::vector<Vector> basis(d.topological);
            basis.insert(basis.end(), d.lifts.begin(), d.lifts.end());
            const Matrix boundary = oracle::boundary_matrix(e.h);
            require(basis.size() == oracle::nullity(boundary), e.name + ": cardinality != dim Z");
            for (const Vector& z : basis) require(is_zero(boundary.apply(z)), e.name + ": basis vector not a cycle");
            if (basis.empty()) continue;
            require(oracle::rank(oracle::rows_of(f, e.h.edge_count(), basis)) == basis.size(),
                    e.name + ": basis dependent");
            require(Subspace::span(f, e.h.edge_count(), basis) == kernel_basis(tensor_incidence(e.h).matrix),
                    e.name + ": span != Ker");
        }
        return std::string();
    });

    all &= run(8, "Gram spectra of K3, P5, C5, K4", 5, [] {
        const TensorHypergraph k3 = sym_quad_graph(3, complete_edges(3), Q);
        const std::vector<Scalar> p = char_poly(gram(k3).entries);
        // (x - 5)(x - 2)^2 = x^3 - 9x^2 + 24x - 20
        require(p.size() == 4 && p[0].rational() == -20 && p[1].rational() == 24 && p[2].rational() == -9 &&
                    p[3].is_one(),
                "K3 characteristic polynomial");
        require(determinant(gram(k3).entries).rational() == 20, "K3 determinant");
        check_spectrum(sym_quad_graph(5, path_edges(5), Q), {{2, 3}, {6, 1}}, "P5");
        check_spectrum(sym_quad_graph(5, cycle_edges(5), Q), {{2, 4}, {7, 1}}, "C5");
        check_spectrum(sym_quad_graph(4, complete_edges(4), Q), {{2, 5}, {8, 1}}, "K4");
        return std::string();
    });

    all &= run(9, "Gram rank and kernel identities", 30, [] {
        for (const CorpusEntry& e : corpus()) {
            if (!e.h.field().is_rationals()) continue;
            const AnalysisReport r = analyze(e.h);
            const Matrix l = gram(e.h).entries;
            require(oracle::rank(l) + r.c_macro + r.delta == r.v_macro, e.name + ": rank(L)");
            require(kernel_basis(l) == cycle_space(e.h), e.name + ": Ker(L) != Z");
        }
        return std::string();
    });

    all &= run(10, "Loewner chain and rank increments", 60, [] {
        for (const CorpusEntry& e : corpus()) {
            if (!e.h.field().is_rationals()) continue;
            const AnalysisReport r = analyze(e.h);
            const std::vector<FiltrationLevel> levels = degree_filtration(e.h);
            std::size_t previous_rank = 0;
            std::size_t previous_delta = r.v_macro - r.c_macro;
            for (std::size_t k = 0; k < levels.size(); ++k) {
                const Matrix lk = truncated_gram(e.h, k).entries;
                if (k > 0)
                    require(psd_certificate(lk - truncated_gram(e.h, k - 1).entries).psd,
                            e.name + ": Loewner step " + std::to_string(k));
                const std::size_t rk = oracle::rank(lk);
                require(rk - previous_rank == previous_delta - levels[k].delta,
                        e.name + ": rank increment at k = " + std::to_string(k));
                previous_rank = rk;
                previous_delta = levels[k].delta;
            }
            require(rank_increment_check(e.h), e.name + ": library rank increment check");
        }
        return std::string();
    });

    all &= run(11, "classical recovery over F2", 10, [] {
        Rng rng(1111);
        for (int i = 0; i < 50; ++i) {
            const TensorHypergraph h = random_sym_quad_graph(rng, F2, 1 + draw(rng, 6));
            const ClassicalRecovery c = classical_recovery(h);
            // B^cl built here from the edge list.
            Matrix cl(F2, h.vertex_count(), h.edge_count());
            for (std::size_t e = 0; e < h.edge_count(); ++e) {
                const auto& members = std::get<SymQuadEdge>(h.edges()[e].spec).members;
                if (members.size() == 2 && members[0] != members[1])
                    for (VertexId v : members) cl(v, e) = Scalar::one(F2);
            }
            require(c.observed == cl, "observed matrix != B^cl on graph " + std::to_string(i));
            require(c.match && c.observed_kernel == kernel_basis(cl), "kernels differ on graph " + std::to_string(i));
        }
        const ClassicalRecovery k3 = classical_recovery(sym_quad_graph(3, cycle_edges(3), F2));
        require(k3.observed_kernel == Subspace::span(F2, 3, {ints(F2, {1, 1, 1})}), "K3 recovered cycle space");
        return std::string();
    });

    all &= run(12, "star minimality and affine dependence", 60, [] {
        std::size_t positive = 0;
        for (FieldSpec f : kAllFields)
            for (std::size_t ground = 1; ground <= 4; ++ground)
                for (std::size_t source = 1; source <= 2; ++source) {
                    const unsigned subsets = 1u << ground;
                    std::vector<unsigned> t;
                    const std::function<void(unsigned)> extend = [&](unsigned next) {
                        if (!t.empty()) {
                            const OrientedHypergraph o = star(ground, source, t);
                            const auto s = star_analysis(o, f);
                            require(s.has_value(), "star not recognized");
                            const std::size_t delta = oh_dimension_report(o, f).delta;
                            require(s->delta == delta, "star delta != analysis delta");
                            require((delta > 0) == affinely_dependent(f, ground, t), "delta > 0 <=> affine dependence");
                            require(delta == 0 || t.size() >= 4, "delta > 0 with r < 4");
                            if (delta > 0) ++positive;
                        }
                        if (t.size() == 4) return;
                        for (unsigned x = next; x < subsets; ++x) {
                            t.push_back(x);
                            extend(x + 1);
                            t.pop_back();
                        }
                    };
                    extend(0);
                }
        require(positive > 0, "no positive-defect star found");
        Rng rng(1212);
        for (int i = 0; i < 3000; ++i) {
            const FieldSpec f = kAllFields[i % 4];
            const TensorHypergraph h = i % 3 == 0   ? random_raw_instance(rng, f)
                                       : i % 3 == 1 ? random_mixed_instance(rng, f)
                                                    : to_tensor_hg(random_oriented(rng, 1 + draw(rng, 5), draw(rng, 7)), f);
            const AnalysisReport r = analyze(h);
            require(r.delta == 0 || (r.q1 >= 2 && r.v_macro >= 3), "minimality counterexample " + std::to_string(i));
        }
        return std::string();
    });

    all &= run(13, "isomorphism invariance, 10 relabelings each", 30, [] {
        Rng rng(1313);
        for (const CorpusEntry& e : corpus()) {
            const AnalysisReport r = analyze(e.h);
            std::vector<VertexId> vertices(e.h.vertex_count());
            std::vector<std::size_t> edges(e.h.edge_count());
            for (int round = 0; round < 10; ++round) {
                std::iota(vertices.begin(), vertices.end(), 0);
                std::iota(edges.begin(), edges.end(), 0);
                std::shuffle(vertices.begin(), vertices.end(), rng);
                std::shuffle(edges.begin(), edges.end(), rng);
                require(analyze(relabel(e.h, vertices, edges)) == r, e.name + ": analysis changed");
            }
        }
        return std::string();
    });

    all &= run(14, "verify --random 200 --seed 42 is deterministic", 0, [&tool] {
        const std::string command = "'" + tool + "' verify --random 200 --seed 42";
        const std::string first = capture(command), second = capture(command);
        require(!first.empty(), "empty report");
        require(first == second, "reports differ");
        return std::string();
    });

    std::printf("%s\n", all ? "ACCEPTANCE PASS" : "ACCEPTANCE FAIL");
    return all ? 0 : 1;
}
