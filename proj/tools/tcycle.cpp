// tcycle: command-line front end for the tensorcycle library.
//
// Exit codes: 0 success, 2 input error, 3 internal inconsistency or failed verification.

#include <algorithm>
#include <atomic>
#include <filesystem>
#include <fstream>
#include <iostream>
#include <optional>
#include <string>
#include <thread>
#include <vector>

#include <CLI11.hpp>

#include "tensorcycle/gram.hpp"
#include "tensorcycle/instance_io.hpp"
#include "tensorcycle/observe.hpp"
#include "tensorcycle/ohg.hpp"
#include "tensorcycle/verify.hpp"

namespace fs = std::filesystem;
using namespace tcyc;

namespace {

constexpr int kExitInput = 2;
constexpr int kExitInternal = 3;
constexpr std::uint64_t kDefaultSeed = 42;

struct Options {
    std::string path;
    std::vector<std::string> paths;
    std::string field;
    std::string output;
    std::string format = "json";
    std::optional<std::size_t> truncate;
    std::optional<std::size_t> random;
    std::uint64_t seed = kDefaultSeed;
    unsigned jobs = 1;
};

class VerificationFailed : public std::runtime_error {
public:
    using std::runtime_error::runtime_error;
};

std::optional<FieldSpec> field_override(const Options& o) {
    if (o.field.empty()) return std::nullopt;
    return FieldSpec::parse(o.field);
}

void emit(const Json& report, const Options& o) {
    const std::string text = report.dump(2) + "\n";
    if (o.output.empty()) {
        std::cout << text;
        return;
    }
    std::ofstream out(o.output, std::ios::binary);
    if (!out) fail(ErrorKind::ParseError, "cannot write " + o.output);
    out << text;
}

Json macro_vertices_json(const TensorHypergraph& h) {
    Json out = Json::array();
    for (const TensorElem& t : macrograph(h).vertices) out.push_back(tensor_to_json(t, h.vertex_names()));
    return out;
}

Json cmd_analyze(const InstanceFile& file) {
    const TensorHypergraph h = file.hypergraph();
    Json report = report_header("analyze", h, file.is_oriented());
    report["analysis"] = analysis_to_json(analyze(h));
    report["macro_vertices"] = macro_vertices_json(h);
    return report;
}

Json cmd_basis(const InstanceFile& file) {
    const TensorHypergraph h = file.hypergraph();
    Json report = report_header("basis", h, file.is_oriented());
    report["analysis"] = analysis_to_json(analyze(h));
    const CycleDecomposition d = cycle_decomposition(h);
    report["basis"] = Json{{"topological", vectors_to_json(d.topological)}, {"lifted", vectors_to_json(d.lifts)}};
    return report;
}

Json cmd_gram(const InstanceFile& file, std::optional<std::size_t> truncate) {
    const TensorHypergraph h = file.hypergraph();
    Json report = report_header("gram", h, file.is_oriented());
    Json section;
    if (truncate) {
        const Matrix l = truncated_gram(h, *truncate).entries;
        section = Json{{"truncation", *truncate},
                       {"matrix", matrix_to_json(l)},
                       {"rank", rank(l)},
                       {"determinant", determinant(l).to_string()},
                       {"spectrum", spectrum_to_json(rational_spectrum(l))}};
    } else {
        const Matrix l = gram(h).entries;
        const GramRankReport r = gram_rank_report(h);
        const StructuredSpectrum s = structured_spectrum(h);
        static const char* kinds[] = {"loopless_simple", "directed_graph", "general"};
        Json poly = Json::array();
        for (const Scalar& c : char_poly(l)) poly.push_back(c.to_string());
        section = Json{{"truncation", nullptr},
                       {"matrix", matrix_to_json(l)},
                       {"rank", r.rank},
                       {"kernel", matrix_to_json(r.kernel.basis())},
                       {"determinant", s.determinant.to_string()},
                       {"char_poly", std::move(poly)},
                       {"structure", kinds[static_cast<int>(s.kind)]},
                       {"spectrum", spectrum_to_json(s.spectrum)}};
    }
    report["gram"] = std::move(section);
    return report;
}

Json cmd_filtrate(const InstanceFile& file) {
    const TensorHypergraph h = file.hypergraph();
    Json report = report_header("filtrate", h, file.is_oriented());
    Json table = Json::array();
    for (const FiltrationLevel& level : degree_filtration(h))
        table.push_back(Json{{"k", level.k}, {"dim_z", level.dim_z}, {"delta", level.delta}});
    report["filtration"] = std::move(table);
    report["graded_quotients"] = graded_quotients(h);
    if (h.field().is_rationals()) {
        Json ranks = Json::array();
        for (const TruncatedGram& level : truncated_grams(h)) ranks.push_back(rank(level.up_to));
        report["gram_ranks"] = std::move(ranks);
        report["rank_increments_match"] = rank_increment_check(h);
        if (!report["rank_increments_match"].get<bool>())
            fail(ErrorKind::InternalInconsistency, "Gram rank increments differ from defect drops");
    }
    return report;
}

Json cmd_recover_classical(const InstanceFile& file) {
    const TensorHypergraph h = file.hypergraph();
    Json report = report_header("recover-classical", h, file.is_oriented());
    const ClassicalRecovery r = classical_recovery(h);
    Json diffs = Json::array();
    for (const auto& [v, e] : r.differences) diffs.push_back(Json{{"vertex", h.vertex_names()[v]}, {"edge", h.edges()[e].id}});
    report["recovery"] = Json{{"match", r.match},
                              {"observed", matrix_to_json(r.observed)},
                              {"classical", matrix_to_json(r.classical)},
                              {"kernel", matrix_to_json(r.observed_kernel.basis())},
                              {"differences", std::move(diffs)}};
    if (!r.match) fail(ErrorKind::InternalInconsistency, "classical recovery mismatch");
    return report;
}

Json cmd_import_oh(const InstanceFile& file) {
    if (!file.is_oriented()) fail(ErrorKind::ParseError, "import-oh needs oriented_edges or incidence input");
    const OrientedHypergraph& o = *file.oriented;
    const TensorHypergraph h = file.hypergraph();
    Json report = report_header("import-oh", h, true);
    const KernelEquivalence k = kernel_equivalence(o, file.field);
    report["converted"] = instance_to_json(h);
    report["kernel_equivalence"] = Json{{"match", true}, {"dim", k.dim}, {"kernel", matrix_to_json(k.kernel.basis())}};
    report["analysis"] = analysis_to_json(oh_dimension_report(o, file.field));
    if (const auto star = star_analysis(o, file.field)) {
        Json s{{"r", star->r}, {"delta", star->delta}};
        s["affine_dependence"] = star->affine_dependence ? vector_to_json(*star->affine_dependence) : Json(nullptr);
        report["star"] = std::move(s);
    }
    return report;
}

struct Job {
    std::string name;
    std::optional<fs::path> path;
    std::size_t random_index = 0;
};

Json run_job(const Job& job, const Options& o) {
    Json entry{{"name", job.name}};
    VerifyResult result;
    std::optional<std::string> golden;
    try {
        if (job.path) {
            const InstanceFile file = load_instance(*job.path, field_override(o));
            entry["field"] = file.field.to_string();
            result = file.is_oriented() ? verify_oriented(*file.oriented, file.field, o.seed)
                                        : verify_instance(file.hypergraph(), o.seed);
            if (result.ok) golden = check_expectation(file.expect, result.report);
        } else {
            const GeneratedInstance g = generate_corpus_instance(o.seed, job.random_index, field_override(o));
            entry["field"] = g.hypergraph.field().to_string();
            result = verify_instance(g.hypergraph, o.seed + job.random_index);
        }
    } catch (const Error& e) {
        entry["status"] = "input_error";
        entry["failure"] = std::string(to_string(e.kind())) + ": " + e.what();
        return entry;
    }
    if (result.ok && golden) {
        result.ok = false;
        result.failure = "golden mismatch: " + *golden;
    }
    entry["status"] = result.ok ? "ok" : "failed";
    if (!result.ok) entry["failure"] = result.failure;
    entry["analysis"] = analysis_to_json(result.report);
    return entry;
}

std::vector<Job> collect_jobs(const Options& o) {
    std::vector<Job> jobs;
    for (const std::string& p : o.paths) {
        const fs::path path(p);
        if (fs::is_directory(path)) {
            std::vector<fs::path> files;
            for (const auto& entry : fs::directory_iterator(path))
                if (entry.is_regular_file() && entry.path().extension() == ".json") files.push_back(entry.path());
            std::sort(files.begin(), files.end());
            for (const fs::path& f : files) jobs.push_back({f.filename().string(), f, 0});
        } else {
            if (!fs::exists(path)) fail(ErrorKind::ParseError, "no such file: " + p);
            jobs.push_back({path.filename().string(), path, 0});
        }
    }
    if (o.random)
        for (std::size_t i = 0; i < *o.random; ++i)
            jobs.push_back({generate_corpus_instance(o.seed, i, field_override(o)).name, std::nullopt, i});
    return jobs;
}

void cmd_verify(const Options& o) {
    const std::vector<Job> jobs = collect_jobs(o);
    std::vector<Json> entries(jobs.size());
    std::atomic<std::size_t> next{0};
    auto worker = [&] {
        for (std::size_t i = next++; i < jobs.size(); i = next++) entries[i] = run_job(jobs[i], o);
    };
    const unsigned threads = std::max(1u, std::min<unsigned>(o.jobs, static_cast<unsigned>(jobs.size())));
    std::vector<std::thread> pool;
    for (unsigned t = 1; t < threads; ++t) pool.emplace_back(worker);
    worker();
    for (auto& t : pool) t.join();

    std::size_t passed = 0, failed = 0, input_errors = 0;
    std::optional<std::string> first_failure;
    for (const Json& e : entries) {
        const std::string status = e.at("status").get<std::string>();
        if (status == "ok") {
            ++passed;
            continue;
        }
        (status == "failed" ? failed : input_errors)++;
        if (!first_failure) first_failure = e.at("name").get<std::string>() + ": " + e.at("failure").get<std::string>();
    }
    Json report{{"tool", "tcycle"}, {"version", kToolVersion}, {"command", "verify"}, {"seed", o.seed}};
    report["instances"] = entries;
    report["summary"] = Json{{"instances", entries.size()}, {"passed", passed}, {"failed", failed},
                             {"input_errors", input_errors}};
    emit(report, o);
    if (first_failure) {
        std::cerr << "first counterexample: " << *first_failure << "\n";
        if (failed > 0) throw VerificationFailed(*first_failure);
        fail(ErrorKind::ParseError, *first_failure);
    }
}

}  // namespace

int main(int argc, char** argv) {
    CLI::App app{"Exact cycle spaces, defects and Gram operators of tensor-labeled hypergraphs"};
    app.require_subcommand(1);
    app.fallthrough();
    Options o;
    app.add_option("--field", o.field, "Field override: Q, F<p> or Fp:<p>");
    app.add_option("--output", o.output, "Write the report to this file instead of stdout");
    app.add_option("--format", o.format, "Report format")->check(CLI::IsMember({"json"}));

    auto add_path = [&](CLI::App* cmd) { cmd->add_option("path", o.path, "Instance file")->required(); };
    CLI::App* analyze_cmd = app.add_subcommand("analyze", "Dimension analysis");
    add_path(analyze_cmd);
    CLI::App* basis_cmd = app.add_subcommand("basis", "Extended cycle basis");
    add_path(basis_cmd);
    CLI::App* gram_cmd = app.add_subcommand("gram", "Edge Gram operator over Q");
    add_path(gram_cmd);
    gram_cmd->add_option("--truncate", o.truncate, "Degree truncation level k");
    CLI::App* filtrate_cmd = app.add_subcommand("filtrate", "Degree filtration table");
    add_path(filtrate_cmd);
    CLI::App* recover_cmd = app.add_subcommand("recover-classical", "Classical cycle space recovery over F2");
    add_path(recover_cmd);
    CLI::App* import_cmd = app.add_subcommand("import-oh", "Convert an oriented hypergraph and compare kernels");
    add_path(import_cmd);
    CLI::App* verify_cmd = app.add_subcommand("verify", "Run every cross-check on files, directories or random instances");
    verify_cmd->add_option("paths", o.paths, "Instance files or directories");
    verify_cmd->add_option("--random", o.random, "Number of generated instances");
    verify_cmd->add_option("--seed", o.seed, "Generator seed (default 42)");
    verify_cmd->add_option("--jobs", o.jobs, "Worker threads")->check(CLI::PositiveNumber);

    try {
        app.parse(argc, argv);
    } catch (const CLI::ParseError& e) {
        const int code = app.exit(e);
        return code == 0 ? 0 : kExitInput;
    }

    try {
        if (verify_cmd->parsed()) {
            if (o.paths.empty() && !o.random) fail(ErrorKind::ParseError, "verify needs paths or --random");
            cmd_verify(o);
            return 0;
        }
        const InstanceFile file = load_instance(o.path, field_override(o));
        Json report;
        if (analyze_cmd->parsed()) report = cmd_analyze(file);
        else if (basis_cmd->parsed()) report = cmd_basis(file);
        else if (gram_cmd->parsed()) report = cmd_gram(file, o.truncate);
        else if (filtrate_cmd->parsed()) report = cmd_filtrate(file);
        else if (recover_cmd->parsed()) report = cmd_recover_classical(file);
        else report = cmd_import_oh(file);
        emit(report, o);
        return 0;
    } catch (const VerificationFailed&) {
        return kExitInternal;
    } catch (const Error& e) {
        std::cerr << "error: " << to_string(e.kind()) << ": " << e.what() << "\n";
        return e.kind() == ErrorKind::InternalInconsistency ? kExitInternal : kExitInput;
    }
}
