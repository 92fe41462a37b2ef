#include <CLI11.hpp>

#include <fstream>
#include <iostream>
#include <optional>
#include <string>

#include "packfold/colorers.hpp"
#include "packfold/fuzz.hpp"
#include "packfold/generators.hpp"
#include "packfold/io.hpp"
#include "packfold/solver.hpp"
#include "packfold/theorem1_properties.hpp"

using namespace packfold;

namespace {

enum Exit { kOk = 0, kError = 1, kPrecondition = 2, kVerification = 3, kTimeout = 4 };

// Writes to `path`, or stdout when empty. Every document gets the version stamp.
void emit(const std::string& path, Json j) {
    if (j.is_object()) j["version"] = kVersion;
    if (path.empty() || path == "-") std::cout << dump(j);
    else write_json_file(path, j);
}

void emit_text(const std::string& path, const std::string& text) {
    if (path.empty() || path == "-") {
        std::cout << text;
        return;
    }
    std::ofstream out(path);
    if (!out) throw std::runtime_error("cannot write " + path);
    out << text;
}

std::optional<OuterplanarEmbedding> embedding_arg(const Json& graph_doc, const std::string& emb_path) {
    if (!emb_path.empty()) return embedding_from_json(read_json_file(emb_path));
    return embedding_from_json(graph_doc);
}

Budget budget_arg(const std::string& text, std::uint64_t nodes) {
    Budget b = Budget::from_env();
    if (!text.empty()) b.seconds = parse_duration(text);
    if (nodes) b.nodes = nodes;
    return b;
}

int cmd_recognize(const std::string& in, const std::string& out) {
    Graph g = graph_from_json(read_json_file(in));
    auto r = recognize_outerplanar(g);
    if (!r.embedding) {
        std::cerr << "not outerplanar: " << r.obstruction << "\n";
        return kPrecondition;
    }
    emit(out, graph_to_json(g, &*r.embedding));
    return kOk;
}

struct ColorArgs {
    std::string method = "thm1";
    int k = 3;
    std::string in, emb, out;
    bool unchecked = false;
};

int cmd_color(const ColorArgs& a) {
    Json doc = read_json_file(a.in);
    Graph g = graph_from_json(doc);
    auto emb = embedding_arg(doc, a.emb);
    ColorOptions opt{a.unchecked};
    ColorerResult r;
    try {
        if (a.method == "thm1") r = color_theorem1(g, emb, opt);
        else if (a.method == "133") r = color_one_three_k(g, a.k, emb, opt);
        else if (a.method == "1222") r = color_1222(g, emb, opt);
        else r = color_112(g, emb, opt);
    } catch (const PreconditionError& e) {
        std::cerr << "precondition failure: " << e.what() << "\n";
        return kPrecondition;
    } catch (const InternalError& e) {
        std::cerr << "internal error: " << e.what() << "\n";
        return kVerification;
    }
    auto verdict = verify_packing(g, r.coloring);
    bool ok = verdict.valid;
    if (!ok) std::cerr << "verification failed: " << dump(verdict_to_json(verdict));
    if (a.method == "thm1") {
        auto rep = verify_theorem1_properties(g, r.coloring, checked_embedding(g, emb));
        if (!rep.ok) {
            ok = false;
            std::cerr << "property check failed: " << dump(theorem1_report_to_json(rep));
        }
    }
    Json j = coloring_to_json(r.coloring);
    if (a.method == "112") {
        j["constructive_fallback"] = r.constructive_fallback;
        j["fallback_faces"] = r.fallback_faces;
    }
    emit(a.out, j);
    return ok ? kOk : kVerification;
}

int cmd_verify(const std::string& in, const std::string& coloring, const std::string& emb_path, bool thm1) {
    Json doc = read_json_file(in);
    Graph g = graph_from_json(doc);
    PackingColoring c = coloring_from_json(read_json_file(coloring));
    Json out;
    bool ok = false;
    try {
        auto v = verify_packing(g, c);
        out = verdict_to_json(v);
        ok = v.valid;
    } catch (const std::invalid_argument& e) {
        std::cerr << "malformed coloring: " << e.what() << "\n";
        return kVerification;
    }
    if (thm1) {
        auto emb = embedding_arg(doc, emb_path);
        OuterplanarEmbedding e;
        try {
            e = checked_embedding(g, emb);
        } catch (const PreconditionError& err) {
            std::cerr << "precondition failure: " << err.what() << "\n";
            return kPrecondition;
        }
        if (!c.big) {
            std::cerr << "coloring has no big-vertex set\n";
            return kVerification;
        }
        auto rep = verify_theorem1_properties(g, c, e);
        out["theorem1"] = theorem1_report_to_json(rep);
        ok = ok && rep.ok;
    }
    emit("", out);
    return ok ? kOk : kVerification;
}

int status_exit(SolveStatus s) { return s == SolveStatus::Timeout ? kTimeout : kOk; }

int cmd_solve(const std::string& S, const std::string& in, const Budget& b, const std::string& out) {
    Graph g = graph_from_json(read_json_file(in));
    auto o = solve(g, PackingInstance::parse(S), b);
    emit(out, outcome_to_json(o));
    return status_exit(o.status);
}

int cmd_chirho(int kmax, const std::string& in, const Budget& b, const std::string& out) {
    Graph g = graph_from_json(read_json_file(in));
    auto o = chi_rho(g, kmax, b);
    Json j;
    j["status"] = to_string(o.status);
    j["chi_rho"] = o.value ? Json(*o.value) : Json(nullptr);
    j["witness"] = o.witness ? coloring_to_json(*o.witness) : Json(nullptr);
    j["stats"] = {{"nodes", o.stats.nodes}, {"wall_seconds", o.stats.wall_seconds}};
    emit(out, j);
    return status_exit(o.status);
}

struct GenArgs {
    std::string family;
    int n = 8, k = 4, i = 1;
    std::uint64_t seed = 1;
    std::string constraints, out;
};

int cmd_gen(const GenArgs& a) {
    GeneratedGraph gg = [&] {
        const auto& f = a.family;
        if (f == "cycle") return gen_cycle(a.n);
        if (f == "path") return gen_path(a.n);
        if (f == "prop5") return gen_prop5_family(a.k, a.i);
        if (f == "fig7") return gen_fig7();
        if (f == "g25") return gen_g25();
        if (f == "triangle") return gen_triangle_gadget();
        if (f == "kary") return gen_kary_tree(a.k);
        return gen_random_outerplanar(a.n, a.seed, Constraints::parse(a.constraints));
    }();
    const bool has_blocks = !gg.embedding.blocks.empty();
    emit(a.out, graph_to_json(gg.graph, has_blocks ? &gg.embedding : nullptr));
    return kOk;
}

int cmd_fuzz(FuzzOptions opt, const std::string& constraints) {
    if (!constraints.empty()) opt.constraints = Constraints::parse(constraints);
    auto rep = run_fuzz(opt);
    std::cout << rep.summary() << "\n";
    for (const auto& f : rep.failures) std::cerr << f << "\n";
    for (const auto& r : rep.reproducers) std::cerr << "reproducer: " << r << "\n";
    return rep.ok() ? kOk : kVerification;
}

int cmd_export(const std::string& in, const std::string& coloring, const std::string& out) {
    Graph g = graph_from_json(read_json_file(in));
    std::optional<PackingColoring> c;
    if (!coloring.empty()) c = coloring_from_json(read_json_file(coloring));
    emit_text(out, to_dot(g, c ? &*c : nullptr));
    return kOk;
}

}  // namespace

int main(int argc, char** argv) {
    CLI::App app{"S-packing colorings of outerplanar graphs"};
    app.set_version_flag("--version", kVersion);
    app.require_subcommand(1);
    int code = kOk;

    std::string in, out, emb, coloring;

    auto* rec = app.add_subcommand("recognize", "Outerplanarity test; emits the embedding");
    rec->add_option("--in", in, "Graph JSON")->required();
    rec->add_option("--out", out, "Embedding JSON (default stdout)");
    rec->callback([&] { code = cmd_recognize(in, out); });

    ColorArgs ca;
    auto* col = app.add_subcommand("color", "Run a constructive colorer and verify the result");
    col->add_option("--method", ca.method)->check(CLI::IsMember({"thm1", "133", "1222", "112"}))->required();
    col->add_option("--k", ca.k, "Number of 3-colors for method 133");
    col->add_option("--in", ca.in, "Graph JSON")->required();
    col->add_option("--emb", ca.emb, "Embedding JSON; skips recognition");
    col->add_option("--out", ca.out, "Coloring JSON (default stdout)");
    col->add_flag("--unchecked", ca.unchecked, "Skip structural preconditions");
    col->callback([&] { code = cmd_color(ca); });

    bool thm1 = false;
    auto* ver = app.add_subcommand("verify", "Check a coloring from scratch");
    ver->add_option("--in", in, "Graph JSON")->required();
    ver->add_option("--coloring", coloring, "Coloring JSON")->required();
    ver->add_option("--emb", emb, "Embedding JSON for --thm1");
    ver->add_flag("--thm1", thm1, "Also check the four structural properties");
    ver->callback([&] { code = cmd_verify(in, coloring, emb, thm1); });

    std::string S, budget;
    std::uint64_t nodes = 0;
    auto* sol = app.add_subcommand("solve", "Exact S-packing feasibility");
    sol->add_option("--S", S, "Nondecreasing sequence, e.g. 1,2,2,3")->required();
    sol->add_option("--in", in, "Graph JSON")->required();
    sol->add_option("--budget", budget, "Wall budget, e.g. 60s (default PACKFOLD_BUDGET or 60s)");
    sol->add_option("--nodes", nodes, "Search node budget");
    sol->add_option("--out", out, "Outcome JSON (default stdout)");
    sol->callback([&] { code = cmd_solve(S, in, budget_arg(budget, nodes), out); });

    int kmax = 8;
    auto* chi = app.add_subcommand("chirho", "Packing chromatic number up to kmax");
    chi->add_option("--kmax", kmax)->check(CLI::PositiveNumber);
    chi->add_option("--in", in, "Graph JSON")->required();
    chi->add_option("--budget", budget, "Total wall budget");
    chi->add_option("--nodes", nodes, "Total node budget");
    chi->add_option("--out", out, "Outcome JSON (default stdout)");
    chi->callback([&] { code = cmd_chirho(kmax, in, budget_arg(budget, nodes), out); });

    GenArgs ga;
    auto* gen = app.add_subcommand("gen", "Instance generators");
    gen->add_option("--family", ga.family)
        ->check(CLI::IsMember({"cycle", "path", "prop5", "fig7", "g25", "triangle", "kary", "random"}))
        ->required();
    gen->add_option("--n", ga.n);
    gen->add_option("--k", ga.k);
    gen->add_option("--i", ga.i, "Iterations for prop5");
    gen->add_option("--seed", ga.seed);
    gen->add_option("--constraints", ga.constraints, "bipartite,subcubic,triangle_free,two_connected,maxdeg=D");
    gen->add_option("--out", ga.out, "Graph JSON (default stdout)");
    gen->callback([&] { code = cmd_gen(ga); });

    FuzzOptions fo;
    std::string fuzz_constraints;
    auto* fz = app.add_subcommand("fuzz", "Random instances through a colorer and the verifier");
    fz->add_option("--method", fo.method)->check(CLI::IsMember({"thm1", "133", "1222", "112"}))->required();
    fz->add_option("--count", fo.count);
    fz->add_option("--nmin", fo.n_min);
    fz->add_option("--nmax", fo.n_max);
    fz->add_option("--seed", fo.seed);
    fz->add_option("--k", fo.k);
    fz->add_option("--constraints", fuzz_constraints, "Override the per-method defaults");
    fz->add_option("--threads", fo.threads);
    fz->add_option("--repro-dir", fo.repro_dir, "Directory for failing instances");
    fz->add_flag("--inject-fault", fo.inject_fault, "Corrupt every coloring (harness self-test)");
    fz->callback([&] { code = cmd_fuzz(fo, fuzz_constraints); });

    auto* ex = app.add_subcommand("export", "DOT output");
    ex->add_option("--in", in, "Graph JSON")->required();
    ex->add_option("--coloring", coloring, "Coloring JSON");
    ex->add_option("--out", out, "DOT file (default stdout)");
    ex->callback([&] { code = cmd_export(in, coloring, out); });

    try {
        app.parse(argc, argv);
    } catch (const CLI::ParseError& e) {
        return app.exit(e);
    } catch (const std::invalid_argument& e) {
        std::cerr << "error: " << e.what() << "\n";
        return kPrecondition;
    } catch (const std::exception& e) {
        std::cerr << "error: " << e.what() << "\n";
        return kError;
    }
    return code;
}
