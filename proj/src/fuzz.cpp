#include "packfold/fuzz.hpp"

#include <algorithm>
#include <atomic>
#include <chrono>
#include <filesystem>
#include <random>
#include <thread>

#include "packfold/colorers.hpp"
#include "packfold/io.hpp"
#include "packfold/theorem1_properties.hpp"

namespace packfold {

namespace {

const std::vector<std::string> kMethods{"thm1", "133", "1222", "112"};

Constraints defaults_for(const FuzzOptions& opt, int i) {
    if (opt.constraints) return *opt.constraints;
    Constraints c;
    if (opt.method == "thm1") {
        c.bipartite = c.subcubic = c.two_connected = true;
    } else if (opt.method == "133") {
        c.bipartite = true;
        c.max_degree = opt.k;
        c.two_connected = i % 4 == 0;
    } else {
        c.subcubic = c.triangle_free = true;
        c.two_connected = i % 4 == 0;
    }
    return c;
}

struct Outcome {
    enum { Valid, Rejected, Failed } kind = Valid;
    bool fallback = false;
    bool retried = false;
    std::string message;
};

Outcome run_one(const FuzzOptions& opt, const GeneratedGraph& gg) {
    Outcome out;
    try {
        ColorerResult r;
        if (opt.method == "thm1") r = color_theorem1(gg.graph, gg.embedding);
        else if (opt.method == "133") r = color_one_three_k(gg.graph, opt.k, gg.embedding);
        else if (opt.method == "1222") r = color_1222(gg.graph, gg.embedding);
        else r = color_112(gg.graph, gg.embedding);
        out.fallback = r.constructive_fallback;
        out.retried = r.retried_faces > 0;
        auto& col = r.coloring;
        if (opt.inject_fault && gg.graph.vertex_count() > 1) {
            Vertex v = 0;
            while (v < gg.graph.vertex_count() && gg.graph.degree(v) == 0) ++v;
            if (v < gg.graph.vertex_count()) col.colors[v] = col.colors[gg.graph.neighbors(v)[0]];
        }
        auto verdict = verify_packing(gg.graph, col);
        if (!verdict.valid) {
            const auto& x = verdict.violations.front();
            out.kind = Outcome::Failed;
            out.message = std::to_string(verdict.violations.size()) + " violations, first: vertices " +
                          std::to_string(x.u) + "," + std::to_string(x.v) + " color " + std::to_string(x.color) +
                          " at distance " + std::to_string(x.distance);
            return out;
        }
        if (opt.method == "thm1") {
            auto rep = verify_theorem1_properties(gg.graph, col, gg.embedding);
            if (!rep.ok) {
                out.kind = Outcome::Failed;
                out.message = "property " + std::to_string(rep.failures.front().property) + ": " +
                              rep.failures.front().message;
            }
        }
    } catch (const PreconditionError& e) {
        out.kind = Outcome::Rejected;
        out.message = e.what();
    } catch (const std::exception& e) {
        out.kind = Outcome::Failed;
        out.message = std::string("exception: ") + e.what();
    }
    return out;
}

}  // namespace

GeneratedGraph fuzz_instance(const FuzzOptions& opt, int i) {
    const std::uint64_t seed = opt.seed + static_cast<std::uint64_t>(i);
    Constraints c = defaults_for(opt, i);
    std::mt19937_64 rng(seed ^ 0x9e3779b97f4a7c15ULL);
    int n = std::uniform_int_distribution<int>(opt.n_min, std::max(opt.n_min, opt.n_max))(rng);
    if (c.two_connected) {
        const int lo = c.bipartite || c.triangle_free ? 4 : 3;
        n = std::max(n, lo);
        if (c.bipartite && n % 2 != 0) n = n + 1 <= std::max(opt.n_max, lo) ? n + 1 : n - 1;
    }
    return gen_random_outerplanar(n, seed, c);
}

std::string FuzzReport::summary() const {
    std::string s = std::to_string(valid) + "/" + std::to_string(total - rejected) + " valid";
    if (rejected) s += ", " + std::to_string(rejected) + " rejected by preconditions";
    if (failed) s += ", " + std::to_string(failed) + " FAILED";
    if (fallback_instances) s += ", " + std::to_string(fallback_instances) + " used exact fallback";
    if (retried_instances) s += ", " + std::to_string(retried_instances) + " needed a backtracking retry";
    return s;
}

FuzzReport run_fuzz(const FuzzOptions& opt) {
    if (std::find(kMethods.begin(), kMethods.end(), opt.method) == kMethods.end())
        throw std::invalid_argument("unknown method: " + opt.method);
    if (opt.count < 0 || opt.n_min < 1 || opt.n_max < opt.n_min) throw std::invalid_argument("bad fuzz size range");
    const auto t0 = std::chrono::steady_clock::now();
    std::vector<Outcome> results(opt.count);
    std::vector<std::string> errors(opt.count);
    std::atomic<int> next{0};
    auto worker = [&] {
        for (int i = next++; i < opt.count; i = next++) {
            try {
                results[i] = run_one(opt, fuzz_instance(opt, i));
            } catch (const std::exception& e) {
                results[i] = {Outcome::Failed, false, false, std::string("generator: ") + e.what()};
            }
        }
    };
    int threads = opt.threads > 0 ? opt.threads : static_cast<int>(std::max(1u, std::thread::hardware_concurrency()));
    threads = std::min(threads, std::max(1, opt.count));
    std::vector<std::thread> pool;
    for (int t = 0; t < threads; ++t) pool.emplace_back(worker);
    for (auto& t : pool) t.join();

    FuzzReport rep;
    rep.total = opt.count;
    for (int i = 0; i < opt.count; ++i) {
        const auto& r = results[i];
        if (r.fallback) ++rep.fallback_instances;
        if (r.retried) ++rep.retried_instances;
        if (r.kind == Outcome::Valid) {
            ++rep.valid;
        } else if (r.kind == Outcome::Rejected) {
            ++rep.rejected;
        } else {
            ++rep.failed;
            rep.failures.push_back("instance " + std::to_string(i) + " (seed " +
                                   std::to_string(opt.seed + static_cast<std::uint64_t>(i)) + "): " + r.message);
            if (!opt.repro_dir.empty()) {
                std::filesystem::create_directories(opt.repro_dir);
                auto gg = fuzz_instance(opt, i);
                std::string path = opt.repro_dir + "/fuzz-" + opt.method + "-" + std::to_string(i) + ".json";
                write_json_file(path, graph_to_json(gg.graph, &gg.embedding));
                rep.reproducers.push_back(path);
            }
        }
    }
    rep.seconds = std::chrono::duration<double>(std::chrono::steady_clock::now() - t0).count();
    return rep;
}

}  // namespace packfold
