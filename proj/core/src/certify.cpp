#include "udgcut/certify.hpp"

#include <algorithm>
#include <chrono>
#include <random>

#include "udgcut/errors.hpp"
#include "udgcut/generators.hpp"
#include "udgcut/reduction.hpp"
#include "udgcut/solvers.hpp"

namespace udgcut {

namespace {

using Clock = std::chrono::steady_clock;

gen::Rng suite_rng(std::uint64_t seed, std::uint64_t stream) {
    std::seed_seq seq{static_cast<std::uint32_t>(seed), static_cast<std::uint32_t>(seed >> 32),
                      static_cast<std::uint32_t>(stream)};
    return gen::Rng(seq);
}

std::size_t uniform(gen::Rng& rng, std::size_t lo, std::size_t hi) {
    return std::uniform_int_distribution<std::size_t>(lo, hi)(rng);
}

double probability(gen::Rng& rng) { return std::uniform_real_distribution<double>(0.2, 0.8)(rng); }

std::string edge_str(Edge e) { return std::to_string(e.u) + "-" + std::to_string(e.v); }

std::size_t mc(const Graph& g, unsigned threads) { return max_cut_bruteforce(g, {kDefaultBruteLimit, threads}).size; }

struct Timer {
    SuiteResult& r;
    Clock::time_point start = Clock::now();
    ~Timer() { r.seconds = std::chrono::duration<double>(Clock::now() - start).count(); }
};

SuiteResult double_subdivision_suite(const CertifyOptions& opts) {
    SuiteResult r{"double_subdivision", 0, {}, 0};
    Timer timer{r};
    gen::Rng rng = suite_rng(opts.seed, 1);
    while (r.instances < opts.subdivision_iterations) {
        const Graph g = gen::random_graph(rng, uniform(rng, 2, 9), probability(rng));
        if (g.edge_count() == 0) continue;
        const auto edges = g.edges();
        const Edge e = edges[uniform(rng, 0, edges.size() - 1)];
        const std::size_t before = mc(g, opts.threads);
        const std::size_t after = mc(subdivide_edge_twice(g, e), opts.threads);
        ++r.instances;
        if (after != before + 2)
            r.failures.push_back({g, "edge " + edge_str(e) + ": mc " + std::to_string(before) + " -> " +
                                         std::to_string(after) + ", expected +2"});
    }
    return r;
}

// A labelling (v0, v2), (v1, v3) of two disjoint edges with no cycle edge
// v_i v_(i+1) present, if one exists.
std::optional<std::pair<std::pair<VertexId, VertexId>, std::pair<VertexId, VertexId>>> gadget_site(
    const Graph& g, gen::Rng& rng, bool need_free_cycle) {
    auto edges = g.edges();
    std::shuffle(edges.begin(), edges.end(), rng);
    for (std::size_t i = 0; i < edges.size(); ++i)
        for (std::size_t j = i + 1; j < edges.size(); ++j) {
            const Edge a = edges[i];
            const Edge b = edges[j];
            if (a.has(b.u) || a.has(b.v)) continue;
            for (int flip = 0; flip < 2; ++flip) {
                const std::pair<VertexId, VertexId> e1{a.u, a.v};
                const std::pair<VertexId, VertexId> e2 = flip ? std::pair{b.v, b.u} : std::pair{b.u, b.v};
                const std::array<VertexId, 4> v{e1.first, e2.first, e1.second, e2.second};
                bool free = true;
                for (std::size_t k = 0; k < 4; ++k) free = free && !g.has_edge(v[k], v[(k + 1) % 4]);
                if (free || !need_free_cycle) return std::pair{e1, e2};
            }
        }
    return std::nullopt;
}

SuiteResult gadget_suite(const CertifyOptions& opts) {
    SuiteResult r{"gadget_plus_eight", 0, {}, 0};
    Timer timer{r};
    const bool enforce = opts.gadget_mode == GadgetPrecondition::enforce;

    auto check = [&](const Graph& g, std::pair<VertexId, VertexId> e1, std::pair<VertexId, VertexId> e2) {
        const std::size_t before = mc(g, opts.threads);
        const Graph h = construct_H_on(g, e1, e2, opts.gadget_mode).graph;
        const std::size_t after = mc(h, opts.threads);
        ++r.instances;
        if (after != before + 8)
            r.failures.push_back({g, "edges " + std::to_string(e1.first) + "-" + std::to_string(e1.second) + " and " +
                                         std::to_string(e2.first) + "-" + std::to_string(e2.second) + ": mc " +
                                         std::to_string(before) + " -> " + std::to_string(after) + " (" +
                                         std::to_string(after) + " != " + std::to_string(before + 8) + ")"});
    };

    if (opts.gadget_iterations > 0) {
        // K4 already holds every cycle edge: the precondition must reject it.
        const Graph k4 = gen::complete(4);
        if (enforce) {
            ++r.instances;
            try {
                construct_H_on(k4, {0, 2}, {1, 3}, opts.gadget_mode);
                r.failures.push_back({k4, "K4 host with cycle edges was accepted"});
            } catch (const PreconditionError&) {
            }
        } else {
            check(k4, {0, 2}, {1, 3});
        }
    }

    gen::Rng rng = suite_rng(opts.seed, 2);
    std::size_t random_done = 0;
    while (random_done < opts.gadget_iterations) {
        const Graph g = gen::random_bounded_degree(rng, uniform(rng, 4, 8), 4, probability(rng));
        const auto site = gadget_site(g, rng, enforce);
        if (!site) continue;
        check(g, site->first, site->second);
        ++random_done;
    }
    return r;
}

struct ReductionSuites {
    SuiteResult model{"reduction_model", 0, {}, 0};
    SuiteResult identity{"reduction_identity", 0, {}, 0};
};

ReductionSuites reduction_suites(const CertifyOptions& opts) {
    ReductionSuites s;
    std::vector<Graph> instances;
    if (opts.include_named)
        instances = {gen::complete(4), gen::complete(5), gen::cycle(5), gen::petersen()};
    gen::Rng rng = suite_rng(opts.seed, 3);
    for (std::size_t i = 0; i < opts.reduction_random; ++i)
        instances.push_back(gen::random_bounded_degree(rng, uniform(rng, 2, 8), 4, probability(rng)));

    double model_seconds = 0;
    double identity_seconds = 0;
    for (const Graph& g : instances) {
        const auto t0 = Clock::now();
        ReductionOutput out;
        try {
            out = reduce(g);
        } catch (const Error& e) {
            s.model.failures.push_back({g, std::string("reduce failed: ") + e.what()});
            ++s.model.instances;
            continue;
        }
        ++s.model.instances;
        const ModelReport rep = validate_model(out.model);
        if (!rep.ok) {
            const auto& w = rep.failures.front();
            s.model.failures.push_back({g, "model invalid at " + std::to_string(w.u) + "-" + std::to_string(w.v) +
                                               " (dist2 " + w.dist2.str() + ")"});
        } else if (out.model.points.size() >= 2) {
            const Rational p2 = precision2(out.model);
            const Rational half(1, 2);
            if (p2 < half || (out.k >= 1 && p2 != half))
                s.model.failures.push_back(
                    {g, "precision2 " + p2.str() + " with k = " + std::to_string(out.k)});
        }
        const auto t1 = Clock::now();
        model_seconds += std::chrono::duration<double>(t1 - t0).count();

        ++s.identity.instances;
        try {
            const TreeDecomposition td = greedy_tree_decomposition(out.result());
            const std::size_t mc_u = max_cut_treewidth_dp(out.result(), td, opts.max_width);
            const std::size_t expected = mc(g, opts.threads);
            const std::size_t got = recover_mc(mc_u, out.k, out.t);
            if (got != expected)
                s.identity.failures.push_back({g, "mc(U) = " + std::to_string(mc_u) + ", k = " +
                                                      std::to_string(out.k) + ", t = " + std::to_string(out.t) +
                                                      " recovers " + std::to_string(got) + ", expected " +
                                                      std::to_string(expected)});
        } catch (const Error& e) {
            s.identity.failures.push_back({g, e.what()});
        }
        const double seconds = std::chrono::duration<double>(Clock::now() - t1).count();
        identity_seconds += seconds;
        if (seconds >= 60)
            s.identity.failures.push_back({g, "instance took " + std::to_string(seconds) + " s"});
    }
    s.model.seconds = model_seconds;
    s.identity.seconds = identity_seconds;
    return s;
}

}  // namespace

bool CertifyReport::ok() const {
    return std::all_of(suites.begin(), suites.end(), [](const SuiteResult& s) { return s.ok(); });
}

CertifyReport certify(const CertifyOptions& opts) {
    CertifyReport report;
    report.suites.push_back(double_subdivision_suite(opts));
    report.suites.push_back(gadget_suite(opts));
    ReductionSuites rs = reduction_suites(opts);
    report.suites.push_back(std::move(rs.model));
    report.suites.push_back(std::move(rs.identity));
    return report;
}

}  // namespace udgcut
