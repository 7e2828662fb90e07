#pragma once

#include <cstddef>
#include <cstdint>
#include <string>
#include <vector>

#include "udgcut/gadget.hpp"
#include "udgcut/graph.hpp"

namespace udgcut {

struct CertifyOptions {
    std::uint64_t seed = 1;
    std::size_t subdivision_iterations = 200;  ///< random (graph, edge) pairs, n <= 9
    std::size_t gadget_iterations = 100;       ///< random hosts, n <= 8
    std::size_t reduction_random = 20;         ///< random graphs on top of K4, K5, C5, Petersen
    bool include_named = true;                 ///< run the four named reduction instances
    GadgetPrecondition gadget_mode = GadgetPrecondition::enforce;
    std::size_t max_width = 12;
    unsigned threads = 1;
};

struct Counterexample {
    Graph graph;
    std::string detail;
};

struct SuiteResult {
    std::string name;
    std::size_t instances = 0;
    std::vector<Counterexample> failures;
    double seconds = 0;

    bool ok() const { return failures.empty(); }
};

struct CertifyReport {
    std::vector<SuiteResult> suites;

    bool ok() const;
};

/// Runs the randomized cut-identity suites:
///   double_subdivision   mc rises by exactly 2 after subdividing an edge twice
///   gadget_plus_eight    mc rises by exactly 8 after planting H; under
///                        `enforce` the K4 host must be rejected, under
///                        `relax` it is checked (and fails, 10 != 12)
///   reduction_model      reduced models validate with precision2 >= 1/2,
///                        equal to 1/2 whenever there is a crossing
///   reduction_identity   mc(U) - 8k - t = mc(G), DP width within the ceiling
/// Zero iterations give vacuous passes.
CertifyReport certify(const CertifyOptions& opts);

}  // namespace udgcut
