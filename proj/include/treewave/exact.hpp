#pragma once

#include <cstdint>
#include <optional>
#include <vector>

#include "treewave/colorings.hpp"
#include "treewave/routing.hpp"
#include "treewave/tree.hpp"

namespace treewave {

struct CliqueResult {
    int size = 0;
    std::vector<int> members;  // empty when the size came from the closed form
    bool exact = true;         // false if the budget ran out first
};

/// Clique number. Tree-derived graphs answer in closed form (the larger of
/// the maximum edge load and the best claw); anything else goes to
/// max_clique_search.
CliqueResult max_clique(const ConflictGraph& cg, std::int64_t budget_ms = 10'000);

/// Branch and bound with greedy-coloring bounds; never uses the closed form.
CliqueResult max_clique_search(const ConflictGraph& cg, std::int64_t budget_ms = 10'000);

struct ChromaticResult {
    int lower = 0;
    int upper = 0;
    std::optional<int> exact;
    std::optional<WavelengthAssignment> witness;
    bool budget_exhausted = false;
};

/// DSATUR branch and bound. Hints of 0 mean "none"; lb_hint > ub_hint throws.
ChromaticResult exact_chromatic(const ConflictGraph& cg, int lb_hint = 0, int ub_hint = 0,
                                std::int64_t budget_ms = 60'000);

/// All unlabeled trees on n vertices (2 <= n <= 10), rooted at a centroid.
std::vector<Tree> enumerate_small_trees(int n);

/// AHU string of a tree viewed as unrooted (minimum over its centroids).
std::string canonical_form(const Tree& tree);

struct OptimalityCertificate {
    enum class Source { edge_cut, vertex_cut, clique, exact_search };

    Family instance;
    Source lower_bound_source = Source::edge_cut;
    std::int64_t lower = 0;
    std::int64_t constructive = 0;
    bool optimal = false;
    std::optional<std::int64_t> exact;
    bool budget_exhausted = false;
};

const char* to_string(OptimalityCertificate::Source s);

struct CertifyOptions {
    std::int64_t budget_ms = 60'000;
    std::size_t exact_cap = 100;  // largest conflict graph handed to the search
};

OptimalityCertificate certify(int m, int h, const CertifyOptions& options = {});

}  // namespace treewave
