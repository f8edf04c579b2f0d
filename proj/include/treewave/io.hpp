#pragma once

#include <string>

#include <json.hpp>

#include "treewave/bounds.hpp"
#include "treewave/colorings.hpp"
#include "treewave/designs.hpp"
#include "treewave/exact.hpp"
#include "treewave/routing.hpp"
#include "treewave/tree.hpp"

namespace treewave {

using json = nlohmann::ordered_json;

json family_to_json(const Family& f);

/// {"family", "n", "parents", "labels"}; the root's parent is -1.
json to_json(const Tree& tree);
Tree tree_from_json(const json& j);

/// Undirected DOT; nodes and edges in vertex-id order.
std::string to_dot(const Tree& tree);

json to_json(const CutCertificate& c);
json to_json(const TotalColoring& tc);
json to_json(const EdgeColoring& ec);

/// {"family", "m", "h", "num_colors", "paths":[{"u","v","color"}], "proper", "method"}.
json to_json(const WavelengthAssignment& wa, const Routing& routing, const Family& family, bool proper);

/// One "u,v,color" row per path after a header line.
std::string to_csv(const WavelengthAssignment& wa, const Routing& routing);

json to_json(const OptimalityCertificate& c);
json to_json(const ChromaticResult& r);

/// {"order": N, "edges": [[i, j], ...]} with i < j.
json to_json(const ConflictGraph& cg);
ConflictGraph conflict_graph_from_json(const json& j);

}  // namespace treewave
