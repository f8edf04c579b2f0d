#pragma once

#include <cstdint>
#include <optional>
#include <vector>

#include "treewave/tree.hpp"

namespace treewave {

/// The unique simple u-v route of a tree, u < v, edges ascending by id.
struct Path {
    Vertex u = 0;
    Vertex v = 0;
    std::vector<EdgeId> edges;

    std::size_t length() const { return edges.size(); }
    bool operator==(const Path&) const = default;
};

/// Every unordered vertex pair of a tree, in (u,v)-lexicographic order.
class Routing {
public:
    Routing() = default;
    Routing(int num_vertices, std::vector<Path> paths);

    int num_vertices() const { return n_; }
    std::size_t size() const { return paths_.size(); }
    bool empty() const { return paths_.empty(); }
    const Path& operator[](std::size_t i) const { return paths_[i]; }
    const std::vector<Path>& paths() const { return paths_; }
    auto begin() const { return paths_.begin(); }
    auto end() const { return paths_.end(); }

    /// Position of the path between u and v (either order).
    std::size_t index_of(Vertex u, Vertex v) const;

    /// Path indices grouped by edge; bucket 0 (the root) is empty.
    std::vector<std::vector<std::size_t>> edge_buckets() const;

private:
    int n_ = 0;
    std::vector<Path> paths_;
};

Path tree_path(const Tree& tree, Vertex u, Vertex v);

/// Throws for trees with fewer than two vertices unless `allow_empty` is set,
/// in which case the single-vertex tree yields an empty routing.
Routing all_pairs_routing(const Tree& tree, bool allow_empty = false);

/// Paths through each edge, indexed by edge id (entry 0 is always 0).
std::vector<std::int64_t> edge_loads(const Routing& routing, const Tree& tree);

/// Dense symmetric adjacency over path indices, one bit row per path.
class ConflictGraph {
public:
    explicit ConflictGraph(int order = 0);

    int order() const { return order_; }
    bool adjacent(int i, int j) const { return (row(i)[j >> 6] >> (j & 63)) & 1u; }
    void add_edge(int i, int j);
    int degree(int i) const;
    std::int64_t num_edges() const;

    const std::uint64_t* row(int i) const { return bits_.data() + static_cast<std::size_t>(i) * words_; }
    int words() const { return words_; }

    /// Set when the graph came from a tree routing.
    std::optional<std::int64_t> tree_max_load;
    /// Clique number of a tree routing's graph: the larger of the fullest
    /// edge bucket and the best claw (paths through two of three branches at
    /// one vertex).
    std::optional<std::int64_t> tree_clique_number;

private:
    int order_;
    int words_;
    std::vector<std::uint64_t> bits_;
};

ConflictGraph conflict_graph(const Routing& routing);

/// Largest set of paths that each use two of the three edges of some claw;
/// pairwise conflicting without sharing a common edge. 0 if no vertex has
/// degree 3 or more.
std::int64_t max_claw_clique(const Routing& routing);

}  // namespace treewave
