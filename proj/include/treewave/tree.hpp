#pragma once

#include <cstdint>
#include <optional>
#include <span>
#include <string>
#include <vector>

namespace treewave {

using Vertex = int;
// An edge is identified by its child endpoint; the root owns no edge.
using EdgeId = int;

// Digits in [1..m] from the root down; empty for the root.
using VertexAddress = std::vector<int>;

enum class SpiderShape { path, star, full_mary };

struct Family {
    enum class Kind { mary, spider, double_tree, explicit_tree };

    Kind kind = Kind::explicit_tree;
    int m = 0;
    int h = 0;
    int k = 0;
    int t = 0;
    SpiderShape shape = SpiderShape::path;

    static Family mary(int m, int h) { return {Kind::mary, m, h, 0, 0, SpiderShape::path}; }
    static Family spider(int k, int t, SpiderShape s) { return {Kind::spider, 0, 0, k, t, s}; }
    static Family double_tree(int m, int h) { return {Kind::double_tree, m, h, 0, 0, SpiderShape::path}; }
    static Family explicit_tree() { return {}; }

    bool operator==(const Family&) const = default;
};

std::string to_string(const Family& f);
std::string to_string(SpiderShape s);
SpiderShape parse_spider_shape(const std::string& s);

/// Rooted tree with vertex 0 as root and parent[v] < v for every other vertex.
///
/// The parent-before-child ordering is what every builder produces (breadth
/// first, children in ascending digit order) and is enough to guarantee the
/// parent array describes a connected acyclic graph.
class Tree {
public:
    Tree(std::vector<Vertex> parent, std::vector<VertexAddress> labels, Family family);

    int size() const { return static_cast<int>(parent_.size()); }
    int num_edges() const { return size() > 0 ? size() - 1 : 0; }

    Vertex parent(Vertex v) const { return parent_[v]; }
    std::span<const Vertex> parents() const { return parent_; }
    std::span<const Vertex> children(Vertex v) const { return children_[v]; }
    int depth(Vertex v) const { return depth_[v]; }
    int height() const;

    const Family& family() const { return family_; }

    bool has_labels() const { return !labels_.empty(); }
    const VertexAddress& label(Vertex v) const { return labels_.at(v); }
    const std::vector<VertexAddress>& labels() const { return labels_; }
    std::optional<Vertex> find(const VertexAddress& address) const;

    /// Number of vertices in the subtree hanging below each vertex (inclusive).
    std::vector<int> subtree_sizes() const;

    /// Vertices of the subtree rooted at v, ascending.
    std::vector<Vertex> subtree(Vertex v) const;

    bool contains(Vertex v) const { return v >= 0 && v < size(); }

    bool operator==(const Tree& o) const { return parent_ == o.parent_ && labels_ == o.labels_ && family_ == o.family_; }

private:
    std::vector<Vertex> parent_;
    std::vector<std::vector<Vertex>> children_;
    std::vector<int> depth_;
    std::vector<VertexAddress> labels_;
    Family family_;
};

/// 1 + m + ... + m^(h-1): the vertex count of T_{m,h-1}.
std::int64_t geometric_count(int m, int h);

Tree build_complete_mary_tree(int m, int h);
Tree build_spider(int k, int t, SpiderShape shape = SpiderShape::path);
Tree build_double_tree(int m, int h);

/// Reorders an arbitrary rooted tree breadth first. Children of each vertex
/// are visited in the order they appear in `children`.
Tree tree_from_children(const std::vector<std::vector<Vertex>>& children, Vertex root, Family family);

}  // namespace treewave
