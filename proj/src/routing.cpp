#include "treewave/routing.hpp"

#include <algorithm>
#include <bit>
#include <stdexcept>

namespace treewave {

Routing::Routing(int num_vertices, std::vector<Path> paths) : n_(num_vertices), paths_(std::move(paths))
{
    const auto expected = static_cast<std::size_t>(n_) * (n_ - 1) / 2;
    if (paths_.size() != expected) throw std::invalid_argument("routing must hold one path per vertex pair");
}

std::size_t Routing::index_of(Vertex u, Vertex v) const
{
    if (u > v) std::swap(u, v);
    if (u == v || u < 0 || v >= n_) throw std::out_of_range("no path between the given vertices");
    const auto uu = static_cast<std::size_t>(u);
    return uu * n_ - uu * (uu + 1) / 2 + static_cast<std::size_t>(v - u - 1);
}

std::vector<std::vector<std::size_t>> Routing::edge_buckets() const
{
    std::vector<std::vector<std::size_t>> buckets(static_cast<std::size_t>(n_));
    for (std::size_t i = 0; i < paths_.size(); ++i)
        for (EdgeId e : paths_[i].edges) buckets[e].push_back(i);
    return buckets;
}

Path tree_path(const Tree& tree, Vertex u, Vertex v)
{
    if (!tree.contains(u) || !tree.contains(v)) throw std::out_of_range("vertex id out of range");
    if (u == v) throw std::invalid_argument("path endpoints must differ");
    if (u > v) std::swap(u, v);

    Path p{u, v, {}};
    Vertex x = u, y = v;
    while (tree.depth(x) > tree.depth(y)) {
        p.edges.push_back(x);
        x = tree.parent(x);
    }
    while (tree.depth(y) > tree.depth(x)) {
        p.edges.push_back(y);
        y = tree.parent(y);
    }
    while (x != y) {
        p.edges.push_back(x);
        p.edges.push_back(y);
        x = tree.parent(x);
        y = tree.parent(y);
    }
    std::sort(p.edges.begin(), p.edges.end());
    return p;
}

Routing all_pairs_routing(const Tree& tree, bool allow_empty)
{
    const int n = tree.size();
    if (n < 2 && !allow_empty) throw std::invalid_argument("routing needs at least two vertices");
    std::vector<Path> paths;
    paths.reserve(static_cast<std::size_t>(n) * (n - 1) / 2);
    for (Vertex u = 0; u < n; ++u)
        for (Vertex v = u + 1; v < n; ++v) paths.push_back(tree_path(tree, u, v));
    return Routing(n, std::move(paths));
}

std::vector<std::int64_t> edge_loads(const Routing& routing, const Tree& tree)
{
    if (routing.num_vertices() != tree.size()) throw std::invalid_argument("routing was not built from this tree");
    std::vector<std::int64_t> load(static_cast<std::size_t>(tree.size()), 0);
    for (const Path& p : routing) {
        for (EdgeId e : p.edges) {
            if (e <= 0 || e >= tree.size()) throw std::invalid_argument("routing was not built from this tree");
            ++load[e];
        }
    }
    return load;
}

ConflictGraph::ConflictGraph(int order)
    : order_(order), words_((order + 63) / 64), bits_(static_cast<std::size_t>(order) * words_, 0)
{
}

void ConflictGraph::add_edge(int i, int j)
{
    if (i == j) return;
    bits_[static_cast<std::size_t>(i) * words_ + (j >> 6)] |= std::uint64_t{1} << (j & 63);
    bits_[static_cast<std::size_t>(j) * words_ + (i >> 6)] |= std::uint64_t{1} << (i & 63);
}

int ConflictGraph::degree(int i) const
{
    int d = 0;
    const auto* r = row(i);
    for (int w = 0; w < words_; ++w) d += std::popcount(r[w]);
    return d;
}

std::int64_t ConflictGraph::num_edges() const
{
    std::int64_t total = 0;
    for (int i = 0; i < order_; ++i) total += degree(i);
    return total / 2;
}

std::int64_t max_claw_clique(const Routing& routing)
{
    // The single-edge paths are the tree's edges.
    const int n = routing.num_vertices();
    std::vector<std::vector<Vertex>> adj(static_cast<std::size_t>(n));
    for (const Path& p : routing)
        if (p.length() == 1) {
            adj[p.u].push_back(p.v);
            adj[p.v].push_back(p.u);
        }
    if (n < 4) return 0;

    // Subtree sizes from a DFS rooted at 0 give every branch size at every vertex.
    std::vector<Vertex> order{0}, parent(static_cast<std::size_t>(n), -1);
    parent[0] = 0;
    for (std::size_t i = 0; i < order.size(); ++i)
        for (Vertex y : adj[order[i]])
            if (parent[y] == -1) {
                parent[y] = order[i];
                order.push_back(y);
            }
    std::vector<std::int64_t> below(static_cast<std::size_t>(n), 1);
    for (std::size_t i = order.size(); i-- > 1;) below[parent[order[i]]] += below[order[i]];

    std::int64_t best = 0;
    for (Vertex v = 0; v < n; ++v) {
        if (adj[v].size() < 3) continue;
        std::vector<std::int64_t> branch;
        for (Vertex y : adj[v]) branch.push_back(y == parent[v] && v != 0 ? n - below[v] : below[y]);
        std::sort(branch.rbegin(), branch.rend());
        best = std::max(best, branch[0] * branch[1] + branch[0] * branch[2] + branch[1] * branch[2]);
    }
    return best;
}

ConflictGraph conflict_graph(const Routing& routing)
{
    ConflictGraph cg(static_cast<int>(routing.size()));
    std::int64_t max_load = 0;
    for (const auto& bucket : routing.edge_buckets()) {
        max_load = std::max<std::int64_t>(max_load, static_cast<std::int64_t>(bucket.size()));
        for (std::size_t a = 0; a < bucket.size(); ++a)
            for (std::size_t b = a + 1; b < bucket.size(); ++b)
                cg.add_edge(static_cast<int>(bucket[a]), static_cast<int>(bucket[b]));
    }
    cg.tree_max_load = max_load;
    cg.tree_clique_number = std::max(max_load, max_claw_clique(routing));
    return cg;
}

}  // namespace treewave
