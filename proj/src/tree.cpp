#include "treewave/tree.hpp"

#include <algorithm>
#include <deque>
#include <sstream>
#include <stdexcept>

namespace treewave {

std::string to_string(SpiderShape s)
{
    switch (s) {
    case SpiderShape::path: return "path";
    case SpiderShape::star: return "star";
    case SpiderShape::full_mary: return "full_mary";
    }
    return "path";
}

SpiderShape parse_spider_shape(const std::string& s)
{
    if (s == "path") return SpiderShape::path;
    if (s == "star") return SpiderShape::star;
    if (s == "full_mary" || s == "full_mary_if_applicable" || s == "mary") return SpiderShape::full_mary;
    throw std::invalid_argument("unknown spider shape: " + s);
}

std::string to_string(const Family& f)
{
    std::ostringstream os;
    switch (f.kind) {
    case Family::Kind::mary: os << "mary(" << f.m << "," << f.h << ")"; break;
    case Family::Kind::spider: os << "spider(" << f.k << "," << f.t << "," << to_string(f.shape) << ")"; break;
    case Family::Kind::double_tree: os << "double(" << f.m << "," << f.h << ")"; break;
    case Family::Kind::explicit_tree: os << "explicit"; break;
    }
    return os.str();
}

Tree::Tree(std::vector<Vertex> parent, std::vector<VertexAddress> labels, Family family)
    : parent_(std::move(parent)), labels_(std::move(labels)), family_(family)
{
    const int n = size();
    if (n == 0) throw std::invalid_argument("tree must have at least one vertex");
    if (parent_[0] != -1) throw std::invalid_argument("vertex 0 must be the root");
    for (Vertex v = 1; v < n; ++v) {
        if (parent_[v] < 0 || parent_[v] >= v)
            throw std::invalid_argument("parent of vertex " + std::to_string(v) + " must precede it");
    }
    if (!labels_.empty() && static_cast<int>(labels_.size()) != n)
        throw std::invalid_argument("label count does not match vertex count");

    children_.assign(n, {});
    depth_.assign(n, 0);
    for (Vertex v = 1; v < n; ++v) {
        children_[parent_[v]].push_back(v);
        depth_[v] = depth_[parent_[v]] + 1;
    }
}

int Tree::height() const { return *std::max_element(depth_.begin(), depth_.end()); }

std::optional<Vertex> Tree::find(const VertexAddress& address) const
{
    // Labels are sorted by (length, digits) for every labelled family.
    auto it = std::find(labels_.begin(), labels_.end(), address);
    if (it == labels_.end()) return std::nullopt;
    return static_cast<Vertex>(it - labels_.begin());
}

std::vector<int> Tree::subtree_sizes() const
{
    std::vector<int> sz(size(), 1);
    for (Vertex v = size() - 1; v > 0; --v) sz[parent_[v]] += sz[v];
    return sz;
}

std::vector<Vertex> Tree::subtree(Vertex v) const
{
    std::vector<Vertex> out{v};
    for (std::size_t i = 0; i < out.size(); ++i)
        for (Vertex c : children_[out[i]]) out.push_back(c);
    std::sort(out.begin(), out.end());
    return out;
}

std::int64_t geometric_count(int m, int h)
{
    std::int64_t sum = 0, term = 1;
    for (int i = 0; i < h; ++i) {
        sum += term;
        term *= m;
    }
    return sum;
}

namespace {

// Breadth-first addresses of T_{m,h}, children in ascending digit order.
std::vector<VertexAddress> mary_addresses(int m, int h)
{
    std::vector<VertexAddress> out{{}};
    for (std::size_t i = 0; i < out.size(); ++i) {
        if (static_cast<int>(out[i].size()) == h) continue;
        for (int d = 1; d <= m; ++d) {
            auto child = out[i];
            child.push_back(d);
            out.push_back(std::move(child));
        }
    }
    return out;
}

std::vector<Vertex> parents_from_addresses(const std::vector<VertexAddress>& addrs)
{
    std::vector<Vertex> parent(addrs.size(), -1);
    std::vector<Vertex> frontier{0};
    // Addresses are in BFS order, so each vertex's parent is the most recent
    // vertex whose address is its prefix; a linear scan over a queue suffices.
    std::size_t head = 0;
    for (std::size_t v = 1; v < addrs.size(); ++v) {
        VertexAddress prefix(addrs[v].begin(), addrs[v].end() - 1);
        while (addrs[frontier[head]] != prefix) ++head;
        parent[v] = frontier[head];
        frontier.push_back(static_cast<Vertex>(v));
    }
    return parent;
}

}  // namespace

Tree build_complete_mary_tree(int m, int h)
{
    if (m < 1) throw std::invalid_argument("m must be at least 1");
    if (h < 0) throw std::invalid_argument("h must be non-negative");
    auto addrs = mary_addresses(m, h);
    auto parent = parents_from_addresses(addrs);
    return Tree(std::move(parent), std::move(addrs), Family::mary(m, h));
}

Tree tree_from_children(const std::vector<std::vector<Vertex>>& children, Vertex root, Family family)
{
    const int n = static_cast<int>(children.size());
    std::vector<Vertex> order{root};
    std::vector<Vertex> new_id(n, -1);
    new_id[root] = 0;
    std::vector<Vertex> parent{-1};
    for (std::size_t i = 0; i < order.size(); ++i) {
        for (Vertex c : children[order[i]]) {
            if (new_id[c] != -1) throw std::invalid_argument("children lists do not describe a tree");
            new_id[c] = static_cast<Vertex>(order.size());
            order.push_back(c);
            parent.push_back(static_cast<Vertex>(i));
        }
    }
    if (static_cast<int>(order.size()) != n) throw std::invalid_argument("children lists do not span all vertices");
    return Tree(std::move(parent), {}, family);
}

namespace {

// Levels g with t = 1 + k + ... + k^(g-1), if any.
std::optional<int> mary_levels_for(int k, int t)
{
    if (k == 1) return t;
    std::int64_t sum = 0, term = 1;
    for (int g = 1; sum < t; ++g) {
        sum += term;
        term *= k;
        if (sum == t) return g;
    }
    return std::nullopt;
}

}  // namespace

Tree build_spider(int k, int t, SpiderShape shape)
{
    if (k < 1 || t < 1) throw std::invalid_argument("spider needs k >= 1 and t >= 1");
    const Family family = Family::spider(k, t, shape);

    if (shape == SpiderShape::full_mary) {
        // Complete k-ary legs make the spider T_{k,levels}; keep its addresses.
        const auto levels = mary_levels_for(k, t);
        if (!levels) throw std::invalid_argument("t = " + std::to_string(t) + " is not the size of a complete " + std::to_string(k) + "-ary tree");
        auto addrs = mary_addresses(k, *levels);
        auto parent = parents_from_addresses(addrs);
        return Tree(std::move(parent), std::move(addrs), family);
    }

    std::vector<std::vector<Vertex>> children(1 + static_cast<std::size_t>(k) * t);
    for (int c = 0; c < k; ++c) {
        const Vertex base = 1 + c * t;
        children[0].push_back(base);
        for (int i = 1; i < t; ++i) {
            if (shape == SpiderShape::path)
                children[base + i - 1].push_back(base + i);
            else
                children[base].push_back(base + i);
        }
    }
    return tree_from_children(children, 0, family);
}

Tree build_double_tree(int m, int h)
{
    if (m < 2) throw std::invalid_argument("double tree needs m >= 2");
    if (h < 1) throw std::invalid_argument("double tree needs h >= 1");

    // Side digit 1 is the A copy, 2 the B copy; vertex 0 = a, vertex 1 = b.
    const auto copy = mary_addresses(m, h - 1);
    std::vector<VertexAddress> addrs;
    addrs.reserve(2 * copy.size());
    std::size_t i = 0;
    while (i < copy.size()) {
        std::size_t j = i;
        while (j < copy.size() && copy[j].size() == copy[i].size()) ++j;
        for (int side = 1; side <= 2; ++side) {
            for (std::size_t x = i; x < j; ++x) {
                VertexAddress a{side};
                a.insert(a.end(), copy[x].begin(), copy[x].end());
                addrs.push_back(std::move(a));
            }
        }
        i = j;
    }

    std::vector<Vertex> parent(addrs.size(), -1);
    parent[1] = 0;
    for (std::size_t v = 2; v < addrs.size(); ++v) {
        VertexAddress prefix(addrs[v].begin(), addrs[v].end() - 1);
        // Parents sit one layer up, so a backward search is short.
        for (std::size_t p = v; p-- > 0;) {
            if (addrs[p] == prefix) {
                parent[v] = static_cast<Vertex>(p);
                break;
            }
        }
    }
    return Tree(std::move(parent), std::move(addrs), Family::double_tree(m, h));
}

}  // namespace treewave
