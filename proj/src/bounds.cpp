#include "treewave/bounds.hpp"

#include <algorithm>
#include <numeric>
#include <stdexcept>

namespace treewave {

const char* to_string(CutCertificate::Kind k)
{
    return k == CutCertificate::Kind::edge_cut ? "edge_cut" : "vertex_cut";
}

namespace {

std::int64_t ceil_div(std::int64_t a, std::int64_t b) { return (a + b - 1) / b; }

std::vector<char> membership(const Tree& tree, const std::vector<Vertex>& S)
{
    std::vector<char> in(static_cast<std::size_t>(tree.size()), 0);
    for (Vertex v : S) {
        if (!tree.contains(v)) throw std::out_of_range("cut vertex out of range");
        in[v] = 1;
    }
    return in;
}

std::int64_t crossing_edges(const Tree& tree, const std::vector<char>& in)
{
    std::int64_t c = 0;
    for (Vertex v = 1; v < tree.size(); ++v) c += in[v] != in[tree.parent(v)];
    return c;
}

std::vector<Vertex> normalised(std::vector<Vertex> S)
{
    std::sort(S.begin(), S.end());
    S.erase(std::unique(S.begin(), S.end()), S.end());
    return S;
}

}  // namespace

CutCertificate edge_cut_bound_tree(const Tree& tree)
{
    const int n = tree.size();
    if (n < 2) throw std::invalid_argument("edge cut needs at least two vertices");
    const auto sz = tree.subtree_sizes();
    CutCertificate best;
    best.kind = CutCertificate::Kind::edge_cut;
    best.crossing = 1;
    best.bound = -1;
    for (Vertex e = 1; e < n; ++e) {
        const std::int64_t a = sz[e];
        const std::int64_t value = a * (n - a);
        if (value > best.bound) {
            best.bound = value;
            best.witness_edge = e;
        }
    }
    best.witness_set = tree.subtree(*best.witness_edge);
    return best;
}

CutCertificate edge_cut_bound_at(const Tree& tree, const std::vector<Vertex>& S_in)
{
    const auto S = normalised(S_in);
    const auto n = static_cast<std::int64_t>(tree.size());
    const auto s = static_cast<std::int64_t>(S.size());
    if (s == 0 || s == n) throw std::invalid_argument("S must be a non-empty proper subset");
    const auto in = membership(tree, S);

    CutCertificate c;
    c.kind = CutCertificate::Kind::edge_cut;
    c.witness_set = S;
    c.crossing = crossing_edges(tree, in);
    c.bound = ceil_div(s * (n - s), c.crossing);
    if (c.crossing == 1) {
        for (Vertex v = 1; v < tree.size(); ++v)
            if (in[v] != in[tree.parent(v)]) c.witness_edge = v;
    }
    return c;
}

CutCertificate vertex_cut_bound_at(const Tree& tree, const std::vector<Vertex>& S_in)
{
    const auto S = normalised(S_in);
    if (S.empty()) throw std::invalid_argument("vertex cut must be non-empty");
    const auto in = membership(tree, S);
    const int n = tree.size();

    // Label components of tree - S; numbering follows each component's smallest vertex.
    std::vector<int> comp(static_cast<std::size_t>(n), -1);
    std::vector<std::int64_t> sizes;
    std::vector<std::vector<Vertex>> adj(static_cast<std::size_t>(n));
    for (Vertex v = 1; v < n; ++v) {
        if (in[v] || in[tree.parent(v)]) continue;
        adj[v].push_back(tree.parent(v));
        adj[tree.parent(v)].push_back(v);
    }
    for (Vertex v = 0; v < n; ++v) {
        if (in[v] || comp[v] != -1) continue;
        const int id = static_cast<int>(sizes.size());
        sizes.push_back(0);
        std::vector<Vertex> stack{v};
        comp[v] = id;
        while (!stack.empty()) {
            Vertex x = stack.back();
            stack.pop_back();
            ++sizes[id];
            for (Vertex y : adj[x]) {
                if (comp[y] == -1) {
                    comp[y] = id;
                    stack.push_back(y);
                }
            }
        }
    }
    if (sizes.size() < 2) throw std::invalid_argument("S is not a vertex cut");

    const std::int64_t total = std::accumulate(sizes.begin(), sizes.end(), std::int64_t{0});
    std::int64_t squares = 0;
    for (auto a : sizes) squares += a * a;
    const std::int64_t pairs = (total * total - squares) / 2;

    CutCertificate c;
    c.kind = CutCertificate::Kind::vertex_cut;
    c.witness_set = S;
    c.crossing = crossing_edges(tree, in);
    c.component_sizes = sizes;
    const std::int64_t per_color = c.crossing / 2;
    if (per_color == 0) throw std::logic_error("vertex cut with fewer than two crossing edges");
    c.bound = ceil_div(pairs, per_color);
    return c;
}

CutCertificate best_vertex_cut_bound(const Tree& tree, int max_cut_size)
{
    if (max_cut_size < 1) throw std::invalid_argument("max_cut_size must be at least 1");
    const int n = tree.size();
    std::optional<CutCertificate> best;

    for (int size = 1; size <= std::min(max_cut_size, n); ++size) {
        std::vector<Vertex> S(static_cast<std::size_t>(size));
        std::iota(S.begin(), S.end(), 0);
        while (true) {
            // A set is a cut iff removing it leaves at least two components.
            try {
                auto c = vertex_cut_bound_at(tree, S);
                if (!best || c.bound > best->bound) best = std::move(c);
            } catch (const std::invalid_argument&) {
            }
            int i = size - 1;
            while (i >= 0 && S[i] == n - size + i) --i;
            if (i < 0) break;
            ++S[i];
            for (int j = i + 1; j < size; ++j) S[j] = S[j - 1] + 1;
        }
    }
    if (!best) throw std::invalid_argument("tree has no vertex cut of the requested size");
    return *best;
}

std::int64_t forwarding_index_tree(const Tree& tree) { return edge_cut_bound_tree(tree).bound; }

std::int64_t closed_form_w(int m, int h)
{
    if (m < 1) throw std::invalid_argument("m must be at least 1");
    if (h < 0) throw std::invalid_argument("h must be non-negative");
    if (h == 0) return 0;
    if (m == 1) {
        const std::int64_t n = h + 1;
        return (n / 2) * ((n + 1) / 2);
    }
    if (m == 2) {
        if (h == 1) return 2;
        if (h == 2) return 12;
        const std::int64_t p = std::int64_t{1} << h;
        return 5 * (p * p / 4) - 3 * p + 1;
    }
    const std::int64_t t = geometric_count(m, h);
    if (m % 2 == 1) return m * t * t;
    std::int64_t mh = 1;
    for (int i = 0; i < h; ++i) mh *= m;
    return mh * t;
}

std::int64_t closed_form_pi_spider(int k, int t)
{
    if (k < 2) throw std::invalid_argument("closed form holds for k >= 2");
    if (t < 1) throw std::invalid_argument("t must be at least 1");
    const std::int64_t tt = t;
    return (k - 1) * tt * tt + tt;
}

std::int64_t closed_form_w_spider(int k, int t)
{
    if (k < 3 || k % 2 == 0) throw std::invalid_argument("optical index known only for odd k >= 3");
    if (t < 1) throw std::invalid_argument("t must be at least 1");
    const std::int64_t tt = t;
    return k * tt * tt;
}

Rational ratio_w_over_pi_spider(int k, int t)
{
    if (k < 3 || k % 2 == 0) throw std::invalid_argument("ratio is only established for odd k >= 3");
    if (t < 1) throw std::invalid_argument("t must be at least 1");
    return Rational(std::int64_t{k} * t, std::int64_t{k - 1} * t + 1);
}

FeasibleDelta feasible_delta_family(BinarySelector sel)
{
    // The closed form for binary trees only takes its general shape from h = 3.
    if (sel.h < 3) throw std::invalid_argument("binary family needs h >= 3");
    const std::int64_t p = std::int64_t{1} << sel.h;
    const std::int64_t num = p * p / 4 - 2 * p + 1;
    const std::int64_t den = p * p - p;
    return {Rational(1) + Rational(num, den), Family::mary(2, sel.h)};
}

FeasibleDelta feasible_delta_family(SpiderSelector sel)
{
    if (sel.k < 3 || sel.k % 2 == 0) throw std::invalid_argument("spider family needs odd k >= 3");
    if (sel.t < 1) throw std::invalid_argument("t must be at least 1");
    const std::int64_t t = sel.t;
    return {Rational(1) + Rational(t - 1, (sel.k - 1) * t + 1), Family::spider(sel.k, sel.t, SpiderShape::path)};
}

}  // namespace treewave
