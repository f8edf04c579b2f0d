#include "treewave/exact.hpp"

#include <algorithm>
#include <bit>
#include <chrono>
#include <map>
#include <numeric>
#include <stdexcept>
#include <string>

#include "treewave/bounds.hpp"

namespace treewave {

namespace {

using Clock = std::chrono::steady_clock;

class Deadline {
public:
    explicit Deadline(std::int64_t budget_ms) : end_(Clock::now() + std::chrono::milliseconds(budget_ms)) {}

    // Polls the clock every 1024 calls.
    bool expired()
    {
        if (hit_) return true;
        if ((++ticks_ & 1023u) == 0 && Clock::now() > end_) hit_ = true;
        return hit_;
    }
    bool hit() const { return hit_; }

private:
    Clock::time_point end_;
    std::uint64_t ticks_ = 0;
    bool hit_ = false;
};

using Bits = std::vector<std::uint64_t>;

int count(const Bits& b)
{
    int c = 0;
    for (auto w : b) c += std::popcount(w);
    return c;
}

class CliqueSearch {
public:
    CliqueSearch(const ConflictGraph& cg, std::int64_t budget_ms) : cg_(cg), deadline_(budget_ms) {}

    CliqueResult run()
    {
        Bits all(static_cast<std::size_t>(cg_.words()), 0);
        for (int v = 0; v < cg_.order(); ++v) all[v >> 6] |= std::uint64_t{1} << (v & 63);
        std::vector<int> current;
        expand(current, all);
        CliqueResult r;
        r.size = static_cast<int>(best_.size());
        r.members = best_;
        std::sort(r.members.begin(), r.members.end());
        r.exact = !deadline_.hit();
        return r;
    }

private:
    // Greedy sequential coloring of P; colors bound the clique reachable from each vertex.
    void color_sort(const Bits& P, std::vector<int>& order, std::vector<int>& bound) const
    {
        Bits uncolored = P;
        int color = 0;
        while (count(uncolored) > 0) {
            ++color;
            Bits q = uncolored;
            for (int w = 0; w < cg_.words(); ++w) {
                while (q[w]) {
                    const int v = w * 64 + std::countr_zero(q[w]);
                    q[w] &= q[w] - 1;
                    uncolored[v >> 6] &= ~(std::uint64_t{1} << (v & 63));
                    order.push_back(v);
                    bound.push_back(color);
                    const auto* row = cg_.row(v);
                    for (int x = w; x < cg_.words(); ++x) q[x] &= ~row[x];
                }
            }
        }
    }

    void expand(std::vector<int>& current, Bits P)
    {
        if (deadline_.expired()) return;
        std::vector<int> order, bound;
        color_sort(P, order, bound);
        for (std::size_t i = order.size(); i-- > 0;) {
            if (current.size() + static_cast<std::size_t>(bound[i]) <= best_.size()) return;
            const int v = order[i];
            current.push_back(v);
            Bits next(P.size());
            const auto* row = cg_.row(v);
            for (std::size_t w = 0; w < P.size(); ++w) next[w] = P[w] & row[w];
            if (count(next) == 0) {
                if (current.size() > best_.size()) best_ = current;
            } else {
                expand(current, std::move(next));
            }
            current.pop_back();
            P[v >> 6] &= ~(std::uint64_t{1} << (v & 63));
            if (deadline_.hit()) return;
        }
    }

    const ConflictGraph& cg_;
    Deadline deadline_;
    std::vector<int> best_;
};

// Exact coloring by DSATUR branch and bound.
class ColoringSearch {
public:
    ColoringSearch(const ConflictGraph& cg, std::int64_t budget_ms)
        : cg_(cg), n_(cg.order()), deadline_(budget_ms), adj_(static_cast<std::size_t>(n_))
    {
        for (int v = 0; v < n_; ++v)
            for (int u = 0; u < n_; ++u)
                if (cg.adjacent(v, u)) adj_[v].push_back(u);
    }

    // Returns the best coloring found (possibly the starting one) and whether
    // the search ran to completion.
    std::pair<std::vector<int>, bool> run(const std::vector<int>& clique, std::vector<int> start, int lower)
    {
        best_ = std::move(start);
        best_count_ = best_.empty() ? 0 : *std::max_element(best_.begin(), best_.end()) + 1;
        lower_ = lower;
        if (best_count_ <= lower_) return {best_, true};

        colors_.assign(static_cast<std::size_t>(n_), -1);
        seen_.assign(static_cast<std::size_t>(n_), std::vector<int>(static_cast<std::size_t>(best_count_), 0));
        sat_.assign(static_cast<std::size_t>(n_), 0);
        int used = 0;
        for (int v : clique) assign(v, used++);
        search(static_cast<int>(clique.size()), used);
        return {best_, !deadline_.hit()};
    }

private:
    void assign(int v, int c)
    {
        colors_[v] = c;
        for (int u : adj_[v])
            if (seen_[u][c]++ == 0) ++sat_[u];
    }

    void unassign(int v)
    {
        const int c = colors_[v];
        colors_[v] = -1;
        for (int u : adj_[v])
            if (--seen_[u][c] == 0) --sat_[u];
    }

    int pick() const
    {
        int best = -1, best_sat = -1, best_deg = -1;
        for (int v = 0; v < n_; ++v) {
            if (colors_[v] != -1) continue;
            int deg = 0;
            for (int u : adj_[v]) deg += colors_[u] == -1;
            if (sat_[v] > best_sat || (sat_[v] == best_sat && deg > best_deg)) {
                best = v;
                best_sat = sat_[v];
                best_deg = deg;
            }
        }
        return best;
    }

    // Returns true once the lower bound is met.
    bool search(int colored, int used)
    {
        if (deadline_.expired()) return false;
        if (colored == n_) {
            best_ = colors_;
            best_count_ = used;
            return best_count_ <= lower_;
        }
        const int v = pick();
        for (int c = 0; c < used && c < best_count_ - 1; ++c) {
            if (seen_[v][c]) continue;
            assign(v, c);
            const bool done = search(colored + 1, used);
            unassign(v);
            if (done || deadline_.hit()) return done;
        }
        if (used + 1 < best_count_) {
            assign(v, used);
            const bool done = search(colored + 1, used + 1);
            unassign(v);
            if (done) return true;
        }
        return false;
    }

    const ConflictGraph& cg_;
    int n_;
    Deadline deadline_;
    std::vector<std::vector<int>> adj_;
    std::vector<int> colors_;
    std::vector<std::vector<int>> seen_;
    std::vector<int> sat_;
    std::vector<int> best_;
    int best_count_ = 0;
    int lower_ = 0;
};

// DSATUR heuristic, used as the starting upper bound.
std::vector<int> dsatur_heuristic(const ConflictGraph& cg)
{
    const int n = cg.order();
    std::vector<int> colors(static_cast<std::size_t>(n), -1);
    std::vector<std::vector<char>> seen(static_cast<std::size_t>(n));
    std::vector<int> sat(static_cast<std::size_t>(n), 0), deg(static_cast<std::size_t>(n));
    for (int v = 0; v < n; ++v) deg[v] = cg.degree(v);
    for (int step = 0; step < n; ++step) {
        int v = -1;
        for (int u = 0; u < n; ++u) {
            if (colors[u] != -1) continue;
            if (v == -1 || sat[u] > sat[v] || (sat[u] == sat[v] && deg[u] > deg[v])) v = u;
        }
        int c = 0;
        while (c < static_cast<int>(seen[v].size()) && seen[v][c]) ++c;
        colors[v] = c;
        for (int u = 0; u < n; ++u) {
            if (!cg.adjacent(u, v)) continue;
            if (static_cast<int>(seen[u].size()) <= c) seen[u].resize(c + 1, 0);
            if (!seen[u][c]) {
                seen[u][c] = 1;
                ++sat[u];
            }
        }
    }
    return colors;
}

}  // namespace

CliqueResult max_clique_search(const ConflictGraph& cg, std::int64_t budget_ms)
{
    if (cg.order() == 0) return {};
    return CliqueSearch(cg, budget_ms).run();
}

CliqueResult max_clique(const ConflictGraph& cg, std::int64_t budget_ms)
{
    if (cg.tree_clique_number) {
        CliqueResult r;
        // Pairwise intersecting tree paths either share an edge or each use
        // two of the three edges of a claw.
        r.size = static_cast<int>(std::max<std::int64_t>(*cg.tree_clique_number, cg.order() > 0 ? 1 : 0));
        return r;
    }
    return max_clique_search(cg, budget_ms);
}

ChromaticResult exact_chromatic(const ConflictGraph& cg, int lb_hint, int ub_hint, std::int64_t budget_ms)
{
    if (lb_hint < 0 || ub_hint < 0) throw std::invalid_argument("hints must be non-negative");
    if (ub_hint > 0 && lb_hint > ub_hint) throw std::invalid_argument("lower hint exceeds upper hint");

    ChromaticResult res;
    if (cg.order() == 0) {
        res.exact = 0;
        res.witness = WavelengthAssignment{{}, 0, ColoringMethod::exact};
        return res;
    }

    const auto start = Clock::now();
    const auto clique = max_clique_search(cg, std::max<std::int64_t>(budget_ms / 4, 1));
    const auto spent = std::chrono::duration_cast<std::chrono::milliseconds>(Clock::now() - start).count();

    const int lower = std::max(lb_hint, clique.size);
    auto initial = dsatur_heuristic(cg);
    auto [colors, complete] = ColoringSearch(cg, std::max<std::int64_t>(budget_ms - spent, 1)).run(clique.members, initial, lower);

    const int found = *std::max_element(colors.begin(), colors.end()) + 1;
    res.lower = complete ? found : lower;
    res.upper = ub_hint > 0 ? std::min(found, ub_hint) : found;
    res.budget_exhausted = !complete;
    if (res.lower == res.upper) res.exact = res.upper;
    if (found == res.upper) res.witness = WavelengthAssignment{colors, found, ColoringMethod::exact};
    return res;
}

// ---------------------------------------------------------------------------
// Small trees

namespace {

using Adjacency = std::vector<std::vector<int>>;

std::vector<int> centroids(const Adjacency& adj)
{
    const int n = static_cast<int>(adj.size());
    std::vector<int> parent(static_cast<std::size_t>(n), -1), order{0}, size(static_cast<std::size_t>(n), 1);
    std::vector<char> visited(static_cast<std::size_t>(n), 0);
    visited[0] = 1;
    for (std::size_t i = 0; i < order.size(); ++i)
        for (int u : adj[order[i]])
            if (!visited[u]) {
                visited[u] = 1;
                parent[u] = order[i];
                order.push_back(u);
            }
    for (std::size_t i = order.size(); i-- > 1;) size[parent[order[i]]] += size[order[i]];

    std::vector<int> out;
    for (int v = 0; v < n; ++v) {
        int heaviest = n - size[v];
        for (int u : adj[v])
            if (u != parent[v]) heaviest = std::max(heaviest, size[u]);
        if (2 * heaviest <= n) out.push_back(v);
    }
    return out;
}

std::string encode(const Adjacency& adj, int v, int parent)
{
    std::vector<std::string> parts;
    for (int u : adj[v])
        if (u != parent) parts.push_back(encode(adj, u, v));
    std::sort(parts.begin(), parts.end());
    std::string s = "(";
    for (const auto& p : parts) s += p;
    return s + ")";
}

std::pair<std::string, int> canonical_root(const Adjacency& adj)
{
    std::pair<std::string, int> best{"", -1};
    for (int c : centroids(adj)) {
        auto s = encode(adj, c, -1);
        if (best.second == -1 || s < best.first) best = {std::move(s), c};
    }
    return best;
}

Adjacency adjacency_of(const Tree& tree)
{
    Adjacency adj(static_cast<std::size_t>(tree.size()));
    for (Vertex v = 1; v < tree.size(); ++v) {
        adj[v].push_back(tree.parent(v));
        adj[tree.parent(v)].push_back(v);
    }
    return adj;
}

Tree rooted_canonically(const Adjacency& adj)
{
    const int root = canonical_root(adj).second;
    std::vector<std::vector<Vertex>> children(adj.size());
    std::vector<int> order{root}, parent(adj.size(), -1);
    parent[root] = root;
    for (std::size_t i = 0; i < order.size(); ++i) {
        const int v = order[i];
        std::vector<std::pair<std::string, int>> kids;
        for (int u : adj[v])
            if (parent[u] == -1) {
                parent[u] = v;
                kids.emplace_back(encode(adj, u, v), u);
            }
        std::sort(kids.begin(), kids.end());
        for (auto& [code, u] : kids) {
            children[v].push_back(u);
            order.push_back(u);
        }
    }
    return tree_from_children(children, root, Family::explicit_tree());
}

}  // namespace

std::string canonical_form(const Tree& tree) { return canonical_root(adjacency_of(tree)).first; }

std::vector<Tree> enumerate_small_trees(int n)
{
    if (n < 2 || n > 10) throw std::invalid_argument("tree enumeration supports 2 <= n <= 10");

    std::map<std::string, Adjacency> level{{"()", Adjacency(1)}};
    for (int size = 2; size <= n; ++size) {
        std::map<std::string, Adjacency> next;
        for (const auto& [code, adj] : level) {
            for (int v = 0; v < size - 1; ++v) {
                Adjacency grown = adj;
                grown.emplace_back();
                grown[v].push_back(size - 1);
                grown[size - 1].push_back(v);
                auto key = canonical_root(grown).first;
                next.try_emplace(std::move(key), std::move(grown));
            }
        }
        level = std::move(next);
    }

    std::vector<Tree> out;
    for (const auto& [code, adj] : level) out.push_back(rooted_canonically(adj));
    return out;
}

// ---------------------------------------------------------------------------

const char* to_string(OptimalityCertificate::Source s)
{
    switch (s) {
    case OptimalityCertificate::Source::edge_cut: return "edge_cut";
    case OptimalityCertificate::Source::vertex_cut: return "vertex_cut";
    case OptimalityCertificate::Source::clique: return "clique";
    case OptimalityCertificate::Source::exact_search: return "exact_search";
    }
    return "edge_cut";
}

OptimalityCertificate certify(int m, int h, const CertifyOptions& options)
{
    if (m < 1 || h < 1) throw std::invalid_argument("certify needs m >= 1 and h >= 1");
    const Tree tree = build_complete_mary_tree(m, h);

    OptimalityCertificate cert;
    cert.instance = Family::mary(m, h);
    cert.constructive = color_mary(m, h).num_colors;

    cert.lower = edge_cut_bound_tree(tree).bound;
    cert.lower_bound_source = OptimalityCertificate::Source::edge_cut;
    try {
        const auto vc = best_vertex_cut_bound(tree, 1);
        if (vc.bound > cert.lower) {
            cert.lower = vc.bound;
            cert.lower_bound_source = OptimalityCertificate::Source::vertex_cut;
        }
    } catch (const std::invalid_argument&) {
        // No cut vertex (a single edge); the edge cut stands.
    }

    const auto paths = tree.size() * static_cast<std::size_t>(tree.size() - 1) / 2;
    if (cert.lower < cert.constructive && paths <= options.exact_cap) {
        const auto cg = conflict_graph(all_pairs_routing(tree));
        const auto res = exact_chromatic(cg, static_cast<int>(cert.lower), static_cast<int>(cert.constructive),
                                         options.budget_ms);
        cert.budget_exhausted = res.budget_exhausted;
        if (res.exact) cert.exact = *res.exact;
        if (res.lower > cert.lower) {
            cert.lower = res.lower;
            cert.lower_bound_source = OptimalityCertificate::Source::exact_search;
        }
    }
    cert.optimal = cert.lower == cert.constructive;
    return cert;
}

}  // namespace treewave
