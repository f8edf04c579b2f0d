#include "treewave/colorings.hpp"

#include <algorithm>
#include <bit>
#include <map>
#include <functional>
#include <numeric>
#include <set>
#include <stdexcept>

#include "treewave/bounds.hpp"
#include "treewave/designs.hpp"

namespace treewave {

const char* to_string(ColoringMethod m)
{
    switch (m) {
    case ColoringMethod::interval: return "interval";
    case ColoringMethod::binary_canonical: return "binary_canonical";
    case ColoringMethod::odd_total: return "odd_total";
    case ColoringMethod::even_recursive: return "even_recursive";
    case ColoringMethod::double_tree: return "double_tree";
    case ColoringMethod::greedy: return "greedy";
    case ColoringMethod::table_base: return "table_base";
    case ColoringMethod::exact: return "exact";
    }
    return "greedy";
}

VerifyReport verify_assignment(const Routing& routing, const WavelengthAssignment& wa)
{
    if (wa.colors.size() != routing.size()) throw std::invalid_argument("assignment does not cover the routing");
    for (int c : wa.colors)
        if (c < 0) throw std::invalid_argument("assignment leaves a path uncolored");

    std::set<std::pair<std::size_t, std::size_t>> clashes;
    std::map<int, std::vector<std::size_t>> by_color;
    for (const auto& bucket : routing.edge_buckets()) {
        by_color.clear();
        for (std::size_t p : bucket) by_color[wa.colors[p]].push_back(p);
        for (const auto& [color, group] : by_color)
            for (std::size_t a = 0; a < group.size(); ++a)
                for (std::size_t b = a + 1; b < group.size(); ++b) clashes.emplace(group[a], group[b]);
    }

    VerifyReport report;
    for (auto [a, b] : clashes) report.violations.push_back({a, b, wa.colors[a]});
    report.proper = report.violations.empty();
    report.num_colors = static_cast<int>(std::set<int>(wa.colors.begin(), wa.colors.end()).size());
    return report;
}

WavelengthAssignment greedy_coloring(const ConflictGraph& cg, GreedyOrder order)
{
    const int n = cg.order();
    std::vector<int> seq(static_cast<std::size_t>(n));
    std::iota(seq.begin(), seq.end(), 0);
    if (order == GreedyOrder::degree_desc) {
        std::vector<int> deg(static_cast<std::size_t>(n));
        for (int i = 0; i < n; ++i) deg[i] = cg.degree(i);
        std::stable_sort(seq.begin(), seq.end(), [&](int a, int b) { return deg[a] > deg[b]; });
    }

    WavelengthAssignment wa;
    wa.method = ColoringMethod::greedy;
    wa.colors.assign(static_cast<std::size_t>(n), -1);
    std::vector<char> used;
    for (int v : seq) {
        used.assign(static_cast<std::size_t>(wa.num_colors) + 1, 0);
        const auto* row = cg.row(v);
        for (int w = 0; w < cg.words(); ++w) {
            for (std::uint64_t bits = row[w]; bits; bits &= bits - 1) {
                const int u = w * 64 + std::countr_zero(bits);
                if (wa.colors[u] >= 0) used[wa.colors[u]] = 1;
            }
        }
        int c = 0;
        while (used[c]) ++c;
        wa.colors[v] = c;
        wa.num_colors = std::max(wa.num_colors, c + 1);
    }
    return wa;
}

WavelengthAssignment greedy_coloring(const Routing& routing)
{
    // used[e][c]: color c already sits on a path through edge e.
    std::vector<std::vector<char>> used(static_cast<std::size_t>(routing.num_vertices()));
    WavelengthAssignment wa;
    wa.method = ColoringMethod::greedy;
    wa.colors.assign(routing.size(), -1);
    for (std::size_t i = 0; i < routing.size(); ++i) {
        const auto& edges = routing[i].edges;
        int c = 0;
        auto blocked = [&](int color) {
            return std::any_of(edges.begin(), edges.end(), [&](EdgeId e) {
                return color < static_cast<int>(used[e].size()) && used[e][color];
            });
        };
        while (blocked(c)) ++c;
        for (EdgeId e : edges) {
            if (static_cast<int>(used[e].size()) <= c) used[e].resize(c + 1, 0);
            used[e][c] = 1;
        }
        wa.colors[i] = c;
        wa.num_colors = std::max(wa.num_colors, c + 1);
    }
    return wa;
}

namespace {

// BFS id of an address in T_{m,*}.
Vertex mary_id(int m, const VertexAddress& a)
{
    std::int64_t rank = 0;
    for (int d : a) rank = rank * m + (d - 1);
    return static_cast<Vertex>(geometric_count(m, static_cast<int>(a.size())) + rank);
}

VertexAddress concat(const VertexAddress& prefix, const VertexAddress& rest)
{
    VertexAddress out = prefix;
    out.insert(out.end(), rest.begin(), rest.end());
    return out;
}

// Sets num_colors from the colors and refuses to hand back anything improper
// or non-contiguous.
void finish(const Routing& routing, WavelengthAssignment& wa, std::int64_t expected = -1)
{
    wa.num_colors = wa.colors.empty() ? 0 : *std::max_element(wa.colors.begin(), wa.colors.end()) + 1;
    const auto report = verify_assignment(routing, wa);
    if (!report.proper) throw std::logic_error(std::string(to_string(wa.method)) + " coloring is not proper");
    if (report.num_colors != wa.num_colors)
        throw std::logic_error(std::string(to_string(wa.method)) + " coloring skips colors");
    if (expected >= 0 && wa.num_colors != expected)
        throw std::logic_error(std::string(to_string(wa.method)) + " coloring has an unexpected color count");
}

// Canonical-order path indices with one end in X and the other in Y.
std::vector<std::size_t> paths_between(const Routing& R, const std::vector<Vertex>& X, const std::vector<Vertex>& Y)
{
    std::vector<std::size_t> out;
    out.reserve(X.size() * Y.size());
    for (Vertex x : X)
        for (Vertex y : Y) out.push_back(R.index_of(x, y));
    std::sort(out.begin(), out.end());
    return out;
}

// ---------------------------------------------------------------------------
// Binary trees

struct BinaryResult {
    WavelengthAssignment wa;
    BinaryCanonicalStats stats;
};

using AddressPair = std::pair<VertexAddress, VertexAddress>;

// Base tables for h = 1 and h = 2, one row per color. The h = 2 table's last
// row colors {r_{1,2}, r_{2,2}}, the one pair no other row covers.
const std::vector<std::vector<AddressPair>>& base_table(int h)
{
    static const std::vector<std::vector<AddressPair>> h1 = {
        {{{}, {1}}, {{}, {2}}},
        {{{1}, {2}}},
    };
    static const std::vector<std::vector<AddressPair>> h2 = {
        {{{}, {1}}, {{}, {2}}},
        {{{}, {1, 1}}, {{}, {2, 1}}},
        {{{}, {1, 2}}, {{}, {2, 2}}},
        {{{1}, {2}}, {{1, 1}, {1, 2}}, {{2, 1}, {2, 2}}},
        {{{1}, {2, 1}}, {{1}, {1, 2}}, {{2}, {2, 2}}},
        {{{1}, {2, 2}}, {{1}, {1, 1}}, {{2}, {2, 1}}},
        {{{1, 1}, {2}}},
        {{{1, 1}, {2, 1}}},
        {{{1, 1}, {2, 2}}},
        {{{1, 2}, {2}}},
        {{{1, 2}, {2, 1}}},
        {{{1, 2}, {2, 2}}},
    };
    return h == 1 ? h1 : h2;
}

BinaryResult color_binary_impl(int h)
{
    const Tree tree = build_complete_mary_tree(2, h);
    const Routing R = all_pairs_routing(tree, true);
    BinaryResult out;
    WavelengthAssignment& wa = out.wa;
    wa.colors.assign(R.size(), -1);

    if (h == 0) {
        wa.method = ColoringMethod::table_base;
        finish(R, wa, 0);
        return out;
    }
    if (h <= 2) {
        wa.method = ColoringMethod::table_base;
        const auto& table = base_table(h);
        for (std::size_t c = 0; c < table.size(); ++c)
            for (const auto& [a, b] : table[c]) wa.colors[R.index_of(mary_id(2, a), mary_id(2, b))] = static_cast<int>(c);
        finish(R, wa, closed_form_w(2, h));
        return out;
    }

    wa.method = ColoringMethod::binary_canonical;
    const int s = (1 << (h - 1)) - 1;  // |H_{1,1}|, a copy of T_{2,h-2}
    const Vertex r = 0, r1 = 1, r2 = 2;

    const Tree sub_tree = build_complete_mary_tree(2, h - 2);
    auto subtree_ids = [&](const VertexAddress& prefix) {
        std::vector<Vertex> ids;
        for (const auto& w : sub_tree.labels()) ids.push_back(mary_id(2, concat(prefix, w)));
        return ids;
    };
    const auto H11 = subtree_ids({1, 1}), H12 = subtree_ids({1, 2});
    const auto H21 = subtree_ids({2, 1}), H22 = subtree_ids({2, 2});
    auto join = [](std::vector<Vertex> a, const std::vector<Vertex>& b) {
        a.insert(a.end(), b.begin(), b.end());
        return a;
    };
    const auto H1x = join(H11, H12), H2x = join(H21, H22);

    // Step 1: the nine families crossing e_1, each on its own color set.
    const std::vector<std::vector<std::size_t>> A = {
        {R.index_of(r, r1)},
        {R.index_of(r1, r2)},
        paths_between(R, {r}, H1x),
        paths_between(R, {r1}, H2x),
        paths_between(R, {r2}, H1x),
        paths_between(R, H11, H21),
        paths_between(R, H11, H22),
        paths_between(R, H12, H21),
        paths_between(R, H12, H22),
    };
    std::vector<int> base(A.size() + 1, 0);
    for (std::size_t i = 0; i < A.size(); ++i) {
        base[i + 1] = base[i] + static_cast<int>(A[i].size());
        for (std::size_t g = 0; g < A[i].size(); ++g) wa.colors[A[i][g]] = base[i] + static_cast<int>(g);
    }
    out.stats.step1_colors = base[A.size()];

    // Step 2: reuse each set on paths edge-disjoint from its family.
    const auto P1 = paths_between(R, H11, H12);
    const auto P2 = paths_between(R, H21, H22);
    std::size_t p1 = 0, p2 = 0;

    wa.colors[R.index_of(r, r2)] = base[0];
    wa.colors[P1[p1++]] = base[0];
    wa.colors[P2[p2++]] = base[0];
    wa.colors[P1[p1++]] = base[1];
    wa.colors[P2[p2++]] = base[1];

    const auto root_to_H2 = paths_between(R, {r}, H2x);
    for (std::size_t g = 0; g < root_to_H2.size(); ++g) wa.colors[root_to_H2[g]] = base[2] + static_cast<int>(g);
    for (int g = 0; g < 2 * s; ++g) {
        wa.colors[P1[p1++]] = base[3] + g;
        wa.colors[P2[p2++]] = base[4] + g;
    }

    // Sets 6..9 absorb a recursively colored T_{2,h-2} plus its spokes.
    const BinaryResult inner = color_binary_impl(h - 2);
    const Routing sub_routing = all_pairs_routing(sub_tree, true);
    const int inner_colors = inner.wa.num_colors;
    out.stats.family_capacity_slack = static_cast<std::int64_t>(s) * s - inner_colors - s;
    if (out.stats.family_capacity_slack < 0) throw std::logic_error("canonical coloring set too small for subtree");

    struct Absorb {
        Vertex hub;
        VertexAddress prefix;
        const std::vector<Vertex>* members;
    };
    const Absorb absorbs[] = {{r1, {1, 2}, &H12}, {r2, {2, 1}, &H21}, {r2, {2, 2}, &H22}, {r1, {1, 1}, &H11}};
    for (int a = 0; a < 4; ++a) {
        const int set_base = base[5 + a];
        const auto& members = *absorbs[a].members;
        for (std::size_t i = 0; i < sub_routing.size(); ++i) {
            const Path& sp = sub_routing[i];
            wa.colors[R.index_of(members[sp.u], members[sp.v])] = set_base + inner.wa.colors[i];
        }
        for (std::size_t g = 0; g < members.size(); ++g)
            wa.colors[R.index_of(absorbs[a].hub, members[g])] = set_base + inner_colors + static_cast<int>(g);
    }

    // Step 3: leftover cross pairs, one fresh color per (P1, P2) couple.
    if (P1.size() - p1 != P2.size() - p2) throw std::logic_error("canonical coloring leftovers unbalanced");
    int next = base[A.size()];
    for (; p1 < P1.size(); ++p1, ++p2, ++next) {
        wa.colors[P1[p1]] = next;
        wa.colors[P2[p2]] = next;
    }
    out.stats.step3_colors = next - base[A.size()];

    finish(R, wa, closed_form_w(2, h));
    return out;
}

// ---------------------------------------------------------------------------
// Double trees

struct DoubleResult {
    Tree tree;
    Routing routing;
    WavelengthAssignment wa;
};

// Maximum bipartite matching of groups onto cells, used when the greedy plan
// gets stuck.
std::vector<BlockCell> match_cells(int m, const std::vector<std::vector<int>>& support)
{
    const int cells = m * m;
    std::vector<int> cell_owner(static_cast<std::size_t>(cells), -1);
    std::vector<int> group_cell(support.size(), -1);
    auto allowed = [&](std::size_t g, int cell) {
        const int row = cell / m;
        return std::find(support[g].begin(), support[g].end(), row) == support[g].end();
    };
    std::vector<char> seen;
    std::function<bool(std::size_t)> augment = [&](std::size_t g) {
        for (int cell = 0; cell < cells; ++cell) {
            if (!allowed(g, cell) || seen[cell]) continue;
            seen[cell] = 1;
            if (cell_owner[cell] == -1 || augment(static_cast<std::size_t>(cell_owner[cell]))) {
                cell_owner[cell] = static_cast<int>(g);
                group_cell[g] = cell;
                return true;
            }
        }
        return false;
    };
    for (std::size_t g = 0; g < support.size(); ++g) {
        seen.assign(static_cast<std::size_t>(cells), 0);
        if (!augment(g)) throw std::logic_error("no valid block assignment for the double tree");
    }
    std::vector<BlockCell> plan;
    for (int c : group_cell) plan.push_back({c / m, c % m});
    return plan;
}

std::vector<std::vector<int>> group_supports(int m)
{
    std::vector<std::vector<int>> support;
    for (int i = 0; i < m; ++i)
        for (int j = i + 1; j < m; ++j) support.push_back({i, j});
    for (int i = 0; i < m; ++i) support.push_back({i});
    return support;
}

std::size_t pair_group(int m, int i, int j)
{
    if (i > j) std::swap(i, j);
    // Lexicographic rank of {i, j} among pairs of 0..m-1.
    return static_cast<std::size_t>(i * (2 * m - i - 1) / 2 + (j - i - 1));
}

DoubleResult color_double_impl(int m, int h)
{
    if (m < 4 || m % 2 == 1) throw std::invalid_argument("double-tree coloring needs even m >= 4");
    Tree tree = build_double_tree(m, h);
    Routing R = all_pairs_routing(tree);
    WavelengthAssignment wa;
    wa.method = ColoringMethod::double_tree;
    wa.colors.assign(R.size(), -1);

    if (h == 1) {
        wa.colors[0] = 0;
        finish(R, wa, 1);
        return {std::move(tree), std::move(R), std::move(wa)};
    }

    const std::int64_t T = geometric_count(m, h - 1);  // |A_i|
    const int block = static_cast<int>(T * T);
    const auto plan = double_tree_cell_plan(m);
    const std::size_t internal0 = static_cast<std::size_t>(m) * (m - 1) / 2;
    auto cell_base = [&](int row, int col) { return (row * m + col) * block; };

    std::vector<int> cross_used(static_cast<std::size_t>(m) * m, 0);
    std::vector<int> a_used(plan.size(), 0), b_used(plan.size(), 0);

    std::map<VertexAddress, Vertex> by_label;
    for (Vertex v = 0; v < tree.size(); ++v) by_label[tree.label(v)] = v;
    const Vertex a = 0, b = 1;

    const int p2_base = m * m * block;
    const int mT = static_cast<int>(m * T);

    for (std::size_t p = 0; p < R.size(); ++p) {
        const Path& path = R[p];
        if (path.u == a || path.u == b) continue;
        const auto& lu = tree.label(path.u);
        const auto& lv = tree.label(path.v);
        const int su = lu[0], sv = lv[0];
        const int bu = lu[1] - 1, bv = lv[1] - 1;
        if (su != sv) {
            const int i = su == 1 ? bu : bv;
            const int j = su == 1 ? bv : bu;
            wa.colors[p] = cell_base(i, j) + cross_used[i * m + j]++;
            continue;
        }
        const std::size_t g = bu == bv ? internal0 + bu : pair_group(m, bu, bv);
        if (su == 1)
            wa.colors[p] = cell_base(plan[g].row, plan[g].col) + a_used[g]++;
        else
            wa.colors[p] = cell_base(plan[g].col, plan[g].row) + b_used[g]++;
    }
    for (int x : cross_used)
        if (x > block) throw std::logic_error("double-tree cross block overflow");
    for (std::size_t g = 0; g < plan.size(); ++g)
        if (a_used[g] > block || b_used[g] > block) throw std::logic_error("double-tree group overflow");

    // Paths ending at a or b: the 2mT + 1 bridge paths get fresh colors, and
    // each same-side spoke borrows the color of its mirror across the bridge.
    wa.colors[R.index_of(a, b)] = p2_base;
    int g = 0;
    for (Vertex x = 2; x < tree.size(); ++x) {
        if (tree.label(x)[0] != 2) continue;
        VertexAddress mirror = tree.label(x);
        mirror[0] = 1;
        const Vertex y = by_label.at(mirror);
        const int ca = p2_base + 1 + g;
        const int cb = p2_base + 1 + mT + g;
        wa.colors[R.index_of(a, x)] = ca;
        wa.colors[R.index_of(a, y)] = ca;
        wa.colors[R.index_of(b, y)] = cb;
        wa.colors[R.index_of(b, x)] = cb;
        ++g;
    }

    const std::int64_t th = geometric_count(m, h);
    finish(R, wa, th * th);
    return {std::move(tree), std::move(R), std::move(wa)};
}

}  // namespace

std::vector<BlockCell> double_tree_cell_plan(int m)
{
    if (m < 2) throw std::invalid_argument("cell plan needs m >= 2");
    const auto support = group_supports(m);
    std::vector<std::vector<char>> taken(static_cast<std::size_t>(m), std::vector<char>(static_cast<std::size_t>(m), 0));
    std::vector<int> free_in_row(static_cast<std::size_t>(m), m);
    std::vector<BlockCell> plan;
    for (const auto& U : support) {
        int best = -1;
        for (int row = 0; row < m; ++row) {
            if (std::find(U.begin(), U.end(), row) != U.end() || free_in_row[row] == 0) continue;
            if (best == -1 || free_in_row[row] > free_in_row[best]) best = row;
        }
        if (best == -1) return match_cells(m, support);
        int col = 0;
        while (taken[best][col]) ++col;
        taken[best][col] = 1;
        --free_in_row[best];
        plan.push_back({best, col});
    }
    return plan;
}

BinaryCanonicalStats binary_canonical_stats(int h)
{
    if (h < 3) throw std::invalid_argument("canonical recursion starts at h = 3");
    return color_binary_impl(h).stats;
}

WavelengthAssignment color_path_tree(int h)
{
    if (h < 0) throw std::invalid_argument("h must be non-negative");
    const Tree tree = build_complete_mary_tree(1, h);
    const Routing R = all_pairs_routing(tree, true);
    WavelengthAssignment wa = greedy_coloring(R);
    wa.method = ColoringMethod::interval;
    finish(R, wa, closed_form_w(1, h));
    return wa;
}

WavelengthAssignment color_binary_tree(int h)
{
    if (h < 0) throw std::invalid_argument("h must be non-negative");
    return color_binary_impl(h).wa;
}

WavelengthAssignment color_odd_spider(const Tree& tree, const Routing& routing)
{
    const auto hubs = tree.children(0);
    const int k = static_cast<int>(hubs.size());
    if (k < 3 || k % 2 == 0) throw std::invalid_argument("odd spider coloring needs odd root degree >= 3");
    if (routing.num_vertices() != tree.size()) throw std::invalid_argument("routing was not built from this tree");

    std::vector<int> comp(static_cast<std::size_t>(tree.size()), -1);
    std::vector<std::int64_t> comp_size(static_cast<std::size_t>(k), 0);
    for (int c = 0; c < k; ++c) {
        for (Vertex v : tree.subtree(hubs[c])) comp[v] = c;
        comp_size[c] = static_cast<std::int64_t>(tree.subtree(hubs[c]).size());
    }
    const std::int64_t t = comp_size[0];
    for (auto s : comp_size)
        if (s != t) throw std::invalid_argument("odd spider coloring needs equal component sizes");

    const TotalColoring f = total_coloring_odd(k);
    const auto block = static_cast<int>(t * t);
    std::vector<int> used_vertex(static_cast<std::size_t>(k), 0);
    std::vector<int> used_pair(static_cast<std::size_t>(k) * k, 0);

    WavelengthAssignment wa;
    wa.method = ColoringMethod::odd_total;
    wa.colors.assign(routing.size(), -1);
    for (std::size_t p = 0; p < routing.size(); ++p) {
        const int cu = comp[routing[p].u], cv = comp[routing[p].v];
        if (cu == -1 || cu == cv) {
            const int c = cu == -1 ? cv : cu;
            wa.colors[p] = f.vertex_color[c] * block + used_vertex[c]++;
        } else {
            const int i = std::min(cu, cv), j = std::max(cu, cv);
            wa.colors[p] = f.edge(i, j) * block + used_pair[i * k + j]++;
        }
    }
    for (int u : used_vertex)
        if (u > block) throw std::logic_error("odd spider family exceeds its color set");

    finish(routing, wa, k * t * t);
    return wa;
}

WavelengthAssignment color_double_tree(int m, int h) { return color_double_impl(m, h).wa; }

WavelengthAssignment color_even_mary(int m, int h)
{
    if (m < 4 || m % 2 == 1) throw std::invalid_argument("even m-ary coloring needs even m >= 4");
    if (h < 0) throw std::invalid_argument("h must be non-negative");
    const Tree tree = build_complete_mary_tree(m, h);
    const Routing R = all_pairs_routing(tree, true);
    const EdgeColoring f = one_factorization(m);

    WavelengthAssignment wa;
    wa.method = ColoringMethod::even_recursive;
    wa.colors.assign(R.size(), -1);

    if (h == 0) {
        finish(R, wa, 0);
        return wa;
    }

    if (h == 1) {
        for (std::size_t p = 0; p < R.size(); ++p) {
            const Path& path = R[p];
            wa.colors[p] = path.u == 0 ? m - 1 : f.edge(path.u - 1, path.v - 1);
        }
        finish(R, wa, m);
        return wa;
    }

    const std::int64_t th = geometric_count(m, h);  // |H_i|
    const int block = static_cast<int>(th * th);

    // Class-0 pairs carry H_i, H_j and the paths between them as a double tree.
    const DoubleResult D = color_double_impl(m, h);
    for (int i = 0; i < m; ++i) {
        for (int j = i + 1; j < m; ++j) {
            if (f.edge(i, j) != 0) continue;
            auto embed = [&](Vertex x) {
                VertexAddress addr = D.tree.label(x);
                addr[0] = addr[0] == 1 ? i + 1 : j + 1;
                return mary_id(m, addr);
            };
            for (std::size_t p = 0; p < D.routing.size(); ++p) {
                const Path& dp = D.routing[p];
                wa.colors[R.index_of(embed(dp.u), embed(dp.v))] = D.wa.colors[p];
            }
        }
    }

    std::vector<int> used(static_cast<std::size_t>(m) * m, 0);
    const int root_base = (m - 1) * block;
    for (std::size_t p = 0; p < R.size(); ++p) {
        if (wa.colors[p] >= 0) continue;
        const Path& path = R[p];
        const auto& lv = tree.label(path.v);
        if (path.u == 0) {
            // One color per address below the subtree roots, shared by all m subtrees.
            wa.colors[p] = root_base + mary_id(m, VertexAddress(lv.begin() + 1, lv.end()));
            continue;
        }
        const int i = tree.label(path.u)[0] - 1, j = lv[0] - 1;
        if (i == j) throw std::logic_error("subtree-internal path missed by the double-tree embedding");
        const int c = f.edge(i, j);
        wa.colors[p] = c * block + used[std::min(i, j) * m + std::max(i, j)]++;
    }

    finish(R, wa, closed_form_w(m, h));
    return wa;
}

WavelengthAssignment color_mary(int m, int h)
{
    if (m < 1) throw std::invalid_argument("m must be at least 1");
    if (h < 0) throw std::invalid_argument("h must be non-negative");
    if (m == 1) return color_path_tree(h);
    if (m == 2) return color_binary_tree(h);
    if (m % 2 == 0) return color_even_mary(m, h);

    const Tree tree = build_complete_mary_tree(m, h);
    const Routing R = all_pairs_routing(tree, true);
    if (h == 0) {
        WavelengthAssignment wa;
        wa.method = ColoringMethod::odd_total;
        return wa;
    }
    return color_odd_spider(tree, R);
}

}  // namespace treewave
