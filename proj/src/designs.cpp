#include "treewave/designs.hpp"

#include <set>
#include <stdexcept>

namespace treewave {

int TotalColoring::num_colors() const
{
    std::set<int> used(vertex_color.begin(), vertex_color.end());
    for (int i = 0; i < n; ++i)
        for (int j = i + 1; j < n; ++j) used.insert(edge_color[i][j]);
    return static_cast<int>(used.size());
}

int EdgeColoring::num_colors() const
{
    std::set<int> used;
    for (int i = 0; i < m; ++i)
        for (int j = i + 1; j < m; ++j) used.insert(edge_color[i][j]);
    return static_cast<int>(used.size());
}

TotalColoring total_coloring_odd(int n)
{
    if (n < 1 || n % 2 == 0) throw std::invalid_argument("total coloring construction needs odd n");
    TotalColoring tc;
    tc.n = n;
    tc.vertex_color.resize(n);
    tc.edge_color.assign(n, std::vector<int>(n, -1));
    for (int i = 0; i < n; ++i) {
        tc.vertex_color[i] = (2 * i) % n;
        for (int j = 0; j < n; ++j)
            if (i != j) tc.edge_color[i][j] = (i + j) % n;
    }
    if (!validate_total_coloring(tc)) throw std::logic_error("cyclic total coloring failed validation");
    return tc;
}

EdgeColoring one_factorization(int m)
{
    if (m < 2 || m % 2 == 1) throw std::invalid_argument("1-factorization needs even m");
    EdgeColoring ec;
    ec.m = m;
    ec.edge_color.assign(m, std::vector<int>(m, -1));
    const int q = m - 1;
    for (int i = 0; i < q; ++i) {
        for (int j = 0; j < q; ++j)
            if (i != j) ec.edge_color[i][j] = (i + j) % q;
        ec.edge_color[i][q] = ec.edge_color[q][i] = (2 * i) % q;
    }
    if (!validate_edge_coloring(ec)) throw std::logic_error("round-robin factorization failed validation");
    return ec;
}

bool validate_total_coloring(const TotalColoring& tc)
{
    const int n = tc.n;
    if (n < 0 || static_cast<int>(tc.vertex_color.size()) != n || static_cast<int>(tc.edge_color.size()) != n)
        return false;
    for (const auto& row : tc.edge_color)
        if (static_cast<int>(row.size()) != n) return false;

    for (int i = 0; i < n; ++i) {
        for (int j = 0; j < n; ++j) {
            if (i == j) continue;
            if (tc.edge_color[i][j] != tc.edge_color[j][i]) return false;
            if (tc.vertex_color[i] == tc.vertex_color[j]) return false;
            if (tc.vertex_color[i] == tc.edge_color[i][j]) return false;
            for (int k = j + 1; k < n; ++k)
                if (k != i && tc.edge_color[i][j] == tc.edge_color[i][k]) return false;
        }
    }
    return true;
}

bool validate_edge_coloring(const EdgeColoring& ec)
{
    const int m = ec.m;
    if (m < 0 || static_cast<int>(ec.edge_color.size()) != m) return false;
    for (const auto& row : ec.edge_color)
        if (static_cast<int>(row.size()) != m) return false;

    std::set<int> colors;
    for (int i = 0; i < m; ++i) {
        std::set<int> at_vertex;
        for (int j = 0; j < m; ++j) {
            if (i == j) continue;
            if (ec.edge_color[i][j] != ec.edge_color[j][i] || ec.edge_color[i][j] < 0) return false;
            if (!at_vertex.insert(ec.edge_color[i][j]).second) return false;
        }
        colors.insert(at_vertex.begin(), at_vertex.end());
    }
    // Proper at every vertex, so each class is a matching; it is perfect iff
    // every vertex sees every color.
    for (int i = 0; i < m; ++i) {
        std::set<int> at_vertex;
        for (int j = 0; j < m; ++j)
            if (i != j) at_vertex.insert(ec.edge_color[i][j]);
        if (at_vertex != colors) return false;
    }
    return true;
}

}  // namespace treewave
