#pragma once

#include <vector>

namespace treewave {

/// Colors of the vertices and edges of K_n, 0-based.
struct TotalColoring {
    int n = 0;
    std::vector<int> vertex_color;
    std::vector<std::vector<int>> edge_color;  // symmetric n x n, diagonal unused

    int edge(int i, int j) const { return edge_color[i][j]; }
    int num_colors() const;
};

/// Proper edge coloring of K_m, 0-based.
struct EdgeColoring {
    int m = 0;
    std::vector<std::vector<int>> edge_color;  // symmetric m x m, diagonal unused

    int edge(int i, int j) const { return edge_color[i][j]; }
    int num_colors() const;
};

/// n-total-coloring of K_n for odd n: vertex i gets 2i, edge {i,j} gets i+j (mod n).
TotalColoring total_coloring_odd(int n);

/// Round-robin 1-factorization of K_m for even m.
EdgeColoring one_factorization(int m);

bool validate_total_coloring(const TotalColoring& tc);

/// Proper, and every color class is a perfect matching.
bool validate_edge_coloring(const EdgeColoring& ec);

}  // namespace treewave
