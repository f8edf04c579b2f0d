#pragma once

#include <cstddef>
#include <string>
#include <utility>
#include <vector>

#include "treewave/routing.hpp"
#include "treewave/tree.hpp"

namespace treewave {

enum class ColoringMethod { interval, binary_canonical, odd_total, even_recursive, double_tree, greedy, table_base, exact };

const char* to_string(ColoringMethod m);

/// Wavelength per path index of a routing. Colors are 0..num_colors-1.
struct WavelengthAssignment {
    std::vector<int> colors;
    int num_colors = 0;
    ColoringMethod method = ColoringMethod::greedy;
};

struct Violation {
    std::size_t first;
    std::size_t second;
    int color;
    bool operator==(const Violation&) const = default;
};

struct VerifyReport {
    bool proper = true;
    std::vector<Violation> violations;  // same-colored conflicting pairs, ascending
    int num_colors = 0;                 // distinct colors in use
};

/// Checks every edge bucket for repeated colors. Throws if the assignment
/// does not cover the routing.
VerifyReport verify_assignment(const Routing& routing, const WavelengthAssignment& wa);

enum class GreedyOrder { canonical, degree_desc };

/// First-fit in path-index order (canonical) or by non-increasing degree.
WavelengthAssignment greedy_coloring(const ConflictGraph& cg, GreedyOrder order = GreedyOrder::canonical);

/// First-fit in canonical order, computed from edge buckets without
/// materialising the conflict graph. Same result as the graph version.
WavelengthAssignment greedy_coloring(const Routing& routing);

WavelengthAssignment color_path_tree(int h);
WavelengthAssignment color_binary_tree(int h);

/// Total-coloring based coloring of a spider with odd root degree k and k equal-sized
/// components: k * t^2 colors. Works on any tree of that shape rooted at 0.
WavelengthAssignment color_odd_spider(const Tree& tree, const Routing& routing);

WavelengthAssignment color_double_tree(int m, int h);
WavelengthAssignment color_even_mary(int m, int h);

/// Optimal construction for T_{m,h}, matching the closed-form optical index.
WavelengthAssignment color_mary(int m, int h);

/// Bookkeeping for the binary canonical coloring, exposed for tests.
struct BinaryCanonicalStats {
    std::int64_t step1_colors = 0;  // colors spent on the nine e_1 families
    std::int64_t step3_colors = 0;  // fresh colors for leftover cross-subtree pairs
    std::int64_t family_capacity_slack = 0;  // |C_6| - w(T_{2,h-2}) - spokes
};
BinaryCanonicalStats binary_canonical_stats(int h);

/// Cell of the m x m block grid used by the double-tree coloring.
struct BlockCell {
    int row;
    int col;
    bool operator==(const BlockCell&) const = default;
};

/// Cell per A-side group (the C(m,2) pair groups in lexicographic order,
/// then the m internal groups); a group with support U sits in a row outside U.
/// Distinct groups get distinct cells. The B side uses the same plan transposed.
std::vector<BlockCell> double_tree_cell_plan(int m);

}  // namespace treewave
