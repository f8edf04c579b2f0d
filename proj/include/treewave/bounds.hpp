#pragma once

#include <cstdint>
#include <optional>
#include <vector>

#include <boost/rational.hpp>

#include "treewave/tree.hpp"

namespace treewave {

using Rational = boost::rational<std::int64_t>;

/// A lower bound together with the cut that proves it.
struct CutCertificate {
    enum class Kind { edge_cut, vertex_cut };

    Kind kind = Kind::edge_cut;
    std::optional<EdgeId> witness_edge;  // set for single-edge cuts of a tree
    std::vector<Vertex> witness_set;     // S, ascending
    std::int64_t crossing = 0;           // |[S, S-bar]|
    std::int64_t bound = 0;
    std::vector<std::int64_t> component_sizes;  // vertex cuts only, ordered by smallest vertex
};

const char* to_string(CutCertificate::Kind k);

/// Largest a(n-a) over the single-edge cuts; lowest edge id on ties.
CutCertificate edge_cut_bound_tree(const Tree& tree);

/// ceil(|S| |S-bar| / |[S, S-bar]|) for the given vertex set.
CutCertificate edge_cut_bound_at(const Tree& tree, const std::vector<Vertex>& S);

/// Sum over unordered component pairs of |H_i||H_j|, divided by floor(crossing / 2), rounded up.
CutCertificate vertex_cut_bound_at(const Tree& tree, const std::vector<Vertex>& S);

/// Best vertex-cut bound over all cuts with at most max_cut_size vertices.
/// Cut sets are tried in size order, then lexicographically; the first
/// maximiser wins.
CutCertificate best_vertex_cut_bound(const Tree& tree, int max_cut_size = 1);

/// Edge-forwarding index of a tree: its unique routing makes this max a(n-a).
std::int64_t forwarding_index_tree(const Tree& tree);

/// Optical index of T_{m,h}, dispatched over m = 1, m = 2, odd m, even m.
std::int64_t closed_form_w(int m, int h);

/// (k-1)t^2 + t.
std::int64_t closed_form_pi_spider(int k, int t);

/// Optical index of a spider with odd k >= 3: k t^2.
std::int64_t closed_form_w_spider(int k, int t);

/// kt / ((k-1)t + 1), the optical-to-forwarding ratio of odd spiders.
Rational ratio_w_over_pi_spider(int k, int t);

struct FeasibleDelta {
    Rational delta;
    Family family;
};

struct BinarySelector {
    int h;
};
struct SpiderSelector {
    int k;
    int t;
};

/// Realisable w/pi ratios and the graph family realising each one.
FeasibleDelta feasible_delta_family(BinarySelector sel);
FeasibleDelta feasible_delta_family(SpiderSelector sel);

}  // namespace treewave
