#include <doctest.h>

#include <stdexcept>

#include "treewave/bounds.hpp"
#include "treewave/routing.hpp"

using namespace treewave;

TEST_CASE("edge-cut bound on trees")
{
    const auto t23 = edge_cut_bound_tree(build_complete_mary_tree(2, 3));
    CHECK(t23.bound == 56);
    CHECK(t23.witness_edge == 1);
    CHECK(t23.crossing == 1);

    const Tree spider = build_spider(3, 4, SpiderShape::path);
    const auto s = edge_cut_bound_tree(spider);
    CHECK(s.bound == 36);
    CHECK(spider.parent(*s.witness_edge) == 0);

    CHECK(edge_cut_bound_tree(build_complete_mary_tree(1, 1)).bound == 1);
    CHECK_THROWS_AS(edge_cut_bound_tree(build_complete_mary_tree(1, 0)), std::invalid_argument);
}

TEST_CASE("edge-cut bound at a vertex set")
{
    const Tree t22 = build_complete_mary_tree(2, 2);
    const auto c = edge_cut_bound_at(t22, {1, 3, 4});
    CHECK(c.bound == 12);
    CHECK(c.crossing == 1);
    CHECK(c.witness_edge == 1);

    CHECK(edge_cut_bound_at(build_complete_mary_tree(2, 1), {1}).bound == 2);
    const auto star = edge_cut_bound_at(build_complete_mary_tree(3, 1), {0});
    CHECK(star.crossing == 3);
    CHECK(star.bound == 1);

    CHECK_THROWS_AS(edge_cut_bound_at(t22, {}), std::invalid_argument);
    CHECK_THROWS_AS(edge_cut_bound_at(t22, {0, 1, 2, 3, 4, 5, 6}), std::invalid_argument);
}

TEST_CASE("vertex-cut bound at a vertex set")
{
    const auto t23 = vertex_cut_bound_at(build_complete_mary_tree(2, 3), {1});
    CHECK(t23.component_sizes == std::vector<std::int64_t>{8, 3, 3});
    CHECK(t23.crossing == 3);
    CHECK(t23.bound == 57);

    CHECK(vertex_cut_bound_at(build_spider(3, 4, SpiderShape::path), {0}).bound == 48);
    CHECK(vertex_cut_bound_at(build_complete_mary_tree(1, 2), {1}).bound == 1);

    CHECK_THROWS_AS(vertex_cut_bound_at(build_complete_mary_tree(1, 2), {0}), std::invalid_argument);
    CHECK_THROWS_AS(vertex_cut_bound_at(build_complete_mary_tree(1, 2), {}), std::invalid_argument);
}

TEST_CASE("best vertex-cut bound")
{
    const auto t23 = best_vertex_cut_bound(build_complete_mary_tree(2, 3));
    CHECK(t23.bound == 57);
    CHECK(t23.witness_set == std::vector<Vertex>{1});

    const auto t32 = best_vertex_cut_bound(build_complete_mary_tree(3, 2));
    CHECK(t32.bound == 48);
    CHECK(t32.witness_set == std::vector<Vertex>{0});

    // Path 0-1-2-3: removing 1 leaves {0} and {2,3}, removing 2 is symmetric.
    const Tree p = build_complete_mary_tree(1, 3);
    std::int64_t oracle = 0;
    for (int cut = 1; cut <= 2; ++cut) oracle = std::max<std::int64_t>(oracle, std::int64_t{cut} * (3 - cut));
    const auto best = best_vertex_cut_bound(p);
    CHECK(best.bound == oracle);
    CHECK(best.bound == 2);
    CHECK(best.witness_set == std::vector<Vertex>{1});

    CHECK_THROWS_AS(best_vertex_cut_bound(build_complete_mary_tree(1, 1)), std::invalid_argument);
    CHECK_THROWS_AS(best_vertex_cut_bound(p, 0), std::invalid_argument);

    // Larger cuts never do worse than singletons.
    const Tree t22 = build_complete_mary_tree(2, 2);
    CHECK(best_vertex_cut_bound(t22, 2).bound >= best_vertex_cut_bound(t22, 1).bound);
}

TEST_CASE("forwarding index")
{
    CHECK(forwarding_index_tree(build_spider(3, 4, SpiderShape::path)) == 36);
    CHECK(forwarding_index_tree(build_complete_mary_tree(2, 2)) == 12);
    CHECK(forwarding_index_tree(build_complete_mary_tree(4, 1)) == 4);

    // Tightness against the routing's loads.
    for (const Tree& t : {build_complete_mary_tree(3, 2), build_double_tree(4, 2), build_spider(2, 5, SpiderShape::star)}) {
        const auto loads = edge_loads(all_pairs_routing(t), t);
        CHECK(forwarding_index_tree(t) == *std::max_element(loads.begin(), loads.end()));
        CHECK(forwarding_index_tree(t) == edge_cut_bound_tree(t).bound);
    }
}

TEST_CASE("closed forms")
{
    CHECK(closed_form_w(2, 3) == 57);
    CHECK(closed_form_w(3, 2) == 48);
    CHECK(closed_form_w(4, 2) == 80);
    CHECK(closed_form_w(1, 5) == 9);
    CHECK(closed_form_w(2, 1) == 2);
    CHECK(closed_form_w(2, 2) == 12);
    CHECK(closed_form_w(3, 3) == 507);
    CHECK(closed_form_w(4, 3) == 1344);
    CHECK(closed_form_w(5, 2) == 180);
    CHECK(closed_form_w(6, 2) == 252);
    CHECK(closed_form_w(7, 0) == 0);

    CHECK(closed_form_pi_spider(3, 4) == 36);
    for (int h = 1; h <= 10; ++h) CHECK(closed_form_pi_spider(2, (1 << h) - 1) == (1 << (2 * h)) - (1 << h));
    CHECK(closed_form_pi_spider(2, 1) == 2);
    CHECK_THROWS_AS(closed_form_pi_spider(1, 3), std::invalid_argument);
}

TEST_CASE("sandwich and attainment on the grid")
{
    for (int m = 1; m <= 6; ++m) {
        for (int h = 1; h <= 3; ++h) {
            const Tree t = build_complete_mary_tree(m, h);
            const auto w = closed_form_w(m, h);
            const auto ec = edge_cut_bound_tree(t).bound;
            CHECK(ec <= w);
            std::int64_t vc = 0;
            if (t.size() > 2) {
                vc = best_vertex_cut_bound(t).bound;
                CHECK(vc <= w);
            }
            const bool vertex_tight = (m >= 3 && m % 2 == 1) || (m == 2 && h >= 3);
            const bool edge_tight = (m >= 4 && m % 2 == 0) || (m == 2 && h <= 2);
            if (vertex_tight) CHECK(vc == w);
            if (edge_tight) CHECK(ec == w);
        }
    }
}

TEST_CASE("spider load is monotone away from the root")
{
    for (int k = 2; k <= 6; ++k)
        for (int t = 2; t <= 30; ++t) {
            auto f = [&](std::int64_t x) { return (std::int64_t{k} * t + 1 - x) * x; };
            for (int x = 1; x < t - 1; ++x) CHECK(f(x) < f(x + 1));
            CHECK(f(t - 1) < closed_form_pi_spider(k, t));
        }
}

TEST_CASE("ratios are exact")
{
    CHECK(ratio_w_over_pi_spider(3, 4) == Rational(4, 3));
    CHECK(ratio_w_over_pi_spider(3, 1) == Rational(1));
    const auto r = ratio_w_over_pi_spider(5, 1000);
    CHECK(r == Rational(5000, 4001));
    CHECK(boost::rational_cast<double>(r) == doctest::Approx(1.25).epsilon(1e-3));
    CHECK_THROWS_AS(ratio_w_over_pi_spider(4, 3), std::invalid_argument);

    const auto b3 = feasible_delta_family(BinarySelector{3});
    CHECK(b3.delta == Rational(57, 56));
    CHECK(b3.delta == Rational(closed_form_w(2, 3), forwarding_index_tree(build_complete_mary_tree(2, 3))));
    CHECK(b3.family == Family::mary(2, 3));
    CHECK_THROWS_AS(feasible_delta_family(BinarySelector{2}), std::invalid_argument);

    CHECK(feasible_delta_family(SpiderSelector{3, 4}).delta == Rational(4, 3));
    for (int k : {3, 5, 7}) CHECK(feasible_delta_family(SpiderSelector{k, 1}).delta == Rational(1));
    for (int k : {3, 5, 7})
        for (int t = 1; t <= 50; ++t) CHECK(feasible_delta_family(SpiderSelector{k, t}).delta == ratio_w_over_pi_spider(k, t));
}
