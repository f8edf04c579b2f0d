#include <doctest.h>

#include <stdexcept>

#include "treewave/designs.hpp"

using namespace treewave;

TEST_CASE("total coloring of odd complete graphs")
{
    const auto k3 = total_coloring_odd(3);
    CHECK(k3.vertex_color == std::vector<int>{0, 2, 1});
    CHECK(k3.edge(0, 1) == 1);
    CHECK(k3.edge(0, 2) == 2);
    CHECK(k3.edge(1, 2) == 0);
    CHECK(validate_total_coloring(k3));

    CHECK(total_coloring_odd(5).num_colors() == 5);
    const auto k1 = total_coloring_odd(1);
    CHECK(k1.vertex_color == std::vector<int>{0});
    CHECK(validate_total_coloring(k1));
    CHECK(validate_total_coloring(total_coloring_odd(7)));

    CHECK_THROWS_AS(total_coloring_odd(4), std::invalid_argument);
    CHECK_THROWS_AS(total_coloring_odd(0), std::invalid_argument);
}

TEST_CASE("total coloring validator rejects bad colorings")
{
    TotalColoring zero{3, {0, 0, 0}, std::vector<std::vector<int>>(3, std::vector<int>(3, 0))};
    CHECK_FALSE(validate_total_coloring(zero));

    TotalColoring single{1, {4}, {{-1}}};
    CHECK(validate_total_coloring(single));

    auto broken = total_coloring_odd(5);
    broken.edge_color[0][1] = broken.edge_color[1][0] = broken.vertex_color[0];
    CHECK_FALSE(validate_total_coloring(broken));
}

TEST_CASE("no 2-total-coloring of K_3 exists")
{
    // Three vertices and three edges, two colors: 64 candidates.
    int valid = 0;
    for (int mask = 0; mask < 64; ++mask) {
        TotalColoring tc{3, {mask & 1, (mask >> 1) & 1, (mask >> 2) & 1},
                         std::vector<std::vector<int>>(3, std::vector<int>(3, -1))};
        const int e01 = (mask >> 3) & 1, e02 = (mask >> 4) & 1, e12 = (mask >> 5) & 1;
        tc.edge_color[0][1] = tc.edge_color[1][0] = e01;
        tc.edge_color[0][2] = tc.edge_color[2][0] = e02;
        tc.edge_color[1][2] = tc.edge_color[2][1] = e12;
        valid += validate_total_coloring(tc);
    }
    CHECK(valid == 0);
}

TEST_CASE("round-robin 1-factorizations")
{
    const auto k4 = one_factorization(4);
    CHECK(k4.num_colors() == 3);
    for (int c = 0; c < 3; ++c) {
        int edges = 0;
        std::vector<int> cover(4, 0);
        for (int i = 0; i < 4; ++i)
            for (int j = i + 1; j < 4; ++j)
                if (k4.edge(i, j) == c) {
                    ++edges;
                    ++cover[i];
                    ++cover[j];
                }
        CHECK(edges == 2);
        CHECK(cover == std::vector<int>{1, 1, 1, 1});
    }

    const auto k2 = one_factorization(2);
    CHECK(k2.num_colors() == 1);
    CHECK(validate_edge_coloring(k2));

    const auto k6 = one_factorization(6);
    CHECK(k6.num_colors() == 5);
    std::vector<int> per_color(5, 0);
    for (int i = 0; i < 6; ++i)
        for (int j = i + 1; j < 6; ++j) ++per_color[k6.edge(i, j)];
    CHECK(per_color == std::vector<int>(5, 3));

    CHECK(validate_edge_coloring(one_factorization(8)));
    CHECK_THROWS_AS(one_factorization(5), std::invalid_argument);
}

TEST_CASE("edge coloring validator rejects bad colorings")
{
    // Any 2-coloring of K_4 repeats a color at some vertex of degree 3.
    EdgeColoring two{4, std::vector<std::vector<int>>(4, std::vector<int>(4, -1))};
    for (int i = 0; i < 4; ++i)
        for (int j = 0; j < 4; ++j)
            if (i != j) two.edge_color[i][j] = (i + j) % 2;
    CHECK_FALSE(validate_edge_coloring(two));

    EdgeColoring single{2, {{-1, 0}, {0, -1}}};
    CHECK(validate_edge_coloring(single));
}

TEST_CASE("design families up to 100")
{
    for (int n = 1; n <= 99; n += 2) {
        const auto tc = total_coloring_odd(n);
        REQUIRE(validate_total_coloring(tc));
        REQUIRE(tc.num_colors() == n);
    }
    for (int m = 2; m <= 100; m += 2) {
        const auto ec = one_factorization(m);
        REQUIRE(validate_edge_coloring(ec));
        REQUIRE(ec.num_colors() == m - 1);
    }
}
