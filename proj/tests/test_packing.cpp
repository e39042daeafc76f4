#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include "doctest.h"

#include <algorithm>
#include <array>
#include <random>
#include <stdexcept>
#include <vector>

#include "rainbowlab/graph.hpp"
#include "rainbowlab/packing.hpp"

using namespace rainbowlab;

namespace {

Graph cycle(int n) {
    std::vector<std::pair<int, int>> es;
    for (int v = 0; v < n; ++v) es.emplace_back(std::min(v, (v + 1) % n), std::max(v, (v + 1) % n));
    return Graph(n, es);
}

Graph petersen() {
    std::vector<std::pair<int, int>> es;
    for (int v = 0; v < 5; ++v) {
        es.emplace_back(std::min(v, (v + 1) % 5), std::max(v, (v + 1) % 5));
        es.emplace_back(v, 5 + v);
        es.emplace_back(std::min(5 + v, 5 + (v + 2) % 5), std::max(5 + v, 5 + (v + 2) % 5));
    }
    return Graph(10, es);
}

Graph random_graph(int n, std::mt19937_64& rng, int num = 1, int den = 2) {
    std::vector<std::pair<int, int>> es;
    for (int u = 0; u < n; ++u)
        for (int v = u + 1; v < n; ++v)
            if (static_cast<int>(rng() % den) < num) es.emplace_back(u, v);
    return Graph(n, es);
}

std::vector<std::array<int, 3>> brute_triangles(const Graph& g) {
    std::vector<std::array<int, 3>> out;
    int n = g.vertex_count();
    for (int a = 0; a < n; ++a)
        for (int b = a + 1; b < n; ++b)
            for (int c = b + 1; c < n; ++c)
                if (g.has_edge(a, b) && g.has_edge(a, c) && g.has_edge(b, c)) out.push_back({a, b, c});
    return out;
}

bool disjoint(const std::array<int, 3>& a, const std::array<int, 3>& b) {
    for (int x : a)
        for (int y : b)
            if (x == y) return false;
    return true;
}

// Largest family of pairwise disjoint triangles by plain subset loops.
// Only usable for n <= 9 (family size capped at 3).
int brute_i3(const Graph& g) {
    REQUIRE(g.vertex_count() <= 9);
    auto tris = brute_triangles(g);
    std::size_t m = tris.size();
    for (std::size_t i = 0; i < m; ++i)
        for (std::size_t j = i + 1; j < m; ++j) {
            if (!disjoint(tris[i], tris[j])) continue;
            for (std::size_t k = j + 1; k < m; ++k)
                if (disjoint(tris[i], tris[k]) && disjoint(tris[j], tris[k])) return 3;
        }
    for (std::size_t i = 0; i < m; ++i)
        for (std::size_t j = i + 1; j < m; ++j)
            if (disjoint(tris[i], tris[j])) return 2;
    return m > 0 ? 1 : 0;
}

}  // namespace

TEST_CASE("enumerate_triangles on known graphs") {
    auto k4 = enumerate_triangles(Graph::complete(4));
    CHECK(k4.size() == 4);
    CHECK(k4.front() == std::array<int, 3>{0, 1, 2});
    CHECK(k4.back() == std::array<int, 3>{1, 2, 3});
    CHECK(std::is_sorted(k4.begin(), k4.end()));

    CHECK(enumerate_triangles(Graph::complete_bipartite(3, 3)).empty());
    CHECK(enumerate_triangles(join(Graph::complete(1), Graph::turan(4, 2))).size() == 4);
    CHECK(enumerate_triangles(Graph(0)).empty());
}

TEST_CASE("enumerate_triangles matches brute force on random graphs") {
    std::mt19937_64 rng(11);
    for (int n = 0; n <= 8; ++n)
        for (int rep = 0; rep < 25; ++rep) {
            Graph g = random_graph(n, rng);
            CHECK(enumerate_triangles(g) == brute_triangles(g));
        }
}

TEST_CASE("max_matching on known graphs") {
    CHECK(max_matching(Graph::complete(4)).size() == 2);
    CHECK(max_matching(Graph::complete_bipartite(1, 5)).size() == 1);
    CHECK(max_matching(petersen()).size() == 5);
    CHECK(max_matching(Graph(6)).size() == 0);

    Matching m = max_matching(petersen());
    CHECK(validate_matching(petersen(), m));
}

TEST_CASE("max_matching_bruteforce on known graphs") {
    CHECK(max_matching_bruteforce(cycle(5)) == 2);
    CHECK(max_matching_bruteforce(cycle(6)) == 3);
    CHECK_THROWS_AS(max_matching_bruteforce(Graph::complete(10)), std::invalid_argument);
}

TEST_CASE("max_matching agrees with the brute-force oracle") {
    std::mt19937_64 rng(17);
    int checked = 0;
    for (int rep = 0; rep < 400; ++rep) {
        int n = 3 + static_cast<int>(rng() % 6);
        Graph g = random_graph(n, rng, 1 + static_cast<int>(rng() % 3), 4);
        if (g.edge_count() > 40) continue;
        Matching m = max_matching(g);
        CHECK(validate_matching(g, m));
        CHECK(m.size() == max_matching_bruteforce(g));
        ++checked;
    }
    CHECK(checked > 300);
}

TEST_CASE("max_independent_triangles on known graphs") {
    CHECK(max_independent_triangles(Graph::complete(6)).size() == 2);
    CHECK(max_independent_triangles(Graph::complete(9)).size() == 3);
    for (int n = 0; n <= 40; ++n) CHECK(max_independent_triangles(Graph::turan(n, 2)).size() == 0);
    for (int t = 1; t <= 4; ++t)
        for (int n = 3 * t; n <= 3 * t + 6; ++n) {
            Graph g = join(Graph::complete(t), Graph::turan(n - t, 2));
            CHECK(max_independent_triangles(g).size() == t);
        }

    TrianglePacking p = max_independent_triangles(Graph::complete(9));
    CHECK(validate_packing(Graph::complete(9), p));
    Graph tight = join(Graph::complete(2), Graph::turan(10, 2));
    CHECK_THROWS_AS(max_independent_triangles(tight, PackingLimits{1}), ResourceExhausted);
}

TEST_CASE("max_independent_triangles agrees with the subset oracle") {
    std::mt19937_64 rng(23);
    for (int rep = 0; rep < 300; ++rep) {
        int n = 3 + static_cast<int>(rng() % 7);
        Graph g = random_graph(n, rng, 1 + static_cast<int>(rng() % 3), 3);
        TrianglePacking p = max_independent_triangles(g);
        CHECK(validate_packing(g, p));
        CHECK(p.size() == brute_i3(g));
    }
}

TEST_CASE("has_k_disjoint_triangles") {
    CHECK(has_k_disjoint_triangles(Graph::complete(6), 2));
    CHECK_FALSE(has_k_disjoint_triangles(Graph::complete(5), 2));
    Graph k2t = join(Graph::complete(2), Graph::turan(10, 2));
    CHECK(has_k_disjoint_triangles(k2t, 2));
    CHECK_FALSE(has_k_disjoint_triangles(k2t, 3));
    CHECK(has_k_disjoint_triangles(Graph(0), 0));
    CHECK_THROWS_AS(has_k_disjoint_triangles(Graph::complete(3), -1), std::invalid_argument);

    std::mt19937_64 rng(29);
    for (int rep = 0; rep < 60; ++rep) {
        int n = 3 + static_cast<int>(rng() % 7);
        Graph g = random_graph(n, rng, 2, 3);
        int i3 = max_independent_triangles(g).size();
        for (int k = 0; k <= n / 3 + 1; ++k) CHECK(has_k_disjoint_triangles(g, k) == (i3 >= k));
    }
}

TEST_CASE("packing sizes respect the counting bounds") {
    std::mt19937_64 rng(31);
    for (int rep = 0; rep < 100; ++rep) {
        int n = static_cast<int>(rng() % 10);
        Graph g = random_graph(n, rng, 2, 3);
        int i3 = max_independent_triangles(g).size();
        CHECK(3 * i3 <= n);
        CHECK(i3 <= static_cast<int>(enumerate_triangles(g).size()));
    }
}

TEST_CASE("adding an edge never decreases matching or packing size") {
    std::mt19937_64 rng(37);
    for (int rep = 0; rep < 80; ++rep) {
        int n = 4 + static_cast<int>(rng() % 5);
        Graph g = random_graph(n, rng, 1, 2);
        std::vector<std::pair<int, int>> missing;
        for (int u = 0; u < n; ++u)
            for (int v = u + 1; v < n; ++v)
                if (!g.has_edge(u, v)) missing.emplace_back(u, v);
        if (missing.empty()) continue;
        auto [u, v] = missing[rng() % missing.size()];
        Graph h = g.with_edge(u, v);
        CHECK(max_matching(h).size() >= max_matching(g).size());
        CHECK(max_independent_triangles(h).size() >= max_independent_triangles(g).size());
    }
}

TEST_CASE("common_neighborhood") {
    Graph k4 = Graph::complete(4);
    CHECK(common_neighborhood(k4, 0, 1) == std::vector<int>{2, 3});
    CHECK(common_neighborhood(k4, 1, 3) == std::vector<int>{0, 2});

    Graph kb = Graph::complete_bipartite(3, 3);
    CHECK(common_neighborhood(kb, 0, 1) == std::vector<int>{3, 4, 5});
    CHECK(common_neighborhood(kb, 0, 3).empty());

    CHECK(common_neighborhood(cycle(5), 0, 1).empty());
    CHECK_THROWS_AS(common_neighborhood(k4, 2, 2), std::invalid_argument);
    CHECK_THROWS_AS(common_neighborhood(k4, 0, 4), std::invalid_argument);
}

TEST_CASE("is_friendly") {
    CHECK(is_friendly(Graph::complete(3), 0, 1, 2));
    Graph p3(3, {{0, 1}, {1, 2}});
    CHECK_FALSE(is_friendly(p3, 0, 1, 2));
    CHECK_THROWS_AS(is_friendly(Graph::complete(3), 0, 1, 1), std::invalid_argument);
    CHECK_THROWS_AS(is_friendly(p3, 0, 2, 1), std::invalid_argument);

    std::mt19937_64 rng(41);
    for (int rep = 0; rep < 40; ++rep) {
        int n = 3 + static_cast<int>(rng() % 5);
        Graph g = random_graph(n, rng, 2, 3);
        for (const auto& [u, v] : g.edges())
            for (int w = 0; w < n; ++w) {
                if (w == u || w == v) continue;
                auto cn = common_neighborhood(g, u, v);
                CHECK(is_friendly(g, u, v, w) == std::binary_search(cn.begin(), cn.end(), w));
            }
    }
}
