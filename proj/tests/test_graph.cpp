#include "doctest.h"
#include "stg/graph.hpp"

#include <random>

using namespace stg;

static Graph path_graph(int n) {
    Graph g(n);
    for (int i = 0; i + 1 < n; i++) g.add_edge(i, i + 1, 1);
    return g;
}

TEST_CASE("touch") {
    Graph g(4);
    g.add_edge(1, 3, 1);
    GraphObject a{{1, 2}}, b{{2, 3}}, c{{1}}, d{{3}}, e{{0}};
    CHECK(touch(a, b, g));
    CHECK(touch(c, d, g));
    CHECK_FALSE(touch(e, d, g));
}

TEST_CASE("touching graph matches pairwise touch") {
    std::mt19937_64 rng(5);
    std::uniform_int_distribution<int> V(0, 19);
    for (int it = 0; it < 30; it++) {
        Graph g(20);
        for (int e = 0; e < 25; e++) g.add_edge(V(rng), V(rng), 1);
        std::vector<GraphObject> objs(8);
        for (auto& o : objs) {
            int k = 1 + V(rng) % 3;
            for (int i = 0; i < k; i++) o.verts.push_back(V(rng));
            std::sort(o.verts.begin(), o.verts.end());
            o.verts.erase(std::unique(o.verts.begin(), o.verts.end()), o.verts.end());
        }
        auto tg = touching_graph(objs, g);
        for (size_t i = 0; i < objs.size(); i++)
            for (size_t j = 0; j < objs.size(); j++) {
                if (i == j) continue;
                bool adj = std::find(tg[i].begin(), tg[i].end(), (int)j) != tg[i].end();
                CHECK(adj == touch(objs[i], objs[j], g));
            }
    }
    Graph g3(3);
    std::vector<GraphObject> tri{{{0}}, {{0, 1}}, {{1, 0}}};
    tri[2].verts = {0, 1};
    auto t = touching_graph(tri, g3);
    CHECK(t[0].size() == 2);
}

TEST_CASE("balls") {
    auto g = path_graph(3);
    CHECK(dijkstra_ball(g, 0, 0) == std::vector<int>{0});
    CHECK(dijkstra_ball(g, 0, 1) == std::vector<int>{0, 1});
    CHECK_THROWS(dijkstra_ball(g, 5, 1));
    std::mt19937_64 rng(1);
    std::uniform_int_distribution<int> V(0, 11);
    std::uniform_real_distribution<double> L(0, 3);
    for (int it = 0; it < 20; it++) {
        Graph h(12);
        for (int e = 0; e < 20; e++) h.add_edge(V(rng), V(rng), L(rng));
        // Floyd-Warshall oracle
        std::vector<std::vector<double>> d(12, std::vector<double>(12, INFINITY));
        for (int v = 0; v < 12; v++) {
            d[v][v] = 0;
            for (auto& [w, l] : h.adj[v]) d[v][w] = std::min(d[v][w], l);
        }
        for (int k = 0; k < 12; k++)
            for (int i = 0; i < 12; i++)
                for (int j = 0; j < 12; j++) d[i][j] = std::min(d[i][j], d[i][k] + d[k][j]);
        for (double r : {0.5, 1.5, 4.0}) {
            auto b = dijkstra_ball(h, 0, r);
            std::vector<int> want;
            for (int v = 0; v < 12; v++)
                if (d[0][v] <= r + 1e-9) want.push_back(v);
            CHECK(b == want);
            auto b2 = dijkstra_ball(h, 0, r + 1);
            CHECK(std::includes(b2.begin(), b2.end(), b.begin(), b.end()));
        }
    }
}

TEST_CASE("perturbation makes distances unique") {
    Graph sq(4);
    sq.add_edge(0, 1, 1);
    sq.add_edge(1, 2, 1);
    sq.add_edge(2, 3, 1);
    sq.add_edge(3, 0, 1);
    CHECK_FALSE(distances_unique(sq));
    auto p = perturb_lengths(sq, 42);
    CHECK(distances_unique(p));
    auto d0 = all_pairs(sq), d1 = all_pairs(p);
    for (int i = 0; i < 4; i++)
        for (int j = 0; j < 4; j++) CHECK(std::fabs(d0[i][j] - d1[i][j]) < 1e-9);
    Graph z(2);
    z.add_edge(0, 1, 0);
    auto pz = perturb_lengths(z, 1);
    CHECK(pz.adj[0][0].second > 0);
    Graph u(3);
    u.add_edge(0, 1, 1);
    u.add_edge(1, 2, 3);
    CHECK(distances_unique(perturb_lengths(u, 9)));
}

TEST_CASE("critical connectivity and the degree-3 bound") {
    AdjList path{{1}, {0, 2}, {1}};
    CHECK(is_critically_connected(path, {0, 2}));
    AdjList pend{{1}, {0, 2, 3}, {1}, {1}};
    CHECK_FALSE(is_critically_connected(pend, {0, 2}));
    CHECK_THROWS(is_critically_connected(path, {0}));

    auto r = check_deg3_bound(path, {0, 2});
    CHECK(r.count == 0);
    CHECK(r.bound == 0);
    CHECK(r.holds);

    AdjList star{{1, 2, 3}, {0}, {0}, {0}};
    auto s = check_deg3_bound(star, {1, 2, 3});
    CHECK(s.count == 1);
    CHECK(s.bound == 3);
    CHECK(s.holds);

    // a triangle with a leaf on each corner: three leaves as T, three vertices of degree 3
    AdjList fig{{1, 2, 3}, {0, 2, 4}, {0, 1, 5}, {0}, {1}, {2}};
    CHECK(is_critically_connected(fig, {3, 4, 5}));
    auto f = check_deg3_bound(fig, {3, 4, 5});
    CHECK(f.count == 3);
    CHECK(f.bound == 3);
    CHECK(f.holds);
}
