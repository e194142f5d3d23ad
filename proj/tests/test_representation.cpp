#include "doctest.h"
#include "stg/reduction.hpp"
#include "stg/representation.hpp"

#include <random>

using namespace stg;

static PlanarInstance path_instance(int n) {
    PlanarInstance pi;
    pi.g = Graph(n);
    for (int i = 0; i + 1 < n; i++) pi.g.add_edge(i, i + 1, 1);
    return pi;
}

static void add_obj(PlanarInstance& pi, std::vector<int> verts, bool terminal, int tau, ObjClass cls = ObjClass::fat) {
    GraphObject o;
    std::sort(verts.begin(), verts.end());
    o.verts = verts;
    o.terminal = terminal;
    pi.objs.push_back(o);
    pi.cls.push_back(cls);
    pi.tau.push_back(tau);
}

TEST_CASE("extended object set") {
    auto pi = path_instance(4);
    add_obj(pi, {2}, false, 2);
    add_obj(pi, {0, 1, 2}, false, 0);
    CHECK(build_obj_prime(pi, 0).size() == 1);
    CHECK(build_obj_prime(pi, 1).size() == 3);

    std::mt19937_64 rng(3);
    for (int it = 0; it < 10; it++) {
        auto gi = random_grid_instance(rng, 5, 4, 4, 1, 6, 3);
        for (size_t o = 0; o < gi.objs.size(); o++) {
            std::vector<char> allowed(gi.g.n, 0);
            for (int v : gi.objs[o].verts) allowed[v] = 1;
            auto paths = build_obj_prime(gi, (int)o);
            for (size_t i = 1; i < paths.size(); i++) {
                auto& p = paths[i];
                auto d = dijkstra(gi.g, {p.front()}, &allowed);
                CHECK(d[p.back()] == doctest::Approx((double)p.size() - 1));
            }
        }
    }
}

TEST_CASE("spanning tree of objects") {
    auto pi = path_instance(7);
    add_obj(pi, {3}, true, 3);
    auto one = spanning_tree_of_objects(pi, {0});
    CHECK(one.verts == std::vector<int>{3});
    CHECK(one.edges.empty());

    add_obj(pi, {0, 1, 2}, false, 1);
    add_obj(pi, {4, 5, 6}, false, 5);
    auto st = spanning_tree_of_objects(pi, {0, 1, 2});
    CHECK(st.edges.size() <= 3 * kSpanningTreeEdgeFactor);
    for (int o = 0; o < 3; o++) CHECK(std::count(st.verts.begin(), st.verts.end(), pi.tau[o]) == 1);
    for (auto [u, v] : st.edges) {
        bool ok = pi.g.has_edge(u, v);
        for (auto& o : pi.objs) {
            auto t = [&](int x) {
                if (std::binary_search(o.verts.begin(), o.verts.end(), x)) return true;
                for (auto& [w, l] : pi.g.adj[x])
                    if (std::binary_search(o.verts.begin(), o.verts.end(), w)) return true;
                return false;
            };
            ok = ok || (t(u) && t(v));
        }
        CHECK(ok);
    }
    CHECK_THROWS_AS(spanning_tree_of_objects(pi, {1, 2}), std::invalid_argument);
}

TEST_CASE("representation of small solutions") {
    // disjoint solution: each object gets its representative singleton
    auto pi = path_instance(5);
    add_obj(pi, {0}, true, 0);
    add_obj(pi, {1, 2, 3}, false, 2);
    add_obj(pi, {4}, true, 4);
    auto rep = construct_representation(pi, {1}, 8);
    auto rr = verify_representation(rep, pi, 8);
    CHECK(rr.ok());

    // two overlapping fat objects bridging the terminals
    auto q = path_instance(8);
    add_obj(q, {0}, true, 0);
    add_obj(q, {7}, true, 7);
    add_obj(q, {1, 2, 3, 4, 5}, false, 2);
    add_obj(q, {3, 4, 5, 6}, false, 6);
    auto r2 = construct_representation(q, {2, 3}, 8);
    auto v2 = verify_representation(r2, q, 8);
    CHECK(v2.ok());
    for (auto& n : v2.notes) MESSAGE(n);

    // overlapping pieces break disjointness; dropping a singleton breaks the representative rule
    auto bad = r2;
    bad.W.push_back(bad.W.front());
    CHECK_FALSE(verify_representation(bad, q, 8).property[1]);
    auto miss = r2;
    miss.W.erase(std::remove_if(miss.W.begin(), miss.W.end(),
                                [](const RepPiece& p) { return p.path == std::vector<int>{6}; }),
                 miss.W.end());
    CHECK_FALSE(verify_representation(miss, q, 8).property[6]);

    // a disk object: its pieces stay connected and include the centre
    auto d = path_instance(20);
    d.r = 8;
    add_obj(d, {0}, true, 0);
    add_obj(d, {19}, true, 19);
    add_obj(d, dijkstra_ball(d.g, 10, 8), false, 10, ObjClass::disk);
    add_obj(d, {1}, false, 1);
    add_obj(d, {18}, false, 18);
    auto r3 = construct_representation(d, {2, 3, 4}, 2);
    auto v3 = verify_representation(r3, d, 2);
    for (auto& n : v3.notes) MESSAGE(n);
    CHECK(v3.ok());
    bool centre = false;
    for (auto& p : r3.W) centre = centre || (p.owner == 2 && p.path == std::vector<int>{10});
    CHECK(centre);
}

static void check_suite(std::mt19937_64& rng, bool disks, int rounds, int& checked, double& worst) {
    for (int it = 0; it < rounds; it++) {
        double alpha = disks ? 2 : 8;
        PlanarInstance pi = disks ? random_grid_disk_instance(rng, 12, 12, 7, 2, 3, alpha, 5)
                                  : random_grid_instance(rng, 6, 5, 9, 3, 5, 4);
        auto s = exact_optimum(to_steiner(pi));
        if (!s.feasible || !validate_assumption_PL(pi, s.chosen, alpha).ok) continue;
        auto rep = construct_representation(pi, s.chosen, alpha);
        auto rr = verify_representation(rep, pi, alpha);
        for (auto& n : rr.notes) MESSAGE(n);
        CHECK(rr.ok());
        worst = std::max(worst, (double)rep.W.size() / rep.solution.size());
        checked++;
    }
}

TEST_CASE("representation of optimal solutions") {
    std::mt19937_64 rng(12);
    int checked = 0;
    double worst = 0;
    check_suite(rng, false, 60, checked, worst);
    check_suite(rng, true, 60, checked, worst);
    MESSAGE("checked " << checked << " solutions, largest |W|/|S u T| = " << worst);
    CHECK(checked >= 40);
    CHECK(worst <= kRepresentationFactor);
}

TEST_CASE("representation with long objects") {
    std::mt19937_64 rng(8);
    int checked = 0;
    for (int it = 0; it < 20; it++) {
        auto pi = random_grid_instance(rng, 4, 3, 8, 2, 3, 4);
        auto lr = long_reduction(pi, 8);
        auto s = exact_optimum(to_steiner(lr.inst));
        if (!s.feasible || !validate_assumption_PL(lr.inst, s.chosen, 8).ok) continue;
        auto rep = construct_representation(lr.inst, s.chosen, 8);
        auto rr = verify_representation(rep, lr.inst, 8);
        for (auto& n : rr.notes) MESSAGE(n);
        CHECK(rr.ok());
        checked++;
    }
    CHECK(checked > 5);
}
