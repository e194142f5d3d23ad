#include "doctest.h"
#include "stg/random_instances.hpp"
#include "stg/recursion.hpp"

#include <chrono>
#include <random>

using namespace stg;

static SteinerInstance path_steiner(int n, std::vector<int> terms) {
    AdjList adj(n);
    for (int i = 0; i + 1 < n; i++) adj[i].push_back(i + 1), adj[i + 1].push_back(i);
    std::vector<char> t(n, 0);
    for (int x : terms) t[x] = 1;
    return make_instance(adj, std::vector<Weight>(n, 1), t);
}

TEST_CASE("trivial recursion cases") {
    auto one = path_steiner(5, {2});
    auto s = recursion_solve(one);
    CHECK(s.feasible);
    CHECK(s.chosen.empty());

    auto two = path_steiner(5, {0, 4});
    two.k = 0;
    two.xset = {0, 4};
    two.forest = {{0, 4}};
    s = recursion_solve(two);
    CHECK(s.feasible);
    CHECK(s.chosen.empty());

    two.forest.clear();
    CHECK_FALSE(recursion_solve(two).feasible);
}

TEST_CASE("long path needs the recursion") {
    auto p = path_steiner(12, {0, 11});
    RecursionStats st;
    RecursionOptions opt;
    opt.trace = true;
    auto s = recursion_solve(p, exhaustive_triple_source(), opt, &st);
    REQUIRE(s.feasible);
    CHECK(s.weight == 10);
    CHECK(st.max_depth >= 2);
    CHECK_FALSE(st.trace.empty());
    // a budget below the path length is infeasible
    p.k = 9;
    CHECK_FALSE(recursion_solve(p).feasible);
}

TEST_CASE("parameters are respected") {
    auto p = path_steiner(9, {0, 8});
    RecursionOptions opt;
    opt.base_k = 0;
    opt.x_cap = 1;  // every split needs at least one distinguished terminal beyond X
    CHECK_FALSE(recursion_solve(p, exhaustive_triple_source(), opt).feasible);
    opt.x_cap = 8;
    auto s = recursion_solve(p, exhaustive_triple_source(), opt);
    CHECK(s.feasible);
    CHECK(s.weight == 7);
}

TEST_CASE("recursion matches the exact optimum on random graphs") {
    std::mt19937_64 rng(21);
    auto t0 = std::chrono::steady_clock::now();
    int cases = 0;
    for (int it = 0; it < 40; it++) {
        int n = 6 + (int)(rng() % 5);
        auto inst = random_graph_instance(rng, n, 2 + (int)(rng() % 3), 0.3, 4);
        if (rng() % 3 == 0) inst.k = 1 + (long)(rng() % 4);
        auto want = exact_optimum(inst);
        auto got = recursion_solve(inst);
        REQUIRE(got.feasible == want.feasible);
        if (want.feasible) {
            CHECK(got.weight == want.weight);
            CHECK(is_feasible(inst, got.chosen));
        }
        cases++;
    }
    double secs = std::chrono::duration<double>(std::chrono::steady_clock::now() - t0).count();
    MESSAGE(cases << " random graph instances in " << secs << " s");
}

TEST_CASE("planar recursion matches the exact optimum") {
    std::mt19937_64 rng(8);
    int cases = 0, pl = 0;
    for (int it = 0; it < 20; it++) {
        auto pi = random_grid_instance(rng, 5, 4, 9, 3, 4, 3);
        auto inst = to_steiner(pi);
        auto want = exact_optimum(inst);
        RecursionStats st;
        auto got = recursion_solve(pi, 8, exhaustive_triple_source(), {}, &st);
        REQUIRE(got.feasible == want.feasible);
        if (!want.feasible) continue;
        if (validate_assumption_PL(pi, want.chosen, 8).ok) pl++;
        CHECK(got.weight == want.weight);
        cases++;
    }
    CHECK(cases >= 10);
    MESSAGE(cases << " planar instances, " << pl << " with a PL optimum");
}
