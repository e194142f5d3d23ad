#include "doctest.h"
#include "stg/reduction.hpp"

#include <random>

using namespace stg;

static GeoInstance disjoint_terminal_instance(std::mt19937_64& rng, int objects, int terminals) {
    GeoGenOptions opt;
    opt.objects = objects;
    opt.terminals = terminals;
    opt.disjoint_terminals = true;
    for (;;) {
        auto gi = random_geo_instance(rng, opt);
        bool ok = true;
        for (size_t i = 0; i < gi.objs.size(); i++)
            for (size_t j = i + 1; j < gi.objs.size(); j++)
                if (gi.objs[i].terminal && gi.objs[j].terminal && intersects(gi.objs[i], gi.objs[j])) ok = false;
        if (ok) return gi;
    }
}

TEST_CASE("terminal independence reweighting") {
    GeoInstance gi;
    gi.objs = {GeometricObject::disk({0, 0}, 1), GeometricObject::disk({5, 0}, 1)};
    for (auto& o : gi.objs) o.terminal = true;
    auto same = make_terminals_independent(gi);
    CHECK(same.dropped.empty());
    CHECK(same.inst.objs[0].weight == gi.objs[0].weight);

    GeoInstance ov;
    ov.objs = {GeometricObject::disk({0, 0}, 1), GeometricObject::disk({1, 0}, 1)};
    ov.objs[0].weight = 2;
    ov.objs[1].weight = 5;
    for (auto& o : ov.objs) o.terminal = true;
    auto r = make_terminals_independent(ov);
    REQUIRE(r.kept == std::vector<int>{0});
    CHECK(r.inst.objs[1].weight == Weight(1, 3));
    CHECK_FALSE(r.inst.objs[1].terminal);
    CHECK(r.inst.objs[0].weight == 7);
    CHECK_THROWS(make_terminals_independent(GeoInstance{}));
}

TEST_CASE("terminal independence keeps the optimum within a third") {
    std::mt19937_64 rng(19);
    GeoGenOptions opt;
    opt.objects = 9;
    opt.terminals = 4;
    for (int it = 0; it < 40; it++) {
        auto gi = random_geo_instance(rng, opt);
        auto r = make_terminals_independent(gi);
        auto a = dreyfus_wagner(to_steiner(gi));
        auto b = dreyfus_wagner(to_steiner(r.inst));
        REQUIRE(a.feasible == b.feasible);
        if (!a.feasible) continue;
        CHECK(b.weight >= a.weight);
        CHECK(b.weight <= a.weight + Weight(1, 3));
    }
}

TEST_CASE("packing report") {
    auto one = packing_report({GeometricObject::axis_square({0, 0}, 1)}, 8);
    CHECK(one.max_count == 1);
    std::vector<GeometricObject> clique;
    for (int i = 0; i < 5; i++) clique.push_back(GeometricObject::axis_square({0.1 * i, 0}, 1));
    CHECK(packing_report(clique, 8).max_count == 5);
    std::mt19937_64 rng(4);
    for (int it = 0; it < 10; it++) {
        auto gi = disjoint_terminal_instance(rng, 10, 3);
        auto s = dreyfus_wagner(to_steiner(gi));
        if (!s.feasible) continue;
        std::vector<GeometricObject> sol;
        for (size_t i = 0; i < gi.objs.size(); i++)
            if (gi.objs[i].terminal || std::count(s.chosen.begin(), s.chosen.end(), (int)i)) sol.push_back(gi.objs[i]);
        CHECK(packing_report(sol, 8).within_proof_bound);
    }
}

TEST_CASE("geometric to planar on fixed cases") {
    GeoInstance far;
    far.objs = {GeometricObject::disk({0, 0}, 1), GeometricObject::disk({5, 0}, 1)};
    auto a = geo_to_planar(far, 8);
    CHECK_FALSE(touch(a.inst.objs[0], a.inst.objs[1], a.inst.g));

    GeoInstance two;
    two.objs = {GeometricObject::disk({0, 0}, 1), GeometricObject::disk({1.5, 0}, 1)};
    auto b = geo_to_planar(two, 8);
    auto& o0 = b.inst.objs[0].verts;
    auto& o1 = b.inst.objs[1].verts;
    std::vector<int> shared;
    std::set_intersection(o0.begin(), o0.end(), o1.begin(), o1.end(), std::back_inserter(shared));
    bool has_base_crossing = false;
    for (int v : shared)
        if (b.base_vertex[v]) {
            // the crossing point of the two circles
            if (std::fabs(dist(b.inst.g.pos[v], {0, 0}) - 1) < 1e-9) has_base_crossing = true;
        }
    CHECK(has_base_crossing);

    GeoInstance bad;
    bad.objs = {GeometricObject::disk({0, 0}, 0.5)};
    CHECK_THROWS_AS(geo_to_planar(bad, 8), AssumptionError);
    GeoInstance touching_terms;
    touching_terms.objs = {GeometricObject::disk({0, 0}, 1), GeometricObject::disk({1, 0}, 1)};
    for (auto& o : touching_terms.objs) o.terminal = true;
    CHECK_THROWS_AS(geo_to_planar(touching_terms, 8), AssumptionError);
}

TEST_CASE("geometric to planar preserves intersections, containment and optimum") {
    std::mt19937_64 rng(99);
    for (int it = 0; it < 20; it++) {
        auto gi = disjoint_terminal_instance(rng, 7 + it % 4, 3);
        auto red = geo_to_planar(gi, 8);
        const auto& pi = red.inst;
        for (size_t i = 0; i < gi.objs.size(); i++) {
            CHECK(induced_connected(pi.g, pi.objs[i].verts));
            for (int v : pi.objs[i].verts) CHECK(contains_point(gi.objs[i], pi.g.pos[v]));
            for (size_t j = i + 1; j < gi.objs.size(); j++)
                CHECK(intersects(gi.objs[i], gi.objs[j]) == touch(pi.objs[i], pi.objs[j], pi.g));
        }
        auto a = dreyfus_wagner(to_steiner(gi));
        auto b = dreyfus_wagner(to_steiner(pi));
        REQUIRE(a.feasible == b.feasible);
        if (a.feasible) CHECK(a.weight == b.weight);
        for (size_t i = 0; i < gi.objs.size(); i++)
            if (pi.cls[i] == ObjClass::fat) CHECK(graph_diameter(pi.g, pi.objs[i].verts) <= 8 + 1e-9);
    }
}

TEST_CASE("assumption P validation") {
    // one big disk makes the common radius reach 4 alpha
    GeoInstance gi;
    gi.objs = {GeometricObject::axis_square({0, 0}, 1), GeometricObject::axis_square({40, 0}, 1),
               GeometricObject::disk({20, 0}, 32)};
    gi.objs[0].terminal = gi.objs[1].terminal = true;
    auto red = geo_to_planar(gi, 8);
    CHECK(validate_assumption_P(red.inst, {}, 8).ok);
    CHECK(validate_assumption_P(red.inst, {2}, 8).ok);

    PlanarInstance line;
    line.g = Graph(11);
    for (int i = 0; i < 10; i++) line.g.add_edge(i, i + 1, 1);
    GraphObject wide;
    for (int i = 0; i <= 9; i++) wide.verts.push_back(i);
    wide.terminal = true;
    line.objs = {wide};
    line.cls = {ObjClass::fat};
    line.tau = {0};
    auto rep = validate_assumption_P(line, {}, 8);
    CHECK_FALSE(rep.ok);
    CHECK(rep.violations[0].find("diameter") != std::string::npos);

    // small disks in a geometric input leave the radius below 4 alpha
    GeoInstance small;
    small.objs = {GeometricObject::disk({0, 0}, 1)};
    small.objs[0].terminal = true;
    CHECK_FALSE(validate_assumption_P(geo_to_planar(small, 8).inst, {}, 8).ok);
}

TEST_CASE("long-object reduction") {
    // two terminals joined by a chain of five unit objects on a path graph
    PlanarInstance pi;
    pi.g = Graph(7);
    for (int i = 0; i < 6; i++) pi.g.add_edge(i, i + 1, 1);
    for (int i = 0; i < 7; i++) {
        GraphObject o;
        o.verts = {i};
        o.weight = 1;
        o.terminal = (i == 0 || i == 6);
        pi.objs.push_back(o);
        pi.cls.push_back(ObjClass::fat);
        pi.tau.push_back(i);
    }
    auto lr = long_reduction(pi, 8);
    CHECK(lr.inst.k == 16);
    auto s = dreyfus_wagner(to_steiner(lr.inst));
    REQUIRE(s.feasible);
    CHECK(s.weight == 5);
    auto old = dreyfus_wagner(to_steiner(pi));
    CHECK(old.weight == 5);
    // a single long object of weight five is an optimum of the new instance
    bool single = false;
    for (size_t o = lr.original_objects; o < lr.inst.objs.size(); o++)
        if (lr.inst.objs[o].weight == 5 && lr.inst.objs[o].verts == std::vector<int>{1, 2, 3, 4, 5}) {
            CHECK(is_feasible(to_steiner(lr.inst), {(int)o}));
            single = true;
        }
    CHECK(single);
    auto back = expand_long_objects(lr, s.chosen);
    CHECK(is_feasible(to_steiner(pi), back));
    CHECK(solution_weight(to_steiner(pi), back) <= s.weight);
    CHECK(validate_assumption_PL(lr.inst, s.chosen, 8).ok);
}

TEST_CASE("long-object reduction on random grids") {
    std::mt19937_64 rng(5);
    int checked = 0;
    for (int it = 0; it < 15; it++) {
        auto pi = random_grid_instance(rng, 4, 3, 9, 2 + it % 2, 3, 4);
        auto before = dreyfus_wagner(to_steiner(pi));
        auto lr = long_reduction(pi, 8);
        long nterm = 0;
        for (auto& o : pi.objs) nterm += o.terminal;
        CHECK(lr.inst.k == 8 * nterm);
        auto after = dreyfus_wagner(to_steiner(lr.inst));
        REQUIRE(before.feasible == after.feasible);
        if (!before.feasible) continue;
        checked++;
        CHECK(before.weight == after.weight);
        auto back = expand_long_objects(lr, after.chosen);
        CHECK(is_feasible(to_steiner(pi), back));
        CHECK(solution_weight(to_steiner(pi), back) <= after.weight);
    }
    CHECK(checked > 5);
}
