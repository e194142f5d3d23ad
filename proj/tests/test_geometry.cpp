#include "doctest.h"
#include "stg/geometry.hpp"
#include "stg/random_instances.hpp"

#include <cmath>
#include <random>

using namespace stg;

TEST_CASE("intersects on closed shapes") {
    CHECK(intersects(GeometricObject::disk({0, 0}, 1), GeometricObject::disk({1.5, 0}, 1)));
    CHECK_FALSE(intersects(GeometricObject::axis_square({0, 0}, 1), GeometricObject::axis_square({2, 2}, 1)));
    // shared corner counts
    CHECK(intersects(GeometricObject::axis_square({0, 0}, 1), GeometricObject::axis_square({1, 1}, 1)));
    CHECK(intersects(GeometricObject::disk({0, 0}, 1), GeometricObject::disk({2, 0}, 1)));
    CHECK_FALSE(intersects(GeometricObject::disk({0, 0}, 1), GeometricObject::disk({2.001, 0}, 1)));
    // containment without boundary contact
    CHECK(intersects(GeometricObject::axis_square({0, 0}, 10), GeometricObject::disk({5, 5}, 1)));
    CHECK(intersects(GeometricObject::disk({5, 5}, 10), GeometricObject::axis_square({4, 4}, 1)));
    CHECK(intersects(GeometricObject::point({1, 1}), GeometricObject::axis_square({0, 0}, 1)));
    CHECK_FALSE(intersects(GeometricObject::point({1.1, 1}), GeometricObject::axis_square({0, 0}, 1)));
    // disk touching a square edge from outside
    CHECK(intersects(GeometricObject::disk({2, 0.5}, 1), GeometricObject::axis_square({0, 0}, 1)));
}

TEST_CASE("intersects is symmetric and reflexive on random objects") {
    std::mt19937_64 rng(7);
    GeoGenOptions opt;
    opt.objects = 12;
    for (int it = 0; it < 20; it++) {
        auto gi = random_geo_instance(rng, opt);
        for (auto& a : gi.objs) {
            CHECK(intersects(a, a));
            for (auto& b : gi.objs) CHECK(intersects(a, b) == intersects(b, a));
        }
    }
}

TEST_CASE("diameter") {
    CHECK(diameter(GeometricObject::disk({0, 0}, 1)) == doctest::Approx(2));
    CHECK(diameter(GeometricObject::axis_square({0, 0}, 1)) == doctest::Approx(std::sqrt(2.0)));
    CHECK(diameter(GeometricObject::polygon({{0, 0}, {3, 0}, {0, 4}})) == doctest::Approx(5));
    CHECK(diameter(GeometricObject::rotated_square({0, 0}, 1)) == doctest::Approx(2));
}

TEST_CASE("unit-diameter disk containment") {
    CHECK(contains_unit_diameter_disk(GeometricObject::disk({0, 0}, 1)));
    CHECK(contains_unit_diameter_disk(GeometricObject::axis_square({0, 0}, 1)));
    CHECK_FALSE(contains_unit_diameter_disk(GeometricObject::polygon({{0, 0}, {0.3, 0}, {0.3, 10}, {0, 10}})));
    CHECK_FALSE(contains_unit_diameter_disk(GeometricObject::point({0, 0})));
    CHECK_FALSE(contains_unit_diameter_disk(GeometricObject::axis_square({0, 0}, 0.99)));
    // non-convex L-shape with thick arm
    auto L = GeometricObject::polygon({{0, 0}, {3, 0}, {3, 1.2}, {1.2, 1.2}, {1.2, 3}, {0, 3}});
    CHECK(contains_unit_diameter_disk(L));
    auto thinL = GeometricObject::polygon({{0, 0}, {3, 0}, {3, 0.8}, {0.8, 0.8}, {0.8, 3}, {0, 3}});
    CHECK_FALSE(contains_unit_diameter_disk(thinL));
}

TEST_CASE("convex inscribed-disk check agrees with grid sampling") {
    std::mt19937_64 rng(3);
    std::uniform_real_distribution<double> U(0, 1);
    int agree = 0, total = 0;
    for (int it = 0; it < 60; it++) {
        auto o = random_fat_polygon(rng, {0, 0}, 2);
        // shrink to hover around the threshold
        double s = 0.45 + 0.6 * U(rng);
        for (auto& v : o.verts) v = {v.x * s, v.y * s};
        bool exact = contains_unit_diameter_disk(o);
        bool sampled = false;
        auto poly = o.boundary();
        const double tol = 0.01;
        double best = 0;
        for (double x = -2; x <= 2; x += tol)
            for (double y = -2; y <= 2; y += tol)
                if (point_strictly_inside_polygon({x, y}, poly)) best = std::max(best, boundary_distance({x, y}, poly));
        sampled = best >= 0.5;
        bool near = std::fabs(best - 0.5) < 2 * tol;
        total++;
        if (exact == sampled || near) agree++;
        if (sampled) CHECK(exact);
    }
    CHECK(agree == total);
}

TEST_CASE("diameter dominates sampled point pairs") {
    std::mt19937_64 rng(11);
    std::uniform_real_distribution<double> U(-2, 2);
    for (int it = 0; it < 20; it++) {
        auto o = random_fat_polygon(rng, {0, 0}, 2);
        std::vector<Point> inside;
        while (inside.size() < 40) {
            Point p{U(rng), U(rng)};
            if (contains_point(o, p)) inside.push_back(p);
        }
        double d = diameter(o);
        for (auto& a : inside)
            for (auto& b : inside) CHECK(dist(a, b) <= d + 1e-12);
    }
}

TEST_CASE("assumption G validation") {
    auto r1 = validate_assumption_G({GeometricObject::disk({0, 0}, 1)}, 4);
    CHECK(r1.ok);
    CHECK(r1.cls[0] == GeoClass::disk);
    auto r2 = validate_assumption_G({GeometricObject::disk({0, 0}, 0.5)}, 4);
    CHECK_FALSE(r2.ok);
    REQUIRE(r2.violations.size() == 1);
    CHECK(r2.violations[0].find("radius < 1") != std::string::npos);
    auto r3 = validate_assumption_G({GeometricObject::axis_square({0, 0}, 1)}, 8);
    CHECK(r3.ok);
    CHECK(r3.cls[0] == GeoClass::fat);
    auto wide = validate_assumption_G({GeometricObject::axis_square({0, 0}, 3)}, 8);
    CHECK_FALSE(wide.ok);
    auto thin = validate_assumption_G({GeometricObject::polygon({{0, 0}, {0.3, 0}, {0.3, 1.5}, {0, 1.5}})}, 8);
    CHECK_FALSE(thin.ok);
}

TEST_CASE("segment and circle intersections") {
    auto p = segment_intersection({{0, 0}, {2, 2}}, {{0, 2}, {2, 0}});
    REQUIRE(p.size() == 1);
    CHECK(p[0].x == doctest::Approx(1));
    auto ov = segment_intersection({{0, 0}, {2, 0}}, {{1, 0}, {3, 0}});
    CHECK(ov.size() == 2);
    CHECK(segment_intersection({{0, 0}, {1, 0}}, {{0, 1}, {1, 1}}).empty());
    CHECK(segment_circle_intersection({{-2, 0}, {2, 0}}, {0, 0}, 1).size() == 2);
    CHECK(segment_circle_intersection({{-2, 1}, {2, 1}}, {0, 0}, 1).size() == 1);
    CHECK(circle_circle_intersection({0, 0}, 1, {2, 0}, 1).size() == 1);
    CHECK(circle_circle_intersection({0, 0}, 1, {1, 0}, 1).size() == 2);
}

TEST_CASE("shape validation") {
    CHECK(shape_problem(GeometricObject::polygon({{0, 0}, {1, 1}, {1, 0}, {0, 1}})) != "");
    CHECK(shape_problem(GeometricObject::polygon({{0, 0}, {1, 0}, {0, 1}})) == "");
    auto o = GeometricObject::disk({0, 0}, 1);
    o.weight = 0;
    CHECK(shape_problem(o) != "");
}
