#pragma once

#include "stg/weight.hpp"

#include <optional>
#include <string>
#include <vector>

namespace stg {

// tolerance for every closed-set predicate on doubles
constexpr double kEps = 1e-9;

struct Point {
    double x = 0, y = 0;
    bool operator==(const Point& o) const { return x == o.x && y == o.y; }
};

inline bool lex_less(const Point& a, const Point& b) { return a.x < b.x || (a.x == b.x && a.y < b.y); }

double dist(const Point& a, const Point& b);
double dist_l1(const Point& a, const Point& b);
double cross(const Point& o, const Point& a, const Point& b);

struct Segment {
    Point a, b;
};

// closest distance from p to the closed segment
double point_segment_dist(const Point& p, const Segment& s);

// intersection of two closed segments: empty, one point, or (collinear overlap) the two overlap endpoints
std::vector<Point> segment_intersection(const Segment& s, const Segment& t);
std::vector<Point> segment_circle_intersection(const Segment& s, const Point& c, double r);
std::vector<Point> circle_circle_intersection(const Point& c1, double r1, const Point& c2, double r2);

enum class ShapeKind { disk, axis_square, rotated_square, polygon, point, rect };

struct GeometricObject {
    ShapeKind kind = ShapeKind::point;
    Point p;                  // disk/rotated square center, square/rect lower-left, the point itself
    double r = 0;             // disk radius, square side, l1 radius
    Point q;                  // rect upper-right
    std::vector<Point> verts; // polygon vertices in order
    Weight weight = 1;
    bool terminal = false;

    static GeometricObject disk(Point c, double radius);
    static GeometricObject axis_square(Point ll, double side);
    static GeometricObject rotated_square(Point c, double l1_radius);
    static GeometricObject polygon(std::vector<Point> vs);
    static GeometricObject point(Point p);
    static GeometricObject rect(Point ll, Point ur);

    bool is_polygonal() const { return kind != ShapeKind::disk && kind != ShapeKind::point; }
    // boundary vertex cycle (polygons keep their input order)
    std::vector<Point> boundary() const;
};

std::string shape_name(ShapeKind k);
std::optional<ShapeKind> shape_from_name(const std::string& s);

// Returns an empty string when the shape is well formed, otherwise the reason.
std::string shape_problem(const GeometricObject& o);

bool polygon_is_simple(const std::vector<Point>& poly);
bool polygon_is_convex(const std::vector<Point>& poly);
double polygon_area(const std::vector<Point>& poly);  // signed

// closed point-in-shape tests
bool point_in_polygon(const Point& p, const std::vector<Point>& poly);
bool point_on_polygon_boundary(const Point& p, const std::vector<Point>& poly);
bool point_strictly_inside_polygon(const Point& p, const std::vector<Point>& poly);
bool contains_point(const GeometricObject& o, const Point& p);
bool segment_in_polygon(const Segment& s, const std::vector<Point>& poly);
double boundary_distance(const Point& p, const std::vector<Point>& poly);

bool intersects(const GeometricObject& a, const GeometricObject& b);
double diameter(const GeometricObject& o);
bool contains_unit_diameter_disk(const GeometricObject& o, double tol = 1e-3);

// all intersection points of the two boundaries (empty for points)
std::vector<Point> boundary_intersections(const GeometricObject& a, const GeometricObject& b);

enum class GeoClass { fat, disk };

struct AssumptionGReport {
    bool ok = true;
    std::vector<GeoClass> cls;
    std::vector<std::string> violations;
};

AssumptionGReport validate_assumption_G(const std::vector<GeometricObject>& objs, double alpha);

}  // namespace stg
