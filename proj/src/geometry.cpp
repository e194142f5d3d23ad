#include "stg/geometry.hpp"

#include <algorithm>
#include <cmath>
#include <stdexcept>

namespace stg {

double dist(const Point& a, const Point& b) { return std::hypot(a.x - b.x, a.y - b.y); }
double dist_l1(const Point& a, const Point& b) { return std::fabs(a.x - b.x) + std::fabs(a.y - b.y); }
double cross(const Point& o, const Point& a, const Point& b) {
    return (a.x - o.x) * (b.y - o.y) - (a.y - o.y) * (b.x - o.x);
}

static double dot(const Point& o, const Point& a, const Point& b) {
    return (a.x - o.x) * (b.x - o.x) + (a.y - o.y) * (b.y - o.y);
}

double point_segment_dist(const Point& p, const Segment& s) {
    double L2 = (s.b.x - s.a.x) * (s.b.x - s.a.x) + (s.b.y - s.a.y) * (s.b.y - s.a.y);
    if (L2 == 0) return dist(p, s.a);
    double t = std::clamp(dot(s.a, s.b, p) / L2, 0.0, 1.0);
    return dist(p, {s.a.x + t * (s.b.x - s.a.x), s.a.y + t * (s.b.y - s.a.y)});
}

std::vector<Point> segment_intersection(const Segment& s, const Segment& t) {
    Point r{s.b.x - s.a.x, s.b.y - s.a.y}, q{t.b.x - t.a.x, t.b.y - t.a.y};
    double ls = std::hypot(r.x, r.y), lt = std::hypot(q.x, q.y);
    if (ls == 0 || lt == 0) {
        // degenerate segment acts as a point
        if (ls == 0 && point_segment_dist(s.a, t) <= kEps) return {s.a};
        if (lt == 0 && point_segment_dist(t.a, s) <= kEps) return {t.a};
        return {};
    }
    double den = r.x * q.y - r.y * q.x;
    if (std::fabs(den) <= kEps * ls * lt) {
        // parallel: overlap only if collinear
        if (std::fabs(cross(s.a, s.b, t.a)) / ls > kEps) return {};
        double t0 = dot(s.a, s.b, t.a) / (ls * ls), t1 = dot(s.a, s.b, t.b) / (ls * ls);
        if (t0 > t1) std::swap(t0, t1);
        double lo = std::max(0.0, t0), hi = std::min(1.0, t1);
        double tol = kEps / ls;
        if (lo > hi + tol) return {};
        auto at = [&](double u) { return Point{s.a.x + u * r.x, s.a.y + u * r.y}; };
        // snap to exact endpoints where possible
        auto pick = [&](double u) {
            for (const Point& e : {s.a, s.b, t.a, t.b})
                if (dist(e, at(u)) <= kEps) return e;
            return at(u);
        };
        if (hi - lo <= tol) return {pick(lo)};
        return {pick(lo), pick(hi)};
    }
    double u = ((t.a.x - s.a.x) * q.y - (t.a.y - s.a.y) * q.x) / den;
    double v = ((t.a.x - s.a.x) * r.y - (t.a.y - s.a.y) * r.x) / den;
    if (u < -kEps / ls || u > 1 + kEps / ls || v < -kEps / lt || v > 1 + kEps / lt) return {};
    for (const Point& e : {s.a, s.b, t.a, t.b})
        if (point_segment_dist(e, s) <= kEps && point_segment_dist(e, t) <= kEps) return {e};
    u = std::clamp(u, 0.0, 1.0);
    return {Point{s.a.x + u * r.x, s.a.y + u * r.y}};
}

std::vector<Point> segment_circle_intersection(const Segment& s, const Point& c, double rad) {
    double dx = s.b.x - s.a.x, dy = s.b.y - s.a.y;
    double fx = s.a.x - c.x, fy = s.a.y - c.y;
    double A = dx * dx + dy * dy;
    if (A == 0) {
        if (std::fabs(dist(s.a, c) - rad) <= kEps) return {s.a};
        return {};
    }
    double B = 2 * (fx * dx + fy * dy), C = fx * fx + fy * fy - rad * rad;
    double disc = B * B - 4 * A * C;
    double L = std::sqrt(A);
    std::vector<Point> out;
    auto push = [&](double t) {
        if (t < -kEps / L || t > 1 + kEps / L) return;
        t = std::clamp(t, 0.0, 1.0);
        Point p{s.a.x + t * dx, s.a.y + t * dy};
        for (const Point& o : out)
            if (dist(o, p) <= kEps) return;
        out.push_back(p);
    };
    // tangency within tolerance counts as one touching point
    double tangent_slack = 4 * A * (2 * rad * kEps);
    if (disc < -tangent_slack) return {};
    if (disc <= tangent_slack) {
        push(-B / (2 * A));
        return out;
    }
    double sq = std::sqrt(disc);
    push((-B - sq) / (2 * A));
    push((-B + sq) / (2 * A));
    return out;
}

std::vector<Point> circle_circle_intersection(const Point& c1, double r1, const Point& c2, double r2) {
    double d = dist(c1, c2);
    if (d <= kEps && std::fabs(r1 - r2) <= kEps) return {Point{c1.x + r1, c1.y}};
    if (d > r1 + r2 + kEps || d < std::fabs(r1 - r2) - kEps || d <= kEps) return {};
    double a = (r1 * r1 - r2 * r2 + d * d) / (2 * d);
    double h2 = r1 * r1 - a * a;
    double ex = (c2.x - c1.x) / d, ey = (c2.y - c1.y) / d;
    Point m{c1.x + a * ex, c1.y + a * ey};
    if (h2 <= kEps * kEps * 4) return {m};
    double h = std::sqrt(h2);
    return {Point{m.x - h * ey, m.y + h * ex}, Point{m.x + h * ey, m.y - h * ex}};
}

GeometricObject GeometricObject::disk(Point c, double radius) {
    GeometricObject o;
    o.kind = ShapeKind::disk;
    o.p = c;
    o.r = radius;
    return o;
}
GeometricObject GeometricObject::axis_square(Point ll, double side) {
    GeometricObject o;
    o.kind = ShapeKind::axis_square;
    o.p = ll;
    o.r = side;
    return o;
}
GeometricObject GeometricObject::rotated_square(Point c, double l1_radius) {
    GeometricObject o;
    o.kind = ShapeKind::rotated_square;
    o.p = c;
    o.r = l1_radius;
    return o;
}
GeometricObject GeometricObject::polygon(std::vector<Point> vs) {
    GeometricObject o;
    o.kind = ShapeKind::polygon;
    o.verts = std::move(vs);
    return o;
}
GeometricObject GeometricObject::point(Point p) {
    GeometricObject o;
    o.kind = ShapeKind::point;
    o.p = p;
    return o;
}
GeometricObject GeometricObject::rect(Point ll, Point ur) {
    GeometricObject o;
    o.kind = ShapeKind::rect;
    o.p = ll;
    o.q = ur;
    return o;
}

std::vector<Point> GeometricObject::boundary() const {
    switch (kind) {
        case ShapeKind::axis_square:
            return {p, {p.x + r, p.y}, {p.x + r, p.y + r}, {p.x, p.y + r}};
        case ShapeKind::rect:
            return {p, {q.x, p.y}, q, {p.x, q.y}};
        case ShapeKind::rotated_square:
            return {{p.x + r, p.y}, {p.x, p.y + r}, {p.x - r, p.y}, {p.x, p.y - r}};
        case ShapeKind::polygon:
            return verts;
        default:
            return {};
    }
}

std::string shape_name(ShapeKind k) {
    switch (k) {
        case ShapeKind::disk: return "disk";
        case ShapeKind::axis_square: return "axis_square";
        case ShapeKind::rotated_square: return "rotated_square";
        case ShapeKind::polygon: return "polygon";
        case ShapeKind::point: return "point";
        case ShapeKind::rect: return "rect";
    }
    return "?";
}

std::optional<ShapeKind> shape_from_name(const std::string& s) {
    for (ShapeKind k : {ShapeKind::disk, ShapeKind::axis_square, ShapeKind::rotated_square, ShapeKind::polygon,
                        ShapeKind::point, ShapeKind::rect})
        if (shape_name(k) == s) return k;
    return std::nullopt;
}

double polygon_area(const std::vector<Point>& poly) {
    double a = 0;
    for (size_t i = 0; i < poly.size(); i++) {
        const Point &u = poly[i], &v = poly[(i + 1) % poly.size()];
        a += u.x * v.y - u.y * v.x;
    }
    return a / 2;
}

bool polygon_is_simple(const std::vector<Point>& poly) {
    size_t n = poly.size();
    if (n < 3) return false;
    for (size_t i = 0; i < n; i++) {
        if (dist(poly[i], poly[(i + 1) % n]) <= kEps) return false;
        for (size_t j = i + 1; j < n; j++) {
            Segment s{poly[i], poly[(i + 1) % n]}, t{poly[j], poly[(j + 1) % n]};
            auto pts = segment_intersection(s, t);
            if (pts.empty()) continue;
            bool adjacent = (j == i + 1) || (i == 0 && j == n - 1);
            if (!adjacent) return false;
            // neighbours may only share their common vertex
            const Point& shared = (j == i + 1) ? poly[j] : poly[i];
            if (pts.size() > 1 || dist(pts[0], shared) > kEps) return false;
        }
    }
    return std::fabs(polygon_area(poly)) > kEps;
}

bool polygon_is_convex(const std::vector<Point>& poly) {
    size_t n = poly.size();
    int sign = 0;
    for (size_t i = 0; i < n; i++) {
        double c = cross(poly[i], poly[(i + 1) % n], poly[(i + 2) % n]);
        if (std::fabs(c) <= kEps) continue;
        int s = c > 0 ? 1 : -1;
        if (sign == 0) sign = s;
        else if (s != sign) return false;
    }
    return true;
}

std::string shape_problem(const GeometricObject& o) {
    if (!(o.weight > 0)) return "weight must be positive";
    switch (o.kind) {
        case ShapeKind::disk:
        case ShapeKind::axis_square:
        case ShapeKind::rotated_square:
            if (!(o.r > 0) || !std::isfinite(o.r)) return "size must be positive";
            break;
        case ShapeKind::rect:
            if (!(o.q.x > o.p.x && o.q.y > o.p.y)) return "rectangle corners out of order";
            break;
        case ShapeKind::polygon:
            if (!polygon_is_simple(o.verts)) return "polygon is not simple";
            break;
        case ShapeKind::point:
            break;
    }
    return "";
}

double boundary_distance(const Point& p, const std::vector<Point>& poly) {
    double best = INFINITY;
    for (size_t i = 0; i < poly.size(); i++)
        best = std::min(best, point_segment_dist(p, {poly[i], poly[(i + 1) % poly.size()]}));
    return best;
}

bool point_on_polygon_boundary(const Point& p, const std::vector<Point>& poly) {
    return boundary_distance(p, poly) <= kEps;
}

static bool ray_inside(const Point& p, const std::vector<Point>& poly) {
    bool in = false;
    for (size_t i = 0, j = poly.size() - 1; i < poly.size(); j = i++) {
        const Point &a = poly[i], &b = poly[j];
        if ((a.y > p.y) != (b.y > p.y)) {
            double x = a.x + (p.y - a.y) * (b.x - a.x) / (b.y - a.y);
            if (x > p.x) in = !in;
        }
    }
    return in;
}

bool point_in_polygon(const Point& p, const std::vector<Point>& poly) {
    return point_on_polygon_boundary(p, poly) || ray_inside(p, poly);
}

bool point_strictly_inside_polygon(const Point& p, const std::vector<Point>& poly) {
    return !point_on_polygon_boundary(p, poly) && ray_inside(p, poly);
}

bool contains_point(const GeometricObject& o, const Point& p) {
    switch (o.kind) {
        case ShapeKind::disk: return dist(o.p, p) <= o.r + kEps;
        case ShapeKind::point: return dist(o.p, p) <= kEps;
        default: return point_in_polygon(p, o.boundary());
    }
}

bool segment_in_polygon(const Segment& s, const std::vector<Point>& poly) {
    if (!point_in_polygon(s.a, poly) || !point_in_polygon(s.b, poly)) return false;
    double L = dist(s.a, s.b);
    if (L == 0) return true;
    std::vector<double> ts{0.0, 1.0};
    for (size_t i = 0; i < poly.size(); i++) {
        for (const Point& q : segment_intersection(s, {poly[i], poly[(i + 1) % poly.size()]}))
            ts.push_back(std::clamp(dot(s.a, s.b, q) / (L * L), 0.0, 1.0));
    }
    std::sort(ts.begin(), ts.end());
    for (size_t i = 0; i + 1 < ts.size(); i++) {
        if (ts[i + 1] - ts[i] <= kEps / L) continue;
        double m = (ts[i] + ts[i + 1]) / 2;
        if (!point_in_polygon({s.a.x + m * (s.b.x - s.a.x), s.a.y + m * (s.b.y - s.a.y)}, poly)) return false;
    }
    return true;
}

bool intersects(const GeometricObject& a, const GeometricObject& b) {
    if (a.kind == ShapeKind::point) return contains_point(b, a.p);
    if (b.kind == ShapeKind::point) return contains_point(a, b.p);
    if (a.kind == ShapeKind::disk && b.kind == ShapeKind::disk) return dist(a.p, b.p) <= a.r + b.r + kEps;
    if (a.kind == ShapeKind::disk || b.kind == ShapeKind::disk) {
        const GeometricObject& d = a.kind == ShapeKind::disk ? a : b;
        const GeometricObject& f = a.kind == ShapeKind::disk ? b : a;
        auto poly = f.boundary();
        return point_in_polygon(d.p, poly) || boundary_distance(d.p, poly) <= d.r + kEps;
    }
    auto pa = a.boundary(), pb = b.boundary();
    for (size_t i = 0; i < pa.size(); i++)
        for (size_t j = 0; j < pb.size(); j++)
            if (!segment_intersection({pa[i], pa[(i + 1) % pa.size()]}, {pb[j], pb[(j + 1) % pb.size()]}).empty())
                return true;
    return point_in_polygon(pa[0], pb) || point_in_polygon(pb[0], pa);
}

double diameter(const GeometricObject& o) {
    if (o.kind == ShapeKind::disk) return 2 * o.r;
    if (o.kind == ShapeKind::point) return 0;
    auto vs = o.boundary();
    double best = 0;
    for (size_t i = 0; i < vs.size(); i++)
        for (size_t j = i + 1; j < vs.size(); j++) best = std::max(best, dist(vs[i], vs[j]));
    return best;
}

// Clip a convex region by the half-plane left of (a->b) shifted inwards by d.
static std::vector<Point> clip_halfplane(const std::vector<Point>& region, Point a, Point b, double d) {
    double L = dist(a, b);
    auto side = [&](const Point& p) { return cross(a, b, p) / L - d; };
    std::vector<Point> out;
    for (size_t i = 0; i < region.size(); i++) {
        const Point &p = region[i], &q = region[(i + 1) % region.size()];
        double sp = side(p), sq = side(q);
        if (sp >= -1e-12) out.push_back(p);
        if ((sp >= -1e-12) != (sq >= -1e-12)) {
            double t = sp / (sp - sq);
            out.push_back({p.x + t * (q.x - p.x), p.y + t * (q.y - p.y)});
        }
    }
    return out;
}

bool contains_unit_diameter_disk(const GeometricObject& o, double tol) {
    if (o.kind == ShapeKind::point) return false;
    if (o.kind == ShapeKind::disk) return o.r >= 0.5 - kEps;
    auto poly = o.boundary();
    if (polygon_area(poly) < 0) std::reverse(poly.begin(), poly.end());
    if (polygon_is_convex(poly)) {
        // inner parallel body at distance 1/2 is nonempty iff a radius-1/2 disk fits
        std::vector<Point> region = poly;
        for (size_t i = 0; i < poly.size() && !region.empty(); i++)
            region = clip_halfplane(region, poly[i], poly[(i + 1) % poly.size()], 0.5 - kEps);
        return !region.empty();
    }
    double minx = INFINITY, maxx = -INFINITY, miny = INFINITY, maxy = -INFINITY;
    for (auto& p : poly) {
        minx = std::min(minx, p.x), maxx = std::max(maxx, p.x);
        miny = std::min(miny, p.y), maxy = std::max(maxy, p.y);
    }
    if (!(tol > 0)) throw std::invalid_argument("tolerance must be positive");
    for (double x = minx; x <= maxx; x += tol)
        for (double y = miny; y <= maxy; y += tol) {
            Point c{x, y};
            if (ray_inside(c, poly) && boundary_distance(c, poly) >= 0.5) return true;
        }
    return false;
}

std::vector<Point> boundary_intersections(const GeometricObject& a, const GeometricObject& b) {
    if (a.kind == ShapeKind::point || b.kind == ShapeKind::point) return {};
    if (a.kind == ShapeKind::disk && b.kind == ShapeKind::disk) return circle_circle_intersection(a.p, a.r, b.p, b.r);
    std::vector<Point> out;
    auto add = [&](const Point& p) {
        for (auto& q : out)
            if (dist(p, q) <= kEps) return;
        out.push_back(p);
    };
    if (a.kind == ShapeKind::disk || b.kind == ShapeKind::disk) {
        const GeometricObject& d = a.kind == ShapeKind::disk ? a : b;
        auto poly = (a.kind == ShapeKind::disk ? b : a).boundary();
        for (size_t i = 0; i < poly.size(); i++)
            for (auto& p : segment_circle_intersection({poly[i], poly[(i + 1) % poly.size()]}, d.p, d.r)) add(p);
        return out;
    }
    auto pa = a.boundary(), pb = b.boundary();
    for (size_t i = 0; i < pa.size(); i++)
        for (size_t j = 0; j < pb.size(); j++)
            for (auto& p : segment_intersection({pa[i], pa[(i + 1) % pa.size()]}, {pb[j], pb[(j + 1) % pb.size()]}))
                add(p);
    return out;
}

AssumptionGReport validate_assumption_G(const std::vector<GeometricObject>& objs, double alpha) {
    AssumptionGReport rep;
    if (alpha < 4) {
        rep.ok = false;
        rep.violations.push_back("alpha < 4");
    }
    for (size_t i = 0; i < objs.size(); i++) {
        const auto& o = objs[i];
        std::string tag = "object " + std::to_string(i) + ": ";
        std::string bad = shape_problem(o);
        if (!bad.empty()) {
            rep.ok = false;
            rep.violations.push_back(tag + bad);
        }
        if (o.kind == ShapeKind::disk) {
            rep.cls.push_back(GeoClass::disk);
            if (o.r < 1 - kEps) {
                rep.ok = false;
                rep.violations.push_back(tag + "radius < 1");
            }
            continue;
        }
        rep.cls.push_back(GeoClass::fat);
        if (o.kind == ShapeKind::point) {
            rep.ok = false;
            rep.violations.push_back(tag + "point objects are not fat");
            continue;
        }
        if (diameter(o) > alpha / 4 + kEps) {
            rep.ok = false;
            rep.violations.push_back(tag + "diameter exceeds alpha/4");
        }
        if (!contains_unit_diameter_disk(o)) {
            rep.ok = false;
            rep.violations.push_back(tag + "no unit-diameter disk inside");
        }
    }
    return rep;
}

}  // namespace stg
