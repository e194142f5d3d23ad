#pragma once

#include "stg/steiner.hpp"
#include "stg/weight.hpp"

#include <string>
#include <utility>
#include <vector>

namespace stg {

struct SimpleGraph {
    int n = 0;
    std::vector<std::pair<int, int>> edges;  // u < v
};

bool is_cubic(const SimpleGraph& g);
// pairwise non-isomorphic cubic graphs on n vertices, disconnected ones included
std::vector<SimpleGraph> cubic_graphs(int n);
// brute force; returns the cover as a vertex list
std::vector<int> min_vertex_cover(const SimpleGraph& g);

// Universe elements: a_1..a_n are 0..n-1 (one per edge); then w_t, x_t, y_t, z_t for vertex t are
// n + 4t + {0,1,2,3}.
struct Special3SC {
    int n = 0, m = 0;  // n edges, m vertices, 2n = 3m
    std::vector<std::vector<int>> sets;  // five per vertex in the order {a_i,w}, {w,x}, {a_j,x,y}, {y,z}, {a_k,z}
    int universe() const { return n + 4 * m; }
    std::string element_name(int e) const;
};

// throws std::invalid_argument unless the graph is simple and cubic
Special3SC vc3_to_special3sc(const SimpleGraph& g);
// two or three sets per vertex by membership in the cover
std::vector<int> cover_from_vertex_cover(const Special3SC& s, const std::vector<int>& vc);
// vertices whose a-carrying sets are taken
std::vector<int> vertex_cover_from_cover(const Special3SC& s, const std::vector<int>& cover);
bool is_set_cover(int universe, const std::vector<std::vector<int>>& sets, const std::vector<int>& chosen);
// exact by branching on the uncovered element with fewest options
std::vector<int> min_set_cover(int universe, const std::vector<std::vector<int>>& sets);

struct QPoint {
    Weight x, y;
};
struct QRect {
    Weight x0, y0, x1, y1;  // closed
    bool contains(const QPoint& p) const { return x0 <= p.x && p.x <= x1 && y0 <= p.y && p.y <= y1; }
};

// Points a'_i on the lower-right staircase, B points on the upper-left one, and one bounding rectangle per
// set stretched to the bands around -1 and 1 so that it holds the origin. `scale` maps the raw layout,
// whose sides lie in [2, 2 + eps], onto sides in [1, 1 + eps].
struct RectInstance {
    Weight epsilon, Delta, scale;
    std::vector<QPoint> points;  // index = universe element
    std::vector<QRect> rects;    // index = set
    std::vector<QRect> normalized() const;
    std::vector<QPoint> normalized_points() const;
};

// Delta = eps / (20 n^2); throws std::invalid_argument unless 0 < eps <= 1
RectInstance special3sc_to_rects(const Special3SC& s, const Weight& epsilon);
// incidence[e][r] = point e lies in rectangle r
std::vector<std::vector<char>> incidence(const RectInstance& r);
// points are terminals, rectangles unit-weight non-terminals; edges by closed intersection
SteinerInstance rect_steiner(const RectInstance& r);

}  // namespace stg
