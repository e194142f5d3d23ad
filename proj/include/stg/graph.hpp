#pragma once

#include "stg/geometry.hpp"
#include "stg/weight.hpp"

#include <cstdint>
#include <utility>
#include <vector>

namespace stg {

// Undirected graph with non-negative edge lengths. Vertices optionally carry a plane position.
struct Graph {
    int n = 0;
    std::vector<std::vector<std::pair<int, double>>> adj;
    std::vector<Point> pos;

    explicit Graph(int n_ = 0) : n(n_), adj(n_), pos(n_) {}
    int add_vertex(Point p = {});
    void add_edge(int u, int v, double len);
    bool has_edge(int u, int v) const;
    size_t edge_count() const;
};

// connected vertex subset of a host graph
struct GraphObject {
    std::vector<int> verts;  // sorted, unique
    Weight weight = 1;
    bool terminal = false;
};

using AdjList = std::vector<std::vector<int>>;

bool touch(const GraphObject& a, const GraphObject& b, const Graph& g);
AdjList touching_graph(const std::vector<GraphObject>& objs, const Graph& g);

// multi-source shortest distances; vertices with allowed[v]==0 are never entered
std::vector<double> dijkstra(const Graph& g, const std::vector<int>& sources,
                             const std::vector<char>* allowed = nullptr);
// closed ball B(v, r), sorted
std::vector<int> dijkstra_ball(const Graph& g, int v, double r);
std::vector<std::vector<double>> all_pairs(const Graph& g);
// shortest path inside the allowed set; empty when unreachable
std::vector<int> shortest_path(const Graph& g, int s, int t, const std::vector<char>& allowed);

bool induced_connected(const Graph& g, const std::vector<int>& verts);

Graph perturb_lengths(const Graph& g, uint64_t seed);
bool distances_unique(const Graph& g);

bool is_critically_connected(const AdjList& g, const std::vector<int>& Y);

struct Deg3Report {
    int count = 0;
    int bound = 0;
    bool holds = false;
};
Deg3Report check_deg3_bound(const AdjList& g, const std::vector<int>& T);

// number of connected components of g restricted to the vertices with keep[v]
std::vector<int> component_labels(const AdjList& g, const std::vector<char>& keep);

}  // namespace stg
