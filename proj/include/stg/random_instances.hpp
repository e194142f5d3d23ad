#pragma once

#include "stg/geometry.hpp"
#include "stg/planar.hpp"
#include "stg/steiner.hpp"

#include <random>
#include <vector>

namespace stg {

struct GeoInstance {
    std::vector<GeometricObject> objs;
    long k = -1;
};

// intersection graph of the objects as a node-weighted Steiner instance
SteinerInstance to_steiner(const GeoInstance& gi);

struct GeoGenOptions {
    int objects = 8;
    int terminals = 3;
    double alpha = 8;
    bool disks = true;
    bool squares = true;
    bool polygons = true;
    double disk_rmin = 1, disk_rmax = 1.6;
    double box = 0;           // side of the placement box; 0 picks one from the object count
    int max_weight = 5;       // integer weights in [1, max_weight]
    bool rational_weights = false;
    bool disjoint_terminals = false;
};

// Random instance satisfying the size/fatness assumption for opt.alpha.
GeoInstance random_geo_instance(std::mt19937_64& rng, const GeoGenOptions& opt);

// convex polygon with diameter <= diam containing a unit-diameter disk
GeometricObject random_fat_polygon(std::mt19937_64& rng, Point center, double diam);

// random connected object adjacency instance (not geometric)
SteinerInstance random_graph_instance(std::mt19937_64& rng, int n, int terminals, double p, int max_weight);

// w x h unit grid with random connected fat objects; terminals pairwise disjoint
PlanarInstance random_grid_instance(std::mt19937_64& rng, int w, int h, int objects, int terminals, int max_size,
                                    int max_weight);

// unit grid with small fat objects (diameter <= alpha) and graph balls of radius 4 alpha centred at their
// representatives; the first `terminals` fat objects are terminals
PlanarInstance random_grid_disk_instance(std::mt19937_64& rng, int w, int h, int fat, int disks, int terminals,
                                         double alpha, int max_weight);

}  // namespace stg
