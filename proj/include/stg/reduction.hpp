#pragma once

#include "stg/planar.hpp"
#include "stg/random_instances.hpp"

#include <stdexcept>
#include <vector>

namespace stg {

struct AssumptionError : std::invalid_argument {
    std::vector<std::string> violations;
    AssumptionError(const std::string& what, std::vector<std::string> v)
        : std::invalid_argument(what), violations(std::move(v)) {}
};

struct IndepResult {
    GeoInstance inst;
    std::vector<int> kept;     // T'
    std::vector<int> dropped;  // T minus T', now ordinary objects
    int designated = -1;       // the member of T' carrying the dropped weight
};

// Greedy maximal independent subset of the terminals by index, with reweighting.
IndepResult make_terminals_independent(const GeoInstance& gi);

struct PackingReport {
    int max_count = 0;
    bool within_proof_bound = false;       // <= 300 alpha^2
    bool within_assumption_bound = false;  // <= 1000 alpha^2
};

// counts objects meeting balls of radius 4 alpha centred at every object reference point
PackingReport packing_report(const std::vector<GeometricObject>& objs, double alpha);

struct PlanarReduction {
    PlanarInstance inst;
    std::vector<char> subdivision;  // final midpoints
    std::vector<char> base_vertex;  // vertices of the intermediate geometric graph
    int base_edges = 0;
};

// Requires the size/fatness assumption and pairwise disjoint terminals.
PlanarReduction geo_to_planar(const GeoInstance& gi, double alpha);

struct LongEntry {
    int x = 0, y = 0;
    std::vector<int> psi;   // object chain found by the node-weighted search
    std::vector<int> path;  // x..y inside the chain's union
};

struct LongReduction {
    PlanarInstance inst;  // original objects first, then long objects
    int original_objects = 0;
    std::vector<LongEntry> catalog;
    bool infeasible = false;  // some terminal pair cannot be joined at all
};

// Adds every subpath of the chosen pair paths as a long object; budget becomes 8|T|.
LongReduction long_reduction(const PlanarInstance& pi, double alpha, int max_vertices = 64, int max_chain = 16);

// Replaces long objects by the original objects covering them.
std::vector<int> expand_long_objects(const LongReduction& lr, const std::vector<int>& chosen);

}  // namespace stg
