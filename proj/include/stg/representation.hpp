#pragma once

#include "stg/planar.hpp"

#include <array>
#include <string>
#include <utility>
#include <vector>

namespace stg {

// The object itself followed by one shortest path of G[O] per vertex pair, deduplicated by vertex set.
std::vector<std::vector<int>> build_obj_prime(const PlanarInstance& pi, int obj);

struct ObjectSpanningTree {
    std::vector<int> verts;  // in insertion order, root first
    std::vector<std::pair<int, int>> edges;
    std::vector<char> important_edge;
    std::vector<int> important_verts;  // sorted
};

// edges per object used by the traversal below: at most one tau edge and one witness edge each
constexpr int kSpanningTreeEdgeFactor = 2;

// Depth-first construction over the objects D (indices into pi.objs); root < 0 picks the smallest vertex.
// Throws std::invalid_argument when D is not connected.
ObjectSpanningTree spanning_tree_of_objects(const PlanarInstance& pi, const std::vector<int>& D, int root = -1);

struct RepPiece {
    std::vector<int> path;  // vertices in path order
    int owner = -1;         // index into pi.objs
};

struct Representation {
    std::vector<RepPiece> W;
    std::vector<int> solution;  // S∪T, sorted
};

// |W| <= kRepresentationFactor * |S∪T| held on every instance we generated
constexpr int kRepresentationFactor = 12;

// chosen: the non-terminal part S; terminals are added automatically.
// Throws AssumptionError when S∪T violates the long-object assumption.
Representation construct_representation(const PlanarInstance& pi, const std::vector<int>& chosen, double alpha);

struct RepresentationReport {
    std::array<bool, 8> property{};
    std::vector<std::string> notes;
    bool ok() const {
        for (bool b : property)
            if (!b) return false;
        return true;
    }
};

RepresentationReport verify_representation(const Representation& rep, const PlanarInstance& pi, double alpha);

}  // namespace stg
