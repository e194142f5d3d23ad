#pragma once

#include "stg/graph.hpp"
#include "stg/steiner.hpp"

#include <string>
#include <vector>

namespace stg {

enum class ObjClass { fat, disk, longobj };

// Objects as connected vertex sets of an edge-weighted graph, with a representative vertex each.
struct PlanarInstance {
    Graph g;
    std::vector<GraphObject> objs;
    std::vector<ObjClass> cls;
    std::vector<int> tau;
    double r = 0;  // common disk radius
    long k = -1;
    std::vector<int> xset;
    std::vector<std::pair<int, int>> forest;
    // for long objects: indices of the objects of the source instance they stand for
    std::vector<std::vector<int>> cover;
};

SteinerInstance to_steiner(const PlanarInstance& pi);

struct AssumptionReport {
    bool ok = true;
    std::vector<std::string> violations;
    void fail(std::string why) {
        ok = false;
        violations.push_back(std::move(why));
    }
};

// S∪T where S is the candidate's chosen set
std::vector<int> solution_objects(const PlanarInstance& pi, const std::vector<int>& chosen);

// graph diameter of a vertex set, measured in the whole graph
double graph_diameter(const Graph& g, const std::vector<int>& verts);

AssumptionReport validate_assumption_P(const PlanarInstance& pi, const std::vector<int>& chosen, double alpha);
AssumptionReport validate_assumption_PL(const PlanarInstance& pi, const std::vector<int>& chosen, double alpha);

}  // namespace stg
