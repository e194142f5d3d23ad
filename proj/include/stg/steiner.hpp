#pragma once

#include "stg/graph.hpp"
#include "stg/weight.hpp"

#include <stdexcept>
#include <string>
#include <vector>

namespace stg {

struct CapExceeded : std::runtime_error {
    using std::runtime_error::runtime_error;
};

// Node-weighted Steiner instance over an object adjacency graph.
// Extended instances add a forest on the terminal subset xset.
struct SteinerInstance {
    int n = 0;
    AdjList adj;  // sorted neighbour lists
    std::vector<Weight> weight;
    std::vector<char> terminal;
    long k = -1;  // -1: no cardinality budget
    std::vector<std::pair<int, int>> forest;
    std::vector<int> xset;

    std::vector<int> terminals() const;
    std::vector<int> nonterminals() const;
};

struct Solution {
    bool feasible = false;
    std::vector<int> chosen;  // sorted non-terminal indices
    Weight weight = 0;
};

SteinerInstance make_instance(AdjList adj, std::vector<Weight> w, std::vector<char> term, long k = -1);

// terminals plus chosen, together with forest edges, form one component containing all terminals
bool connects_terminals(const SteinerInstance& inst, const std::vector<int>& chosen);
bool is_feasible(const SteinerInstance& inst, const std::vector<int>& chosen);
Weight solution_weight(const SteinerInstance& inst, const std::vector<int>& chosen);
// feasible and no chosen object can be dropped
bool is_minimal(const SteinerInstance& inst, const std::vector<int>& chosen);

Solution brute_force_optimum(const SteinerInstance& inst, int cap = 20);
Solution dreyfus_wagner(const SteinerInstance& inst, int max_terminals = 20);
Solution branch_and_bound_optimum(const SteinerInstance& inst);
// picks an exact engine by terminal count
Solution exact_optimum(const SteinerInstance& inst);

// every feasible chosen set, as sorted index vectors (cap on non-terminals)
std::vector<std::vector<int>> all_feasible_sets(const SteinerInstance& inst, int cap = 16);
std::vector<std::vector<int>> all_minimal_solutions(const SteinerInstance& inst, int cap = 16);

// The candidate must weigh no more than any feasible solution accepted by `admissible`.
template <class Pred>
bool weakly_optimal_check(const SteinerInstance& inst, const Solution& cand, Pred admissible, int cap = 20) {
    if (inst.n > cap) throw CapExceeded("weak optimality oracle limited to " + std::to_string(cap) + " objects");
    for (auto& s : all_feasible_sets(inst, cap))
        if (admissible(s) && solution_weight(inst, s) < cand.weight) return false;
    return true;
}

}  // namespace stg
