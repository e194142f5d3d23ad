#pragma once

#include "stg/planar.hpp"
#include "stg/separation.hpp"
#include "stg/steiner.hpp"

#include <functional>
#include <string>
#include <vector>

namespace stg {

// triples for the current subinstance (terminals, X, forest and budget as stored in it)
using TripleSource = std::function<std::vector<BalancedTriple>(const SteinerInstance&)>;

// All Q with |Q| <= q_max and every split of the remaining terminals, one of each mirror pair.
// For q_max >= 1 this always contains a triple whose sides need at most 3/4 of the budget: a weighted
// centroid of a spanning tree of the solution is a one-object separator.
TripleSource exhaustive_triple_source(int q_max = 1);

struct RecursionOptions {
    Weight beta = Weight(3, 4);
    int base_k = 2;  // budgets up to this are solved exactly
    int x_cap = 8;   // distinguished terminals allowed in a subinstance
    bool trace = false;
};

struct RecursionStats {
    long calls = 0, memo_hits = 0, base_cases = 0, triples = 0, pruned = 0;
    int max_depth = 0;
    std::vector<std::string> trace;  // one line per improvement: depth, k, |T|, |X|, triple
};

// A budget of -1 is replaced by the number of non-terminals.
Solution recursion_solve(const SteinerInstance& inst, const TripleSource& source = exhaustive_triple_source(),
                         const RecursionOptions& opt = {}, RecursionStats* stats = nullptr);

// Planar version: covered terminals are dropped at every level before listing triples.
Solution recursion_solve(const PlanarInstance& pi, double alpha, const TripleSource& source = exhaustive_triple_source(),
                         const RecursionOptions& opt = {}, RecursionStats* stats = nullptr);

}  // namespace stg
