#pragma once

#include "stg/planar.hpp"
#include "stg/representation.hpp"

#include <functional>
#include <vector>

namespace stg {

// (Q, Gamma, A, B): Q indexes an object family; Gamma, A, B are sorted vertex sets.
struct GuardedSeparation {
    std::vector<int> Q;
    std::vector<int> Gamma, A, B;
};

struct GuardedReport {
    bool partition = false;  // (Gamma, A, B) partitions V and no edge joins A and B
    bool a = false, b = false, c = false;
    bool ok() const { return partition && a && b && c; }
};

// F and F0 index `objs`; F must be pairwise disjoint.
GuardedReport verify_guarded(const GuardedSeparation& sep, const std::vector<std::vector<int>>& objs,
                             const std::vector<int>& F, const std::vector<int>& F0, const Graph& g);

// components of g - Gamma ordered by smallest vertex; t single-vs-rest splits then t-1 prefix splits
std::vector<GuardedSeparation> expand_components_to_bipartitions(const std::vector<int>& Q,
                                                                 const std::vector<int>& Gamma, const Graph& g);

struct PendantAugmentation {
    Graph g;                              // original vertices keep their ids
    std::vector<std::vector<int>> objs;   // originals, then copies
    std::vector<int> origin;              // per object: source object index
    long copies = 0;                      // 4kd
    long theta = 0;
    long kstar = 0;
};

// 4k pendants per vertex and 4k singleton copies per object at its smallest vertex
PendantAugmentation pendant_augmentation(const Graph& g, const std::vector<std::vector<int>>& D, long k, long kprime,
                                         double lambda);

// Every (Q, Gamma, A, B) with |Q| <= budget, |Gamma| <= gamma_cap and (A, B) a split of the components of
// g - Gamma. The callback returns false to stop. Throws CapExceeded on graphs or families above 20.
void exhaustive_separation_enum(const Graph& g, const std::vector<std::vector<int>>& D, int budget, int gamma_cap,
                                const std::function<bool(const GuardedSeparation&)>& emit);

struct BalancedTriple {
    std::vector<int> T1, T2, Q;  // object indices, sorted
};

// T is irredundant when each terminal owns a vertex no other terminal covers
bool terminals_irredundant(const PlanarInstance& pi);

// Triples from separations of a representation's pieces (sep.Q indexes rep.W).
// Throws std::invalid_argument when the terminal set is redundant.
std::vector<BalancedTriple> list_triples(const PlanarInstance& pi, const Representation& rep, double alpha,
                                         const std::vector<GuardedSeparation>& seps);

// Enumerates separations of rep.W exhaustively, keeps those passing verify_guarded with F0 the
// representative singletons, and turns them into triples.
std::vector<BalancedTriple> triples_from_exhaustive_separations(const PlanarInstance& pi, const Representation& rep,
                                                                double alpha, int budget, int gamma_cap);

// Searches bipartitions of (S∪T)∖Q; chosen is S.
bool verify_balanced_triple(const BalancedTriple& tr, const SteinerInstance& inst, const std::vector<int>& chosen,
                            const Weight& beta);

}  // namespace stg
