#pragma once

#include "stg/grid_tiling.hpp"
#include "stg/steiner.hpp"
#include "stg/weight.hpp"

#include <algorithm>
#include <map>
#include <string>
#include <vector>

namespace stg {

// Coordinates are integers in units of 1/(200N): gamma = 0.1/N becomes 20, delta = 0.01 becomes 2N,
// and a unit side becomes 200N. Every distance the construction uses is then exact.
struct GadgetParams {
    int omega = 11;
    int h = 99;
    int N = 2;

    long unit() const { return 200L * N; }
    long gamma() const { return 20; }
    long delta() const { return 2L * N; }
    Weight gamma_q() const { return Weight(1, 10 * N); }
    Weight delta_q() const { return Weight(1, 100); }
};

GadgetParams default_params(int N);
// omega = 3 mod 8, h odd with h >= 5, N >= 1
void validate_params(const GadgetParams& p);
// omega - (N-1) gamma > omega - 1
bool reach_bound_holds(const GadgetParams& p);

struct UnitSquare {
    long x = 0, y = 0;  // lower-left corner, scaled
    bool terminal = false;
    int gadget = -1;
    std::string tag;
};

// closed squares of the same side: they meet when both offsets are at most one side
inline bool touches(const UnitSquare& a, const UnitSquare& b, long unit) {
    long dx = a.x - b.x, dy = a.y - b.y;
    return dx <= unit && -dx <= unit && dy <= unit && -dy <= unit;
}
AdjList touching_graph(const std::vector<UnitSquare>& sq, long unit);

enum class GadgetKind { block, wire, crossing, top, bottom, stem, single };
const char* kind_name(GadgetKind k);

// Indices in `parts`, `interfaces`, `members` and `sigma` refer to the owning square vector.
struct Gadget {
    GadgetKind kind = GadgetKind::block;
    std::string tag;
    int i = 0, j = 0;  // grid position, 1-based, where it applies
    std::vector<int> members;
    std::vector<int> interfaces;
    std::map<std::string, std::vector<int>> parts;
    std::vector<std::map<TileValue, int>> sigma;  // per block of a wire (one entry for a bare block)
    std::vector<TileValue> S;                     // wire/block index set

    const std::vector<int>& part(const std::string& name) const;
};

struct GadgetBuild {
    Gadget g;
    std::vector<UnitSquare> squares;
};

// squares at (gamma (b-1) + ox, a delta + oy); throws std::invalid_argument on an empty or out-of-range S
GadgetBuild block(const GadgetParams& p, const std::vector<TileValue>& S, long ox = 0, long oy = 0);
GadgetBuild wire_gadget(const GadgetParams& p, const std::vector<TileValue>& S, long ox = 0, long oy = 0);
// the omega-square chain for (a, b) in S
std::vector<int> wire_chain(const Gadget& wire, TileValue v);
GadgetBuild crossing_gadget(const GadgetParams& p, long ox = 0, long oy = 0);
GadgetBuild top_gadget(const GadgetParams& p, long ox = 0, long oy = 0);
GadgetBuild bottom_gadget(const GadgetParams& p, long ox = 0, long oy = 0);
GadgetBuild stem_gadget(const GadgetParams& p, int rows, long ox = 0, long oy = 0);

struct SquareSteinerInstance {
    GadgetParams p;
    int x = 0, y = 0;
    std::vector<UnitSquare> squares;
    std::vector<Gadget> gadgets;
    long k = 0;
    // gadget ids, 0-based grid indices
    std::vector<std::vector<int>> wire, cross;
    std::vector<int> top, bottom, rterm;
    int stem = -1;
    // wire W_{i,j} carries the sets of monotone column y-1-j
    GridTilingInstance source;

    std::vector<int> terminals() const;
};

// Lays out the gadgets for a monotone instance with even x and y. The geometry needs row values that do not
// increase left to right, so columns are reversed on the way in and again on the way out.
SquareSteinerInstance build_instance(const GridTilingInstance& mngt);
SquareSteinerInstance build_instance(const GridTilingInstance& mngt, const GadgetParams& p);

SteinerInstance to_steiner(const SquareSteinerInstance& inst);

// Forward map of a consistent monotone witness: chains, crossing halves by the a-bit, border halves.
// Throws std::invalid_argument on an inconsistent witness.
Solution witness_from_tiling(const SquareSteinerInstance& inst, const TilingWitness& w);
// Reads the first block of each wire. Throws std::invalid_argument naming the offending block unless every
// block of every wire holds exactly one chosen square.
TilingWitness extract_tiling(const SquareSteinerInstance& inst, const std::vector<int>& chosen);

// Deleting a gadget's interfaces must cut its interior from the rest. Stem and single terminals have no
// interfaces and are skipped. Returns the violations found (empty means the layout is well separated).
std::vector<std::string> well_separation_violations(const SquareSteinerInstance& inst);
std::vector<std::string> well_separation_violations(const std::vector<UnitSquare>& sq, const std::vector<Gadget>& gs,
                                                    long unit);

// connected components of the touching graph restricted to `subset`, as sorted index lists
std::vector<std::vector<int>> touching_components(const std::vector<UnitSquare>& sq, long unit,
                                                  const std::vector<int>& subset);

// All subsets H of `candidates` of the least size such that accept(H) holds; sizes above max_size are
// not tried. Throws CapExceeded when there are more than 26 candidates.
template <class Pred>
std::vector<std::vector<int>> smallest_subsets(const std::vector<int>& candidates, int max_size, Pred accept);

// Smallest set of non-terminal squares connecting every terminal of the gadget to one of its interfaces,
// counted without terminals. Uses an exact Steiner solve with a virtual root on the allowed interfaces.
// The split form uses one root per interface group, so the set must also join the two groups.
long gadget_min_connector(const GadgetBuild& g, long unit, const std::vector<int>& allowed_interfaces);
long gadget_min_connector_split(const GadgetBuild& g, long unit, const std::vector<int>& group_a,
                                const std::vector<int>& group_b);

template <class Pred>
std::vector<std::vector<int>> smallest_subsets(const std::vector<int>& candidates, int max_size, Pred accept) {
    int n = (int)candidates.size();
    if (n > 26) throw CapExceeded("subset search limited to 26 candidates");
    std::vector<std::vector<int>> found;
    for (int size = 0; size <= std::min(max_size, n) && found.empty(); size++) {
        std::vector<int> idx(size);
        for (int t = 0; t < size; t++) idx[t] = t;
        while (true) {
            std::vector<int> h(size);
            for (int t = 0; t < size; t++) h[t] = candidates[idx[t]];
            if (accept(h)) found.push_back(h);
            int t = size - 1;
            while (t >= 0 && idx[t] == n - size + t) t--;
            if (t < 0) break;
            idx[t]++;
            for (int u = t + 1; u < size; u++) idx[u] = idx[u - 1] + 1;
        }
    }
    return found;
}

}  // namespace stg
