#pragma once

#include <optional>
#include <string>
#include <utility>
#include <vector>

namespace stg {

enum class TilingVariant { exact, monotone };

// (a, b) with a in {0,1} and b in [1, N]
using TileValue = std::pair<int, int>;

// Cells are indexed 0-based: sets[i][j], i < x (rows), j < y (columns).
// The first coordinate must agree down every column; the second must agree along a row (exact)
// or be non-decreasing left to right (monotone).
struct GridTilingInstance {
    int x = 0, y = 0, N = 0;
    TilingVariant variant = TilingVariant::exact;
    std::vector<std::vector<std::vector<TileValue>>> sets;  // each sorted, unique

    const std::vector<TileValue>& at(int i, int j) const { return sets[i][j]; }
};

using TilingWitness = std::vector<std::vector<TileValue>>;

// throws std::invalid_argument on shape errors, empty sets or out-of-range values
void validate_tiling(const GridTilingInstance& inst);

// throws std::invalid_argument when the witness does not cover every cell
bool is_consistent(const GridTilingInstance& inst, const TilingWitness& w);

// lexicographically first consistent witness in row-major cell order; throws CapExceeded when the product of
// set sizes is above cap
std::optional<TilingWitness> brute_force_tiling(const GridTilingInstance& inst, double cap = 1e7);

// guesses the column bits; throws CapExceeded for y > 24
std::optional<TilingWitness> dp_solve(const GridTilingInstance& inst);

struct Cnf {
    int n = 0;                               // variables 1..n
    std::vector<std::vector<int>> clauses;  // DIMACS literals
};

Cnf parse_dimacs(const std::string& text);
std::string write_dimacs(const Cnf& f);
// assignment[v] for v in 1..n (index 0 unused)
std::optional<std::vector<int>> brute_force_sat(const Cnf& f);

struct SatToNgt {
    GridTilingInstance inst;
    bool immediate_no = false;  // some clause group has no satisfying assignment
    int padding = 0;            // tautologies appended so that g divides m
    std::vector<std::vector<int>> group_vars;  // V_i, sorted
};

// groups of consecutive clauses; N = 2^(3m/g)
SatToNgt sat_to_ngt(const Cnf& f, int g);
std::vector<int> assignment_from_tiling(const SatToNgt& red, const TilingWitness& w);

// 1-based values with ell = log2 N bits: bit i of s is bit i-1 of s-1, and the complement is N+1-s
int tile_bit(int s, int i);
int tile_complement(int s, int N);
std::vector<TileValue> a_set(int i, int N);
std::vector<TileValue> b_set(int i, int N);

// Exact to monotone. Built left to right with non-increasing second coordinates, then columns are mirrored
// so the output obeys the non-decreasing rule. Throws std::invalid_argument unless N is a power of two.
GridTilingInstance ngt_to_mngt(const GridTilingInstance& inst);
// forward map of a consistent exact witness
TilingWitness mngt_witness(const GridTilingInstance& ngt, const TilingWitness& w);
// back map: the odd rows of the middle block
TilingWitness ngt_witness_from_mngt(const GridTilingInstance& ngt, const TilingWitness& w2);

struct ChainLink {
    int x = 0, a = 1, b = 1;
};
// Chains of length ell with (x_i, a_i) in A_i, (x_i, b_i) in B_i and both sequences non-increasing.
// Returns whether a_1 is the complement of b_1; throws std::invalid_argument on a malformed chain.
bool check_complement_chain(int ell, const std::vector<ChainLink>& chain);

GridTilingInstance mirror_columns(const GridTilingInstance& inst);
TilingWitness mirror_columns(const TilingWitness& w);

}  // namespace stg
