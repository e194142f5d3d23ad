#include "stg/grid_tiling.hpp"

#include "stg/steiner.hpp"

#include <algorithm>
#include <cstdlib>
#include <sstream>
#include <stdexcept>

namespace stg {

void validate_tiling(const GridTilingInstance& inst) {
    if (inst.x < 1 || inst.y < 1 || inst.N < 1) throw std::invalid_argument("tiling dimensions must be positive");
    if ((int)inst.sets.size() != inst.x) throw std::invalid_argument("tiling has the wrong number of rows");
    for (int i = 0; i < inst.x; i++) {
        if ((int)inst.sets[i].size() != inst.y) throw std::invalid_argument("tiling row " + std::to_string(i) + " has the wrong length");
        for (int j = 0; j < inst.y; j++) {
            auto& s = inst.sets[i][j];
            if (s.empty())
                throw std::invalid_argument("set (" + std::to_string(i) + "," + std::to_string(j) + ") is empty");
            for (auto [a, b] : s)
                if ((a != 0 && a != 1) || b < 1 || b > inst.N)
                    throw std::invalid_argument("set (" + std::to_string(i) + "," + std::to_string(j) +
                                                ") has a value outside {0,1}x[N]");
        }
    }
}

namespace {

bool contains(const std::vector<TileValue>& s, TileValue v) { return std::binary_search(s.begin(), s.end(), v); }

bool row_ok(TilingVariant var, int b, int next_b) { return var == TilingVariant::exact ? b == next_b : b <= next_b; }

void normalise(std::vector<TileValue>& s) {
    std::sort(s.begin(), s.end());
    s.erase(std::unique(s.begin(), s.end()), s.end());
}

}  // namespace

bool is_consistent(const GridTilingInstance& inst, const TilingWitness& w) {
    if ((int)w.size() != inst.x) throw std::invalid_argument("witness has the wrong number of rows");
    for (auto& r : w)
        if ((int)r.size() != inst.y) throw std::invalid_argument("witness row has the wrong length");
    for (int i = 0; i < inst.x; i++)
        for (int j = 0; j < inst.y; j++) {
            if (!contains(inst.sets[i][j], w[i][j])) return false;
            if (i + 1 < inst.x && w[i][j].first != w[i + 1][j].first) return false;
            if (j + 1 < inst.y && !row_ok(inst.variant, w[i][j].second, w[i][j + 1].second)) return false;
        }
    return true;
}

std::optional<TilingWitness> brute_force_tiling(const GridTilingInstance& inst, double cap) {
    validate_tiling(inst);
    double prod = 1;
    for (auto& r : inst.sets)
        for (auto& s : r) prod *= (double)s.size();
    if (prod > cap) throw CapExceeded("tiling brute force refuses a search space of " + std::to_string(prod));
    TilingWitness w(inst.x, std::vector<TileValue>(inst.y));
    // row-major backtracking in set order finds the same first witness as plain product enumeration
    auto rec = [&](auto&& self, int cell) -> bool {
        if (cell == inst.x * inst.y) return true;
        int i = cell / inst.y, j = cell % inst.y;
        for (auto v : inst.sets[i][j]) {
            if (i > 0 && w[i - 1][j].first != v.first) continue;
            if (j > 0 && !row_ok(inst.variant, w[i][j - 1].second, v.second)) continue;
            w[i][j] = v;
            if (self(self, cell + 1)) return true;
        }
        return false;
    };
    if (rec(rec, 0)) return w;
    return std::nullopt;
}

std::optional<TilingWitness> dp_solve(const GridTilingInstance& inst) {
    validate_tiling(inst);
    if (inst.y > 24) throw CapExceeded("dp_solve guesses 2^y column bits; y > 24 refused");
    const int x = inst.x, y = inst.y, N = inst.N;
    TilingWitness w(x, std::vector<TileValue>(y));
    std::vector<std::vector<char>> has(y, std::vector<char>(N + 1));
    for (long bits = 0; bits < (1L << y); bits++) {
        bool ok = true;
        for (int i = 0; i < x && ok; i++) {
            for (int j = 0; j < y; j++) {
                std::fill(has[j].begin(), has[j].end(), 0);
                int a = bits >> j & 1;
                for (auto [va, vb] : inst.sets[i][j])
                    if (va == a) has[j][vb] = 1;
            }
            if (inst.variant == TilingVariant::exact) {
                int pick = 0;
                for (int b = 1; b <= N && !pick; b++) {
                    bool all = true;
                    for (int j = 0; j < y && all; j++) all = has[j][b];
                    if (all) pick = b;
                }
                if (!pick) ok = false;
                for (int j = 0; j < y; j++) w[i][j] = {bits >> j & 1, pick};
            } else {
                // smallest feasible value at each step leaves the most room to the right
                int lo = 1;
                for (int j = 0; j < y && ok; j++) {
                    int b = lo;
                    while (b <= N && !has[j][b]) b++;
                    if (b > N) ok = false;
                    else w[i][j] = {bits >> j & 1, b}, lo = b;
                }
            }
        }
        if (ok) return w;
    }
    return std::nullopt;
}

Cnf parse_dimacs(const std::string& text) {
    Cnf f;
    std::istringstream in(text);
    std::string line;
    std::vector<int> cur;
    bool header = false;
    while (std::getline(in, line)) {
        std::istringstream ls(line);
        std::string tok;
        if (!(ls >> tok)) continue;
        if (tok == "c") continue;
        if (tok == "%") break;
        if (tok == "p") {
            std::string fmt;
            int m = 0;
            if (!(ls >> fmt >> f.n >> m) || fmt != "cnf") throw std::invalid_argument("bad DIMACS header: " + line);
            header = true;
            continue;
        }
        if (!header) throw std::invalid_argument("DIMACS clause before header");
        ls.clear();
        ls.str(line);
        long lit;
        while (ls >> lit) {
            if (lit == 0) {
                f.clauses.push_back(cur);
                cur.clear();
            } else {
                if (std::labs(lit) > f.n) throw std::invalid_argument("literal out of range: " + std::to_string(lit));
                cur.push_back((int)lit);
            }
        }
    }
    if (!cur.empty()) f.clauses.push_back(cur);
    if (!header) throw std::invalid_argument("missing DIMACS header");
    return f;
}

std::string write_dimacs(const Cnf& f) {
    std::ostringstream os;
    os << "p cnf " << f.n << " " << f.clauses.size() << "\n";
    for (auto& c : f.clauses) {
        for (int l : c) os << l << " ";
        os << "0\n";
    }
    return os.str();
}

namespace {

bool satisfies(const std::vector<int>& clause, const std::vector<int>& val) {
    for (int l : clause)
        if ((l > 0) == (val[std::abs(l)] == 1)) return true;
    return false;
}

}  // namespace

std::optional<std::vector<int>> brute_force_sat(const Cnf& f) {
    if (f.n > 24) throw CapExceeded("SAT brute force limited to 24 variables");
    std::vector<int> val(f.n + 1, 0);
    for (long m = 0; m < (1L << f.n); m++) {
        for (int v = 1; v <= f.n; v++) val[v] = m >> (v - 1) & 1;
        bool ok = true;
        for (auto& c : f.clauses) ok = ok && satisfies(c, val);
        if (ok) return val;
    }
    return std::nullopt;
}

SatToNgt sat_to_ngt(const Cnf& f, int g) {
    if (f.n < 1) throw std::invalid_argument("formula needs at least one variable");
    if (g < 1) throw std::invalid_argument("group count must be positive");
    for (auto& c : f.clauses)
        if (c.empty() || c.size() > 3) throw std::invalid_argument("clauses must have one to three literals");
    SatToNgt out;
    auto clauses = f.clauses;
    while (clauses.empty() || clauses.size() % g) {
        clauses.push_back({1, -1});
        out.padding++;
    }
    const int m = (int)clauses.size(), per = m / g;
    if (3 * per > 24) throw CapExceeded("group size gives N = 2^" + std::to_string(3 * per) + ", too large");
    auto& inst = out.inst;
    inst.x = g;
    inst.y = f.n;
    inst.N = 1 << (3 * per);
    inst.variant = TilingVariant::exact;
    inst.sets.assign(g, std::vector<std::vector<TileValue>>(f.n));
    for (int i = 0; i < g; i++) {
        std::vector<int> vars;
        for (int c = i * per; c < (i + 1) * per; c++)
            for (int l : clauses[c]) vars.push_back(std::abs(l));
        std::sort(vars.begin(), vars.end());
        vars.erase(std::unique(vars.begin(), vars.end()), vars.end());
        out.group_vars.push_back(vars);
        std::vector<int> val(f.n + 1, 0);
        for (long wmask = 0; wmask < (1L << vars.size()); wmask++) {
            for (size_t t = 0; t < vars.size(); t++) val[vars[t]] = wmask >> t & 1;
            bool ok = true;
            for (int c = i * per; c < (i + 1) * per && ok; c++) ok = satisfies(clauses[c], val);
            if (!ok) continue;
            int code = (int)wmask + 1;
            for (int j = 0; j < f.n; j++) {
                if (std::binary_search(vars.begin(), vars.end(), j + 1)) {
                    inst.sets[i][j].push_back({val[j + 1], code});
                } else {
                    inst.sets[i][j].push_back({0, code});
                    inst.sets[i][j].push_back({1, code});
                }
            }
        }
        for (auto& s : inst.sets[i]) normalise(s);
        if (inst.sets[i][0].empty()) out.immediate_no = true;
    }
    return out;
}

std::vector<int> assignment_from_tiling(const SatToNgt& red, const TilingWitness& w) {
    std::vector<int> val(red.inst.y + 1, 0);
    for (int j = 0; j < red.inst.y; j++) val[j + 1] = w.at(0).at(j).first;
    return val;
}

int tile_bit(int s, int i) { return (s - 1) >> (i - 1) & 1; }
int tile_complement(int s, int N) { return N + 1 - s; }

std::vector<TileValue> a_set(int i, int N) {
    std::vector<TileValue> s;
    for (int v = 1; v <= N; v++) s.push_back({tile_bit(v, i), v});
    normalise(s);
    return s;
}

std::vector<TileValue> b_set(int i, int N) {
    std::vector<TileValue> s;
    for (int v = 1; v <= N; v++) s.push_back({1 - tile_bit(v, i), v});
    normalise(s);
    return s;
}

namespace {

int log2_exact(int N) {
    int l = 0;
    while ((1 << l) < N) l++;
    if ((1 << l) != N) throw std::invalid_argument("N must be a power of two, got " + std::to_string(N));
    return l;
}

// 1-based column j of the unmirrored construction: which block it is in
struct ColumnRole {
    enum { left, middle, right } kind;
    int block = 0;  // e for L(e)/R(e), source column for M
    int index = 0;  // which A_i / B_i
};

ColumnRole role(int j, int x, int y, int ell) {
    if (j <= x * ell) return {ColumnRole::left, (j - 1) / ell + 1, (j - 1) % ell + 1};
    if (j <= x * ell + y) return {ColumnRole::middle, j - x * ell, 0};
    int r = j - y;
    return {ColumnRole::right, (r - 1) / ell + 1 - x, (r - 1) % ell + 1};
}

}  // namespace

GridTilingInstance ngt_to_mngt(const GridTilingInstance& inst) {
    validate_tiling(inst);
    if (inst.variant != TilingVariant::exact) throw std::invalid_argument("ngt_to_mngt expects an exact instance");
    const int ell = log2_exact(inst.N), N = inst.N, x = inst.x, y = inst.y;
    GridTilingInstance out;
    out.x = 2 * x;
    out.y = y + 2 * x * ell;
    out.N = N;
    out.variant = TilingVariant::monotone;
    out.sets.assign(out.x, std::vector<std::vector<TileValue>>(out.y));
    std::vector<TileValue> full;
    for (int a = 0; a < 2; a++)
        for (int b = 1; b <= N; b++) full.push_back({a, b});
    for (int i = 1; i <= out.x; i++) {
        const int src = (i + 1) / 2;
        const bool odd = i % 2 == 1;
        for (int j = 1; j <= out.y; j++) {
            auto rl = role(j, x, y, ell);
            std::vector<TileValue> s;
            if (rl.kind == ColumnRole::middle) {
                for (auto [a, b] : inst.sets[src - 1][rl.block - 1]) s.push_back({a, odd ? b : tile_complement(b, N)});
                normalise(s);
            } else if (rl.block == src) {
                s = odd ? a_set(rl.index, N) : b_set(rl.index, N);
            } else {
                s = full;
            }
            out.sets[i - 1][out.y - j] = s;  // mirrored
        }
    }
    return out;
}

TilingWitness mngt_witness(const GridTilingInstance& ngt, const TilingWitness& w) {
    if (!is_consistent(ngt, w)) throw std::invalid_argument("witness is not consistent with the exact instance");
    const int ell = log2_exact(ngt.N), N = ngt.N, x = ngt.x, y = ngt.y;
    const int X = 2 * x, Y = y + 2 * x * ell;
    TilingWitness out(X, std::vector<TileValue>(Y));
    for (int i = 1; i <= X; i++) {
        const int src = (i + 1) / 2;
        const int val = w[src - 1][0].second;
        const int b = i % 2 ? val : tile_complement(val, N);
        for (int j = 1; j <= Y; j++) {
            auto rl = role(j, x, y, ell);
            int a = rl.kind == ColumnRole::middle ? w[0][rl.block - 1].first
                                                  : tile_bit(w[rl.block - 1][0].second, rl.index);
            out[i - 1][Y - j] = {a, b};
        }
    }
    return out;
}

TilingWitness ngt_witness_from_mngt(const GridTilingInstance& ngt, const TilingWitness& w2) {
    const int ell = log2_exact(ngt.N), x = ngt.x, y = ngt.y;
    const int Y = y + 2 * x * ell;
    TilingWitness out(x, std::vector<TileValue>(y));
    for (int i = 0; i < x; i++)
        for (int j = 0; j < y; j++) out[i][j] = w2.at(2 * i).at(Y - 1 - (x * ell + j));
    return out;
}

bool check_complement_chain(int ell, const std::vector<ChainLink>& chain) {
    if (ell < 1 || ell > 20) throw std::invalid_argument("chain width out of range");
    if ((int)chain.size() != ell) throw std::invalid_argument("chain must have exactly ell links");
    const int N = 1 << ell;
    for (int i = 1; i <= ell; i++) {
        auto& c = chain[i - 1];
        if (c.x < 0 || c.x > 1 || c.a < 1 || c.a > N || c.b < 1 || c.b > N)
            throw std::invalid_argument("chain link " + std::to_string(i) + " out of range");
        if (c.x != tile_bit(c.a, i)) throw std::invalid_argument("link " + std::to_string(i) + ": (x, a) not in A_i");
        if (c.x != 1 - tile_bit(c.b, i)) throw std::invalid_argument("link " + std::to_string(i) + ": (x, b) not in B_i");
        if (i > 1 && (c.a > chain[i - 2].a || c.b > chain[i - 2].b))
            throw std::invalid_argument("chain is not non-increasing at link " + std::to_string(i));
    }
    return chain[0].a == tile_complement(chain[0].b, N);
}

GridTilingInstance mirror_columns(const GridTilingInstance& inst) {
    auto out = inst;
    for (auto& r : out.sets) std::reverse(r.begin(), r.end());
    return out;
}

TilingWitness mirror_columns(const TilingWitness& w) {
    auto out = w;
    for (auto& r : out) std::reverse(r.begin(), r.end());
    return out;
}

}  // namespace stg
