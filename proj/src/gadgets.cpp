#include "stg/gadgets.hpp"

#include <algorithm>
#include <set>
#include <stdexcept>
#include <unordered_map>

namespace stg {

GadgetParams default_params(int N) {
    GadgetParams p;
    p.N = N;
    validate_params(p);
    return p;
}

void validate_params(const GadgetParams& p) {
    if (p.N < 1) throw std::invalid_argument("gadget parameters: N must be at least 1");
    if (p.omega < 3 || p.omega % 8 != 3) throw std::invalid_argument("gadget parameters: omega must be 3 mod 8");
    if (p.h < 5 || p.h % 2 == 0) throw std::invalid_argument("gadget parameters: h must be odd and at least 5");
}

bool reach_bound_holds(const GadgetParams& p) {
    return p.omega * p.unit() - (p.N - 1) * p.gamma() > (p.omega - 1) * p.unit();
}

const char* kind_name(GadgetKind k) {
    switch (k) {
        case GadgetKind::block: return "block";
        case GadgetKind::wire: return "wire";
        case GadgetKind::crossing: return "crossing";
        case GadgetKind::top: return "top";
        case GadgetKind::bottom: return "bottom";
        case GadgetKind::stem: return "stem";
        case GadgetKind::single: return "single";
    }
    return "?";
}

const std::vector<int>& Gadget::part(const std::string& name) const {
    auto it = parts.find(name);
    if (it == parts.end()) throw std::out_of_range("gadget " + tag + " has no part " + name);
    return it->second;
}

static long floor_div(long a, long b) { return a >= 0 ? a / b : -((-a + b - 1) / b); }

AdjList touching_graph(const std::vector<UnitSquare>& sq, long unit) {
    std::map<std::pair<long, long>, std::vector<int>> cells;
    for (int i = 0; i < (int)sq.size(); i++) cells[{floor_div(sq[i].x, unit), floor_div(sq[i].y, unit)}].push_back(i);
    AdjList adj(sq.size());
    for (int i = 0; i < (int)sq.size(); i++) {
        long cx = floor_div(sq[i].x, unit), cy = floor_div(sq[i].y, unit);
        for (long ax = cx - 1; ax <= cx + 1; ax++)
            for (long ay = cy - 1; ay <= cy + 1; ay++) {
                auto it = cells.find({ax, ay});
                if (it == cells.end()) continue;
                for (int j : it->second)
                    if (j != i && touches(sq[i], sq[j], unit)) adj[i].push_back(j);
            }
        std::sort(adj[i].begin(), adj[i].end());
    }
    return adj;
}

namespace {

struct Builder {
    GadgetBuild out;
    int add(long x, long y, const std::string& part, bool terminal = false) {
        int id = (int)out.squares.size();
        out.squares.push_back({x, y, terminal, -1, out.g.tag.empty() ? part : out.g.tag + "/" + part});
        out.g.members.push_back(id);
        if (!part.empty()) out.g.parts[part].push_back(id);
        return id;
    }
};

void check_set(const GadgetParams& p, const std::vector<TileValue>& S) {
    if (S.empty()) throw std::invalid_argument("block: empty index set");
    for (auto [a, b] : S)
        if ((a != 0 && a != 1) || b < 1 || b > p.N) throw std::invalid_argument("block: value out of range");
}

// appends Block(N, S) at the offset as part `name`, returns sigma
std::map<TileValue, int> add_block(Builder& bl, const GadgetParams& p, const std::vector<TileValue>& S, long ox, long oy,
                                   const std::string& name) {
    check_set(p, S);
    std::map<TileValue, int> sigma;
    for (auto v : S) {
        if (sigma.count(v)) continue;
        sigma[v] = bl.add(p.gamma() * (v.second - 1) + ox, v.first * p.delta() + oy, name);
    }
    return sigma;
}

std::vector<int> merged(std::initializer_list<const std::vector<int>*> xs) {
    std::vector<int> r;
    for (auto* v : xs) r.insert(r.end(), v->begin(), v->end());
    std::sort(r.begin(), r.end());
    return r;
}

}  // namespace

GadgetBuild block(const GadgetParams& p, const std::vector<TileValue>& S, long ox, long oy) {
    Builder bl;
    bl.out.g.kind = GadgetKind::block;
    bl.out.g.S = S;
    bl.out.g.sigma.push_back(add_block(bl, p, S, ox, oy, "B"));
    return bl.out;
}

GadgetBuild wire_gadget(const GadgetParams& p, const std::vector<TileValue>& S, long ox, long oy) {
    validate_params(p);
    Builder bl;
    auto& g = bl.out.g;
    g.kind = GadgetKind::wire;
    g.S = S;
    std::vector<TileValue> full, flipped;
    for (int b = 1; b <= p.N; b++) full.push_back({0, b});
    for (auto [a, b] : S) flipped.push_back({1 - a, b});
    g.sigma.push_back(add_block(bl, p, S, ox, oy, "B1"));
    for (int i = 2; i <= p.omega - 1; i++)
        g.sigma.push_back(add_block(bl, p, full, ox + (i - 1) * p.unit(), oy + p.delta() / 2, "B" + std::to_string(i)));
    g.sigma.push_back(add_block(bl, p, flipped, ox + (p.omega - 1) * p.unit(), oy, "B" + std::to_string(p.omega)));
    g.interfaces = merged({&g.part("B1"), &g.part("B" + std::to_string(p.omega))});
    return bl.out;
}

std::vector<int> wire_chain(const Gadget& wire, TileValue v) {
    if (wire.kind != GadgetKind::wire) throw std::invalid_argument("wire_chain: not a wire gadget");
    int w = (int)wire.sigma.size();
    auto pick = [&](int blk, TileValue key) {
        auto it = wire.sigma[blk].find(key);
        if (it == wire.sigma[blk].end()) throw std::invalid_argument("wire_chain: value not in the wire's set");
        return it->second;
    };
    std::vector<int> chain;
    chain.push_back(pick(0, v));
    for (int blk = 1; blk < w - 1; blk++) chain.push_back(pick(blk, {0, v.second}));
    chain.push_back(pick(w - 1, {1 - v.first, v.second}));
    return chain;
}

static std::vector<int> beta(int i, int h, bool up) {
    int half = (h - 3) / 2, shift = up ? (h - 1) / 2 : 0;
    std::vector<int> r;
    switch (i % 4) {
        case 1: r = {up ? h - 2 : 1}; break;
        case 3: r = {up ? (h + 1) / 2 : half}; break;
        default:
            for (int t = 1; t <= half; t++) r.push_back(t + shift);
    }
    return r;
}

GadgetBuild crossing_gadget(const GadgetParams& p, long ox, long oy) {
    validate_params(p);
    Builder bl;
    auto& g = bl.out.g;
    g.kind = GadgetKind::crossing;
    long D = p.unit(), hg = p.gamma() / 2, d = p.delta();
    int w = p.omega, h = p.h;
    long left = hg, right = (w - 1) * D - hg;
    for (int i = 1; i <= (h - 3) / 2; i++) bl.add(ox + left, oy + i * D, "Omega1");
    for (int i = (h + 1) / 2; i <= h - 2; i++) bl.add(ox + left, oy + i * D, "Omega2");
    for (int i = 1; i <= (h - 3) / 2; i++) bl.add(ox + right, oy + i * D, "Omega3");
    for (int i = (h + 1) / 2; i <= h - 2; i++) bl.add(ox + right, oy + i * D, "Omega4");
    for (int i = 1; i <= w - 2; i++) {
        if (i == (w - 1) / 2) continue;
        bool west = i <= (w - 3) / 2;
        for (int j : beta(i, h, false)) bl.add(ox + i * D, oy + j * D + d, west ? "Omega5" : "Omega6");
        for (int j : beta(i, h, true)) bl.add(ox + i * D, oy + j * D - d, west ? "Omega7" : "Omega8");
    }
    long mid = (w - 1) / 2 * D;
    bl.add(ox + mid, oy + (h - 2) * D - d, "T_N", true);
    bl.add(ox + mid, oy + D + d, "T_S", true);
    bl.add(ox + left, oy + (h - 1) / 2 * D, "T_W", true);
    bl.add(ox + right, oy + (h - 1) / 2 * D, "T_E", true);
    bl.add(ox + left, oy, "u_SW");
    bl.add(ox + right, oy, "u_SE");
    bl.add(ox + left, oy + (h - 1) * D, "u_NW");
    bl.add(ox + right, oy + (h - 1) * D, "u_NE");
    g.interfaces = merged({&g.part("u_SW"), &g.part("u_SE"), &g.part("u_NW"), &g.part("u_NE")});
    g.parts["Delta1"] = merged({&g.part("Omega1"), &g.part("Omega5"), &g.part("Omega4"), &g.part("Omega8"),
                                &g.part("u_SW"), &g.part("u_NE")});
    g.parts["Delta2"] = merged({&g.part("Omega2"), &g.part("Omega7"), &g.part("Omega3"), &g.part("Omega6"),
                                &g.part("u_NW"), &g.part("u_SE")});
    g.parts["terminals"] = merged({&g.part("T_N"), &g.part("T_S"), &g.part("T_W"), &g.part("T_E")});
    return bl.out;
}

static GadgetBuild border_gadget(const GadgetParams& p, long ox, long oy, bool top) {
    validate_params(p);
    Builder bl;
    auto& g = bl.out.g;
    g.kind = top ? GadgetKind::top : GadgetKind::bottom;
    long D = p.unit(), hg = p.gamma() / 2;
    int w = p.omega;
    long row = top ? D : 0, iface = top ? 0 : D;
    for (int i = 1; i <= (w - 3) / 2; i++) bl.add(ox + i * D, oy + row, "U1");
    for (int i = (w + 1) / 2; i <= w - 2; i++) bl.add(ox + i * D, oy + row, "U2");
    bl.add(ox + hg, oy + iface, "u");
    bl.add(ox + (w - 1) * D - hg, oy + iface, "v");
    bl.add(ox + (w - 1) / 2 * D, oy + row, "x", true);
    g.interfaces = merged({&g.part("u"), &g.part("v")});
    g.parts["kappa1"] = merged({&g.part("U1"), &g.part("u")});
    g.parts["kappa2"] = merged({&g.part("U2"), &g.part("v")});
    return bl.out;
}

GadgetBuild top_gadget(const GadgetParams& p, long ox, long oy) { return border_gadget(p, ox, oy, true); }
GadgetBuild bottom_gadget(const GadgetParams& p, long ox, long oy) { return border_gadget(p, ox, oy, false); }

GadgetBuild stem_gadget(const GadgetParams& p, int rows, long ox, long oy) {
    if (rows < 1) throw std::invalid_argument("stem_gadget: needs at least one row");
    Builder bl;
    bl.out.g.kind = GadgetKind::stem;
    long D = p.unit();
    for (long i = 0; i <= (long)(rows - 1) * (p.h + 1); i++) bl.add(ox, oy + i * D, "column", true);
    for (int i = 1; i <= rows; i++) bl.add(ox + D, oy + (i - 1) * ((p.h + 1) * D + p.delta()), "side", true);
    return bl.out;
}

std::vector<int> SquareSteinerInstance::terminals() const {
    std::vector<int> t;
    for (int i = 0; i < (int)squares.size(); i++)
        if (squares[i].terminal) t.push_back(i);
    return t;
}

static int append(SquareSteinerInstance& inst, GadgetBuild&& b, const std::string& tag, int i, int j) {
    int base = (int)inst.squares.size(), gid = (int)inst.gadgets.size();
    Gadget g = std::move(b.g);
    g.tag = tag;
    g.i = i, g.j = j;
    auto shift = [&](std::vector<int>& v) {
        for (int& s : v) s += base;
    };
    shift(g.members);
    shift(g.interfaces);
    for (auto& [name, v] : g.parts) shift(v);
    for (auto& m : g.sigma)
        for (auto& [key, s] : m) s += base;
    for (auto& s : b.squares) {
        s.gadget = gid;
        s.tag = tag + "/" + s.tag;
        inst.squares.push_back(std::move(s));
    }
    inst.gadgets.push_back(std::move(g));
    return gid;
}

SquareSteinerInstance build_instance(const GridTilingInstance& mngt) { return build_instance(mngt, default_params(mngt.N)); }

SquareSteinerInstance build_instance(const GridTilingInstance& mngt, const GadgetParams& pin) {
    validate_tiling(mngt);
    if (mngt.variant != TilingVariant::monotone) throw std::invalid_argument("build_instance: needs a monotone instance");
    if (mngt.x % 2 || mngt.y % 2) throw std::invalid_argument("build_instance: x and y must be even");
    GadgetParams p = pin;
    p.N = mngt.N;
    validate_params(p);
    SquareSteinerInstance inst;
    inst.p = p;
    inst.x = mngt.x, inst.y = mngt.y;
    inst.source = mngt;
    const long D = p.unit(), d = p.delta(), g = p.gamma(), W = p.omega * D, P = (p.h + 1) * D + d;
    const int x = mngt.x, y = mngt.y;

    inst.stem = append(inst, stem_gadget(p, x, g * (p.N - 1), 2 * D + d / 2), "M", 0, 0);
    inst.wire.assign(x, std::vector<int>(y, -1));
    for (int i = 1; i <= x; i++)
        for (int j = 1; j <= y; j++)
            inst.wire[i - 1][j - 1] = append(inst, wire_gadget(p, mngt.sets[i - 1][y - j], 2 * D + (j - 1) * W, 2 * D + (i - 1) * P),
                                             "W" + std::to_string(i) + "," + std::to_string(j), i, j);
    inst.cross.assign(x - 1, std::vector<int>(y, -1));
    for (int i = 1; i <= x - 1; i++)
        for (int j = 1; j <= y; j++)
            inst.cross[i - 1][j - 1] = append(inst, crossing_gadget(p, 2 * D + (j - 1) * W, 3 * D + d + (i - 1) * P),
                                              "C" + std::to_string(i) + "," + std::to_string(j), i, j);
    for (int j = 1; j <= y; j++)
        inst.bottom.push_back(append(inst, bottom_gadget(p, 2 * D + (j - 1) * W, 0), "D" + std::to_string(j), 0, j));
    for (int j = 1; j <= y; j++)
        inst.top.push_back(append(inst, top_gadget(p, 2 * D + (j - 1) * W, 3 * D + d + (x - 1) * P), "T" + std::to_string(j), x, j));
    for (int i = 1; i <= x; i++) {
        GadgetBuild r;
        r.g.kind = GadgetKind::single;
        r.squares.push_back({2 * D + y * W, 2 * D + d / 2 + (i - 1) * P, true, -1, "square"});
        r.g.members = {0};
        inst.rterm.push_back(append(inst, std::move(r), "R" + std::to_string(i), i, 0));
    }

    long n_wire = (long)x * y, n_cross = (long)(x - 1) * y, n_border = 2L * y;
    inst.k = p.omega * n_wire + (long)(p.omega + 1) / 4 * (p.h - 1) * n_cross + (long)(p.omega - 1) / 2 * n_border;
    return inst;
}

SteinerInstance to_steiner(const SquareSteinerInstance& inst) {
    std::vector<char> term(inst.squares.size());
    for (size_t i = 0; i < inst.squares.size(); i++) term[i] = inst.squares[i].terminal;
    return make_instance(touching_graph(inst.squares, inst.p.unit()), std::vector<Weight>(inst.squares.size(), 1), term,
                         inst.k);
}

Solution witness_from_tiling(const SquareSteinerInstance& inst, const TilingWitness& w) {
    if (!is_consistent(inst.source, w)) throw std::invalid_argument("witness_from_tiling: witness is not consistent");
    const int x = inst.x, y = inst.y;
    std::vector<int> S;
    auto take = [&](const std::vector<int>& v) { S.insert(S.end(), v.begin(), v.end()); };
    auto bit = [&](int i, int j) { return w[i - 1][y - j].first; };  // W_{i,j} reads monotone column y-j
    for (int i = 1; i <= x; i++)
        for (int j = 1; j <= y; j++) take(wire_chain(inst.gadgets[inst.wire[i - 1][j - 1]], w[i - 1][y - j]));
    for (int i = 1; i <= x - 1; i++)
        for (int j = 1; j <= y; j++) take(inst.gadgets[inst.cross[i - 1][j - 1]].part(bit(i, j) ? "Delta1" : "Delta2"));
    for (int j = 1; j <= y; j++) {
        take(inst.gadgets[inst.bottom[j - 1]].part(bit(1, j) ? "kappa2" : "kappa1"));
        take(inst.gadgets[inst.top[j - 1]].part(bit(x, j) ? "kappa1" : "kappa2"));
    }
    std::sort(S.begin(), S.end());
    S.erase(std::unique(S.begin(), S.end()), S.end());
    Solution sol;
    sol.chosen = S;
    sol.weight = (long)S.size();
    sol.feasible = is_feasible(to_steiner(inst), S);
    return sol;
}

TilingWitness extract_tiling(const SquareSteinerInstance& inst, const std::vector<int>& chosen) {
    std::vector<char> in(inst.squares.size(), 0);
    for (int s : chosen) {
        if (s < 0 || s >= (int)inst.squares.size()) throw std::invalid_argument("extract_tiling: square index out of range");
        in[s] = 1;
    }
    TilingWitness w(inst.x, std::vector<TileValue>(inst.y));
    for (int i = 1; i <= inst.x; i++)
        for (int j = 1; j <= inst.y; j++) {
            const Gadget& g = inst.gadgets[inst.wire[i - 1][j - 1]];
            TileValue first{};
            for (int blk = 0; blk < (int)g.sigma.size(); blk++) {
                int cnt = 0;
                for (auto& [key, s] : g.sigma[blk])
                    if (in[s]) cnt++, first = blk == 0 ? key : first;
                if (cnt != 1)
                    throw std::invalid_argument("extract_tiling: " + g.tag + " block B" + std::to_string(blk + 1) +
                                                " holds " + std::to_string(cnt) + " chosen squares");
            }
            w[i - 1][inst.y - j] = first;
        }
    return w;
}

std::vector<std::string> well_separation_violations(const std::vector<UnitSquare>& sq, const std::vector<Gadget>& gs,
                                                    long unit) {
    auto adj = touching_graph(sq, unit);
    std::vector<std::string> bad;
    for (int gid = 0; gid < (int)gs.size(); gid++) {
        const Gadget& g = gs[gid];
        if (g.kind == GadgetKind::stem || g.kind == GadgetKind::single) continue;
        std::set<int> mem(g.members.begin(), g.members.end()), ifc(g.interfaces.begin(), g.interfaces.end());
        for (int s : g.members) {
            if (ifc.count(s)) continue;
            for (int t : adj[s])
                if (!mem.count(t)) bad.push_back(g.tag + ": interior square " + sq[s].tag + " touches " + sq[t].tag);
        }
    }
    return bad;
}

std::vector<std::string> well_separation_violations(const SquareSteinerInstance& inst) {
    return well_separation_violations(inst.squares, inst.gadgets, inst.p.unit());
}

std::vector<std::vector<int>> touching_components(const std::vector<UnitSquare>& sq, long unit,
                                                  const std::vector<int>& subset) {
    std::vector<UnitSquare> local;
    for (int s : subset) local.push_back(sq[s]);
    auto adj = touching_graph(local, unit);
    std::vector<int> comp(local.size(), -1);
    std::vector<std::vector<int>> out;
    for (int s = 0; s < (int)local.size(); s++) {
        if (comp[s] >= 0) continue;
        std::vector<int> stack{s}, members;
        comp[s] = (int)out.size();
        while (!stack.empty()) {
            int u = stack.back();
            stack.pop_back();
            members.push_back(subset[u]);
            for (int v : adj[u])
                if (comp[v] < 0) comp[v] = comp[s], stack.push_back(v);
        }
        std::sort(members.begin(), members.end());
        out.push_back(members);
    }
    return out;
}

static long rooted_min(const GadgetBuild& g, long unit, const std::vector<std::vector<int>>& groups) {
    int n = (int)g.squares.size(), r = (int)groups.size();
    auto adj = touching_graph(g.squares, unit);
    adj.resize(n + r);
    std::vector<char> term(n + r, 0);
    for (int i = 0; i < n; i++) term[i] = g.squares[i].terminal;
    for (int q = 0; q < r; q++) {
        term[n + q] = 1;
        for (int s : groups[q]) adj[n + q].push_back(s), adj[s].push_back(n + q);
    }
    for (auto& l : adj) std::sort(l.begin(), l.end());
    auto sol = exact_optimum(make_instance(adj, std::vector<Weight>(n + r, 1), term));
    if (!sol.feasible) return -1;
    return sol.weight.get_num().get_si();
}

long gadget_min_connector(const GadgetBuild& g, long unit, const std::vector<int>& allowed_interfaces) {
    return rooted_min(g, unit, {allowed_interfaces});
}

long gadget_min_connector_split(const GadgetBuild& g, long unit, const std::vector<int>& group_a,
                                const std::vector<int>& group_b) {
    return rooted_min(g, unit, {group_a, group_b});
}

}  // namespace stg
