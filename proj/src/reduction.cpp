#include "stg/reduction.hpp"

#include <algorithm>
#include <cmath>
#include <limits>
#include <map>
#include <queue>
#include <set>
#include <unordered_map>

namespace stg {

IndepResult make_terminals_independent(const GeoInstance& gi) {
    std::vector<int> T;
    for (size_t i = 0; i < gi.objs.size(); i++)
        if (gi.objs[i].terminal) T.push_back((int)i);
    if (T.empty()) throw std::invalid_argument("no terminals");
    IndepResult res;
    for (int t : T) {
        bool free = true;
        for (int u : res.kept) free = free && !intersects(gi.objs[t], gi.objs[u]);
        if (free) res.kept.push_back(t);
        else res.dropped.push_back(t);
    }
    res.inst = gi;
    res.designated = res.kept.front();
    if (res.dropped.empty()) return res;
    Weight moved = 0;
    for (int o : res.dropped) moved += gi.objs[o].weight;
    for (int o : res.dropped) {
        res.inst.objs[o].terminal = false;
        res.inst.objs[o].weight = Weight(1, 3 * (long)res.dropped.size());
    }
    res.inst.objs[res.designated].weight += moved;
    return res;
}

PackingReport packing_report(const std::vector<GeometricObject>& objs, double alpha) {
    std::vector<Point> centers;
    for (auto& o : objs) {
        if (o.kind == ShapeKind::disk || o.kind == ShapeKind::point || o.kind == ShapeKind::rotated_square)
            centers.push_back(o.p);
        for (auto& p : o.boundary()) centers.push_back(p);
    }
    PackingReport rep;
    for (auto& c : centers) {
        auto ball = GeometricObject::disk(c, 4 * alpha);
        int cnt = 0;
        for (auto& o : objs) cnt += intersects(ball, o);
        rep.max_count = std::max(rep.max_count, cnt);
    }
    rep.within_proof_bound = rep.max_count <= 300 * alpha * alpha;
    rep.within_assumption_bound = rep.max_count <= 1000 * alpha * alpha;
    return rep;
}

namespace {

// merges points closer than kEps
struct PointRegistry {
    std::vector<Point> pts;
    std::unordered_map<long long, std::vector<int>> grid;
    static constexpr double cell = 1e-6;

    static long long key(long long cx, long long cy) { return cx * 1000003LL ^ cy; }

    int add(const Point& p) {
        long long cx = (long long)std::floor(p.x / cell), cy = (long long)std::floor(p.y / cell);
        for (long long dx = -1; dx <= 1; dx++)
            for (long long dy = -1; dy <= 1; dy++) {
                auto it = grid.find(key(cx + dx, cy + dy));
                if (it == grid.end()) continue;
                for (int id : it->second)
                    if (dist(pts[id], p) <= kEps) return id;
            }
        pts.push_back(p);
        grid[key(cx, cy)].push_back((int)pts.size() - 1);
        return (int)pts.size() - 1;
    }
};

}  // namespace

PlanarReduction geo_to_planar(const GeoInstance& gi, double alpha) {
    auto rep = validate_assumption_G(gi.objs, alpha);
    if (!rep.ok) throw AssumptionError("instance violates the size/fatness assumption", rep.violations);
    const auto& objs = gi.objs;
    const int n = (int)objs.size();
    for (int i = 0; i < n; i++)
        for (int j = i + 1; j < n; j++)
            if (objs[i].terminal && objs[j].terminal && intersects(objs[i], objs[j]))
                throw AssumptionError("terminals must be pairwise disjoint",
                                      {"terminals " + std::to_string(i) + " and " + std::to_string(j) + " intersect"});
    bool l1 = false;
    for (auto& o : objs) l1 = l1 || o.kind == ShapeKind::rotated_square;
    auto metric = [&](const Point& a, const Point& b) { return l1 ? dist_l1(a, b) : dist(a, b); };

    // Step 1: base vertices
    PointRegistry R;
    std::vector<std::vector<Point>> poly(n);
    std::vector<std::vector<int>> bid(n);
    std::vector<int> cid(n, -1);
    for (int i = 0; i < n; i++) {
        if (objs[i].kind == ShapeKind::disk) {
            cid[i] = R.add(objs[i].p);
        } else {
            poly[i] = objs[i].boundary();
            for (auto& p : poly[i]) bid[i].push_back(R.add(p));
        }
    }
    for (int i = 0; i < n; i++)
        for (int j = i + 1; j < n; j++) {
            auto pts = boundary_intersections(objs[i], objs[j]);
            if (pts.empty()) continue;
            R.add(*std::min_element(pts.begin(), pts.end(), lex_less));
        }
    const int nvt = (int)R.pts.size();

    std::set<std::pair<int, int>> seen_seg;
    std::vector<std::pair<int, int>> segs;
    auto add_seg = [&](int a, int b) {
        if (a == b) return;
        auto key = std::minmax(a, b);
        if (seen_seg.insert(key).second) segs.push_back({a, b});
    };
    for (int i = 0; i < n; i++) {
        if (objs[i].kind == ShapeKind::disk) continue;
        const auto& B = bid[i];
        const int m = (int)B.size();
        for (int j = 0; j < m; j++) add_seg(B[j], B[(j + 1) % m]);
        for (int j = 1; j < m; j++) add_seg(B[j], B[0]);
        for (int v = 0; v < nvt; v++) {
            if (!point_strictly_inside_polygon(R.pts[v], poly[i])) continue;
            bool done = false;
            for (int j = 0; j < m && !done; j++)
                if (segment_in_polygon({R.pts[B[j]], R.pts[v]}, poly[i])) {
                    add_seg(B[j], v);
                    done = true;
                }
            if (!done) throw std::logic_error("interior vertex sees no boundary vertex");
        }
    }
    for (int i = 0; i < n; i++) {
        if (objs[i].kind != ShapeKind::disk) continue;
        for (int v = 0; v < nvt; v++)
            if (v != cid[i] && dist(R.pts[v], objs[i].p) <= objs[i].r + kEps) add_seg(cid[i], v);
    }

    // Step 2: planarize at crossings, overlaps, points on segments and disk boundaries
    const int S = (int)segs.size();
    auto seg_of = [&](int s) { return Segment{R.pts[segs[s].first], R.pts[segs[s].second]}; };
    for (int s = 0; s < S; s++)
        for (int t = s + 1; t < S; t++)
            for (auto& p : segment_intersection(seg_of(s), seg_of(t))) R.add(p);
    for (int s = 0; s < S; s++)
        for (int i = 0; i < n; i++)
            if (objs[i].kind == ShapeKind::disk)
                for (auto& p : segment_circle_intersection(seg_of(s), objs[i].p, objs[i].r)) R.add(p);
    std::vector<std::vector<int>> along(S);
    for (int s = 0; s < S; s++) {
        Segment sg = seg_of(s);
        double L2 = (sg.b.x - sg.a.x) * (sg.b.x - sg.a.x) + (sg.b.y - sg.a.y) * (sg.b.y - sg.a.y);
        std::vector<std::pair<double, int>> on;
        for (int id = 0; id < (int)R.pts.size(); id++) {
            const Point& p = R.pts[id];
            if (point_segment_dist(p, sg) > kEps) continue;
            double t = ((p.x - sg.a.x) * (sg.b.x - sg.a.x) + (p.y - sg.a.y) * (sg.b.y - sg.a.y)) / L2;
            on.push_back({t, id});
        }
        std::sort(on.begin(), on.end());
        for (auto& [t, id] : on)
            if (along[s].empty() || along[s].back() != id) along[s].push_back(id);
    }

    PlanarReduction out;
    Graph& g = out.inst.g;
    g = Graph((int)R.pts.size());
    g.pos = R.pts;
    out.base_vertex.assign(R.pts.size(), 0);
    for (int v = 0; v < nvt; v++) out.base_vertex[v] = 1;
    out.base_edges = S;
    std::map<std::pair<int, int>, int> midpoint;
    std::vector<std::vector<int>> seg_verts(S);
    for (int s = 0; s < S; s++) {
        seg_verts[s] = along[s];
        for (size_t j = 0; j + 1 < along[s].size(); j++) {
            int u = along[s][j], v = along[s][j + 1];
            auto key = std::minmax(u, v);
            auto it = midpoint.find(key);
            if (it == midpoint.end()) {
                Point a = R.pts[u], b = R.pts[v];
                int m = g.add_vertex({(a.x + b.x) / 2, (a.y + b.y) / 2});
                double half = metric(a, b) / 2;
                g.add_edge(u, m, half);
                g.add_edge(m, v, half);
                it = midpoint.emplace(key, m).first;
            }
            seg_verts[s].push_back(it->second);
        }
    }
    out.subdivision.assign(g.n, 0);
    for (auto& [key, m] : midpoint) out.subdivision[m] = 1;

    // Step 3: objects
    auto& inst = out.inst;
    inst.objs.resize(n);
    inst.cls.resize(n);
    inst.tau.assign(n, -1);
    double r = 0;
    for (auto& o : objs)
        if (o.kind == ShapeKind::disk) r = std::max(r, o.r);
    inst.r = r;
    for (int i = 0; i < n; i++) {
        inst.objs[i].weight = objs[i].weight;
        inst.objs[i].terminal = objs[i].terminal;
        if (objs[i].kind == ShapeKind::disk) continue;
        inst.cls[i] = ObjClass::fat;
        std::set<int> bset(bid[i].begin(), bid[i].end());
        std::vector<int> verts;
        for (int s = 0; s < S; s++) {
            if (!bset.count(segs[s].first) && !bset.count(segs[s].second)) continue;
            if (!segment_in_polygon(seg_of(s), poly[i])) continue;
            verts.insert(verts.end(), seg_verts[s].begin(), seg_verts[s].end());
        }
        int anchor = bid[i][0];
        int p = g.add_vertex(g.pos[anchor]);
        g.add_edge(anchor, p, 0);
        verts.push_back(p);
        std::sort(verts.begin(), verts.end());
        verts.erase(std::unique(verts.begin(), verts.end()), verts.end());
        inst.objs[i].verts = std::move(verts);
        inst.tau[i] = p;
    }
    std::vector<char> center_used(g.n, 0);
    for (int i = 0; i < n; i++) {
        if (objs[i].kind != ShapeKind::disk) continue;
        inst.cls[i] = ObjClass::disk;
        int c = cid[i];
        if (objs[i].r < r || center_used[c]) {
            int cp = g.add_vertex(g.pos[c]);
            g.add_edge(c, cp, r - objs[i].r);
            c = cp;
        }
        center_used.resize(g.n, 0);
        center_used[c] = 1;
        inst.tau[i] = c;
    }
    for (int i = 0; i < n; i++)
        if (objs[i].kind == ShapeKind::disk) inst.objs[i].verts = dijkstra_ball(g, inst.tau[i], r);
    out.subdivision.resize(g.n, 0);
    out.base_vertex.resize(g.n, 0);
    inst.k = -1;
    return out;
}

LongReduction long_reduction(const PlanarInstance& pi, double alpha, int max_vertices, int max_chain) {
    (void)alpha;
    const Graph& g = pi.g;
    if (g.n > max_vertices)
        throw CapExceeded("long-object catalogue limited to " + std::to_string(max_vertices) + " vertices");
    const int n = (int)pi.objs.size();
    auto tg = touching_graph(pi.objs, g);
    std::vector<std::vector<int>> owners(g.n);
    for (int i = 0; i < n; i++)
        for (int v : pi.objs[i].verts) owners[v].push_back(i);
    auto cost = [&](int o) { return pi.objs[o].terminal ? Weight(0) : pi.objs[o].weight; };

    LongReduction lr;
    lr.inst = pi;
    lr.original_objects = n;
    long nterm = 0;
    for (auto& o : pi.objs) nterm += o.terminal;
    lr.inst.k = 8 * nterm;
    lr.inst.cover.assign(n, {});

    // terminal pairs joined at all in the touching graph
    {
        std::vector<char> keep(n, 1);
        auto lab = component_labels(tg, keep);
        int c = -1;
        for (int i = 0; i < n; i++)
            if (pi.objs[i].terminal) {
                if (c < 0) c = lab[i];
                else if (lab[i] != c) lr.infeasible = true;
            }
    }

    std::vector<char> term_vertex(g.n, 0);
    for (int i = 0; i < n; i++)
        if (pi.objs[i].terminal)
            for (int v : pi.objs[i].verts) term_vertex[v] = 1;

    std::map<std::vector<int>, int> by_verts;  // dedup long objects by vertex set
    for (int x = 0; x < g.n; x++)
        for (int y = x + 1; y < g.n; y++) {
            if (owners[x].empty() || owners[y].empty()) continue;
            // node-weighted search from objects containing x to objects containing y
            std::vector<Weight> d(n);
            std::vector<char> has(n, 0), done(n, 0), target(n, 0);
            std::vector<int> par(n, -1);
            for (int o : owners[y]) target[o] = 1;
            for (int o : owners[x]) {
                d[o] = cost(o);
                has[o] = 1;
            }
            int reached = -1;
            for (;;) {
                int best = -1;
                for (int o = 0; o < n; o++)
                    if (has[o] && !done[o] && (best < 0 || d[o] < d[best])) best = o;
                if (best < 0) break;
                done[best] = 1;
                if (target[best]) {
                    reached = best;
                    break;
                }
                for (int u : tg[best]) {
                    Weight nd = d[best] + cost(u);
                    if (!has[u] || nd < d[u]) {
                        has[u] = 1;
                        d[u] = nd;
                        par[u] = best;
                    }
                }
            }
            if (reached < 0) continue;
            LongEntry e;
            e.x = x;
            e.y = y;
            for (int o = reached; o != -1; o = par[o]) e.psi.push_back(o);
            std::reverse(e.psi.begin(), e.psi.end());
            if ((int)e.psi.size() > max_chain) throw CapExceeded("object chain longer than the cover search cap");
            // breadth-first path by vertex index inside the union of the chain
            std::vector<char> allowed(g.n, 0);
            for (int o : e.psi)
                for (int v : pi.objs[o].verts) allowed[v] = 1;
            std::vector<int> bpar(g.n, -1);
            std::vector<char> vis(g.n, 0);
            std::queue<int> q;
            q.push(x);
            vis[x] = 1;
            while (!q.empty()) {
                int v = q.front();
                q.pop();
                std::vector<int> nb;
                for (auto& [w, l] : g.adj[v]) nb.push_back(w);
                std::sort(nb.begin(), nb.end());
                for (int w : nb)
                    if (allowed[w] && !vis[w]) {
                        vis[w] = 1;
                        bpar[w] = v;
                        q.push(w);
                    }
            }
            if (!vis[y]) throw std::logic_error("chain union does not join the pair");
            for (int v = y; v != -1; v = bpar[v]) e.path.push_back(v);
            std::reverse(e.path.begin(), e.path.end());

            const int m = (int)e.psi.size();
            const int L = (int)e.path.size();
            // covering mask of each chain member over path positions
            std::vector<std::vector<char>> covers(m, std::vector<char>(L, 0));
            for (int a = 0; a < m; a++)
                for (int j = 0; j < L; j++)
                    covers[a][j] = std::binary_search(pi.objs[e.psi[a]].verts.begin(),
                                                      pi.objs[e.psi[a]].verts.end(), e.path[j]);
            // subpaths stay clear of terminal vertices; cutting those parts off never raises the cover weight
            for (int s = 0; s < L; s++)
                for (int t = s; t < L && !term_vertex[e.path[t]]; t++) {
                    // cheapest (then smallest) sub-chain covering path[s..t]
                    int bestmask = -1;
                    Weight bw = 0;
                    for (int mask = 1; mask < (1 << m); mask++) {
                        bool ok = true;
                        for (int j = s; j <= t && ok; j++) {
                            bool c = false;
                            for (int a = 0; a < m && !c; a++) c = (mask >> a & 1) && covers[a][j];
                            ok = c;
                        }
                        if (!ok) continue;
                        Weight w = 0;
                        for (int a = 0; a < m; a++)
                            if (mask >> a & 1) w += cost(e.psi[a]);
                        if (bestmask < 0 || w < bw ||
                            (w == bw && __builtin_popcount(mask) < __builtin_popcount(bestmask))) {
                            bestmask = mask;
                            bw = w;
                        }
                    }
                    std::vector<int> verts(e.path.begin() + s, e.path.begin() + t + 1);
                    std::vector<int> N;
                    for (int a = 0; a < m; a++)
                        if (bestmask >> a & 1) N.push_back(e.psi[a]);
                    int tau_v = verts.front();
                    std::sort(verts.begin(), verts.end());
                    auto it = by_verts.find(verts);
                    if (it != by_verts.end()) {
                        auto& ex = lr.inst.objs[it->second];
                        if (bw < ex.weight) {
                            ex.weight = bw;
                            lr.inst.cover[it->second] = N;
                        }
                        continue;
                    }
                    GraphObject lo;
                    lo.verts = verts;
                    lo.weight = bw;
                    lr.inst.objs.push_back(lo);
                    lr.inst.cls.push_back(ObjClass::longobj);
                    lr.inst.tau.push_back(tau_v);
                    lr.inst.cover.push_back(N);
                    by_verts[verts] = (int)lr.inst.objs.size() - 1;
                }
            lr.catalog.push_back(std::move(e));
        }
    return lr;
}

std::vector<int> expand_long_objects(const LongReduction& lr, const std::vector<int>& chosen) {
    std::set<int> out;
    for (int c : chosen) {
        if (c < lr.original_objects) {
            out.insert(c);
            continue;
        }
        for (int o : lr.inst.cover[c])
            if (!lr.inst.objs[o].terminal) out.insert(o);
    }
    return {out.begin(), out.end()};
}

}  // namespace stg
