#include "stg/representation.hpp"

#include "stg/reduction.hpp"

#include <algorithm>
#include <cmath>
#include <map>
#include <numeric>
#include <queue>
#include <set>
#include <stdexcept>
#include <tuple>

namespace stg {

namespace {

bool contains(const std::vector<int>& sorted, int v) { return std::binary_search(sorted.begin(), sorted.end(), v); }

// v lies in O or has a neighbour in O
bool vertex_touches(const Graph& g, const std::vector<int>& obj, int v) {
    if (contains(obj, v)) return true;
    for (auto& [w, l] : g.adj[v])
        if (contains(obj, w)) return true;
    return false;
}

double edge_len(const Graph& g, int a, int b) {
    double best = INFINITY;
    for (auto& [w, l] : g.adj[a])
        if (w == b) best = std::min(best, l);
    return best;
}

// length of a vertex sequence, infinity if consecutive vertices are not adjacent
double path_length(const Graph& g, const std::vector<int>& p) {
    double s = 0;
    for (size_t i = 0; i + 1 < p.size(); i++) s += edge_len(g, p[i], p[i + 1]);
    return s;
}

std::vector<char> mask_of(int n, const std::vector<int>& verts) {
    std::vector<char> m(n, 0);
    for (int v : verts) m[v] = 1;
    return m;
}

bool is_shortest_in(const Graph& g, const std::vector<int>& p, const std::vector<char>& region) {
    if (p.empty()) return false;
    for (int v : p)
        if (!region[v]) return false;
    std::set<int> distinct(p.begin(), p.end());
    if (distinct.size() != p.size()) return false;
    double len = path_length(g, p);
    if (!std::isfinite(len)) return false;
    auto d = dijkstra(g, {p.front()}, &region);
    return len <= d[p.back()] + 1e-9 * std::max(1.0, len);
}

struct UnionFind {
    std::vector<int> p;
    explicit UnionFind(int n) : p(n) { std::iota(p.begin(), p.end(), 0); }
    int find(int x) { return p[x] == x ? x : p[x] = find(p[x]); }
    void unite(int a, int b) { p[find(a)] = find(b); }
};

}  // namespace

std::vector<std::vector<int>> build_obj_prime(const PlanarInstance& pi, int obj) {
    const auto& verts = pi.objs.at(obj).verts;
    auto allowed = mask_of(pi.g.n, verts);
    std::vector<std::vector<int>> out{verts};
    std::set<std::vector<int>> seen{verts};
    for (size_t i = 0; i < verts.size(); i++)
        for (size_t j = i + 1; j < verts.size(); j++) {
            auto p = shortest_path(pi.g, verts[i], verts[j], allowed);
            if (p.empty()) continue;
            auto key = p;
            std::sort(key.begin(), key.end());
            if (seen.insert(key).second) out.push_back(p);
        }
    return out;
}

ObjectSpanningTree spanning_tree_of_objects(const PlanarInstance& pi, const std::vector<int>& D, int root) {
    const Graph& g = pi.g;
    ObjectSpanningTree st;
    if (D.empty()) return st;
    {
        std::vector<GraphObject> sub;
        for (int o : D) sub.push_back(pi.objs[o]);
        auto tg = touching_graph(sub, g);
        auto lab = component_labels(tg, std::vector<char>(sub.size(), 1));
        for (int l : lab)
            if (l != lab[0]) throw std::invalid_argument("object set is not connected");
    }
    if (root < 0) {
        root = g.n;
        for (int o : D) root = std::min(root, pi.objs[o].verts.front());
    }
    const int m = (int)D.size();
    std::vector<char> inK(m, 0), inT(g.n, 0);
    // touching between members of D, computed once
    std::vector<std::vector<char>> tt(m, std::vector<char>(m, 0));
    for (int a = 0; a < m; a++)
        for (int b = 0; b < m; b++) tt[a][b] = a != b && touch(pi.objs[D[a]], pi.objs[D[b]], g);

    auto add = [&](int v, int parent) {
        inT[v] = 1;
        st.verts.push_back(v);
        if (parent >= 0) st.edges.push_back({parent, v});
    };
    // recursion depth is bounded by the tree size, which is O(|D|)
    auto visit = [&](auto&& self, int v) -> void {
        std::vector<int> direct;
        for (int a = 0; a < m; a++)
            if (!inK[a] && vertex_touches(g, pi.objs[D[a]].verts, v)) {
                inK[a] = 1;
                direct.push_back(a);
            }
        for (int a : direct) {
            int t = pi.tau[D[a]];
            if (!inT[t]) {
                add(t, v);
                self(self, t);
            }
        }
        // pending objects: outside K but touching an object that v touches; connect through a witness vertex
        for (;;) {
            int wit = -1;
            for (int b = 0; b < m && wit < 0; b++) {
                if (!vertex_touches(g, pi.objs[D[b]].verts, v)) continue;
                for (int a = 0; a < m && wit < 0; a++) {
                    if (inK[a] || !tt[a][b]) continue;
                    for (int w : pi.objs[D[b]].verts)
                        if (vertex_touches(g, pi.objs[D[a]].verts, w)) {
                            wit = w;
                            break;
                        }
                }
            }
            if (wit < 0) break;
            if (inT[wit]) throw std::logic_error("witness vertex already in the tree");
            add(wit, v);
            self(self, wit);
        }
    };
    add(root, -1);
    visit(visit, root);
    for (int a = 0; a < m; a++)
        if (!inK[a]) throw std::logic_error("spanning tree missed an object");

    std::set<int> imp;
    for (int o : D) imp.insert(pi.tau[o]);
    for (auto [u, v] : st.edges) {
        bool in_disk = false;
        for (int o : D)
            if (pi.cls[o] == ObjClass::disk && contains(pi.objs[o].verts, u) && contains(pi.objs[o].verts, v))
                in_disk = true;
        st.important_edge.push_back(!in_disk);
        if (!in_disk) {
            imp.insert(u);
            imp.insert(v);
        }
    }
    st.important_verts.assign(imp.begin(), imp.end());
    return st;
}

namespace {

struct Builder {
    const PlanarInstance& pi;
    const Graph& g;
    double alpha;
    std::vector<int> sol;
    std::vector<int> disks, fats, longs;
    std::vector<int> used;  // piece id per vertex, -1 when free
    std::vector<RepPiece> W;
    // nearest solution disk centre: owner disk, distance, tree parent
    std::vector<int> cell, parent;
    std::vector<double> sigma;
    std::vector<char> in_disk_union, fat_tau;

    Builder(const PlanarInstance& p, const std::vector<int>& s, double a) : pi(p), g(p.g), alpha(a), sol(s) {
        used.assign(g.n, -1);
        for (int o : sol) {
            if (pi.cls[o] == ObjClass::disk) disks.push_back(o);
            else if (pi.cls[o] == ObjClass::longobj) longs.push_back(o);
            else fats.push_back(o);
        }
        in_disk_union.assign(g.n, 0);
        for (int d : disks)
            for (int v : pi.objs[d].verts) in_disk_union[v] = 1;
        fat_tau.assign(g.n, 0);
        for (int f : fats) fat_tau[pi.tau[f]] = 1;
        voronoi();
    }

    // multi-source Dijkstra from the centres; ties go to the smaller disk index, then the smaller parent
    void voronoi() {
        cell.assign(g.n, -1);
        parent.assign(g.n, -1);
        sigma.assign(g.n, INFINITY);
        std::vector<char> source(g.n, 0);
        using Item = std::tuple<double, int, int>;  // dist, disk, vertex
        std::priority_queue<Item, std::vector<Item>, std::greater<>> pq;
        for (int d : disks) {
            int c = pi.tau[d];
            sigma[c] = 0;
            cell[c] = d;
            source[c] = 1;
            pq.push({0.0, d, c});
        }
        std::vector<char> done(g.n, 0);
        while (!pq.empty()) {
            auto [dv, d, v] = pq.top();
            pq.pop();
            if (done[v] || dv != sigma[v] || d != cell[v]) continue;
            done[v] = 1;
            for (auto& [w, l] : g.adj[v]) {
                if (source[w] || done[w]) continue;
                double nd = dv + l;
                if (nd < sigma[w] || (nd == sigma[w] && (d < cell[w] || (d == cell[w] && v < parent[w])))) {
                    sigma[w] = nd;
                    cell[w] = d;
                    parent[w] = v;
                    pq.push({nd, d, w});
                }
            }
        }
    }

    // vertex belongs to the tree of its nearest centre within the common radius
    int tree_of(int v) const { return cell[v] >= 0 && sigma[v] <= pi.r + kEps ? cell[v] : -1; }

    int add_piece(std::vector<int> path, int owner) {
        int id = (int)W.size();
        for (int v : path) {
            if (used[v] >= 0) throw std::logic_error("representation pieces overlap");
            used[v] = id;
        }
        W.push_back({std::move(path), owner});
        return id;
    }

    // tree path from u toward its centre, up to the first used vertex, split into annulus part, inner part
    // and singletons at representatives of fat objects
    void attach(int u) {
        int d = tree_of(u);
        if (d < 0 || used[u] >= 0) return;
        std::vector<int> path;
        for (int v = u; v >= 0 && used[v] < 0; v = parent[v]) path.push_back(v);
        const double inner = pi.r - 3 * alpha;
        std::vector<int> cur;
        int cur_zone = -1;
        auto flush = [&] {
            if (!cur.empty()) add_piece(cur, d);
            cur.clear();
        };
        for (int v : path) {
            if (fat_tau[v]) {
                flush();
                add_piece({v}, d);
                cur_zone = -1;
                continue;
            }
            int zone = sigma[v] <= inner + kEps ? 1 : 0;
            if (zone != cur_zone) flush();
            cur_zone = zone;
            cur.push_back(v);
        }
        flush();
    }

    // components of touchgraph(W), as a label per piece
    std::vector<int> piece_labels() {
        UnionFind uf((int)W.size());
        for (int v = 0; v < g.n; v++) {
            if (used[v] < 0) continue;
            for (auto& [w, l] : g.adj[v])
                if (used[w] >= 0) uf.unite(used[v], used[w]);
        }
        std::vector<int> lab(W.size());
        for (size_t i = 0; i < W.size(); i++) lab[i] = uf.find((int)i);
        return lab;
    }

    // label of a vertex: its piece's component, or for free vertices of a disk tree the component of the centre
    int vertex_label(int v, const std::vector<int>& lab, const std::vector<int>& center_piece) const {
        if (used[v] >= 0) return lab[used[v]];
        int d = tree_of(v);
        if (d >= 0 && in_disk_union[v]) return lab[center_piece[d]];
        return -1;
    }

    bool disk_rules(const std::vector<int>& lab, const std::vector<int>& center_piece) {
        for (int u = 0; u < g.n; u++) {
            if (used[u] >= 0 || tree_of(u) < 0 || !in_disk_union[u]) continue;
            int mine = lab[center_piece[tree_of(u)]];
            for (auto& [w, l] : g.adj[u]) {
                if (used[w] >= 0 && lab[used[w]] != mine) {
                    attach(u);
                    return true;
                }
                if (used[w] < 0 && tree_of(w) >= 0 && in_disk_union[w] && lab[center_piece[tree_of(w)]] != mine) {
                    attach(u);
                    attach(w);
                    return true;
                }
            }
        }
        return false;
    }

    // free path outside the disks whose ends touch two different labels
    std::vector<int> fat_connector(const std::vector<int>& lab, const std::vector<int>& center_piece) {
        std::vector<char> inU(g.n, 0);
        for (int f : fats)
            for (int v : pi.objs[f].verts)
                if (used[v] < 0 && !in_disk_union[v]) inU[v] = 1;
        auto touching = [&](int u) {
            std::set<int> s;
            for (auto& [w, l] : g.adj[u])
                if (!inU[w]) {
                    int x = vertex_label(w, lab, center_piece);
                    if (x >= 0) s.insert(x);
                }
            return s;
        };
        std::vector<int> src(g.n, -1), par(g.n, -1);
        std::queue<int> q;
        for (int u = 0; u < g.n; u++) {
            if (!inU[u]) continue;
            auto s = touching(u);
            if (s.size() >= 2) return {u};
            if (s.size() == 1) {
                src[u] = *s.begin();
                q.push(u);
            }
        }
        auto trace = [&](int v) {
            std::vector<int> p;
            for (; v >= 0; v = par[v]) p.push_back(v);
            return p;  // v back to its source
        };
        while (!q.empty()) {
            int a = q.front();
            q.pop();
            std::vector<int> nb;
            for (auto& [w, l] : g.adj[a])
                if (inU[w]) nb.push_back(w);
            std::sort(nb.begin(), nb.end());
            for (int b : nb) {
                if (src[b] >= 0) {
                    if (src[b] == src[a]) continue;
                    auto pa = trace(a), pb = trace(b);
                    std::reverse(pa.begin(), pa.end());
                    pa.insert(pa.end(), pb.begin(), pb.end());
                    return pa;
                }
                src[b] = src[a];
                par[b] = a;
                auto s = touching(b);
                s.erase(src[a]);
                if (!s.empty()) {
                    auto p = trace(b);
                    std::reverse(p.begin(), p.end());
                    return p;
                }
                q.push(b);
            }
        }
        return {};
    }

    // split a free path into runs inside single fat objects, each cut into shortest paths of that object
    void add_fat_path(const std::vector<int>& p) {
        size_t i = 0;
        while (i < p.size()) {
            int best = -1;
            size_t best_end = i;
            for (int f : fats) {
                const auto& vs = pi.objs[f].verts;
                if (!contains(vs, p[i])) continue;
                size_t j = i;
                while (j + 1 < p.size() && contains(vs, p[j + 1])) j++;
                if (best < 0 || j > best_end) {
                    best = f;
                    best_end = j;
                }
            }
            if (best < 0) throw std::logic_error("connector vertex outside every fat object");
            auto region = mask_of(g.n, pi.objs[best].verts);
            size_t s = i;
            while (s <= best_end) {
                auto d = dijkstra(g, {p[s]}, &region);
                size_t e = s;
                double len = 0;
                while (e + 1 <= best_end) {
                    double nl = len + edge_len(g, p[e], p[e + 1]);
                    if (nl > d[p[e + 1]] + 1e-9 * std::max(1.0, nl)) break;
                    len = nl;
                    e++;
                }
                add_piece(std::vector<int>(p.begin() + s, p.begin() + e + 1), best);
                s = e + 1;
            }
            i = best_end + 1;
        }
    }
};

}  // namespace

Representation construct_representation(const PlanarInstance& pi, const std::vector<int>& chosen, double alpha) {
    auto rep_assume = validate_assumption_PL(pi, chosen, alpha);
    if (!rep_assume.ok) throw AssumptionError("solution violates the long-object assumption", rep_assume.violations);
    auto sol = solution_objects(pi, chosen);
    Representation rep;
    rep.solution = sol;
    if (sol.empty()) return rep;
    Builder b(pi, sol, alpha);

    // spanning tree per component of the solution's touching graph
    std::vector<int> vt;
    {
        std::vector<GraphObject> sub;
        for (int o : sol) sub.push_back(pi.objs[o]);
        auto lab = component_labels(touching_graph(sub, pi.g), std::vector<char>(sub.size(), 1));
        std::map<int, std::vector<int>> comps;
        for (size_t i = 0; i < sol.size(); i++) comps[lab[i]].push_back(sol[i]);
        for (auto& [l, D] : comps) {
            auto st = spanning_tree_of_objects(pi, D);
            vt.insert(vt.end(), st.verts.begin(), st.verts.end());
        }
    }

    // connect tree vertices near disks to their nearest centre, closest first
    std::vector<int> center_piece(pi.objs.size(), -1);
    for (int d : b.disks) center_piece[d] = b.add_piece({pi.tau[d]}, d);
    std::sort(vt.begin(), vt.end(), [&](int x, int y) { return std::tie(b.sigma[x], x) < std::tie(b.sigma[y], y); });
    for (int v : vt)
        if (b.tree_of(v) >= 0) b.attach(v);

    for (int l : b.longs) b.add_piece(pi.objs[l].verts, l);
    for (int f : b.fats)
        if (b.used[pi.tau[f]] < 0) b.add_piece({pi.tau[f]}, f);

    const long cap = 10L * pi.g.n + 100;
    for (long it = 0;; it++) {
        if (it > cap) throw std::logic_error("representation merging did not settle");
        auto lab = b.piece_labels();
        if (b.disk_rules(lab, center_piece)) continue;
        auto p = b.fat_connector(lab, center_piece);
        if (p.empty()) break;
        b.add_fat_path(p);
    }
    rep.W = std::move(b.W);
    return rep;
}

RepresentationReport verify_representation(const Representation& rep, const PlanarInstance& pi, double alpha) {
    const Graph& g = pi.g;
    RepresentationReport out;
    out.property.fill(true);
    auto fail = [&](int p, const std::string& why) {
        out.property[p - 1] = false;
        out.notes.push_back("property " + std::to_string(p) + ": " + why);
    };
    const auto& sol = rep.solution;
    auto in_sol = [&](int o) { return std::binary_search(sol.begin(), sol.end(), o); };
    for (size_t i = 0; i < rep.W.size(); i++)
        if (!in_sol(rep.W[i].owner)) fail(2, "piece " + std::to_string(i) + " maps outside the solution");

    // 2: pairwise disjoint
    std::vector<int> owner_of(g.n, -1);
    for (size_t i = 0; i < rep.W.size(); i++)
        for (int v : rep.W[i].path) {
            if (owner_of[v] >= 0) fail(2, "pieces " + std::to_string(owner_of[v]) + " and " + std::to_string(i) + " share a vertex");
            owner_of[v] = (int)i;
        }

    // components of touchgraph(W)
    std::vector<GraphObject> wobj;
    for (auto& p : rep.W) {
        GraphObject o;
        o.verts = p.path;
        std::sort(o.verts.begin(), o.verts.end());
        wobj.push_back(o);
    }
    auto wtg = touching_graph(wobj, g);
    auto wlab = component_labels(wtg, std::vector<char>(wobj.size(), 1));

    // 1: terminals connected in the solution have representatives covered by one component
    {
        std::vector<GraphObject> sub;
        for (int o : sol) sub.push_back(pi.objs[o]);
        auto slab = component_labels(touching_graph(sub, g), std::vector<char>(sub.size(), 1));
        std::vector<std::set<int>> cover(g.n);
        for (size_t i = 0; i < rep.W.size(); i++)
            for (int v : rep.W[i].path) cover[v].insert(wlab[i]);
        std::vector<size_t> terms;
        for (size_t i = 0; i < sol.size(); i++)
            if (pi.objs[sol[i]].terminal) terms.push_back(i);
        for (size_t a = 0; a < terms.size(); a++)
            for (size_t b2 = a + 1; b2 < terms.size(); b2++) {
                if (slab[terms[a]] != slab[terms[b2]]) continue;
                int ta = pi.tau[sol[terms[a]]], tb = pi.tau[sol[terms[b2]]];
                bool shared = false;
                for (int c : cover[ta]) shared = shared || cover[tb].count(c);
                if (!shared)
                    fail(1, "terminals " + std::to_string(sol[terms[a]]) + " and " + std::to_string(sol[terms[b2]]) +
                                " are not joined");
            }
    }

    std::vector<std::vector<int>> pre(pi.objs.size());
    for (size_t i = 0; i < rep.W.size(); i++)
        if (rep.W[i].owner >= 0 && rep.W[i].owner < (int)pi.objs.size()) pre[rep.W[i].owner].push_back((int)i);

    for (size_t i = 0; i < rep.W.size(); i++) {
        const auto& piece = rep.W[i];
        int o = piece.owner;
        if (o < 0 || o >= (int)pi.objs.size()) continue;
        std::string tag = "piece " + std::to_string(i);
        switch (pi.cls[o]) {
            case ObjClass::longobj:
                if (wobj[i].verts != pi.objs[o].verts) fail(3, tag + " differs from its long object");
                break;
            case ObjClass::fat:
                if (!is_shortest_in(g, piece.path, mask_of(g.n, pi.objs[o].verts)))
                    fail(4, tag + " is not a shortest path of its fat object");
                break;
            case ObjClass::disk: {
                int c = pi.tau[o];
                auto ball = mask_of(g.n, dijkstra_ball(g, c, pi.r));
                auto inner = mask_of(g.n, dijkstra_ball(g, c, pi.r - 3 * alpha));
                auto ring = ball;
                for (int v = 0; v < g.n; v++)
                    if (inner[v]) ring[v] = 0;
                bool in_inner = is_shortest_in(g, piece.path, inner);
                bool in_ring = is_shortest_in(g, piece.path, ring) && path_length(g, piece.path) <= 3 * alpha + 1e-9;
                if (!in_inner && !in_ring) fail(5, tag + " is neither an inner nor a short ring shortest path");
                break;
            }
        }
    }

    for (int o : sol) {
        std::string tag = "object " + std::to_string(o);
        int t = pi.tau[o];
        if (pi.cls[o] == ObjClass::disk) {
            // 6: connected preimage holding the centre singleton
            bool has_center = false;
            for (int i : pre[o]) has_center = has_center || rep.W[i].path == std::vector<int>{t};
            if (!has_center) fail(6, tag + " lacks its centre singleton");
            std::vector<char> keep(wobj.size(), 0);
            for (int i : pre[o]) keep[i] = 1;
            auto lab = component_labels(wtg, keep);
            std::set<int> comps;
            for (int i : pre[o]) comps.insert(lab[i]);
            if (comps.size() > 1) fail(6, tag + " has a disconnected preimage");
        } else if (pi.cls[o] == ObjClass::fat) {
            // 7 and 8
            bool single = false;
            for (auto& p : rep.W) single = single || p.path == std::vector<int>{t};
            if (!single) fail(7, tag + " has no singleton at its representative");
            for (int d : sol) {
                if (pi.cls[d] != ObjClass::disk) continue;
                const auto& dv = pi.objs[d].verts;
                if (std::includes(dv.begin(), dv.end(), pi.objs[o].verts.begin(), pi.objs[o].verts.end()) &&
                    !pre[o].empty())
                    fail(8, tag + " lies in disk " + std::to_string(d) + " but has pieces");
            }
        }
    }
    return out;
}

}  // namespace stg
