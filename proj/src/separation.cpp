#include "stg/separation.hpp"

#include <algorithm>
#include <cmath>
#include <numeric>
#include <set>
#include <stdexcept>

namespace stg {

namespace {

bool contains(const std::vector<int>& sorted, int v) { return std::binary_search(sorted.begin(), sorted.end(), v); }

bool subset_of(const std::vector<int>& obj, const std::vector<char>& side) {
    for (int v : obj)
        if (!side[v]) return false;
    return true;
}

// components of g restricted to keep, each sorted, ordered by smallest vertex
std::vector<std::vector<int>> vertex_components(const Graph& g, const std::vector<char>& keep) {
    std::vector<int> comp(g.n, -1);
    std::vector<std::vector<int>> out;
    for (int s = 0; s < g.n; s++) {
        if (!keep[s] || comp[s] >= 0) continue;
        std::vector<int> stack{s}, cur;
        comp[s] = (int)out.size();
        while (!stack.empty()) {
            int v = stack.back();
            stack.pop_back();
            cur.push_back(v);
            for (auto& [w, l] : g.adj[v])
                if (keep[w] && comp[w] < 0) {
                    comp[w] = comp[s];
                    stack.push_back(w);
                }
        }
        std::sort(cur.begin(), cur.end());
        out.push_back(cur);
    }
    return out;
}

GuardedReport check_with_distances(const GuardedSeparation& sep, const std::vector<std::vector<int>>& objs,
                                   const std::vector<int>& F, const std::vector<int>& F0, const Graph& g,
                                   const std::vector<std::vector<double>>& dist) {
    GuardedReport r;
    std::vector<int> part(g.n, -1);
    bool ok = true;
    for (int v : sep.Gamma) ok = ok && part[v] < 0 && (part[v] = 0, true);
    for (int v : sep.A) ok = ok && part[v] < 0 && (part[v] = 1, true);
    for (int v : sep.B) ok = ok && part[v] < 0 && (part[v] = 2, true);
    for (int v = 0; v < g.n && ok; v++) ok = part[v] >= 0;
    for (int v = 0; v < g.n && ok; v++)
        for (auto& [w, l] : g.adj[v])
            if (part[v] + part[w] == 3) ok = false;
    r.partition = ok;

    std::vector<char> inF(objs.size(), 0), inQ(objs.size(), 0);
    for (int f : F) inF[f] = 1;
    r.a = true;
    for (int q : sep.Q) {
        inQ[q] = 1;
        if (!inF[q]) r.a = false;
    }
    r.b = true;
    for (int v : sep.Gamma) {
        double best = INFINITY;
        for (int q : sep.Q) best = std::min(best, dist[q][v]);
        for (int p : F)
            if (!inQ[p] && !(dist[p][v] > best)) r.b = false;
    }
    std::vector<char> inA(g.n, 0), inB(g.n, 0);
    for (int v : sep.A) inA[v] = 1;
    for (int v : sep.B) inB[v] = 1;
    long ca = 0, cb = 0;
    for (int f : F0) {
        ca += subset_of(objs[f], inA);
        cb += subset_of(objs[f], inB);
    }
    r.c = 4 * ca <= 3 * (long)F0.size() && 4 * cb <= 3 * (long)F0.size();
    return r;
}

std::vector<std::vector<double>> object_distances(const Graph& g, const std::vector<std::vector<int>>& objs) {
    std::vector<std::vector<double>> d;
    for (auto& o : objs) d.push_back(dijkstra(g, o));
    return d;
}

}  // namespace

GuardedReport verify_guarded(const GuardedSeparation& sep, const std::vector<std::vector<int>>& objs,
                             const std::vector<int>& F, const std::vector<int>& F0, const Graph& g) {
    return check_with_distances(sep, objs, F, F0, g, object_distances(g, objs));
}

std::vector<GuardedSeparation> expand_components_to_bipartitions(const std::vector<int>& Q,
                                                                 const std::vector<int>& Gamma, const Graph& g) {
    std::vector<char> keep(g.n, 1);
    for (int v : Gamma) keep[v] = 0;
    auto K = vertex_components(g, keep);
    std::vector<int> gam = Gamma;
    std::sort(gam.begin(), gam.end());
    auto make = [&](const std::vector<char>& inA) {
        GuardedSeparation s;
        s.Q = Q;
        s.Gamma = gam;
        for (size_t i = 0; i < K.size(); i++) {
            auto& side = inA[i] ? s.A : s.B;
            side.insert(side.end(), K[i].begin(), K[i].end());
        }
        std::sort(s.A.begin(), s.A.end());
        std::sort(s.B.begin(), s.B.end());
        return s;
    };
    std::vector<GuardedSeparation> out;
    const size_t t = K.size();
    if (t == 0) {
        out.push_back(make({}));
        return out;
    }
    for (size_t i = 0; i < t; i++) {
        std::vector<char> inA(t, 0);
        inA[i] = 1;
        out.push_back(make(inA));
    }
    for (size_t i = 1; i < t; i++) {
        std::vector<char> inA(t, 0);
        for (size_t j = 0; j < i; j++) inA[j] = 1;
        out.push_back(make(inA));
    }
    return out;
}

PendantAugmentation pendant_augmentation(const Graph& g, const std::vector<std::vector<int>>& D, long k, long kprime,
                                         double lambda) {
    if (kprime < 1 || kprime > k) throw std::invalid_argument("k' must lie in [1, k]");
    if (lambda < 1) throw std::invalid_argument("lambda must be at least 1");
    PendantAugmentation out;
    out.g = g;
    const int n = g.n;
    // pendant i of vertex v
    std::vector<std::vector<int>> pend(n);
    for (int v = 0; v < n; v++)
        for (long i = 0; i < 4 * k; i++) {
            int p = out.g.add_vertex(g.pos[v]);
            out.g.add_edge(v, p, 1);
            pend[v].push_back(p);
        }
    for (size_t o = 0; o < D.size(); o++) {
        out.objs.push_back(D[o]);
        out.origin.push_back((int)o);
    }
    for (size_t o = 0; o < D.size(); o++) {
        int lam = *std::min_element(D[o].begin(), D[o].end());
        for (long i = 0; i < 4 * k; i++) {
            out.objs.push_back({pend[lam][i]});
            out.origin.push_back((int)o);
            out.copies++;
        }
    }
    out.theta = (long)std::ceil(608.0 * lambda * (double)k / (double)kprime);
    out.kstar = k + out.theta * kprime;
    return out;
}

void exhaustive_separation_enum(const Graph& g, const std::vector<std::vector<int>>& D, int budget, int gamma_cap,
                                const std::function<bool(const GuardedSeparation&)>& emit) {
    if (g.n > 20 || D.size() > 20) throw CapExceeded("exhaustive separation enumeration limited to 20 vertices/objects");
    const int d = (int)D.size();
    std::vector<std::vector<int>> qs;
    for (int mask = 0; mask < (1 << d); mask++) {
        if (__builtin_popcount(mask) > budget) continue;
        std::vector<int> q;
        for (int i = 0; i < d; i++)
            if (mask >> i & 1) q.push_back(i);
        qs.push_back(q);
    }
    std::sort(qs.begin(), qs.end(), [](auto& a, auto& b) { return a.size() != b.size() ? a.size() < b.size() : a < b; });
    for (long gm = 0; gm < (1L << g.n); gm++) {
        if (__builtin_popcountl(gm) > gamma_cap) continue;
        std::vector<char> keep(g.n, 1);
        std::vector<int> gamma;
        for (int v = 0; v < g.n; v++)
            if (gm >> v & 1) {
                keep[v] = 0;
                gamma.push_back(v);
            }
        auto K = vertex_components(g, keep);
        const int t = (int)K.size();
        for (auto& q : qs)
            for (long am = 0; am < (1L << t); am++) {
                GuardedSeparation s;
                s.Q = q;
                s.Gamma = gamma;
                for (int i = 0; i < t; i++) {
                    auto& side = (am >> i & 1) ? s.A : s.B;
                    side.insert(side.end(), K[i].begin(), K[i].end());
                }
                std::sort(s.A.begin(), s.A.end());
                std::sort(s.B.begin(), s.B.end());
                if (!emit(s)) return;
            }
    }
}

bool terminals_irredundant(const PlanarInstance& pi) {
    std::vector<int> cover(pi.g.n, 0);
    for (auto& o : pi.objs)
        if (o.terminal)
            for (int v : o.verts) cover[v]++;
    for (auto& o : pi.objs) {
        if (!o.terminal) continue;
        bool own = false;
        for (int v : o.verts) own = own || cover[v] == 1;
        if (!own) return false;
    }
    return true;
}

std::vector<BalancedTriple> list_triples(const PlanarInstance& pi, const Representation& rep, double alpha,
                                         const std::vector<GuardedSeparation>& seps) {
    if (!terminals_irredundant(pi)) throw std::invalid_argument("terminal set is redundant; drop covered terminals first");
    const Graph& g = pi.g;
    const int m = (int)pi.objs.size();
    std::vector<char> has_pre(m, 0);
    for (auto& p : rep.W) has_pre[p.owner] = 1;
    // object-to-object distance, only as far as alpha matters
    std::vector<std::vector<double>> odist;
    for (auto& o : pi.objs) odist.push_back(dijkstra(g, o.verts));
    auto obj_dist = [&](int a, int b) {
        double best = INFINITY;
        for (int v : pi.objs[b].verts) best = std::min(best, odist[a][v]);
        return best;
    };
    std::vector<BalancedTriple> out;
    std::set<std::tuple<std::vector<int>, std::vector<int>, std::vector<int>>> seen;
    for (auto& sep : seps) {
        std::set<int> q0;
        for (int p : sep.Q) {
            q0.insert(rep.W.at(p).owner);
            if (rep.W[p].path.size() == 1)
                for (int o = 0; o < m; o++)
                    if (pi.tau[o] == rep.W[p].path[0] && std::binary_search(rep.solution.begin(), rep.solution.end(), o))
                        q0.insert(o);
        }
        std::set<int> Q = q0;
        for (int o = 0; o < m; o++) {
            if (pi.cls[o] != ObjClass::fat || !has_pre[o] || Q.count(o)) continue;
            for (int a : q0)
                if (obj_dist(a, o) <= alpha + kEps) {
                    Q.insert(o);
                    break;
                }
        }
        for (int o = 0; o < m; o++)
            if (pi.objs[o].terminal && contains(sep.Gamma, pi.tau[o])) Q.insert(o);
        BalancedTriple tr;
        tr.Q.assign(Q.begin(), Q.end());
        for (int o = 0; o < m; o++) {
            if (!pi.objs[o].terminal || Q.count(o)) continue;
            if (contains(sep.A, pi.tau[o])) tr.T1.push_back(o);
            else tr.T2.push_back(o);
        }
        if (seen.insert({tr.T1, tr.T2, tr.Q}).second) out.push_back(tr);
    }
    return out;
}

std::vector<BalancedTriple> triples_from_exhaustive_separations(const PlanarInstance& pi, const Representation& rep,
                                                                double alpha, int budget, int gamma_cap) {
    std::vector<std::vector<int>> fam;
    for (auto& p : rep.W) {
        auto v = p.path;
        std::sort(v.begin(), v.end());
        fam.push_back(v);
    }
    std::vector<int> F(fam.size());
    std::iota(F.begin(), F.end(), 0);
    std::vector<int> F0;
    for (int o : rep.solution)
        for (size_t i = 0; i < fam.size(); i++)
            if (fam[i] == std::vector<int>{pi.tau[o]}) F0.push_back((int)i);
    std::sort(F0.begin(), F0.end());
    F0.erase(std::unique(F0.begin(), F0.end()), F0.end());
    auto dist = object_distances(pi.g, fam);
    std::vector<GuardedSeparation> good;
    exhaustive_separation_enum(pi.g, fam, budget, gamma_cap, [&](const GuardedSeparation& s) {
        if (check_with_distances(s, fam, F, F0, pi.g, dist).ok()) good.push_back(s);
        return true;
    });
    return list_triples(pi, rep, alpha, good);
}

bool verify_balanced_triple(const BalancedTriple& tr, const SteinerInstance& inst, const std::vector<int>& chosen,
                            const Weight& beta) {
    std::vector<char> inSol(inst.n, 0), inQ(inst.n, 0);
    for (int c : chosen) inSol[c] = 1;
    for (int t : inst.terminals()) inSol[t] = 1;
    for (int q : tr.Q) {
        if (!inSol[q]) return false;
        inQ[q] = 1;
    }
    // T1, T2 must partition the terminals outside Q
    std::vector<int> side(inst.n, -1);
    for (int t : tr.T1) side[t] = 0;
    for (int t : tr.T2) {
        if (side[t] >= 0) return false;
        side[t] = 1;
    }
    for (int t : inst.terminals())
        if (!inQ[t] && side[t] < 0) return false;
    for (int t : tr.T1)
        if (!inst.terminal[t] || inQ[t]) return false;
    for (int t : tr.T2)
        if (!inst.terminal[t] || inQ[t]) return false;
    std::vector<int> free;
    long total = 0;
    for (int v = 0; v < inst.n; v++) {
        if (!inSol[v]) continue;
        total++;
        if (!inQ[v] && !inst.terminal[v]) free.push_back(v);
    }
    if (free.size() > 20) throw CapExceeded("balanced-triple check limited to 20 free objects");
    Weight cap = beta * Weight(total);
    auto terms = inst.terminals();
    for (long mask = 0; mask < (1L << free.size()); mask++) {
        for (size_t i = 0; i < free.size(); i++) side[free[i]] = (mask >> i & 1) ? 1 : 0;
        long ca = 0, cb = 0;
        for (int v = 0; v < inst.n; v++)
            if (inSol[v] && !inQ[v]) (side[v] == 0 ? ca : cb)++;
        if (Weight(ca) > cap || Weight(cb) > cap) continue;
        AdjList h(inst.n);
        for (int v = 0; v < inst.n; v++) {
            if (!inSol[v]) continue;
            for (int w : inst.adj[v]) {
                if (!inSol[w]) continue;
                bool cut = !inQ[v] && !inQ[w] && side[v] != side[w];
                if (!cut) h[v].push_back(w);
            }
        }
        for (auto [a, b] : inst.forest) {
            h[a].push_back(b);
            h[b].push_back(a);
        }
        auto lab = component_labels(h, inSol);
        bool ok = true;
        for (int t : terms) ok = ok && lab[t] == lab[terms[0]];
        if (ok) return true;
    }
    return false;
}

}  // namespace stg
