#include "stg/planar.hpp"

#include <algorithm>
#include <cmath>

namespace stg {

SteinerInstance to_steiner(const PlanarInstance& pi) {
    std::vector<Weight> w;
    std::vector<char> t;
    for (auto& o : pi.objs) {
        w.push_back(o.weight);
        t.push_back(o.terminal);
    }
    auto inst = make_instance(touching_graph(pi.objs, pi.g), std::move(w), std::move(t), pi.k);
    inst.xset = pi.xset;
    inst.forest = pi.forest;
    return inst;
}

std::vector<int> solution_objects(const PlanarInstance& pi, const std::vector<int>& chosen) {
    std::vector<int> out = chosen;
    for (size_t i = 0; i < pi.objs.size(); i++)
        if (pi.objs[i].terminal) out.push_back((int)i);
    std::sort(out.begin(), out.end());
    out.erase(std::unique(out.begin(), out.end()), out.end());
    return out;
}

double graph_diameter(const Graph& g, const std::vector<int>& verts) {
    double best = 0;
    for (int v : verts) {
        auto d = dijkstra(g, {v});
        for (int u : verts) best = std::max(best, d[u]);
    }
    return best;
}

namespace {

void check_common(const PlanarInstance& pi, const std::vector<int>& set, double alpha, bool allow_long,
                  AssumptionReport& rep) {
    std::vector<int> seen(pi.g.n, -1);
    for (int o : set) {
        const auto& ob = pi.objs[o];
        std::string tag = "object " + std::to_string(o) + ": ";
        int t = pi.tau[o];
        if (t < 0 || t >= pi.g.n || !std::binary_search(ob.verts.begin(), ob.verts.end(), t))
            rep.fail(tag + "representative not inside object");
        else if (seen[t] >= 0)
            rep.fail(tag + "representative shared with object " + std::to_string(seen[t]));
        else
            seen[t] = o;
        switch (pi.cls[o]) {
            case ObjClass::fat:
                if (graph_diameter(pi.g, ob.verts) > alpha + 1e-9) rep.fail(tag + "diameter exceeds alpha");
                break;
            case ObjClass::disk:
                if (pi.r < 4 * alpha - 1e-12) rep.fail(tag + "disk radius below 4 alpha");
                if (dijkstra_ball(pi.g, t, pi.r) != ob.verts) rep.fail(tag + "disk is not the ball around its center");
                break;
            case ObjClass::longobj:
                if (!allow_long) rep.fail(tag + "long object not allowed here");
                if (!induced_connected(pi.g, ob.verts)) rep.fail(tag + "long object not connected");
                break;
        }
    }
    const double cap = 1000 * alpha * alpha;
    std::vector<int> fat;
    for (int o : set)
        if (pi.cls[o] == ObjClass::fat) fat.push_back(o);
    // the ball count can only exceed the cap when there are that many fat objects at all
    if ((double)fat.size() <= cap) return;
    std::vector<std::vector<int>> owners(pi.g.n);
    for (int o : fat)
        for (int v : pi.objs[o].verts) owners[v].push_back(o);
    for (int v = 0; v < pi.g.n; v++) {
        std::vector<char> hit(pi.objs.size(), 0);
        int cnt = 0;
        for (int u : dijkstra_ball(pi.g, v, 4 * alpha))
            for (int o : owners[u])
                if (!hit[o]) {
                    hit[o] = 1;
                    cnt++;
                }
        if (cnt > cap) {
            rep.fail("ball around vertex " + std::to_string(v) + " meets too many fat objects");
            return;
        }
    }
}

}  // namespace

AssumptionReport validate_assumption_P(const PlanarInstance& pi, const std::vector<int>& chosen, double alpha) {
    AssumptionReport rep;
    check_common(pi, solution_objects(pi, chosen), alpha, false, rep);
    return rep;
}

AssumptionReport validate_assumption_PL(const PlanarInstance& pi, const std::vector<int>& chosen, double alpha) {
    AssumptionReport rep;
    auto set = solution_objects(pi, chosen);
    check_common(pi, set, alpha, true, rep);
    std::vector<int> owner_count(pi.g.n, 0);
    for (int o : set)
        for (int v : pi.objs[o].verts) owner_count[v]++;
    for (int o : set) {
        if (pi.cls[o] != ObjClass::longobj) continue;
        for (int v : pi.objs[o].verts)
            if (owner_count[v] > 1) {
                rep.fail("long object " + std::to_string(o) + " overlaps another object");
                break;
            }
    }
    const double cap = 1000 * alpha * alpha;
    std::vector<int> fat;
    for (int o : set)
        if (pi.cls[o] == ObjClass::fat) fat.push_back(o);
    if ((double)fat.size() <= cap) return rep;
    for (int o : set) {
        if (pi.cls[o] == ObjClass::disk) continue;
        auto d = dijkstra(pi.g, pi.objs[o].verts);
        int cnt = 0;
        for (int f : fat) {
            if (f == o) continue;
            double m = INFINITY;
            for (int v : pi.objs[f].verts) m = std::min(m, d[v]);
            if (m <= alpha + 1e-9) cnt++;
        }
        if (cnt > cap) rep.fail("object " + std::to_string(o) + " has too many fat objects nearby");
    }
    return rep;
}

}  // namespace stg
