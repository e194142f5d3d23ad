#include "stg/random_instances.hpp"

#include <algorithm>
#include <cmath>
#include <numeric>
#include <stdexcept>

namespace stg {

SteinerInstance to_steiner(const GeoInstance& gi) {
    int n = (int)gi.objs.size();
    AdjList adj(n);
    for (int i = 0; i < n; i++)
        for (int j = i + 1; j < n; j++)
            if (intersects(gi.objs[i], gi.objs[j])) {
                adj[i].push_back(j);
                adj[j].push_back(i);
            }
    std::vector<Weight> w;
    std::vector<char> t;
    for (auto& o : gi.objs) {
        w.push_back(o.weight);
        t.push_back(o.terminal);
    }
    return make_instance(std::move(adj), std::move(w), std::move(t), gi.k);
}

GeometricObject random_fat_polygon(std::mt19937_64& rng, Point c, double diam) {
    std::uniform_real_distribution<double> U(0, 1);
    const double R = diam / 2;
    for (int attempt = 0; attempt < 10000; attempt++) {
        int m = 5 + (int)(U(rng) * 4);
        std::vector<double> ang;
        double a0 = U(rng) * 2 * M_PI;
        for (int i = 0; i < m; i++) ang.push_back(a0 + 2 * M_PI * (i + 0.35 * (U(rng) - 0.5)) / m);
        std::sort(ang.begin(), ang.end());
        std::vector<Point> vs;
        for (double a : ang) {
            double rr = R * (0.85 + 0.15 * U(rng));
            vs.push_back({c.x + rr * std::cos(a), c.y + rr * std::sin(a)});
        }
        auto o = GeometricObject::polygon(vs);
        if (polygon_is_simple(vs) && polygon_is_convex(vs) && diameter(o) <= diam &&
            contains_unit_diameter_disk(o))
            return o;
    }
    throw std::invalid_argument("no fat polygon of that diameter");
}

GeoInstance random_geo_instance(std::mt19937_64& rng, const GeoGenOptions& opt) {
    std::uniform_real_distribution<double> U(0, 1);
    double box = opt.box > 0 ? opt.box : 1.6 * std::sqrt((double)opt.objects) + 1;
    std::vector<int> kinds;
    if (opt.disks) kinds.push_back(0);
    if (opt.squares) kinds.push_back(1);
    if (opt.polygons) kinds.push_back(2);
    const double fat_diam = opt.alpha / 4;
    GeoInstance gi;
    int placed_terms = 0, guard = 0;
    while ((int)gi.objs.size() < opt.objects) {
        bool want_term = placed_terms < opt.terminals;
        Point p{U(rng) * box, U(rng) * box};
        int kind = kinds[(size_t)(U(rng) * kinds.size()) % kinds.size()];
        GeometricObject o;
        if (kind == 0) {
            o = GeometricObject::disk(p, opt.disk_rmin + U(rng) * (opt.disk_rmax - opt.disk_rmin));
        } else if (kind == 1) {
            double smax = std::min(fat_diam / std::sqrt(2.0), 1.4);
            o = GeometricObject::axis_square(p, 1 + U(rng) * std::max(0.0, smax - 1));
        } else {
            o = random_fat_polygon(rng, p, std::min(fat_diam, 2.0) * (0.97 + 0.03 * U(rng)));
        }
        if (opt.rational_weights) o.weight = Weight(1 + (long)(U(rng) * opt.max_weight * 3), 3);
        else o.weight = 1 + (long)(U(rng) * opt.max_weight) % opt.max_weight;
        o.weight.canonicalize();
        if (want_term && opt.disjoint_terminals && guard++ < 1000) {
            bool clash = false;
            for (auto& q : gi.objs)
                if (q.terminal && intersects(q, o)) clash = true;
            if (clash) continue;
        }
        o.terminal = want_term;
        if (want_term) placed_terms++;
        gi.objs.push_back(o);
    }
    // shuffle so terminals are not always the low indices
    std::shuffle(gi.objs.begin(), gi.objs.end(), rng);
    return gi;
}

SteinerInstance random_graph_instance(std::mt19937_64& rng, int n, int terminals, double p, int max_weight) {
    std::uniform_real_distribution<double> U(0, 1);
    AdjList adj(n);
    for (int i = 1; i < n; i++) {
        int j = (int)(U(rng) * i);
        adj[i].push_back(j);
        adj[j].push_back(i);
    }
    for (int i = 0; i < n; i++)
        for (int j = i + 1; j < n; j++)
            if (U(rng) < p) {
                adj[i].push_back(j);
                adj[j].push_back(i);
            }
    std::vector<int> idx(n);
    std::iota(idx.begin(), idx.end(), 0);
    std::shuffle(idx.begin(), idx.end(), rng);
    std::vector<char> term(n, 0);
    for (int i = 0; i < std::min(n, terminals); i++) term[idx[i]] = 1;
    std::vector<Weight> w(n);
    for (int i = 0; i < n; i++) w[i] = 1 + (long)(U(rng) * max_weight) % max_weight;
    return make_instance(std::move(adj), std::move(w), std::move(term));
}

}  // namespace stg

namespace stg {

PlanarInstance random_grid_instance(std::mt19937_64& rng, int w, int h, int objects, int terminals, int max_size,
                                    int max_weight) {
    std::uniform_int_distribution<int> V(0, w * h - 1);
    std::uniform_int_distribution<int> Sz(1, max_size);
    std::uniform_int_distribution<int> W(1, max_weight);
    PlanarInstance pi;
    pi.g = Graph(w * h);
    for (int y = 0; y < h; y++)
        for (int x = 0; x < w; x++) {
            int v = y * w + x;
            pi.g.pos[v] = {(double)x, (double)y};
            if (x + 1 < w) pi.g.add_edge(v, v + 1, 1);
            if (y + 1 < h) pi.g.add_edge(v, v + w, 1);
        }
    std::vector<char> term_used(w * h, 0);
    int guard = 0;
    while ((int)pi.objs.size() < objects) {
        bool term = (int)pi.objs.size() < terminals;
        int size = Sz(rng);
        std::vector<int> verts{V(rng)};
        while ((int)verts.size() < size) {
            int v = verts[std::uniform_int_distribution<int>(0, (int)verts.size() - 1)(rng)];
            auto& nb = pi.g.adj[v];
            int u = nb[std::uniform_int_distribution<int>(0, (int)nb.size() - 1)(rng)].first;
            if (std::find(verts.begin(), verts.end(), u) == verts.end()) verts.push_back(u);
        }
        std::sort(verts.begin(), verts.end());
        if (term && guard++ < 1000) {
            bool clash = false;
            for (int v : verts) clash = clash || term_used[v];
            if (clash) continue;
            for (int v : verts) term_used[v] = 1;
        }
        GraphObject o;
        o.verts = verts;
        o.weight = W(rng);
        o.terminal = term;
        pi.objs.push_back(o);
        pi.cls.push_back(ObjClass::fat);
    }
    // distinct representatives, greedily
    std::vector<char> used(w * h, 0);
    for (auto& o : pi.objs) {
        int pick = o.verts[0];
        for (int v : o.verts)
            if (!used[v]) {
                pick = v;
                break;
            }
        used[pick] = 1;
        pi.tau.push_back(pick);
    }
    return pi;
}

}  // namespace stg

namespace stg {

PlanarInstance random_grid_disk_instance(std::mt19937_64& rng, int w, int h, int fat, int disks, int terminals,
                                         double alpha, int max_weight) {
    // fat objects first, grown small enough to keep their diameter within alpha
    int max_size = std::max(1, (int)alpha);
    PlanarInstance pi = random_grid_instance(rng, w, h, fat, terminals, max_size, max_weight);
    for (size_t i = 0; i < pi.objs.size(); i++) {
        while (graph_diameter(pi.g, pi.objs[i].verts) > alpha) {
            auto& vs = pi.objs[i].verts;
            vs.pop_back();
            if (!induced_connected(pi.g, vs)) vs.resize(1);
        }
    }
    pi.r = 4 * alpha;
    std::uniform_int_distribution<int> V(0, w * h - 1);
    std::uniform_int_distribution<int> W(1, max_weight);
    std::vector<char> used(w * h, 0);
    std::vector<int> centers;
    while ((int)centers.size() < disks) {
        int c = V(rng);
        if (used[c]) continue;
        used[c] = 1;
        centers.push_back(c);
        GraphObject o;
        o.verts = dijkstra_ball(pi.g, c, pi.r);
        o.weight = W(rng);
        pi.objs.push_back(o);
        pi.cls.push_back(ObjClass::disk);
    }
    pi.tau.clear();
    for (int i = 0; i < fat; i++) {
        const auto& vs = pi.objs[i].verts;
        int pick = -1;
        for (int v : vs)
            if (!used[v]) {
                pick = v;
                break;
            }
        if (pick < 0) {
            // every vertex is taken by a centre or an earlier representative; move the object to a free vertex
            pick = V(rng);
            while (used[pick]) pick = V(rng);
            pi.objs[i].verts = {pick};
        }
        used[pick] = 1;
        pi.tau.push_back(pick);
    }
    for (int c : centers) pi.tau.push_back(c);
    return pi;
}

}  // namespace stg
