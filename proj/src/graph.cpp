#include "stg/graph.hpp"

#include <algorithm>
#include <cmath>
#include <limits>
#include <queue>
#include <random>
#include <stdexcept>

namespace stg {

int Graph::add_vertex(Point p) {
    adj.emplace_back();
    pos.push_back(p);
    return n++;
}

void Graph::add_edge(int u, int v, double len) {
    if (u < 0 || v < 0 || u >= n || v >= n) throw std::out_of_range("edge endpoint out of range");
    if (!(len >= 0)) throw std::invalid_argument("negative edge length");
    adj[u].push_back({v, len});
    if (u != v) adj[v].push_back({u, len});
}

bool Graph::has_edge(int u, int v) const {
    for (auto& [w, l] : adj[u])
        if (w == v) return true;
    return false;
}

size_t Graph::edge_count() const {
    size_t m = 0;
    for (int v = 0; v < n; v++)
        for (auto& e : adj[v])
            if (e.first >= v) m++;
    return m;
}

bool touch(const GraphObject& a, const GraphObject& b, const Graph& g) {
    std::vector<char> in(g.n, 0);
    for (int v : a.verts) in[v] = 1;
    for (int v : b.verts) {
        if (in[v]) return true;
        for (auto& [w, l] : g.adj[v])
            if (in[w]) return true;
    }
    return false;
}

AdjList touching_graph(const std::vector<GraphObject>& objs, const Graph& g) {
    std::vector<std::vector<int>> owners(g.n);
    for (size_t i = 0; i < objs.size(); i++)
        for (int v : objs[i].verts) owners[v].push_back((int)i);
    AdjList out(objs.size());
    std::vector<int> seen(objs.size(), -1);
    for (size_t i = 0; i < objs.size(); i++) {
        auto mark = [&](int v) {
            for (int j : owners[v])
                if (j != (int)i && seen[j] != (int)i) {
                    seen[j] = (int)i;
                    out[i].push_back(j);
                }
        };
        for (int v : objs[i].verts) {
            mark(v);
            for (auto& [w, l] : g.adj[v]) mark(w);
        }
        std::sort(out[i].begin(), out[i].end());
    }
    return out;
}

std::vector<double> dijkstra(const Graph& g, const std::vector<int>& sources, const std::vector<char>* allowed) {
    const double inf = std::numeric_limits<double>::infinity();
    std::vector<double> d(g.n, inf);
    using QE = std::pair<double, int>;
    std::priority_queue<QE, std::vector<QE>, std::greater<>> pq;
    for (int s : sources) {
        if (s < 0 || s >= g.n) throw std::out_of_range("unknown vertex");
        if (allowed && !(*allowed)[s]) continue;
        d[s] = 0;
        pq.push({0, s});
    }
    while (!pq.empty()) {
        auto [dv, v] = pq.top();
        pq.pop();
        if (dv > d[v]) continue;
        for (auto& [w, l] : g.adj[v]) {
            if (allowed && !(*allowed)[w]) continue;
            if (dv + l < d[w]) {
                d[w] = dv + l;
                pq.push({d[w], w});
            }
        }
    }
    return d;
}

std::vector<int> dijkstra_ball(const Graph& g, int v, double r) {
    if (v < 0 || v >= g.n) throw std::out_of_range("unknown vertex");
    if (r < 0) throw std::invalid_argument("negative radius");
    auto d = dijkstra(g, {v});
    std::vector<int> out;
    for (int u = 0; u < g.n; u++)
        if (d[u] <= r + kEps) out.push_back(u);
    return out;
}

std::vector<std::vector<double>> all_pairs(const Graph& g) {
    std::vector<std::vector<double>> out(g.n);
    for (int v = 0; v < g.n; v++) out[v] = dijkstra(g, {v});
    return out;
}

std::vector<int> shortest_path(const Graph& g, int s, int t, const std::vector<char>& allowed) {
    if (!allowed[s] || !allowed[t]) return {};
    const double inf = std::numeric_limits<double>::infinity();
    // ties on length go to fewer hops, then to the smaller predecessor
    std::vector<std::pair<double, int>> d(g.n, {inf, 0});
    std::vector<int> par(g.n, -1);
    using QE = std::pair<std::pair<double, int>, int>;
    std::priority_queue<QE, std::vector<QE>, std::greater<>> pq;
    d[s] = {0, 0};
    pq.push({d[s], s});
    while (!pq.empty()) {
        auto [dv, v] = pq.top();
        pq.pop();
        if (dv != d[v]) continue;
        for (auto& [w, l] : g.adj[v]) {
            if (!allowed[w]) continue;
            std::pair<double, int> nd{dv.first + l, dv.second + 1};
            if (nd < d[w] || (nd == d[w] && v < par[w])) {
                bool improved = nd < d[w];
                d[w] = nd;
                par[w] = v;
                if (improved) pq.push({nd, w});
            }
        }
    }
    if (d[t].first == inf) return {};
    std::vector<int> path;
    for (int v = t; v != -1; v = (v == s ? -1 : par[v])) path.push_back(v);
    std::reverse(path.begin(), path.end());
    return path;
}

bool induced_connected(const Graph& g, const std::vector<int>& verts) {
    if (verts.empty()) return false;
    std::vector<char> in(g.n, 0), seen(g.n, 0);
    for (int v : verts) in[v] = 1;
    std::vector<int> st{verts[0]};
    seen[verts[0]] = 1;
    size_t cnt = 1;
    while (!st.empty()) {
        int v = st.back();
        st.pop_back();
        for (auto& [w, l] : g.adj[v])
            if (in[w] && !seen[w]) {
                seen[w] = 1;
                cnt++;
                st.push_back(w);
            }
    }
    size_t distinct = 0;
    for (int v = 0; v < g.n; v++) distinct += in[v];
    return cnt == distinct;
}

Graph perturb_lengths(const Graph& g, uint64_t seed) {
    double minpos = std::numeric_limits<double>::infinity();
    for (int v = 0; v < g.n; v++)
        for (auto& [w, l] : g.adj[v])
            if (l > 0) minpos = std::min(minpos, l);
    if (!std::isfinite(minpos)) minpos = 1;
    size_t m = std::max<size_t>(1, g.edge_count());
    // a whole path gains less than minpos * 1e-10 in total
    double scale = minpos * 1e-10 / (double)m;
    std::mt19937_64 rng(seed);
    std::uniform_real_distribution<double> uni(0.5, 1.0);
    Graph out(g.n);
    out.pos = g.pos;
    for (int v = 0; v < g.n; v++)
        for (auto& [w, l] : g.adj[v])
            if (w > v || (w == v)) out.add_edge(v, w, l + scale * uni(rng));
    return out;
}

bool distances_unique(const Graph& g) {
    std::vector<double> all;
    for (int v = 0; v < g.n; v++) {
        auto d = dijkstra(g, {v});
        for (int u = v + 1; u < g.n; u++)
            if (std::isfinite(d[u])) all.push_back(d[u]);
    }
    std::sort(all.begin(), all.end());
    return std::adjacent_find(all.begin(), all.end()) == all.end();
}

std::vector<int> component_labels(const AdjList& g, const std::vector<char>& keep) {
    std::vector<int> lab(g.size(), -1);
    int c = 0;
    for (size_t s = 0; s < g.size(); s++) {
        if (!keep[s] || lab[s] != -1) continue;
        std::vector<int> st{(int)s};
        lab[s] = c;
        while (!st.empty()) {
            int v = st.back();
            st.pop_back();
            for (int w : g[v])
                if (keep[w] && lab[w] == -1) {
                    lab[w] = c;
                    st.push_back(w);
                }
        }
        c++;
    }
    return lab;
}

bool is_critically_connected(const AdjList& g, const std::vector<int>& Y) {
    if (Y.size() < 2) throw std::invalid_argument("need at least two vertices in Y");
    std::vector<char> inY(g.size(), 0), keep(g.size(), 1);
    for (int y : Y) inY[y] = 1;
    for (size_t x = 0; x < g.size(); x++) {
        if (inY[x]) continue;
        keep[x] = 0;
        auto lab = component_labels(g, keep);
        keep[x] = 1;
        std::vector<int> seen;
        for (int y : Y) seen.push_back(lab[y]);
        std::sort(seen.begin(), seen.end());
        if (std::unique(seen.begin(), seen.end()) - seen.begin() < 2) return false;
    }
    return true;
}

Deg3Report check_deg3_bound(const AdjList& g, const std::vector<int>& T) {
    std::vector<char> keep(g.size(), 1);
    auto lab = component_labels(g, keep);
    for (size_t v = 0; v < g.size(); v++)
        if (lab[v] != 0) throw std::invalid_argument("graph is not connected");
    if (!is_critically_connected(g, T)) throw std::invalid_argument("T is not critically connected");
    std::vector<char> inT(g.size(), 0);
    for (int t : T) inT[t] = 1;
    Deg3Report r;
    int t2 = 0;
    for (size_t v = 0; v < g.size(); v++) {
        if (g[v].size() >= 3) r.count++;
        if (inT[v] && g[v].size() == 2) t2++;
    }
    r.bound = 3 * ((int)T.size() - 2) - t2;
    r.holds = r.count <= r.bound;
    return r;
}

}  // namespace stg
