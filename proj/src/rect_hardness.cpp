#include "stg/rect_hardness.hpp"

#include <algorithm>
#include <functional>
#include <set>
#include <stdexcept>

namespace stg {

static std::vector<std::vector<int>> neighbours(const SimpleGraph& g) {
    std::vector<std::vector<int>> nb(g.n);
    for (auto [u, v] : g.edges) nb[u].push_back(v), nb[v].push_back(u);
    for (auto& l : nb) std::sort(l.begin(), l.end());
    return nb;
}

bool is_cubic(const SimpleGraph& g) {
    std::set<std::pair<int, int>> seen;
    for (auto [u, v] : g.edges) {
        if (u == v || u < 0 || v < 0 || u >= g.n || v >= g.n) return false;
        if (!seen.insert({std::min(u, v), std::max(u, v)}).second) return false;
    }
    for (auto& l : neighbours(g))
        if (l.size() != 3) return false;
    return g.n > 0;
}

namespace {

std::vector<int> invariant(const SimpleGraph& g) {
    auto nb = neighbours(g);
    std::vector<int> tri(g.n, 0);
    for (int v = 0; v < g.n; v++)
        for (int a : nb[v])
            for (int b : nb[v])
                if (a < b && std::binary_search(nb[a].begin(), nb[a].end(), b)) tri[v]++;
    std::sort(tri.begin(), tri.end());
    // component sizes
    std::vector<int> comp(g.n, -1), sizes;
    for (int s = 0; s < g.n; s++) {
        if (comp[s] >= 0) continue;
        int cnt = 0;
        std::vector<int> st{s};
        comp[s] = s;
        while (!st.empty()) {
            int u = st.back();
            st.pop_back();
            cnt++;
            for (int v : nb[u])
                if (comp[v] < 0) comp[v] = s, st.push_back(v);
        }
        sizes.push_back(cnt);
    }
    std::sort(sizes.begin(), sizes.end());
    tri.push_back(-1);
    tri.insert(tri.end(), sizes.begin(), sizes.end());
    return tri;
}

bool isomorphic(const SimpleGraph& a, const SimpleGraph& b) {
    if (a.n != b.n || a.edges.size() != b.edges.size()) return false;
    int n = a.n;
    std::vector<std::vector<char>> A(n, std::vector<char>(n, 0)), B = A;
    for (auto [u, v] : a.edges) A[u][v] = A[v][u] = 1;
    for (auto [u, v] : b.edges) B[u][v] = B[v][u] = 1;
    std::vector<int> map(n, -1);
    std::vector<char> used(n, 0);
    std::function<bool(int)> rec = [&](int v) {
        if (v == n) return true;
        for (int w = 0; w < n; w++) {
            if (used[w]) continue;
            bool ok = true;
            for (int u = 0; u < v && ok; u++) ok = A[v][u] == B[w][map[u]];
            if (!ok) continue;
            map[v] = w, used[w] = 1;
            if (rec(v + 1)) return true;
            used[w] = 0;
        }
        return false;
    };
    return rec(0);
}

}  // namespace

std::vector<SimpleGraph> cubic_graphs(int n) {
    if (n < 4 || n % 2) return {};
    std::vector<SimpleGraph> reps;
    std::vector<std::vector<int>> invs;
    std::vector<int> deg(n, 0);
    std::vector<std::vector<char>> adj(n, std::vector<char>(n, 0));
    SimpleGraph cur;
    cur.n = n;
    // edges are added in lexicographic order from the smallest vertex still short of degree 3
    std::function<void()> rec = [&]() {
        int v = 0;
        while (v < n && deg[v] == 3) v++;
        if (v == n) {
            auto inv = invariant(cur);
            for (size_t r = 0; r < reps.size(); r++)
                if (invs[r] == inv && isomorphic(reps[r], cur)) return;
            reps.push_back(cur);
            invs.push_back(inv);
            return;
        }
        int lo = v + 1;
        if (!cur.edges.empty() && cur.edges.back().first == v) lo = cur.edges.back().second + 1;
        for (int u = lo; u < n; u++) {
            if (deg[u] == 3 || adj[v][u]) continue;
            adj[v][u] = adj[u][v] = 1, deg[v]++, deg[u]++;
            cur.edges.push_back({v, u});
            rec();
            cur.edges.pop_back();
            adj[v][u] = adj[u][v] = 0, deg[v]--, deg[u]--;
        }
    };
    rec();
    return reps;
}

std::vector<int> min_vertex_cover(const SimpleGraph& g) {
    if (g.n > 24) throw CapExceeded("min_vertex_cover limited to 24 vertices");
    std::vector<int> best;
    int best_size = g.n + 1;
    for (uint32_t mask = 0; mask < (1u << g.n); mask++) {
        int size = __builtin_popcount(mask);
        if (size >= best_size) continue;
        bool ok = true;
        for (auto [u, v] : g.edges) ok = ok && (((mask >> u) & 1) || ((mask >> v) & 1));
        if (!ok) continue;
        best_size = size;
        best.clear();
        for (int v = 0; v < g.n; v++)
            if ((mask >> v) & 1) best.push_back(v);
    }
    return best;
}

std::string Special3SC::element_name(int e) const {
    if (e < n) return "a" + std::to_string(e + 1);
    int t = (e - n) / 4, r = (e - n) % 4;
    return std::string(1, "wxyz"[r]) + std::to_string(t + 1);
}

Special3SC vc3_to_special3sc(const SimpleGraph& gin) {
    if (!is_cubic(gin)) throw std::invalid_argument("vc3_to_special3sc: graph is not simple and 3-regular");
    SimpleGraph g = gin;
    for (auto& [u, v] : g.edges)
        if (u > v) std::swap(u, v);
    std::sort(g.edges.begin(), g.edges.end());
    Special3SC s;
    s.n = (int)g.edges.size();
    s.m = g.n;
    std::vector<std::vector<int>> inc(g.n);
    for (int e = 0; e < s.n; e++) inc[g.edges[e].first].push_back(e), inc[g.edges[e].second].push_back(e);
    for (int t = 0; t < g.n; t++) {
        int i = inc[t][0], j = inc[t][1], k = inc[t][2];
        int w = s.n + 4 * t, x = w + 1, y = w + 2, z = w + 3;
        s.sets.push_back({i, w});
        s.sets.push_back({w, x});
        s.sets.push_back({j, x, y});
        s.sets.push_back({y, z});
        s.sets.push_back({k, z});
    }
    return s;
}

std::vector<int> cover_from_vertex_cover(const Special3SC& s, const std::vector<int>& vc) {
    std::vector<char> in(s.m, 0);
    for (int v : vc) in.at(v) = 1;
    std::vector<int> out;
    for (int t = 0; t < s.m; t++) {
        int b = 5 * t;
        if (in[t]) out.insert(out.end(), {b, b + 2, b + 4});
        else out.insert(out.end(), {b + 1, b + 3});
    }
    return out;
}

std::vector<int> vertex_cover_from_cover(const Special3SC& s, const std::vector<int>& cover) {
    std::set<int> vs;
    for (int c : cover)
        if (c % 5 == 0 || c % 5 == 2 || c % 5 == 4) vs.insert(c / 5);
    return {vs.begin(), vs.end()};
}

bool is_set_cover(int universe, const std::vector<std::vector<int>>& sets, const std::vector<int>& chosen) {
    std::vector<char> cov(universe, 0);
    for (int c : chosen)
        for (int e : sets.at(c)) cov.at(e) = 1;
    return std::all_of(cov.begin(), cov.end(), [](char c) { return c; });
}

std::vector<int> min_set_cover(int universe, const std::vector<std::vector<int>>& sets) {
    std::vector<std::vector<int>> holders(universe);
    for (int s = 0; s < (int)sets.size(); s++)
        for (int e : sets[s]) holders.at(e).push_back(s);
    for (auto& h : holders)
        if (h.empty()) throw std::invalid_argument("min_set_cover: element in no set");
    std::vector<int> cnt(universe, 0), cur, best;
    int best_size = (int)sets.size() + 1;
    std::function<void()> rec = [&]() {
        if ((int)cur.size() >= best_size) return;
        int pick = -1;
        for (int e = 0; e < universe; e++)
            if (!cnt[e] && (pick < 0 || holders[e].size() < holders[pick].size())) pick = e;
        if (pick < 0) {
            best = cur, best_size = (int)cur.size();
            return;
        }
        if ((int)cur.size() + 1 >= best_size) return;
        for (int s : holders[pick]) {
            cur.push_back(s);
            for (int e : sets[s]) cnt[e]++;
            rec();
            for (int e : sets[s]) cnt[e]--;
            cur.pop_back();
        }
    };
    rec();
    std::sort(best.begin(), best.end());
    return best;
}

RectInstance special3sc_to_rects(const Special3SC& s, const Weight& eps) {
    if (eps <= 0 || eps > 1) throw std::invalid_argument("special3sc_to_rects: epsilon must lie in (0, 1]");
    RectInstance r;
    r.epsilon = eps;
    r.Delta = eps / (20 * s.n * s.n);
    r.Delta.canonicalize();
    const Weight& D = r.Delta;
    r.points.resize(s.universe());
    for (int i = 1; i <= s.n; i++) r.points[i - 1] = {Weight(1 + i * D), Weight(i * D - 1)};
    // B is ordered w_1, x_1, y_1, z_1, w_2, ...; element n + 4(t-1) + q - 1 gets index c = 4t + q
    auto bindex = [&](int e) { return 4 * ((e - s.n) / 4 + 1) + (e - s.n) % 4 + 1; };
    for (int e = s.n; e < s.universe(); e++) {
        int c = bindex(e);
        r.points[e] = {Weight(c * D - 1), Weight(c * D + 1)};
    }
    for (auto& set : s.sets) {
        int cmin = 1 << 30, cmax = -1, a = 0;
        for (int e : set) {
            if (e < s.n) a = e + 1;
            else cmin = std::min(cmin, bindex(e)), cmax = std::max(cmax, bindex(e));
        }
        if (cmax < 0) throw std::invalid_argument("special3sc_to_rects: set without a B element");
        QRect q{Weight(cmin * D - 1), a ? Weight(a * D - 1) : Weight(-1), a ? Weight(1 + a * D) : Weight(1),
                Weight(1 + cmax * D)};
        r.rects.push_back(q);
    }
    Weight least = 0;
    for (auto& q : r.rects)
        for (const Weight& side : {Weight(q.x1 - q.x0), Weight(q.y1 - q.y0)})
            if (least == 0 || side < least) least = side;
    r.scale = 1 / least;
    r.scale.canonicalize();
    return r;
}

std::vector<QRect> RectInstance::normalized() const {
    std::vector<QRect> out;
    for (auto& q : rects) out.push_back({q.x0 * scale, q.y0 * scale, q.x1 * scale, q.y1 * scale});
    return out;
}

std::vector<QPoint> RectInstance::normalized_points() const {
    std::vector<QPoint> out;
    for (auto& p : points) out.push_back({p.x * scale, p.y * scale});
    return out;
}

std::vector<std::vector<char>> incidence(const RectInstance& r) {
    std::vector<std::vector<char>> inc(r.points.size(), std::vector<char>(r.rects.size(), 0));
    for (size_t e = 0; e < r.points.size(); e++)
        for (size_t q = 0; q < r.rects.size(); q++) inc[e][q] = r.rects[q].contains(r.points[e]);
    return inc;
}

SteinerInstance rect_steiner(const RectInstance& r) {
    int P = (int)r.points.size(), R = (int)r.rects.size();
    AdjList adj(P + R);
    auto inc = incidence(r);
    for (int e = 0; e < P; e++)
        for (int q = 0; q < R; q++)
            if (inc[e][q]) adj[e].push_back(P + q), adj[P + q].push_back(e);
    for (int a = 0; a < R; a++)
        for (int b = a + 1; b < R; b++) {
            auto& A = r.rects[a];
            auto& B = r.rects[b];
            if (A.x0 <= B.x1 && B.x0 <= A.x1 && A.y0 <= B.y1 && B.y0 <= A.y1)
                adj[P + a].push_back(P + b), adj[P + b].push_back(P + a);
        }
    for (auto& l : adj) std::sort(l.begin(), l.end());
    std::vector<char> term(P + R, 0);
    std::fill(term.begin(), term.begin() + P, 1);
    return make_instance(adj, std::vector<Weight>(P + R, 1), term);
}

}  // namespace stg
