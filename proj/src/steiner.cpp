#include "stg/steiner.hpp"

#include <algorithm>
#include <cstdint>
#include <functional>
#include <limits>
#include <numeric>
#include <optional>
#include <queue>

namespace stg {

std::vector<int> SteinerInstance::terminals() const {
    std::vector<int> out;
    for (int i = 0; i < n; i++)
        if (terminal[i]) out.push_back(i);
    return out;
}

std::vector<int> SteinerInstance::nonterminals() const {
    std::vector<int> out;
    for (int i = 0; i < n; i++)
        if (!terminal[i]) out.push_back(i);
    return out;
}

SteinerInstance make_instance(AdjList adj, std::vector<Weight> w, std::vector<char> term, long k) {
    SteinerInstance inst;
    inst.n = (int)adj.size();
    for (auto& l : adj) {
        std::sort(l.begin(), l.end());
        l.erase(std::unique(l.begin(), l.end()), l.end());
    }
    inst.adj = std::move(adj);
    inst.weight = std::move(w);
    inst.terminal = std::move(term);
    inst.k = k;
    return inst;
}

namespace {

// object adjacency with forest edges added between X members
AdjList augmented(const SteinerInstance& inst) {
    AdjList a = inst.adj;
    for (auto [u, v] : inst.forest) {
        a[u].push_back(v);
        a[v].push_back(u);
    }
    return a;
}

// components of the terminal-only subgraph (terminals touching directly or through F)
std::vector<std::vector<int>> terminal_groups(const SteinerInstance& inst, const AdjList& aug) {
    std::vector<char> keep(inst.n);
    for (int i = 0; i < inst.n; i++) keep[i] = inst.terminal[i];
    auto lab = component_labels(aug, keep);
    int c = 0;
    for (int i = 0; i < inst.n; i++)
        if (keep[i]) c = std::max(c, lab[i] + 1);
    std::vector<std::vector<int>> g(c);
    for (int i = 0; i < inst.n; i++)
        if (keep[i]) g[lab[i]].push_back(i);
    // order groups by smallest member
    std::sort(g.begin(), g.end());
    return g;
}

bool all_integral(const SteinerInstance& inst) {
    mpz_class total = 0;
    for (int i = 0; i < inst.n; i++) {
        if (inst.terminal[i]) continue;
        const Weight& w = inst.weight[i];
        if (w.get_den() != 1) return false;
        total += abs(w.get_num());
    }
    return total < mpz_class("4611686018427387904");
}

template <class C>
std::vector<C> cost_vector(const SteinerInstance& inst) {
    std::vector<C> c(inst.n);
    for (int i = 0; i < inst.n; i++) {
        if (inst.terminal[i]) c[i] = C(0);
        else if constexpr (std::is_same_v<C, int64_t>) c[i] = inst.weight[i].get_num().get_si();
        else c[i] = inst.weight[i];
    }
    return c;
}

Solution finish(const SteinerInstance& inst, std::vector<char>& inset) {
    Solution s;
    s.feasible = true;
    for (int i = 0; i < inst.n; i++)
        if (inset[i] && !inst.terminal[i]) s.chosen.push_back(i);
    s.weight = solution_weight(inst, s.chosen);
    return s;
}

struct Back {
    int8_t type = -1;  // 0 seed, 1 merge, 2 grow
    int a = 0;         // merge: submask, grow: predecessor vertex
    int c1 = 0;        // layered merge: layer of the submask part
};

// Plain DP minimizing (weight, cardinality).
template <class C>
Solution dw_plain(const SteinerInstance& inst, const AdjList& aug, const std::vector<std::vector<int>>& groups) {
    const int n = inst.n, m = (int)groups.size();
    const int full = (1 << m) - 1;
    auto cw = cost_vector<C>(inst);
    using Cost = std::pair<C, int>;
    std::vector<std::optional<Cost>> dp((size_t)(full + 1) * n);
    std::vector<Back> bk((size_t)(full + 1) * n);
    auto at = [&](int mask, int v) -> size_t { return (size_t)mask * n + v; };
    auto step = [&](int v) { return Cost{cw[v], inst.terminal[v] ? 0 : 1}; };

    for (int mask = 1; mask <= full; mask++) {
        if (__builtin_popcount(mask) == 1) {
            int g = __builtin_ctz(mask);
            for (int v : groups[g]) {
                dp[at(mask, v)] = Cost{C(0), 0};
                bk[at(mask, v)] = {0, 0, 0};
            }
        } else {
            for (int v = 0; v < n; v++) {
                for (int sub = (mask - 1) & mask; sub > 0; sub = (sub - 1) & mask) {
                    int rest = mask ^ sub;
                    if (sub < rest) continue;
                    auto& x = dp[at(sub, v)];
                    auto& y = dp[at(rest, v)];
                    if (!x || !y) continue;
                    Cost s = step(v);
                    Cost cand{x->first + y->first - s.first, x->second + y->second - s.second};
                    auto& cur = dp[at(mask, v)];
                    if (!cur || cand < *cur) {
                        cur = cand;
                        bk[at(mask, v)] = {1, sub, 0};
                    }
                }
            }
        }
        using QE = std::pair<Cost, int>;
        std::priority_queue<QE, std::vector<QE>, std::greater<>> pq;
        for (int v = 0; v < n; v++)
            if (dp[at(mask, v)]) pq.push({*dp[at(mask, v)], v});
        while (!pq.empty()) {
            auto [d, v] = pq.top();
            pq.pop();
            if (d != *dp[at(mask, v)]) continue;
            for (int u : aug[v]) {
                Cost s = step(u);
                Cost cand{d.first + s.first, d.second + s.second};
                auto& cur = dp[at(mask, u)];
                if (!cur || cand < *cur) {
                    cur = cand;
                    bk[at(mask, u)] = {2, v, 0};
                    pq.push({cand, u});
                }
            }
        }
    }
    int root = groups[0][0];
    if (!dp[at(full, root)]) return Solution{};
    std::vector<char> inset(n, 0);
    std::function<void(int, int)> rec = [&](int mask, int v) {
        const Back& b = bk[at(mask, v)];
        inset[v] = 1;
        if (b.type == 1) {
            rec(b.a, v);
            rec(mask ^ b.a, v);
        } else if (b.type == 2) {
            rec(mask, b.a);
        }
    };
    rec(full, root);
    for (auto& g : groups)
        for (int v : g) inset[v] = 1;
    return finish(inst, inset);
}

// Layered DP: layer c holds sets with exactly c non-terminals, so a budget k is a layer cap.
template <class C>
Solution dw_layered(const SteinerInstance& inst, const AdjList& aug, const std::vector<std::vector<int>>& groups,
                    int K) {
    const int n = inst.n, m = (int)groups.size();
    const int full = (1 << m) - 1;
    auto cw = cost_vector<C>(inst);
    const size_t layer = (size_t)(full + 1) * n;
    std::vector<std::optional<C>> dp(layer * (K + 1));
    std::vector<Back> bk(layer * (K + 1));
    auto at = [&](int c, int mask, int v) -> size_t { return c * layer + (size_t)mask * n + v; };
    auto nt = [&](int v) { return inst.terminal[v] ? 0 : 1; };

    for (int mask = 1; mask <= full; mask++) {
        for (int c = 0; c <= K; c++) {
            if (__builtin_popcount(mask) == 1) {
                if (c == 0)
                    for (int v : groups[__builtin_ctz(mask)]) {
                        dp[at(0, mask, v)] = C(0);
                        bk[at(0, mask, v)] = {0, 0, 0};
                    }
            } else {
                for (int v = 0; v < n; v++) {
                    for (int sub = (mask - 1) & mask; sub > 0; sub = (sub - 1) & mask) {
                        int rest = mask ^ sub;
                        if (sub < rest) continue;
                        for (int c1 = 0; c1 <= c + nt(v); c1++) {
                            int c2 = c + nt(v) - c1;
                            if (c1 > K || c2 > K) continue;
                            auto& x = dp[at(c1, sub, v)];
                            auto& y = dp[at(c2, rest, v)];
                            if (!x || !y) continue;
                            C cand = *x + *y - cw[v];
                            auto& cur = dp[at(c, mask, v)];
                            if (!cur || cand < *cur) {
                                cur = cand;
                                bk[at(c, mask, v)] = {1, sub, c1};
                            }
                        }
                    }
                }
            }
            // step onto a non-terminal from the previous layer
            if (c > 0)
                for (int v = 0; v < n; v++) {
                    auto& d = dp[at(c - 1, mask, v)];
                    if (!d) continue;
                    for (int u : aug[v]) {
                        if (inst.terminal[u]) continue;
                        C cand = *d + cw[u];
                        auto& cur = dp[at(c, mask, u)];
                        if (!cur || cand < *cur) {
                            cur = cand;
                            bk[at(c, mask, u)] = {2, v, c - 1};
                        }
                    }
                }
            // terminals are free: close the layer under terminal steps
            using QE = std::pair<C, int>;
            std::priority_queue<QE, std::vector<QE>, std::greater<>> pq;
            for (int v = 0; v < n; v++)
                if (dp[at(c, mask, v)]) pq.push({*dp[at(c, mask, v)], v});
            while (!pq.empty()) {
                auto [d, v] = pq.top();
                pq.pop();
                if (d != *dp[at(c, mask, v)]) continue;
                for (int u : aug[v]) {
                    if (!inst.terminal[u]) continue;
                    auto& cur = dp[at(c, mask, u)];
                    if (!cur || d < *cur) {
                        cur = d;
                        bk[at(c, mask, u)] = {2, v, c};
                        pq.push({d, u});
                    }
                }
            }
        }
    }
    int root = groups[0][0];
    int bestc = -1;
    for (int c = 0; c <= K; c++) {
        auto& d = dp[at(c, full, root)];
        if (d && (bestc < 0 || *d < *dp[at(bestc, full, root)])) bestc = c;
    }
    if (bestc < 0) return Solution{};
    std::vector<char> inset(n, 0);
    std::function<void(int, int, int)> rec = [&](int c, int mask, int v) {
        const Back& b = bk[at(c, mask, v)];
        inset[v] = 1;
        if (b.type == 1) {
            rec(b.c1, b.a, v);
            rec(c + nt(v) - b.c1, mask ^ b.a, v);
        } else if (b.type == 2) {
            rec(b.c1, mask, b.a);
        }
    };
    rec(bestc, full, root);
    for (auto& g : groups)
        for (int v : g) inset[v] = 1;
    return finish(inst, inset);
}

}  // namespace

bool connects_terminals(const SteinerInstance& inst, const std::vector<int>& chosen) {
    auto T = inst.terminals();
    if (T.empty()) return true;
    std::vector<char> keep(inst.n, 0), seen(inst.n, 0);
    for (int t : T) keep[t] = 1;
    for (int c : chosen) keep[c] = 1;
    auto aug = augmented(inst);
    std::vector<int> st{T[0]};
    seen[T[0]] = 1;
    while (!st.empty()) {
        int v = st.back();
        st.pop_back();
        for (int u : aug[v])
            if (keep[u] && !seen[u]) {
                seen[u] = 1;
                st.push_back(u);
            }
    }
    for (int t : T)
        if (!seen[t]) return false;
    return true;
}

bool is_feasible(const SteinerInstance& inst, const std::vector<int>& chosen) {
    std::vector<char> dup(inst.n, 0);
    for (int c : chosen) {
        if (c < 0 || c >= inst.n || inst.terminal[c] || dup[c]) return false;
        dup[c] = 1;
    }
    if (inst.k >= 0 && (long)chosen.size() > inst.k) return false;
    return connects_terminals(inst, chosen);
}

Weight solution_weight(const SteinerInstance& inst, const std::vector<int>& chosen) {
    Weight w = 0;
    for (int c : chosen)
        if (!inst.terminal[c]) w += inst.weight[c];
    return w;
}

bool is_minimal(const SteinerInstance& inst, const std::vector<int>& chosen) {
    if (!is_feasible(inst, chosen)) return false;
    for (size_t i = 0; i < chosen.size(); i++) {
        std::vector<int> rest = chosen;
        rest.erase(rest.begin() + i);
        if (connects_terminals(inst, rest)) return false;
    }
    return true;
}

Solution brute_force_optimum(const SteinerInstance& inst, int cap) {
    auto NT = inst.nonterminals();
    if ((int)NT.size() > cap)
        throw CapExceeded("brute force limited to " + std::to_string(cap) + " non-terminal objects");
    const int p = (int)NT.size();
    Solution best;
    std::vector<int> cur;
    for (uint64_t mask = 0; mask < (uint64_t(1) << p); mask++) {
        int card = __builtin_popcountll(mask);
        if (inst.k >= 0 && card > inst.k) continue;
        Weight w = 0;
        cur.clear();
        for (int i = 0; i < p; i++)
            if (mask >> i & 1) {
                w += inst.weight[NT[i]];
                cur.push_back(NT[i]);
            }
        if (best.feasible) {
            if (w > best.weight) continue;
            if (w == best.weight) {
                if (card > (int)best.chosen.size()) continue;
                if (card == (int)best.chosen.size() && !(cur < best.chosen)) continue;
            }
        }
        if (!connects_terminals(inst, cur)) continue;
        best.feasible = true;
        best.chosen = cur;
        best.weight = w;
    }
    return best;
}

Solution dreyfus_wagner(const SteinerInstance& inst, int max_terminals) {
    auto aug = augmented(inst);
    auto groups = terminal_groups(inst, aug);
    if ((int)groups.size() > max_terminals)
        throw CapExceeded("terminal mask wider than " + std::to_string(max_terminals));
    if (groups.size() <= 1) {
        Solution s;
        s.feasible = true;
        return s;
    }
    long nnt = (long)inst.nonterminals().size();
    bool integral = all_integral(inst);
    if (inst.k >= 0 && inst.k < nnt) {
        int K = (int)inst.k;
        return integral ? dw_layered<int64_t>(inst, aug, groups, K) : dw_layered<Weight>(inst, aug, groups, K);
    }
    return integral ? dw_plain<int64_t>(inst, aug, groups) : dw_plain<Weight>(inst, aug, groups);
}

namespace {

struct BnB {
    const SteinerInstance& inst;
    AdjList aug;
    std::vector<char> in, forbidden;
    Weight cur = 0;
    int card = 0;
    Solution best;

    BnB(const SteinerInstance& i) : inst(i), aug(augmented(i)), in(i.n, 0), forbidden(i.n, 0) {
        for (int v = 0; v < i.n; v++) in[v] = i.terminal[v];
    }

    bool beats(const Weight& w, int c) const {
        if (!best.feasible) return true;
        return w < best.weight || (w == best.weight && c < (int)best.chosen.size());
    }

    void run() {
        auto lab = component_labels(aug, in);
        std::vector<int> tcomps;
        for (int v = 0; v < inst.n; v++)
            if (inst.terminal[v]) tcomps.push_back(lab[v]);
        std::sort(tcomps.begin(), tcomps.end());
        tcomps.erase(std::unique(tcomps.begin(), tcomps.end()), tcomps.end());
        if (tcomps.size() <= 1) {
            if (beats(cur, card)) {
                best.feasible = true;
                best.chosen.clear();
                for (int v = 0; v < inst.n; v++)
                    if (in[v] && !inst.terminal[v]) best.chosen.push_back(v);
                best.weight = cur;
            }
            return;
        }
        if (inst.k >= 0 && card >= inst.k) return;

        int C = *std::max_element(lab.begin(), lab.end()) + 1;
        std::vector<int> slot(C, -1);
        for (size_t i = 0; i < tcomps.size(); i++) slot[tcomps[i]] = (int)i;
        std::vector<std::vector<int>> cand(tcomps.size());
        std::vector<int> mark(inst.n, -1);
        for (int v = 0; v < inst.n; v++) {
            if (!in[v] || slot[lab[v]] < 0) continue;
            int s = slot[lab[v]];
            for (int u : aug[v])
                if (!in[u] && !forbidden[u] && mark[u] != s) {
                    mark[u] = s;
                    cand[s].push_back(u);
                }
        }
        for (auto& c : cand)
            if (c.empty()) return;

        // components with pairwise disjoint candidate sets each need their own new object
        std::vector<int> order(cand.size());
        std::iota(order.begin(), order.end(), 0);
        std::sort(order.begin(), order.end(), [&](int a, int b) { return cand[a].size() < cand[b].size(); });
        std::vector<char> used(inst.n, 0);
        Weight lbw = 0;
        int lbc = 0;
        for (int s : order) {
            bool clash = false;
            for (int u : cand[s]) clash |= used[u] != 0;
            if (clash) continue;
            Weight mn = inst.weight[cand[s][0]];
            for (int u : cand[s]) {
                used[u] = 1;
                if (inst.weight[u] < mn) mn = inst.weight[u];
            }
            lbw += mn;
            lbc++;
        }
        if (!beats(cur + lbw, card + lbc)) return;
        if (inst.k >= 0 && card + lbc > inst.k) return;

        // remaining objects must still be able to join every terminal
        std::vector<char> avail(inst.n);
        for (int v = 0; v < inst.n; v++) avail[v] = in[v] || !forbidden[v];
        auto alab = component_labels(aug, avail);
        int first = -1;
        for (int v = 0; v < inst.n; v++)
            if (inst.terminal[v]) {
                if (first < 0) first = alab[v];
                else if (alab[v] != first) return;
            }

        int pick = order[0];
        auto choices = cand[pick];
        std::sort(choices.begin(), choices.end(), [&](int a, int b) {
            return inst.weight[a] < inst.weight[b] || (inst.weight[a] == inst.weight[b] && a < b);
        });
        std::vector<int> banned;
        for (int u : choices) {
            in[u] = 1;
            cur += inst.weight[u];
            card++;
            run();
            card--;
            cur -= inst.weight[u];
            in[u] = 0;
            forbidden[u] = 1;
            banned.push_back(u);
        }
        for (int u : banned) forbidden[u] = 0;
    }
};

}  // namespace

Solution branch_and_bound_optimum(const SteinerInstance& inst) {
    BnB b(inst);
    b.run();
    return b.best;
}

Solution exact_optimum(const SteinerInstance& inst) {
    auto aug = augmented(inst);
    if (terminal_groups(inst, aug).size() <= 12) return dreyfus_wagner(inst);
    return branch_and_bound_optimum(inst);
}

std::vector<std::vector<int>> all_feasible_sets(const SteinerInstance& inst, int cap) {
    auto NT = inst.nonterminals();
    if ((int)NT.size() > cap) throw CapExceeded("enumeration limited to " + std::to_string(cap) + " non-terminals");
    std::vector<std::vector<int>> out;
    for (uint64_t mask = 0; mask < (uint64_t(1) << NT.size()); mask++) {
        if (inst.k >= 0 && __builtin_popcountll(mask) > inst.k) continue;
        std::vector<int> s;
        for (size_t i = 0; i < NT.size(); i++)
            if (mask >> i & 1) s.push_back(NT[i]);
        if (connects_terminals(inst, s)) out.push_back(std::move(s));
    }
    return out;
}

std::vector<std::vector<int>> all_minimal_solutions(const SteinerInstance& inst, int cap) {
    std::vector<std::vector<int>> out;
    for (auto& s : all_feasible_sets(inst, cap))
        if (is_minimal(inst, s)) out.push_back(std::move(s));
    return out;
}

}  // namespace stg
