#include "stg/recursion.hpp"

#include <algorithm>
#include <functional>
#include <map>
#include <numeric>
#include <set>
#include <sstream>

namespace stg {

TripleSource exhaustive_triple_source(int q_max) {
    return [q_max](const SteinerInstance& inst) {
        std::vector<BalancedTriple> out;
        std::vector<std::vector<int>> qs{{}};
        for (int size = 1; size <= q_max; size++) {
            // extend every set of the previous size by a larger index
            std::vector<std::vector<int>> next;
            for (auto& q : qs)
                if ((int)q.size() == size - 1)
                    for (int o = q.empty() ? 0 : q.back() + 1; o < inst.n; o++) {
                        auto e = q;
                        e.push_back(o);
                        next.push_back(e);
                    }
            qs.insert(qs.end(), next.begin(), next.end());
        }
        for (auto& q : qs) {
            std::vector<int> rest;
            for (int t : inst.terminals())
                if (!std::binary_search(q.begin(), q.end(), t)) rest.push_back(t);
            if (rest.size() > 20) throw CapExceeded("too many terminals for exhaustive triples");
            // the first remaining terminal always sits in T1; the mirrored triple is equivalent
            long half = rest.empty() ? 1 : 1L << (rest.size() - 1);
            for (long mask = 0; mask < half; mask++) {
                BalancedTriple tr;
                tr.Q = q;
                for (size_t i = 0; i < rest.size(); i++)
                    (i > 0 && (mask >> (i - 1) & 1) ? tr.T2 : tr.T1).push_back(rest[i]);
                out.push_back(tr);
            }
        }
        return out;
    };
}

namespace {

// partition of xs as labels 0.. in order of first appearance
std::vector<int> canonical(std::vector<int> lab) {
    std::map<int, int> ren;
    for (int& l : lab) {
        auto it = ren.find(l);
        if (it == ren.end()) it = ren.emplace(l, (int)ren.size()).first;
        l = it->second;
    }
    return lab;
}

std::vector<int> forest_partition(const std::vector<int>& xs, const std::vector<std::pair<int, int>>& forest) {
    std::vector<int> lab(xs.size());
    std::iota(lab.begin(), lab.end(), 0);
    auto idx = [&](int v) { return (int)(std::lower_bound(xs.begin(), xs.end(), v) - xs.begin()); };
    auto find = [&](int a) {
        while (lab[a] != a) a = lab[a] = lab[lab[a]];
        return a;
    };
    for (auto [a, b] : forest) lab[find(idx(a))] = find(idx(b));
    for (size_t i = 0; i < xs.size(); i++) lab[i] = find((int)i);
    return canonical(lab);
}

std::vector<std::pair<int, int>> partition_forest(const std::vector<int>& xs, const std::vector<int>& lab) {
    std::vector<std::pair<int, int>> f;
    std::map<int, int> last;
    for (size_t i = 0; i < xs.size(); i++) {
        auto it = last.find(lab[i]);
        if (it != last.end()) f.push_back({xs[it->second], xs[i]});
        last[lab[i]] = (int)i;
    }
    return f;
}

// coarsest common refinement's opposite: blocks joined when either partition joins them
std::vector<int> join(const std::vector<int>& a, const std::vector<int>& b) {
    std::vector<int> p(a.size());
    std::iota(p.begin(), p.end(), 0);
    std::function<int(int)> find = [&](int x) { return p[x] == x ? x : p[x] = find(p[x]); };
    for (size_t i = 0; i < a.size(); i++)
        for (size_t j = i + 1; j < a.size(); j++)
            if (a[i] == a[j] || b[i] == b[j]) p[find((int)i)] = find((int)j);
    std::vector<int> lab(a.size());
    for (size_t i = 0; i < a.size(); i++) lab[i] = find((int)i);
    return canonical(lab);
}

// every partition of xs that coarsens base
std::vector<std::vector<int>> coarsenings(const std::vector<int>& base) {
    int blocks = base.empty() ? 0 : *std::max_element(base.begin(), base.end()) + 1;
    std::vector<std::vector<int>> out;
    std::vector<int> rgs(blocks, 0);
    // restricted growth strings over the blocks
    auto rec = [&](auto&& self, int i, int used) -> void {
        if (i == blocks) {
            std::vector<int> lab(base.size());
            for (size_t j = 0; j < base.size(); j++) lab[j] = rgs[base[j]];
            out.push_back(canonical(lab));
            return;
        }
        for (int c = 0; c <= used; c++) {
            rgs[i] = c;
            self(self, i + 1, std::max(used, c + 1));
        }
    };
    if (blocks == 0) return {{}};
    rgs[0] = 0;
    rec(rec, 1, 1);
    return out;
}

std::string show(const std::vector<int>& v) {
    std::ostringstream os;
    os << "{";
    for (size_t i = 0; i < v.size(); i++) os << (i ? "," : "") << v[i];
    os << "}";
    return os.str();
}

bool better(const Solution& a, const Solution& b) {
    if (!a.feasible) return false;
    if (!b.feasible) return true;
    if (a.weight != b.weight) return a.weight < b.weight;
    return a.chosen.size() < b.chosen.size();
}

// Non-terminals any solution needs: every terminal group must reach some other group, and the
// cheapest way out of a group passes through at least this many non-terminals.
long cardinality_lower_bound(const SteinerInstance& s) {
    AdjList adj = s.adj;
    for (auto [a, b] : s.forest) adj[a].push_back(b), adj[b].push_back(a);
    auto lab = component_labels(adj, s.terminal);
    std::set<int> groups;
    for (int t : s.terminals()) groups.insert(lab[t]);
    if (groups.size() <= 1) return 0;
    long lb = 0;
    for (int gr : groups) {
        // BFS over non-terminals; hop count = non-terminals used so far
        std::vector<int> dist(s.n, -1);
        std::vector<int> q;
        for (int v = 0; v < s.n; v++)
            if (s.terminal[v] && lab[v] == gr) dist[v] = 0, q.push_back(v);
        long out = -1;
        for (size_t i = 0; i < q.size() && out < 0; i++) {
            int v = q[i];
            for (int w : adj[v]) {
                if (s.terminal[w]) {
                    if (lab[w] != gr) {
                        out = dist[v];
                        break;
                    }
                    continue;
                }
                if (dist[w] < 0) dist[w] = dist[v] + 1, q.push_back(w);
            }
        }
        if (out < 0) return s.n + 1;  // this group can never be joined
        lb = std::max(lb, out);
    }
    return lb;
}

struct Solver {
    const TripleSource& source;
    const RecursionOptions& opt;
    RecursionStats& st;
    const std::vector<GraphObject>* objs;  // vertex sets, when known
    std::map<std::vector<long>, Solution> memo;

    std::vector<long> key(const SteinerInstance& s) const {
        std::vector<long> k;
        long word = 0;
        for (int v = 0; v < s.n; v++) {
            if (s.terminal[v]) word |= 1L << (v % 62);
            if (v % 62 == 61 || v + 1 == s.n) k.push_back(word), word = 0;
        }
        k.push_back(s.k);
        k.insert(k.end(), s.xset.begin(), s.xset.end());
        auto part = forest_partition(s.xset, s.forest);
        k.insert(k.end(), part.begin(), part.end());
        return k;
    }

    // terminals outside X whose vertices other terminals already cover are not needed
    SteinerInstance drop_covered(SteinerInstance s) const {
        if (!objs) return s;
        for (;;) {
            std::map<int, int> cover;
            for (int t : s.terminals())
                for (int v : (*objs)[t].verts) cover[v]++;
            int drop = -1;
            for (int t : s.terminals()) {
                if (std::binary_search(s.xset.begin(), s.xset.end(), t)) continue;
                bool own = false;
                for (int v : (*objs)[t].verts) own = own || cover[v] == 1;
                if (!own) {
                    drop = t;
                    break;
                }
            }
            if (drop < 0) return s;
            s.terminal[drop] = 0;
        }
    }

    // s.xset must be sorted
    Solution solve(const SteinerInstance& s, int depth) {
        st.calls++;
        st.max_depth = std::max(st.max_depth, depth);
        auto k0 = key(s);
        if (auto it = memo.find(k0); it != memo.end()) {
            st.memo_hits++;
            return it->second;
        }
        Solution best;
        if (connects_terminals(s, {})) {
            best.feasible = true;
        } else if (cardinality_lower_bound(s) > s.k) {
            st.pruned++;
        } else if (s.k <= opt.base_k) {
            st.base_cases++;
            best = exact_optimum(s);
        } else {
            best = branch(drop_covered(s), s, depth);
        }
        memo[k0] = best;
        return best;
    }

    Solution branch(const SteinerInstance& s, const SteinerInstance& orig, int depth) {
        Solution best;
        mpz_class fl = (opt.beta.get_num() * s.k) / opt.beta.get_den();
        const long kb_cap = fl.get_si();
        auto xbase = forest_partition(s.xset, s.forest);
        for (auto& tr : source(s)) {
            st.triples++;
            std::vector<int> qn;
            for (int q : tr.Q)
                if (!s.terminal[q]) qn.push_back(q);
            long kr = s.k - (long)qn.size();
            if (kr < 0) continue;
            Weight pay = 0;
            for (int q : qn) pay += s.weight[q];
            if (best.feasible && pay >= best.weight) continue;
            std::vector<int> X2 = s.xset;
            X2.insert(X2.end(), tr.Q.begin(), tr.Q.end());
            std::sort(X2.begin(), X2.end());
            X2.erase(std::unique(X2.begin(), X2.end()), X2.end());
            if ((int)X2.size() > opt.x_cap) continue;
            long kb = std::min(kr, kb_cap);
            // old forest blocks, new members as singletons
            std::vector<int> base(X2.size());
            for (size_t i = 0; i < X2.size(); i++) {
                auto it = std::lower_bound(s.xset.begin(), s.xset.end(), X2[i]);
                base[i] = (it != s.xset.end() && *it == X2[i]) ? xbase[it - s.xset.begin()] : (int)s.xset.size() + (int)i;
            }
            base = canonical(base);
            auto side = [&](const std::vector<int>& Tside) {
                SteinerInstance sub = s;
                std::fill(sub.terminal.begin(), sub.terminal.end(), 0);
                for (int t : Tside) sub.terminal[t] = 1;
                for (int x : X2) sub.terminal[x] = 1;
                sub.xset = X2;
                return sub;
            };
            SteinerInstance sub1 = side(tr.T1), sub2 = side(tr.T2);
            // different guesses often lead to the same first half and the same second subproblem
            std::set<std::pair<std::vector<int>, std::vector<int>>> tried;
            for (auto& P : coarsenings(base)) {
                sub1.forest = partition_forest(X2, P);
                std::vector<int> prev{-1};
                for (long k1 = cardinality_lower_bound(sub1); k1 <= kb; k1++) {
                    sub1.k = k1;
                    auto s1 = solve(sub1, depth + 1);
                    if (!s1.feasible || s1.chosen == prev) continue;
                    prev = s1.chosen;
                    // the union contains S1 and the new Q members, so it cannot beat best if these already weigh more
                    if (best.feasible) {
                        std::set<int> part(qn.begin(), qn.end());
                        for (int c : s1.chosen)
                            if (!orig.terminal[c]) part.insert(c);
                        Weight w = 0;
                        for (int c : part) w += orig.weight[c];
                        if (w > best.weight) continue;
                    }
                    // how the first side joins the members of X2
                    std::vector<char> keep(s.n, 0);
                    for (int v = 0; v < s.n; v++) keep[v] = sub1.terminal[v];
                    for (int c : s1.chosen) keep[c] = 1;
                    auto lab = component_labels(s.adj, keep);
                    std::vector<int> fa(X2.size());
                    for (size_t i = 0; i < X2.size(); i++) fa[i] = lab[X2[i]];
                    fa = join(canonical(fa), base);
                    long k2 = std::min(kb, kr - (long)s1.chosen.size());
                    if (k2 < 0) continue;
                    auto tag = s1.chosen;
                    tag.push_back(-1 - (int)k2);
                    if (!tried.insert({tag, fa}).second) continue;
                    sub2.forest = partition_forest(X2, fa);
                    sub2.k = k2;
                    auto s2 = solve(sub2, depth + 1);
                    if (!s2.feasible) continue;
                    std::set<int> u(qn.begin(), qn.end());
                    for (int c : s1.chosen)
                        if (!orig.terminal[c]) u.insert(c);
                    for (int c : s2.chosen)
                        if (!orig.terminal[c]) u.insert(c);
                    Solution cand;
                    cand.chosen.assign(u.begin(), u.end());
                    // the union is re-checked against the full subinstance before it is accepted
                    if (!is_feasible(orig, cand.chosen)) continue;
                    cand.feasible = true;
                    cand.weight = solution_weight(orig, cand.chosen);
                    if (better(cand, best)) {
                        best = cand;
                        if (opt.trace)
                            st.trace.push_back("depth " + std::to_string(depth) + " k=" + std::to_string(s.k) +
                                               " |T|=" + std::to_string(s.terminals().size()) + " |X|=" +
                                               std::to_string(s.xset.size()) + " Q=" + show(tr.Q) + " T1=" +
                                               show(tr.T1) + " T2=" + show(tr.T2) + " weight=" + weight_str(best.weight));
                    }
                }
            }
        }
        return best;
    }
};

}  // namespace

Solution recursion_solve(const SteinerInstance& inst, const TripleSource& source, const RecursionOptions& opt,
                         RecursionStats* stats) {
    RecursionStats local;
    Solver sv{source, opt, stats ? *stats : local, nullptr, {}};
    SteinerInstance s = inst;
    if (s.k < 0) s.k = (long)s.nonterminals().size();
    std::sort(s.xset.begin(), s.xset.end());
    return sv.solve(s, 0);
}

Solution recursion_solve(const PlanarInstance& pi, double alpha, const TripleSource& source,
                         const RecursionOptions& opt, RecursionStats* stats) {
    (void)alpha;  // the exhaustive source needs no geometry; custom sources may capture alpha themselves
    RecursionStats local;
    Solver sv{source, opt, stats ? *stats : local, &pi.objs, {}};
    SteinerInstance s = to_steiner(pi);
    if (s.k < 0) s.k = (long)s.nonterminals().size();
    std::sort(s.xset.begin(), s.xset.end());
    return sv.solve(s, 0);
}

}  // namespace stg
