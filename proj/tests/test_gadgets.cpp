#include "doctest.h"
#include "stg/gadgets.hpp"

#include <chrono>
#include <functional>
#include <random>
#include <set>

using namespace stg;

static GridTilingInstance monotone(int x, int y, int N, std::vector<std::vector<std::vector<TileValue>>> sets) {
    GridTilingInstance g;
    g.x = x, g.y = y, g.N = N;
    g.variant = TilingVariant::monotone;
    g.sets = std::move(sets);
    return g;
}

static GridTilingInstance random_monotone(std::mt19937_64& rng, int x, int y, int N) {
    GridTilingInstance g = monotone(x, y, N, {});
    g.sets.assign(x, std::vector<std::vector<TileValue>>(y));
    for (auto& r : g.sets)
        for (auto& s : r) {
            for (int a = 0; a < 2; a++)
                for (int b = 1; b <= N; b++)
                    if (rng() % 2 == 0) s.push_back({a, b});
            if (s.empty()) s.push_back({(int)(rng() % 2), 1 + (int)(rng() % N)});
        }
    return g;
}

static std::vector<TilingWitness> all_witnesses(const GridTilingInstance& g) {
    std::vector<TilingWitness> out;
    TilingWitness w(g.x, std::vector<TileValue>(g.y));
    std::function<void(int)> rec = [&](int c) {
        if (c == g.x * g.y) {
            if (is_consistent(g, w)) out.push_back(w);
            return;
        }
        for (auto v : g.sets[c / g.y][c % g.y]) w[c / g.y][c % g.y] = v, rec(c + 1);
    };
    rec(0);
    return out;
}

static Weight ratio(long a, long b) {
    Weight r(a, b);
    r.canonicalize();
    return r;
}

static bool connected(const std::vector<UnitSquare>& sq, long unit, const std::vector<int>& subset) {
    return touching_components(sq, unit, subset).size() == 1;
}

TEST_CASE("parameters and exact constants") {
    auto p = default_params(2);
    CHECK(p.omega == 11);
    CHECK(p.h == 8 * p.omega + 11);
    CHECK(p.h == 99);
    CHECK(p.gamma_q() == Weight(1, 20));
    CHECK(p.delta_q() == Weight(1, 100));
    // the scaled integers agree with the rationals
    CHECK(ratio(p.gamma(), p.unit()) == p.gamma_q());
    CHECK(ratio(p.delta(), p.unit()) == p.delta_q());
    CHECK(p.gamma_q() * p.N < 1);
    for (int N = 1; N <= 64; N++) CHECK(reach_bound_holds(default_params(N)));
    GadgetParams bad = p;
    bad.omega = 9;
    CHECK_THROWS_AS(validate_params(bad), std::invalid_argument);
    bad = p;
    bad.h = 98;
    CHECK_THROWS_AS(validate_params(bad), std::invalid_argument);
}

TEST_CASE("block coordinates") {
    auto p = default_params(10);
    long D = p.unit();
    auto b = block(p, {{0, 1}});
    REQUIRE(b.squares.size() == 1);
    CHECK(b.squares[0].x == 0);
    CHECK(b.squares[0].y == 0);
    // (1,1) sits at (0, 0.01) and (1,5) at (0.04, 0.01)
    b = block(p, {{1, 1}, {1, 5}});
    CHECK(ratio(b.squares[b.g.sigma[0].at({1, 1})].x, D) == 0);
    CHECK(ratio(b.squares[b.g.sigma[0].at({1, 1})].y, D) == Weight(1, 100));
    CHECK(ratio(b.squares[b.g.sigma[0].at({1, 5})].x, D) == ratio(4, 100));
    CHECK(ratio(b.squares[b.g.sigma[0].at({1, 5})].y, D) == Weight(1, 100));
    CHECK_THROWS_AS(block(p, {}), std::invalid_argument);
    CHECK_THROWS_AS(block(p, {{0, 11}}), std::invalid_argument);
    // every pair in one block overlaps
    auto full = block(p, {{0, 1}, {0, 10}, {1, 1}, {1, 10}});
    for (auto& s : full.squares)
        for (auto& t : full.squares) CHECK(touches(s, t, D));
}

TEST_CASE("wire gadget") {
    auto p = default_params(2);
    auto w = wire_gadget(p, {{1, 2}});
    CHECK(w.squares.size() == 20u);
    CHECK(w.g.interfaces.size() == 2u);

    std::mt19937_64 rng(5);
    for (int it = 0; it < 20; it++) {
        auto q = default_params(1 + (int)(rng() % 6));
        std::vector<TileValue> S;
        for (int a = 0; a < 2; a++)
            for (int b = 1; b <= q.N; b++)
                if (rng() % 2) S.push_back({a, b});
        if (S.empty()) S.push_back({0, q.N});
        auto g = wire_gadget(q, S);
        CHECK(g.squares.size() == 2 * S.size() + (size_t)(q.omega - 2) * q.N);
        for (auto v : S) {
            auto chain = wire_chain(g.g, v);
            CHECK(chain.size() == (size_t)q.omega);
            CHECK(connected(g.squares, q.unit(), chain));
        }
        CHECK_THROWS_AS(wire_chain(g.g, {0, q.N + 1}), std::invalid_argument);
        // middle blocks only reach their neighbours
        auto adj = touching_graph(g.squares, q.unit());
        for (int b = 1; b + 1 < q.omega; b++)
            for (auto& [key, s] : g.g.sigma[b])
                for (int t : adj[s]) {
                    bool ok = false;
                    for (int c = b - 1; c <= b + 1; c++)
                        for (auto& [k2, s2] : g.g.sigma[c]) ok |= s2 == t;
                    CHECK(ok);
                }
    }

    // exhaustive minimum B1 -> B_omega connectors
    auto check_min = [&](const GadgetParams& q, std::vector<TileValue> S) {
        auto g = wire_gadget(q, S);
        std::vector<int> all(g.squares.size());
        for (int i = 0; i < (int)all.size(); i++) all[i] = i;
        std::set<int> first, last;
        for (auto& [k, s] : g.g.sigma.front()) first.insert(s);
        for (auto& [k, s] : g.g.sigma.back()) last.insert(s);
        auto mins = smallest_subsets(all, q.omega, [&](const std::vector<int>& h) {
            bool f = false, l = false;
            for (int s : h) f |= first.count(s) > 0, l |= last.count(s) > 0;
            return f && l && connected(g.squares, q.unit(), h);
        });
        REQUIRE_FALSE(mins.empty());
        CHECK(mins[0].size() == (size_t)q.omega);
        for (auto& h : mins) {
            std::vector<int> per(q.omega, 0);
            for (int s : h)
                for (int b = 0; b < q.omega; b++) per[b] += (int)std::count_if(g.g.sigma[b].begin(), g.g.sigma[b].end(), [&](auto& e) { return e.second == s; });
            for (int b = 0; b < q.omega; b++) CHECK(per[b] == 1);
        }
        return mins.size();
    };
    CHECK(check_min(default_params(1), {{0, 1}}) == 1);
    CHECK(check_min(default_params(2), {{1, 1}}) == 1);
    // two values: chains are the minimum ones, plus mixed chains that step down in b
    CHECK(check_min(default_params(2), {{0, 2}, {1, 1}}) >= 2);
}

TEST_CASE("crossing gadget structure") {
    auto p = default_params(2);
    long D = p.unit();
    auto c = crossing_gadget(p);
    auto& g = c.g;
    CHECK(g.part("Omega1").size() == 48u);
    for (int i = 1; i <= 4; i++) CHECK(g.part("Omega" + std::to_string(i)).size() == (size_t)(p.h - 3) / 2);
    CHECK(g.part("Omega5").size() == 98u);
    for (int i = 5; i <= 8; i++) CHECK(g.part("Omega" + std::to_string(i)).size() == (size_t)(p.omega - 3) * (p.h - 1) / 8);
    CHECK(g.part("Delta1").size() == 294u);
    CHECK(g.part("Delta2").size() == 294u);
    CHECK(g.part("Delta1").size() == (size_t)(p.omega + 1) * (p.h - 1) / 4);
    CHECK(c.squares.size() == 4u * 48 + 4u * 98 + 8);
    CHECK(g.interfaces.size() == 4u);
    // coordinates of a few named squares
    CHECK(c.squares[g.part("T_S")[0]].x == 5 * D);
    CHECK(c.squares[g.part("T_S")[0]].y == D + p.delta());
    CHECK(c.squares[g.part("u_NE")[0]].x == 10 * D - p.gamma() / 2);
    CHECK(c.squares[g.part("u_NE")[0]].y == 98 * D);

    const auto& T = g.part("terminals");
    for (auto [name, ifa, ifb] : {std::tuple{"Delta1", "u_SW", "u_NE"}, std::tuple{"Delta2", "u_NW", "u_SE"}}) {
        auto sub = g.part(name);
        sub.insert(sub.end(), T.begin(), T.end());
        auto comps = touching_components(c.squares, D, sub);
        REQUIRE(comps.size() == 2u);
        for (auto& comp : comps) {
            int terms = 0, ifaces = 0;
            for (int s : comp) terms += c.squares[s].terminal, ifaces += std::count(g.interfaces.begin(), g.interfaces.end(), s) > 0;
            CHECK(terms == 2);
            CHECK(ifaces == 1);
        }
        CHECK(std::find(g.part(name).begin(), g.part(name).end(), g.part(ifa)[0]) != g.part(name).end());
        CHECK(std::find(g.part(name).begin(), g.part(name).end(), g.part(ifb)[0]) != g.part(name).end());
    }
}

TEST_CASE("crossing gadget lower bounds as written") {
    auto p = default_params(2);
    long D = p.unit();
    auto c = crossing_gadget(p);
    auto& g = c.g;
    long base = (long)(p.omega + 1) * (p.h - 1) / 4;
    CHECK(gadget_min_connector(c, D, g.interfaces) == base);
    std::vector<int> top = {g.part("u_NW")[0], g.part("u_NE")[0]}, bottom = {g.part("u_SW")[0], g.part("u_SE")[0]};
    CHECK(gadget_min_connector_split(c, D, top, bottom) >= base + 4 * p.omega);
    CHECK(gadget_min_connector(c, D, bottom) >= base + 4 * p.omega);
    CHECK(gadget_min_connector(c, D, top) >= base + 4 * p.omega);
}

TEST_CASE("top and bottom gadgets") {
    auto p = default_params(2);
    long D = p.unit();
    for (bool is_top : {true, false}) {
        auto b = is_top ? top_gadget(p) : bottom_gadget(p);
        CHECK(b.squares.size() == (size_t)(p.omega - 3) + 3);
        CHECK(b.g.part("kappa1").size() == 5u);
        CHECK(b.g.part("kappa2").size() == 5u);
        int x = b.g.part("x")[0];
        for (auto name : {"kappa1", "kappa2"}) {
            auto h = b.g.part(name);
            h.push_back(x);
            CHECK(connected(b.squares, D, h));
        }
        std::vector<int> cand;
        for (int s = 0; s < (int)b.squares.size(); s++)
            if (!b.squares[s].terminal) cand.push_back(s);
        auto mins = smallest_subsets(cand, 10, [&](const std::vector<int>& h) {
            bool has_iface = false;
            for (int s : h) has_iface |= std::count(b.g.interfaces.begin(), b.g.interfaces.end(), s) > 0;
            auto with = h;
            with.push_back(x);
            return has_iface && connected(b.squares, D, with);
        });
        REQUIRE(mins.size() == 2u);
        CHECK(mins[0].size() == 5u);
        std::set<std::vector<int>> got(mins.begin(), mins.end());
        CHECK(got == std::set<std::vector<int>>{b.g.part("kappa1"), b.g.part("kappa2")});
        CHECK(gadget_min_connector(b, D, b.g.interfaces) == 5);
    }
}

TEST_CASE("stem gadget") {
    auto p = default_params(2);
    CHECK(stem_gadget(p, 1).squares.size() == 2u);
    CHECK(stem_gadget(p, 2).squares.size() == 103u);
    CHECK_THROWS_AS(stem_gadget(p, 0), std::invalid_argument);
    for (int x = 1; x <= 5; x++) {
        auto s = stem_gadget(p, x);
        CHECK(s.squares.size() == (size_t)(x - 1) * (p.h + 1) + x + 1);
        std::vector<int> all(s.squares.size());
        for (int i = 0; i < (int)all.size(); i++) all[i] = i;
        for (auto& q : s.squares) CHECK(q.terminal);
        CHECK(connected(s.squares, p.unit(), all));
    }
}

TEST_CASE("instance layout") {
    auto m = monotone(2, 2, 2, {{{{0, 1}, {1, 2}}, {{0, 2}}}, {{{0, 1}}, {{0, 2}, {1, 1}}}});
    auto inst = build_instance(m);
    long D = inst.p.unit();
    CHECK(inst.cross.size() == 1u);
    CHECK(inst.cross[0].size() == 2u);
    CHECK(inst.k == 11 * 4 + 294 * 2 + 5 * 4);
    // W_{1,1}: its second block starts at offset (2, 2) plus one unit right and delta/2 up
    const Gadget& w11 = inst.gadgets[inst.wire[0][0]];
    CHECK(inst.squares[w11.sigma[1].at({0, 1})].x == 3 * D);
    CHECK(inst.squares[w11.sigma[1].at({0, 1})].y == 2 * D + inst.p.delta() / 2);
    CHECK(inst.squares[w11.sigma[0].begin()->second].y == 2 * D + w11.sigma[0].begin()->first.first * inst.p.delta());
    // W_{1,1} carries the last monotone column
    CHECK(w11.S == m.sets[0][1]);
    CHECK(well_separation_violations(inst).empty());
    auto T = inst.terminals();
    CHECK((long)T.size() <= (long)(inst.p.h + 10) * inst.x * inst.y);

    auto odd = monotone(1, 2, 2, {{{{0, 1}}, {{0, 1}}}});
    CHECK_THROWS_AS(build_instance(odd), std::invalid_argument);
    auto exact = m;
    exact.variant = TilingVariant::exact;
    CHECK_THROWS_AS(build_instance(exact), std::invalid_argument);
}

TEST_CASE("forward witness and extraction") {
    std::mt19937_64 rng(17);
    auto t0 = std::chrono::steady_clock::now();
    int witnesses = 0, instances = 0;
    for (int it = 0; it < 12; it++) {
        int N = it < 8 ? 2 : 4;
        auto m = random_monotone(rng, 2, 2, N);
        auto ws = all_witnesses(m);
        if (ws.empty()) continue;
        instances++;
        auto inst = build_instance(m);
        CHECK(well_separation_violations(inst).empty());
        auto st = to_steiner(inst);
        for (auto& w : ws) {
            auto sol = witness_from_tiling(inst, w);
            CHECK((long)sol.chosen.size() == inst.k);
            CHECK(sol.feasible);
            CHECK(connects_terminals(st, sol.chosen));
            CHECK(extract_tiling(inst, sol.chosen) == w);
            // each row of chains is one touching path
            for (int i = 0; i < inst.x; i++) {
                std::vector<int> row;
                for (int j = 0; j < inst.y; j++) {
                    auto ch = wire_chain(inst.gadgets[inst.wire[i][j]], w[i][inst.y - 1 - j]);
                    row.insert(row.end(), ch.begin(), ch.end());
                }
                CHECK(connected(inst.squares, inst.p.unit(), row));
            }
            // a = 0 selects the second crossing half
            for (int j = 0; j < inst.y; j++) {
                const Gadget& c = inst.gadgets[inst.cross[0][j]];
                auto& half = c.part(w[0][inst.y - 1 - j].first == 0 ? "Delta2" : "Delta1");
                CHECK(std::includes(sol.chosen.begin(), sol.chosen.end(), half.begin(), half.end()));
            }
            witnesses++;
        }
        // an inconsistent witness is refused
        auto bad = ws[0];
        bad[0][0] = {1 - bad[0][0].first, bad[0][0].second};
        if (!is_consistent(m, bad)) CHECK_THROWS_AS(witness_from_tiling(inst, bad), std::invalid_argument);
        // two squares in one block
        auto sol = witness_from_tiling(inst, ws[0]);
        auto extra = sol.chosen;
        for (auto& [key, s] : inst.gadgets[inst.wire[1][1]].sigma[3])
            if (!std::binary_search(extra.begin(), extra.end(), s)) {
                extra.push_back(s);
                break;
            }
        std::sort(extra.begin(), extra.end());
        CHECK_THROWS_WITH_AS(extract_tiling(inst, extra), doctest::Contains("W2,2 block B4"), std::invalid_argument);
    }
    double secs = std::chrono::duration<double>(std::chrono::steady_clock::now() - t0).count();
    CHECK(instances >= 4);
    MESSAGE(witnesses << " witnesses over " << instances << " instances in " << secs << " s");
}

TEST_CASE("larger layouts stay well separated") {
    std::mt19937_64 rng(3);
    for (auto [x, y, N] : {std::tuple{4, 2, 2}, std::tuple{2, 4, 4}, std::tuple{4, 4, 8}}) {
        auto m = random_monotone(rng, x, y, N);
        auto inst = build_instance(m);
        CHECK(well_separation_violations(inst).empty());
        CHECK(inst.k == 11L * x * y + 294L * (x - 1) * y + 5L * 2 * y);
        // a single feasible witness when one exists
        GridTilingInstance easy = m;
        for (int i = 0; i < x; i++)
            for (int j = 0; j < y; j++) easy.sets[i][j].push_back({0, 1}), std::sort(easy.sets[i][j].begin(), easy.sets[i][j].end()),
                    easy.sets[i][j].erase(std::unique(easy.sets[i][j].begin(), easy.sets[i][j].end()), easy.sets[i][j].end());
        auto e = build_instance(easy);
        TilingWitness w(x, std::vector<TileValue>(y, {0, 1}));
        auto sol = witness_from_tiling(e, w);
        CHECK(sol.feasible);
        CHECK((long)sol.chosen.size() == e.k);
        CHECK(extract_tiling(e, sol.chosen) == w);
    }
}

// Drops squares of a crossing half one at a time while every terminal still reaches an interface.
static std::vector<int> thinned_half(const std::vector<UnitSquare>& sq, long unit, const Gadget& c, const std::string& half) {
    std::vector<int> keep = c.part(half);
    const auto& T = c.part("terminals");
    auto ok = [&](const std::vector<int>& h) {
        auto all = h;
        all.insert(all.end(), T.begin(), T.end());
        for (auto& comp : touching_components(sq, unit, all)) {
            bool term = false, ifc = false;
            for (int s : comp)
                term |= sq[s].terminal, ifc |= std::count(c.interfaces.begin(), c.interfaces.end(), s) > 0;
            if (term && !ifc) return false;
        }
        return true;
    };
    for (size_t t = 0; t < keep.size();) {
        auto trial = keep;
        trial.erase(trial.begin() + t);
        if (ok(trial)) keep = trial;
        else t++;
    }
    return keep;
}

TEST_CASE("crossing halves are not minimal and the budget has slack") {
    auto p = default_params(2);
    long D = p.unit();
    auto c = crossing_gadget(p);
    auto thin = thinned_half(c.squares, D, c.g, "Delta2");
    CHECK(thin.size() == 286u);
    CHECK(gadget_min_connector(c, D, c.g.interfaces) == 286);

    // No monotone tiling: row 1 forces column 2 to (1,2), row 2 forces it to (0,1).
    auto m = monotone(2, 2, 2, {{{{0, 2}}, {{0, 1}, {1, 2}}}, {{{0, 1}}, {{0, 1}}}});
    REQUIRE_FALSE(brute_force_tiling(m).has_value());
    auto inst = build_instance(m);
    std::vector<int> S;
    auto take = [&](const std::vector<int>& v) { S.insert(S.end(), v.begin(), v.end()); };
    const Gadget& w11 = inst.gadgets[inst.wire[0][0]];
    // W_{1,1} reads (0,1) on the left, climbs to b = 2 inside its last middle block and leaves through both
    // squares of its last block
    auto chain = wire_chain(w11, {0, 1});
    take(chain);
    take({w11.sigma[p.omega - 2].at({0, 2}), w11.sigma[p.omega - 1].at({0, 2})});
    take(wire_chain(inst.gadgets[inst.wire[0][1]], {0, 2}));
    take(wire_chain(inst.gadgets[inst.wire[1][0]], {0, 1}));
    take(wire_chain(inst.gadgets[inst.wire[1][1]], {0, 1}));
    for (int j = 0; j < 2; j++) {
        take(thinned_half(inst.squares, D, inst.gadgets[inst.cross[0][j]], "Delta2"));
        take(inst.gadgets[inst.bottom[j]].part("kappa1"));
        take(inst.gadgets[inst.top[j]].part("kappa2"));
    }
    std::sort(S.begin(), S.end());
    S.erase(std::unique(S.begin(), S.end()), S.end());
    MESSAGE("no-instance connected with " << S.size() << " squares, budget " << inst.k);
    CHECK((long)S.size() <= inst.k);
    CHECK(is_feasible(to_steiner(inst), S));
}
