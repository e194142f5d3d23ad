// stg: generators, reductions, solvers and checkers behind one command line.
// Exit codes: 0 ok, 1 infeasible or failed check, 2 usage or invalid input, 3 search cap exceeded.

#include "stg/gadgets.hpp"
#include "stg/grid_tiling.hpp"
#include "stg/io.hpp"
#include "stg/random_instances.hpp"
#include "stg/recursion.hpp"
#include "stg/rect_hardness.hpp"
#include "stg/reduction.hpp"
#include "stg/representation.hpp"
#include "stg/separation.hpp"
#include "stg/steiner.hpp"

#include "CLI11.hpp"

#include <algorithm>
#include <atomic>
#include <chrono>
#include <iostream>
#include <mutex>
#include <numeric>
#include <random>
#include <sstream>
#include <thread>

using namespace stg;

namespace {

enum Exit { ok = 0, failed = 1, usage = 2, cap = 3 };

struct UsageError : std::invalid_argument {
    using std::invalid_argument::invalid_argument;
};

void emit(const std::string& out, const std::string& text) {
    if (out.empty() || out == "-")
        std::cout << text;
    else
        write_text_atomic(out, text);
}

void emit_json(const std::string& out, const std::string& kind, Json payload) { emit(out, dump(wrap(kind, payload))); }

// instance files of any known kind; DIMACS text is accepted where a cnf is expected
struct Loaded {
    std::string kind;
    Json payload;
};

Loaded load(const std::string& path) {
    std::string text = read_text_file(path);
    auto first = text.find_first_not_of(" \t\r\n");
    if (first != std::string::npos && text[first] != '{') {
        try {
            return {"cnf", to_json(parse_dimacs(text))};
        } catch (const std::exception& e) {
            throw FormatError(path + ": neither JSON nor DIMACS (" + e.what() + ")");
        }
    }
    auto [kind, payload] = unwrap(parse(text));
    return {kind, payload};
}

void expect_kind(const Loaded& l, std::initializer_list<const char*> kinds) {
    for (auto* k : kinds)
        if (l.kind == k) return;
    std::string want;
    for (auto* k : kinds) want += std::string(want.empty() ? "" : " or ") + k;
    throw UsageError("expected a " + want + " file, got kind '" + l.kind + "'");
}

// every kind that solves as a node-weighted Steiner instance
SteinerInstance steiner_of(const Loaded& l) {
    if (l.kind == "geometric") return to_steiner(geo_from_json(l.payload));
    if (l.kind == "planar-object") return to_steiner(planar_from_json(l.payload));
    if (l.kind == "square-steiner") return to_steiner(squares_from_json(l.payload));
    if (l.kind == "rect-steiner") return rect_steiner(rects_from_json(l.payload).first);
    throw UsageError("kind '" + l.kind + "' is not a Steiner instance");
}

std::string join(const std::vector<int>& v) {
    std::ostringstream s;
    for (size_t i = 0; i < v.size(); i++) s << (i ? " " : "") << v[i];
    return s.str();
}

Solution load_solution(const std::string& path) {
    auto [kind, payload] = unwrap(read_json_file(path));
    if (kind != "solution") throw UsageError("expected a solution file, got kind '" + kind + "'");
    return solution_from_json(payload);
}

// ---------------------------------------------------------------- gen

struct GenArgs {
    std::string what, out;
    uint64_t seed = 1;
    int objects = 8, terminals = 3, width = 5, height = 4, max_size = 4, max_weight = 5;
    double alpha = 8, box = 0;
    int x = 2, y = 2, N = 2;
    std::string variant = "exact";
    double density = 0.5;
    bool plant = false;
    int vars = 4, clauses = 6;
    bool dimacs = false;
    int index = 0;
};

GridTilingInstance random_tiling(std::mt19937_64& rng, const GenArgs& a) {
    GridTilingInstance g;
    g.x = a.x, g.y = a.y, g.N = a.N;
    g.variant = a.variant == "exact" ? TilingVariant::exact : TilingVariant::monotone;
    std::bernoulli_distribution coin(a.density);
    // optional planted witness: bits per column, values per row (sorted per row for the monotone rule)
    std::vector<int> bit(a.y);
    std::vector<std::vector<int>> val(a.x, std::vector<int>(a.y));
    std::uniform_int_distribution<int> B(0, 1), V(1, a.N);
    for (auto& b : bit) b = B(rng);
    for (auto& row : val) {
        int r = V(rng);
        for (auto& v : row) v = r;
        if (g.variant == TilingVariant::monotone) {
            for (auto& v : row) v = V(rng);
            std::sort(row.begin(), row.end());
        }
    }
    g.sets.assign(a.x, std::vector<std::vector<TileValue>>(a.y));
    for (int i = 0; i < a.x; i++)
        for (int j = 0; j < a.y; j++) {
            auto& s = g.sets[i][j];
            for (int bb = 0; bb <= 1; bb++)
                for (int v = 1; v <= a.N; v++)
                    if (coin(rng)) s.push_back({bb, v});
            if (a.plant) s.push_back({bit[j], val[i][j]});
            if (s.empty()) s.push_back({B(rng), V(rng)});
            std::sort(s.begin(), s.end());
            s.erase(std::unique(s.begin(), s.end()), s.end());
        }
    return g;
}

Cnf random_cnf(std::mt19937_64& rng, int vars, int clauses) {
    Cnf f;
    f.n = vars;
    std::uniform_int_distribution<int> V(1, vars), S(0, 1);
    for (int c = 0; c < clauses; c++) {
        std::vector<int> cl;
        while ((int)cl.size() < std::min(3, vars)) {
            int v = V(rng);
            bool dup = false;
            for (int l : cl) dup |= std::abs(l) == v;
            if (!dup) cl.push_back(S(rng) ? v : -v);
        }
        f.clauses.push_back(cl);
    }
    return f;
}

int run_gen(const GenArgs& a) {
    std::mt19937_64 rng(a.seed);
    if (a.what == "geometric") {
        GeoGenOptions opt;
        opt.objects = a.objects;
        opt.terminals = a.terminals;
        opt.alpha = a.alpha;
        opt.max_weight = a.max_weight;
        opt.box = a.box;
        auto gi = random_geo_instance(rng, opt);
        emit_json(a.out, kind_of(gi), to_json(gi));
    } else if (a.what == "grid") {
        auto pi = random_grid_instance(rng, a.width, a.height, a.objects, a.terminals, a.max_size, a.max_weight);
        emit_json(a.out, kind_of(pi), to_json(pi));
    } else if (a.what == "tiling") {
        if (a.variant != "exact" && a.variant != "monotone") throw UsageError("variant must be exact or monotone");
        if (a.x < 1 || a.y < 1 || a.N < 1) throw UsageError("x, y and N must be positive");
        auto g = random_tiling(rng, a);
        emit_json(a.out, kind_of(g), to_json(g));
    } else if (a.what == "cnf") {
        if (a.vars < 1 || a.clauses < 0) throw UsageError("need at least one variable");
        auto f = random_cnf(rng, a.vars, a.clauses);
        if (a.dimacs)
            emit(a.out, write_dimacs(f));
        else
            emit_json(a.out, kind_of(f), to_json(f));
    } else if (a.what == "cubic") {
        auto all = cubic_graphs(a.width);
        if (all.empty() || a.index < 0 || a.index >= (int)all.size())
            throw UsageError("no cubic graph with that index on " + std::to_string(a.width) + " vertices (" +
                             std::to_string(all.size()) + " classes)");
        emit_json(a.out, kind_of(all[a.index]), to_json(all[a.index]));
    } else {
        throw UsageError("unknown generator '" + a.what + "'");
    }
    return ok;
}

// ---------------------------------------------------------------- reduce

struct ReduceArgs {
    std::string what, in, out, witness_out;
    double alpha = 8;
    int groups = 1;
    int omega = 11, h = 99;
    std::string epsilon = "1/2";
};

std::string canonical_reduction(std::string s) {
    for (std::string arrow : {"→", "->"}) {
        auto p = s.find(arrow);
        if (p != std::string::npos) s.replace(p, arrow.size(), "-");
    }
    if (s == "geo-planar" || s == "longred" || s == "sat-ngt" || s == "ngt-mngt" || s == "mngt-squares" ||
        s == "vc-3sc" || s == "3sc-rects")
        return s;
    if (s == "vc3-3sc") return "vc-3sc";
    throw UsageError("unknown reduction '" + s + "'");
}

int run_reduce(ReduceArgs a) {
    a.what = canonical_reduction(a.what);
    Loaded l = load(a.in);
    if (a.what == "geo-planar") {
        expect_kind(l, {"geometric"});
        auto red = geo_to_planar(geo_from_json(l.payload), a.alpha);
        emit_json(a.out, kind_of(red.inst), to_json(red.inst));
    } else if (a.what == "longred") {
        expect_kind(l, {"planar-object"});
        auto lr = long_reduction(planar_from_json(l.payload), a.alpha);
        if (lr.infeasible) {
            std::cerr << "longred: some terminal pair cannot be joined; the instance is infeasible\n";
            return failed;
        }
        emit_json(a.out, kind_of(lr.inst), to_json(lr.inst));
        std::cerr << "long objects: " << lr.inst.objs.size() - lr.original_objects << ", budget " << lr.inst.k << "\n";
    } else if (a.what == "sat-ngt") {
        expect_kind(l, {"cnf"});
        auto red = sat_to_ngt(cnf_from_json(l.payload), a.groups);
        if (red.immediate_no) {
            std::cerr << "sat-ngt: a clause group has no satisfying assignment; the formula is unsatisfiable\n";
            return failed;
        }
        emit_json(a.out, kind_of(red.inst), to_json(red.inst));
    } else if (a.what == "ngt-mngt") {
        expect_kind(l, {"grid-tiling"});
        auto g = tiling_from_json(l.payload);
        if (g.variant != TilingVariant::exact) throw UsageError("ngt-mngt needs an exact grid-tiling instance");
        auto m = ngt_to_mngt(g);
        emit_json(a.out, kind_of(m), to_json(m));
    } else if (a.what == "mngt-squares") {
        expect_kind(l, {"grid-tiling"});
        auto g = tiling_from_json(l.payload);
        GadgetParams p = default_params(g.N);
        p.omega = a.omega;
        p.h = a.h;
        auto inst = build_instance(g, p);
        emit_json(a.out, kind_of(inst), to_json(inst));
        std::cerr << "squares: " << inst.squares.size() << ", terminals " << inst.terminals().size() << ", k "
                  << inst.k << "\n";
        if (!a.witness_out.empty()) {
            auto w = dp_solve(g);
            if (!w) {
                std::cerr << "mngt-squares: the source has no tiling, so there is no witness to write\n";
                return failed;
            }
            emit_json(a.witness_out, "solution", to_json(witness_from_tiling(inst, *w)));
        }
    } else if (a.what == "vc-3sc") {
        expect_kind(l, {"simple-graph"});
        auto s = vc3_to_special3sc(graph_from_json(l.payload));
        emit_json(a.out, kind_of(s), to_json(s));
    } else if (a.what == "3sc-rects") {
        expect_kind(l, {"set-cover"});
        auto s = sc_from_json(l.payload);
        Weight eps;
        try {
            eps = parse_weight(a.epsilon);
        } catch (const std::invalid_argument&) {
            throw UsageError("epsilon must be a rational p/q");
        }
        auto r = special3sc_to_rects(s, eps);
        emit_json(a.out, "rect-steiner", to_json(r, s));
    }
    return ok;
}

// ---------------------------------------------------------------- solve

struct SolveArgs {
    std::string in, out, engine = "exact";
    double alpha = 8;
    int cap = 20;
};

Solution solve_steiner(const SteinerInstance& inst, const std::string& engine, int cap_n) {
    if (engine == "brute") return brute_force_optimum(inst, cap_n);
    if (engine == "dw") return dreyfus_wagner(inst);
    if (engine == "bnb") return branch_and_bound_optimum(inst);
    if (engine == "exact") return exact_optimum(inst);
    if (engine == "recursion") return recursion_solve(inst);
    throw UsageError("unknown engine '" + engine + "' (brute, dw, bnb, exact, recursion)");
}

int run_solve(const SolveArgs& a) {
    Loaded l = load(a.in);
    if (l.kind == "grid-tiling") {
        auto g = tiling_from_json(l.payload);
        std::optional<TilingWitness> w;
        if (a.engine == "brute")
            w = brute_force_tiling(g);
        else if (a.engine == "dp" || a.engine == "exact")
            w = dp_solve(g);
        else
            throw UsageError("grid-tiling engines are brute and dp");
        if (!w) {
            std::cout << "no tiling\n";
            return failed;
        }
        emit_json(a.out, "tiling-witness", witness_to_json(*w));
        return ok;
    }
    if (l.kind == "cnf") {
        if (a.engine != "brute" && a.engine != "exact") throw UsageError("cnf engine is brute");
        auto s = brute_force_sat(cnf_from_json(l.payload));
        if (!s) {
            std::cout << "unsatisfiable\n";
            return failed;
        }
        std::cout << "satisfiable:";
        for (size_t v = 1; v < s->size(); v++) std::cout << " " << ((*s)[v] ? "" : "-") << v;
        std::cout << "\n";
        return ok;
    }
    Solution sol;
    if (l.kind == "planar-object" && a.engine == "recursion") {
        sol = recursion_solve(planar_from_json(l.payload), a.alpha);
    } else {
        if (a.engine != "brute" && a.engine != "dw" && a.engine != "bnb" && a.engine != "exact" &&
            a.engine != "recursion")
            throw UsageError("unknown engine '" + a.engine + "' (brute, dw, bnb, exact, recursion)");
        sol = solve_steiner(steiner_of(l), a.engine, a.cap);
    }
    if (!sol.feasible) {
        std::cout << "infeasible\n";
        return failed;
    }
    std::cout << "weight " << q_to_string(sol.weight) << "\nchosen " << join(sol.chosen) << "\n";
    if (!a.out.empty()) emit_json(a.out, "solution", to_json(sol));
    return ok;
}

// ---------------------------------------------------------------- verify

struct VerifyArgs {
    std::string in, check, solution;
    double alpha = 8;
    int budget = 2, gamma_cap = 2;
    std::string beta = "3/4";
};

int report(bool pass, const std::string& what, const std::vector<std::string>& notes = {}) {
    for (auto& n : notes) std::cout << "  " << n << "\n";
    std::cout << (pass ? "PASS " : "FAIL ") << what << "\n";
    return pass ? ok : failed;
}

// the given solution, or an exact optimum when none is given
Solution solution_for(const VerifyArgs& a, const SteinerInstance& inst) {
    if (!a.solution.empty()) return load_solution(a.solution);
    auto s = exact_optimum(inst);
    if (!s.feasible) throw std::runtime_error("instance is infeasible, nothing to check");
    return s;
}

int verify_witness(const VerifyArgs& a, const Loaded& l) {
    if (a.solution.empty()) throw UsageError("--check witness needs --solution");
    if (l.kind == "grid-tiling") {
        auto g = tiling_from_json(l.payload);
        auto [kind, payload] = unwrap(read_json_file(a.solution));
        if (kind != "tiling-witness") throw UsageError("expected a tiling-witness file");
        auto w = witness_from_json(payload);
        bool pass = false;
        try {
            pass = is_consistent(g, w);
        } catch (const std::invalid_argument& e) {
            return report(false, "witness", {e.what()});
        }
        return report(pass, "tiling witness");
    }
    expect_kind(l, {"square-steiner"});
    auto inst = squares_from_json(l.payload);
    auto sol = load_solution(a.solution);
    auto st = to_steiner(inst);
    std::vector<std::string> notes;
    bool size_ok = (long)sol.chosen.size() <= inst.k;
    notes.push_back("chosen " + std::to_string(sol.chosen.size()) + ", budget " + std::to_string(inst.k));
    bool conn = connects_terminals(st, sol.chosen);
    notes.push_back(std::string("terminals connected: ") + (conn ? "yes" : "no"));
    bool back = false;
    try {
        auto w = extract_tiling(inst, sol.chosen);
        back = is_consistent(inst.source, w);
        notes.push_back(std::string("extracted tiling consistent: ") + (back ? "yes" : "no"));
    } catch (const std::invalid_argument& e) {
        notes.push_back(std::string("extraction failed: ") + e.what());
    }
    return report(size_ok && conn && back, "square witness", notes);
}

int run_verify(const VerifyArgs& a) {
    Loaded l = load(a.in);
    const std::string& c = a.check;
    if (c == "witness") return verify_witness(a, l);
    if (c == "assumptionG") {
        expect_kind(l, {"geometric"});
        auto r = validate_assumption_G(geo_from_json(l.payload).objs, a.alpha);
        return report(r.ok, "assumption G", r.violations);
    }
    if (c == "deg3") {
        auto inst = steiner_of(l);
        auto sol = solution_for(a, inst);
        if (!is_minimal(inst, sol.chosen)) return report(false, "deg3", {"solution is not inclusion-minimal"});
        std::vector<int> verts = sol.chosen, T = inst.terminals();
        verts.insert(verts.end(), T.begin(), T.end());
        std::sort(verts.begin(), verts.end());
        std::vector<int> local(inst.n, -1);
        for (size_t i = 0; i < verts.size(); i++) local[verts[i]] = (int)i;
        AdjList g(verts.size());
        for (size_t i = 0; i < verts.size(); i++)
            for (int w : inst.adj[verts[i]])
                if (local[w] >= 0) g[i].push_back(local[w]);
        std::vector<int> Tl;
        for (int t : T) Tl.push_back(local[t]);
        if (T.size() < 2) return report(true, "deg3", {"fewer than two terminals"});
        auto r = check_deg3_bound(g, Tl);
        return report(r.holds, "deg3",
                      {"vertices of degree >= 3: " + std::to_string(r.count) + ", bound " + std::to_string(r.bound)});
    }
    expect_kind(l, {"planar-object"});
    auto pi = planar_from_json(l.payload);
    auto inst = to_steiner(pi);
    auto sol = solution_for(a, inst);
    if (c == "assumptionP") {
        auto r = validate_assumption_P(pi, sol.chosen, a.alpha);
        return report(r.ok, "assumption P", r.violations);
    }
    if (c == "assumptionPL") {
        auto r = validate_assumption_PL(pi, sol.chosen, a.alpha);
        return report(r.ok, "assumption PL", r.violations);
    }
    Representation rep = construct_representation(pi, sol.chosen, a.alpha);
    if (c == "representation") {
        auto r = verify_representation(rep, pi, a.alpha);
        std::vector<std::string> notes = r.notes;
        for (int i = 0; i < 8; i++)
            notes.push_back("property " + std::to_string(i + 1) + ": " + (r.property[i] ? "ok" : "violated"));
        bool bound = rep.W.size() <= kRepresentationFactor * rep.solution.size();
        notes.push_back("pieces " + std::to_string(rep.W.size()) + " for " + std::to_string(rep.solution.size()) +
                        " solution objects");
        return report(r.ok() && bound, "representation", notes);
    }
    if (c == "guarded") {
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
        long total = 0, good = 0;
        exhaustive_separation_enum(pi.g, fam, a.budget, a.gamma_cap, [&](const GuardedSeparation& s) {
            total++;
            if (verify_guarded(s, fam, F, F0, pi.g).ok()) good++;
            return true;
        });
        return report(good > 0, "guarded separations",
                      {"enumerated " + std::to_string(total) + ", guarded " + std::to_string(good)});
    }
    if (c == "triple") {
        Weight beta;
        try {
            beta = parse_weight(a.beta);
        } catch (const std::invalid_argument&) {
            throw UsageError("beta must be a rational p/q");
        }
        auto tr = triples_from_exhaustive_separations(pi, rep, a.alpha, a.budget, a.gamma_cap);
        long good = 0;
        for (auto& t : tr) good += verify_balanced_triple(t, inst, sol.chosen, beta);
        return report(good > 0, "balanced triple",
                      {"triples " + std::to_string(tr.size()) + ", balanced " + std::to_string(good)});
    }
    throw UsageError("unknown check '" + c + "'");
}

// ---------------------------------------------------------------- render

int run_render(const std::string& in, const std::string& solution, const std::string& out) {
    Loaded l = load(in);
    std::vector<int> chosen;
    const std::vector<int>* cp = nullptr;
    if (!solution.empty()) {
        chosen = load_solution(solution).chosen;
        cp = &chosen;
    }
    std::string svg;
    if (l.kind == "geometric")
        svg = render_svg(geo_from_json(l.payload), cp);
    else if (l.kind == "planar-object")
        svg = render_svg(planar_from_json(l.payload), cp);
    else if (l.kind == "square-steiner")
        svg = render_svg(squares_from_json(l.payload), cp);
    else if (l.kind == "rect-steiner")
        svg = render_svg(rects_from_json(l.payload).first, cp);
    else
        throw UsageError("cannot render kind '" + l.kind + "'");
    emit(out, svg);
    return ok;
}

// ---------------------------------------------------------------- bench

struct BenchArgs {
    uint64_t seed = 1;
    int count = 20, threads = 1, objects = 8, terminals = 3;
    double alpha = 8;
    std::string engines = "brute,dw", out;
    bool timing = true;
};

int run_bench(const BenchArgs& a) {
    std::vector<std::string> engines;
    {
        std::stringstream ss(a.engines);
        std::string e;
        while (std::getline(ss, e, ','))
            if (!e.empty()) engines.push_back(e);
    }
    for (auto& e : engines)
        if (e != "brute" && e != "dw" && e != "bnb" && e != "exact" && e != "recursion")
            throw UsageError("unknown engine '" + e + "'");
    if (a.count < 0 || a.threads < 1) throw UsageError("count must be >= 0 and threads >= 1");

    // one slot per instance, filled by exactly one worker; rows come out in seed order
    std::vector<std::string> rows(a.count);
    std::atomic<int> next{0}, mismatches{0}, capped{0};
    std::mutex err_mu;
    auto work = [&] {
        for (int i; (i = next++) < a.count;) {
            uint64_t seed = a.seed + i;
            std::mt19937_64 rng(seed);
            GeoGenOptions opt;
            opt.objects = a.objects;
            opt.terminals = a.terminals;
            opt.alpha = a.alpha;
            auto inst = to_steiner(random_geo_instance(rng, opt));
            std::ostringstream row;
            std::optional<Weight> first;
            for (auto& e : engines) {
                auto t0 = std::chrono::steady_clock::now();
                std::string weight, feasible;
                try {
                    auto s = solve_steiner(inst, e, 20);
                    feasible = s.feasible ? "1" : "0";
                    weight = s.feasible ? q_to_string(s.weight) : "";
                    if (s.feasible) {
                        if (!first) first = s.weight;
                        else if (*first != s.weight) mismatches++;
                    }
                } catch (const CapExceeded& ex) {
                    capped++;
                    feasible = "cap";
                    std::lock_guard<std::mutex> lk(err_mu);
                    std::cerr << "seed " << seed << " " << e << ": " << ex.what() << "\n";
                }
                double ms = std::chrono::duration<double, std::milli>(std::chrono::steady_clock::now() - t0).count();
                row << seed << "," << inst.n << "," << inst.terminals().size() << "," << e << "," << feasible << ","
                    << weight << ",";
                if (a.timing) row << ms;
                row << "\n";
            }
            rows[i] = row.str();
        }
    };
    std::vector<std::thread> pool;
    for (int t = 0; t < a.threads; t++) pool.emplace_back(work);
    for (auto& t : pool) t.join();
    std::string csv = "seed,objects,terminals,engine,feasible,weight,ms\n";
    for (auto& r : rows) csv += r;
    emit(a.out, csv);
    std::cerr << a.count << " instances, " << mismatches << " weight mismatches, " << capped << " capped\n";
    return mismatches ? failed : ok;
}

}  // namespace

int main(int argc, char** argv) {
    CLI::App app{"Steiner tree toolkit for geometric intersection graphs and their hardness gadgets"};
    app.require_subcommand(1);

    GenArgs ga;
    auto* gen = app.add_subcommand("gen", "random instances");
    gen->add_option("what", ga.what, "geometric | grid | tiling | cnf | cubic")->required();
    gen->add_option("-o,--out", ga.out, "output file (stdout when omitted)");
    gen->add_option("--seed", ga.seed);
    gen->add_option("--objects", ga.objects);
    gen->add_option("--terminals", ga.terminals);
    gen->add_option("--alpha", ga.alpha);
    gen->add_option("--box", ga.box, "placement box side (0 picks one)");
    gen->add_option("--max-weight", ga.max_weight);
    gen->add_option("--width", ga.width, "grid width, or vertex count for cubic");
    gen->add_option("--height", ga.height);
    gen->add_option("--max-size", ga.max_size);
    gen->add_option("--x", ga.x);
    gen->add_option("--y", ga.y);
    gen->add_option("--N", ga.N);
    gen->add_option("--variant", ga.variant, "exact | monotone");
    gen->add_option("--density", ga.density);
    gen->add_flag("--plant", ga.plant, "plant a consistent tiling");
    gen->add_option("--vars", ga.vars);
    gen->add_option("--clauses", ga.clauses);
    gen->add_flag("--dimacs", ga.dimacs, "write DIMACS instead of JSON");
    gen->add_option("--index", ga.index, "which cubic graph class");

    ReduceArgs ra;
    auto* red = app.add_subcommand("reduce", "apply one reduction");
    red->add_option("what", ra.what, "geo-planar | longred | sat-ngt | ngt-mngt | mngt-squares | vc-3sc | 3sc-rects")
        ->required();
    red->add_option("-i,--in", ra.in)->required();
    red->add_option("-o,--out", ra.out);
    red->add_option("--alpha", ra.alpha);
    red->add_option("--groups", ra.groups, "number of clause groups for sat-ngt")->check(CLI::PositiveNumber);
    red->add_option("--gadget-omega", ra.omega, "omega, 3 mod 8");
    red->add_option("--gadget-h", ra.h, "column height, odd and >= 5");
    red->add_option("--epsilon", ra.epsilon);
    red->add_option("--witness-out", ra.witness_out, "mngt-squares: also write the forward witness");

    SolveArgs sa;
    auto* sol = app.add_subcommand("solve", "exact optimum");
    sol->add_option("-i,--in", sa.in)->required();
    sol->add_option("-o,--out", sa.out, "write the solution");
    sol->add_option("--engine", sa.engine, "brute | dw | bnb | exact | recursion (dp for tilings)");
    sol->add_option("--alpha", sa.alpha);
    sol->add_option("--cap", sa.cap, "object cap for brute force");

    VerifyArgs va;
    auto* ver = app.add_subcommand("verify", "run one checker");
    ver->add_option("--check", va.check,
                    "assumptionG | assumptionP | assumptionPL | representation | guarded | triple | witness | deg3")
        ->required();
    ver->add_option("-i,--in", va.in)->required();
    ver->add_option("--solution", va.solution, "solution file (an exact optimum is used when omitted)");
    ver->add_option("--alpha", va.alpha);
    ver->add_option("--budget", va.budget, "separator size bound");
    ver->add_option("--gamma-cap", va.gamma_cap);
    ver->add_option("--beta", va.beta);

    std::string rin, rsol, rout;
    auto* ren = app.add_subcommand("render", "SVG picture");
    ren->add_option("-i,--in", rin)->required();
    ren->add_option("--solution", rsol);
    ren->add_option("-o,--out", rout);

    BenchArgs ba;
    auto* ben = app.add_subcommand("bench", "seeded solver sweep, CSV output");
    ben->add_option("--seed", ba.seed);
    ben->add_option("--count", ba.count);
    ben->add_option("--threads", ba.threads);
    ben->add_option("--objects", ba.objects);
    ben->add_option("--terminals", ba.terminals);
    ben->add_option("--alpha", ba.alpha);
    ben->add_option("--engines", ba.engines, "comma separated");
    ben->add_option("-o,--out", ba.out);
    bool no_timing = false;
    ben->add_flag("--no-timing", no_timing, "leave the ms column empty so output is byte-stable");

    try {
        app.parse(argc, argv);
    } catch (const CLI::ParseError& e) {
        app.exit(e);
        return e.get_exit_code() == 0 ? ok : usage;
    }
    ba.timing = !no_timing;

    try {
        if (*gen) return run_gen(ga);
        if (*red) return run_reduce(ra);
        if (*sol) return run_solve(sa);
        if (*ver) return run_verify(va);
        if (*ren) return run_render(rin, rsol, rout);
        if (*ben) return run_bench(ba);
    } catch (const CapExceeded& e) {
        std::cerr << "cap exceeded: " << e.what() << "\n";
        return cap;
    } catch (const AssumptionError& e) {
        std::cerr << "assumption violated: " << e.what() << "\n";
        for (auto& v : e.violations) std::cerr << "  " << v << "\n";
        return failed;
    } catch (const std::invalid_argument& e) {
        // malformed files and inputs outside a reduction's domain, such as odd x for mngt-squares
        std::cerr << "error: " << e.what() << "\n";
        return usage;
    } catch (const std::exception& e) {
        std::cerr << "error: " << e.what() << "\n";
        return failed;
    }
    return usage;
}
