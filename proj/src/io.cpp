#include "stg/io.hpp"

#include <algorithm>
#include <cmath>
#include <cstdio>
#include <fstream>
#include <sstream>
#include <unistd.h>

namespace stg {

std::string q_to_string(const Weight& w) {
    Weight c = w;
    c.canonicalize();
    return c.get_str();
}

Weight q_from_json(const Json& j) {
    try {
        if (j.is_number_integer()) return Weight(std::to_string(j.get<long long>()));
        if (j.is_string()) return parse_weight(j.get<std::string>());
    } catch (const std::invalid_argument&) {
    }
    throw FormatError("expected a rational \"p/q\", got " + j.dump());
}

Json wrap(const std::string& kind, Json payload) {
    Json j;
    j["schema_version"] = kSchemaVersion;
    j["kind"] = kind;
    j["payload"] = std::move(payload);
    return j;
}

std::pair<std::string, Json> unwrap(const Json& j) {
    if (!j.is_object() || !j.contains("schema_version") || !j.contains("kind") || !j.contains("payload"))
        throw FormatError("not an instance file: needs schema_version, kind and payload");
    if (j["schema_version"] != kSchemaVersion)
        throw FormatError("unsupported schema_version " + j["schema_version"].dump());
    return {j["kind"].get<std::string>(), j["payload"]};
}

namespace {

template <class F>
auto guarded(const char* what, F f) -> decltype(f()) {
    try {
        return f();
    } catch (const FormatError&) {
        throw;
    } catch (const Json::exception& e) {
        throw FormatError(std::string(what) + ": " + e.what());
    }
}

Json point_json(const Point& p) { return Json::array({p.x, p.y}); }
Point point_from(const Json& j) { return {j.at(0).get<double>(), j.at(1).get<double>()}; }

Json object_json(const GeometricObject& o) {
    Json j;
    j["shape"] = shape_name(o.kind);
    switch (o.kind) {
        case ShapeKind::disk:
            j["center"] = point_json(o.p);
            j["radius"] = o.r;
            break;
        case ShapeKind::axis_square:
            j["corner"] = point_json(o.p);
            j["side"] = o.r;
            break;
        case ShapeKind::rotated_square:
            j["center"] = point_json(o.p);
            j["l1_radius"] = o.r;
            break;
        case ShapeKind::polygon: {
            Json vs = Json::array();
            for (auto& v : o.verts) vs.push_back(point_json(v));
            j["vertices"] = vs;
            break;
        }
        case ShapeKind::point: j["at"] = point_json(o.p); break;
        case ShapeKind::rect:
            j["lower"] = point_json(o.p);
            j["upper"] = point_json(o.q);
            break;
    }
    j["weight"] = q_to_string(o.weight);
    j["terminal"] = o.terminal;
    return j;
}

GeometricObject object_from(const Json& j) {
    auto kind = shape_from_name(j.at("shape").get<std::string>());
    if (!kind) throw FormatError("unknown shape " + j.at("shape").dump());
    GeometricObject o;
    switch (*kind) {
        case ShapeKind::disk: o = GeometricObject::disk(point_from(j.at("center")), j.at("radius")); break;
        case ShapeKind::axis_square: o = GeometricObject::axis_square(point_from(j.at("corner")), j.at("side")); break;
        case ShapeKind::rotated_square:
            o = GeometricObject::rotated_square(point_from(j.at("center")), j.at("l1_radius"));
            break;
        case ShapeKind::polygon: {
            std::vector<Point> vs;
            for (auto& v : j.at("vertices")) vs.push_back(point_from(v));
            o = GeometricObject::polygon(vs);
            break;
        }
        case ShapeKind::point: o = GeometricObject::point(point_from(j.at("at"))); break;
        case ShapeKind::rect: o = GeometricObject::rect(point_from(j.at("lower")), point_from(j.at("upper"))); break;
    }
    o.weight = q_from_json(j.at("weight"));
    o.terminal = j.value("terminal", false);
    if (auto why = shape_problem(o); !why.empty()) throw FormatError("bad object: " + why);
    return o;
}

const char* class_name(ObjClass c) {
    switch (c) {
        case ObjClass::fat: return "fat";
        case ObjClass::disk: return "disk";
        case ObjClass::longobj: return "long";
    }
    return "?";
}

ObjClass class_from(const std::string& s) {
    if (s == "fat") return ObjClass::fat;
    if (s == "disk") return ObjClass::disk;
    if (s == "long") return ObjClass::longobj;
    throw FormatError("unknown object class " + s);
}

Json pairs_json(std::vector<std::pair<int, int>> ps) {
    for (auto& [a, b] : ps)
        if (a > b) std::swap(a, b);
    std::sort(ps.begin(), ps.end());
    Json j = Json::array();
    for (auto& [a, b] : ps) j.push_back(Json::array({a, b}));
    return j;
}

std::vector<std::pair<int, int>> pairs_from(const Json& j) {
    std::vector<std::pair<int, int>> out;
    for (auto& e : j) out.push_back({e.at(0).get<int>(), e.at(1).get<int>()});
    return out;
}

Json tiles_json(const std::vector<TileValue>& s) {
    Json j = Json::array();
    for (auto& [a, b] : s) j.push_back(Json::array({a, b}));
    return j;
}

std::vector<TileValue> tiles_from(const Json& j) {
    std::vector<TileValue> out;
    for (auto& e : j) out.push_back({e.at(0).get<int>(), e.at(1).get<int>()});
    return out;
}

Json square_json(const UnitSquare& s, long unit) {
    Json j;
    j["x"] = q_to_string(Weight(mpz_class(s.x), mpz_class(unit)));
    j["y"] = q_to_string(Weight(mpz_class(s.y), mpz_class(unit)));
    j["terminal"] = s.terminal;
    j["tag"] = s.tag;
    return j;
}

Json qpoint_json(const QPoint& p) { return Json::array({q_to_string(p.x), q_to_string(p.y)}); }
QPoint qpoint_from(const Json& j) { return {q_from_json(j.at(0)), q_from_json(j.at(1))}; }
Json qrect_json(const QRect& r) {
    return Json::array({q_to_string(r.x0), q_to_string(r.y0), q_to_string(r.x1), q_to_string(r.y1)});
}
QRect qrect_from(const Json& j) {
    return {q_from_json(j.at(0)), q_from_json(j.at(1)), q_from_json(j.at(2)), q_from_json(j.at(3))};
}

}  // namespace

Json to_json(const GeoInstance& gi) {
    Json objs = Json::array();
    for (auto& o : gi.objs) objs.push_back(object_json(o));
    return {{"k", gi.k}, {"objects", objs}};
}

GeoInstance geo_from_json(const Json& p) {
    return guarded("geometric", [&] {
        GeoInstance gi;
        gi.k = p.value("k", -1L);
        for (auto& o : p.at("objects")) gi.objs.push_back(object_from(o));
        return gi;
    });
}

Json to_json(const PlanarInstance& pi) {
    Json verts = Json::array();
    for (auto& q : pi.g.pos) verts.push_back(point_json(q));
    std::vector<std::tuple<int, int, double>> es;
    for (int u = 0; u < pi.g.n; u++)
        for (auto& [v, len] : pi.g.adj[u])
            if (v >= u) es.emplace_back(u, v, len);
    std::sort(es.begin(), es.end());
    Json edges = Json::array();
    for (auto& [u, v, len] : es) edges.push_back(Json::array({u, v, len}));
    Json objs = Json::array();
    for (size_t i = 0; i < pi.objs.size(); i++) {
        Json o;
        o["verts"] = pi.objs[i].verts;
        o["weight"] = q_to_string(pi.objs[i].weight);
        o["terminal"] = pi.objs[i].terminal;
        o["class"] = class_name(i < pi.cls.size() ? pi.cls[i] : ObjClass::fat);
        o["tau"] = i < pi.tau.size() ? pi.tau[i] : (pi.objs[i].verts.empty() ? -1 : pi.objs[i].verts[0]);
        if (i < pi.cover.size() && !pi.cover[i].empty()) o["cover"] = pi.cover[i];
        objs.push_back(o);
    }
    Json j;
    j["vertices"] = verts;
    j["edges"] = edges;
    j["objects"] = objs;
    j["r"] = pi.r;
    j["k"] = pi.k;
    j["xset"] = pi.xset;
    j["forest"] = pairs_json(pi.forest);
    return j;
}

PlanarInstance planar_from_json(const Json& p) {
    return guarded("planar-object", [&] {
        PlanarInstance pi;
        for (auto& v : p.at("vertices")) pi.g.add_vertex(point_from(v));
        for (auto& e : p.at("edges")) pi.g.add_edge(e.at(0).get<int>(), e.at(1).get<int>(), e.at(2).get<double>());
        bool any_cover = false;
        for (auto& o : p.at("objects")) {
            GraphObject go;
            go.verts = o.at("verts").get<std::vector<int>>();
            std::sort(go.verts.begin(), go.verts.end());
            go.verts.erase(std::unique(go.verts.begin(), go.verts.end()), go.verts.end());
            for (int v : go.verts)
                if (v < 0 || v >= pi.g.n) throw FormatError("object vertex out of range");
            if (go.verts.empty() || !induced_connected(pi.g, go.verts)) throw FormatError("object is not connected");
            go.weight = q_from_json(o.at("weight"));
            go.terminal = o.value("terminal", false);
            pi.objs.push_back(go);
            pi.cls.push_back(class_from(o.value("class", std::string("fat"))));
            pi.tau.push_back(o.value("tau", go.verts[0]));
            pi.cover.push_back(o.value("cover", std::vector<int>{}));
            any_cover |= !pi.cover.back().empty();
        }
        if (!any_cover) pi.cover.clear();
        pi.r = p.value("r", 0.0);
        pi.k = p.value("k", -1L);
        pi.xset = p.value("xset", std::vector<int>{});
        if (p.contains("forest")) pi.forest = pairs_from(p.at("forest"));
        return pi;
    });
}

Json to_json(const GridTilingInstance& g) {
    Json cells = Json::array();
    for (auto& row : g.sets) {
        Json r = Json::array();
        for (auto& s : row) r.push_back(tiles_json(s));
        cells.push_back(r);
    }
    return {{"x", g.x},
            {"y", g.y},
            {"N", g.N},
            {"variant", g.variant == TilingVariant::exact ? "exact" : "monotone"},
            {"sets", cells}};
}

GridTilingInstance tiling_from_json(const Json& p) {
    return guarded("grid-tiling", [&] {
        GridTilingInstance g;
        g.x = p.at("x");
        g.y = p.at("y");
        g.N = p.at("N");
        auto v = p.at("variant").get<std::string>();
        if (v == "exact")
            g.variant = TilingVariant::exact;
        else if (v == "monotone")
            g.variant = TilingVariant::monotone;
        else
            throw FormatError("unknown tiling variant " + v);
        for (auto& row : p.at("sets")) {
            g.sets.emplace_back();
            for (auto& s : row) {
                auto t = tiles_from(s);
                std::sort(t.begin(), t.end());
                t.erase(std::unique(t.begin(), t.end()), t.end());
                g.sets.back().push_back(t);
            }
        }
        try {
            validate_tiling(g);
        } catch (const std::invalid_argument& e) {
            throw FormatError(e.what());
        }
        return g;
    });
}

Json to_json(const Cnf& f) {
    Json cl = Json::array();
    for (auto& c : f.clauses) cl.push_back(c);
    return {{"variables", f.n}, {"clauses", cl}};
}

Cnf cnf_from_json(const Json& p) {
    return guarded("cnf", [&] {
        Cnf f;
        f.n = p.at("variables");
        for (auto& c : p.at("clauses")) {
            auto lits = c.get<std::vector<int>>();
            for (int l : lits)
                if (l == 0 || std::abs(l) > f.n) throw FormatError("literal out of range");
            f.clauses.push_back(lits);
        }
        return f;
    });
}

Json to_json(const SimpleGraph& g) { return {{"n", g.n}, {"edges", pairs_json(g.edges)}}; }

SimpleGraph graph_from_json(const Json& p) {
    return guarded("simple-graph", [&] {
        SimpleGraph g;
        g.n = p.at("n");
        g.edges = pairs_from(p.at("edges"));
        for (auto& [u, v] : g.edges) {
            if (u > v) std::swap(u, v);
            if (u < 0 || v >= g.n || u == v) throw FormatError("bad edge");
        }
        std::sort(g.edges.begin(), g.edges.end());
        return g;
    });
}

Json to_json(const Special3SC& s) {
    Json sets = Json::array();
    for (auto& t : s.sets) sets.push_back(t);
    return {{"edges", s.n}, {"vertices", s.m}, {"sets", sets}};
}

Special3SC sc_from_json(const Json& p) {
    return guarded("set-cover", [&] {
        Special3SC s;
        s.n = p.at("edges");
        s.m = p.at("vertices");
        for (auto& t : p.at("sets")) {
            auto v = t.get<std::vector<int>>();
            for (int e : v)
                if (e < 0 || e >= s.universe()) throw FormatError("set element out of range");
            s.sets.push_back(v);
        }
        return s;
    });
}

Json to_json(const RectInstance& r, const Special3SC& source) {
    Json pts = Json::array(), rects = Json::array();
    for (auto& q : r.points) pts.push_back(qpoint_json(q));
    for (auto& q : r.rects) rects.push_back(qrect_json(q));
    return {{"epsilon", q_to_string(r.epsilon)},
            {"Delta", q_to_string(r.Delta)},
            {"scale", q_to_string(r.scale)},
            {"points", pts},
            {"rects", rects},
            {"source", to_json(source)}};
}

std::pair<RectInstance, Special3SC> rects_from_json(const Json& p) {
    return guarded("rect-steiner", [&] {
        RectInstance r;
        r.epsilon = q_from_json(p.at("epsilon"));
        r.Delta = q_from_json(p.at("Delta"));
        r.scale = q_from_json(p.at("scale"));
        for (auto& q : p.at("points")) r.points.push_back(qpoint_from(q));
        for (auto& q : p.at("rects")) r.rects.push_back(qrect_from(q));
        Special3SC s = sc_from_json(p.at("source"));
        if ((int)r.points.size() != s.universe() || r.rects.size() != s.sets.size())
            throw FormatError("rect-steiner: counts disagree with the source set system");
        return std::pair{r, s};
    });
}

Json to_json(const SquareSteinerInstance& inst) {
    Json sq = Json::array();
    for (auto& s : inst.squares) sq.push_back(square_json(s, inst.p.unit()));
    return {{"params", {{"omega", inst.p.omega}, {"h", inst.p.h}, {"N", inst.p.N}}},
            {"x", inst.x},
            {"y", inst.y},
            {"k", inst.k},
            {"source", to_json(inst.source)},
            {"squares", sq}};
}

SquareSteinerInstance squares_from_json(const Json& p) {
    return guarded("square-steiner", [&] {
        GadgetParams gp;
        gp.omega = p.at("params").at("omega");
        gp.h = p.at("params").at("h");
        gp.N = p.at("params").at("N");
        GridTilingInstance src = tiling_from_json(p.at("source"));
        SquareSteinerInstance inst;
        try {
            inst = build_instance(src, gp);
        } catch (const std::invalid_argument& e) {
            throw FormatError(std::string("square-steiner: ") + e.what());
        }
        const Json& sq = p.at("squares");
        if (sq.size() != inst.squares.size() || p.at("k").get<long>() != inst.k)
            throw FormatError("square-steiner: square count or budget disagrees with the layout");
        for (size_t i = 0; i < sq.size(); i++)
            if (sq[i] != square_json(inst.squares[i], gp.unit()))
                throw FormatError("square-steiner: square " + std::to_string(i) + " disagrees with the layout");
        return inst;
    });
}

Json to_json(const Solution& s) {
    return {{"feasible", s.feasible}, {"weight", q_to_string(s.weight)}, {"chosen", s.chosen}};
}

Solution solution_from_json(const Json& p) {
    return guarded("solution", [&] {
        Solution s;
        s.feasible = p.value("feasible", true);
        s.weight = q_from_json(p.value("weight", Json("0")));
        s.chosen = p.at("chosen").get<std::vector<int>>();
        std::sort(s.chosen.begin(), s.chosen.end());
        s.chosen.erase(std::unique(s.chosen.begin(), s.chosen.end()), s.chosen.end());
        return s;
    });
}

Json witness_to_json(const TilingWitness& w) {
    Json rows = Json::array();
    for (auto& r : w) rows.push_back(tiles_json(r));
    return {{"cells", rows}};
}

TilingWitness witness_from_json(const Json& p) {
    return guarded("tiling-witness", [&] {
        TilingWitness w;
        for (auto& r : p.at("cells")) w.push_back(tiles_from(r));
        return w;
    });
}

const char* kind_of(const GeoInstance&) { return "geometric"; }
const char* kind_of(const PlanarInstance&) { return "planar-object"; }
const char* kind_of(const GridTilingInstance&) { return "grid-tiling"; }
const char* kind_of(const Cnf&) { return "cnf"; }
const char* kind_of(const SimpleGraph&) { return "simple-graph"; }
const char* kind_of(const Special3SC&) { return "set-cover"; }
const char* kind_of(const SquareSteinerInstance&) { return "square-steiner"; }
const char* kind_of(const Solution&) { return "solution"; }

std::string dump(const Json& j) { return j.dump(2) + "\n"; }

Json parse(const std::string& text) {
    try {
        return Json::parse(text);
    } catch (const Json::parse_error& e) {
        throw FormatError(std::string("invalid JSON: ") + e.what());
    }
}

std::string read_text_file(const std::string& path) {
    std::ifstream in(path, std::ios::binary);
    if (!in) throw FormatError("cannot open " + path);
    std::ostringstream ss;
    ss << in.rdbuf();
    return ss.str();
}

Json read_json_file(const std::string& path) { return parse(read_text_file(path)); }

void write_text_atomic(const std::string& path, const std::string& text) {
    std::string tmp = path + ".tmp." + std::to_string(::getpid());
    {
        std::ofstream out(tmp, std::ios::binary | std::ios::trunc);
        if (!out) throw std::runtime_error("cannot write " + tmp);
        out << text;
        out.flush();
        if (!out) throw std::runtime_error("write failed for " + tmp);
    }
    if (std::rename(tmp.c_str(), path.c_str()) != 0) {
        std::remove(tmp.c_str());
        throw std::runtime_error("cannot rename onto " + path);
    }
}

// ---- SVG ----

namespace {

struct Box {
    double x0 = 1e300, y0 = 1e300, x1 = -1e300, y1 = -1e300;
    void add(double x, double y) {
        x0 = std::min(x0, x);
        y0 = std::min(y0, y);
        x1 = std::max(x1, x);
        y1 = std::max(y1, y);
    }
    bool empty() const { return x0 > x1; }
};

std::string num(double v) {
    char buf[32];
    std::snprintf(buf, sizeof buf, "%.4g", v);
    return buf;
}

// flips y so that the picture has the usual orientation
struct Svg {
    Box b;
    double s = 1;
    std::ostringstream out;

    Svg(Box box, double width) : b(box) {
        if (b.empty()) b = {0, 0, 1, 1};
        double pad = 0.05 * std::max(b.x1 - b.x0, b.y1 - b.y0) + 1e-9;
        b.x0 -= pad, b.y0 -= pad, b.x1 += pad, b.y1 += pad;
        s = width / std::max(b.x1 - b.x0, 1e-9);
        out << "<svg xmlns=\"http://www.w3.org/2000/svg\" width=\"" << num(width) << "\" height=\""
            << num((b.y1 - b.y0) * s) << "\">\n<rect width=\"100%\" height=\"100%\" fill=\"white\"/>\n";
    }
    double X(double x) const { return (x - b.x0) * s; }
    double Y(double y) const { return (b.y1 - y) * s; }
    std::string done() {
        out << "</svg>\n";
        return out.str();
    }
    void polygon(const std::vector<Point>& ps, const std::string& style) {
        out << "<polygon points=\"";
        for (auto& p : ps) out << num(X(p.x)) << "," << num(Y(p.y)) << " ";
        out << "\" " << style << "/>\n";
    }
    void circle(Point c, double r, const std::string& style) {
        out << "<circle cx=\"" << num(X(c.x)) << "\" cy=\"" << num(Y(c.y)) << "\" r=\"" << num(r * s) << "\" "
            << style << "/>\n";
    }
    void dot(Point c, double px, const std::string& fill) {
        out << "<circle cx=\"" << num(X(c.x)) << "\" cy=\"" << num(Y(c.y)) << "\" r=\"" << num(px) << "\" fill=\""
            << fill << "\"/>\n";
    }
    void cross(Point c, double px, const std::string& color) {
        double x = X(c.x), y = Y(c.y);
        out << "<path d=\"M" << num(x - px) << " " << num(y - px) << " L" << num(x + px) << " " << num(y + px) << " M"
            << num(x - px) << " " << num(y + px) << " L" << num(x + px) << " " << num(y - px) << "\" stroke=\""
            << color << "\" stroke-width=\"1.5\"/>\n";
    }
    void line(Point a, Point c, const std::string& style) {
        out << "<line x1=\"" << num(X(a.x)) << "\" y1=\"" << num(Y(a.y)) << "\" x2=\"" << num(X(c.x)) << "\" y2=\""
            << num(Y(c.y)) << "\" " << style << "/>\n";
    }
};

std::vector<char> mark(size_t n, const std::vector<int>* chosen) {
    std::vector<char> m(n, 0);
    if (chosen)
        for (int i : *chosen)
            if (i >= 0 && (size_t)i < n) m[i] = 1;
    return m;
}

std::string fill_for(bool terminal, bool chosen) {
    if (terminal) return "fill=\"#d62728\" fill-opacity=\"0.25\" stroke=\"#d62728\"";
    if (chosen) return "fill=\"#1f77b4\" fill-opacity=\"0.35\" stroke=\"#1f77b4\"";
    return "fill=\"none\" stroke=\"#888\"";
}

const char* palette(int i) {
    static const char* colors[] = {"#1f77b4", "#ff7f0e", "#2ca02c", "#9467bd", "#8c564b", "#e377c2", "#17becf"};
    return colors[((i % 7) + 7) % 7];
}

}  // namespace

std::string render_svg(const GeoInstance& gi, const std::vector<int>* chosen) {
    Box b;
    for (auto& o : gi.objs) {
        if (o.kind == ShapeKind::disk) {
            b.add(o.p.x - o.r, o.p.y - o.r);
            b.add(o.p.x + o.r, o.p.y + o.r);
        } else {
            for (auto& p : o.boundary()) b.add(p.x, p.y);
            b.add(o.p.x, o.p.y);
        }
    }
    Svg svg(b, 800);
    auto m = mark(gi.objs.size(), chosen);
    for (size_t i = 0; i < gi.objs.size(); i++) {
        auto& o = gi.objs[i];
        auto style = fill_for(o.terminal, m[i]);
        if (o.kind == ShapeKind::disk)
            svg.circle(o.p, o.r, style);
        else if (o.kind == ShapeKind::point)
            svg.cross(o.p, 4, "#d62728");
        else
            svg.polygon(o.boundary(), style);
        if (o.terminal && o.kind != ShapeKind::point) {
            Point c = o.p;
            if (o.kind == ShapeKind::axis_square) c = {o.p.x + o.r / 2, o.p.y + o.r / 2};
            if (o.kind == ShapeKind::rect) c = {(o.p.x + o.q.x) / 2, (o.p.y + o.q.y) / 2};
            if (o.kind == ShapeKind::polygon) {
                c = {0, 0};
                for (auto& v : o.verts) c.x += v.x / o.verts.size(), c.y += v.y / o.verts.size();
            }
            svg.cross(c, 4, "#d62728");
        }
    }
    return svg.done();
}

std::string render_svg(const PlanarInstance& pi, const std::vector<int>* chosen) {
    Box b;
    for (auto& p : pi.g.pos) b.add(p.x, p.y);
    Svg svg(b, 800);
    for (int u = 0; u < pi.g.n; u++)
        for (auto& [v, len] : pi.g.adj[u])
            if (v > u) svg.line(pi.g.pos[u], pi.g.pos[v], "stroke=\"#ccc\" stroke-width=\"0.5\"");
    auto m = mark(pi.objs.size(), chosen);
    for (size_t i = 0; i < pi.objs.size(); i++) {
        auto& o = pi.objs[i];
        std::string color = o.terminal ? "#d62728" : m[i] ? "#1f77b4" : palette((int)i);
        if (!o.terminal && !m[i] && chosen) color = "#bbb";
        for (int v : o.verts) svg.dot(pi.g.pos[v], o.terminal || m[i] ? 3 : 1.5, color);
        if (o.terminal && i < pi.tau.size() && pi.tau[i] >= 0) svg.cross(pi.g.pos[pi.tau[i]], 5, "#d62728");
    }
    return svg.done();
}

std::string render_svg(const SquareSteinerInstance& inst, const std::vector<int>* chosen) {
    double u = (double)inst.p.unit();
    Box b;
    for (auto& s : inst.squares) {
        b.add(s.x / u, s.y / u);
        b.add(s.x / u + 1, s.y / u + 1);
    }
    Svg svg(b, 1600);
    auto m = mark(inst.squares.size(), chosen);
    std::vector<char> iface(inst.squares.size(), 0);
    for (auto& g : inst.gadgets)
        for (int i : g.interfaces) iface[i] = 1;
    for (size_t i = 0; i < inst.squares.size(); i++) {
        auto& s = inst.squares[i];
        double x = s.x / u, y = s.y / u;
        std::string color = palette(s.gadget);
        std::string style = m[i] ? "fill=\"" + color + "\" fill-opacity=\"0.3\" stroke=\"" + color + "\""
                                 : "fill=\"none\" stroke=\"" + color + "\" stroke-opacity=\"0.35\"";
        svg.polygon({{x, y}, {x + 1, y}, {x + 1, y + 1}, {x, y + 1}}, style + " stroke-width=\"0.4\"");
    }
    for (size_t i = 0; i < inst.squares.size(); i++) {
        auto& s = inst.squares[i];
        Point c{s.x / u + 0.5, s.y / u + 0.5};
        if (s.terminal) svg.cross(c, 3, "#000");
        if (iface[i]) svg.circle(c, 0.12, "fill=\"none\" stroke=\"#000\" stroke-width=\"0.6\"");
    }
    return svg.done();
}

std::string render_svg(const RectInstance& r, const std::vector<int>* chosen) {
    auto rects = r.normalized();
    auto pts = r.normalized_points();
    Box b;
    for (auto& q : rects) {
        b.add(q.x0.get_d(), q.y0.get_d());
        b.add(q.x1.get_d(), q.y1.get_d());
    }
    Svg svg(b, 800);
    auto m = mark(rects.size(), chosen);
    for (size_t i = 0; i < rects.size(); i++) {
        auto& q = rects[i];
        double x0 = q.x0.get_d(), y0 = q.y0.get_d(), x1 = q.x1.get_d(), y1 = q.y1.get_d();
        svg.polygon({{x0, y0}, {x1, y0}, {x1, y1}, {x0, y1}}, fill_for(false, m[i]) + " stroke-width=\"0.5\"");
    }
    for (auto& p : pts) svg.cross({p.x.get_d(), p.y.get_d()}, 3, "#d62728");
    svg.dot({0, 0}, 2, "#000");
    return svg.done();
}

}  // namespace stg
