#pragma once

#include "stg/gadgets.hpp"
#include "stg/grid_tiling.hpp"
#include "stg/planar.hpp"
#include "stg/random_instances.hpp"
#include "stg/rect_hardness.hpp"
#include "stg/steiner.hpp"

#include "json.hpp"

#include <string>
#include <utility>

namespace stg {

using Json = nlohmann::json;

constexpr int kSchemaVersion = 1;

// Files look like {"schema_version": 1, "kind": ..., "payload": ...}. Weights and all gadget or rectangle
// coordinates are "p/q" strings; other coordinates are doubles.
struct FormatError : std::invalid_argument {
    using std::invalid_argument::invalid_argument;
};

std::string q_to_string(const Weight& w);
Weight q_from_json(const Json& j);  // "p/q", "p" or a JSON integer

Json wrap(const std::string& kind, Json payload);
// checks schema_version; returns (kind, payload)
std::pair<std::string, Json> unwrap(const Json& j);

Json to_json(const GeoInstance& gi);
GeoInstance geo_from_json(const Json& payload);
Json to_json(const PlanarInstance& pi);
PlanarInstance planar_from_json(const Json& payload);
Json to_json(const GridTilingInstance& g);
GridTilingInstance tiling_from_json(const Json& payload);
Json to_json(const Cnf& f);
Cnf cnf_from_json(const Json& payload);
Json to_json(const SimpleGraph& g);
SimpleGraph graph_from_json(const Json& payload);
Json to_json(const Special3SC& s);
Special3SC sc_from_json(const Json& payload);
Json to_json(const RectInstance& r, const Special3SC& source);
std::pair<RectInstance, Special3SC> rects_from_json(const Json& payload);
// stores the parameters, the source monotone instance and the squares; reading rebuilds the layout and
// rejects files whose squares disagree with it
Json to_json(const SquareSteinerInstance& inst);
SquareSteinerInstance squares_from_json(const Json& payload);
Json to_json(const Solution& s);
Solution solution_from_json(const Json& payload);
Json witness_to_json(const TilingWitness& w);
TilingWitness witness_from_json(const Json& payload);

// kind names as used in files
const char* kind_of(const GeoInstance&);
const char* kind_of(const PlanarInstance&);
const char* kind_of(const GridTilingInstance&);
const char* kind_of(const Cnf&);
const char* kind_of(const SimpleGraph&);
const char* kind_of(const Special3SC&);
const char* kind_of(const SquareSteinerInstance&);
const char* kind_of(const Solution&);

std::string dump(const Json& j);  // two-space indent, trailing newline
Json parse(const std::string& text);
Json read_json_file(const std::string& path);
std::string read_text_file(const std::string& path);
// writes to a temporary sibling and renames it into place
void write_text_atomic(const std::string& path, const std::string& text);

std::string render_svg(const GeoInstance& gi, const std::vector<int>* chosen = nullptr);
std::string render_svg(const PlanarInstance& pi, const std::vector<int>* chosen = nullptr);
std::string render_svg(const SquareSteinerInstance& inst, const std::vector<int>* chosen = nullptr);
std::string render_svg(const RectInstance& r, const std::vector<int>* chosen = nullptr);

}  // namespace stg
