#pragma once

#include <string>

#include "json.hpp"
#include "liftdiam/complex2.hpp"
#include "liftdiam/covering.hpp"
#include "liftdiam/groups.hpp"
#include "liftdiam/metric_graph.hpp"

namespace liftdiam::io {

using nlohmann::json;

json read_json_file(const std::string& path);
void write_text_file(const std::string& path, const std::string& text);

// Parsers throw InvalidInput naming the offending field or edge.
MetricGraph graph_from_json(const json& j);
json graph_to_json(const MetricGraph& g);

Voltage voltage_from_json(const json& j, const MetricGraph& g);
json voltage_to_json(const Voltage& v, const MetricGraph& g);

Presentation presentation_from_json(const json& j);
json presentation_to_json(const Presentation& p);

/// Optional "lengths": [[a, b, len], ...] by vertex index; missing edges get 1.
SimplicialComplex2 complex_from_json(const json& j);
json complex_to_json(const SimplicialComplex2& k);

/// {"start": {"edge": "e0", "offset": 0}, "segments": [{"edge": "e0", "from": 0, "to": 1}]}
PathRoute route_from_json(const json& j, const MetricGraph& g);
json route_to_json(const PathRoute& r, const MetricGraph& g);

json point_to_json(const EdgePoint& x, const MetricGraph& g);
json diameter_to_json(const Diameter& d, const MetricGraph& g);

}  // namespace liftdiam::io
