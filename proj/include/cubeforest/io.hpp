#pragma once

#include <string>
#include <vector>

#include <json.hpp>

#include "cubeforest/complex.hpp"
#include "cubeforest/constructions.hpp"
#include "cubeforest/event_structure.hpp"
#include "cubeforest/graph.hpp"
#include "cubeforest/median_graph.hpp"
#include "cubeforest/tree_embedding.hpp"

namespace cubeforest::io {

using json = nlohmann::ordered_json;

// Parse failures and schema mismatches throw Error(InvalidInput).
json parse(const std::string& text);
json read_file(const std::string& path);
void write_file(const std::string& path, const std::string& text);
std::string dump(const json& j);  // two-space indent, trailing newline

// {"vertices":[0..n-1], "edges":[[u,v],...], "basepoint":k?}
json to_json(const MedianGraph& g);
json to_json(const Graph& g);
MedianGraph median_graph_from_json(const json& j);
Graph graph_from_json(const json& j);

json hyperplanes_json(const Complex& x);
json contact_graph_json(const ContactGraph& c);
// cross edges solid, osculations dashed
std::string contact_graph_dot(const ContactGraph& c);

// {"method":..., "colours":{"h":c}, "num_colours":k, "proper":b, "delta":d}
json colouring_json(const std::string& method, const Colouring& c, bool proper, int delta);
Colouring colouring_from_json(const json& j, int expected_size);

json to_json(const BoxFamily& b);
BoxFamily boxes_from_json(const json& j);

// {"points":[...], "walls":[[[side 0 points],[side 1 points]],...]}; points
// are any JSON scalars, referenced by value
json to_json(const Wallspace& w);
Wallspace wallspace_from_json(const json& j);

// {"events":[...], "causality":[[e,f],...], "conflict":[[e,f],...]}; the
// causality list is closed transitively on load and written as covers
json to_json(const EventStructure& es);
EventStructure event_structure_from_json(const json& j);

json to_json(const std::vector<TreeFactor>& factors, const IsometryReport& rep);
json to_json(const Recubulation& r);
json labeling_json(const Labeling& l);

}  // namespace cubeforest::io
