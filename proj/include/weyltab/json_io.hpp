#pragma once

#include "weyltab/boxes.hpp"
#include "weyltab/calibration.hpp"
#include "weyltab/shape.hpp"

#include <json.hpp>

#include <string>

namespace weyltab {

using Json = nlohmann::ordered_json;

// Shape schema: {"type":"C","rank":2,"gamma":["0","1"],"J":[[0,1],[1,1]]}
// with gamma as exact rational strings in epsilon-coordinates and J entries
// as integer vectors in the simple-root basis.
Json shape_to_json(const PlacedShape& s);
PlacedShape shape_from_json(const Json& j);

Json tableau_set_to_json(const TableauSet& ts);

Json config_to_json(const BoxConfig& c);
Json book_to_json(const Book& b);

Json graph_to_json(const CalibrationGraph& g);
std::string graph_to_dot(const CalibrationGraph& g);

// Root in the simple-root basis; requires a genuine positive root.
std::vector<int> root_simple_coords(const RootSystem& rs, int pos_idx);
int root_from_simple_coords(const RootSystem& rs, const std::vector<int>& sc);

}  // namespace weyltab
