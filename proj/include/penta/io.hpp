#pragma once

#include "penta/grass.hpp"
#include "penta/network.hpp"

#include <json.hpp>

namespace penta {

using json = nlohmann::json;

json matrix_to_json(const RatMat& m);
RatMat matrix_from_json(const json& j);

/// Weight tuple serialization: entries as exact rational strings.
json weights_to_json(const GrassWeights& w);
GrassWeights weights_from_json(const json& j);

/// Network serialization: vertices with colors and counterclockwise
/// half-edge order, edges with endpoints, cut crossings and labels.
json network_to_json(const Network& g);
Network network_from_json(const json& j);

} // namespace penta
