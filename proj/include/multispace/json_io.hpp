#pragma once

#include <string>

#include "multispace/graphphase.hpp"
#include "multispace/multicosmos.hpp"

namespace multispace::io {

// Parses {"branes": [{"id", "omega": [...]}, ...],
//         "interactions": [{"a", "b", "lambda": [...]}, ...]}
// and builds the validated graph phase. Malformed JSON or schema violations
// raise std::invalid_argument with a narrative message.
graphphase::GraphPhase graph_from_json(const std::string& text);

// Serializes a graph phase back to the same schema (keys sorted, numbers in
// exact shortest round-trip form), ending with a newline.
std::string graph_to_json(const graphphase::GraphPhase& g);

// Parses {"subcosmoses": [{"id", "carrier": [...], "time_tag"}, ...],
//         "order": [[super, sub], ...],
//         "restrictions": [{"src", "dst", "map": {...}}, ...],
//         "intersections": [{"pair": [a, b], "meet": id}, ...]}
// and structurally validates the model. Raises std::invalid_argument on
// malformed input.
multicosmos::MultiCosmosModel model_from_json(const std::string& text);

// Serializes a model back to the same schema, ending with a newline.
std::string model_to_json(const multicosmos::MultiCosmosModel& m);

}  // namespace multispace::io
