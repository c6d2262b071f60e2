#pragma once

#include <nlohmann/json.hpp>

#include "cdg/classification.hpp"
#include "cdg/group_graphs.hpp"
#include "cdg/recognition.hpp"

namespace cdg {

using Json = nlohmann::ordered_json;

// {"labels": {"v": "decimal"}}
Json labeling_json(const Graph& g, const DivisorLabeling& labeling);

// {"radicals": [...], "edges": [[x, y], ...]}
Json radical_graph_json(const RadicalGraph& rg);

// Verdict with labels resolved against g.
Json verdict_json(const Graph& g, const Verdict& verdict);

Json witness_json(const ObstructionWitness& witness);

Json sporadic_json(const SporadicRecord& record);

}  // namespace cdg
