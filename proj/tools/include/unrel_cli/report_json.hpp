#pragma once

#include <json.hpp>

#include "unrel/engine.hpp"
#include "unrel/gomory_hu.hpp"

namespace unrel::cli {

using Json = nlohmann::ordered_json;

/// log10 of w, or null for an exact zero.
Json log10_or_null(LogWeight w);

/// Estimate report of `estimate`. Wall time is left out so that equal
/// seeds give byte-identical output.
Json estimate_json(const EngineResult& result, const MultiGraph& g, double p, double eps);

/// Nested {n, m, lambda, gamma, q, p, decision, method, children}.
Json trace_json(const TraceNode& node);

Json stats_json(const MultiGraph& g, const GomoryHuTree& tree);

}  // namespace unrel::cli
