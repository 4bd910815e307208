#pragma once

#include "json.hpp"

#include "qdom/graph.hpp"
#include "qdom/report.hpp"
#include "qdom/spanning.hpp"

namespace qdom::cli {

using nlohmann::json;

/// {"n": 3, "edges": [[0, 1], ...]}
json graph_to_json(const Graph& g);

/// {"claim", "outcome", "scope", "margins", "counts", "notes", "witnesses"}.
/// Non-finite margins serialize as null.
json report_to_json(const VerificationReport& r);

json trace_to_json(const ExtractionTrace& t);

}  // namespace qdom::cli
