#pragma once

#include <iosfwd>
#include <string>

#include <json.hpp>

#include "specmate/pipeline.hpp"

namespace specmate {

// JSON views of the pipeline results.  Schema field "schema_version" guards
// downstream consumers; every big integer is a decimal string.
nlohmann::json report_to_json(const AnalysisReport& rep);
nlohmann::json batch_to_json(const BatchSummary& sum);

// Plain-text renderings for the CLI.
std::string report_to_text(const AnalysisReport& rep);
std::string batch_to_text(const BatchSummary& sum);

// CSV with one row per accepted graph.  with_millis=false drops the timing
// column, making the bytes reproducible run to run.
void batch_to_csv(std::ostream& out, const BatchSummary& sum, bool with_millis = true);

}  // namespace specmate
