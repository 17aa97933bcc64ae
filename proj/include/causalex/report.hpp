#pragma once

#include <string>
#include <vector>

#include <json.hpp>

#include "causalex/causality.hpp"
#include "causalex/explanation.hpp"

namespace causalex {

using Json = nlohmann::ordered_json;

enum class ReportFormat { Table, Tree };

// Tree: the JSON document, pretty-printed, byte-deterministic for a fixed
// input. Table: the same content flattened to "path = value" lines.
std::string emit_report(const Json& tree, ReportFormat format);

// Building blocks shared by the CLI and the corpus runner. Values appear as
// their token spellings; probabilities as "p/q" strings.
Json events_json(const std::vector<PrimitiveEvent>& events);
Json assignment_json(const Assignment& a);
Json cause_verdict_json(const CandidateCause& cand, const CauseVerdict& verdict);
Json explanation_verdict_json(const EpistemicState& state, const ExplanationVerdict& verdict);
Json validation_json(const ValidationReport& report);

}  // namespace causalex
