#pragma once

#include <map>
#include <optional>
#include <string>
#include <utility>
#include <vector>

#include <json.hpp>

#include "causalex/explanation.hpp"
#include "causalex/formula.hpp"
#include "causalex/model.hpp"
#include "causalex/rational.hpp"

namespace causalex {

using Json = nlohmann::ordered_json;

// model <id> { exo <name> : {v1,...} ... endo <name> : {v1,...} = <expr> ... }
// Bare identifiers in equation bodies resolve to variables of the model's
// signature, or else to symbolic value literals appearing in some declared
// range; anything else is a resolution error with its source position.
std::vector<CausalModel> parse_models(const std::string& text);

// [Y1<-y1, ...] body, prefix optional; body connectives ! & | -> with that
// precedence (tightest first), events X=v, constants true/false, parens.
CausalFormula parse_formula(const std::string& text, const Signature& sig);

// "X1=v1, X2=v2, ..." against the exogenous part of the signature.
Context parse_context(const std::string& text, const Signature& sig);

// Same surface syntax, no signature check (resolved by the caller later).
Assignment parse_assignments(const std::string& text);

// A conjunction of primitive events (the --x form). Parsed as a formula,
// then required to be a conjunction of distinct endogenous events.
std::vector<PrimitiveEvent> parse_conjunction(const std::string& text, const Signature& sig);

// "X1=v1, ..." giving alternate values for exactly the variables of the
// given conjunction; returned aligned with it.
std::vector<Value> parse_contrast(const std::string& text, const Signature& sig,
                                  const std::vector<PrimitiveEvent>& conjunction);

// state <id> { setting <model-id> { U1=v1, ... } pr p/q ... }
// Exactly one state block per document.
EpistemicState parse_state(const std::string& text, const std::map<std::string, ModelPtr>& models);

// One corpus/CLI query. Loaded documents keep raw formula/context text;
// resolution happens at execution time once the models are loaded.
struct QueryDocument {
    std::string id;
    std::string kind;  // validate|solve|check-cause|find-causes|check-explanation|find-explanations|score|compare
    std::vector<std::string> model_files;  // paths, relative to the document
    std::optional<std::string> state_file;
    std::optional<std::string> model_id;
    std::optional<Assignment> context;  // raw values; range-checked at execution
    std::optional<std::string> phi;
    std::optional<std::string> x;
    std::optional<std::string> x2;
    std::optional<std::string> contrast;
    std::optional<std::int64_t> max_size;
    bool ex1b_conditional = false;
    std::vector<std::string> notes;
    std::vector<std::pair<std::string, Json>> expect;  // JSON pointer -> expected value
};

// query <id> { kind "..." models "file" state "file" model <id>
//              context { ... } phi "..." x "..." ... expect { "/ptr" value ... } }
std::vector<QueryDocument> parse_queries(const std::string& text);

}  // namespace causalex
