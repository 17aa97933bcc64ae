#pragma once

#include <string>
#include <vector>

#include "causalex/explanation.hpp"
#include "causalex/formula.hpp"
#include "causalex/model.hpp"

namespace causalex {

// Concrete syntax emitters. Every printer produces text the corresponding
// parser maps back to a structurally equal object (parse . print = id).

std::string print_expr(const Expr& e);
std::string print_model(const CausalModel& m);
std::string print_models(const std::vector<CausalModel>& models);

std::string print_formula(const CausalFormula& f);
std::string print_events(const std::vector<PrimitiveEvent>& events);  // "A = 1 & B = 0"

std::string print_state(const EpistemicState& state);

}  // namespace causalex
