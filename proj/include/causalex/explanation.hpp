#pragma once

#include <optional>
#include <string>
#include <utility>
#include <vector>

#include "causalex/causality.hpp"
#include "causalex/formula.hpp"
#include "causalex/model.hpp"
#include "causalex/rational.hpp"

namespace causalex {

// The set K of settings an agent considers possible, with an exact,
// everywhere-positive probability that sums to 1. Order is the declaration
// order and is preserved in all evidence lists.
struct EpistemicState {
    std::string id;
    std::vector<Setting> settings;
    std::vector<Rational> probs;
};

// Throws on misaligned sizes, non-positive or non-unit-sum probabilities,
// duplicate settings, invalid member models, or ill-formed contexts.
void check_state(const EpistemicState& state);

// "<model-id>@<u1>=<v1>,..." with exogenous variables in declaration order.
std::string setting_label(const Setting& setting);

// Settings of K satisfying the formula, as indices into state.settings.
std::vector<std::size_t> extension(const EpistemicState& state, const CausalFormula& formula);

// Canonical (sorted, duplicate-checked) explanation candidate.
std::vector<PrimitiveEvent> canonical_events(std::vector<PrimitiveEvent> events);

// Per-setting outcome of the EX1(a) search.
struct Ex1aEvidence {
    std::size_t setting_index = 0;
    bool applicable = false;  // the setting satisfies X=x and phi
    bool success = false;
    std::optional<PrimitiveEvent> conjunct;       // the chosen conjunct X=x
    std::vector<PrimitiveEvent> augmentation;     // Y=y at actual solved values
};

struct Ex1aResult {
    bool holds = false;
    std::vector<Ex1aEvidence> evidence;  // one entry per setting, in K order
};

// EX1(a): in every setting satisfying X=x & phi, some conjunct of the
// candidate extends (by a conjunction over other endogenous variables at
// their actual solved values, searched by ascending size) to an actual cause
// of phi.
Ex1aResult check_ex1a(const EpistemicState& state, const std::vector<PrimitiveEvent>& expl,
                      const FormulaPtr& phi);

struct Ex1bResult {
    bool holds = false;
    std::vector<std::size_t> failing;  // indices of settings where [X<-x]phi fails
};

// EX1(b): [X<-x]phi holds in every setting of K.
Ex1bResult check_ex1b(const EpistemicState& state, const std::vector<PrimitiveEvent>& expl,
                      const FormulaPtr& phi);

struct ExplanationVerdict {
    Ex1aResult ex1a;
    Ex1bResult ex1b;
    bool ex2 = false;
    std::optional<std::vector<PrimitiveEvent>> ex2_violation;  // strict subset passing EX1(a)+EX1(b)
    bool ex3 = false;
    bool ex4 = false;
    bool is_explanation = false;  // ex1a & ex1b & ex2 & ex3
    bool is_nontrivial = false;   // is_explanation & ex4
};

ExplanationVerdict is_explanation(const EpistemicState& state, const std::vector<PrimitiveEvent>& expl,
                                  const FormulaPtr& phi);

struct FoundExplanation {
    std::vector<PrimitiveEvent> events;
    ExplanationVerdict verdict;
};

// All conjunctions of endogenous primitive events (variables endogenous in
// every model of K, values in every model's range) of size <= max_size that
// pass EX1(a), EX1(b), EX2 and EX3, in canonical order. max_size of nullopt
// means the number of common endogenous variables.
std::vector<FoundExplanation> find_explanations(const EpistemicState& state, const FormulaPtr& phi,
                                                std::optional<std::size_t> max_size = std::nullopt);

// Pr(settings where the EX1(a) search succeeds | X=x & phi). Errors when the
// conditioning event has zero probability.
Rational ex1a_score(const EpistemicState& state, const std::vector<PrimitiveEvent>& expl,
                    const FormulaPtr& phi);

// Pr of the settings satisfying [X<-x]phi; unconditional by default, or
// conditional on the extension of phi.
Rational ex1b_score(const EpistemicState& state, const std::vector<PrimitiveEvent>& expl,
                    const FormulaPtr& phi, bool conditional_on_phi = false);

// Pr(X=x | phi) over K. Errors when phi has zero probability.
Rational prior_score(const EpistemicState& state, const std::vector<PrimitiveEvent>& expl,
                     const FormulaPtr& phi);

enum class Ordering { Less, Equal, Greater };

struct ScorePair {
    Rational left;
    Rational right;
    Ordering order = Ordering::Equal;
};

// Pairwise order under each criterion separately; no aggregate.
struct ComparisonReport {
    ScorePair prior;
    ScorePair ex1a;
    ScorePair ex1b;
};

ComparisonReport compare_explanations(const EpistemicState& state,
                                      const std::vector<PrimitiveEvent>& left,
                                      const std::vector<PrimitiveEvent>& right, const FormulaPtr& phi,
                                      bool ex1b_conditional = false);

}  // namespace causalex
