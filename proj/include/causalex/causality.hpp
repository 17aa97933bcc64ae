#pragma once

#include <optional>
#include <string>
#include <vector>

#include "causalex/formula.hpp"
#include "causalex/model.hpp"

namespace causalex {

// Conjunction X1=x1 & ... & Xk=xk over distinct endogenous variables, kept
// sorted by variable name. An optional contrast supplies the alternate
// values x' aligned with the conjunction ("X=x rather than X=x'").
struct CandidateCause {
    std::vector<PrimitiveEvent> conjunction;
    std::optional<std::vector<Value>> contrast;
};

// Throws TypeError on empty/duplicate/ill-typed input; sorts the conjunction
// (and the aligned contrast) into canonical order.
CandidateCause make_candidate(const Signature& sig, std::vector<PrimitiveEvent> conjunction,
                              std::optional<std::vector<Value>> contrast = std::nullopt);

// The variables held fixed at their actual values while the candidate is
// pushed to the contrast values.
struct Witness {
    std::vector<std::string> fixed_set;   // W, sorted
    Assignment fixed_values;              // w = actual solution restricted to W
    std::vector<Value> contrast_values;   // x', aligned with the conjunction
};

struct CauseVerdict {
    bool ac1 = false;
    bool ac2 = false;
    std::optional<Witness> witness;
    bool ac3 = false;
    std::optional<std::vector<PrimitiveEvent>> ac3_violation;  // a strict subset that passes AC1+AC2
    bool is_cause = false;
    bool is_but_for = false;
};

// AC1: the candidate conjunction and phi both hold in the setting.
bool check_ac1(const Setting& setting, const CandidateCause& cand, const FormulaPtr& phi);

// AC2: first witness found searching W by ascending size (lexicographic
// within a size) and contrasts in range order (all joint alternates when the
// candidate carries no contrast). The fixed values are always the actual
// solved values.
std::optional<Witness> check_ac2(const Setting& setting, const CandidateCause& cand, const FormulaPtr& phi);

CauseVerdict is_actual_cause(const Setting& setting, const CandidateCause& cand, const FormulaPtr& phi);

struct FoundCause {
    CandidateCause cause;
    CauseVerdict verdict;
};

// All conjunctions over endogenous variables, at their actual solved values,
// of size <= max_size, that are actual causes of phi. Canonical order
// (size, then lexicographic variable names). Empty when phi fails in the
// setting. max_size of nullopt means |V|.
std::vector<FoundCause> find_actual_causes(const Setting& setting, const FormulaPtr& phi,
                                           std::optional<std::size_t> max_size = std::nullopt);

}  // namespace causalex
