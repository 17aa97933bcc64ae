#pragma once

#include <memory>
#include <string>
#include <variant>
#include <vector>

#include "causalex/model.hpp"
#include "causalex/value.hpp"

namespace causalex {

// X = x over an endogenous or exogenous variable.
struct PrimitiveEvent {
    std::string variable;
    Value value;

    friend bool operator==(const PrimitiveEvent&, const PrimitiveEvent&) = default;
    friend auto operator<=>(const PrimitiveEvent&, const PrimitiveEvent&) = default;
};

// Boolean combination of primitive events.
struct BoolExpr;
using FormulaPtr = std::shared_ptr<const BoolExpr>;

struct BoolExpr {
    struct Event {
        PrimitiveEvent event;
    };
    struct Constant {
        bool value;
    };
    struct Not {
        FormulaPtr f;
    };
    struct And {
        FormulaPtr lhs, rhs;
    };
    struct Or {
        FormulaPtr lhs, rhs;
    };
    struct Implies {
        FormulaPtr lhs, rhs;
    };

    std::variant<Event, Constant, Not, And, Or, Implies> node;
};

FormulaPtr f_event(PrimitiveEvent e);
FormulaPtr f_const(bool v);
FormulaPtr f_not(FormulaPtr f);
FormulaPtr f_and(FormulaPtr a, FormulaPtr b);
FormulaPtr f_or(FormulaPtr a, FormulaPtr b);
FormulaPtr f_implies(FormulaPtr a, FormulaPtr b);

bool formula_equal(const BoolExpr& a, const BoolExpr& b);
void collect_events(const BoolExpr& f, std::vector<PrimitiveEvent>& out);

// Truth under a total assignment; events over unbound variables are a
// TypeError (they cannot arise after check_formula).
bool eval_formula(const BoolExpr& f, const Assignment& env);

// Intervention prefix [Y1<-y1, ..., Yk<-yk] over distinct endogenous
// variables, followed by a Boolean body. An empty prefix is the plain
// Boolean formula.
struct CausalFormula {
    std::vector<std::pair<std::string, Value>> interventions;
    FormulaPtr body;
};

CausalFormula plain(FormulaPtr body);

bool causal_formula_equal(const CausalFormula& a, const CausalFormula& b);

// Well-typedness against a signature: known variables, values in range,
// intervention targets endogenous and distinct. Throws TypeError.
void check_formula(const Signature& sig, const CausalFormula& f);
void check_events(const Signature& sig, const std::vector<PrimitiveEvent>& events,
                  bool require_endogenous, bool require_distinct);

// (M,u) |= psi: applies the intervention prefix, solves, evaluates the body.
// The model is assumed validated (settings are validated at load); the
// formula is type-checked here.
bool satisfies(const Setting& setting, const CausalFormula& formula);

// Canonical conjunction of events, sorted by variable name; the empty list
// gives the constant-true formula. Duplicate variables are a TypeError.
FormulaPtr conjunction_of(std::vector<PrimitiveEvent> events);

}  // namespace causalex
