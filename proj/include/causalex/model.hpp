#pragma once

#include <functional>
#include <memory>
#include <optional>
#include <set>
#include <string>
#include <utility>
#include <variant>
#include <vector>

#include "causalex/value.hpp"

namespace causalex {

// ---------------------------------------------------------------------------
// Signature
// ---------------------------------------------------------------------------

// Finite, non-empty, duplicate-free value set. Declaration order is the
// canonical enumeration order everywhere.
struct Range {
    std::vector<Value> values;

    bool contains(const Value& v) const;
};

struct VariableDecl {
    std::string name;
    Range range;
};

struct Signature {
    std::vector<VariableDecl> exogenous;
    std::vector<VariableDecl> endogenous;

    const Range* find(const std::string& name) const;
    bool is_exogenous(const std::string& name) const;
    bool is_endogenous(const std::string& name) const;
};

// ---------------------------------------------------------------------------
// Expressions
// ---------------------------------------------------------------------------

enum class Op {
    Min,
    Max,
    And,
    Or,
    Not,
    Add,
    Sub,
    Mul,
    Eq,
    Ne,
    Lt,
    Le,
    If,  // if c then a else b, three args
};

struct Expr;
using ExprPtr = std::shared_ptr<const Expr>;

struct Expr {
    struct Lit {
        Value value;
    };
    struct Var {
        std::string name;
    };
    struct Call {
        Op op;
        std::vector<ExprPtr> args;
    };

    std::variant<Lit, Var, Call> node;
};

ExprPtr make_lit(Value v);
ExprPtr make_var(std::string name);
ExprPtr make_call(Op op, std::vector<ExprPtr> args);

bool expr_equal(const Expr& a, const Expr& b);
void collect_vars(const Expr& e, std::set<std::string>& out);

// Evaluates with the usual integer semantics: and/or/not and comparisons
// return 0/1 and treat any nonzero integer as true; min/max/+/-/* require
// integers; = and != accept any two values (cross-kind compares unequal).
// Throws EvalError on a type or arity fault or an unbound variable.
Value eval_expr(const Expr& e, const Assignment& env);

// ---------------------------------------------------------------------------
// Models
// ---------------------------------------------------------------------------

struct Equation {
    std::string target;  // endogenous
    ExprPtr body;
};

struct CausalModel {
    std::string id;
    Signature signature;
    std::vector<Equation> equations;  // declaration order

    const Equation* equation_for(const std::string& name) const;
};

using ModelPtr = std::shared_ptr<const CausalModel>;

bool model_equal(const CausalModel& a, const CausalModel& b);

// Total assignment over the exogenous variables.
using Context = Assignment;

struct Setting {
    ModelPtr model;
    Context context;
};

// Partial map from endogenous variables to forced values.
struct Intervention {
    Assignment assignment;
};

// ---------------------------------------------------------------------------
// Validation
// ---------------------------------------------------------------------------

enum class ViolationKind {
    NameClash,
    BadRange,
    MissingEquation,
    DuplicateEquation,
    BadTarget,
    SelfReference,
    UnknownReference,
    OutOfRange,   // witness holds the offending input assignment
    EvalFault,    // witness holds the offending input assignment
    Cycle,        // cycle holds the path, e.g. [X, Y, X]
};

struct Violation {
    ViolationKind kind;
    std::string message;
    std::optional<Assignment> witness;
    std::vector<std::string> cycle;
};

struct ValidationReport {
    std::vector<Violation> violations;

    bool ok() const { return violations.empty(); }
};

ValidationReport validate_model(const CausalModel& model);

// Directed graph over the endogenous variables, nodes in declaration order,
// with an edge X -> Y exactly when some assignment to the other variables
// and two values of X give Y's equation different outputs.
struct DependencyGraph {
    std::vector<std::string> nodes;
    std::set<std::pair<std::string, std::string>> edges;  // (from, to)
};

DependencyGraph dependency_graph(const CausalModel& model);

// ---------------------------------------------------------------------------
// Solving and intervening
// ---------------------------------------------------------------------------

// Unique solution of all equations with the exogenous variables fixed by the
// context. Validates the model and the context first; throws
// InvalidModelError / TypeError.
Assignment solve(const Setting& setting);

// Fast path: assumes the model validates (callers hold models that were
// validated once at load) and applies `overrides` as constant equations
// without materializing a new model. solve_with(m, u, iv) equals
// solve(intervene(m, iv), u) on valid inputs.
Assignment solve_with(const CausalModel& model, const Context& context, const Assignment& overrides);

// Returns a copy of the model with each intervened variable's equation
// replaced by the constant equation X = x. Throws TypeError for unknown or
// non-endogenous variables and out-of-range values.
CausalModel intervene(const CausalModel& model, const Intervention& iv);

// Context well-formedness against a signature (totality, membership).
void check_context(const Signature& sig, const Context& context);

// Enumerates every total assignment over the given variables, ranges in
// declaration order, last variable fastest. Calls fn for each; fn returning
// false stops early. vars may be empty (one empty assignment).
void for_each_assignment(const std::vector<std::pair<std::string, const Range*>>& vars,
                         const std::function<bool(const Assignment&)>& fn);

}  // namespace causalex
