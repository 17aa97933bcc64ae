#include "causalex/model.hpp"

#include <algorithm>
#include <map>
#include <sstream>

#include "causalex/errors.hpp"

namespace causalex {

// ---------------------------------------------------------------------------
// Signature
// ---------------------------------------------------------------------------

bool Range::contains(const Value& v) const {
    return std::find(values.begin(), values.end(), v) != values.end();
}

const Range* Signature::find(const std::string& name) const {
    for (const auto& d : exogenous)
        if (d.name == name) return &d.range;
    for (const auto& d : endogenous)
        if (d.name == name) return &d.range;
    return nullptr;
}

bool Signature::is_exogenous(const std::string& name) const {
    for (const auto& d : exogenous)
        if (d.name == name) return true;
    return false;
}

bool Signature::is_endogenous(const std::string& name) const {
    for (const auto& d : endogenous)
        if (d.name == name) return true;
    return false;
}

// ---------------------------------------------------------------------------
// Expressions
// ---------------------------------------------------------------------------

ExprPtr make_lit(Value v) { return std::make_shared<Expr>(Expr{Expr::Lit{std::move(v)}}); }

ExprPtr make_var(std::string name) { return std::make_shared<Expr>(Expr{Expr::Var{std::move(name)}}); }

ExprPtr make_call(Op op, std::vector<ExprPtr> args) {
    return std::make_shared<Expr>(Expr{Expr::Call{op, std::move(args)}});
}

bool expr_equal(const Expr& a, const Expr& b) {
    if (a.node.index() != b.node.index()) return false;
    if (const auto* la = std::get_if<Expr::Lit>(&a.node))
        return la->value == std::get<Expr::Lit>(b.node).value;
    if (const auto* va = std::get_if<Expr::Var>(&a.node))
        return va->name == std::get<Expr::Var>(b.node).name;
    const auto& ca = std::get<Expr::Call>(a.node);
    const auto& cb = std::get<Expr::Call>(b.node);
    if (ca.op != cb.op || ca.args.size() != cb.args.size()) return false;
    for (std::size_t i = 0; i < ca.args.size(); ++i)
        if (!expr_equal(*ca.args[i], *cb.args[i])) return false;
    return true;
}

void collect_vars(const Expr& e, std::set<std::string>& out) {
    if (const auto* v = std::get_if<Expr::Var>(&e.node)) {
        out.insert(v->name);
    } else if (const auto* c = std::get_if<Expr::Call>(&e.node)) {
        for (const auto& a : c->args) collect_vars(*a, out);
    }
}

namespace {

const char* op_name(Op op) {
    switch (op) {
        case Op::Min: return "min";
        case Op::Max: return "max";
        case Op::And: return "and";
        case Op::Or: return "or";
        case Op::Not: return "not";
        case Op::Add: return "+";
        case Op::Sub: return "-";
        case Op::Mul: return "*";
        case Op::Eq: return "=";
        case Op::Ne: return "!=";
        case Op::Lt: return "<";
        case Op::Le: return "<=";
        case Op::If: return "if";
    }
    return "?";
}

std::int64_t need_int(const Value& v, Op op) {
    if (!v.is_int())
        throw EvalError(std::string(op_name(op)) + " applied to non-integer value '" + v.str() + "'");
    return v.as_int();
}

}  // namespace

Value eval_expr(const Expr& e, const Assignment& env) {
    if (const auto* l = std::get_if<Expr::Lit>(&e.node)) return l->value;
    if (const auto* v = std::get_if<Expr::Var>(&e.node)) {
        auto it = env.find(v->name);
        if (it == env.end()) throw EvalError("unbound variable '" + v->name + "'");
        return it->second;
    }
    const auto& c = std::get<Expr::Call>(e.node);
    auto arity = [&](std::size_t lo, std::size_t hi) {
        if (c.args.size() < lo || c.args.size() > hi)
            throw EvalError(std::string("bad arity for ") + op_name(c.op));
    };
    switch (c.op) {
        case Op::Min:
        case Op::Max: {
            arity(1, SIZE_MAX);
            std::int64_t acc = need_int(eval_expr(*c.args[0], env), c.op);
            for (std::size_t i = 1; i < c.args.size(); ++i) {
                std::int64_t x = need_int(eval_expr(*c.args[i], env), c.op);
                acc = c.op == Op::Min ? std::min(acc, x) : std::max(acc, x);
            }
            return Value(acc);
        }
        case Op::And:
        case Op::Or: {
            arity(1, SIZE_MAX);
            bool acc = c.op == Op::And;
            for (const auto& a : c.args) {
                bool x = need_int(eval_expr(*a, env), c.op) != 0;
                acc = c.op == Op::And ? (acc && x) : (acc || x);
            }
            return Value(std::int64_t(acc ? 1 : 0));
        }
        case Op::Not: {
            arity(1, 1);
            return Value(std::int64_t(need_int(eval_expr(*c.args[0], env), c.op) == 0 ? 1 : 0));
        }
        case Op::Add:
        case Op::Sub:
        case Op::Mul: {
            arity(2, 2);
            std::int64_t a = need_int(eval_expr(*c.args[0], env), c.op);
            std::int64_t b = need_int(eval_expr(*c.args[1], env), c.op);
            switch (c.op) {
                case Op::Add: return Value(a + b);
                case Op::Sub: return Value(a - b);
                default: return Value(a * b);
            }
        }
        case Op::Eq:
        case Op::Ne: {
            arity(2, 2);
            bool eq = eval_expr(*c.args[0], env) == eval_expr(*c.args[1], env);
            return Value(std::int64_t((c.op == Op::Eq) == eq ? 1 : 0));
        }
        case Op::Lt:
        case Op::Le: {
            arity(2, 2);
            std::int64_t a = need_int(eval_expr(*c.args[0], env), c.op);
            std::int64_t b = need_int(eval_expr(*c.args[1], env), c.op);
            return Value(std::int64_t((c.op == Op::Lt ? a < b : a <= b) ? 1 : 0));
        }
        case Op::If: {
            arity(3, 3);
            bool cond = need_int(eval_expr(*c.args[0], env), c.op) != 0;
            return eval_expr(*c.args[cond ? 1 : 2], env);
        }
    }
    throw EvalError("unknown operator");
}

// ---------------------------------------------------------------------------
// Models
// ---------------------------------------------------------------------------

const Equation* CausalModel::equation_for(const std::string& name) const {
    for (const auto& eq : equations)
        if (eq.target == name) return &eq;
    return nullptr;
}

namespace {

bool range_equal(const Range& a, const Range& b) { return a.values == b.values; }

bool decls_equal(const std::vector<VariableDecl>& a, const std::vector<VariableDecl>& b) {
    if (a.size() != b.size()) return false;
    for (std::size_t i = 0; i < a.size(); ++i)
        if (a[i].name != b[i].name || !range_equal(a[i].range, b[i].range)) return false;
    return true;
}

}  // namespace

bool model_equal(const CausalModel& a, const CausalModel& b) {
    if (a.id != b.id) return false;
    if (!decls_equal(a.signature.exogenous, b.signature.exogenous)) return false;
    if (!decls_equal(a.signature.endogenous, b.signature.endogenous)) return false;
    // Equations compare as target -> AST, independent of declaration order.
    if (a.equations.size() != b.equations.size()) return false;
    for (const auto& ea : a.equations) {
        const Equation* eb = b.equation_for(ea.target);
        if (!eb || !expr_equal(*ea.body, *eb->body)) return false;
    }
    return true;
}

// ---------------------------------------------------------------------------
// Enumeration
// ---------------------------------------------------------------------------

void for_each_assignment(const std::vector<std::pair<std::string, const Range*>>& vars,
                         const std::function<bool(const Assignment&)>& fn) {
    Assignment acc;
    std::function<bool(std::size_t)> go = [&](std::size_t i) -> bool {
        if (i == vars.size()) return fn(acc);
        for (const Value& v : vars[i].second->values) {
            acc[vars[i].first] = v;
            if (!go(i + 1)) return false;
        }
        acc.erase(vars[i].first);
        return true;
    };
    go(0);
}

// ---------------------------------------------------------------------------
// Validation
// ---------------------------------------------------------------------------

namespace {

// Referenced variables of an equation body, with their ranges, in a fixed
// (sorted-name) order. Unknown names are reported by the caller.
std::vector<std::pair<std::string, const Range*>> referenced(const Signature& sig, const Expr& body) {
    std::set<std::string> names;
    collect_vars(body, names);
    std::vector<std::pair<std::string, const Range*>> out;
    for (const auto& n : names)
        if (const Range* r = sig.find(n)) out.emplace_back(n, r);
    return out;
}

// Semantic dependency test per the definition: Y depends on X iff some
// assignment of the other referenced variables and two values of X give
// different outputs.
bool depends_on(const Signature& sig, const Equation& eq, const std::string& x) {
    auto refs = referenced(sig, *eq.body);
    auto it = std::find_if(refs.begin(), refs.end(), [&](const auto& p) { return p.first == x; });
    if (it == refs.end()) return false;
    const Range* xr = it->second;
    std::vector<std::pair<std::string, const Range*>> others;
    for (const auto& p : refs)
        if (p.first != x) others.push_back(p);
    bool found = false;
    for_each_assignment(others, [&](const Assignment& base) {
        Assignment env = base;
        env[x] = xr->values.front();
        Value first = eval_expr(*eq.body, env);
        for (std::size_t i = 1; i < xr->values.size(); ++i) {
            env[x] = xr->values[i];
            if (!(eval_expr(*eq.body, env) == first)) {
                found = true;
                return false;
            }
        }
        return true;
    });
    return found;
}

std::string assignment_str(const Assignment& a) {
    std::ostringstream os;
    bool first = true;
    for (const auto& [k, v] : a) {
        if (!first) os << ", ";
        os << k << "=" << v.str();
        first = false;
    }
    return os.str();
}

}  // namespace

ValidationReport validate_model(const CausalModel& model) {
    ValidationReport report;
    auto add = [&](ViolationKind kind, std::string msg) {
        report.violations.push_back({kind, std::move(msg), std::nullopt, {}});
    };

    const Signature& sig = model.signature;

    // Name clashes and range sanity.
    std::map<std::string, int> seen;
    auto check_decls = [&](const std::vector<VariableDecl>& decls) {
        for (const auto& d : decls) {
            if (++seen[d.name] == 2) add(ViolationKind::NameClash, "duplicate variable name '" + d.name + "'");
            if (d.range.values.empty())
                add(ViolationKind::BadRange, "empty range for '" + d.name + "'");
            std::set<Value> uniq(d.range.values.begin(), d.range.values.end());
            if (uniq.size() != d.range.values.size())
                add(ViolationKind::BadRange, "duplicate range value for '" + d.name + "'");
        }
    };
    check_decls(sig.exogenous);
    check_decls(sig.endogenous);

    // Exactly one equation per endogenous variable; targets endogenous.
    std::map<std::string, int> eq_count;
    for (const auto& eq : model.equations) {
        ++eq_count[eq.target];
        if (!sig.is_endogenous(eq.target))
            add(ViolationKind::BadTarget, "equation for non-endogenous '" + eq.target + "'");
    }
    for (const auto& d : sig.endogenous) {
        auto it = eq_count.find(d.name);
        if (it == eq_count.end())
            add(ViolationKind::MissingEquation, "no equation for '" + d.name + "'");
        else if (it->second > 1)
            add(ViolationKind::DuplicateEquation, "multiple equations for '" + d.name + "'");
    }

    // Body references: known names only, and never the target itself.
    bool refs_ok = true;
    for (const auto& eq : model.equations) {
        std::set<std::string> names;
        collect_vars(*eq.body, names);
        for (const auto& n : names) {
            if (n == eq.target) {
                add(ViolationKind::SelfReference, "equation for '" + eq.target + "' references itself");
                refs_ok = false;
            } else if (!sig.find(n)) {
                add(ViolationKind::UnknownReference,
                    "equation for '" + eq.target + "' references unknown '" + n + "'");
                refs_ok = false;
            }
        }
    }

    if (!report.ok() && !refs_ok) return report;

    // Totality: every joint assignment of referenced variables must evaluate
    // into the target's range.
    bool total_ok = true;
    for (const auto& eq : model.equations) {
        const Range* target_range = sig.find(eq.target);
        if (!target_range) continue;
        auto refs = referenced(sig, *eq.body);
        for_each_assignment(refs, [&](const Assignment& env) {
            try {
                Value out = eval_expr(*eq.body, env);
                if (!target_range->contains(out)) {
                    Violation v{ViolationKind::OutOfRange,
                                "equation for '" + eq.target + "' yields out-of-range value " + out.str() +
                                    " at {" + assignment_str(env) + "}",
                                env,
                                {}};
                    report.violations.push_back(std::move(v));
                    total_ok = false;
                    return false;  // one witness per equation
                }
            } catch (const EvalError& ex) {
                Violation v{ViolationKind::EvalFault,
                            "equation for '" + eq.target + "' fails at {" + assignment_str(env) +
                                "}: " + ex.what(),
                            env,
                            {}};
                report.violations.push_back(std::move(v));
                total_ok = false;
                return false;
            }
            return true;
        });
    }
    if (!total_ok) return report;

    // Dependency cycles.
    DependencyGraph g = dependency_graph(model);
    std::map<std::string, std::vector<std::string>> adj;
    for (const auto& [from, to] : g.edges) adj[from].push_back(to);
    std::map<std::string, int> state;  // 0 unvisited, 1 on stack, 2 done
    std::vector<std::string> stack;
    std::vector<std::string> cycle;
    std::function<bool(const std::string&)> dfs = [&](const std::string& n) -> bool {
        state[n] = 1;
        stack.push_back(n);
        for (const auto& m : adj[n]) {
            if (state[m] == 1) {
                auto it = std::find(stack.begin(), stack.end(), m);
                cycle.assign(it, stack.end());
                cycle.push_back(m);
                return true;
            }
            if (state[m] == 0 && dfs(m)) return true;
        }
        stack.pop_back();
        state[n] = 2;
        return false;
    };
    for (const auto& n : g.nodes) {
        if (state[n] == 0 && dfs(n)) {
            std::ostringstream os;
            os << "dependency cycle [";
            for (std::size_t i = 0; i < cycle.size(); ++i) os << (i ? "," : "") << cycle[i];
            os << "]";
            Violation v{ViolationKind::Cycle, os.str(), std::nullopt, cycle};
            report.violations.push_back(std::move(v));
            break;
        }
    }

    return report;
}

DependencyGraph dependency_graph(const CausalModel& model) {
    DependencyGraph g;
    for (const auto& d : model.signature.endogenous) g.nodes.push_back(d.name);
    for (const auto& eq : model.equations) {
        if (!model.signature.is_endogenous(eq.target)) continue;
        std::set<std::string> names;
        collect_vars(*eq.body, names);
        for (const auto& x : names) {
            if (!model.signature.is_endogenous(x)) continue;  // graph over V only
            if (depends_on(model.signature, eq, x)) g.edges.insert({x, eq.target});
        }
    }
    return g;
}

// ---------------------------------------------------------------------------
// Solving
// ---------------------------------------------------------------------------

void check_context(const Signature& sig, const Context& context) {
    for (const auto& d : sig.exogenous) {
        auto it = context.find(d.name);
        if (it == context.end()) throw TypeError("context missing exogenous '" + d.name + "'");
        if (!d.range.contains(it->second))
            throw TypeError("context value " + it->second.str() + " out of range for '" + d.name + "'");
    }
    for (const auto& [k, v] : context)
        if (!sig.is_exogenous(k)) throw TypeError("context assigns non-exogenous '" + k + "'");
}

namespace {

// Kahn topological order of the endogenous variables under the reference
// graph (which contains the semantic dependency graph). Returns false when
// references are cyclic; a valid model may still solve via fixed point.
bool reference_topo_order(const CausalModel& model, std::vector<const Equation*>& out) {
    const auto& endo = model.signature.endogenous;
    std::map<std::string, std::set<std::string>> refs;  // target -> referenced endo vars
    std::map<std::string, int> indeg;
    for (const auto& d : endo) indeg[d.name] = 0;
    for (const auto& eq : model.equations) {
        std::set<std::string> names;
        collect_vars(*eq.body, names);
        std::set<std::string> endo_refs;
        for (const auto& n : names)
            if (model.signature.is_endogenous(n)) endo_refs.insert(n);
        refs[eq.target] = endo_refs;
        indeg[eq.target] = static_cast<int>(endo_refs.size());
    }
    std::vector<std::string> ready;
    for (const auto& d : endo)
        if (indeg[d.name] == 0) ready.push_back(d.name);
    std::vector<std::string> order;
    std::size_t next = 0;
    while (next < ready.size()) {
        std::string n = ready[next++];
        order.push_back(n);
        for (const auto& d : endo) {
            if (refs[d.name].erase(n) && --indeg[d.name] == 0) ready.push_back(d.name);
        }
    }
    if (order.size() != endo.size()) return false;
    out.clear();
    for (const auto& n : order) out.push_back(model.equation_for(n));
    return true;
}

}  // namespace

Assignment solve_with(const CausalModel& model, const Context& context, const Assignment& overrides) {
    Assignment env = context;
    for (const auto& [k, v] : overrides) env[k] = v;

    std::vector<const Equation*> order;
    if (reference_topo_order(model, order)) {
        for (const Equation* eq : order) {
            if (overrides.count(eq->target)) continue;
            env[eq->target] = eval_expr(*eq->body, env);
        }
        return env;
    }

    // References are cyclic but semantic dependencies may not be: iterate to
    // the fixed point, seeding every endogenous variable with its first range
    // value. Convergence within |V| rounds is guaranteed for valid models.
    for (const auto& d : model.signature.endogenous)
        if (!env.count(d.name)) env[d.name] = d.range.values.front();
    std::size_t rounds = model.signature.endogenous.size() + 1;
    for (std::size_t r = 0; r < rounds; ++r) {
        bool changed = false;
        for (const auto& eq : model.equations) {
            if (overrides.count(eq.target)) continue;
            Value v = eval_expr(*eq.body, env);
            if (!(env[eq.target] == v)) {
                env[eq.target] = v;
                changed = true;
            }
        }
        if (!changed) return env;
    }
    throw InvalidModelError("model '" + model.id + "' has no stable solution (cyclic dependencies)");
}

Assignment solve(const Setting& setting) {
    if (!setting.model) throw InvalidModelError("setting has no model");
    ValidationReport report = validate_model(*setting.model);
    if (!report.ok()) {
        std::string msg = "invalid model '" + setting.model->id + "': " + report.violations.front().message;
        throw InvalidModelError(msg);
    }
    check_context(setting.model->signature, setting.context);
    return solve_with(*setting.model, setting.context, {});
}

CausalModel intervene(const CausalModel& model, const Intervention& iv) {
    for (const auto& [name, value] : iv.assignment) {
        const Range* r = model.signature.find(name);
        if (!r || !model.signature.is_endogenous(name))
            throw TypeError("intervention on unknown or non-endogenous variable '" + name + "'");
        if (!r->contains(value))
            throw TypeError("intervention value " + value.str() + " out of range for '" + name + "'");
    }
    CausalModel out = model;
    for (auto& eq : out.equations) {
        auto it = iv.assignment.find(eq.target);
        if (it != iv.assignment.end()) eq.body = make_lit(it->second);
    }
    return out;
}

}  // namespace causalex
