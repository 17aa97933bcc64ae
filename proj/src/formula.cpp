#include "causalex/formula.hpp"

#include <algorithm>
#include <set>

#include "causalex/errors.hpp"

namespace causalex {

FormulaPtr f_event(PrimitiveEvent e) {
    return std::make_shared<BoolExpr>(BoolExpr{BoolExpr::Event{std::move(e)}});
}
FormulaPtr f_const(bool v) { return std::make_shared<BoolExpr>(BoolExpr{BoolExpr::Constant{v}}); }
FormulaPtr f_not(FormulaPtr f) { return std::make_shared<BoolExpr>(BoolExpr{BoolExpr::Not{std::move(f)}}); }
FormulaPtr f_and(FormulaPtr a, FormulaPtr b) {
    return std::make_shared<BoolExpr>(BoolExpr{BoolExpr::And{std::move(a), std::move(b)}});
}
FormulaPtr f_or(FormulaPtr a, FormulaPtr b) {
    return std::make_shared<BoolExpr>(BoolExpr{BoolExpr::Or{std::move(a), std::move(b)}});
}
FormulaPtr f_implies(FormulaPtr a, FormulaPtr b) {
    return std::make_shared<BoolExpr>(BoolExpr{BoolExpr::Implies{std::move(a), std::move(b)}});
}

bool formula_equal(const BoolExpr& a, const BoolExpr& b) {
    if (a.node.index() != b.node.index()) return false;
    if (const auto* ea = std::get_if<BoolExpr::Event>(&a.node))
        return ea->event == std::get<BoolExpr::Event>(b.node).event;
    if (const auto* ca = std::get_if<BoolExpr::Constant>(&a.node))
        return ca->value == std::get<BoolExpr::Constant>(b.node).value;
    if (const auto* na = std::get_if<BoolExpr::Not>(&a.node))
        return formula_equal(*na->f, *std::get<BoolExpr::Not>(b.node).f);
    if (const auto* aa = std::get_if<BoolExpr::And>(&a.node)) {
        const auto& ab = std::get<BoolExpr::And>(b.node);
        return formula_equal(*aa->lhs, *ab.lhs) && formula_equal(*aa->rhs, *ab.rhs);
    }
    if (const auto* oa = std::get_if<BoolExpr::Or>(&a.node)) {
        const auto& ob = std::get<BoolExpr::Or>(b.node);
        return formula_equal(*oa->lhs, *ob.lhs) && formula_equal(*oa->rhs, *ob.rhs);
    }
    const auto& ia = std::get<BoolExpr::Implies>(a.node);
    const auto& ib = std::get<BoolExpr::Implies>(b.node);
    return formula_equal(*ia.lhs, *ib.lhs) && formula_equal(*ia.rhs, *ib.rhs);
}

void collect_events(const BoolExpr& f, std::vector<PrimitiveEvent>& out) {
    if (const auto* e = std::get_if<BoolExpr::Event>(&f.node)) {
        out.push_back(e->event);
    } else if (const auto* n = std::get_if<BoolExpr::Not>(&f.node)) {
        collect_events(*n->f, out);
    } else if (const auto* a = std::get_if<BoolExpr::And>(&f.node)) {
        collect_events(*a->lhs, out);
        collect_events(*a->rhs, out);
    } else if (const auto* o = std::get_if<BoolExpr::Or>(&f.node)) {
        collect_events(*o->lhs, out);
        collect_events(*o->rhs, out);
    } else if (const auto* i = std::get_if<BoolExpr::Implies>(&f.node)) {
        collect_events(*i->lhs, out);
        collect_events(*i->rhs, out);
    }
}

bool eval_formula(const BoolExpr& f, const Assignment& env) {
    if (const auto* e = std::get_if<BoolExpr::Event>(&f.node)) {
        auto it = env.find(e->event.variable);
        if (it == env.end()) throw TypeError("unknown variable '" + e->event.variable + "' in formula");
        return it->second == e->event.value;
    }
    if (const auto* c = std::get_if<BoolExpr::Constant>(&f.node)) return c->value;
    if (const auto* n = std::get_if<BoolExpr::Not>(&f.node)) return !eval_formula(*n->f, env);
    if (const auto* a = std::get_if<BoolExpr::And>(&f.node))
        return eval_formula(*a->lhs, env) && eval_formula(*a->rhs, env);
    if (const auto* o = std::get_if<BoolExpr::Or>(&f.node))
        return eval_formula(*o->lhs, env) || eval_formula(*o->rhs, env);
    const auto& i = std::get<BoolExpr::Implies>(f.node);
    return !eval_formula(*i.lhs, env) || eval_formula(*i.rhs, env);
}

CausalFormula plain(FormulaPtr body) { return CausalFormula{{}, std::move(body)}; }

bool causal_formula_equal(const CausalFormula& a, const CausalFormula& b) {
    return a.interventions == b.interventions && formula_equal(*a.body, *b.body);
}

void check_events(const Signature& sig, const std::vector<PrimitiveEvent>& events,
                  bool require_endogenous, bool require_distinct) {
    std::set<std::string> seen;
    for (const auto& e : events) {
        const Range* r = sig.find(e.variable);
        if (!r) throw TypeError("unknown variable '" + e.variable + "'");
        if (require_endogenous && !sig.is_endogenous(e.variable))
            throw TypeError("variable '" + e.variable + "' is not endogenous");
        if (!r->contains(e.value))
            throw TypeError("value " + e.value.str() + " out of range for '" + e.variable + "'");
        if (require_distinct && !seen.insert(e.variable).second)
            throw TypeError("duplicate variable '" + e.variable + "'");
    }
}

void check_formula(const Signature& sig, const CausalFormula& f) {
    std::vector<PrimitiveEvent> iv;
    for (const auto& [name, value] : f.interventions) iv.push_back({name, value});
    check_events(sig, iv, /*require_endogenous=*/true, /*require_distinct=*/true);
    std::vector<PrimitiveEvent> events;
    collect_events(*f.body, events);
    check_events(sig, events, /*require_endogenous=*/false, /*require_distinct=*/false);
}

bool satisfies(const Setting& setting, const CausalFormula& formula) {
    if (!setting.model) throw InvalidModelError("setting has no model");
    check_formula(setting.model->signature, formula);
    Assignment overrides;
    for (const auto& [name, value] : formula.interventions) overrides[name] = value;
    Assignment solution = solve_with(*setting.model, setting.context, overrides);
    return eval_formula(*formula.body, solution);
}

FormulaPtr conjunction_of(std::vector<PrimitiveEvent> events) {
    std::sort(events.begin(), events.end(),
              [](const PrimitiveEvent& a, const PrimitiveEvent& b) { return a.variable < b.variable; });
    for (std::size_t i = 1; i < events.size(); ++i)
        if (events[i].variable == events[i - 1].variable)
            throw TypeError("duplicate variable '" + events[i].variable + "' in conjunction");
    if (events.empty()) return f_const(true);
    FormulaPtr acc = f_event(events.front());
    for (std::size_t i = 1; i < events.size(); ++i) acc = f_and(acc, f_event(events[i]));
    return acc;
}

}  // namespace causalex
