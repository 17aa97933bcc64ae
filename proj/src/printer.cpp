#include "causalex/printer.hpp"

#include <sstream>

namespace causalex {

namespace {

// Binding strength: if < comparison < additive < multiplicative < atom.
enum Level { kIf = 0, kCmp = 1, kAdd = 2, kMul = 3, kAtom = 4 };

int expr_level(const Expr& e) {
    const auto* c = std::get_if<Expr::Call>(&e.node);
    if (!c) return kAtom;
    switch (c->op) {
        case Op::If: return kIf;
        case Op::Eq:
        case Op::Ne:
        case Op::Lt:
        case Op::Le: return kCmp;
        case Op::Add:
        case Op::Sub: return kAdd;
        case Op::Mul: return kMul;
        default: return kAtom;  // min/max/and/or/not use call syntax
    }
}

void print_expr_at(const Expr& e, int min_level, std::ostream& os) {
    int level = expr_level(e);
    bool parens = level < min_level;
    if (parens) os << "(";
    if (const auto* l = std::get_if<Expr::Lit>(&e.node)) {
        os << l->value.str();
    } else if (const auto* v = std::get_if<Expr::Var>(&e.node)) {
        os << v->name;
    } else {
        const auto& c = std::get<Expr::Call>(e.node);
        switch (c.op) {
            case Op::If:
                os << "if ";
                print_expr_at(*c.args[0], kIf, os);
                os << " then ";
                print_expr_at(*c.args[1], kIf, os);
                os << " else ";
                print_expr_at(*c.args[2], kIf, os);
                break;
            case Op::Eq:
            case Op::Ne:
            case Op::Lt:
            case Op::Le: {
                const char* op = c.op == Op::Eq ? "=" : c.op == Op::Ne ? "!=" : c.op == Op::Lt ? "<" : "<=";
                print_expr_at(*c.args[0], kAdd, os);
                os << " " << op << " ";
                print_expr_at(*c.args[1], kAdd, os);
                break;
            }
            case Op::Add:
            case Op::Sub:
                print_expr_at(*c.args[0], kAdd, os);
                os << (c.op == Op::Add ? " + " : " - ");
                print_expr_at(*c.args[1], kMul, os);
                break;
            case Op::Mul:
                print_expr_at(*c.args[0], kMul, os);
                os << " * ";
                print_expr_at(*c.args[1], kAtom, os);
                break;
            default: {
                const char* name = c.op == Op::Min   ? "min"
                                   : c.op == Op::Max ? "max"
                                   : c.op == Op::And ? "and"
                                   : c.op == Op::Or  ? "or"
                                                     : "not";
                os << name << "(";
                for (std::size_t i = 0; i < c.args.size(); ++i) {
                    if (i) os << ", ";
                    print_expr_at(*c.args[i], kIf, os);
                }
                os << ")";
                break;
            }
        }
    }
    if (parens) os << ")";
}

void print_range(const Range& r, std::ostream& os) {
    os << "{";
    for (std::size_t i = 0; i < r.values.size(); ++i) {
        if (i) os << ", ";
        os << r.values[i].str();
    }
    os << "}";
}

// true -> implies(1) -> or(2) -> and(3) -> not(4) -> atom(5)
enum FLevel { kImplies = 1, kOr = 2, kAnd = 3, kNot = 4, kFAtom = 5 };

int formula_level(const BoolExpr& f) {
    if (std::holds_alternative<BoolExpr::Implies>(f.node)) return kImplies;
    if (std::holds_alternative<BoolExpr::Or>(f.node)) return kOr;
    if (std::holds_alternative<BoolExpr::And>(f.node)) return kAnd;
    if (std::holds_alternative<BoolExpr::Not>(f.node)) return kNot;
    return kFAtom;
}

void print_formula_at(const BoolExpr& f, int min_level, std::ostream& os) {
    int level = formula_level(f);
    bool parens = level < min_level;
    if (parens) os << "(";
    if (const auto* e = std::get_if<BoolExpr::Event>(&f.node)) {
        os << e->event.variable << " = " << e->event.value.str();
    } else if (const auto* c = std::get_if<BoolExpr::Constant>(&f.node)) {
        os << (c->value ? "true" : "false");
    } else if (const auto* n = std::get_if<BoolExpr::Not>(&f.node)) {
        os << "!";
        print_formula_at(*n->f, kNot, os);
    } else if (const auto* a = std::get_if<BoolExpr::And>(&f.node)) {
        print_formula_at(*a->lhs, kAnd, os);
        os << " & ";
        print_formula_at(*a->rhs, kNot, os);
    } else if (const auto* o = std::get_if<BoolExpr::Or>(&f.node)) {
        print_formula_at(*o->lhs, kOr, os);
        os << " | ";
        print_formula_at(*o->rhs, kAnd, os);
    } else {
        const auto& i = std::get<BoolExpr::Implies>(f.node);
        print_formula_at(*i.lhs, kOr, os);
        os << " -> ";
        print_formula_at(*i.rhs, kImplies, os);
    }
    if (parens) os << ")";
}

}  // namespace

std::string print_expr(const Expr& e) {
    std::ostringstream os;
    print_expr_at(e, kIf, os);
    return os.str();
}

std::string print_model(const CausalModel& m) {
    std::ostringstream os;
    os << "model " << m.id << " {\n";
    for (const auto& d : m.signature.exogenous) {
        os << "  exo " << d.name << " : ";
        print_range(d.range, os);
        os << "\n";
    }
    for (const auto& d : m.signature.endogenous) {
        os << "  endo " << d.name << " : ";
        print_range(d.range, os);
        os << " = ";
        const Equation* eq = m.equation_for(d.name);
        if (eq) print_expr_at(*eq->body, kIf, os);
        os << "\n";
    }
    os << "}\n";
    return os.str();
}

std::string print_models(const std::vector<CausalModel>& models) {
    std::ostringstream os;
    for (std::size_t i = 0; i < models.size(); ++i) {
        if (i) os << "\n";
        os << print_model(models[i]);
    }
    return os.str();
}

std::string print_formula(const CausalFormula& f) {
    std::ostringstream os;
    if (!f.interventions.empty()) {
        os << "[";
        for (std::size_t i = 0; i < f.interventions.size(); ++i) {
            if (i) os << ", ";
            os << f.interventions[i].first << " <- " << f.interventions[i].second.str();
        }
        os << "] ";
    }
    print_formula_at(*f.body, kImplies, os);
    return os.str();
}

std::string print_events(const std::vector<PrimitiveEvent>& events) {
    std::ostringstream os;
    for (std::size_t i = 0; i < events.size(); ++i) {
        if (i) os << " & ";
        os << events[i].variable << " = " << events[i].value.str();
    }
    return os.str();
}

std::string print_state(const EpistemicState& state) {
    std::ostringstream os;
    os << "state " << state.id << " {\n";
    for (std::size_t i = 0; i < state.settings.size(); ++i) {
        const Setting& s = state.settings[i];
        os << "  setting " << s.model->id << " { ";
        bool first = true;
        for (const auto& d : s.model->signature.exogenous) {
            auto it = s.context.find(d.name);
            if (it == s.context.end()) continue;
            if (!first) os << ", ";
            os << d.name << " = " << it->second.str();
            first = false;
        }
        os << " } pr " << state.probs[i].str() << "\n";
    }
    os << "}\n";
    return os.str();
}

}  // namespace causalex
