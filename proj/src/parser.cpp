#include "causalex/parser.hpp"

#include <algorithm>
#include <cctype>
#include <set>

#include "causalex/errors.hpp"

namespace causalex {

namespace {

// ---------------------------------------------------------------------------
// Lexer
// ---------------------------------------------------------------------------

enum class Tok {
    Ident,
    Int,
    String,
    LBrace,
    RBrace,
    LParen,
    RParen,
    LBracket,
    RBracket,
    Colon,
    Comma,
    Assign,   // =
    Ne,       // !=
    Lt,       // <
    Le,       // <=
    LArrow,   // <-
    Plus,
    Minus,
    Star,
    Slash,
    Amp,
    Pipe,
    Bang,
    Arrow,    // ->
    End,
};

struct Token {
    Tok kind = Tok::End;
    std::string text;
    std::int64_t value = 0;
    int line = 1;
    int col = 1;
};

const std::set<std::string>& keywords() {
    static const std::set<std::string> kw = {"model", "exo",  "endo", "if",    "then", "else",
                                             "min",   "max",  "and",  "or",    "not",  "state",
                                             "setting", "pr", "query", "true", "false", "expect",
                                             "kind",  "models", "context", "phi", "note"};
    return kw;
}

std::vector<Token> lex(const std::string& text) {
    std::vector<Token> out;
    int line = 1, col = 1;
    std::size_t i = 0;
    auto make = [&](Tok k, std::string t) {
        Token tok;
        tok.kind = k;
        tok.text = std::move(t);
        tok.line = line;
        tok.col = col;
        return tok;
    };
    while (i < text.size()) {
        char c = text[i];
        if (c == '\n') {
            ++line;
            col = 1;
            ++i;
            continue;
        }
        if (std::isspace(static_cast<unsigned char>(c))) {
            ++col;
            ++i;
            continue;
        }
        if (c == '#') {
            while (i < text.size() && text[i] != '\n') ++i;
            continue;
        }
        if (std::isalpha(static_cast<unsigned char>(c)) || c == '_') {
            Token tok = make(Tok::Ident, "");
            std::size_t start = i;
            while (i < text.size() &&
                   (std::isalnum(static_cast<unsigned char>(text[i])) || text[i] == '_'))
                ++i;
            tok.text = text.substr(start, i - start);
            col += static_cast<int>(i - start);
            out.push_back(std::move(tok));
            continue;
        }
        if (std::isdigit(static_cast<unsigned char>(c))) {
            Token tok = make(Tok::Int, "");
            std::size_t start = i;
            while (i < text.size() && std::isdigit(static_cast<unsigned char>(text[i]))) ++i;
            tok.text = text.substr(start, i - start);
            try {
                tok.value = std::stoll(tok.text);
            } catch (const std::out_of_range&) {
                throw ParseError("integer literal out of range", tok.line, tok.col);
            }
            col += static_cast<int>(i - start);
            out.push_back(std::move(tok));
            continue;
        }
        if (c == '"') {
            Token tok = make(Tok::String, "");
            ++i;
            ++col;
            std::string s;
            while (i < text.size() && text[i] != '"') {
                if (text[i] == '\\' && i + 1 < text.size() && (text[i + 1] == '"' || text[i + 1] == '\\')) {
                    s += text[i + 1];
                    i += 2;
                    col += 2;
                    continue;
                }
                if (text[i] == '\n') throw ParseError("unterminated string", tok.line, tok.col);
                s += text[i];
                ++i;
                ++col;
            }
            if (i == text.size()) throw ParseError("unterminated string", tok.line, tok.col);
            ++i;
            ++col;
            tok.text = std::move(s);
            out.push_back(std::move(tok));
            continue;
        }
        auto two = [&](char second) { return i + 1 < text.size() && text[i + 1] == second; };
        Token tok = make(Tok::End, std::string(1, c));
        int consumed = 1;
        switch (c) {
            case '{': tok.kind = Tok::LBrace; break;
            case '}': tok.kind = Tok::RBrace; break;
            case '(': tok.kind = Tok::LParen; break;
            case ')': tok.kind = Tok::RParen; break;
            case '[': tok.kind = Tok::LBracket; break;
            case ']': tok.kind = Tok::RBracket; break;
            case ':': tok.kind = Tok::Colon; break;
            case ',': tok.kind = Tok::Comma; break;
            case '=': tok.kind = Tok::Assign; break;
            case '+': tok.kind = Tok::Plus; break;
            case '*': tok.kind = Tok::Star; break;
            case '/': tok.kind = Tok::Slash; break;
            case '&': tok.kind = Tok::Amp; break;
            case '|': tok.kind = Tok::Pipe; break;
            case '-':
                if (two('>')) {
                    tok.kind = Tok::Arrow;
                    tok.text = "->";
                    consumed = 2;
                } else {
                    tok.kind = Tok::Minus;
                }
                break;
            case '<':
                if (two('-')) {
                    tok.kind = Tok::LArrow;
                    tok.text = "<-";
                    consumed = 2;
                } else if (two('=')) {
                    tok.kind = Tok::Le;
                    tok.text = "<=";
                    consumed = 2;
                } else {
                    tok.kind = Tok::Lt;
                }
                break;
            case '!':
                if (two('=')) {
                    tok.kind = Tok::Ne;
                    tok.text = "!=";
                    consumed = 2;
                } else {
                    tok.kind = Tok::Bang;
                }
                break;
            default:
                throw ParseError(std::string("unexpected character '") + c + "'", line, col);
        }
        i += consumed;
        col += consumed;
        out.push_back(std::move(tok));
    }
    out.push_back(make(Tok::End, "<end of input>"));
    return out;
}

// ---------------------------------------------------------------------------
// Token stream
// ---------------------------------------------------------------------------

class Stream {
public:
    explicit Stream(std::vector<Token> tokens) : toks_(std::move(tokens)) {}

    const Token& peek() const { return toks_[pos_]; }
    const Token& next() { return toks_[pos_ == toks_.size() - 1 ? pos_ : pos_++]; }
    bool at(Tok k) const { return peek().kind == k; }
    bool at_ident(const std::string& word) const { return at(Tok::Ident) && peek().text == word; }

    bool eat(Tok k) {
        if (!at(k)) return false;
        next();
        return true;
    }
    bool eat_ident(const std::string& word) {
        if (!at_ident(word)) return false;
        next();
        return true;
    }

    Token expect(Tok k, const std::string& what) {
        if (!at(k)) fail("expected " + what + ", found '" + peek().text + "'");
        return next();
    }
    Token expect_ident(const std::string& word) {
        if (!at_ident(word)) fail("expected '" + word + "', found '" + peek().text + "'");
        return next();
    }

    [[noreturn]] void fail(const std::string& msg) const {
        throw ParseError(msg, peek().line, peek().col);
    }

private:
    std::vector<Token> toks_;
    std::size_t pos_ = 0;
};

std::string name_token(Stream& s, const char* what) {
    Token t = s.expect(Tok::Ident, what);
    if (keywords().count(t.text))
        throw ParseError("keyword '" + t.text + "' cannot be used as " + what, t.line, t.col);
    return t.text;
}

// Value literal: INT, -INT, or a bare symbol token.
Value parse_value(Stream& s) {
    if (s.at(Tok::Minus)) {
        s.next();
        Token t = s.expect(Tok::Int, "integer after '-'");
        return Value(-t.value);
    }
    if (s.at(Tok::Int)) return Value(s.next().value);
    Token t = s.expect(Tok::Ident, "value literal");
    if (keywords().count(t.text))
        throw ParseError("keyword '" + t.text + "' cannot be used as a value", t.line, t.col);
    return Value(t.text);
}

// ---------------------------------------------------------------------------
// Expressions (model equation bodies)
// ---------------------------------------------------------------------------

// Parsed with every bare identifier as a Var; positions are kept on the side
// so resolution against the finished signature can point at the source.
struct ExprParse {
    ExprPtr expr;
};

class ExprParser {
public:
    ExprParser(Stream& s, std::map<const Expr*, std::pair<int, int>>& positions)
        : s_(s), positions_(positions) {}

    ExprPtr parse() { return parse_expr(); }

private:
    ExprPtr parse_expr() {
        if (s_.eat_ident("if")) {
            ExprPtr c = parse_expr();
            s_.expect_ident("then");
            ExprPtr a = parse_expr();
            s_.expect_ident("else");
            ExprPtr b = parse_expr();
            return make_call(Op::If, {c, a, b});
        }
        return parse_cmp();
    }

    ExprPtr parse_cmp() {
        ExprPtr lhs = parse_add();
        Op op;
        if (s_.eat(Tok::Assign)) op = Op::Eq;
        else if (s_.eat(Tok::Ne)) op = Op::Ne;
        else if (s_.eat(Tok::Lt)) op = Op::Lt;
        else if (s_.eat(Tok::Le)) op = Op::Le;
        else return lhs;
        return make_call(op, {lhs, parse_add()});
    }

    // '-' after a complete operand is subtraction; in operand position it
    // forms a negative integer literal.
    ExprPtr parse_add() {
        ExprPtr lhs = parse_mul();
        while (true) {
            if (s_.eat(Tok::Plus)) lhs = make_call(Op::Add, {lhs, parse_mul()});
            else if (s_.eat(Tok::Minus)) lhs = make_call(Op::Sub, {lhs, parse_mul()});
            else return lhs;
        }
    }

    ExprPtr parse_mul() {
        ExprPtr lhs = parse_unary();
        while (s_.eat(Tok::Star)) lhs = make_call(Op::Mul, {lhs, parse_unary()});
        return lhs;
    }

    ExprPtr parse_unary() {
        if (s_.at(Tok::Minus)) {
            s_.next();
            Token t = s_.expect(Tok::Int, "integer after unary '-'");
            return make_lit(Value(-t.value));
        }
        return parse_atom();
    }

    ExprPtr parse_atom() {
        if (s_.at(Tok::Int)) return make_lit(Value(s_.next().value));
        if (s_.eat(Tok::LParen)) {
            ExprPtr e = parse_expr();
            s_.expect(Tok::RParen, "')'");
            return e;
        }
        Token t = s_.expect(Tok::Ident, "expression");
        static const std::map<std::string, Op> calls = {
            {"min", Op::Min}, {"max", Op::Max}, {"and", Op::And}, {"or", Op::Or}, {"not", Op::Not}};
        auto call = calls.find(t.text);
        if (call != calls.end()) {
            s_.expect(Tok::LParen, "'(' after " + t.text);
            std::vector<ExprPtr> args;
            args.push_back(parse_expr());
            while (s_.eat(Tok::Comma)) args.push_back(parse_expr());
            s_.expect(Tok::RParen, "')'");
            if (call->second == Op::Not && args.size() != 1)
                throw ParseError("not takes exactly one argument", t.line, t.col);
            return make_call(call->second, std::move(args));
        }
        if (keywords().count(t.text))
            throw ParseError("keyword '" + t.text + "' cannot appear here", t.line, t.col);
        ExprPtr v = make_var(t.text);
        positions_[v.get()] = {t.line, t.col};
        return v;
    }

    Stream& s_;
    std::map<const Expr*, std::pair<int, int>>& positions_;
};

// Rewrites bare identifiers: signature variables stay variables, tokens that
// occur in some declared range become symbolic literals, anything else is a
// resolution error at the identifier's position.
ExprPtr resolve_idents(const ExprPtr& e, const Signature& sig, const std::set<std::string>& range_tokens,
                       const std::map<const Expr*, std::pair<int, int>>& positions) {
    if (std::holds_alternative<Expr::Lit>(e->node)) return e;
    if (const auto* v = std::get_if<Expr::Var>(&e->node)) {
        if (sig.find(v->name)) return e;
        if (range_tokens.count(v->name)) return make_lit(Value(v->name));
        auto pos = positions.count(e.get()) ? positions.at(e.get()) : std::make_pair(0, 0);
        throw ParseError("unknown identifier '" + v->name + "'", pos.first, pos.second);
    }
    const auto& c = std::get<Expr::Call>(e->node);
    std::vector<ExprPtr> args;
    for (const auto& a : c.args) args.push_back(resolve_idents(a, sig, range_tokens, positions));
    return make_call(c.op, std::move(args));
}

Range parse_range(Stream& s) {
    Range r;
    s.expect(Tok::LBrace, "'{'");
    r.values.push_back(parse_value(s));
    while (s.eat(Tok::Comma)) r.values.push_back(parse_value(s));
    s.expect(Tok::RBrace, "'}'");
    return r;
}

CausalModel parse_model_block(Stream& s) {
    CausalModel m;
    s.expect_ident("model");
    m.id = name_token(s, "model id");
    s.expect(Tok::LBrace, "'{'");

    std::map<const Expr*, std::pair<int, int>> positions;
    std::vector<std::pair<std::string, ExprPtr>> raw_bodies;
    while (!s.eat(Tok::RBrace)) {
        if (s.eat_ident("exo")) {
            std::string name = name_token(s, "variable name");
            s.expect(Tok::Colon, "':'");
            m.signature.exogenous.push_back({name, parse_range(s)});
        } else if (s.eat_ident("endo")) {
            std::string name = name_token(s, "variable name");
            s.expect(Tok::Colon, "':'");
            Range r = parse_range(s);
            m.signature.endogenous.push_back({name, r});
            s.expect(Tok::Assign, "'='");
            ExprParser ep(s, positions);
            raw_bodies.emplace_back(name, ep.parse());
        } else {
            s.fail("expected 'exo', 'endo' or '}', found '" + s.peek().text + "'");
        }
    }

    std::set<std::string> range_tokens;
    auto collect_tokens = [&](const std::vector<VariableDecl>& decls) {
        for (const auto& d : decls)
            for (const auto& v : d.range.values)
                if (!v.is_int()) range_tokens.insert(v.as_symbol());
    };
    collect_tokens(m.signature.exogenous);
    collect_tokens(m.signature.endogenous);

    for (auto& [target, body] : raw_bodies)
        m.equations.push_back({target, resolve_idents(body, m.signature, range_tokens, positions)});
    return m;
}

// ---------------------------------------------------------------------------
// Formulas
// ---------------------------------------------------------------------------

class FormulaParser {
public:
    FormulaParser(Stream& s, const Signature& sig) : s_(s), sig_(sig) {}

    CausalFormula parse() {
        CausalFormula f;
        if (s_.eat(Tok::LBracket)) {
            f.interventions.push_back(parse_intervention());
            while (s_.eat(Tok::Comma)) f.interventions.push_back(parse_intervention());
            s_.expect(Tok::RBracket, "']'");
        }
        f.body = parse_implies();
        return f;
    }

private:
    std::pair<std::string, Value> parse_intervention() {
        Token t = s_.expect(Tok::Ident, "variable name");
        check_variable(t, /*endogenous=*/true);
        s_.expect(Tok::LArrow, "'<-'");
        Token vt = s_.peek();
        Value v = parse_value(s_);
        check_value(t, vt, v);
        return {t.text, v};
    }

    FormulaPtr parse_implies() {
        FormulaPtr lhs = parse_or();
        if (s_.eat(Tok::Arrow)) return f_implies(lhs, parse_implies());
        return lhs;
    }

    FormulaPtr parse_or() {
        FormulaPtr lhs = parse_and();
        while (s_.eat(Tok::Pipe)) lhs = f_or(lhs, parse_and());
        return lhs;
    }

    FormulaPtr parse_and() {
        FormulaPtr lhs = parse_unary();
        while (s_.eat(Tok::Amp)) lhs = f_and(lhs, parse_unary());
        return lhs;
    }

    FormulaPtr parse_unary() {
        if (s_.eat(Tok::Bang)) return f_not(parse_unary());
        return parse_atom();
    }

    FormulaPtr parse_atom() {
        if (s_.eat(Tok::LParen)) {
            FormulaPtr f = parse_implies();
            s_.expect(Tok::RParen, "')'");
            return f;
        }
        if (s_.eat_ident("true")) return f_const(true);
        if (s_.eat_ident("false")) return f_const(false);
        Token t = s_.expect(Tok::Ident, "primitive event");
        check_variable(t, /*endogenous=*/false);
        s_.expect(Tok::Assign, "'=' in primitive event");
        Token vt = s_.peek();
        Value v = parse_value(s_);
        check_value(t, vt, v);
        return f_event({t.text, v});
    }

    void check_variable(const Token& t, bool endogenous) {
        if (keywords().count(t.text))
            throw ParseError("keyword '" + t.text + "' cannot be a variable", t.line, t.col);
        if (!sig_.find(t.text)) throw ParseError("unknown variable '" + t.text + "'", t.line, t.col);
        if (endogenous && !sig_.is_endogenous(t.text))
            throw ParseError("variable '" + t.text + "' is not endogenous", t.line, t.col);
    }

    void check_value(const Token& var, const Token& vt, const Value& v) {
        const Range* r = sig_.find(var.text);
        if (r && !r->contains(v))
            throw ParseError("value " + v.str() + " out of range for '" + var.text + "'", vt.line, vt.col);
    }

    Stream& s_;
    const Signature& sig_;
};

Rational parse_rational(Stream& s) {
    bool neg = s.eat(Tok::Minus);
    Token p = s.expect(Tok::Int, "probability numerator");
    std::int64_t num = neg ? -p.value : p.value;
    if (!s.eat(Tok::Slash)) return Rational(num, 1);
    Token q = s.expect(Tok::Int, "probability denominator");
    if (q.value == 0) throw ParseError("zero denominator", q.line, q.col);
    return Rational(num, q.value);
}

Assignment parse_assignment_list(Stream& s, Tok terminator) {
    Assignment out;
    if (s.at(terminator)) return out;
    while (true) {
        Token t = s.expect(Tok::Ident, "variable name");
        if (out.count(t.text)) throw ParseError("duplicate assignment to '" + t.text + "'", t.line, t.col);
        s.expect(Tok::Assign, "'='");
        out[t.text] = parse_value(s);
        if (!s.eat(Tok::Comma)) break;
    }
    return out;
}

}  // namespace

// ---------------------------------------------------------------------------
// Public entry points
// ---------------------------------------------------------------------------

std::vector<CausalModel> parse_models(const std::string& text) {
    Stream s(lex(text));
    std::vector<CausalModel> out;
    while (!s.at(Tok::End)) out.push_back(parse_model_block(s));
    return out;
}

CausalFormula parse_formula(const std::string& text, const Signature& sig) {
    Stream s(lex(text));
    FormulaParser p(s, sig);
    CausalFormula f = p.parse();
    if (!s.at(Tok::End)) s.fail("unexpected trailing input '" + s.peek().text + "'");
    check_formula(sig, f);  // distinctness of intervention targets
    return f;
}

Context parse_context(const std::string& text, const Signature& sig) {
    Stream s(lex(text));
    Assignment raw = parse_assignment_list(s, Tok::End);
    if (!s.at(Tok::End)) s.fail("unexpected trailing input '" + s.peek().text + "'");
    check_context(sig, raw);
    return raw;
}

Assignment parse_assignments(const std::string& text) {
    Stream s(lex(text));
    Assignment raw = parse_assignment_list(s, Tok::End);
    if (!s.at(Tok::End)) s.fail("unexpected trailing input '" + s.peek().text + "'");
    return raw;
}

std::vector<PrimitiveEvent> parse_conjunction(const std::string& text, const Signature& sig) {
    CausalFormula f = parse_formula(text, sig);
    if (!f.interventions.empty())
        throw TypeError("candidate conjunction cannot carry an intervention prefix");
    std::vector<PrimitiveEvent> events;
    std::function<void(const BoolExpr&)> flatten = [&](const BoolExpr& b) {
        if (const auto* a = std::get_if<BoolExpr::And>(&b.node)) {
            flatten(*a->lhs);
            flatten(*a->rhs);
            return;
        }
        if (const auto* e = std::get_if<BoolExpr::Event>(&b.node)) {
            events.push_back(e->event);
            return;
        }
        throw TypeError("expected a conjunction of primitive events: '" + text + "'");
    };
    flatten(*f.body);
    events = canonical_events(std::move(events));
    check_events(sig, events, /*require_endogenous=*/true, /*require_distinct=*/true);
    return events;
}

std::vector<Value> parse_contrast(const std::string& text, const Signature& sig,
                                  const std::vector<PrimitiveEvent>& conjunction) {
    Stream s(lex(text));
    Assignment raw = parse_assignment_list(s, Tok::End);
    if (!s.at(Tok::End)) s.fail("unexpected trailing input '" + s.peek().text + "'");
    if (raw.size() != conjunction.size())
        throw TypeError("contrast must assign exactly the candidate's variables");
    std::vector<Value> out;
    for (const auto& e : conjunction) {
        auto it = raw.find(e.variable);
        if (it == raw.end()) throw TypeError("contrast missing variable '" + e.variable + "'");
        const Range* r = sig.find(e.variable);
        if (r && !r->contains(it->second))
            throw TypeError("contrast value " + it->second.str() + " out of range for '" + e.variable + "'");
        out.push_back(it->second);
    }
    return out;
}

EpistemicState parse_state(const std::string& text, const std::map<std::string, ModelPtr>& models) {
    Stream s(lex(text));
    s.expect_ident("state");
    EpistemicState state;
    state.id = name_token(s, "state id");
    s.expect(Tok::LBrace, "'{'");
    while (!s.eat(Tok::RBrace)) {
        Token kw = s.expect(Tok::Ident, "'setting'");
        if (kw.text != "setting")
            throw ParseError("expected 'setting', found '" + kw.text + "'", kw.line, kw.col);
        Token id = s.expect(Tok::Ident, "model id");
        auto it = models.find(id.text);
        if (it == models.end())
            throw ParseError("unresolved model id '" + id.text + "'", id.line, id.col);
        s.expect(Tok::LBrace, "'{'");
        Token ctx_pos = s.peek();
        Assignment ctx = parse_assignment_list(s, Tok::RBrace);
        s.expect(Tok::RBrace, "'}'");
        try {
            check_context(it->second->signature, ctx);
        } catch (const TypeError& e) {
            throw ParseError(e.what(), ctx_pos.line, ctx_pos.col);
        }
        Token pr = s.expect(Tok::Ident, "'pr'");
        if (pr.text != "pr") throw ParseError("expected 'pr', found '" + pr.text + "'", pr.line, pr.col);
        Token prob_pos = s.peek();
        Rational p = parse_rational(s);
        if (!p.is_positive())
            throw ParseError("setting probability must be strictly positive", prob_pos.line, prob_pos.col);
        state.settings.push_back({it->second, std::move(ctx)});
        state.probs.push_back(p);
    }
    if (!s.at(Tok::End)) s.fail("unexpected trailing input '" + s.peek().text + "'");
    try {
        check_state(state);
    } catch (const Error& e) {
        throw ParseError(e.what(), 1, 1);
    }
    return state;
}

namespace {

Json parse_json_value(Stream& s) {
    if (s.at(Tok::String)) return Json(s.next().text);
    if (s.eat_ident("true")) return Json(true);
    if (s.eat_ident("false")) return Json(false);
    if (s.eat_ident("absent")) return Json(nullptr);  // "this pointer must not resolve"
    if (s.at(Tok::Int)) return Json(s.next().value);
    if (s.eat(Tok::Minus)) {
        Token t = s.expect(Tok::Int, "integer after '-'");
        return Json(-t.value);
    }
    if (s.eat(Tok::LBracket)) {
        Json arr = Json::array();
        if (!s.at(Tok::RBracket)) {
            arr.push_back(parse_json_value(s));
            while (s.eat(Tok::Comma)) arr.push_back(parse_json_value(s));
        }
        s.expect(Tok::RBracket, "']'");
        return arr;
    }
    if (s.eat(Tok::LBrace)) {  // the empty object only
        s.expect(Tok::RBrace, "'}' (only the empty object is expressible)");
        return Json::object();
    }
    s.fail("expected an expected-value literal (string, integer, true, false, [...] or {})");
}

}  // namespace

std::vector<QueryDocument> parse_queries(const std::string& text) {
    Stream s(lex(text));
    std::vector<QueryDocument> out;
    while (!s.at(Tok::End)) {
        s.expect_ident("query");
        QueryDocument q;
        q.id = name_token(s, "query id");
        s.expect(Tok::LBrace, "'{'");
        while (!s.eat(Tok::RBrace)) {
            Token key = s.expect(Tok::Ident, "query field");
            const std::string& k = key.text;
            if (k == "kind") {
                q.kind = s.expect(Tok::String, "kind string").text;
            } else if (k == "models") {
                q.model_files.push_back(s.expect(Tok::String, "model file path").text);
            } else if (k == "state") {
                q.state_file = s.expect(Tok::String, "state file path").text;
            } else if (k == "model") {
                q.model_id = s.expect(Tok::Ident, "model id").text;
            } else if (k == "context") {
                s.expect(Tok::LBrace, "'{'");
                q.context = parse_assignment_list(s, Tok::RBrace);
                s.expect(Tok::RBrace, "'}'");
            } else if (k == "phi") {
                q.phi = s.expect(Tok::String, "formula string").text;
            } else if (k == "x") {
                q.x = s.expect(Tok::String, "conjunction string").text;
            } else if (k == "x2") {
                q.x2 = s.expect(Tok::String, "conjunction string").text;
            } else if (k == "contrast") {
                q.contrast = s.expect(Tok::String, "contrast string").text;
            } else if (k == "max_size") {
                q.max_size = s.expect(Tok::Int, "integer").value;
            } else if (k == "ex1b_conditional") {
                if (s.eat_ident("true")) q.ex1b_conditional = true;
                else if (s.eat_ident("false")) q.ex1b_conditional = false;
                else s.fail("expected true or false");
            } else if (k == "note") {
                q.notes.push_back(s.expect(Tok::String, "note string").text);
            } else if (k == "expect") {
                s.expect(Tok::LBrace, "'{'");
                while (!s.eat(Tok::RBrace)) {
                    std::string ptr = s.expect(Tok::String, "JSON pointer").text;
                    q.expect.emplace_back(std::move(ptr), parse_json_value(s));
                }
            } else {
                throw ParseError("unknown query field '" + k + "'", key.line, key.col);
            }
        }
        if (q.kind.empty()) throw ParseError("query '" + q.id + "' has no kind", 1, 1);
        out.push_back(std::move(q));
    }
    return out;
}

}  // namespace causalex
