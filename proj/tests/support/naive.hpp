#pragma once

#include <algorithm>
#include <set>
#include <vector>

#include "causalex/explanation.hpp"
#include "causalex/formula.hpp"
#include "causalex/model.hpp"

// Reference implementations kept deliberately separate from the library's
// code paths: fixed-point solving instead of topological order, bitmask
// enumeration with no ordering or pruning. The oracle suites check the
// engine against these on randomly generated inputs.

namespace causalex::naive {

inline Assignment solve(const CausalModel& m, const Context& u, const Assignment& overrides) {
    Assignment env = u;
    for (const auto& [k, v] : overrides) env[k] = v;
    for (const auto& d : m.signature.endogenous)
        if (!env.count(d.name)) env[d.name] = d.range.values.front();
    for (std::size_t round = 0; round <= m.signature.endogenous.size() + 1; ++round) {
        bool changed = false;
        for (const auto& eq : m.equations) {
            if (overrides.count(eq.target)) continue;
            Value v = eval_expr(*eq.body, env);
            if (!(env[eq.target] == v)) {
                env[eq.target] = v;
                changed = true;
            }
        }
        if (!changed) break;
    }
    return env;
}

inline bool sat(const CausalModel& m, const Context& u, const Assignment& iv, const BoolExpr& phi) {
    return eval_formula(phi, solve(m, u, iv));
}

// Modified-definition actual cause, enumerating every witness set and every
// contrast tuple with no pruning, subsets re-checked the same way.
inline bool cause_ac2(const Setting& s, const std::vector<PrimitiveEvent>& conj, const FormulaPtr& phi) {
    const CausalModel& m = *s.model;
    Assignment actual = solve(m, s.context, {});

    std::vector<std::string> rest;
    for (const auto& d : m.signature.endogenous) {
        bool in_conj = false;
        for (const auto& e : conj)
            if (e.variable == d.name) in_conj = true;
        if (!in_conj) rest.push_back(d.name);
    }

    std::vector<const Range*> ranges;
    for (const auto& e : conj) ranges.push_back(m.signature.find(e.variable));

    for (std::size_t wmask = 0; wmask < (std::size_t{1} << rest.size()); ++wmask) {
        Assignment base;
        for (std::size_t i = 0; i < rest.size(); ++i)
            if (wmask & (std::size_t{1} << i)) base[rest[i]] = actual.at(rest[i]);
        std::vector<std::size_t> pick(conj.size(), 0);
        while (true) {
            Assignment iv = base;
            for (std::size_t i = 0; i < conj.size(); ++i)
                iv[conj[i].variable] = ranges[i]->values[pick[i]];
            if (!sat(m, s.context, iv, *phi)) return true;
            std::size_t i = 0;
            for (; i < pick.size(); ++i) {
                if (++pick[i] < ranges[i]->values.size()) break;
                pick[i] = 0;
            }
            if (i == pick.size()) break;
        }
    }
    return false;
}

inline bool cause_ac1(const Setting& s, const std::vector<PrimitiveEvent>& conj, const FormulaPtr& phi) {
    Assignment actual = solve(*s.model, s.context, {});
    for (const auto& e : conj)
        if (!(actual.at(e.variable) == e.value)) return false;
    return eval_formula(*phi, actual);
}

inline bool is_cause(const Setting& s, const std::vector<PrimitiveEvent>& conj, const FormulaPtr& phi) {
    if (!cause_ac1(s, conj, phi)) return false;
    if (!cause_ac2(s, conj, phi)) return false;
    for (std::size_t mask = 1; mask + 1 < (std::size_t{1} << conj.size()); ++mask) {
        std::vector<PrimitiveEvent> sub;
        for (std::size_t i = 0; i < conj.size(); ++i)
            if (mask & (std::size_t{1} << i)) sub.push_back(conj[i]);
        if (cause_ac1(s, sub, phi) && cause_ac2(s, sub, phi)) return false;
    }
    return true;
}

inline bool ex1a_in_setting(const Setting& s, const std::vector<PrimitiveEvent>& expl,
                            const FormulaPtr& phi) {
    const CausalModel& m = *s.model;
    Assignment actual = solve(m, s.context, {});
    std::set<std::string> expl_vars;
    for (const auto& e : expl) expl_vars.insert(e.variable);
    std::vector<std::string> rest;
    for (const auto& d : m.signature.endogenous)
        if (!expl_vars.count(d.name)) rest.push_back(d.name);

    for (const auto& conjunct : expl) {
        for (std::size_t mask = 0; mask < (std::size_t{1} << rest.size()); ++mask) {
            std::vector<PrimitiveEvent> cand{conjunct};
            for (std::size_t i = 0; i < rest.size(); ++i)
                if (mask & (std::size_t{1} << i)) cand.push_back({rest[i], actual.at(rest[i])});
            std::sort(cand.begin(), cand.end());
            if (is_cause(s, cand, phi)) return true;
        }
    }
    return false;
}

inline bool ex1a(const EpistemicState& k, const std::vector<PrimitiveEvent>& expl, const FormulaPtr& phi) {
    for (const auto& s : k.settings) {
        Assignment actual = solve(*s.model, s.context, {});
        bool applicable = eval_formula(*phi, actual);
        for (const auto& e : expl)
            if (!(actual.at(e.variable) == e.value)) applicable = false;
        if (applicable && !ex1a_in_setting(s, expl, phi)) return false;
    }
    return true;
}

inline bool ex1b(const EpistemicState& k, const std::vector<PrimitiveEvent>& expl, const FormulaPtr& phi) {
    for (const auto& s : k.settings) {
        Assignment iv;
        for (const auto& e : expl) iv[e.variable] = e.value;
        if (!sat(*s.model, s.context, iv, *phi)) return false;
    }
    return true;
}

inline bool ex3(const EpistemicState& k, const std::vector<PrimitiveEvent>& expl, const FormulaPtr& phi) {
    for (const auto& s : k.settings) {
        Assignment actual = solve(*s.model, s.context, {});
        bool holds = eval_formula(*phi, actual);
        for (const auto& e : expl)
            if (!(actual.at(e.variable) == e.value)) holds = false;
        if (holds) return true;
    }
    return false;
}

inline bool passes_ex1_to_ex3(const EpistemicState& k, const std::vector<PrimitiveEvent>& expl,
                              const FormulaPtr& phi) {
    if (!ex1a(k, expl, phi) || !ex1b(k, expl, phi) || !ex3(k, expl, phi)) return false;
    // EX2 via raw re-checks of every strict non-empty subset.
    for (std::size_t mask = 1; mask + 1 < (std::size_t{1} << expl.size()); ++mask) {
        std::vector<PrimitiveEvent> sub;
        for (std::size_t i = 0; i < expl.size(); ++i)
            if (mask & (std::size_t{1} << i)) sub.push_back(expl[i]);
        if (ex1a(k, sub, phi) && ex1b(k, sub, phi)) return false;
    }
    return true;
}

// Every conjunction over the first model's endogenous variables (shared
// signature assumed, as in the generated states) passing EX1-EX3.
inline std::vector<std::vector<PrimitiveEvent>> find_explanations(const EpistemicState& k,
                                                                  const FormulaPtr& phi,
                                                                  std::size_t max_size) {
    const Signature& sig = k.settings.front().model->signature;
    std::vector<std::vector<PrimitiveEvent>> out;
    std::size_t n = sig.endogenous.size();
    for (std::size_t mask = 1; mask < (std::size_t{1} << n); ++mask) {
        std::vector<std::size_t> vars;
        for (std::size_t i = 0; i < n; ++i)
            if (mask & (std::size_t{1} << i)) vars.push_back(i);
        if (vars.size() > max_size) continue;
        std::vector<std::size_t> pick(vars.size(), 0);
        while (true) {
            std::vector<PrimitiveEvent> expl;
            for (std::size_t i = 0; i < vars.size(); ++i) {
                const auto& d = sig.endogenous[vars[i]];
                expl.push_back({d.name, d.range.values[pick[i]]});
            }
            std::sort(expl.begin(), expl.end());
            if (passes_ex1_to_ex3(k, expl, phi)) out.push_back(expl);
            std::size_t i = 0;
            for (; i < pick.size(); ++i) {
                if (++pick[i] < sig.endogenous[vars[i]].range.values.size()) break;
                pick[i] = 0;
            }
            if (i == pick.size()) break;
        }
    }
    std::sort(out.begin(), out.end());
    return out;
}

}  // namespace causalex::naive
