#include "causalex/explanation.hpp"

#include <algorithm>
#include <set>

#include "causalex/combinatorics.hpp"
#include "causalex/errors.hpp"

namespace causalex {

void check_state(const EpistemicState& state) {
    if (state.settings.empty()) throw DomainError("epistemic state must be non-empty");
    if (state.settings.size() != state.probs.size())
        throw DomainError("probability list does not match the settings");
    Rational sum;
    for (const auto& p : state.probs) {
        if (!p.is_positive()) throw DomainError("setting probability must be strictly positive");
        sum = sum + p;
    }
    if (!(sum == Rational(1, 1))) throw DomainError("setting probabilities must sum to 1, got " + sum.str());
    std::set<std::pair<std::string, Assignment>> seen;
    for (const auto& s : state.settings) {
        if (!s.model) throw InvalidModelError("setting has no model");
        ValidationReport report = validate_model(*s.model);
        if (!report.ok())
            throw InvalidModelError("invalid model '" + s.model->id + "': " + report.violations.front().message);
        check_context(s.model->signature, s.context);
        if (!seen.insert({s.model->id, s.context}).second)
            throw DomainError("duplicate setting " + setting_label(s));
    }
}

std::string setting_label(const Setting& setting) {
    std::string out = setting.model ? setting.model->id : "?";
    out += "@";
    bool first = true;
    for (const auto& d : setting.model->signature.exogenous) {
        auto it = setting.context.find(d.name);
        if (it == setting.context.end()) continue;
        if (!first) out += ",";
        out += d.name + "=" + it->second.str();
        first = false;
    }
    return out;
}

std::vector<std::size_t> extension(const EpistemicState& state, const CausalFormula& formula) {
    std::vector<std::size_t> out;
    for (std::size_t i = 0; i < state.settings.size(); ++i)
        if (satisfies(state.settings[i], formula)) out.push_back(i);
    return out;
}

std::vector<PrimitiveEvent> canonical_events(std::vector<PrimitiveEvent> events) {
    std::sort(events.begin(), events.end(),
              [](const PrimitiveEvent& a, const PrimitiveEvent& b) { return a.variable < b.variable; });
    for (std::size_t i = 1; i < events.size(); ++i)
        if (events[i].variable == events[i - 1].variable)
            throw TypeError("duplicate variable '" + events[i].variable + "' in conjunction");
    return events;
}

namespace {

void check_expl(const EpistemicState& state, const std::vector<PrimitiveEvent>& expl) {
    if (expl.empty()) throw TypeError("explanation candidate must be non-empty");
    for (const auto& s : state.settings)
        check_events(s.model->signature, expl, /*require_endogenous=*/true, /*require_distinct=*/true);
}

void check_phi(const EpistemicState& state, const FormulaPtr& phi) {
    for (const auto& s : state.settings) check_formula(s.model->signature, plain(phi));
}

// The EX1(a) search inside one setting: a conjunct X=x of the candidate plus
// a conjunction Y=y over other endogenous variables (excluding all candidate
// variables) at their actual solved values, such that X=x & Y=y is an actual
// cause of phi. Y grows by ascending size; conjuncts and Y-sets in canonical
// order.
std::optional<std::pair<PrimitiveEvent, std::vector<PrimitiveEvent>>> ex1a_search(
    const Setting& setting, const std::vector<PrimitiveEvent>& expl, const FormulaPtr& phi) {
    const Signature& sig = setting.model->signature;
    Assignment actual = solve_with(*setting.model, setting.context, {});

    std::set<std::string> expl_vars;
    for (const auto& e : expl) expl_vars.insert(e.variable);
    std::vector<std::string> pool;
    for (const auto& d : sig.endogenous)
        if (!expl_vars.count(d.name)) pool.push_back(d.name);
    std::sort(pool.begin(), pool.end());

    for (std::size_t y_size = 0; y_size <= pool.size(); ++y_size) {
        for (const auto& conjunct : expl) {
            std::optional<std::vector<PrimitiveEvent>> found_y;
            for_each_index_subset(pool.size(), y_size, y_size, [&](const std::vector<std::size_t>& pick) {
                std::vector<PrimitiveEvent> events{conjunct};
                std::vector<PrimitiveEvent> aug;
                for (std::size_t i : pick) {
                    PrimitiveEvent y{pool[i], actual.at(pool[i])};
                    events.push_back(y);
                    aug.push_back(y);
                }
                CandidateCause cand = make_candidate(sig, events);
                if (is_actual_cause(setting, cand, phi).is_cause) {
                    found_y = aug;
                    return false;
                }
                return true;
            });
            if (found_y) return std::make_pair(conjunct, *found_y);
        }
    }
    return std::nullopt;
}

Rational prob_of(const EpistemicState& state, const std::vector<std::size_t>& indices) {
    Rational sum;
    for (std::size_t i : indices) sum = sum + state.probs[i];
    return sum;
}

}  // namespace

Ex1aResult check_ex1a(const EpistemicState& state, const std::vector<PrimitiveEvent>& expl,
                      const FormulaPtr& phi) {
    std::vector<PrimitiveEvent> events = canonical_events(expl);
    check_expl(state, events);
    check_phi(state, phi);
    Ex1aResult result;
    result.holds = true;
    FormulaPtr conj_and_phi = f_and(conjunction_of(events), phi);
    for (std::size_t i = 0; i < state.settings.size(); ++i) {
        Ex1aEvidence ev;
        ev.setting_index = i;
        ev.applicable = satisfies(state.settings[i], plain(conj_and_phi));
        if (ev.applicable) {
            auto found = ex1a_search(state.settings[i], events, phi);
            ev.success = found.has_value();
            if (found) {
                ev.conjunct = found->first;
                ev.augmentation = found->second;
            } else {
                result.holds = false;
            }
        }
        result.evidence.push_back(std::move(ev));
    }
    return result;
}

Ex1bResult check_ex1b(const EpistemicState& state, const std::vector<PrimitiveEvent>& expl,
                      const FormulaPtr& phi) {
    std::vector<PrimitiveEvent> events = canonical_events(expl);
    check_expl(state, events);
    check_phi(state, phi);
    Ex1bResult result;
    result.holds = true;
    for (std::size_t i = 0; i < state.settings.size(); ++i) {
        CausalFormula intervened;
        for (const auto& e : events) intervened.interventions.emplace_back(e.variable, e.value);
        intervened.body = phi;
        if (!satisfies(state.settings[i], intervened)) {
            result.holds = false;
            result.failing.push_back(i);
        }
    }
    return result;
}

ExplanationVerdict is_explanation(const EpistemicState& state, const std::vector<PrimitiveEvent>& expl,
                                  const FormulaPtr& phi) {
    std::vector<PrimitiveEvent> events = canonical_events(expl);
    check_expl(state, events);
    check_phi(state, phi);

    ExplanationVerdict v;
    v.ex1a = check_ex1a(state, events, phi);
    v.ex1b = check_ex1b(state, events, phi);

    // EX2: no strict non-empty subset passes both EX1 conditions.
    v.ex2 = true;
    if (events.size() > 1) {
        for_each_index_subset(events.size(), 1, events.size() - 1,
                              [&](const std::vector<std::size_t>& keep) {
                                  std::vector<PrimitiveEvent> sub;
                                  for (std::size_t i : keep) sub.push_back(events[i]);
                                  if (check_ex1a(state, sub, phi).holds && check_ex1b(state, sub, phi).holds) {
                                      v.ex2 = false;
                                      v.ex2_violation = sub;
                                      return false;
                                  }
                                  return true;
                              });
    }

    FormulaPtr conj = conjunction_of(events);
    v.ex3 = !extension(state, plain(f_and(conj, phi))).empty();
    v.ex4 = !extension(state, plain(f_and(phi, f_not(conj)))).empty();

    v.is_explanation = v.ex1a.holds && v.ex1b.holds && v.ex2 && v.ex3;
    v.is_nontrivial = v.is_explanation && v.ex4;
    return v;
}

std::vector<FoundExplanation> find_explanations(const EpistemicState& state, const FormulaPtr& phi,
                                                std::optional<std::size_t> max_size) {
    check_phi(state, phi);

    // Candidate space: variables endogenous in every model of K, with the
    // values every model's range admits (in the first model's range order).
    const Signature& first_sig = state.settings.front().model->signature;
    std::vector<std::pair<std::string, std::vector<Value>>> space;
    for (const auto& d : first_sig.endogenous) {
        bool everywhere = true;
        std::vector<Value> vals;
        for (const Value& v : d.range.values) {
            bool in_all = true;
            for (const auto& s : state.settings) {
                const Range* r = s.model->signature.find(d.name);
                if (!r || !s.model->signature.is_endogenous(d.name) || !r->contains(v)) {
                    in_all = false;
                    if (!r || !s.model->signature.is_endogenous(d.name)) everywhere = false;
                    break;
                }
            }
            if (!everywhere) break;
            if (in_all) vals.push_back(v);
        }
        if (everywhere && !vals.empty()) space.emplace_back(d.name, std::move(vals));
    }
    std::sort(space.begin(), space.end(), [](const auto& a, const auto& b) { return a.first < b.first; });

    std::vector<FoundExplanation> out;
    std::size_t limit = max_size.value_or(space.size());
    for_each_index_subset(space.size(), 1, limit, [&](const std::vector<std::size_t>& pick) {
        std::vector<PrimitiveEvent> events(pick.size());
        std::function<void(std::size_t)> fill = [&](std::size_t i) {
            if (i == pick.size()) {
                ExplanationVerdict v = is_explanation(state, events, phi);
                if (v.is_explanation) out.push_back({events, std::move(v)});
                return;
            }
            const auto& [name, vals] = space[pick[i]];
            for (const Value& v : vals) {
                events[i] = {name, v};
                fill(i + 1);
            }
        };
        fill(0);
        return true;
    });
    return out;
}

Rational ex1a_score(const EpistemicState& state, const std::vector<PrimitiveEvent>& expl,
                    const FormulaPtr& phi) {
    Ex1aResult r = check_ex1a(state, expl, phi);
    std::vector<std::size_t> conditioning;
    std::vector<std::size_t> successes;
    for (const auto& ev : r.evidence) {
        if (!ev.applicable) continue;
        conditioning.push_back(ev.setting_index);
        if (ev.success) successes.push_back(ev.setting_index);
    }
    Rational denom = prob_of(state, conditioning);
    if (denom.is_zero()) throw DomainError("conditioning event X=x & phi has zero probability");
    return prob_of(state, successes) / denom;
}

Rational ex1b_score(const EpistemicState& state, const std::vector<PrimitiveEvent>& expl,
                    const FormulaPtr& phi, bool conditional_on_phi) {
    check_expl(state, expl);
    check_phi(state, phi);
    CausalFormula intervened;
    for (const auto& e : canonical_events(expl)) intervened.interventions.emplace_back(e.variable, e.value);
    intervened.body = phi;
    std::vector<std::size_t> sat = extension(state, intervened);
    if (!conditional_on_phi) return prob_of(state, sat);

    std::vector<std::size_t> phi_set = extension(state, plain(phi));
    Rational denom = prob_of(state, phi_set);
    if (denom.is_zero()) throw DomainError("conditioning event phi has zero probability");
    std::vector<std::size_t> both;
    std::set_intersection(sat.begin(), sat.end(), phi_set.begin(), phi_set.end(), std::back_inserter(both));
    return prob_of(state, both) / denom;
}

Rational prior_score(const EpistemicState& state, const std::vector<PrimitiveEvent>& expl,
                     const FormulaPtr& phi) {
    check_expl(state, expl);
    check_phi(state, phi);
    FormulaPtr conj = conjunction_of(expl);
    std::vector<std::size_t> phi_set = extension(state, plain(phi));
    Rational denom = prob_of(state, phi_set);
    if (denom.is_zero()) throw DomainError("conditioning event phi has zero probability");
    std::vector<std::size_t> both = extension(state, plain(f_and(conj, phi)));
    return prob_of(state, both) / denom;
}

namespace {

Ordering order_of(const Rational& a, const Rational& b) {
    if (a < b) return Ordering::Less;
    if (b < a) return Ordering::Greater;
    return Ordering::Equal;
}

}  // namespace

ComparisonReport compare_explanations(const EpistemicState& state,
                                      const std::vector<PrimitiveEvent>& left,
                                      const std::vector<PrimitiveEvent>& right, const FormulaPtr& phi,
                                      bool ex1b_conditional) {
    ComparisonReport r;
    r.prior.left = prior_score(state, left, phi);
    r.prior.right = prior_score(state, right, phi);
    r.prior.order = order_of(r.prior.left, r.prior.right);
    r.ex1a.left = ex1a_score(state, left, phi);
    r.ex1a.right = ex1a_score(state, right, phi);
    r.ex1a.order = order_of(r.ex1a.left, r.ex1a.right);
    r.ex1b.left = ex1b_score(state, left, phi, ex1b_conditional);
    r.ex1b.right = ex1b_score(state, right, phi, ex1b_conditional);
    r.ex1b.order = order_of(r.ex1b.left, r.ex1b.right);
    return r;
}

}  // namespace causalex
