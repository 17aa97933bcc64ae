#include "causalex/causality.hpp"

#include <algorithm>

#include "causalex/combinatorics.hpp"
#include "causalex/errors.hpp"

namespace causalex {

CandidateCause make_candidate(const Signature& sig, std::vector<PrimitiveEvent> conjunction,
                              std::optional<std::vector<Value>> contrast) {
    if (conjunction.empty()) throw TypeError("candidate cause must be non-empty");
    if (contrast && contrast->size() != conjunction.size())
        throw TypeError("contrast length does not match the conjunction");

    std::vector<std::size_t> order(conjunction.size());
    for (std::size_t i = 0; i < order.size(); ++i) order[i] = i;
    std::sort(order.begin(), order.end(), [&](std::size_t a, std::size_t b) {
        return conjunction[a].variable < conjunction[b].variable;
    });

    CandidateCause cand;
    for (std::size_t i : order) cand.conjunction.push_back(conjunction[i]);
    if (contrast) {
        cand.contrast.emplace();
        for (std::size_t i : order) cand.contrast->push_back((*contrast)[i]);
    }

    check_events(sig, cand.conjunction, /*require_endogenous=*/true, /*require_distinct=*/true);
    if (cand.contrast) {
        for (std::size_t i = 0; i < cand.conjunction.size(); ++i) {
            const Range* r = sig.find(cand.conjunction[i].variable);
            if (!r->contains((*cand.contrast)[i]))
                throw TypeError("contrast value " + (*cand.contrast)[i].str() + " out of range for '" +
                                cand.conjunction[i].variable + "'");
        }
    }
    return cand;
}

bool check_ac1(const Setting& setting, const CandidateCause& cand, const FormulaPtr& phi) {
    FormulaPtr conj = conjunction_of(cand.conjunction);
    return satisfies(setting, plain(f_and(conj, phi)));
}

namespace {

// Joint contrast tuples in range order (first component slowest), minus the
// tuple equal to the actual values, which can never falsify phi.
void for_each_contrast(const Signature& sig, const CandidateCause& cand,
                       const std::function<bool(const std::vector<Value>&)>& fn) {
    if (cand.contrast) {
        fn(*cand.contrast);
        return;
    }
    std::vector<const Range*> ranges;
    for (const auto& e : cand.conjunction) ranges.push_back(sig.find(e.variable));
    std::vector<Value> tuple(cand.conjunction.size());
    bool stop = false;
    std::function<void(std::size_t)> go = [&](std::size_t i) {
        if (stop) return;
        if (i == tuple.size()) {
            bool all_actual = true;
            for (std::size_t j = 0; j < tuple.size(); ++j)
                if (!(tuple[j] == cand.conjunction[j].value)) all_actual = false;
            if (!all_actual && !fn(tuple)) stop = true;
            return;
        }
        for (const Value& v : ranges[i]->values) {
            tuple[i] = v;
            go(i + 1);
            if (stop) return;
        }
    };
    go(0);
}

std::optional<Witness> ac2_search(const Setting& setting, const CandidateCause& cand, const FormulaPtr& phi,
                                  bool empty_w_only) {
    const CausalModel& model = *setting.model;
    const Signature& sig = model.signature;
    check_formula(sig, plain(phi));

    Assignment actual = solve_with(model, setting.context, {});

    std::vector<std::string> cause_vars;
    for (const auto& e : cand.conjunction) cause_vars.push_back(e.variable);

    std::vector<std::string> w_pool;
    for (const auto& d : sig.endogenous)
        if (std::find(cause_vars.begin(), cause_vars.end(), d.name) == cause_vars.end())
            w_pool.push_back(d.name);
    std::sort(w_pool.begin(), w_pool.end());

    std::optional<Witness> found;
    std::size_t w_max = empty_w_only ? 0 : w_pool.size();
    for_each_index_subset(w_pool.size(), 0, w_max, [&](const std::vector<std::size_t>& pick) {
        Assignment base;
        std::vector<std::string> w_names;
        for (std::size_t i : pick) {
            w_names.push_back(w_pool[i]);
            base[w_pool[i]] = actual.at(w_pool[i]);
        }
        for_each_contrast(sig, cand, [&](const std::vector<Value>& contrast) {
            Assignment overrides = base;
            for (std::size_t j = 0; j < cand.conjunction.size(); ++j)
                overrides[cand.conjunction[j].variable] = contrast[j];
            Assignment solution = solve_with(model, setting.context, overrides);
            if (!eval_formula(*phi, solution)) {
                Witness w;
                w.fixed_set = w_names;
                for (const auto& n : w_names) w.fixed_values[n] = actual.at(n);
                w.contrast_values = contrast;
                found = std::move(w);
                return false;
            }
            return true;
        });
        return !found.has_value();
    });
    return found;
}

CandidateCause restrict_candidate(const CandidateCause& cand, const std::vector<std::size_t>& keep) {
    CandidateCause sub;
    for (std::size_t i : keep) sub.conjunction.push_back(cand.conjunction[i]);
    if (cand.contrast) {
        sub.contrast.emplace();
        for (std::size_t i : keep) sub.contrast->push_back((*cand.contrast)[i]);
    }
    return sub;
}

}  // namespace

std::optional<Witness> check_ac2(const Setting& setting, const CandidateCause& cand, const FormulaPtr& phi) {
    return ac2_search(setting, cand, phi, /*empty_w_only=*/false);
}

CauseVerdict is_actual_cause(const Setting& setting, const CandidateCause& cand, const FormulaPtr& phi) {
    CauseVerdict v;
    v.ac1 = check_ac1(setting, cand, phi);
    v.witness = check_ac2(setting, cand, phi);
    v.ac2 = v.witness.has_value();
    v.is_but_for = ac2_search(setting, cand, phi, /*empty_w_only=*/true).has_value();

    // AC3: no strict non-empty subset may satisfy AC1 and AC2.
    v.ac3 = true;
    if (cand.conjunction.size() > 1) {
        for_each_index_subset(cand.conjunction.size(), 1, cand.conjunction.size() - 1,
                              [&](const std::vector<std::size_t>& keep) {
                                  CandidateCause sub = restrict_candidate(cand, keep);
                                  if (check_ac1(setting, sub, phi) && check_ac2(setting, sub, phi)) {
                                      v.ac3 = false;
                                      v.ac3_violation = sub.conjunction;
                                      return false;
                                  }
                                  return true;
                              });
    }

    v.is_cause = v.ac1 && v.ac2 && v.ac3;
    return v;
}

std::vector<FoundCause> find_actual_causes(const Setting& setting, const FormulaPtr& phi,
                                           std::optional<std::size_t> max_size) {
    std::vector<FoundCause> out;
    if (!satisfies(setting, plain(phi))) return out;

    Assignment actual = solve_with(*setting.model, setting.context, {});
    std::vector<std::string> vars;
    for (const auto& d : setting.model->signature.endogenous) vars.push_back(d.name);
    std::sort(vars.begin(), vars.end());

    std::size_t limit = max_size.value_or(vars.size());
    for_each_index_subset(vars.size(), 1, limit, [&](const std::vector<std::size_t>& pick) {
        std::vector<PrimitiveEvent> events;
        for (std::size_t i : pick) events.push_back({vars[i], actual.at(vars[i])});
        CandidateCause cand{events, std::nullopt};
        CauseVerdict verdict = is_actual_cause(setting, cand, phi);
        if (verdict.is_cause) out.push_back({std::move(cand), std::move(verdict)});
        return true;
    });
    return out;
}

}  // namespace causalex
