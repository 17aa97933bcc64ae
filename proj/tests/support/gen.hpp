#pragma once

#include <random>
#include <string>
#include <vector>

#include "causalex/explanation.hpp"
#include "causalex/formula.hpp"
#include "causalex/model.hpp"

// Deterministic random instances for the property and oracle suites. Models
// are binary and acyclic by construction: each equation is a full decision
// tree over a random subset of the variables declared before it.

namespace causalex::testgen {

struct Rng {
    std::mt19937 engine;
    explicit Rng(std::uint32_t seed) : engine(seed) {}

    int below(int n) { return std::uniform_int_distribution<int>(0, n - 1)(engine); }
    bool coin() { return below(2) == 1; }
};

inline Range binary_range() { return Range{{Value(std::int64_t{0}), Value(std::int64_t{1})}}; }

inline ExprPtr decision_tree(Rng& rng, const std::vector<std::string>& parents, std::size_t i) {
    if (i == parents.size()) return make_lit(Value(std::int64_t(rng.below(2))));
    ExprPtr test = make_call(Op::Eq, {make_var(parents[i]), make_lit(Value(std::int64_t{1}))});
    ExprPtr hi = decision_tree(rng, parents, i + 1);
    ExprPtr lo = decision_tree(rng, parents, i + 1);
    return make_call(Op::If, {test, hi, lo});
}

inline CausalModel random_model(Rng& rng, int n_exo, int n_endo, const std::string& id = "R") {
    CausalModel m;
    m.id = id;
    std::vector<std::string> pool;
    for (int i = 0; i < n_exo; ++i) {
        std::string name = "U" + std::to_string(i);
        m.signature.exogenous.push_back({name, binary_range()});
        pool.push_back(name);
    }
    for (int i = 0; i < n_endo; ++i) {
        std::string name = "X" + std::to_string(i);
        m.signature.endogenous.push_back({name, binary_range()});
        std::vector<std::string> parents;
        for (const auto& p : pool)
            if (rng.coin() && parents.size() < 3) parents.push_back(p);
        m.equations.push_back({name, decision_tree(rng, parents, 0)});
        pool.push_back(name);
    }
    return m;
}

inline Context random_context(Rng& rng, const CausalModel& m) {
    Context u;
    for (const auto& d : m.signature.exogenous)
        u[d.name] = d.range.values[rng.below(static_cast<int>(d.range.values.size()))];
    return u;
}

inline PrimitiveEvent random_event(Rng& rng, const CausalModel& m) {
    const auto& d = m.signature.endogenous[rng.below(static_cast<int>(m.signature.endogenous.size()))];
    return {d.name, d.range.values[rng.below(static_cast<int>(d.range.values.size()))]};
}

inline FormulaPtr random_phi(Rng& rng, const CausalModel& m, int depth) {
    if (depth == 0 || rng.below(3) == 0) return f_event(random_event(rng, m));
    switch (rng.below(4)) {
        case 0: return f_not(random_phi(rng, m, depth - 1));
        case 1: return f_and(random_phi(rng, m, depth - 1), random_phi(rng, m, depth - 1));
        case 2: return f_or(random_phi(rng, m, depth - 1), random_phi(rng, m, depth - 1));
        default: return f_implies(random_phi(rng, m, depth - 1), random_phi(rng, m, depth - 1));
    }
}

// Conjunction of distinct endogenous variables at their actual solved values.
inline std::vector<PrimitiveEvent> random_actual_candidate(Rng& rng, const CausalModel& m,
                                                           const Assignment& actual, int max_size) {
    std::vector<std::string> vars;
    for (const auto& d : m.signature.endogenous) vars.push_back(d.name);
    for (int i = static_cast<int>(vars.size()) - 1; i > 0; --i)
        std::swap(vars[i], vars[rng.below(i + 1)]);
    int size = 1 + rng.below(std::min<int>(max_size, static_cast<int>(vars.size())));
    std::vector<PrimitiveEvent> events;
    for (int i = 0; i < size; ++i) events.push_back({vars[i], actual.at(vars[i])});
    return canonical_events(events);
}

// A state over one or two random models with a common signature shape and
// exact probabilities w_i / sum(w).
inline EpistemicState random_state(Rng& rng, int max_settings, int n_exo, int n_endo) {
    EpistemicState state;
    state.id = "RK";
    int n_models = 1 + rng.below(2);
    std::vector<ModelPtr> models;
    for (int i = 0; i < n_models; ++i)
        models.push_back(std::make_shared<CausalModel>(random_model(rng, n_exo, n_endo, "R" + std::to_string(i))));

    int want = 1 + rng.below(max_settings);
    std::vector<std::int64_t> weights;
    for (int tries = 0; tries < 40 && static_cast<int>(state.settings.size()) < want; ++tries) {
        ModelPtr m = models[rng.below(n_models)];
        Context u = random_context(rng, *m);
        bool dup = false;
        for (const auto& s : state.settings)
            if (s.model->id == m->id && s.context == u) dup = true;
        if (dup) continue;
        state.settings.push_back({m, u});
        weights.push_back(1 + rng.below(4));
    }
    std::int64_t total = 0;
    for (auto w : weights) total += w;
    for (auto w : weights) state.probs.push_back(Rational(w, total));
    return state;
}

}  // namespace causalex::testgen
