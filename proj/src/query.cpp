#include "causalex/query.hpp"

#include <filesystem>
#include <fstream>
#include <sstream>

#include "causalex/errors.hpp"
#include "causalex/printer.hpp"

namespace causalex {

namespace fs = std::filesystem;

std::string read_file(const std::string& path) {
    std::ifstream in(path, std::ios::binary);
    if (!in) throw Error("cannot read file '" + path + "'");
    std::ostringstream os;
    os << in.rdbuf();
    return os.str();
}

namespace {

std::string resolve(const std::string& path, const std::string& base_dir) {
    fs::path p(path);
    if (p.is_absolute() || base_dir.empty()) return path;
    return (fs::path(base_dir) / p).string();
}

// Reruns f, tagging any ParseError with the offending input and the grammar
// that applies to it.
template <typename F>
auto parsing(const std::string& what, const char* grammar, F&& f) {
    try {
        return f();
    } catch (const ParseError& e) {
        throw InputError(what + ": " + e.what(), grammar);
    }
}

const char* ordering_str(Ordering o) {
    switch (o) {
        case Ordering::Less: return "<";
        case Ordering::Greater: return ">";
        default: return "=";
    }
}

struct LoadedSetting {
    ModelPtr model;
    Setting setting;
};

// Model + context queries (validate/solve/check-cause/find-causes).
LoadedSetting make_setting(const QueryDocument& q, const std::map<std::string, ModelPtr>& env) {
    ModelPtr model;
    if (q.model_id) {
        auto it = env.find(*q.model_id);
        if (it == env.end()) throw DomainError("unknown model id '" + *q.model_id + "'");
        model = it->second;
    } else if (env.size() == 1) {
        model = env.begin()->second;
    } else {
        throw DomainError("query must name a model (several are loaded)");
    }
    if (!q.context) throw DomainError("query requires a context");
    check_context(model->signature, *q.context);
    return {model, Setting{model, *q.context}};
}

FormulaPtr require_plain_phi(const QueryDocument& q, const Signature& sig) {
    if (!q.phi) throw DomainError("query requires --phi");
    CausalFormula f =
        parsing("in phi '" + *q.phi + "'", "formula", [&] { return parse_formula(*q.phi, sig); });
    if (!f.interventions.empty())
        throw TypeError("phi must be a Boolean formula without an intervention prefix");
    return f.body;
}

std::vector<PrimitiveEvent> parse_x(const std::string& text, const Signature& sig) {
    return parsing("in conjunction '" + text + "'", "formula", [&] { return parse_conjunction(text, sig); });
}

}  // namespace

std::map<std::string, ModelPtr> load_models(const std::vector<std::string>& files,
                                            const std::string& base_dir) {
    std::map<std::string, ModelPtr> env;
    for (const auto& file : files) {
        std::string path = resolve(file, base_dir);
        std::vector<CausalModel> models =
            parsing("in model file '" + file + "'", "model", [&] { return parse_models(read_file(path)); });
        for (auto& m : models) {
            ValidationReport report = validate_model(m);
            if (!report.ok())
                throw InvalidModelError("invalid model '" + m.id + "' in " + file + ": " +
                                        report.violations.front().message);
            if (env.count(m.id)) throw DomainError("duplicate model id '" + m.id + "'");
            std::string id = m.id;
            env[id] = std::make_shared<CausalModel>(std::move(m));
        }
    }
    return env;
}

Json execute_query(const QueryDocument& q, const std::string& base_dir) {
    std::map<std::string, ModelPtr> env = load_models(q.model_files, base_dir);

    Json out = Json::object();
    out["query"] = q.kind;

    if (q.kind == "validate") {
        // Unvalidated reload: load_models rejects invalid models, so run the
        // validator on the raw parse instead.
        Json models = Json::array();
        for (const auto& file : q.model_files) {
            std::string path = resolve(file, base_dir);
            std::vector<CausalModel> parsed =
                parsing("in model file '" + file + "'", "model", [&] { return parse_models(read_file(path)); });
            for (const CausalModel& m : parsed) {
                Json entry = Json::object();
                entry["model"] = m.id;
                Json v = validation_json(validate_model(m));
                entry["valid"] = v["valid"];
                entry["violations"] = v["violations"];
                models.push_back(std::move(entry));
            }
        }
        out["models"] = std::move(models);
        return out;
    }

    if (q.kind == "solve") {
        LoadedSetting ls = make_setting(q, env);
        out["model"] = ls.model->id;
        out["context"] = assignment_json(*q.context);
        out["assignment"] = assignment_json(solve(ls.setting));
        return out;
    }

    if (q.kind == "check-cause" || q.kind == "find-causes") {
        LoadedSetting ls = make_setting(q, env);
        const Signature& sig = ls.model->signature;
        FormulaPtr phi = require_plain_phi(q, sig);
        out["model"] = ls.model->id;
        out["context"] = assignment_json(*q.context);
        out["phi"] = print_formula(plain(phi));

        if (q.kind == "check-cause") {
            if (!q.x) throw DomainError("check-cause requires --x");
            std::vector<PrimitiveEvent> conj = parse_x(*q.x, sig);
            std::optional<std::vector<Value>> contrast;
            if (q.contrast)
                contrast = parsing("in contrast '" + *q.contrast + "'", "context",
                                   [&] { return parse_contrast(*q.contrast, sig, conj); });
            CandidateCause cand = make_candidate(sig, conj, contrast);
            out["x"] = print_events(cand.conjunction);
            Json v = cause_verdict_json(cand, is_actual_cause(ls.setting, cand, phi));
            out.update(v);
            return out;
        }

        std::optional<std::size_t> max_size;
        if (q.max_size) {
            if (*q.max_size <= 0) throw DomainError("max_size must be positive");
            max_size = static_cast<std::size_t>(*q.max_size);
        }
        Json causes = Json::array();
        for (const FoundCause& fc : find_actual_causes(ls.setting, phi, max_size)) {
            Json entry = Json::object();
            entry["x"] = events_json(fc.cause.conjunction);
            entry["is_but_for"] = fc.verdict.is_but_for;
            causes.push_back(std::move(entry));
        }
        out["causes"] = std::move(causes);
        return out;
    }

    // Explanation family: needs a state.
    if (!q.state_file) throw DomainError("query requires --state");
    EpistemicState state = parsing("in state file '" + *q.state_file + "'", "state", [&] {
        return parse_state(read_file(resolve(*q.state_file, base_dir)), env);
    });
    const Signature& sig = state.settings.front().model->signature;
    FormulaPtr phi = require_plain_phi(q, sig);
    out["state"] = state.id;
    out["phi"] = print_formula(plain(phi));

    if (q.kind == "check-explanation") {
        if (!q.x) throw DomainError("check-explanation requires --x");
        std::vector<PrimitiveEvent> expl = parse_x(*q.x, sig);
        out["x"] = print_events(expl);
        out.update(explanation_verdict_json(state, is_explanation(state, expl, phi)));
        return out;
    }

    if (q.kind == "find-explanations") {
        std::optional<std::size_t> max_size;
        if (q.max_size) {
            if (*q.max_size <= 0) throw DomainError("max_size must be positive");
            max_size = static_cast<std::size_t>(*q.max_size);
        }
        Json found = Json::array();
        for (const FoundExplanation& fe : find_explanations(state, phi, max_size)) {
            Json entry = Json::object();
            entry["x"] = events_json(fe.events);
            entry["nontrivial"] = fe.verdict.is_nontrivial;
            found.push_back(std::move(entry));
        }
        out["explanations"] = std::move(found);
        return out;
    }

    if (q.kind == "score") {
        if (!q.x) throw DomainError("score requires --x");
        std::vector<PrimitiveEvent> expl = parse_x(*q.x, sig);
        out["x"] = print_events(expl);
        Json scores = Json::object();
        scores["ex1a"] = ex1a_score(state, expl, phi).str();
        scores["ex1b"] = ex1b_score(state, expl, phi, q.ex1b_conditional).str();
        scores["prior"] = prior_score(state, expl, phi).str();
        out["scores"] = std::move(scores);
        return out;
    }

    if (q.kind == "compare") {
        if (!q.x || !q.x2) throw DomainError("compare requires --x and --x2");
        std::vector<PrimitiveEvent> left = parse_x(*q.x, sig);
        std::vector<PrimitiveEvent> right = parse_x(*q.x2, sig);
        out["x"] = print_events(left);
        out["x2"] = print_events(right);
        ComparisonReport r = compare_explanations(state, left, right, phi, q.ex1b_conditional);
        Json criteria = Json::object();
        auto pair_json = [](const ScorePair& p) {
            Json j = Json::object();
            j["left"] = p.left.str();
            j["right"] = p.right.str();
            j["order"] = ordering_str(p.order);
            return j;
        };
        criteria["prior"] = pair_json(r.prior);
        criteria["ex1a"] = pair_json(r.ex1a);
        criteria["ex1b"] = pair_json(r.ex1b);
        out["criteria"] = std::move(criteria);
        return out;
    }

    throw DomainError("unknown query kind '" + q.kind + "'");
}

}  // namespace causalex
