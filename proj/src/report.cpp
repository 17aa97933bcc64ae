#include "causalex/report.hpp"

#include <sstream>

namespace causalex {

namespace {

bool all_scalar(const Json& arr) {
    for (const auto& e : arr)
        if (e.is_object() || e.is_array()) return false;
    return true;
}

std::string scalar_str(const Json& v) {
    if (v.is_string()) return v.get<std::string>();
    return v.dump();
}

void flatten(const Json& node, const std::string& path, std::ostream& os) {
    if (node.is_object()) {
        if (node.empty() && !path.empty()) {
            os << path << " = {}\n";
            return;
        }
        for (const auto& [key, value] : node.items())
            flatten(value, path.empty() ? key : path + "." + key, os);
        return;
    }
    if (node.is_array()) {
        if (all_scalar(node)) {
            os << path << " = [";
            for (std::size_t i = 0; i < node.size(); ++i) os << (i ? ", " : "") << scalar_str(node[i]);
            os << "]\n";
            return;
        }
        for (std::size_t i = 0; i < node.size(); ++i)
            flatten(node[i], path + "[" + std::to_string(i) + "]", os);
        return;
    }
    os << path << " = " << scalar_str(node) << "\n";
}

}  // namespace

std::string emit_report(const Json& tree, ReportFormat format) {
    if (format == ReportFormat::Tree) return tree.dump(2) + "\n";
    std::ostringstream os;
    flatten(tree, "", os);
    return os.str();
}

Json events_json(const std::vector<PrimitiveEvent>& events) {
    Json out = Json::object();
    for (const auto& e : events) out[e.variable] = e.value.str();
    return out;
}

Json assignment_json(const Assignment& a) {
    Json out = Json::object();
    for (const auto& [k, v] : a) out[k] = v.str();
    return out;
}

Json cause_verdict_json(const CandidateCause& cand, const CauseVerdict& verdict) {
    Json out = Json::object();
    out["ac1"] = verdict.ac1;
    Json ac2 = Json::object();
    ac2["holds"] = verdict.ac2;
    if (verdict.witness) {
        Json w = Json::object();
        w["W"] = Json::array();
        for (const auto& n : verdict.witness->fixed_set) w["W"].push_back(n);
        w["w"] = assignment_json(verdict.witness->fixed_values);
        ac2["witness"] = std::move(w);
        Json contrast = Json::object();
        for (std::size_t i = 0; i < cand.conjunction.size(); ++i)
            contrast[cand.conjunction[i].variable] = verdict.witness->contrast_values[i].str();
        ac2["contrast"] = std::move(contrast);
    }
    out["ac2"] = std::move(ac2);
    Json ac3 = Json::object();
    ac3["holds"] = verdict.ac3;
    if (verdict.ac3_violation) ac3["violating_subset"] = events_json(*verdict.ac3_violation);
    out["ac3"] = std::move(ac3);
    out["is_cause"] = verdict.is_cause;
    out["is_but_for"] = verdict.is_but_for;
    return out;
}

Json explanation_verdict_json(const EpistemicState& state, const ExplanationVerdict& verdict) {
    Json out = Json::object();

    Json ex1a = Json::object();
    ex1a["holds"] = verdict.ex1a.holds;
    Json evidence = Json::array();
    for (const auto& ev : verdict.ex1a.evidence) {
        Json e = Json::object();
        e["setting"] = setting_label(state.settings[ev.setting_index]);
        e["applicable"] = ev.applicable;
        if (ev.applicable) {
            e["success"] = ev.success;
            if (ev.success) {
                e["conjunct"] = events_json({*ev.conjunct});
                e["augment"] = events_json(ev.augmentation);
            }
        }
        evidence.push_back(std::move(e));
    }
    ex1a["evidence"] = std::move(evidence);
    out["ex1a"] = std::move(ex1a);

    Json ex1b = Json::object();
    ex1b["holds"] = verdict.ex1b.holds;
    Json failing = Json::array();
    for (std::size_t i : verdict.ex1b.failing) failing.push_back(setting_label(state.settings[i]));
    ex1b["failing"] = std::move(failing);
    out["ex1b"] = std::move(ex1b);

    Json ex2 = Json::object();
    ex2["holds"] = verdict.ex2;
    if (verdict.ex2_violation) ex2["violating_subset"] = events_json(*verdict.ex2_violation);
    out["ex2"] = std::move(ex2);

    out["ex3"] = verdict.ex3;
    out["ex4"] = verdict.ex4;
    out["is_explanation"] = verdict.is_explanation;
    out["is_nontrivial"] = verdict.is_nontrivial;
    return out;
}

Json validation_json(const ValidationReport& report) {
    Json out = Json::object();
    out["valid"] = report.ok();
    Json violations = Json::array();
    for (const auto& v : report.violations) {
        Json entry = Json::object();
        entry["message"] = v.message;
        if (v.witness) entry["witness"] = assignment_json(*v.witness);
        if (!v.cycle.empty()) {
            Json cycle = Json::array();
            for (const auto& n : v.cycle) cycle.push_back(n);
            entry["cycle"] = std::move(cycle);
        }
        violations.push_back(std::move(entry));
    }
    out["violations"] = std::move(violations);
    return out;
}

}  // namespace causalex
