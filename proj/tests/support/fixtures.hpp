#pragma once

#include <initializer_list>
#include <map>
#include <string>

#include "causalex/parser.hpp"
#include "causalex/query.hpp"

namespace causalex::fixtures {

inline std::string corpus_dir() { return CAUSALEX_CORPUS_DIR; }

inline std::map<std::string, ModelPtr> corpus_models(std::initializer_list<std::string> files) {
    std::vector<std::string> v(files);
    return load_models(v, corpus_dir());
}

inline ModelPtr single_model(const std::string& source) {
    auto models = parse_models(source);
    return std::make_shared<CausalModel>(models.front());
}

inline ModelPtr model_by_id(const std::map<std::string, ModelPtr>& env, const std::string& id) {
    return env.at(id);
}

inline Setting setting_of(const ModelPtr& m, const std::string& context) {
    return Setting{m, parse_context(context, m->signature)};
}

inline EpistemicState corpus_state(const std::string& state_file,
                                   std::initializer_list<std::string> model_files) {
    auto env = corpus_models(model_files);
    return parse_state(read_file(corpus_dir() + "/" + state_file), env);
}

}  // namespace causalex::fixtures
