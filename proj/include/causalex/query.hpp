#pragma once

#include <map>
#include <string>

#include "causalex/parser.hpp"
#include "causalex/report.hpp"

namespace causalex {

// Parses, validates and indexes the model documents named by a query.
// Duplicate model ids across files are an error.
std::map<std::string, ModelPtr> load_models(const std::vector<std::string>& files,
                                            const std::string& base_dir);

// Runs one query end to end and returns the machine-readable tree. Throws
// ParseError / TypeError / DomainError / InvalidModelError on bad inputs.
// Relative input paths resolve against base_dir ("" = current directory).
Json execute_query(const QueryDocument& query, const std::string& base_dir);

std::string read_file(const std::string& path);

}  // namespace causalex
