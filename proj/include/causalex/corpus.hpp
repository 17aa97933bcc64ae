#pragma once

#include <iosfwd>
#include <string>
#include <vector>

#include "causalex/parser.hpp"

namespace causalex {

struct CorpusCase {
    std::string file;    // the .query.txt that defined it
    std::string dir;     // base directory for its relative paths
    QueryDocument query;
};

// Every query in every *.query.txt under dir (recursive), sorted by case id.
// Duplicate ids are an error.
std::vector<CorpusCase> build_corpus(const std::string& dir);

struct CorpusOutcome {
    bool ok = true;
    std::size_t cases_run = 0;
};

// Replays each case and checks every expectation. Prints one line per case;
// on the first failing case prints an expected/actual diff and stops.
CorpusOutcome run_corpus(const std::string& dir, std::ostream& os);

void list_corpus(const std::string& dir, std::ostream& os);

}  // namespace causalex
