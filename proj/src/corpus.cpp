#include "causalex/corpus.hpp"

#include <algorithm>
#include <filesystem>
#include <ostream>
#include <set>

#include "causalex/errors.hpp"
#include "causalex/query.hpp"

namespace causalex {

namespace fs = std::filesystem;

std::vector<CorpusCase> build_corpus(const std::string& dir) {
    if (!fs::is_directory(dir)) throw Error("corpus directory '" + dir + "' does not exist");

    std::vector<std::string> files;
    for (const auto& entry : fs::recursive_directory_iterator(dir)) {
        if (!entry.is_regular_file()) continue;
        std::string name = entry.path().filename().string();
        if (name.size() > 10 && name.substr(name.size() - 10) == ".query.txt")
            files.push_back(entry.path().string());
    }
    std::sort(files.begin(), files.end());

    std::vector<CorpusCase> cases;
    std::set<std::string> ids;
    for (const auto& file : files) {
        std::vector<QueryDocument> queries;
        try {
            queries = parse_queries(read_file(file));
        } catch (const ParseError& e) {
            throw InputError("in query file '" + file + "': " + e.what(), "query");
        }
        for (QueryDocument& q : queries) {
            if (!ids.insert(q.id).second) throw Error("duplicate corpus case id '" + q.id + "'");
            cases.push_back({file, fs::path(file).parent_path().string(), std::move(q)});
        }
    }
    std::sort(cases.begin(), cases.end(),
              [](const CorpusCase& a, const CorpusCase& b) { return a.query.id < b.query.id; });
    return cases;
}

CorpusOutcome run_corpus(const std::string& dir, std::ostream& os) {
    CorpusOutcome outcome;
    for (const CorpusCase& c : build_corpus(dir)) {
        ++outcome.cases_run;
        Json tree;
        try {
            tree = execute_query(c.query, c.dir);
        } catch (const std::exception& e) {
            os << "[fail] " << c.query.id << " (" << c.file << ")\n";
            os << "  query failed: " << e.what() << "\n";
            outcome.ok = false;
            return outcome;
        }
        std::vector<std::string> diffs;
        for (const auto& [pointer, expected] : c.query.expect) {
            Json::json_pointer ptr;
            try {
                ptr = Json::json_pointer(pointer);
            } catch (const std::exception&) {
                diffs.push_back("  bad JSON pointer '" + pointer + "'");
                continue;
            }
            bool present = tree.contains(ptr);
            if (expected.is_null()) {  // the 'absent' marker
                if (present)
                    diffs.push_back("  at " + pointer + "\n    expected: <absent>\n    actual:   " +
                                    tree.at(ptr).dump());
                continue;
            }
            if (!present) {
                diffs.push_back("  at " + pointer + "\n    expected: " + expected.dump() +
                                "\n    actual:   <absent>");
                continue;
            }
            const Json& actual = tree.at(ptr);
            if (actual != expected)
                diffs.push_back("  at " + pointer + "\n    expected: " + expected.dump() +
                                "\n    actual:   " + actual.dump());
        }
        if (!diffs.empty()) {
            os << "[fail] " << c.query.id << " (" << c.file << ")\n";
            for (const auto& d : diffs) os << d << "\n";
            outcome.ok = false;
            return outcome;
        }
        os << "[ok] " << c.query.id << "\n";
    }
    return outcome;
}

void list_corpus(const std::string& dir, std::ostream& os) {
    for (const CorpusCase& c : build_corpus(dir)) {
        os << c.query.id << "  (" << c.query.kind << ")\n";
        for (const auto& note : c.query.notes) os << "    " << note << "\n";
    }
}

}  // namespace causalex
