#include <iostream>
#include <string>
#include <vector>

#include <CLI11.hpp>

#include "causalex/corpus.hpp"
#include "causalex/errors.hpp"
#include "causalex/query.hpp"

namespace {

using causalex::QueryDocument;

const char* grammar_excerpt(const std::string& kind) {
    if (kind == "model")
        return "model grammar:\n"
               "  model <id> { exo <name> : {v1, ..., vn}\n"
               "               endo <name> : {v1, ..., vn} = <expr> ... }\n"
               "  expr: values, variables, min/max/and/or/not(...), if c then a else b,\n"
               "        + - *, comparisons = != < <=, parentheses";
    if (kind == "formula")
        return "formula grammar:\n"
               "  [X1 <- v1, X2 <- v2] body   (prefix optional)\n"
               "  body: X = v, true, false, !f, f & g, f | g, f -> g, parentheses\n"
               "  precedence: ! > & > | > ->";
    if (kind == "context")
        return "assignment grammar:\n"
               "  X1 = v1, X2 = v2, ...";
    if (kind == "state")
        return "state grammar:\n"
               "  state <id> { setting <model-id> { U1 = v1, ... } pr <p>/<q> ... }";
    return "query grammar:\n"
           "  query <id> { kind \"...\" models \"file\" state \"file\" model <id>\n"
           "               context { ... } phi \"...\" x \"...\" x2 \"...\" contrast \"...\"\n"
           "               max_size N ex1b_conditional true|false note \"...\"\n"
           "               expect { \"/json/pointer\" value ... } }";
}

int run_query(const QueryDocument& q, const std::string& format) {
    causalex::Json tree = causalex::execute_query(q, "");
    auto fmt = format == "tree" ? causalex::ReportFormat::Tree : causalex::ReportFormat::Table;
    std::cout << causalex::emit_report(tree, fmt);
    return 0;
}

}  // namespace

int main(int argc, char** argv) {
    CLI::App app{"Actual causality and explanation engine for finite acyclic causal models"};
    app.require_subcommand(1);

    std::string format = "table";
    std::vector<std::string> model_files;
    std::string model_id, context_text, state_file, phi_text, x_text, x2_text, contrast_text;
    std::int64_t max_size = 0;
    bool ex1b_conditional = false;

    auto add_format = [&](CLI::App* cmd) {
        cmd->add_option("--format", format, "Output format")->check(CLI::IsMember({"table", "tree"}));
    };
    auto add_model_opts = [&](CLI::App* cmd) {
        cmd->add_option("--model", model_files, "Model document (repeatable)")->required();
        cmd->add_option("--model-id", model_id, "Which model to use (default: the only one loaded)");
        cmd->add_option("--context", context_text, "Exogenous assignment, e.g. \"UL=1,UMD=0\"")->required();
    };
    auto add_state_opts = [&](CLI::App* cmd) {
        cmd->add_option("--state", state_file, "Epistemic state document")->required();
        cmd->add_option("--model", model_files, "Model document (repeatable)")->required();
    };

    // validate <model-file>
    std::string validate_file;
    CLI::App* validate = app.add_subcommand("validate", "Check a model document");
    validate->add_option("model-file", validate_file, "Model document")->required();
    add_format(validate);

    // solve <model-file> <model-id> <context>
    std::string solve_file, solve_id, solve_ctx;
    CLI::App* solve = app.add_subcommand("solve", "Solve a model in a context");
    solve->add_option("model-file", solve_file)->required();
    solve->add_option("model-id", solve_id)->required();
    solve->add_option("context", solve_ctx, "e.g. \"UL=0,UMD=0\"")->required();
    add_format(solve);

    CLI::App* check_cause = app.add_subcommand("check-cause", "Test a candidate actual cause");
    add_model_opts(check_cause);
    check_cause->add_option("--phi", phi_text, "Explanandum formula")->required();
    check_cause->add_option("--x", x_text, "Candidate conjunction, e.g. \"L=1 & MD=1\"")->required();
    check_cause->add_option("--contrast", contrast_text, "Alternate values, e.g. \"L=0,MD=0\"");
    add_format(check_cause);

    CLI::App* find_causes = app.add_subcommand("find-causes", "Enumerate actual causes");
    add_model_opts(find_causes);
    find_causes->add_option("--phi", phi_text)->required();
    find_causes->add_option("--max-size", max_size, "Largest conjunction size");
    add_format(find_causes);

    CLI::App* check_expl = app.add_subcommand("check-explanation", "Test a candidate explanation");
    add_state_opts(check_expl);
    check_expl->add_option("--phi", phi_text)->required();
    check_expl->add_option("--x", x_text)->required();
    add_format(check_expl);

    CLI::App* find_expl = app.add_subcommand("find-explanations", "Enumerate explanations");
    add_state_opts(find_expl);
    find_expl->add_option("--phi", phi_text)->required();
    find_expl->add_option("--max-size", max_size);
    add_format(find_expl);

    CLI::App* score = app.add_subcommand("score", "Partial-explanation and prior scores");
    add_state_opts(score);
    score->add_option("--phi", phi_text)->required();
    score->add_option("--x", x_text)->required();
    score->add_flag("--ex1b-conditional", ex1b_conditional, "Condition the EX1(b) score on phi");
    add_format(score);

    CLI::App* compare = app.add_subcommand("compare", "Compare two explanations per criterion");
    add_state_opts(compare);
    compare->add_option("--phi", phi_text)->required();
    compare->add_option("--x", x_text)->required();
    compare->add_option("--x2", x2_text)->required();
    compare->add_flag("--ex1b-conditional", ex1b_conditional);
    add_format(compare);

    std::string corpus_dir = "corpus";
    CLI::App* corpus = app.add_subcommand("corpus", "Bundled case corpus");
    corpus->require_subcommand(1);
    CLI::App* corpus_run = corpus->add_subcommand("run", "Replay every case against its expectations");
    corpus_run->add_option("--dir", corpus_dir, "Corpus directory");
    CLI::App* corpus_list = corpus->add_subcommand("list", "List case ids and notes");
    corpus_list->add_option("--dir", corpus_dir);

    try {
        app.parse(argc, argv);
    } catch (const CLI::ParseError& e) {
        int code = app.exit(e);
        return code == 0 ? 0 : 1;
    }

    try {
        QueryDocument q;
        q.model_files = model_files;
        if (!model_id.empty()) q.model_id = model_id;
        if (!context_text.empty()) q.context = causalex::parse_assignments(context_text);
        if (!state_file.empty()) q.state_file = state_file;
        if (!phi_text.empty()) q.phi = phi_text;
        if (!x_text.empty()) q.x = x_text;
        if (!x2_text.empty()) q.x2 = x2_text;
        if (!contrast_text.empty()) q.contrast = contrast_text;
        if (max_size > 0) q.max_size = max_size;
        q.ex1b_conditional = ex1b_conditional;

        if (validate->parsed()) {
            q.kind = "validate";
            q.model_files = {validate_file};
            return run_query(q, format);
        }
        if (solve->parsed()) {
            q.kind = "solve";
            q.model_files = {solve_file};
            q.model_id = solve_id;
            q.context = causalex::parse_assignments(solve_ctx);
            return run_query(q, format);
        }
        if (check_cause->parsed()) {
            q.kind = "check-cause";
            return run_query(q, format);
        }
        if (find_causes->parsed()) {
            q.kind = "find-causes";
            return run_query(q, format);
        }
        if (check_expl->parsed()) {
            q.kind = "check-explanation";
            return run_query(q, format);
        }
        if (find_expl->parsed()) {
            q.kind = "find-explanations";
            return run_query(q, format);
        }
        if (score->parsed()) {
            q.kind = "score";
            return run_query(q, format);
        }
        if (compare->parsed()) {
            q.kind = "compare";
            return run_query(q, format);
        }
        if (corpus->parsed()) {
            if (corpus_list->parsed()) {
                causalex::list_corpus(corpus_dir, std::cout);
                return 0;
            }
            causalex::CorpusOutcome outcome = causalex::run_corpus(corpus_dir, std::cout);
            std::cout << (outcome.ok ? "corpus ok (" : "corpus FAILED (") << outcome.cases_run
                      << " case(s) run)\n";
            return outcome.ok ? 0 : 1;
        }
        return 1;
    } catch (const causalex::InputError& e) {
        std::cerr << "error: " << e.what() << "\n" << grammar_excerpt(e.grammar) << "\n";
        return 1;
    } catch (const causalex::ParseError& e) {
        std::cerr << "error: " << e.what() << "\n";
        return 1;
    } catch (const causalex::Error& e) {
        std::cerr << "error: " << e.what() << "\n";
        return 1;
    } catch (const std::exception& e) {
        std::cerr << "internal error: " << e.what() << "\n";
        return 2;
    }
}
