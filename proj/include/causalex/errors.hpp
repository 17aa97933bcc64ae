#pragma once

#include <stdexcept>
#include <string>

namespace causalex {

struct Error : std::runtime_error {
    using std::runtime_error::runtime_error;
};

// Ill-typed input: unknown variable, value outside its range, duplicate
// intervention target, and the like.
struct TypeError : Error {
    using Error::Error;
};

// Expression evaluation failure (arithmetic on a symbolic token, wrong arity).
struct EvalError : Error {
    using Error::Error;
};

// Operation invoked on a model whose validation report is non-empty.
struct InvalidModelError : Error {
    using Error::Error;
};

// Bad probabilities, conditioning on a zero-probability event, empty inputs.
struct DomainError : Error {
    using Error::Error;
};

struct OverflowError : Error {
    using Error::Error;
};

// Carries a 1-based source position. what() already includes it.
struct ParseError : Error {
    int line;
    int column;

    ParseError(const std::string& message, int line_, int column_)
        : Error(std::to_string(line_) + ":" + std::to_string(column_) + ": " + message),
          line(line_),
          column(column_) {}
};

// A ParseError annotated with which input failed and which grammar applies
// ("model", "formula", "context", "state" or "query"), so the CLI can print
// the right grammar excerpt.
struct InputError : Error {
    std::string grammar;

    InputError(const std::string& message, std::string grammar_)
        : Error(message), grammar(std::move(grammar_)) {}
};

}  // namespace causalex
