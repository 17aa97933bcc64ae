#pragma once

#include <compare>
#include <cstdint>
#include <map>
#include <string>
#include <variant>

namespace causalex {

// One element of a variable's range: an integer or a symbolic token.
// Integer tokens carry their numeric interpretation; symbols only compare
// for equality. Cross-kind equality is false, never an error.
class Value {
public:
    Value() : v_(std::int64_t{0}) {}
    explicit Value(std::int64_t n) : v_(n) {}
    explicit Value(std::string s) : v_(std::move(s)) {}

    bool is_int() const { return std::holds_alternative<std::int64_t>(v_); }
    std::int64_t as_int() const { return std::get<std::int64_t>(v_); }
    const std::string& as_symbol() const { return std::get<std::string>(v_); }

    // Token spelling, as it appears in documents and reports.
    std::string str() const { return is_int() ? std::to_string(as_int()) : as_symbol(); }

    friend bool operator==(const Value&, const Value&) = default;
    friend std::strong_ordering operator<=>(const Value&, const Value&) = default;

private:
    std::variant<std::int64_t, std::string> v_;
};

// Total or partial map from variable names to values. Ordered so every
// iteration over it is deterministic.
using Assignment = std::map<std::string, Value>;

}  // namespace causalex
