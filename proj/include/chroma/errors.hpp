#pragma once

#include <stdexcept>
#include <string>

namespace chroma {

// Precondition violated by the caller (bad k, d outside an interval, invalid polygon, ...).
class DomainError : public std::domain_error {
public:
    using std::domain_error::domain_error;
};

// A graph could not be built, e.g. a vertex pair sits in the ambiguous shell
// around an interval boundary.
class ConstructionError : public std::runtime_error {
public:
    using std::runtime_error::runtime_error;
};

// Malformed interchange document. `line` is 1-based, 0 when unknown.
class ParseError : public std::runtime_error {
public:
    ParseError(const std::string& field, std::size_t line, const std::string& what)
        : std::runtime_error(format(field, line, what)), field_(field), line_(line) {}

    const std::string& field() const noexcept { return field_; }
    std::size_t line() const noexcept { return line_; }

private:
    static std::string format(const std::string& field, std::size_t line, const std::string& what) {
        std::string msg = "parse error";
        if (line != 0) msg += " at line " + std::to_string(line);
        if (!field.empty()) msg += " in field '" + field + "'";
        return msg + ": " + what;
    }

    std::string field_;
    std::size_t line_;
};

// Structurally valid input that fails a semantic check (edge set does not
// match the geometry, improper coloring, ...).
class ValidationError : public std::runtime_error {
public:
    using std::runtime_error::runtime_error;
};

// chromatic_number ran out of colors before finding a feasible k.
class SearchExhausted : public std::runtime_error {
public:
    using std::runtime_error::runtime_error;
};

// Enumeration refused because the search space exceeds the guard.
class SearchRefused : public std::runtime_error {
public:
    using std::runtime_error::runtime_error;
};

// A proof script step is not justified by the state it is applied to.
class ScriptValidationError : public std::runtime_error {
public:
    ScriptValidationError(std::size_t step, const std::string& what)
        : std::runtime_error("step " + std::to_string(step) + ": " + what), step_(step) {}

    std::size_t step() const noexcept { return step_; }

private:
    std::size_t step_;
};

// A rule was invoked before the lemma it depends on was established.
class LemmaGateError : public std::logic_error {
public:
    using std::logic_error::logic_error;
};

// Two independent derivations of the same fact disagree.
class InternalConsistencyError : public std::logic_error {
public:
    using std::logic_error::logic_error;
};

// Tiling sweep radius too small to certify the minimum.
class RadiusError : public std::runtime_error {
public:
    using std::runtime_error::runtime_error;
};

}  // namespace chroma
