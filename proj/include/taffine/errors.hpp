#pragma once

#include <stdexcept>
#include <string>

namespace taffine {

/// Input that violates an operation's precondition (bad literal, dimension
/// mismatch, non-root, family/parameter mismatch).
class InvalidInput : public std::invalid_argument {
public:
    explicit InvalidInput(const std::string& what) : std::invalid_argument(what) {}
};

/// A bounded search ran out of room before it could decide the question.
class Indeterminate : public std::runtime_error {
public:
    explicit Indeterminate(const std::string& what) : std::runtime_error(what) {}
};

/// An exhaustive search over a finite window found no witness.
class NotFound : public std::runtime_error {
public:
    explicit NotFound(const std::string& what) : std::runtime_error(what) {}
};

/// Three-valued outcome of bounded decision procedures.
enum class Decision { no, yes, unknown };

inline Decision decide(bool b) { return b ? Decision::yes : Decision::no; }

}  // namespace taffine
