#pragma once

#include <stdexcept>
#include <string>

namespace spbranch {

// Invalid user input or an argument outside an operation's stated domain.
class DomainError : public std::runtime_error {
  public:
    explicit DomainError(const std::string& what) : std::runtime_error(what) {}
};

// A tableau presented as sp-highest-weight fails the structural assumptions
// the deletion step relies on.
class MalformedHighestWeight : public DomainError {
  public:
    explicit MalformedHighestWeight(const std::string& what) : DomainError(what) {}
};

// An internal cross-check failed; indicates a bug, not bad input.
class InternalCheckError : public std::logic_error {
  public:
    explicit InternalCheckError(const std::string& what) : std::logic_error(what) {}
};

} // namespace spbranch
