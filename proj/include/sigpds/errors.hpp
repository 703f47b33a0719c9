#ifndef SIGPDS_ERRORS_HPP
#define SIGPDS_ERRORS_HPP

#include <cstddef>
#include <stdexcept>
#include <string>

namespace sigpds {

/// A caller broke a documented precondition of the algebra or of an instance.
class ContractViolation : public std::logic_error {
 public:
  explicit ContractViolation(const std::string& what) : std::logic_error(what) {}
};

/// A configurable cap was exceeded (closure too large, enumeration too deep).
class CapExceeded : public std::runtime_error {
 public:
  CapExceeded(std::string cap_name, std::size_t reached)
      : std::runtime_error("cap '" + cap_name + "' exceeded at size " + std::to_string(reached)),
        cap(std::move(cap_name)),
        size(reached) {}
  std::string cap;
  std::size_t size;
};

/// Saturation exceeded its edge-update budget; names the last-grown edge so a
/// violated boundedness assumption is diagnosable.
class StepBudgetExceeded : public std::runtime_error {
 public:
  StepBudgetExceeded(std::size_t budget, std::string edge)
      : std::runtime_error("saturation step budget " + std::to_string(budget) +
                           " exceeded; last grown edge: " + edge),
        last_edge(std::move(edge)) {}
  std::string last_edge;
};

class ParseError : public std::runtime_error {
 public:
  ParseError(std::size_t line, const std::string& expectation)
      : std::runtime_error("parse error at line " + std::to_string(line) + ": " + expectation),
        line_no(line) {}
  std::size_t line_no;
};

}  // namespace sigpds

#endif
