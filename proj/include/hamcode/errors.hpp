#pragma once

#include <stdexcept>
#include <string>

namespace hamcode {

// Thrown when an operation would exceed its configured work budget
// (search node limits, code enumeration limits).  Callers that want
// best-effort behaviour catch this; nothing partial is returned.
struct BudgetError : std::runtime_error {
  explicit BudgetError(const std::string& what) : std::runtime_error(what) {}
};

}  // namespace hamcode
