#pragma once

#include <stdexcept>
#include <string>

namespace nucpre {

// Tables with the wrong shape, ids out of range, unparsable input.
struct StructuralError : std::runtime_error {
  using std::runtime_error::runtime_error;
};

struct NotIdeallyResiduated : std::runtime_error {
  using std::runtime_error::runtime_error;
};

struct NotIntegrallyClosed : std::runtime_error {
  using std::runtime_error::runtime_error;
};

struct NotDownDirected : std::runtime_error {
  using std::runtime_error::runtime_error;
};

// A word product or meet candidate would leave the length budget.
struct BudgetExceeded : std::runtime_error {
  using std::runtime_error::runtime_error;
};

struct NoPositiveBound : std::runtime_error {
  using std::runtime_error::runtime_error;
};

struct SignatureMismatch : std::runtime_error {
  using std::runtime_error::runtime_error;
};

struct ResidualAbsent : std::runtime_error {
  using std::runtime_error::runtime_error;
};

}  // namespace nucpre
