#pragma once

#include <stdexcept>

namespace altcount {

// Thrown when arithmetic that is guaranteed exact by the counting theory
// (divisions with zero remainder, integer-valued series coefficients) turns
// out not to be. Always indicates an implementation bug, never bad input.
class integrity_error : public std::logic_error {
public:
    using std::logic_error::logic_error;
};

// Thrown when an enumeration would exceed its configured budget.
class budget_error : public std::runtime_error {
public:
    using std::runtime_error::runtime_error;
};

} // namespace altcount
