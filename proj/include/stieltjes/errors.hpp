#pragma once

#include <stdexcept>

namespace stieltjes {

// Reciprocal of a series whose constant term vanishes.
struct ZeroConstantTerm : std::domain_error {
  using std::domain_error::domain_error;
};

// The moment prefix admits no continued-fraction expansion in standard form
// (a0 < 0, a0 = 0 with a later nonzero moment, or a vanishing coefficient
// followed by a nonzero residual).
struct NotSFracRepresentable : std::domain_error {
  using std::domain_error::domain_error;
};

// A coefficient sequence handed to the expansion map contains a negative entry.
struct NegativeG : std::domain_error {
  using std::domain_error::domain_error;
};

// A continued fraction violating the standard-form invariant (a zero
// coefficient must be followed only by zeros, with the terminated flag set).
struct NonStandardInput : std::invalid_argument {
  using std::invalid_argument::invalid_argument;
};

// The two independent certification routes disagreed.  This indicates a bug,
// not bad input; it is never thrown for any consistent moment prefix.
struct RouteMismatch : std::logic_error {
  using std::logic_error::logic_error;
};

// Feasibility search requested on a prefix whose base point is infeasible.
struct InfeasibleBase : std::invalid_argument {
  using std::invalid_argument::invalid_argument;
};

// Feasibility search requested on a prefix that constrains nothing, so the
// supremum does not exist.
struct UnboundedFeasibleSet : std::domain_error {
  using std::domain_error::domain_error;
};

}  // namespace stieltjes
