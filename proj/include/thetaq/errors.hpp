#pragma once

#include <stdexcept>
#include <string>

namespace thetaq {

/// Argument outside the mathematical domain of an operation.
class DomainError : public std::domain_error {
 public:
  using std::domain_error::domain_error;
};

/// A search (relation, polynomial, rational) finished without a certified hit.
class NotFound : public std::runtime_error {
 public:
  using std::runtime_error::runtime_error;
};

/// A mined relation failed its post-hoc series or numeric check.
class ValidationFailed : public std::runtime_error {
 public:
  using std::runtime_error::runtime_error;
};

/// A computed quantity failed its own certificate (e.g. k_r substituted back).
class ConsistencyError : public std::runtime_error {
 public:
  using std::runtime_error::runtime_error;
};

}  // namespace thetaq
