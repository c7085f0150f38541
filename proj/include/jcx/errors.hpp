#ifndef JCX_ERRORS_HPP_
#define JCX_ERRORS_HPP_

#include <stdexcept>
#include <string>

namespace jcx {

/// Argument outside the mathematical domain of an operation.
class DomainError : public std::domain_error {
 public:
  using std::domain_error::domain_error;
};

/// A result exists but is not representable as a finite double.
class OverflowError : public std::overflow_error {
 public:
  using std::overflow_error::overflow_error;
};

/// An integrand returned a non-finite value at a quadrature node.
class EvaluationError : public std::runtime_error {
 public:
  EvaluationError(const std::string& what, double node)
      : std::runtime_error(what), node_(node) {}
  double node() const noexcept { return node_; }

 private:
  double node_;
};

/// Adaptive integration ran out of levels or evaluations.
class BudgetError : public std::runtime_error {
 public:
  BudgetError(const std::string& what, double best_estimate, double error_estimate)
      : std::runtime_error(what), best_(best_estimate), error_(error_estimate) {}
  double best_estimate() const noexcept { return best_; }
  double error_estimate() const noexcept { return error_; }

 private:
  double best_;
  double error_;
};

/// Parameters fall outside every applicability class of a formula.
class UnsupportedClassError : public std::domain_error {
 public:
  UnsupportedClassError(const std::string& what, std::string predicate)
      : std::domain_error(what), predicate_(std::move(predicate)) {}
  const std::string& predicate() const noexcept { return predicate_; }

 private:
  std::string predicate_;
};

}  // namespace jcx

#endif  // JCX_ERRORS_HPP_
