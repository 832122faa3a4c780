#pragma once

#include <stdexcept>
#include <string>
#include <vector>

namespace regjm {

class Error : public std::runtime_error {
 public:
  using std::runtime_error::runtime_error;
};

/// Malformed text, out-of-range parameters, mismatched rings.
class InvalidInput : public Error {
 public:
  using Error::Error;
};

/// A non-homogeneous element reached a place that requires homogeneity.
class HomogeneityError : public Error {
 public:
  using Error::Error;
};

/// An invariant the engine relies on was broken (a bug, not bad input).
class InternalError : public Error {
 public:
  using Error::Error;
};

/// A computation ran past its wall-clock budget.
class BudgetExceeded : public Error {
 public:
  using Error::Error;
};

class HypothesisFailure : public Error {
 public:
  explicit HypothesisFailure(std::vector<std::string> clauses)
      : Error("hypothesis check failed: " + join(clauses)), clauses_(std::move(clauses)) {}
  const std::vector<std::string>& clauses() const { return clauses_; }

 private:
  static std::string join(const std::vector<std::string>& v) {
    std::string s;
    for (const auto& c : v) {
      if (!s.empty()) s += "; ";
      s += c;
    }
    return s;
  }
  std::vector<std::string> clauses_;
};

}  // namespace regjm
