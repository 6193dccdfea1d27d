#ifndef CSUSY_ERRORS_HPP
#define CSUSY_ERRORS_HPP

#include <stdexcept>
#include <string>
#include <utility>
#include <vector>

namespace csusy {

/// The Wronskian (or another denominator) vanishes somewhere on the grid.
/// Carries the bracketing intervals of the detected sign changes.
class SingularityError : public std::runtime_error {
 public:
  SingularityError(std::string what, std::vector<std::pair<double, double>> brackets)
      : std::runtime_error(std::move(what)), brackets_(std::move(brackets)) {}
  const std::vector<std::pair<double, double>>& brackets() const { return brackets_; }

 private:
  std::vector<std::pair<double, double>> brackets_;
};

/// An initial-value sweep overflowed; carries the abscissa where it happened.
class BlowUpError : public std::runtime_error {
 public:
  BlowUpError(std::string what, double x) : std::runtime_error(std::move(what)), x_(x) {}
  double where() const { return x_; }

 private:
  double x_;
};

/// A function failed the endpoint-decay test required for L2 normalization.
class NotSquareIntegrableError : public std::runtime_error {
 public:
  using std::runtime_error::runtime_error;
};

/// A numerical construction missed its accuracy target.
class AccuracyError : public std::runtime_error {
 public:
  using std::runtime_error::runtime_error;
};

}  // namespace csusy

#endif
