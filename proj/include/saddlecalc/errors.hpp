#ifndef SADDLECALC_ERRORS_HPP
#define SADDLECALC_ERRORS_HPP

#include <stdexcept>
#include <string>

namespace saddlecalc {

// Malformed input: mismatched dimensions, empty generator lists,
// non-finite coordinates.
class DimensionMismatch : public std::invalid_argument {
 public:
  explicit DimensionMismatch(const std::string& what)
      : std::invalid_argument(what) {}
};

// The arithmetic gave up: cycling guard exceeded, a singular system that
// regularization could not rescue, or a solution that fails its own
// post-check.
class NumericalFailure : public std::runtime_error {
 public:
  explicit NumericalFailure(const std::string& what)
      : std::runtime_error(what) {}
};

}  // namespace saddlecalc

#endif  // SADDLECALC_ERRORS_HPP
