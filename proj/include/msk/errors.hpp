#ifndef MSK_ERRORS_HPP
#define MSK_ERRORS_HPP

#include <stdexcept>
#include <string>

namespace msk {

struct error : std::runtime_error {
  using std::runtime_error::runtime_error;
};

// Mismatched ambient dimensions, variances or charts.
struct structural_error : error {
  using error::error;
};

// Out-of-range or otherwise malformed arguments.
struct argument_error : error {
  using error::error;
};

// A stated mathematical precondition does not hold for the given data.
struct precondition_error : error {
  using error::error;
};

// Scenario or polynomial text that does not parse or validate.
struct parse_error : error {
  using error::error;
};

}  // namespace msk

#endif
