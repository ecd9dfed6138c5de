#ifndef MSK_POLY_PARSER_HPP
#define MSK_POLY_PARSER_HPP

#include <string>
#include <vector>

#include "msk/polynomial.hpp"

namespace msk {

// Parses the scenario polynomial grammar:
//
//   poly     := [sign] term { sign term }
//   term     := factor { '*' factor }
//   factor   := rational | ident [ '^' uint ]
//   rational := uint [ '/' uint ]
//   ident    := (letter | '_') (letter | digit | '_')*
//
// e.g. "3/2*x1^2*p12 - x2". Unknown identifiers and syntax errors raise
// parse_error with the offending column.
Polynomial parse_polynomial(const std::string& text,
                            const std::vector<std::string>& variables);

}  // namespace msk

#endif
