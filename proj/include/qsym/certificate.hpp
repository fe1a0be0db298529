#pragma once

#include <string>
#include <string_view>

#include "qsym/groebner.hpp"

namespace qsym {

// Text form:
//
//   qsym-certificate 1
//   n: 4
//   target: u[1,1] + u[1,2] - 1
//   summands: 2
//   summand: 1/1 | 1 | 3 | u[2,2]
//   summand: -1/2 | u[1,1] | 0 | 1
//
// Coefficients are always written "p/q"; words use the polynomial grammar,
// "1" is the empty word. Parsing a printed certificate and printing it again
// reproduces the same bytes.
std::string to_string(const GroebnerCertificate& c);
GroebnerCertificate parse_certificate(std::string_view text);

}  // namespace qsym
