#pragma once

#include <string>
#include <string_view>
#include <vector>

#include "qsym/algebra.hpp"

namespace qsym {

// poly  := term (('+'|'-') term)*      (an optional leading sign is accepted)
// term  := [coeff '*'] word | coeff
// coeff := int ['/' posint]
// word  := var ('*' var)*
// var   := 'u[' int ',' int ']'
Polynomial parse_polynomial(std::string_view text, Size n);
// A single word; "1" denotes the empty word.
Monomial parse_word(std::string_view text, Size n);
Coefficient parse_coefficient(std::string_view text);

std::string to_string(const Polynomial& p);
std::string to_string(const Monomial& w, Size n);
std::string to_string(const Coefficient& c);  // "p/q", or "p" when q = 1

// One polynomial per line; blank lines and '#' comments are skipped.
std::vector<Polynomial> parse_polynomial_list(std::string_view text, Size n);

}  // namespace qsym
