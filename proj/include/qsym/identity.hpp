#pragma once

#include <optional>
#include <utility>
#include <string>
#include <string_view>
#include <vector>

#include "qsym/algebra.hpp"
#include "qsym/param.hpp"

namespace qsym::param {

// One summand c(n) * P. Arity 0 marks a constant term whose value is
// c(n) times the number of tuples satisfying P (P may have its own arity).
struct IdentityTerm {
  bool lhs = true;
  int arity = 0;
  ParamPoly coeff;
  Conjunction pred;
  std::string label;
};

struct IdentityFamily {
  int arity = 0;
  std::vector<std::vector<Conjunction>> per_coordinate;
  PredicateFamily members() const { return product_family(per_coordinate); }
};

struct ParametricIdentity {
  std::string name;
  int sample_lo = 4;
  int sample_hi = 8;
  std::vector<IdentityFamily> families;  // one per positive arity
  std::vector<IdentityTerm> terms;

  const IdentityFamily* family(int arity) const;
  std::vector<int> arities() const;  // sorted, including 0 when present
  Element side(bool lhs, int arity) const;
};

// Line format ('#' starts a comment):
//   identity NAME
//   samples LO..HI
//   family K | alt ; alt ; ... | ...          (K groups, one per coordinate)
//   lhs|rhs K | COEFF | CONJUNCTION [| LABEL]
ParametricIdentity parse_identity(std::string_view text);
// "LO..HI" with 1 <= LO <= HI <= 255.
std::pair<int, int> parse_sample_range(std::string_view s);
ParametricIdentity load_identity(const std::string& path);

struct GradeCheck {
  int arity = 0;
  std::size_t declared_members = 0;
  std::size_t distinct_members = 0;
  std::size_t rank = 0;
  int test_size = 0;
  bool declared_independent = false;
  bool matched = false;
  std::vector<std::string> mismatches;
};

struct SampleCheck {
  int n = 0;
  bool expansion_zero = false;
  bool expansion_matches_bruteforce = false;
  bool counts_match = false;
};

struct IdentityReport {
  std::string name;
  std::vector<GradeCheck> grades;  // positive arities
  bool has_constant_grade = false;
  ParamPoly constant_lhs;
  ParamPoly constant_rhs;
  std::vector<SampleCheck> samples;
  bool passed() const;
};

// Compares both sides per grade in Z[n] over the distinct-indicator part of
// the declared family, the constant grade symbolically, and the expansions at
// every sampled n.
IdentityReport verify_parametric_identity(const ParametricIdentity& id, std::optional<std::pair<int, int>> samples = {});
std::string to_string(const IdentityReport& r);

// Expansion at n of the terms carrying `label` (all terms when empty), signed
// as written on their side.
Polynomial expand_terms(const ParametricIdentity& id, Size n, std::string_view label = {});

}  // namespace qsym::param
