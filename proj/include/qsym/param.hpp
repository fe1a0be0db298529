#pragma once

#include <compare>
#include <cstddef>
#include <functional>
#include <map>
#include <optional>
#include <span>
#include <string>
#include <string_view>
#include <vector>

#include <gmpxx.h>

#include "qsym/algebra.hpp"

namespace qsym::param {

// Univariate integer polynomial in the size parameter n.
class ParamPoly {
 public:
  ParamPoly() = default;
  ParamPoly(long c);  // NOLINT: constants convert implicitly
  explicit ParamPoly(std::vector<mpz_class> coeffs);  // coeffs[i] multiplies n^i
  static ParamPoly n();

  bool is_zero() const noexcept { return c_.empty(); }
  int degree() const noexcept { return static_cast<int>(c_.size()) - 1; }
  const std::vector<mpz_class>& coefficients() const noexcept { return c_; }
  mpz_class evaluate(long n) const;

  ParamPoly& operator+=(const ParamPoly& o);
  ParamPoly& operator-=(const ParamPoly& o);
  friend ParamPoly operator+(ParamPoly a, const ParamPoly& b) { return a += b; }
  friend ParamPoly operator-(ParamPoly a, const ParamPoly& b) { return a -= b; }
  friend ParamPoly operator-(const ParamPoly& a) { return ParamPoly() - a; }
  friend ParamPoly operator*(const ParamPoly& a, const ParamPoly& b);
  friend bool operator==(const ParamPoly& a, const ParamPoly& b) { return a.c_ == b.c_; }

 private:
  void trim();
  std::vector<mpz_class> c_;
};

std::string to_string(const ParamPoly& p);
// expr := term (('+'|'-') term)* ; term := factor ('*' factor)* ;
// factor := int | 'n' ['^' int] | '(' expr ')'
ParamPoly parse_param_poly(std::string_view text);

enum class AtomKind { eq_const, ge_const, neq_coord };

// Coordinates are 1-based. For neq_coord, `value` is the other coordinate and
// coord > value after normalization.
struct Atom {
  AtomKind kind;
  int coord;
  int value;

  bool holds(std::span<const int> x) const;
  friend auto operator<=>(const Atom&, const Atom&) = default;
};

Atom eq(int coord, int c);
Atom ge(int coord, int c);
Atom neq(int coord, int other);

class Conjunction {
 public:
  Conjunction() = default;
  Conjunction(int arity, std::vector<Atom> atoms);

  int arity() const noexcept { return arity_; }
  const std::vector<Atom>& atoms() const noexcept { return atoms_; }
  bool holds(std::span<const int> x) const;
  int max_constant() const;
  Conjunction operator&(const Conjunction& o) const;

  friend auto operator<=>(const Conjunction&, const Conjunction&) = default;
  friend bool operator==(const Conjunction&, const Conjunction&) = default;

 private:
  int arity_ = 0;
  std::vector<Atom> atoms_;  // sorted, unique
};

std::string to_string(const Atom& a);
std::string to_string(const Conjunction& c);  // "i1=2 & i3!=i1", "true" when empty
// Atoms separated by '&'; arity < 0 infers the largest coordinate mentioned.
Conjunction parse_conjunction(std::string_view text, int arity = -1);

// Formal Z[n]-combination of conjunctions of a fixed arity.
class Element {
 public:
  explicit Element(int arity = 0) : arity_(arity) {}

  int arity() const noexcept { return arity_; }
  const std::map<Conjunction, ParamPoly>& terms() const noexcept { return terms_; }
  bool is_zero() const noexcept { return terms_.empty(); }
  void add(const Conjunction& c, const ParamPoly& coeff);

  Element& operator+=(const Element& o);
  Element& operator-=(const Element& o);
  friend Element operator+(Element a, const Element& b) { return a += b; }
  friend Element operator-(Element a, const Element& b) { return a -= b; }
  friend Element operator*(const ParamPoly& s, const Element& e);
  friend bool operator==(const Element&, const Element&) = default;

 private:
  int arity_;
  std::map<Conjunction, ParamPoly> terms_;
};

using PredicateFamily = std::vector<Conjunction>;

// All conjunctions p1 & ... & pk with p_i drawn from per_coordinate[i].
PredicateFamily product_family(const std::vector<std::vector<Conjunction>>& per_coordinate);

int max_constant(const PredicateFamily& family);
// Smallest admissible test size: max constant + arity + 2.
int min_test_size(const PredicateFamily& family, int arity);

// Indicator matrix of a family over [N]^k, compressed to distinct rows.
class IndicatorSpace {
 public:
  IndicatorSpace(PredicateFamily family, int arity, int N);

  int arity() const noexcept { return arity_; }
  int test_size() const noexcept { return N_; }
  const PredicateFamily& family() const noexcept { return family_; }
  std::size_t rank() const noexcept { return rank_; }
  bool independent() const noexcept { return rank_ == family_.size(); }
  // Pairs (i, j), i < j, of members with identical indicator vectors.
  const std::vector<std::pair<std::size_t, std::size_t>>& duplicates() const noexcept { return duplicates_; }
  // First member of each distinct indicator, in family order.
  PredicateFamily distinct_members() const;

  // Integer combination of family members with the same indicator as pred on
  // [N]^k. Requires independence; throws NotRepresentable otherwise.
  std::vector<Element> decompose(const std::vector<std::function<bool(std::span<const int>)>>& preds) const;
  Element decompose(const std::function<bool(std::span<const int>)>& pred) const;

 private:
  PredicateFamily family_;
  int arity_;
  int N_;
  std::vector<std::vector<std::uint32_t>> rows_;  // members true on each distinct row
  std::vector<std::uint32_t> point_row_;           // row id of every point of the cube
  std::size_t rank_ = 0;
  std::vector<std::pair<std::size_t, std::size_t>> duplicates_;
};

bool check_independence(const PredicateFamily& family, int arity, int N);

// Per-coordinate interval [lo, hi] (hi absent = n) plus inequality links.
struct RangeSpec {
  struct Bound {
    int lo = 1;
    std::optional<int> hi;
  };
  std::vector<Bound> coords;
  std::vector<std::pair<int, int>> neq;  // 1-based coordinate pairs

  int arity() const noexcept { return static_cast<int>(coords.size()); }
  bool holds(std::span<const int> x) const;
  // lo <= hi for every n >= valid_from().
  int valid_from() const;
};

Element decompose(const RangeSpec& r, const PredicateFamily& family, int N);

struct Count {
  ParamPoly value;
  int valid_from;
};

// |{x in [n]^k : p(x)}| as a polynomial in n, by inclusion-exclusion over the
// inequality links.
Count count_satisfying(const Conjunction& p);
mpz_class count_bruteforce(const Conjunction& p, int n);

// Sum over satisfying tuples of c(n) * u_{x1 x2} u_{x3 x4} ...
Polynomial phi_expand(const Element& e, Size n);
// Same map by scanning all of [n]^k.
Polynomial phi_expand_bruteforce(const Element& e, Size n);

}  // namespace qsym::param
