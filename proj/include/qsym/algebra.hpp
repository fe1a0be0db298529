#pragma once

#include <compare>
#include <cstddef>
#include <cstdint>
#include <initializer_list>
#include <optional>
#include <span>
#include <vector>

#include <boost/container/small_vector.hpp>
#include <gmpxx.h>

#include "qsym/error.hpp"

namespace qsym {

// Matrix dimension n of the magic unitary u = (u_ij).
class Size {
 public:
  static constexpr int kMax = 255;  // ranks must fit a 16-bit letter

  explicit Size(int n);
  int value() const noexcept { return n_; }
  int variable_count() const noexcept { return n_ * n_; }
  friend bool operator==(Size, Size) = default;

 private:
  int n_;
};

void require_same_size(Size a, Size b);

// A letter is a variable rank (row-1)*n + col in [1, n^2].
using Letter = std::uint16_t;

struct Variable {
  int row;
  int col;

  Letter rank(Size n) const;
  static Variable from_rank(Letter rank, Size n);
  Variable transposed() const noexcept { return {col, row}; }
  friend bool operator==(const Variable&, const Variable&) = default;
};

// Word over the variables. Ordered by the graded order: longer is greater,
// equal lengths compare position-wise and the lower rank wins.
class Monomial {
 public:
  using Letters = boost::container::small_vector<Letter, 6>;

  Monomial() = default;
  explicit Monomial(Letters letters) : letters_(std::move(letters)) {}
  Monomial(std::initializer_list<Letter> letters) : letters_(letters) {}
  Monomial(std::span<const Letter> letters) : letters_(letters.begin(), letters.end()) {}

  // Word u_{r1 c1} u_{r2 c2} ... from (row, col) pairs.
  static Monomial of(Size n, std::initializer_list<Variable> vars);

  std::size_t degree() const noexcept { return letters_.size(); }
  bool empty() const noexcept { return letters_.empty(); }
  Letter operator[](std::size_t i) const { return letters_[i]; }
  std::span<const Letter> letters() const noexcept { return {letters_.data(), letters_.size()}; }
  Monomial subword(std::size_t pos, std::size_t len) const;

  Monomial& operator*=(const Monomial& rhs);
  friend Monomial operator*(const Monomial& a, const Monomial& b);
  friend bool operator==(const Monomial& a, const Monomial& b) { return a.letters_ == b.letters_; }
  friend std::strong_ordering operator<=>(const Monomial& a, const Monomial& b);

 private:
  Letters letters_;
};

struct MonomialHash {
  std::size_t operator()(const Monomial& m) const noexcept;
};

std::strong_ordering compare_monomials(const Monomial& a, const Monomial& b);

struct Division {
  Monomial left;
  Monomial right;
};

// Leftmost factorization w = left * v * right.
std::optional<Division> find_division(const Monomial& v, const Monomial& w);
// Every start position of v inside w, ascending.
std::vector<std::size_t> find_occurrences(const Monomial& v, const Monomial& w);

Monomial transpose(const Monomial& w, Size n);
Monomial star(const Monomial& w);

using Coefficient = mpq_class;

struct Term {
  Coefficient coeff;
  Monomial word;
  friend bool operator==(const Term&, const Term&) = default;
};

// Canonical sparse polynomial: nonzero coefficients, strictly decreasing words.
class Polynomial {
 public:
  explicit Polynomial(Size n) : n_(n) {}
  Polynomial(Size n, std::vector<Term> terms);

  static Polynomial constant(Size n, const Coefficient& c);
  static Polynomial monomial(Size n, Monomial word, const Coefficient& c = 1);
  static Polynomial variable(Size n, int row, int col);

  Size size() const noexcept { return n_; }
  bool is_zero() const noexcept { return terms_.empty(); }
  std::size_t term_count() const noexcept { return terms_.size(); }
  std::span<const Term> terms() const noexcept { return terms_; }
  std::size_t degree() const;

  const Term& lt() const;
  const Monomial& lm() const { return lt().word; }
  const Coefficient& lc() const { return lt().coeff; }
  Polynomial monic() const;

  Polynomial& operator+=(const Polynomial& rhs);
  Polynomial& operator-=(const Polynomial& rhs);
  Polynomial& operator*=(const Coefficient& c);

  friend Polynomial operator+(Polynomial a, const Polynomial& b) { return a += b; }
  friend Polynomial operator-(Polynomial a, const Polynomial& b) { return a -= b; }
  friend Polynomial operator-(Polynomial a) { return a *= Coefficient(-1); }
  friend Polynomial operator*(const Polynomial& a, const Polynomial& b);
  friend Polynomial operator*(Polynomial a, const Coefficient& c) { return a *= c; }
  friend Polynomial operator*(const Coefficient& c, Polynomial a) { return a *= c; }
  friend bool operator==(const Polynomial& a, const Polynomial& b) {
    return a.n_ == b.n_ && a.terms_ == b.terms_;
  }

 private:
  static Polynomial from_sorted(Size n, std::vector<Term> terms);

  Size n_;
  std::vector<Term> terms_;

  friend Polynomial multiply(const Coefficient&, const Monomial&, const Polynomial&, const Monomial&);
};

// c * left * p * right
Polynomial multiply(const Coefficient& c, const Monomial& left, const Polynomial& p, const Monomial& right);

Polynomial transpose(const Polynomial& p);
Polynomial star(const Polynomial& p);

}  // namespace qsym
