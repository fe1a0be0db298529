#include "qsym/algebra.hpp"

#include <algorithm>
#include <string>

namespace qsym {

Size::Size(int n) : n_(n) {
  if (n < 1 || n > kMax)
    throw InvalidArgument("matrix size n=" + std::to_string(n) + " outside [1," + std::to_string(kMax) + "]");
}

void require_same_size(Size a, Size b) {
  if (a != b)
    throw SizeMismatch("operands over n=" + std::to_string(a.value()) + " and n=" + std::to_string(b.value()));
}

Letter Variable::rank(Size n) const {
  const int m = n.value();
  if (row < 1 || row > m || col < 1 || col > m)
    throw IndexError("variable u[" + std::to_string(row) + "," + std::to_string(col) + "] outside [1," +
                     std::to_string(m) + "]");
  return static_cast<Letter>((row - 1) * m + col);
}

Variable Variable::from_rank(Letter rank, Size n) {
  const int m = n.value();
  if (rank < 1 || rank > m * m) throw IndexError("rank " + std::to_string(rank) + " outside [1,n^2]");
  return {(rank - 1) / m + 1, (rank - 1) % m + 1};
}

Monomial Monomial::of(Size n, std::initializer_list<Variable> vars) {
  Letters letters;
  for (const auto& v : vars) letters.push_back(v.rank(n));
  return Monomial(std::move(letters));
}

Monomial Monomial::subword(std::size_t pos, std::size_t len) const {
  return Monomial(letters().subspan(pos, len));
}

Monomial& Monomial::operator*=(const Monomial& rhs) {
  letters_.insert(letters_.end(), rhs.letters_.begin(), rhs.letters_.end());
  return *this;
}

Monomial operator*(const Monomial& a, const Monomial& b) {
  Monomial out;
  out.letters_.reserve(a.degree() + b.degree());
  out.letters_.assign(a.letters_.begin(), a.letters_.end());
  out.letters_.insert(out.letters_.end(), b.letters_.begin(), b.letters_.end());
  return out;
}

std::strong_ordering operator<=>(const Monomial& a, const Monomial& b) {
  if (a.degree() != b.degree()) return a.degree() <=> b.degree();
  for (std::size_t i = 0; i < a.degree(); ++i)
    if (a.letters_[i] != b.letters_[i]) return b.letters_[i] <=> a.letters_[i];
  return std::strong_ordering::equal;
}

std::strong_ordering compare_monomials(const Monomial& a, const Monomial& b) { return a <=> b; }

std::size_t MonomialHash::operator()(const Monomial& m) const noexcept {
  std::size_t h = 1469598103934665603ull;
  for (Letter x : m.letters()) {
    h ^= x;
    h *= 1099511628211ull;
  }
  return h ^ m.degree();
}

std::vector<std::size_t> find_occurrences(const Monomial& v, const Monomial& w) {
  std::vector<std::size_t> out;
  if (v.degree() > w.degree()) return out;
  auto wl = w.letters();
  auto vl = v.letters();
  for (std::size_t pos = 0; pos + vl.size() <= wl.size(); ++pos)
    if (std::equal(vl.begin(), vl.end(), wl.begin() + pos)) out.push_back(pos);
  return out;
}

std::optional<Division> find_division(const Monomial& v, const Monomial& w) {
  if (v.degree() > w.degree()) return std::nullopt;
  auto wl = w.letters();
  auto vl = v.letters();
  for (std::size_t pos = 0; pos + vl.size() <= wl.size(); ++pos)
    if (std::equal(vl.begin(), vl.end(), wl.begin() + pos))
      return Division{w.subword(0, pos), w.subword(pos + vl.size(), wl.size() - pos - vl.size())};
  return std::nullopt;
}

Monomial transpose(const Monomial& w, Size n) {
  Monomial::Letters out;
  for (Letter x : w.letters()) out.push_back(Variable::from_rank(x, n).transposed().rank(n));
  return Monomial(std::move(out));
}

Monomial star(const Monomial& w) {
  auto l = w.letters();
  return Monomial(Monomial::Letters(l.rbegin(), l.rend()));
}

namespace {

// Sort descending, merge equal words, drop zeros.
std::vector<Term> canonicalize(std::vector<Term> terms) {
  std::sort(terms.begin(), terms.end(), [](const Term& a, const Term& b) { return a.word > b.word; });
  std::vector<Term> out;
  out.reserve(terms.size());
  for (auto& t : terms) {
    if (!out.empty() && out.back().word == t.word) {
      out.back().coeff += t.coeff;
    } else {
      if (!out.empty() && sgn(out.back().coeff) == 0) out.pop_back();
      out.push_back(std::move(t));
    }
  }
  if (!out.empty() && sgn(out.back().coeff) == 0) out.pop_back();
  return out;
}

}  // namespace

Polynomial::Polynomial(Size n, std::vector<Term> terms) : n_(n) {
  for (auto& t : terms) t.coeff.canonicalize();
  terms_ = canonicalize(std::move(terms));
  const auto limit = static_cast<Letter>(n.variable_count());
  for (const auto& t : terms_)
    for (Letter x : t.word.letters())
      if (x < 1 || x > limit) throw IndexError("letter rank " + std::to_string(x) + " outside [1,n^2]");
}

Polynomial Polynomial::from_sorted(Size n, std::vector<Term> terms) {
  Polynomial p(n);
  p.terms_ = std::move(terms);
  return p;
}

Polynomial Polynomial::constant(Size n, const Coefficient& c) {
  if (sgn(c) == 0) return Polynomial(n);
  Coefficient v = c;
  v.canonicalize();
  return from_sorted(n, {Term{v, Monomial()}});
}

Polynomial Polynomial::monomial(Size n, Monomial word, const Coefficient& c) {
  return Polynomial(n, {Term{c, std::move(word)}});
}

Polynomial Polynomial::variable(Size n, int row, int col) {
  return from_sorted(n, {Term{1, Monomial::of(n, {{row, col}})}});
}

std::size_t Polynomial::degree() const { return is_zero() ? 0 : terms_.front().word.degree(); }

const Term& Polynomial::lt() const {
  if (terms_.empty()) throw InvalidArgument("leading term of the zero polynomial");
  return terms_.front();
}

Polynomial Polynomial::monic() const {
  if (is_zero()) return *this;
  Coefficient inv = 1 / lc();
  Polynomial out = *this;
  out *= inv;
  return out;
}

namespace {

std::vector<Term> merge(const std::vector<Term>& a, const std::vector<Term>& b, bool subtract) {
  std::vector<Term> out;
  out.reserve(a.size() + b.size());
  std::size_t i = 0, j = 0;
  while (i < a.size() || j < b.size()) {
    if (j == b.size() || (i < a.size() && a[i].word > b[j].word)) {
      out.push_back(a[i++]);
    } else if (i == a.size() || b[j].word > a[i].word) {
      out.push_back(subtract ? Term{-b[j].coeff, b[j].word} : b[j]);
      ++j;
    } else {
      Coefficient c = subtract ? Coefficient(a[i].coeff - b[j].coeff) : Coefficient(a[i].coeff + b[j].coeff);
      if (sgn(c) != 0) out.push_back(Term{std::move(c), a[i].word});
      ++i;
      ++j;
    }
  }
  return out;
}

}  // namespace

Polynomial& Polynomial::operator+=(const Polynomial& rhs) {
  require_same_size(n_, rhs.n_);
  terms_ = merge(terms_, rhs.terms_, false);
  return *this;
}

Polynomial& Polynomial::operator-=(const Polynomial& rhs) {
  require_same_size(n_, rhs.n_);
  terms_ = merge(terms_, rhs.terms_, true);
  return *this;
}

Polynomial& Polynomial::operator*=(const Coefficient& c) {
  if (sgn(c) == 0) {
    terms_.clear();
    return *this;
  }
  for (auto& t : terms_) t.coeff *= c;
  return *this;
}

Polynomial operator*(const Polynomial& a, const Polynomial& b) {
  require_same_size(a.n_, b.n_);
  std::vector<Term> terms;
  terms.reserve(a.terms_.size() * b.terms_.size());
  for (const auto& x : a.terms_)
    for (const auto& y : b.terms_) terms.push_back(Term{x.coeff * y.coeff, x.word * y.word});
  return Polynomial::from_sorted(a.n_, canonicalize(std::move(terms)));
}

// Two-sided multiplication by words preserves the order, so no re-sort is needed.
Polynomial multiply(const Coefficient& c, const Monomial& left, const Polynomial& p, const Monomial& right) {
  if (sgn(c) == 0) return Polynomial(p.size());
  std::vector<Term> terms;
  terms.reserve(p.terms_.size());
  for (const auto& t : p.terms_) {
    Monomial w = left * t.word;
    w *= right;
    terms.push_back(Term{c * t.coeff, std::move(w)});
  }
  return Polynomial::from_sorted(p.size(), std::move(terms));
}

Polynomial transpose(const Polynomial& p) {
  std::vector<Term> terms;
  terms.reserve(p.term_count());
  for (const auto& t : p.terms()) terms.push_back(Term{t.coeff, transpose(t.word, p.size())});
  return Polynomial(p.size(), std::move(terms));
}

Polynomial star(const Polynomial& p) {
  std::vector<Term> terms;
  terms.reserve(p.term_count());
  for (const auto& t : p.terms()) terms.push_back(Term{t.coeff, star(t.word)});
  return Polynomial(p.size(), std::move(terms));
}

}  // namespace qsym
