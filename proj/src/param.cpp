#include "qsym/param.hpp"

#include <algorithm>
#include <cctype>
#include <numeric>

#include "qsym/error.hpp"

namespace qsym::param {

// ---------------------------------------------------------------- ParamPoly

ParamPoly::ParamPoly(long c) {
  if (c != 0) c_.push_back(mpz_class(c));
}

ParamPoly::ParamPoly(std::vector<mpz_class> coeffs) : c_(std::move(coeffs)) { trim(); }

ParamPoly ParamPoly::n() { return ParamPoly(std::vector<mpz_class>{0, 1}); }

void ParamPoly::trim() {
  while (!c_.empty() && c_.back() == 0) c_.pop_back();
}

mpz_class ParamPoly::evaluate(long n) const {
  mpz_class acc = 0;
  for (auto it = c_.rbegin(); it != c_.rend(); ++it) acc = acc * n + *it;
  return acc;
}

ParamPoly& ParamPoly::operator+=(const ParamPoly& o) {
  if (o.c_.size() > c_.size()) c_.resize(o.c_.size());
  for (std::size_t i = 0; i < o.c_.size(); ++i) c_[i] += o.c_[i];
  trim();
  return *this;
}

ParamPoly& ParamPoly::operator-=(const ParamPoly& o) {
  if (o.c_.size() > c_.size()) c_.resize(o.c_.size());
  for (std::size_t i = 0; i < o.c_.size(); ++i) c_[i] -= o.c_[i];
  trim();
  return *this;
}

ParamPoly operator*(const ParamPoly& a, const ParamPoly& b) {
  if (a.is_zero() || b.is_zero()) return {};
  std::vector<mpz_class> out(a.c_.size() + b.c_.size() - 1);
  for (std::size_t i = 0; i < a.c_.size(); ++i)
    for (std::size_t j = 0; j < b.c_.size(); ++j) out[i + j] += a.c_[i] * b.c_[j];
  return ParamPoly(std::move(out));
}

std::string to_string(const ParamPoly& p) {
  if (p.is_zero()) return "0";
  std::string out;
  const auto& c = p.coefficients();
  for (int d = p.degree(); d >= 0; --d) {
    if (c[d] == 0) continue;
    const bool negative = c[d] < 0;
    mpz_class mag = abs(c[d]);
    if (out.empty())
      out += negative ? "-" : "";
    else
      out += negative ? " - " : " + ";
    if (d == 0) {
      out += mag.get_str();
      continue;
    }
    if (mag != 1) out += mag.get_str() + "*";
    out += d == 1 ? "n" : "n^" + std::to_string(d);
  }
  return out;
}

namespace {

class PolyParser {
 public:
  explicit PolyParser(std::string_view s) : s_(s) {}

  ParamPoly parse() {
    ParamPoly p = expr();
    skip();
    if (pos_ < s_.size()) throw ParseError("unexpected '" + std::string(1, s_[pos_]) + "' in coefficient", pos_);
    return p;
  }

 private:
  void skip() {
    while (pos_ < s_.size() && std::isspace(static_cast<unsigned char>(s_[pos_]))) ++pos_;
  }
  char peek() {
    skip();
    return pos_ < s_.size() ? s_[pos_] : '\0';
  }

  ParamPoly expr() {
    ParamPoly acc;
    bool negative = false;
    if (peek() == '-' || peek() == '+') negative = s_[pos_++] == '-';
    ParamPoly t = term();
    acc = negative ? -t : t;
    for (char c = peek(); c == '+' || c == '-'; c = peek()) {
      ++pos_;
      ParamPoly u = term();
      if (c == '+')
        acc += u;
      else
        acc -= u;
    }
    return acc;
  }

  ParamPoly term() {
    ParamPoly acc = factor();
    while (peek() == '*') {
      ++pos_;
      acc = acc * factor();
    }
    return acc;
  }

  long integer() {
    skip();
    std::size_t start = pos_;
    while (pos_ < s_.size() && std::isdigit(static_cast<unsigned char>(s_[pos_]))) ++pos_;
    if (start == pos_) throw ParseError("expected digits", pos_);
    return std::stol(std::string(s_.substr(start, pos_ - start)));
  }

  ParamPoly factor() {
    char c = peek();
    if (c == '(') {
      ++pos_;
      ParamPoly inner = expr();
      if (peek() != ')') throw ParseError("expected ')'", pos_);
      ++pos_;
      return inner;
    }
    if (c == 'n') {
      ++pos_;
      long e = 1;
      if (peek() == '^') {
        ++pos_;
        e = integer();
      }
      ParamPoly out(1);
      for (long i = 0; i < e; ++i) out = out * ParamPoly::n();
      return out;
    }
    if (std::isdigit(static_cast<unsigned char>(c))) return ParamPoly(integer());
    throw ParseError("expected integer, 'n' or '('", pos_);
  }

  std::string_view s_;
  std::size_t pos_ = 0;
};

}  // namespace

ParamPoly parse_param_poly(std::string_view text) { return PolyParser(text).parse(); }

// ---------------------------------------------------------------- atoms

Atom eq(int coord, int c) { return {AtomKind::eq_const, coord, c}; }
Atom ge(int coord, int c) { return {AtomKind::ge_const, coord, c}; }
Atom neq(int coord, int other) {
  if (coord == other) throw InvalidArgument("inequality link needs two distinct coordinates");
  return {AtomKind::neq_coord, std::max(coord, other), std::min(coord, other)};
}

bool Atom::holds(std::span<const int> x) const {
  const int v = x[coord - 1];
  switch (kind) {
    case AtomKind::eq_const: return v == value;
    case AtomKind::ge_const: return v >= value;
    case AtomKind::neq_coord: return v != x[value - 1];
  }
  return false;
}

std::string to_string(const Atom& a) {
  std::string lhs = "i" + std::to_string(a.coord);
  switch (a.kind) {
    case AtomKind::eq_const: return lhs + "=" + std::to_string(a.value);
    case AtomKind::ge_const: return lhs + ">=" + std::to_string(a.value);
    case AtomKind::neq_coord: return lhs + "!=i" + std::to_string(a.value);
  }
  return lhs;
}

Conjunction::Conjunction(int arity, std::vector<Atom> atoms) : arity_(arity), atoms_(std::move(atoms)) {
  if (arity < 0) throw InvalidArgument("negative arity");
  for (const auto& a : atoms_) {
    if (a.coord < 1 || a.coord > arity)
      throw InvalidArgument("atom " + to_string(a) + " outside arity " + std::to_string(arity));
    if (a.kind == AtomKind::neq_coord && (a.value < 1 || a.value >= a.coord))
      throw InvalidArgument("malformed inequality atom");
    if (a.kind != AtomKind::neq_coord && a.value < 1) throw InvalidArgument("constants must be >= 1");
  }
  std::sort(atoms_.begin(), atoms_.end());
  atoms_.erase(std::unique(atoms_.begin(), atoms_.end()), atoms_.end());
}

bool Conjunction::holds(std::span<const int> x) const {
  for (const auto& a : atoms_)
    if (!a.holds(x)) return false;
  return true;
}

int Conjunction::max_constant() const {
  int m = 1;
  for (const auto& a : atoms_)
    if (a.kind != AtomKind::neq_coord) m = std::max(m, a.value);
  return m;
}

Conjunction Conjunction::operator&(const Conjunction& o) const {
  std::vector<Atom> atoms = atoms_;
  atoms.insert(atoms.end(), o.atoms_.begin(), o.atoms_.end());
  return Conjunction(std::max(arity_, o.arity_), std::move(atoms));
}

std::string to_string(const Conjunction& c) {
  if (c.atoms().empty()) return "true";
  std::string out;
  for (const auto& a : c.atoms()) {
    if (!out.empty()) out += " & ";
    out += to_string(a);
  }
  return out;
}

Conjunction parse_conjunction(std::string_view text, int arity) {
  std::vector<Atom> atoms;
  int top = 0;
  std::size_t start = 0;
  auto trimmed = [](std::string_view s) {
    while (!s.empty() && std::isspace(static_cast<unsigned char>(s.front()))) s.remove_prefix(1);
    while (!s.empty() && std::isspace(static_cast<unsigned char>(s.back()))) s.remove_suffix(1);
    return s;
  };
  if (trimmed(text) == "true") return Conjunction(std::max(arity, 0), {});
  for (;;) {
    std::size_t at = text.find('&', start);
    std::string_view piece = trimmed(text.substr(start, at == std::string_view::npos ? text.npos : at - start));
    std::string compact;
    for (char ch : piece)
      if (!std::isspace(static_cast<unsigned char>(ch))) compact += ch;
    auto bad = [&] { return ParseError("unsupported atom '" + std::string(piece) + "'", start); };
    std::size_t i = 0;
    auto read_int = [&]() {
      std::size_t s0 = i;
      while (i < compact.size() && std::isdigit(static_cast<unsigned char>(compact[i]))) ++i;
      if (s0 == i || i - s0 > 6) throw bad();
      return std::stoi(compact.substr(s0, i - s0));
    };
    if (compact.empty() || compact[0] != 'i') throw bad();
    ++i;
    int coord = read_int();
    Atom atom{};
    if (compact.compare(i, 2, ">=") == 0) {
      i += 2;
      atom = ge(coord, read_int());
    } else if (compact.compare(i, 3, "!=i") == 0) {
      i += 3;
      int other = read_int();
      if (other == coord) throw bad();
      atom = neq(coord, other);
      top = std::max(top, other);
    } else if (compact.compare(i, 1, "=") == 0) {
      i += 1;
      atom = eq(coord, read_int());
    } else {
      throw bad();
    }
    if (i != compact.size() || coord < 1 || (atom.kind != AtomKind::neq_coord && atom.value < 1)) throw bad();
    top = std::max(top, coord);
    atoms.push_back(atom);
    if (at == std::string_view::npos) break;
    start = at + 1;
  }
  if (arity < 0) arity = top;
  if (top > arity) throw ParseError("coordinate i" + std::to_string(top) + " exceeds arity " + std::to_string(arity), 0);
  return Conjunction(arity, std::move(atoms));
}

// ---------------------------------------------------------------- elements

void Element::add(const Conjunction& c, const ParamPoly& coeff) {
  if (arity_ != 0 && c.arity() != arity_)
    throw InvalidArgument("conjunction arity " + std::to_string(c.arity()) + " in element of arity " +
                          std::to_string(arity_));
  if (coeff.is_zero()) return;
  auto [it, inserted] = terms_.try_emplace(c, coeff);
  if (!inserted) {
    it->second += coeff;
    if (it->second.is_zero()) terms_.erase(it);
  }
}

Element& Element::operator+=(const Element& o) {
  for (const auto& [c, k] : o.terms_) add(c, k);
  return *this;
}

Element& Element::operator-=(const Element& o) {
  for (const auto& [c, k] : o.terms_) add(c, -k);
  return *this;
}

Element operator*(const ParamPoly& s, const Element& e) {
  Element out(e.arity_);
  for (const auto& [c, k] : e.terms_) out.add(c, s * k);
  return out;
}

// ---------------------------------------------------------------- families

PredicateFamily product_family(const std::vector<std::vector<Conjunction>>& per_coordinate) {
  const int arity = static_cast<int>(per_coordinate.size());
  PredicateFamily out{Conjunction(arity, {})};
  for (const auto& options : per_coordinate) {
    PredicateFamily next;
    for (const auto& prefix : out)
      for (const auto& o : options) next.push_back(prefix & Conjunction(arity, o.atoms()));
    out = std::move(next);
  }
  return out;
}

int max_constant(const PredicateFamily& family) {
  int m = 1;
  for (const auto& c : family) m = std::max(m, c.max_constant());
  return m;
}

int min_test_size(const PredicateFamily& family, int arity) { return max_constant(family) + arity + 2; }

namespace {

// Calls visit(x) for every x in [N]^k in lexicographic order.
template <class Visit>
void for_each_point(int k, int N, Visit visit) {
  std::vector<int> x(k, 1);
  for (;;) {
    visit(std::span<const int>(x));
    int pos = k - 1;
    while (pos >= 0 && x[pos] == N) x[pos--] = 1;
    if (pos < 0) return;
    ++x[pos];
  }
}

// Exact reduced row echelon form over Q on sparse rows. Columns [0, unknowns)
// are coefficients; later columns are right-hand sides.
struct Elimination {
  std::vector<std::map<std::size_t, mpq_class>> rows;
  std::vector<std::size_t> pivot_col;  // for rows [0, rank)

  std::size_t run(std::size_t unknowns) {
    std::size_t next = 0;
    for (std::size_t col = 0; col < unknowns && next < rows.size(); ++col) {
      std::size_t best = rows.size();
      for (std::size_t r = next; r < rows.size(); ++r) {
        auto it = rows[r].find(col);
        if (it == rows[r].end()) continue;
        if (best == rows.size() || rows[r].size() < rows[best].size()) best = r;
      }
      if (best == rows.size()) continue;
      std::swap(rows[next], rows[best]);
      auto& p = rows[next];
      mpq_class inv = 1 / p[col];
      for (auto& [c, v] : p) v *= inv;
      for (std::size_t r = 0; r < rows.size(); ++r) {
        if (r == next) continue;
        auto it = rows[r].find(col);
        if (it == rows[r].end()) continue;
        mpq_class factor = it->second;
        for (const auto& [c, v] : p) {
          auto& slot = rows[r][c];
          slot -= factor * v;
          if (sgn(slot) == 0) rows[r].erase(c);
        }
      }
      pivot_col.push_back(col);
      ++next;
    }
    return next;
  }
};

}  // namespace

IndicatorSpace::IndicatorSpace(PredicateFamily family, int arity, int N)
    : family_(std::move(family)), arity_(arity), N_(N) {
  for (const auto& c : family_)
    if (c.arity() != arity) throw InvalidArgument("family member " + to_string(c) + " has a different arity");
  if (N < min_test_size(family_, arity))
    throw InvalidArgument("test size N=" + std::to_string(N) + " below max constant + arity + 2 = " +
                          std::to_string(min_test_size(family_, arity)));
  std::map<std::vector<std::uint32_t>, std::uint32_t> row_id;
  std::vector<std::uint32_t> members;
  for_each_point(arity, N, [&](std::span<const int> x) {
    members.clear();
    for (std::size_t j = 0; j < family_.size(); ++j)
      if (family_[j].holds(x)) members.push_back(static_cast<std::uint32_t>(j));
    auto [it, inserted] = row_id.try_emplace(members, static_cast<std::uint32_t>(rows_.size()));
    if (inserted) rows_.push_back(members);
    point_row_.push_back(it->second);
  });

  // Columns with identical support are duplicates.
  std::vector<std::vector<std::uint32_t>> support(family_.size());
  for (std::uint32_t r = 0; r < rows_.size(); ++r)
    for (std::uint32_t j : rows_[r]) support[j].push_back(r);
  std::map<std::vector<std::uint32_t>, std::size_t> first_with;
  for (std::size_t j = 0; j < family_.size(); ++j) {
    auto [it, inserted] = first_with.try_emplace(support[j], j);
    if (!inserted) duplicates_.emplace_back(it->second, j);
  }

  Elimination e;
  for (const auto& r : rows_) {
    std::map<std::size_t, mpq_class> row;
    for (std::uint32_t j : r) row.emplace(j, 1);
    e.rows.push_back(std::move(row));
  }
  rank_ = e.run(family_.size());
}

PredicateFamily IndicatorSpace::distinct_members() const {
  std::vector<bool> drop(family_.size(), false);
  for (const auto& [i, j] : duplicates_) drop[j] = true;
  PredicateFamily out;
  for (std::size_t j = 0; j < family_.size(); ++j)
    if (!drop[j]) out.push_back(family_[j]);
  return out;
}

std::vector<Element> IndicatorSpace::decompose(
    const std::vector<std::function<bool(std::span<const int>)>>& preds) const {
  if (!independent())
    throw InvalidArgument("decomposition needs an independent family (rank " + std::to_string(rank_) + " of " +
                          std::to_string(family_.size()) + ")");
  const std::size_t m = family_.size();
  // Value of every predicate on every distinct row; must be constant per row.
  std::vector<std::vector<signed char>> value(preds.size(), std::vector<signed char>(rows_.size(), -1));
  std::size_t point = 0;
  for_each_point(arity_, N_, [&](std::span<const int> x) {
    const std::uint32_t r = point_row_[point++];
    for (std::size_t t = 0; t < preds.size(); ++t) {
      signed char v = preds[t](x) ? 1 : 0;
      if (value[t][r] == -1)
        value[t][r] = v;
      else if (value[t][r] != v)
        throw NotRepresentable("predicate separates points the family cannot distinguish");
    }
  });
  Elimination e;
  for (std::size_t r = 0; r < rows_.size(); ++r) {
    std::map<std::size_t, mpq_class> row;
    for (std::uint32_t j : rows_[r]) row.emplace(j, 1);
    for (std::size_t t = 0; t < preds.size(); ++t)
      if (value[t][r] == 1) row.emplace(m + t, 1);
    e.rows.push_back(std::move(row));
  }
  const std::size_t rank = e.run(m);
  std::vector<Element> out;
  for (std::size_t t = 0; t < preds.size(); ++t) {
    for (std::size_t r = rank; r < e.rows.size(); ++r)
      if (e.rows[r].count(m + t)) throw NotRepresentable("no exact combination within the family");
    Element el(arity_);
    for (std::size_t r = 0; r < rank; ++r) {
      auto it = e.rows[r].find(m + t);
      if (it == e.rows[r].end()) continue;
      if (it->second.get_den() != 1) throw NotRepresentable("combination needs non-integer coefficients");
      el.add(family_[e.pivot_col[r]], ParamPoly(it->second.get_num().get_si()));
    }
    out.push_back(std::move(el));
  }
  return out;
}

Element IndicatorSpace::decompose(const std::function<bool(std::span<const int>)>& pred) const {
  return decompose(std::vector<std::function<bool(std::span<const int>)>>{pred}).front();
}

bool check_independence(const PredicateFamily& family, int arity, int N) {
  return IndicatorSpace(family, arity, N).independent();
}

// ---------------------------------------------------------------- ranges

bool RangeSpec::holds(std::span<const int> x) const {
  for (std::size_t i = 0; i < coords.size(); ++i) {
    if (x[i] < coords[i].lo) return false;
    if (coords[i].hi && x[i] > *coords[i].hi) return false;
  }
  for (const auto& [s, t] : neq)
    if (x[s - 1] == x[t - 1]) return false;
  return true;
}

int RangeSpec::valid_from() const {
  int n0 = 1;
  for (const auto& b : coords) n0 = std::max(n0, b.hi ? *b.hi : b.lo);
  return n0;
}

Element decompose(const RangeSpec& r, const PredicateFamily& family, int N) {
  for (const auto& b : r.coords)
    if (b.hi && *b.hi < b.lo) throw InvalidArgument("empty interval in range");
  IndicatorSpace space(family, r.arity(), N);
  return space.decompose([&](std::span<const int> x) { return r.holds(x); });
}

// ---------------------------------------------------------------- counting

Count count_satisfying(const Conjunction& p) {
  const int k = p.arity();
  std::vector<std::pair<int, int>> links;
  std::vector<int> lo(k + 1, 1);
  std::vector<std::optional<int>> fixed(k + 1);
  bool empty = false;
  for (const auto& a : p.atoms()) {
    switch (a.kind) {
      case AtomKind::eq_const:
        if (fixed[a.coord] && *fixed[a.coord] != a.value) empty = true;
        fixed[a.coord] = a.value;
        break;
      case AtomKind::ge_const: lo[a.coord] = std::max(lo[a.coord], a.value); break;
      case AtomKind::neq_coord: links.emplace_back(a.coord, a.value); break;
    }
  }
  Count out{ParamPoly(), p.max_constant()};
  if (empty) return out;

  for (std::size_t mask = 0; mask < (std::size_t(1) << links.size()); ++mask) {
    std::vector<int> parent(k + 1);
    std::iota(parent.begin(), parent.end(), 0);
    auto find = [&](int v) {
      while (parent[v] != v) v = parent[v] = parent[parent[v]];
      return v;
    };
    int bits = 0;
    for (std::size_t l = 0; l < links.size(); ++l)
      if (mask >> l & 1) {
        ++bits;
        parent[find(links[l].first)] = find(links[l].second);
      }
    ParamPoly term(1);
    std::vector<int> class_lo(k + 1, 1);
    std::vector<std::optional<int>> class_fixed(k + 1);
    bool zero = false;
    for (int v = 1; v <= k; ++v) {
      int r = find(v);
      class_lo[r] = std::max(class_lo[r], lo[v]);
      if (fixed[v]) {
        if (class_fixed[r] && *class_fixed[r] != *fixed[v]) zero = true;
        class_fixed[r] = fixed[v];
      }
    }
    for (int v = 1; v <= k && !zero; ++v) {
      if (find(v) != v) continue;
      if (class_fixed[v]) {
        if (*class_fixed[v] < class_lo[v]) zero = true;
      } else {
        term = term * (ParamPoly::n() - ParamPoly(class_lo[v] - 1));
      }
    }
    if (zero) continue;
    if (bits % 2)
      out.value -= term;
    else
      out.value += term;
  }
  return out;
}

mpz_class count_bruteforce(const Conjunction& p, int n) {
  mpz_class count = 0;
  if (p.arity() == 0) return 1;
  for_each_point(p.arity(), n, [&](std::span<const int> x) {
    if (p.holds(x)) ++count;
  });
  return count;
}

// ---------------------------------------------------------------- expansion

namespace {

template <class Visit>
void for_each_solution(const Conjunction& c, int n, Visit visit) {
  const int k = c.arity();
  std::vector<int> lo(k, 1), hi(k, n);
  for (const auto& a : c.atoms()) {
    if (a.kind == AtomKind::eq_const) {
      lo[a.coord - 1] = std::max(lo[a.coord - 1], a.value);
      hi[a.coord - 1] = std::min(hi[a.coord - 1], a.value);
    } else if (a.kind == AtomKind::ge_const) {
      lo[a.coord - 1] = std::max(lo[a.coord - 1], a.value);
    }
  }
  for (int i = 0; i < k; ++i)
    if (lo[i] > hi[i]) return;
  std::vector<int> x(k);
  auto rec = [&](auto&& self, int pos) -> void {
    if (pos == k) {
      visit(std::span<const int>(x));
      return;
    }
    for (int v = lo[pos]; v <= hi[pos]; ++v) {
      x[pos] = v;
      bool ok = true;
      for (const auto& a : c.atoms())
        if (a.kind == AtomKind::neq_coord && a.coord == pos + 1 && x[a.value - 1] == v) ok = false;
      if (ok) self(self, pos + 1);
    }
  };
  rec(rec, 0);
}

Monomial word_of(std::span<const int> x, Size n) {
  Monomial::Letters letters;
  for (std::size_t i = 0; i + 1 < x.size(); i += 2) letters.push_back(Variable{x[i], x[i + 1]}.rank(n));
  return Monomial(std::move(letters));
}

void require_even(const Element& e) {
  if (e.arity() % 2) throw InvalidArgument("expansion needs an even arity, got " + std::to_string(e.arity()));
}

}  // namespace

Polynomial phi_expand(const Element& e, Size n) {
  require_even(e);
  std::vector<Term> terms;
  for (const auto& [c, k] : e.terms()) {
    Coefficient coeff(k.evaluate(n.value()));
    if (e.arity() == 0) {
      terms.push_back(Term{coeff * Coefficient(count_bruteforce(c, n.value())), Monomial()});
      continue;
    }
    for_each_solution(c, n.value(), [&](std::span<const int> x) { terms.push_back(Term{coeff, word_of(x, n)}); });
  }
  return Polynomial(n, std::move(terms));
}

Polynomial phi_expand_bruteforce(const Element& e, Size n) {
  require_even(e);
  std::vector<Term> terms;
  for (const auto& [c, k] : e.terms()) {
    Coefficient coeff(k.evaluate(n.value()));
    mpz_class count = 0;
    for_each_point(c.arity(), n.value(), [&](std::span<const int> x) {
      if (!c.holds(x)) return;
      if (e.arity() == 0)
        ++count;
      else
        terms.push_back(Term{coeff, word_of(x, n)});
    });
    if (e.arity() == 0) terms.push_back(Term{coeff * Coefficient(c.arity() == 0 ? mpz_class(1) : count), Monomial()});
  }
  return Polynomial(n, std::move(terms));
}

}  // namespace qsym::param
