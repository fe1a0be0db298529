#include "qsym/text.hpp"

#include <cctype>
#include <sstream>

namespace qsym {

namespace {

class Parser {
 public:
  Parser(std::string_view text, Size n) : s_(text), n_(n) {}

  Polynomial polynomial() {
    std::vector<Term> terms;
    skip();
    bool negative = false;
    if (peek() == '+' || peek() == '-') {
      negative = get() == '-';
      skip();
    }
    terms.push_back(term(negative));
    for (skip(); !done(); skip()) {
      char op = peek();
      if (op != '+' && op != '-') fail("expected '+' or '-'");
      get();
      skip();
      terms.push_back(term(op == '-'));
    }
    return Polynomial(n_, std::move(terms));
  }

  Monomial word_only() {
    skip();
    Monomial w;
    if (peek() == '1') {
      get();
    } else {
      w = word();
    }
    skip();
    if (!done()) fail("trailing input after word");
    return w;
  }

  Coefficient coefficient_only() {
    skip();
    bool negative = false;
    if (peek() == '-' || peek() == '+') negative = get() == '-';
    Coefficient c = coefficient();
    skip();
    if (!done()) fail("trailing input after coefficient");
    return negative ? Coefficient(-c) : c;
  }

 private:
  bool done() const { return pos_ >= s_.size(); }
  char peek() const { return done() ? '\0' : s_[pos_]; }
  char get() { return s_[pos_++]; }
  void skip() {
    while (!done() && std::isspace(static_cast<unsigned char>(s_[pos_]))) ++pos_;
  }
  [[noreturn]] void fail(const std::string& what) const { throw ParseError(what, pos_); }

  void expect(char c) {
    skip();
    if (peek() != c) fail(std::string("expected '") + c + "'");
    get();
    skip();
  }

  mpz_class integer() {
    skip();
    std::size_t start = pos_;
    while (!done() && std::isdigit(static_cast<unsigned char>(s_[pos_]))) ++pos_;
    if (start == pos_) fail("expected digits");
    return mpz_class(std::string(s_.substr(start, pos_ - start)));
  }

  Coefficient coefficient() {
    mpz_class num = integer();
    skip();
    if (peek() == '/') {
      std::size_t at = pos_;
      get();
      mpz_class den = integer();
      if (den == 0) throw ParseError("zero denominator", at);
      Coefficient c(num, den);
      c.canonicalize();
      return c;
    }
    return Coefficient(num);
  }

  Letter variable() {
    skip();
    std::size_t at = pos_;
    if (peek() != 'u') fail("expected 'u['");
    get();
    expect('[');
    mpz_class r = integer();
    expect(',');
    mpz_class c = integer();
    skip();
    if (peek() != ']') fail("expected ']'");
    get();
    const int m = n_.value();
    if (r < 1 || r > m || c < 1 || c > m)
      throw IndexError("index u[" + r.get_str() + "," + c.get_str() + "] outside [1," + std::to_string(m) +
                       "] at offset " + std::to_string(at));
    return Variable{static_cast<int>(r.get_si()), static_cast<int>(c.get_si())}.rank(n_);
  }

  Monomial word() {
    Monomial::Letters letters;
    letters.push_back(variable());
    for (;;) {
      skip();
      std::size_t save = pos_;
      if (peek() != '*') break;
      get();
      skip();
      if (peek() != 'u') {
        pos_ = save;
        fail("expected variable after '*'");
      }
      letters.push_back(variable());
    }
    return Monomial(std::move(letters));
  }

  Term term(bool negative) {
    skip();
    Term t{1, Monomial()};
    if (std::isdigit(static_cast<unsigned char>(peek()))) {
      t.coeff = coefficient();
      skip();
      if (peek() == '*') {
        get();
        t.word = word();
      }
    } else if (peek() == 'u') {
      t.word = word();
    } else {
      fail("expected coefficient or variable");
    }
    if (negative) t.coeff = -t.coeff;
    return t;
  }

  std::string_view s_;
  Size n_;
  std::size_t pos_ = 0;
};

}  // namespace

Polynomial parse_polynomial(std::string_view text, Size n) { return Parser(text, n).polynomial(); }

Monomial parse_word(std::string_view text, Size n) { return Parser(text, n).word_only(); }

Coefficient parse_coefficient(std::string_view text) { return Parser(text, Size(1)).coefficient_only(); }

std::string to_string(const Coefficient& c) { return c.get_str(); }

std::string to_string(const Monomial& w, Size n) {
  if (w.empty()) return "1";
  std::string out;
  for (std::size_t i = 0; i < w.degree(); ++i) {
    Variable v = Variable::from_rank(w[i], n);
    if (i) out += '*';
    out += "u[" + std::to_string(v.row) + "," + std::to_string(v.col) + "]";
  }
  return out;
}

std::string to_string(const Polynomial& p) {
  if (p.is_zero()) return "0";
  std::string out;
  bool first = true;
  for (const auto& t : p.terms()) {
    const bool negative = sgn(t.coeff) < 0;
    if (first)
      out += negative ? "-" : "";
    else
      out += negative ? " - " : " + ";
    first = false;
    Coefficient mag = abs(t.coeff);
    if (t.word.empty()) {
      out += to_string(mag);
    } else {
      if (mag != 1) out += to_string(mag) + "*";
      out += to_string(t.word, p.size());
    }
  }
  return out;
}

std::vector<Polynomial> parse_polynomial_list(std::string_view text, Size n) {
  std::vector<Polynomial> out;
  std::size_t offset = 0;
  std::size_t line_no = 0;
  while (offset <= text.size()) {
    ++line_no;
    std::size_t end = text.find('\n', offset);
    if (end == std::string_view::npos) end = text.size();
    std::string_view line = text.substr(offset, end - offset);
    if (auto hash = line.find('#'); hash != std::string_view::npos) line = line.substr(0, hash);
    bool blank = true;
    for (char ch : line)
      if (!std::isspace(static_cast<unsigned char>(ch))) blank = false;
    if (!blank) {
      try {
        out.push_back(parse_polynomial(line, n));
      } catch (const ParseError& e) {
        throw ParseError(std::string("line ") + std::to_string(line_no) + ": " + e.what(),
                         offset + e.position());
      } catch (const IndexError& e) {
        throw IndexError(std::string("line ") + std::to_string(line_no) + ": " + e.what());
      }
    }
    offset = end + 1;
  }
  return out;
}

}  // namespace qsym
