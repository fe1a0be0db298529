#include "qsym/identity.hpp"

#include <algorithm>
#include <cctype>
#include <fstream>
#include <set>
#include <sstream>

#include "qsym/error.hpp"

namespace qsym::param {

const IdentityFamily* ParametricIdentity::family(int arity) const {
  for (const auto& f : families)
    if (f.arity == arity) return &f;
  return nullptr;
}

std::vector<int> ParametricIdentity::arities() const {
  std::set<int> s;
  for (const auto& t : terms) s.insert(t.arity);
  return {s.begin(), s.end()};
}

Element ParametricIdentity::side(bool lhs, int arity) const {
  Element e(arity);
  for (const auto& t : terms)
    if (t.lhs == lhs && t.arity == arity) e.add(t.pred, t.coeff);
  return e;
}

namespace {

std::string_view trim(std::string_view s) {
  while (!s.empty() && std::isspace(static_cast<unsigned char>(s.front()))) s.remove_prefix(1);
  while (!s.empty() && std::isspace(static_cast<unsigned char>(s.back()))) s.remove_suffix(1);
  return s;
}

std::vector<std::string_view> split(std::string_view s, char sep) {
  std::vector<std::string_view> out;
  for (;;) {
    std::size_t at = s.find(sep);
    out.push_back(trim(s.substr(0, at)));
    if (at == std::string_view::npos) return out;
    s.remove_prefix(at + 1);
  }
}

int parse_int(std::string_view s, const char* what) {
  s = trim(s);
  if (s.empty() || s.size() > 6 || !std::all_of(s.begin(), s.end(), [](char c) { return std::isdigit(static_cast<unsigned char>(c)); }))
    throw InvalidArgument(std::string("expected non-negative integer for ") + what + ", got '" + std::string(s) + "'");
  return std::stoi(std::string(s));
}

// "a b" -> {"a", "b"} on the first run of whitespace.
std::pair<std::string_view, std::string_view> head_word(std::string_view line) {
  std::size_t i = 0;
  while (i < line.size() && !std::isspace(static_cast<unsigned char>(line[i]))) ++i;
  return {line.substr(0, i), trim(line.substr(i))};
}

}  // namespace

std::pair<int, int> parse_sample_range(std::string_view s) {
  std::size_t dots = s.find("..");
  if (dots == std::string_view::npos) throw InvalidArgument("sample range must look like LO..HI");
  int lo = parse_int(s.substr(0, dots), "sample range");
  int hi = parse_int(s.substr(dots + 2), "sample range");
  if (lo < 1 || hi < lo || hi > 255) throw InvalidArgument("sample range must satisfy 1 <= LO <= HI <= 255");
  return {lo, hi};
}

ParametricIdentity parse_identity(std::string_view text) {
  ParametricIdentity id;
  std::size_t line_no = 0;
  std::size_t offset = 0;
  while (offset <= text.size()) {
    ++line_no;
    std::size_t end = text.find('\n', offset);
    if (end == std::string_view::npos) end = text.size();
    std::string_view line = text.substr(offset, end - offset);
    offset = end + 1;
    if (auto hash = line.find('#'); hash != std::string_view::npos) line = line.substr(0, hash);
    line = trim(line);
    if (line.empty()) continue;
    try {
      auto [key, rest] = head_word(line);
      if (key == "identity") {
        if (rest.empty()) throw InvalidArgument("identity needs a name");
        id.name = std::string(rest);
      } else if (key == "samples") {
        std::tie(id.sample_lo, id.sample_hi) = parse_sample_range(rest);
      } else if (key == "family") {
        auto parts = split(rest, '|');
        IdentityFamily f;
        f.arity = parse_int(parts[0], "family arity");
        if (f.arity == 0 || f.arity % 2) throw InvalidArgument("family arity must be positive and even");
        if (static_cast<int>(parts.size()) != f.arity + 1)
          throw InvalidArgument("family of arity " + std::to_string(f.arity) + " needs one group per coordinate");
        if (id.family(f.arity)) throw InvalidArgument("duplicate family for arity " + std::to_string(f.arity));
        for (int k = 1; k <= f.arity; ++k) {
          std::vector<Conjunction> options;
          for (auto alt : split(parts[k], ';')) options.push_back(parse_conjunction(alt, f.arity));
          f.per_coordinate.push_back(std::move(options));
        }
        id.families.push_back(std::move(f));
      } else if (key == "lhs" || key == "rhs") {
        auto parts = split(rest, '|');
        if (parts.size() < 3 || parts.size() > 4)
          throw InvalidArgument("term needs 'ARITY | COEFF | CONJUNCTION [| LABEL]'");
        IdentityTerm t;
        t.lhs = key == "lhs";
        t.arity = parse_int(parts[0], "term arity");
        if (t.arity % 2) throw InvalidArgument("term arity must be even");
        t.coeff = parse_param_poly(parts[1]);
        t.pred = parse_conjunction(parts[2], t.arity == 0 ? -1 : t.arity);
        if (parts.size() == 4) t.label = std::string(parts[3]);
        id.terms.push_back(std::move(t));
      } else {
        throw InvalidArgument("unknown directive '" + std::string(key) + "'");
      }
    } catch (const ParseError& e) {
      throw ParseError("line " + std::to_string(line_no) + ": " + e.what(), 0);
    } catch (const InvalidArgument& e) {
      throw ParseError("line " + std::to_string(line_no) + ": " + e.what(), 0);
    }
  }
  if (id.name.empty()) throw ParseError("missing 'identity NAME' line", 0);
  for (int k : id.arities())
    if (k > 0 && !id.family(k)) throw ParseError("no family declared for arity " + std::to_string(k), 0);
  return id;
}

ParametricIdentity load_identity(const std::string& path) {
  std::ifstream in(path);
  if (!in) throw Error("cannot open identity file " + path);
  std::ostringstream ss;
  ss << in.rdbuf();
  return parse_identity(ss.str());
}

bool IdentityReport::passed() const {
  for (const auto& g : grades)
    if (!g.matched) return false;
  if (constant_lhs != constant_rhs) return false;
  for (const auto& s : samples)
    if (!s.expansion_zero || !s.expansion_matches_bruteforce || !s.counts_match) return false;
  return true;
}

namespace {

ParamPoly constant_value(const Element& e) {
  ParamPoly total;
  for (const auto& [c, k] : e.terms()) total += k * count_satisfying(c).value;
  return total;
}

Element decompose_side(const IndicatorSpace& space, const Element& side) {
  Element out(side.arity());
  for (const auto& [c, k] : side.terms()) {
    Element d = space.decompose([&c](std::span<const int> x) { return c.holds(x); });
    out += k * d;
  }
  return out;
}

}  // namespace

IdentityReport verify_parametric_identity(const ParametricIdentity& id, std::optional<std::pair<int, int>> samples) {
  IdentityReport report;
  report.name = id.name;
  for (int k : id.arities()) {
    if (k == 0) continue;
    const IdentityFamily* fam = id.family(k);
    if (!fam) throw InvalidArgument("no family for arity " + std::to_string(k));
    GradeCheck g;
    g.arity = k;
    PredicateFamily declared = fam->members();
    g.declared_members = declared.size();
    g.test_size = min_test_size(declared, k);
    IndicatorSpace full(declared, k, g.test_size);
    g.declared_independent = full.independent();
    IndicatorSpace space(full.distinct_members(), k, g.test_size);
    g.distinct_members = space.family().size();
    g.rank = space.rank();
    if (!space.independent()) {
      g.mismatches.push_back("distinct members are linearly dependent (rank " + std::to_string(g.rank) + ")");
      report.grades.push_back(std::move(g));
      continue;
    }
    try {
      Element l = decompose_side(space, id.side(true, k));
      Element r = decompose_side(space, id.side(false, k));
      Element diff = l - r;
      for (const auto& [c, v] : diff.terms()) {
        auto coeff_of = [&c = c](const Element& e) {
          auto it = e.terms().find(c);
          return it == e.terms().end() ? ParamPoly() : it->second;
        };
        g.mismatches.push_back(to_string(c) + ": lhs " + to_string(coeff_of(l)) + ", rhs " + to_string(coeff_of(r)));
      }
      g.matched = diff.is_zero();
    } catch (const NotRepresentable& e) {
      g.mismatches.push_back(std::string("not representable: ") + e.what());
    }
    report.grades.push_back(std::move(g));
  }

  report.has_constant_grade = std::any_of(id.terms.begin(), id.terms.end(), [](const auto& t) { return t.arity == 0; });
  report.constant_lhs = constant_value(id.side(true, 0));
  report.constant_rhs = constant_value(id.side(false, 0));

  auto [lo, hi] = samples.value_or(std::pair{id.sample_lo, id.sample_hi});
  for (int n = lo; n <= hi; ++n) {
    SampleCheck s;
    s.n = n;
    const Size size(n);
    Polynomial total(size);
    s.expansion_matches_bruteforce = true;
    s.counts_match = true;
    for (const auto& t : id.terms) {
      Element e(t.arity);
      e.add(t.pred, t.coeff);
      Polynomial p = phi_expand(e, size);
      if (p != phi_expand_bruteforce(e, size)) s.expansion_matches_bruteforce = false;
      if (t.arity == 0) {
        Count c = count_satisfying(t.pred);
        if (n >= c.valid_from && c.value.evaluate(n) != count_bruteforce(t.pred, n)) s.counts_match = false;
      }
      if (t.lhs)
        total += p;
      else
        total -= p;
    }
    s.expansion_zero = total.is_zero();
    report.samples.push_back(s);
  }
  return report;
}

std::string to_string(const IdentityReport& r) {
  std::ostringstream out;
  out << "identity " << r.name << ": " << (r.passed() ? "PASS" : "FAIL") << "\n";
  for (const auto& g : r.grades) {
    out << "  grade arity " << g.arity << ": family " << g.declared_members << " declared, " << g.distinct_members
        << " distinct indicators, rank " << g.rank << " at N=" << g.test_size
        << (g.declared_independent ? ", declared family independent" : ", declared family NOT independent") << "; "
        << (g.matched ? "coefficients agree" : "MISMATCH") << "\n";
    for (const auto& m : g.mismatches) out << "    " << m << "\n";
  }
  if (r.has_constant_grade)
    out << "  constant grade: lhs " << to_string(r.constant_lhs) << ", rhs " << to_string(r.constant_rhs) << "; "
        << (r.constant_lhs == r.constant_rhs ? "agree" : "MISMATCH") << "\n";
  for (const auto& s : r.samples)
    out << "  n=" << s.n << ": expansion " << (s.expansion_zero ? "zero" : "NONZERO") << ", brute force "
        << (s.expansion_matches_bruteforce ? "agrees" : "DISAGREES") << ", counts "
        << (s.counts_match ? "agree" : "DISAGREE") << "\n";
  return out.str();
}

Polynomial expand_terms(const ParametricIdentity& id, Size n, std::string_view label) {
  Polynomial total(n);
  for (const auto& t : id.terms) {
    if (!label.empty() && t.label != label) continue;
    Element e(t.arity);
    e.add(t.pred, t.coeff);
    total += phi_expand(e, n);
  }
  return total;
}

}  // namespace qsym::param
