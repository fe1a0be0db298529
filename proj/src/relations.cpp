#include "qsym/relations.hpp"

#include <map>
#include <memory>
#include <mutex>

namespace qsym {

namespace {

struct FamilyInfo {
  Family family;
  std::string_view name;
  int arity;
  int min_size;
};

constexpr FamilyInfo kInfo[] = {
    {Family::rs, "rs", 1, 1},         {Family::cs, "cs", 1, 1},         {Family::ip, "ip", 2, 1},
    {Family::inj, "inj", 3, 1},       {Family::wel, "wel", 3, 1},       {Family::rinj, "rinj", 2, 4},
    {Family::rwel, "rwel", 2, 4},     {Family::bg1, "bg1", 3, 4},       {Family::bg2, "bg2", 3, 4},
    {Family::bg3, "bg3", 2, 4},       {Family::bg4, "bg4", 2, 4},       {Family::bg5, "bg5", 2, 4},
    {Family::bg6, "bg6", 2, 4},       {Family::bg7, "bg7", 3, 4},       {Family::bg8, "bg8", 3, 4},
    {Family::bg9, "bg9", 2, 4},       {Family::bg10, "bg10", 2, 4},     {Family::bg11, "bg11", 3, 4},
    {Family::bg12, "bg12", 3, 4},     {Family::bg13, "bg13", 3, 4},     {Family::bg14, "bg14", 3, 4},
    {Family::rrs, "rrs", 2, 4},       {Family::rcs, "rcs", 2, 4},       {Family::rinjcs, "rinjcs", 1, 4},
    {Family::rwelcs, "rwelcs", 1, 4},
};

const FamilyInfo& info(Family f) { return kInfo[static_cast<int>(f)]; }

// ---- builders; indices are assumed valid

Polynomial U(Size n, int i, int j) { return Polynomial::variable(n, i, j); }

Polynomial word2(Size n, int a, int b, int c, int d, const Coefficient& coeff = 1) {
  return Polynomial::monomial(n, Monomial::of(n, {{a, b}, {c, d}}), coeff);
}

Polynomial rs(Size n, int i) {
  std::vector<Term> t;
  for (int a = 1; a <= n.value(); ++a) t.push_back(Term{1, Monomial::of(n, {{i, a}})});
  t.push_back(Term{-1, Monomial()});
  return Polynomial(n, std::move(t));
}

Polynomial cs(Size n, int i) {
  std::vector<Term> t;
  for (int a = 1; a <= n.value(); ++a) t.push_back(Term{1, Monomial::of(n, {{a, i}})});
  t.push_back(Term{-1, Monomial()});
  return Polynomial(n, std::move(t));
}

Polynomial ip(Size n, int i, int j) { return word2(n, i, j, i, j) - U(n, i, j); }
Polynomial inj(Size n, int a, int b, int c) { return word2(n, a, b, c, b); }
Polynomial wel(Size n, int a, int b, int c) { return word2(n, a, b, a, c); }

Polynomial rinj(Size n, int j, int k) {
  std::vector<Term> t;
  for (int a = 3; a <= n.value(); ++a) {
    t.push_back(Term{1, Monomial::of(n, {{j, 2}, {k, a}})});
    t.push_back(Term{-1, Monomial::of(n, {{j, a}, {k, 1}})});
  }
  t.push_back(Term{1, Monomial::of(n, {{k, 1}})});
  t.push_back(Term{-1, Monomial::of(n, {{j, 2}})});
  return Polynomial(n, std::move(t));
}

Polynomial rwel(Size n, int j, int k) {
  std::vector<Term> t;
  for (int a = 3; a <= n.value(); ++a) {
    t.push_back(Term{1, Monomial::of(n, {{2, j}, {a, k}})});
    t.push_back(Term{-1, Monomial::of(n, {{a, j}, {1, k}})});
  }
  t.push_back(Term{1, Monomial::of(n, {{1, k}})});
  t.push_back(Term{-1, Monomial::of(n, {{2, j}})});
  return Polynomial(n, std::move(t));
}

Polynomial rrs(Size n, int i, int j) {
  Polynomial p(n);
  for (int k = 2; k <= n.value(); ++k)
    if (k != i) p += U(n, i, j) * rs(n, k) - inj(n, i, j, k);
  return p;
}

Polynomial rcs(Size n, int i, int j) {
  Polynomial p(n);
  for (int k = 2; k <= n.value(); ++k)
    if (k != j) p += U(n, i, j) * cs(n, k) - wel(n, i, j, k);
  return p;
}

Polynomial rinjcs(Size n, int i) {
  Polynomial p(n);
  for (int a = 2; a <= n.value(); ++a)
    if (a != i) p += rinj(n, a, i);
  return p;
}

Polynomial rwelcs(Size n, int i) {
  Polynomial p(n);
  for (int a = 2; a <= n.value(); ++a)
    if (a != i) p += rwel(n, a, i);
  return p;
}

bool in(int x, int lo, int hi) { return lo <= x && x <= hi; }

}  // namespace

std::string_view family_name(Family f) { return info(f).name; }

std::optional<Family> parse_family(std::string_view name) {
  for (const auto& i : kInfo)
    if (i.name == name) return i.family;
  return std::nullopt;
}

int family_arity(Family f) { return info(f).arity; }
int family_min_size(Family f) { return info(f).min_size; }
bool is_bad_guy(Family f) { return f >= Family::bg1 && f <= Family::bg14; }

bool is_valid_index(Family f, std::span<const int> x, Size size) {
  const int n = size.value();
  if (static_cast<int>(x.size()) != family_arity(f) || n < family_min_size(f)) return false;
  const bool all_ge2 = [&] {
    for (int v : x)
      if (!in(v, 2, n)) return false;
    return true;
  }();
  switch (f) {
    case Family::rs:
    case Family::cs: return in(x[0], 1, n);
    case Family::ip: return in(x[0], 1, n) && in(x[1], 1, n);
    case Family::inj: return in(x[0], 1, n) && in(x[1], 1, n) && in(x[2], 1, n) && x[0] != x[2];
    case Family::wel: return in(x[0], 1, n) && in(x[1], 1, n) && in(x[2], 1, n) && x[1] != x[2];
    case Family::rinj:
    case Family::rwel: return all_ge2 && x[0] != x[1];
    // Validity of a bad-guy tuple: every relation it is built from is defined.
    case Family::bg1:
    case Family::bg2:
    case Family::bg7:
    case Family::bg8: return all_ge2 && x[0] != x[1] && x[1] != x[2];
    case Family::bg3:
    case Family::bg4:
    case Family::bg5:
    case Family::bg6: return all_ge2 && x[0] != x[1];
    case Family::bg9:
    case Family::bg10: return all_ge2 && x[0] != 2 && x[1] != 3;
    case Family::bg11: return all_ge2 && x[0] != 2 && x[1] != x[2];
    case Family::bg12:
    case Family::bg14: return all_ge2 && x[2] != 3 && x[0] != x[1];
    case Family::bg13: return all_ge2 && x[1] != 2 && x[0] != x[2];
    case Family::rrs:
    case Family::rcs: return all_ge2;
    case Family::rinjcs: return all_ge2;
    case Family::rwelcs: return all_ge2 && x[0] != 3;
  }
  return false;
}

std::vector<std::vector<int>> valid_indices(Family f, Size size) {
  std::vector<std::vector<int>> out;
  const int k = family_arity(f);
  const int n = size.value();
  std::vector<int> x(k, 1);
  for (;;) {
    if (is_valid_index(f, x, size)) out.push_back(x);
    int pos = k - 1;
    while (pos >= 0 && x[pos] == n) x[pos--] = 1;
    if (pos < 0) break;
    ++x[pos];
  }
  return out;
}

Polynomial make_relation(Family f, std::span<const int> x, Size n) {
  if (n.value() < family_min_size(f))
    throw Unsupported(std::string(family_name(f)) + " needs n >= " + std::to_string(family_min_size(f)));
  if (!is_valid_index(f, x, n)) throw IndexError("invalid index tuple " + label(f, x));
  const int a = x[0];
  const int b = x.size() > 1 ? x[1] : 0;
  const int c = x.size() > 2 ? x[2] : 0;
  switch (f) {
    case Family::rs: return rs(n, a);
    case Family::cs: return cs(n, a);
    case Family::ip: return ip(n, a, b);
    case Family::inj: return inj(n, a, b, c);
    case Family::wel: return wel(n, a, b, c);
    case Family::rinj: return rinj(n, a, b);
    case Family::rwel: return rwel(n, a, b);
    case Family::bg1: return inj(n, a, 2, b) * U(n, c, 3) - U(n, a, 2) * rinj(n, b, c);
    case Family::bg2: return U(n, a, 2) * inj(n, b, 3, c) - rinj(n, a, b) * U(n, c, 3);
    case Family::bg3: return ip(n, 2, a) * U(n, 3, b) - U(n, 2, a) * rwel(n, a, b);
    case Family::bg4: return U(n, 2, a) * ip(n, 3, b) - rwel(n, a, b) * U(n, 3, b);
    case Family::bg5: return ip(n, a, 2) * U(n, b, 3) - U(n, a, 2) * rinj(n, a, b);
    case Family::bg6: return U(n, a, 2) * ip(n, b, 3) - rinj(n, a, b) * U(n, b, 3);
    case Family::bg7: return wel(n, 2, a, b) * U(n, 3, c) - U(n, 2, a) * rwel(n, b, c);
    case Family::bg8: return U(n, 2, a) * wel(n, 3, b, c) - rwel(n, a, b) * U(n, 3, c);
    case Family::bg9: return rinj(n, a, 2) * U(n, 3, b) - U(n, a, 2) * rwel(n, 3, b);
    case Family::bg10: return U(n, 2, a) * rinj(n, 3, b) - rwel(n, a, 2) * U(n, b, 3);
    case Family::bg11: return inj(n, a, b, 2) * U(n, 3, c) - U(n, a, b) * rwel(n, b, c);
    case Family::bg12: return U(n, 2, a) * inj(n, 3, b, c) - rwel(n, a, b) * U(n, c, b);
    case Family::bg13: return wel(n, a, b, 2) * U(n, c, 3) - U(n, a, b) * rinj(n, a, c);
    case Family::bg14: return U(n, a, 2) * wel(n, b, 3, c) - rinj(n, a, b) * U(n, b, c);
    case Family::rrs: return rrs(n, a, b);
    case Family::rcs: return rcs(n, a, b);
    case Family::rinjcs: return rinjcs(n, a);
    case Family::rwelcs: return rwelcs(n, a);
  }
  throw InvalidArgument("unknown family");
}

std::string label(Family f, std::span<const int> indices) {
  std::string out(family_name(f));
  out += '(';
  for (std::size_t i = 0; i < indices.size(); ++i) {
    if (i) out += ',';
    out += std::to_string(indices[i]);
  }
  return out + ')';
}

std::string label(const RelationInstance& r) { return label(r.family, r.indices); }

std::optional<TransposePartner> transpose_partner(Family f, std::span<const int> x) {
  std::vector<int> same(x.begin(), x.end());
  auto swap01 = [&] {
    std::vector<int> y = same;
    std::swap(y[0], y[1]);
    return y;
  };
  switch (f) {
    case Family::rs: return TransposePartner{Family::cs, same, 1};
    case Family::cs: return TransposePartner{Family::rs, same, 1};
    case Family::ip: return TransposePartner{Family::ip, swap01(), 1};
    case Family::inj: return TransposePartner{Family::wel, swap01(), 1};
    case Family::wel: return TransposePartner{Family::inj, swap01(), 1};
    case Family::rinj: return TransposePartner{Family::rwel, same, 1};
    case Family::rwel: return TransposePartner{Family::rinj, same, 1};
    case Family::bg1: return TransposePartner{Family::bg7, same, 1};
    case Family::bg7: return TransposePartner{Family::bg1, same, 1};
    case Family::bg2: return TransposePartner{Family::bg8, same, 1};
    case Family::bg8: return TransposePartner{Family::bg2, same, 1};
    case Family::bg3: return TransposePartner{Family::bg5, same, 1};
    case Family::bg5: return TransposePartner{Family::bg3, same, 1};
    case Family::bg4: return TransposePartner{Family::bg6, same, 1};
    case Family::bg6: return TransposePartner{Family::bg4, same, 1};
    case Family::bg9: return TransposePartner{Family::bg10, same, -1};
    case Family::bg10: return TransposePartner{Family::bg9, same, -1};
    case Family::bg11: return TransposePartner{Family::bg13, swap01(), 1};
    case Family::bg13: return TransposePartner{Family::bg11, swap01(), 1};
    case Family::bg12: return TransposePartner{Family::bg14, same, 1};
    case Family::bg14: return TransposePartner{Family::bg12, same, 1};
    case Family::rrs: return TransposePartner{Family::rcs, swap01(), 1};
    case Family::rcs: return TransposePartner{Family::rrs, swap01(), 1};
    case Family::rinjcs:
      if (x[0] == 3) return std::nullopt;
      return TransposePartner{Family::rwelcs, same, 1};
    case Family::rwelcs: return TransposePartner{Family::rinjcs, same, 1};
  }
  return std::nullopt;
}

bool uses_rwel23(Family f, std::span<const int> x) {
  auto is23 = [](int p, int q) { return p == 2 && q == 3; };
  switch (f) {
    case Family::rwel: return is23(x[0], x[1]);
    case Family::bg3:
    case Family::bg4:
    case Family::bg8:
    case Family::bg12: return is23(x[0], x[1]);
    case Family::bg7:
    case Family::bg11: return is23(x[1], x[2]);
    default: return false;
  }
}

std::string_view set_name(NamedSet s) {
  switch (s) {
    case NamedSet::Fpp: return "Fpp";
    case NamedSet::Fp: return "Fp";
    case NamedSet::F: return "F";
    case NamedSet::B: return "B";
    case NamedSet::G: return "G";
  }
  return "?";
}

std::optional<NamedSet> parse_named_set(std::string_view name) {
  for (NamedSet s : {NamedSet::Fpp, NamedSet::Fp, NamedSet::F, NamedSet::B, NamedSet::G})
    if (set_name(s) == name) return s;
  return std::nullopt;
}

std::vector<RelationInstance> named_set_members(NamedSet s, Size size) {
  const int n = size.value();
  if (n < 4) throw Unsupported("named sets need n >= 4");
  std::vector<RelationInstance> out;
  auto put = [&](Family f, std::vector<int> x) {
    Polynomial p = make_relation(f, x, size);
    out.push_back(RelationInstance{f, std::move(x), std::move(p)});
  };
  switch (s) {
    case NamedSet::Fpp:
      for (int i = 1; i <= n; ++i) put(Family::rs, {i});
      for (int i = 1; i <= n; ++i) put(Family::cs, {i});
      for (int i = 1; i <= n; ++i)
        for (int j = 1; j <= n; ++j) put(Family::ip, {i, j});
      for (auto& x : valid_indices(Family::inj, size)) put(Family::inj, x);
      for (auto& x : valid_indices(Family::wel, size)) put(Family::wel, x);
      break;
    case NamedSet::Fp:
    case NamedSet::F:
      put(Family::cs, {1});
      for (int i = 2; i <= n; ++i) {
        put(Family::cs, {i});
        put(Family::rs, {i});
      }
      for (int i = 2; i <= n; ++i)
        for (int j = 2; j <= n; ++j) put(Family::ip, {i, j});
      for (int i = 2; i <= n; ++i)
        for (int j = 2; j <= n; ++j)
          for (int k = 2; k <= n; ++k)
            if (j != k) {
              put(Family::inj, {j, i, k});
              put(Family::wel, {i, j, k});
            }
      for (int j = 2; j <= n; ++j)
        for (int k = 2; k <= n; ++k)
          if (j != k) {
            put(Family::rinj, {j, k});
            if (s == NamedSet::Fp || j != 2 || k != 3) put(Family::rwel, {j, k});
          }
      break;
    case NamedSet::B:
      for (Family f : {Family::bg2, Family::bg8})
        for (int k = 2; k <= n; ++k)
          for (int j = 2; j <= n; ++j)
            for (int i = 2; i <= n; ++i) {
              if (i == j || j == k) continue;
              if ((k == 2 && j == 3) || (j == 2 && i == 3)) continue;
              if (f == Family::bg8 && k == 2 && j == 4 && i == 3) continue;
              put(f, {k, j, i});
            }
      break;
    case NamedSet::G: {
      out = named_set_members(NamedSet::F, size);
      auto b = named_set_members(NamedSet::B, size);
      out.insert(out.end(), std::make_move_iterator(b.begin()), std::make_move_iterator(b.end()));
      break;
    }
  }
  return out;
}

Basis named_set(NamedSet s, Size n) {
  std::vector<Polynomial> polys;
  for (auto& r : named_set_members(s, n)) polys.push_back(std::move(r.poly));
  Basis b(n, std::move(polys));
  // The raw generating set keeps its written coefficients; the reduced sets are monic.
  return s == NamedSet::Fpp ? b : b.monic();
}

bool reduced_orthogonal_identity_check(int j, int k, Size n) {
  const int jk[] = {j, k};
  if (!is_valid_index(Family::rinj, jk, n)) throw IndexError("invalid index tuple " + label(Family::rinj, jk));
  Polynomial rhs = inj(n, j, 1, k) - rs(n, j) * U(n, k, 1) + U(n, j, 2) * rs(n, k) - inj(n, j, 2, k);
  return rinj(n, j, k) == rhs && rwel(n, j, k) == transpose(rhs);
}

WordProblemResult word_problem(const Polynomial& f, const Polynomial& g) {
  require_same_size(f.size(), g.size());
  const Size n = f.size();
  if (n.value() < 4) throw Unsupported("word problem is only decided here for n >= 4");
  static std::mutex mu;
  static std::map<int, std::shared_ptr<const Basis>> cache;
  std::shared_ptr<const Basis> basis;
  {
    std::lock_guard lock(mu);
    auto& slot = cache[n.value()];
    if (!slot) slot = std::make_shared<const Basis>(named_set(NamedSet::G, n));
    basis = slot;
  }
  Reducer r(*basis);
  Polynomial a = r.reduce(f);
  Polynomial b = r.reduce(g);
  bool eq = a == b;
  return WordProblemResult{eq, std::move(a), std::move(b)};
}

}  // namespace qsym
