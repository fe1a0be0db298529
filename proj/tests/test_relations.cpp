#include <doctest.h>

#include <set>

#include "qsym/lemmas.hpp"
#include "qsym/relations.hpp"
#include "qsym/text.hpp"

using namespace qsym;

namespace {

Polynomial P(const char* s, int n = 4) { return parse_polynomial(s, Size(n)); }

Monomial W(Size n, std::initializer_list<Variable> v) { return Monomial::of(n, v); }

std::set<Monomial> lms(const Basis& b) {
  std::set<Monomial> out;
  for (const auto& p : b) out.insert(p.lm());
  return out;
}

}  // namespace

TEST_CASE("family names") {
  for (Family f : kAllFamilies) CHECK(parse_family(family_name(f)) == f);
  CHECK_FALSE(parse_family("bg15"));
  CHECK(parse_named_set("Fpp") == NamedSet::Fpp);
  CHECK_FALSE(parse_named_set("H"));
}

TEST_CASE("relation constructors") {
  Size n(4);
  CHECK(make_relation(Family::ip, {2, 2}, n) == P("u[2,2]*u[2,2] - u[2,2]"));
  CHECK(make_relation(Family::rs, {1}, n) == P("u[1,1] + u[1,2] + u[1,3] + u[1,4] - 1"));
  CHECK(make_relation(Family::inj, {1, 2, 3}, n) == P("u[1,2]*u[3,2]"));
  CHECK(make_relation(Family::wel, {1, 2, 3}, n) == P("u[1,2]*u[1,3]"));
  for (int a = 2; a <= 4; ++a)
    for (int b = 2; b <= 4; ++b) {
      if (a == b) continue;
      CHECK(make_relation(Family::rinj, {a, b}, n).lm() == W(n, {{a, 2}, {b, 3}}));
      CHECK(make_relation(Family::rwel, {a, b}, n).lm() == W(n, {{2, a}, {3, b}}));
    }
  CHECK(make_relation(Family::bg8, {2, 4, 3}, n).lm() == W(n, {{2, 2}, {4, 4}, {3, 3}}));
  for (const auto& idx : valid_indices(Family::bg2, n))
    CHECK(make_relation(Family::bg2, idx, n).lm() == W(n, {{idx[0], 2}, {idx[1], 4}, {idx[2], 3}}));

  CHECK_THROWS_AS(make_relation(Family::inj, {1, 2, 1}, n), IndexError);
  CHECK_THROWS_AS(make_relation(Family::rinj, {1, 3}, n), IndexError);
  CHECK_THROWS_AS(make_relation(Family::rs, {5}, n), IndexError);
  CHECK_THROWS_AS(make_relation(Family::rs, {1, 2}, n), IndexError);
  CHECK_THROWS_AS(make_relation(Family::rinj, {2, 3}, Size(3)), Unsupported);
  CHECK_THROWS_AS(named_set(NamedSet::G, Size(3)), Unsupported);
}

TEST_CASE("named set cardinalities") {
  for (int size = 4; size <= 6; ++size) {
    Size n(size);
    long k = size;
    CAPTURE(size);
    auto f = named_set(NamedSet::F, n), b = named_set(NamedSet::B, n), g = named_set(NamedSet::G, n);
    CHECK(f.count() == static_cast<std::size_t>(2 * k * k * k - 5 * k * k + 4 * k - 1));
    CHECK(b.count() == static_cast<std::size_t>(2 * k * (k - 2) * (k - 3) - 1));
    CHECK(g.count() == static_cast<std::size_t>(4 * k * k * k - 15 * k * k + 16 * k - 2));
    CHECK(g.count() == f.count() + b.count());
    for (const auto& p : f) CHECK(g.find(p));
    for (const auto& p : b) {
      CHECK(g.find(p));
      CHECK_FALSE(f.find(p));
    }
    // Observed size of the unreduced generating set.
    CHECK(named_set(NamedSet::Fpp, n).count() == static_cast<std::size_t>(2 * k * k * k - k * k + 2 * k));
    CHECK(named_set(NamedSet::Fp, n).count() == f.count() + 1);
    CHECK_FALSE(f.find(make_relation(Family::rwel, {2, 3}, n)));
  }
  CHECK(named_set(NamedSet::G, Size(4)).count() == 78);
  CHECK(named_set(NamedSet::G, Size(5)).count() == 203);
}

TEST_CASE("G_n is monic and reduced") {
  for (int size : {4, 5}) {
    Size n(size);
    auto g = named_set(NamedSet::G, n);
    DivisorIndex idx(g);
    for (std::size_t i = 0; i < g.count(); ++i) {
      CHECK(g[i].lc() == 1);
      CHECK_FALSE(idx.first(g[i].lm(), i));
    }
    CHECK(lms(g).size() == g.count());
  }
}

TEST_CASE("generating set is star-closed") {
  for (int size : {4, 5, 6}) {
    Size n(size);
    auto fpp = named_set(NamedSet::Fpp, n);
    for (const auto& p : fpp) CHECK(fpp.find(star(p)));
  }
}

TEST_CASE("transpose pairing") {
  for (int size : {4, 5}) {
    Size n(size);
    for (Family f : kAllFamilies)
      for (const auto& idx : valid_indices(f, n)) {
        auto partner = transpose_partner(f, idx);
        auto p = make_relation(f, idx, n);
        if (!partner) {
          CHECK(f == Family::rinjcs);
          continue;
        }
        CAPTURE(label(f, idx));
        CHECK(transpose(p) == Coefficient(partner->sign) * make_relation(partner->family, partner->indices, n));
      }
    CHECK(transpose_partner(Family::bg1, std::vector<int>{3, 2, 4})->family == Family::bg7);
    CHECK(transpose_partner(Family::bg2, std::vector<int>{3, 2, 4})->family == Family::bg8);
    auto p11 = transpose_partner(Family::bg11, std::vector<int>{2, 3, 4});
    REQUIRE(p11);
    CHECK(p11->family == Family::bg13);
    CHECK(transpose_partner(Family::bg9, std::vector<int>{2, 3, 4})->sign == -1);
  }
}

TEST_CASE("reduced orthogonal identity") {
  CHECK(reduced_orthogonal_identity_check(2, 3, Size(4)));
  for (int size : {4, 5, 6})
    for (int j = 2; j <= size; ++j)
      for (int k = 2; k <= size; ++k)
        if (j != k) CHECK(reduced_orthogonal_identity_check(j, k, Size(size)));
  CHECK_THROWS(reduced_orthogonal_identity_check(2, 2, Size(4)));
  Size n(4);
  CHECK(transpose(make_relation(Family::rinj, {3, 2}, n)) == make_relation(Family::rwel, {3, 2}, n));
}

TEST_CASE("no self-overlaps in bg2 or bg8, none between bg8 and rwel") {
  Size n(5);
  std::vector<Polynomial> bg2, bg8, rwel;
  for (const auto& i : valid_indices(Family::bg2, n)) bg2.push_back(make_relation(Family::bg2, i, n));
  for (const auto& i : valid_indices(Family::bg8, n)) bg8.push_back(make_relation(Family::bg8, i, n));
  for (const auto& i : valid_indices(Family::rwel, n)) rwel.push_back(make_relation(Family::rwel, i, n));
  auto live = [](const Basis& b) {
    std::size_t count = 0;
    for (const auto& t : enumerate_all_tasks(b))
      if (!t.discharged) ++count;
    return count;
  };
  CHECK(live(Basis(n, bg2)) == 0);
  CHECK(live(Basis(n, bg8)) == 0);
  auto mixed = bg8;
  mixed.insert(mixed.end(), rwel.begin(), rwel.end());
  CHECK(live(Basis(n, mixed)) == live(Basis(n, rwel)));
}

TEST_CASE("lemma battery at n = 4") {
  auto report = lemma_reduction_suite(Size(4));
  CHECK(report.passed());
  CHECK(report.failures() == 0);
  CHECK(report.certificates_rejected == 0);
  CHECK(report.certificates_verified > 0);
  CHECK_THROWS_AS(lemma_reduction_suite(Size(3)), Unsupported);
}

TEST_CASE("excluded bad guys reduce modulo G_n") {
  for (int size : {4, 5}) {
    Size n(size);
    auto g = named_set(NamedSet::G, n);
    CHECK(normal_form(make_relation(Family::bg8, {2, 4, 3}, n), g).remainder.is_zero());
    CHECK(normal_form(make_relation(Family::bg2, {2, 3, 4}, n), g).remainder.is_zero());
    CHECK(normal_form(make_relation(Family::bg2, {4, 2, 3}, n), g).remainder.is_zero());
    CHECK(normal_form(make_relation(Family::bg8, {2, 3, 4}, n), g).remainder.is_zero());
  }
}

TEST_CASE("word problem") {
  auto r = word_problem(P("u[1,1]*u[1,2]"), P("0"));
  CHECK(r.equivalent);
  CHECK(r.lhs_normal_form.is_zero());
  r = word_problem(P("u[2,2]*u[3,3]"), P("u[3,3]*u[2,2]"));
  CHECK_FALSE(r.equivalent);
  CHECK(r.lhs_normal_form != r.rhs_normal_form);
  auto f = P("u[2,3]*u[4,1]*u[1,1] - 7/3*u[2,2]");
  CHECK(word_problem(f, f).equivalent);
  CHECK(word_problem(P("u[1,1] + u[1,2] + u[1,3] + u[1,4]"), P("1")).equivalent);
  CHECK_THROWS_AS(word_problem(P("u[1,1]", 3), P("0", 3)), Unsupported);
  CHECK_THROWS_AS(word_problem(P("u[1,1]", 4), P("0", 5)), SizeMismatch);
}
