#include <doctest.h>

#include <random>

#include "qsym/param.hpp"

using namespace qsym;
using namespace qsym::param;

namespace {

PredicateFamily first_coordinate_family() {
  return {parse_conjunction("i1=1", 1), parse_conjunction("i1=2", 1),
          parse_conjunction("i1=3", 1), parse_conjunction("i1>=4", 1)};
}

Conjunction random_conjunction(std::mt19937_64& rng, int arity) {
  std::vector<Atom> atoms;
  std::uniform_int_distribution<int> pick(0, 5), c(1, 3), coord(1, arity);
  for (int i = 1; i <= arity; ++i) {
    int k = pick(rng);
    if (k == 0) atoms.push_back(eq(i, c(rng)));
    if (k == 1 || k == 2) atoms.push_back(ge(i, c(rng) + 1));
  }
  for (int t = pick(rng) % 3; t > 0; --t) {
    int a = coord(rng), b = coord(rng);
    if (a != b) atoms.push_back(neq(a, b));
  }
  return Conjunction(arity, atoms);
}

}  // namespace

TEST_CASE("parameter polynomials") {
  auto n = ParamPoly::n();
  auto p = n * n - 3 * n + 2;
  CHECK(to_string(p) == "n^2 - 3*n + 2");
  CHECK(parse_param_poly("n^2 - 3*n + 2") == p);
  CHECK(parse_param_poly("(n-1)*(n-2)") == p);
  CHECK(parse_param_poly("-(n-2)") == 2 - n);
  CHECK(p.evaluate(5) == 12);
  CHECK((p - p).is_zero());
  CHECK(to_string(ParamPoly()) == "0");
  CHECK_THROWS_AS(parse_param_poly("n^"), ParseError);
  CHECK_THROWS_AS(parse_param_poly("m"), ParseError);
  CHECK_THROWS_AS(parse_param_poly("(n"), ParseError);
}

TEST_CASE("conjunction text") {
  auto c = parse_conjunction("i2>=3 & i1=2 & i2!=i1");
  CHECK(c.arity() == 2);
  CHECK(parse_conjunction(to_string(c), 2) == c);
  CHECK(parse_conjunction("i1!=i2") == parse_conjunction("i2!=i1"));
  CHECK(to_string(Conjunction(3, {})) == "true");
  CHECK(parse_conjunction("true", 2).atoms().empty());
  CHECK(c.max_constant() == 3);
  int x[] = {2, 4};
  int y[] = {2, 2};
  CHECK(c.holds(x));
  CHECK_FALSE(c.holds(y));
  CHECK_THROWS(parse_conjunction("i1<2"));
  CHECK_THROWS(parse_conjunction("i1=0"));
  CHECK_THROWS(parse_conjunction("i1!=i1"));
  CHECK_THROWS(parse_conjunction("i3=1", 2));
}

TEST_CASE("counting oracles") {
  auto a = count_satisfying(parse_conjunction("i1>=2", 1));
  CHECK(a.value == ParamPoly::n() - 1);
  auto b = count_satisfying(parse_conjunction("i1>=2 & i2>=2 & i1!=i2", 2));
  CHECK(b.value == (ParamPoly::n() - 1) * (ParamPoly::n() - 2));
  auto c = count_satisfying(parse_conjunction("i1=1 & i2!=i1 & i3!=i1 & i3!=i2", 3));
  CHECK(c.value == (ParamPoly::n() - 1) * (ParamPoly::n() - 2));

  std::mt19937_64 rng(41);
  for (int it = 0; it < 300; ++it) {
    auto p = random_conjunction(rng, 1 + it % 4);
    auto count = count_satisfying(p);
    CAPTURE(to_string(p));
    for (int n = count.valid_from; n <= 7; ++n) CHECK(count.value.evaluate(n) == count_bruteforce(p, n));
  }
}

TEST_CASE("independence and decomposition") {
  auto p = parse_conjunction("i1>=2", 1);
  CHECK_FALSE(check_independence({p, p}, 1, 6));
  auto fam = first_coordinate_family();
  CHECK(check_independence(fam, 1, min_test_size(fam, 1)));
  CHECK(min_test_size(fam, 1) == 7);

  IndicatorSpace space(fam, 1, 7);
  CHECK(space.rank() == 4);
  auto e = space.decompose([](std::span<const int> x) { return x[0] >= 2; });
  Element expect(1);
  expect.add(fam[1], 1);
  expect.add(fam[2], 1);
  expect.add(fam[3], 1);
  CHECK(e == expect);
  CHECK_THROWS_AS(space.decompose([](std::span<const int> x) { return x[0] >= 5; }), NotRepresentable);

  IndicatorSpace dup({p, p}, 1, 6);
  CHECK_FALSE(dup.independent());
  CHECK(dup.duplicates().size() == 1);
  CHECK_THROWS_AS(dup.decompose([](std::span<const int> x) { return x[0] >= 2; }), InvalidArgument);
}

TEST_CASE("range decomposition") {
  std::vector<std::vector<Conjunction>> per = {
      {parse_conjunction("i1>=2", 2)},
      {parse_conjunction("i2=1", 2), parse_conjunction("i2>=2", 2), parse_conjunction("i2>=2 & i2!=i1", 2)}};
  auto fam = product_family(per);
  CHECK(fam.size() == 3);
  RangeSpec r;
  r.coords = {{2, {}}, {1, {}}};
  r.neq = {{1, 2}};
  int N = min_test_size(fam, 2);
  auto e = decompose(r, fam, N);
  for (int n = 4; n <= 7; ++n) {
    Element direct(2);
    direct.add(parse_conjunction("i1>=2 & i2!=i1", 2), 1);
    CHECK(phi_expand(e, Size(n)) == phi_expand(direct, Size(n)));
  }
}

TEST_CASE("expansion map") {
  std::mt19937_64 rng(43);
  auto n = ParamPoly::n();
  for (int it = 0; it < 100; ++it) {
    int arity = 2 * (1 + it % 2);
    Element a(arity), b(arity);
    a.add(random_conjunction(rng, arity), n - 2);
    a.add(random_conjunction(rng, arity), 3);
    b.add(random_conjunction(rng, arity), -1);
    for (int size : {4, 5}) {
      Size s(size);
      CHECK(phi_expand(a, s) == phi_expand_bruteforce(a, s));
      CHECK(phi_expand(a + b, s) == phi_expand(a, s) + phi_expand(b, s));
      CHECK(phi_expand(n * a, s) == Coefficient(size) * phi_expand(a, s));
    }
  }
  Element constant(0);
  constant.add(parse_conjunction("i1>=2", 1), n);
  CHECK(phi_expand(constant, Size(5)) == Polynomial::constant(Size(5), 20));
}

TEST_CASE("expansion is injective on independent families") {
  std::vector<std::vector<Conjunction>> per = {
      {parse_conjunction("i1=2", 2), parse_conjunction("i1>=3", 2)},
      {parse_conjunction("i2=1", 2), parse_conjunction("i2>=2", 2), parse_conjunction("i2>=2 & i2!=i1", 2)}};
  auto fam = product_family(per);
  int N = min_test_size(fam, 2);
  REQUIRE(check_independence(fam, 2, N));
  std::mt19937_64 rng(47);
  std::uniform_int_distribution<int> coeff(-2, 2);
  for (int it = 0; it < 200; ++it) {
    Element e(2);
    for (const auto& c : fam) e.add(c, coeff(rng));
    CHECK(e.is_zero() == phi_expand(e, Size(N)).is_zero());
  }
}

TEST_CASE("overlapping coordinate options are dependent") {
  std::vector<std::vector<Conjunction>> per(4);
  for (int i = 1; i <= 4; ++i) {
    auto s = "i" + std::to_string(i);
    for (const char* c : {"=1", "=2", "=3", ">=4"}) per[i - 1].push_back(parse_conjunction(s + c, 4));
  }
  per[2].push_back(parse_conjunction("i3>=4 & i3!=i1", 4));
  per[3].push_back(parse_conjunction("i4>=4 & i4!=i2", 4));
  auto fam = product_family(per);
  CHECK(fam.size() == 400);
  IndicatorSpace space(fam, 4, min_test_size(fam, 4));
  CHECK(space.rank() == 289);
  CHECK(space.distinct_members().size() == 289);
  CHECK_FALSE(space.independent());
  CHECK(check_independence(space.distinct_members(), 4, space.test_size()));
}
