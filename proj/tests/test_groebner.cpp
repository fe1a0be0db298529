#include <doctest.h>

#include <algorithm>
#include <random>
#include <set>

#include "qsym/certificate.hpp"
#include "qsym/groebner.hpp"
#include "qsym/relations.hpp"
#include "qsym/text.hpp"

using namespace qsym;

namespace {

Polynomial P(const char* s, int n = 4) { return parse_polynomial(s, Size(n)); }

Basis family_basis(std::initializer_list<Family> fams, Size n) {
  std::vector<Polynomial> out;
  for (Family f : fams)
    for (const auto& idx : valid_indices(f, n)) out.push_back(make_relation(f, idx, n));
  return Basis(n, std::move(out));
}

std::set<Monomial> lm_set(const Basis& b) {
  std::set<Monomial> out;
  for (const auto& p : b) out.insert(p.lm());
  return out;
}

Polynomial random_poly(std::mt19937_64& rng, Size n, int max_len) {
  std::uniform_int_distribution<int> len(0, max_len), letter(1, n.variable_count()), c(-3, 3), terms(1, 4);
  Polynomial p(n);
  for (int t = terms(rng); t > 0; --t) {
    Monomial::Letters w;
    for (int k = len(rng); k > 0; --k) w.push_back(static_cast<Letter>(letter(rng)));
    p += Polynomial::monomial(n, Monomial(w), c(rng));
  }
  return p;
}

}  // namespace

TEST_CASE("basis ordering and deduplication") {
  Size n(4);
  Basis b(n, {P("2*u[1,1]"), P("u[2,2]*u[2,2] - u[2,2]"), P("u[1,1]"), P("-3*u[1,1]")});
  CHECK(b.count() == 2);
  CHECK(b[0].lm() < b[1].lm());
  CHECK(b.find(P("5*u[1,1]")).has_value());
  CHECK_FALSE(b.find(P("u[1,2]")).has_value());
  for (const auto& p : b.monic()) CHECK(p.lc() == 1);
  CHECK(Basis(n, {Polynomial(n)}).empty());
}

TEST_CASE("normal form examples") {
  for (int size : {3, 4, 5}) {
    Size n(size);
    std::vector<Polynomial> g;
    for (int i = 1; i <= size; ++i) g.push_back(make_relation(Family::cs, {i}, n));
    for (int i = 2; i <= size; ++i) g.push_back(make_relation(Family::rs, {i}, n));
    Basis basis(n, g);
    auto r = normal_form(make_relation(Family::rs, {1}, n), basis, true);
    CHECK(r.remainder.is_zero());
    REQUIRE(r.certificate);
    CHECK(verify_certificate(*r.certificate, basis));
  }
  auto g4 = named_set(NamedSet::G, Size(4));
  CHECK(normal_form(Polynomial(Size(4)), g4).remainder.is_zero());
  CHECK_FALSE(normal_form(P("u[2,2]*u[3,3] - u[3,3]*u[2,2]"), g4).remainder.is_zero());
  CHECK(normal_form(P("u[1,1]"), Basis(Size(4))).remainder == P("u[1,1]"));
}

TEST_CASE("normal form is reduced, idempotent and certified") {
  Size n(4);
  auto g4 = named_set(NamedSet::G, n);
  Reducer red(g4);
  std::mt19937_64 rng(17);
  for (int it = 0; it < 300; ++it) {
    auto f = random_poly(rng, n, 4);
    GroebnerCertificate cert{Polynomial(n), {}};
    auto r = red.reduce(f, &cert);
    CHECK(red.is_reduced(r));
    CHECK(red.reduce(r) == r);
    CHECK(cert.target == f - r);
    CHECK(verify_certificate(cert, g4));
  }
}

TEST_CASE("diamond property on G_4") {
  Size n(4);
  auto g4 = named_set(NamedSet::G, n);
  Reducer red(g4);
  std::mt19937_64 rng(23), path(29);
  for (int it = 0; it < 300; ++it) {
    auto f = random_poly(rng, n, 4);
    auto r = red.reduce(f);
    CHECK(red.reduce_randomized(f, path) == r);
    CHECK(red.reduce_longest_first(f) == r);
  }
}

TEST_CASE("certificates round-trip and reject tampering") {
  Size n(4);
  auto g4 = named_set(NamedSet::G, n);
  auto r = normal_form(P("u[1,1]*u[1,2] + 1/3*u[2,3]*u[3,2]*u[2,3]"), g4, true);
  REQUIRE(r.certificate);
  const auto& c = *r.certificate;
  REQUIRE(verify_certificate(c, g4));
  auto text = to_string(c);
  auto back = parse_certificate(text);
  CHECK(back == c);
  CHECK(to_string(back) == text);

  REQUIRE_FALSE(c.summands.empty());
  auto bad = c;
  bad.summands[0].coeff += 1;
  CHECK_FALSE(verify_certificate(bad, g4));
  bad = c;
  bad.summands[0].generator = g4.count();
  CHECK_THROWS_AS(verify_certificate(bad, g4), InvalidArgument);
  bad = c;
  bad.target += P("u[4,4]");
  CHECK_FALSE(verify_certificate(bad, g4));
  // Adding and cancelling a summand above lm(target) breaks the lm bound.
  bad = c;
  Monomial big = Monomial::of(n, {{1, 1}, {1, 1}, {1, 1}, {1, 1}});
  bad.summands.push_back({1, big, 0, {}});
  bad.summands.push_back({-1, big, 0, {}});
  CHECK_FALSE(verify_certificate(bad, g4));

  CHECK_THROWS_AS(parse_certificate("qsym-certificate 2\n"), ParseError);
  CHECK_THROWS_AS(parse_certificate(text.substr(0, text.size() / 2)), ParseError);
}

TEST_CASE("interreduction") {
  Size n(4);
  auto one = interreduce(Basis(n, {P("u[1,1]"), P("2*u[1,1]")}));
  REQUIRE(one.count() == 1);
  CHECK(one[0] == P("u[1,1]"));
  auto two = interreduce(Basis(n, {P("u[2,2]*u[2,2] - u[2,2]"), P("u[2,2]")}));
  REQUIRE(two.count() == 1);
  CHECK(two[0] == P("u[2,2]"));

  auto fpp = interreduce(named_set(NamedSet::Fpp, n));
  auto f = named_set(NamedSet::F, n);
  CHECK(fpp.count() == 63);
  CHECK(lm_set(fpp) == lm_set(f));
  Reducer red(fpp);
  for (std::size_t i = 0; i < fpp.count(); ++i) {
    CHECK(fpp[i].lc() == 1);
    CHECK(red.reduce(fpp[i], nullptr, i) == fpp[i]);
  }
}

TEST_CASE("overlap enumeration") {
  Size n(4);
  Basis ip(n, {make_relation(Family::ip, {2, 3}, n)});
  auto self = enumerate_overlaps(ip, 0, 0);
  auto live = std::count_if(self.begin(), self.end(), [](const auto& t) { return !t.discharged; });
  CHECK(live == 1);
  for (const auto& t : self)
    if (!t.discharged) CHECK(overlap_relation(t, ip).is_zero());

  Basis disjoint(n, {P("u[2,2]"), P("u[3,3]")});
  for (const auto& t : enumerate_overlaps(disjoint, 0, 1)) CHECK(t.discharged);
  CHECK(enumerate_overlaps(disjoint, 0, 1, false).size() == 2);

  Basis div(n, {P("u[2,2]"), P("u[1,1]*u[2,2]*u[2,2]")});
  auto d = enumerate_divisions(div, 0, 1);
  CHECK(d.size() == 2);
  for (const auto& t : d) CHECK(t.kind == OverlapKind::division);

  // inj_{i2j} against rinj_{jk}: the overlap relation lands on bg1.
  auto inj = make_relation(Family::inj, {3, 2, 2}, n);
  auto rinj = make_relation(Family::rinj, {2, 4}, n);
  Basis pair(n, {inj, rinj});
  bool found = false;
  for (std::size_t i = 0; i < 2; ++i)
    for (std::size_t j = 0; j < 2; ++j)
      for (const auto& t : enumerate_overlaps(pair, i, j)) {
        if (t.discharged) continue;
        auto rel = overlap_relation(t, pair);
        if (!rel.is_zero()) CHECK(rel.lm() < ambiguity_word(t, pair));
        if (Basis(n, {rel}).find(make_relation(Family::bg1, {3, 2, 4}, n))) found = true;
      }
  CHECK(found);

  auto bg8 = make_relation(Family::bg8, {2, 4, 3}, n);
  CHECK(bg8.lm() == Monomial::of(n, {{2, 2}, {4, 4}, {3, 3}}));
}

TEST_CASE("groebner checks") {
  Size n(4);
  CHECK(is_groebner(family_basis({Family::inj, Family::wel}, n)).is_groebner);
  CHECK(is_groebner(family_basis({Family::ip}, n)).is_groebner);

  GroebnerCheckOptions opt;
  opt.jobs = 2;
  opt.verify_certificates = true;
  auto g4 = is_groebner(named_set(NamedSet::G, n), opt);
  CHECK(g4.is_groebner);
  CHECK(g4.certificates_rejected == 0);
  CHECK(g4.tasks_checked + g4.tasks_discharged == g4.tasks_total);

  auto f4 = named_set(NamedSet::F, n);
  auto bad = is_groebner(f4);
  CHECK_FALSE(bad.is_groebner);
  REQUIRE_FALSE(bad.failures.empty());
  // A failing overlap gives an ambiguity with two different normal forms.
  Reducer red(f4);
  bool split = false;
  for (const auto& fail : bad.failures) {
    const auto& t = fail.task;
    if (t.kind == OverlapKind::division) continue;
    auto w = Polynomial::monomial(n, ambiguity_word(t, f4));
    const auto& f = f4[t.f_index];
    const auto& g = f4[t.g_index];
    Polynomial via_f = t.kind == OverlapKind::overlap_left ? multiply(1 / f.lc(), {}, f, t.a) : multiply(1 / f.lc(), t.a, f, {});
    Polynomial via_g = t.kind == OverlapKind::overlap_left ? multiply(1 / g.lc(), t.b, g, {}) : multiply(1 / g.lc(), {}, g, t.b);
    if (red.reduce(w - via_f) != red.reduce(w - via_g)) {
      split = true;
      break;
    }
  }
  CHECK(split);
}

TEST_CASE("extended relations keep the Groebner property") {
  Size n(4);
  auto ip = family_basis({Family::ip}, n);
  std::vector<Polynomial> ext(ip.begin(), ip.end());
  ext.push_back(multiply(1, Monomial::of(n, {{1, 1}}), make_relation(Family::ip, {2, 2}, n), Monomial::of(n, {{3, 3}})));
  ext.push_back(make_relation(Family::ip, {1, 1}, n) + make_relation(Family::ip, {4, 4}, n));
  CHECK(is_groebner(Basis(n, ext)).is_groebner);
}

TEST_CASE("buchberger") {
  Size n(4);
  CHECK(buchberger(Basis(n)).basis.empty());
  CHECK(buchberger(Basis(n)).status == CompletionStatus::completed);

  std::vector<Polynomial> sums, expect;
  for (int i = 1; i <= 4; ++i) {
    sums.push_back(make_relation(Family::rs, {i}, n));
    sums.push_back(make_relation(Family::cs, {i}, n));
    expect.push_back(make_relation(Family::cs, {i}, n));
    if (i > 1) expect.push_back(make_relation(Family::rs, {i}, n));
  }
  auto r = buchberger(Basis(n, sums));
  CHECK(r.status == CompletionStatus::completed);
  CHECK(lm_set(r.basis) == lm_set(Basis(n, expect)));
  CHECK(is_groebner(r.basis).is_groebner);

  CompletionConfig capped;
  capped.max_rounds = 1;
  CHECK(buchberger(named_set(NamedSet::Fpp, n), capped).status == CompletionStatus::capped);
}
