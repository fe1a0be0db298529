#include <doctest.h>

#include <string>

#include "qsym/identity.hpp"
#include "qsym/relations.hpp"
#include "qsym/suite.hpp"

using namespace qsym;
using namespace qsym::param;

namespace {

Polynomial sum_family(Family f, Size n, auto keep) {
  Polynomial out(n);
  for (const auto& idx : valid_indices(f, n))
    if (keep(idx)) out += make_relation(f, idx, n);
  return out;
}

}  // namespace

TEST_CASE("identity file parsing") {
  auto id = parse_identity(
      "identity demo\n"
      "samples 5..6\n"
      "family 2 | i1=1 ; i1>=2 | true\n"
      "lhs 2 | n | i1>=2 | x\n"
      "rhs 0 | 1 | i1>=2\n");
  CHECK(id.name == "demo");
  CHECK(id.sample_lo == 5);
  CHECK(id.sample_hi == 6);
  CHECK(id.terms.size() == 2);
  CHECK(id.arities() == std::vector<int>{0, 2});
  CHECK(id.family(2)->members().size() == 2);

  CHECK(parse_sample_range("4..8") == std::pair{4, 8});
  CHECK_THROWS(parse_sample_range("8..4"));
  CHECK_THROWS(parse_sample_range("0..4"));
  try {
    parse_identity("identity x\nlhs 2 | 1 | i1=1\nbogus\n");
    FAIL("expected a parse error");
  } catch (const ParseError& e) {
    CHECK(std::string(e.what()).find("line 3") != std::string::npos);
  }
  CHECK_THROWS(parse_identity("identity x\nlhs 2 | 1 | i3=1\n"));
  CHECK_THROWS(load_identity("/nonexistent/file.qid"));
}

TEST_CASE("row and column identity") {
  auto id = parse_identity(row_column_identity_text());
  auto report = verify_parametric_identity(id);
  CHECK(report.passed());
  for (int size = 4; size <= 6; ++size) {
    Size n(size);
    CHECK(expand_terms(id, n, "cs") == sum_family(Family::cs, n, [](const auto&) { return true; }));
    CHECK(expand_terms(id, n, "rs") == -sum_family(Family::rs, n, [](const auto& i) { return i[0] >= 2; }));
  }
}

TEST_CASE("rwel23 identity verifies and its summands match the relations") {
  auto id = parse_identity(rwel23_identity_text());
  auto report = verify_parametric_identity(id);
  CHECK(report.passed());
  REQUIRE(report.grades.size() == 2);
  CHECK(report.grades[1].declared_members == 400);
  CHECK(report.grades[1].distinct_members == 289);
  CHECK_FALSE(report.grades[1].declared_independent);
  for (const auto& g : report.grades) CHECK(g.matched);
  for (const auto& s : report.samples) {
    CHECK(s.expansion_zero);
    CHECK(s.expansion_matches_bruteforce);
    CHECK(s.counts_match);
  }

  for (int size = 4; size <= 6; ++size) {
    Size n(size);
    CAPTURE(size);
    CHECK(expand_terms(id, n, "rwel23") == make_relation(Family::rwel, {2, 3}, n));
    CHECK(expand_terms(id, n, "s1") == sum_family(Family::rinjcs, n, [](const auto& i) { return i[0] >= 2; }));
    CHECK(expand_terms(id, n, "s6") == -sum_family(Family::rwel, n, [](const auto& i) { return i[0] >= 4 && i[1] == 3; }));
    CHECK(expand_terms(id, n, "s7") ==
          Coefficient(-(size - 2)) * sum_family(Family::rs, n, [](const auto& i) { return i[0] >= 2; }));
  }
}

TEST_CASE("a perturbed identity fails and names the conjunction") {
  auto id = load_identity(QSYM_TEST_FIXTURES "/rwel23_perturbed.qid");
  auto report = verify_parametric_identity(id, std::pair{4, 5});
  CHECK_FALSE(report.passed());
  bool named = false;
  for (const auto& g : report.grades)
    for (const auto& m : g.mismatches)
      if (m.find("i1=2 & i2=3") != std::string::npos) named = true;
  CHECK(named);
  auto text = to_string(report);
  CHECK(text.find("FAIL") != std::string::npos);
}

TEST_CASE("fixture file and compiled copy agree") {
  auto from_file = load_identity(QSYM_IDENTITY_DIR "/rwel23.qid");
  auto compiled = parse_identity(rwel23_identity_text());
  CHECK(from_file.terms.size() == compiled.terms.size());
  CHECK(from_file.name == compiled.name);
}
