#include "qsym/lemmas.hpp"

#include <algorithm>

#include "qsym/text.hpp"

namespace qsym {

std::string to_string(LemmaExpectation e) {
  switch (e) {
    case LemmaExpectation::zero_mod_F: return "zero mod F";
    case LemmaExpectation::top_reduced_mod_F: return "lm irreducible mod F";
    case LemmaExpectation::zero_mod_G: return "zero mod G";
    case LemmaExpectation::overlap_zero_mod_G: return "overlap zero mod G";
  }
  return "?";
}

bool LemmaReport::passed() const { return failures() == 0 && certificates_rejected == 0; }

std::size_t LemmaReport::failures() const {
  return static_cast<std::size_t>(std::count_if(checks.begin(), checks.end(), [](const auto& c) { return !c.passed; }));
}

std::optional<ZeroReduction> search_zero_reduction(const Reducer& r, const Polynomial& p, int random_attempts) {
  ZeroReduction z{"", GroebnerCertificate{Polynomial(p.size()), {}}};
  if (r.reduce(p, &z.certificate).is_zero()) {
    z.route = "default";
    return z;
  }
  if (r.reduce_longest_first(p, &z.certificate).is_zero()) {
    z.route = "longest-first";
    return z;
  }
  for (int seed = 1; seed <= random_attempts; ++seed) {
    std::mt19937_64 rng(static_cast<std::uint64_t>(seed));
    if (r.reduce_randomized(p, rng, &z.certificate).is_zero()) {
      z.route = "random seed " + std::to_string(seed);
      return z;
    }
  }
  return std::nullopt;
}

namespace {

void record_certificate(LemmaReport& report, LemmaCheck& check, const GroebnerCertificate& cert, const Basis& basis) {
  bool ok = verify_certificate(cert, basis);
  check.certificate_verified = ok;
  ++(ok ? report.certificates_verified : report.certificates_rejected);
  if (!ok) check.passed = false;
}

LemmaCheck make_check(std::string subject, LemmaExpectation expect) {
  LemmaCheck c;
  c.subject = std::move(subject);
  c.expect = expect;
  return c;
}

bool is_deferred(Family f, const std::vector<int>& x) {
  if (f != Family::bg2 && f != Family::bg8) return false;
  if ((x[0] == 2 && x[1] == 3) || (x[1] == 2 && x[2] == 3)) return true;
  return f == Family::bg8 && x == std::vector<int>{2, 4, 3};
}

}  // namespace

LemmaReport lemma_reduction_suite(Size n) {
  if (n.value() < 4) throw Unsupported("lemma battery needs n >= 4");
  LemmaReport report;
  report.n = n.value();
  const Basis F = named_set(NamedSet::F, n);
  const Basis G = named_set(NamedSet::G, n);
  const Reducer rf(F);
  const Reducer rg(G);

  // Overlap families expected to vanish modulo F_n.
  for (Family f : kAllFamilies) {
    if (!is_bad_guy(f) || f == Family::bg2 || f == Family::bg8) continue;
    for (const auto& x : valid_indices(f, n)) {
      if (uses_rwel23(f, x)) continue;
      LemmaCheck check = make_check(label(f, x), LemmaExpectation::zero_mod_F);
      Polynomial p = make_relation(f, x, n);
      if (auto z = search_zero_reduction(rf, p)) {
        check.passed = true;
        check.route = z->route;
        record_certificate(report, check, z->certificate, F);
      } else {
        check.detail = "default normal form " + to_string(rf.reduce(p));
      }
      report.checks.push_back(std::move(check));
    }
  }

  // B_n members: leading monomials survive F_n.
  for (const auto& r : named_set_members(NamedSet::B, n)) {
    LemmaCheck check = make_check(label(r), LemmaExpectation::top_reduced_mod_F);
    check.passed = !rf.index().divides_any(r.poly.lm());
    check.detail = "lm " + to_string(r.poly.lm(), n) + (rf.is_reduced(r.poly) ? ", fully reduced" : ", tail reducible");
    report.checks.push_back(std::move(check));
  }

  // Deferred bg2 / bg8 tuples, modulo G_n.
  for (Family f : {Family::bg2, Family::bg8}) {
    for (const auto& x : valid_indices(f, n)) {
      if (!is_deferred(f, x)) continue;
      LemmaCheck check = make_check(label(f, x), LemmaExpectation::zero_mod_G);
      GroebnerCertificate cert{Polynomial(n), {}};
      Polynomial nf = rg.reduce(make_relation(f, x, n), &cert);
      check.passed = nf.is_zero();
      check.route = "default";
      if (!check.passed) check.detail = "normal form " + to_string(nf);
      record_certificate(report, check, cert, G);
      report.checks.push_back(std::move(check));
    }
  }

  // Mutual overlaps among B_n members inside G_n.
  std::vector<std::size_t> members;
  for (const auto& r : named_set_members(NamedSet::B, n))
    if (auto at = G.find(r.poly)) members.push_back(*at);
  std::sort(members.begin(), members.end());
  for (std::size_t ii = 0; ii < members.size(); ++ii) {
    for (std::size_t jj = ii; jj < members.size(); ++jj) {
      for (const auto& task : enumerate_overlaps(G, members[ii], members[jj])) {
        if (task.discharged) continue;
        LemmaCheck check = make_check("overlap " + to_string(task.kind) + " of G[" + std::to_string(task.f_index) +
                                          "], G[" + std::to_string(task.g_index) + "] at " +
                                          to_string(ambiguity_word(task, G), n),
                                      LemmaExpectation::overlap_zero_mod_G);
        GroebnerCertificate cert{Polynomial(n), {}};
        Polynomial nf = rg.reduce(overlap_relation(task, G), &cert);
        check.passed = nf.is_zero();
        check.route = "default";
        if (!check.passed) check.detail = "normal form " + to_string(nf);
        record_certificate(report, check, cert, G);
        report.checks.push_back(std::move(check));
      }
    }
  }
  return report;
}

}  // namespace qsym
