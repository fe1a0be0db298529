#pragma once

#include <cstddef>
#include <optional>
#include <string>
#include <vector>

#include "qsym/groebner.hpp"
#include "qsym/relations.hpp"

namespace qsym {

enum class LemmaExpectation {
  zero_mod_F,         // some reduction path modulo F_n reaches 0
  top_reduced_mod_F,  // lm not divisible by any lm of F_n
  zero_mod_G,         // normal form modulo G_n is 0
  overlap_zero_mod_G, // overlap relation between two B_n members reduces to 0 modulo G_n
};
std::string to_string(LemmaExpectation e);

struct LemmaCheck {
  std::string subject;
  LemmaExpectation expect;
  bool passed = false;
  std::string route;  // reduction strategy that succeeded
  std::string detail;
  std::optional<bool> certificate_verified;
};

struct LemmaReport {
  int n = 0;
  std::vector<LemmaCheck> checks;
  std::size_t certificates_verified = 0;
  std::size_t certificates_rejected = 0;
  bool passed() const;
  std::size_t failures() const;
};

// Tries the default reducer first, then longest-divisor-first, then seeded
// random paths. On success returns the route name and its certificate.
struct ZeroReduction {
  std::string route;
  GroebnerCertificate certificate;
};
std::optional<ZeroReduction> search_zero_reduction(const Reducer& r, const Polynomial& p, int random_attempts = 64);

LemmaReport lemma_reduction_suite(Size n);

}  // namespace qsym
