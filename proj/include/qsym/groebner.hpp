#pragma once

#include <array>
#include <cstddef>
#include <cstdint>
#include <optional>
#include <random>
#include <span>
#include <string>
#include <unordered_map>
#include <vector>

#include "qsym/algebra.hpp"

namespace qsym {

// Nonzero polynomials sorted by (lm ascending, canonical text), deduplicated
// up to scalar multiples.
class Basis {
 public:
  explicit Basis(Size n) : n_(n) {}
  Basis(Size n, std::vector<Polynomial> elements);

  Size size() const noexcept { return n_; }
  std::size_t count() const noexcept { return elements_.size(); }
  bool empty() const noexcept { return elements_.empty(); }
  const Polynomial& operator[](std::size_t i) const { return elements_[i]; }
  std::span<const Polynomial> elements() const noexcept { return elements_; }
  auto begin() const noexcept { return elements_.begin(); }
  auto end() const noexcept { return elements_.end(); }

  // Index of an element equal to p up to a nonzero scalar.
  std::optional<std::size_t> find(const Polynomial& p) const;
  Basis monic() const;

  friend bool operator==(const Basis& a, const Basis& b) { return a.n_ == b.n_ && a.elements_ == b.elements_; }

 private:
  Size n_;
  std::vector<Polynomial> elements_;
};

struct CertificateSummand {
  Coefficient coeff;
  Monomial left;
  std::size_t generator;
  Monomial right;
  friend bool operator==(const CertificateSummand&, const CertificateSummand&) = default;
};

// target = sum coeff * left * G[generator] * right
struct GroebnerCertificate {
  Polynomial target;
  std::vector<CertificateSummand> summands;
  friend bool operator==(const GroebnerCertificate&, const GroebnerCertificate&) = default;
};

bool verify_certificate(const GroebnerCertificate& c, const Basis& g);

// Lookup of basis elements whose leading monomial occurs inside a word.
class DivisorIndex {
 public:
  explicit DivisorIndex(const Basis& basis);

  struct Hit {
    std::size_t generator;
    std::size_t position;
  };

  // Smallest generator index dividing w (optionally skipping one), leftmost position.
  std::optional<Hit> first(const Monomial& w, std::optional<std::size_t> skip = std::nullopt) const;
  void all(const Monomial& w, std::vector<Hit>& out) const;
  bool divides_any(const Monomial& w) const { return first(w).has_value(); }

 private:
  static std::uint64_t pack(std::span<const Letter> s);
  const std::vector<std::uint32_t>* lookup(std::span<const Letter> s) const;

  std::vector<std::size_t> lengths_;
  // Words of length <= 4 pack into 64 bits; one table per length.
  std::array<std::unordered_map<std::uint64_t, std::vector<std::uint32_t>>, 5> short_;
  std::unordered_map<Monomial, std::vector<std::uint32_t>, MonomialHash> long_;
};

// Full (tail) reduction against a fixed basis. The default strategy picks the
// first basis element whose lm divides the current leading monomial and its
// leftmost occurrence.
class Reducer {
 public:
  explicit Reducer(const Basis& basis) : basis_(&basis), index_(basis) {}

  const Basis& basis() const noexcept { return *basis_; }
  const DivisorIndex& index() const noexcept { return index_; }

  Polynomial reduce(const Polynomial& f, GroebnerCertificate* log = nullptr,
                    std::optional<std::size_t> skip = std::nullopt) const;
  // Uniformly random (divisor, position) among all reducers of the current term.
  Polynomial reduce_randomized(const Polynomial& f, std::mt19937_64& rng, GroebnerCertificate* log = nullptr) const;
  // Prefer the divisor with the longest leading monomial, then the first index.
  Polynomial reduce_longest_first(const Polynomial& f, GroebnerCertificate* log = nullptr) const;

  // True when f has no term divisible by any leading monomial.
  bool is_reduced(const Polynomial& f) const;

 private:
  template <class Choose>
  Polynomial run(const Polynomial& f, GroebnerCertificate* log, Choose choose) const;

  const Basis* basis_;
  DivisorIndex index_;
};

struct NormalFormResult {
  Polynomial remainder;
  std::optional<GroebnerCertificate> certificate;
};

NormalFormResult normal_form(const Polynomial& f, const Basis& g, bool log = false);

Basis interreduce(const Basis& f);

enum class OverlapKind { overlap_left, overlap_right, division };
std::string to_string(OverlapKind k);

// overlap_left:  lm(f)*a = b*lm(g)
// overlap_right: a*lm(f) = lm(g)*b
// division:      a*lm(f)*b = lm(g)
struct OverlapTask {
  OverlapKind kind;
  std::size_t f_index;
  std::size_t g_index;
  Monomial a;
  Monomial b;
  bool discharged = false;
  friend bool operator==(const OverlapTask&, const OverlapTask&) = default;
};

Monomial ambiguity_word(const OverlapTask& t, const Basis& g);

// Overlaps of lm(G[i]) and lm(G[j]). For i == j only self-overlaps of the
// left kind are produced (the right kind repeats them). Pure concatenations
// are included and flagged discharged unless discharge is false.
std::vector<OverlapTask> enumerate_overlaps(const Basis& g, std::size_t i, std::size_t j, bool discharge = true);
// Every occurrence of lm(G[i]) inside lm(G[j]), i != j.
std::vector<OverlapTask> enumerate_divisions(const Basis& g, std::size_t i, std::size_t j);
// All overlap and division tasks over i <= j (divisions over i != j).
std::vector<OverlapTask> enumerate_all_tasks(const Basis& g, bool discharge = true);

Polynomial overlap_relation(const OverlapTask& t, const Basis& g);

struct GroebnerCheckOptions {
  unsigned jobs = 1;
  bool discharge_concatenation = true;
  bool verify_certificates = false;
};

struct OverlapFailure {
  OverlapTask task;
  Polynomial relation;
  Polynomial normal_form;
};

struct GroebnerCheck {
  bool is_groebner = true;
  std::size_t tasks_total = 0;
  std::size_t tasks_discharged = 0;
  std::size_t tasks_checked = 0;
  std::size_t certificates_verified = 0;
  std::size_t certificates_rejected = 0;
  std::vector<OverlapFailure> failures;
};

GroebnerCheck is_groebner(const Basis& g, const GroebnerCheckOptions& options = {});

struct CompletionConfig {
  std::optional<int> max_degree;
  std::optional<int> max_rounds;
  bool discharge_concatenation_overlaps = true;
  unsigned jobs = 1;
};

enum class CompletionStatus { completed, capped };

struct CompletionResult {
  Basis basis;
  CompletionStatus status;
  int rounds = 0;
  std::size_t relations_reduced = 0;
};

CompletionResult buchberger(const Basis& f, const CompletionConfig& cfg = {});

}  // namespace qsym
