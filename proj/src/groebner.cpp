#include "qsym/groebner.hpp"

#include <algorithm>
#include <map>
#include <set>
#include <thread>

#include "qsym/text.hpp"

namespace qsym {

// ---------------------------------------------------------------- Basis

Basis::Basis(Size n, std::vector<Polynomial> elements) : n_(n) {
  struct Entry {
    Polynomial poly;
    Polynomial monic;
    mutable std::optional<std::string> text;
    const std::string& key() const {
      if (!text) text = to_string(poly);
      return *text;
    }
  };
  std::vector<Entry> entries;
  entries.reserve(elements.size());
  for (auto& p : elements) {
    require_same_size(n, p.size());
    if (p.is_zero()) continue;
    Polynomial m = p.monic();
    entries.push_back(Entry{std::move(p), std::move(m), std::nullopt});
  }
  std::sort(entries.begin(), entries.end(), [](const Entry& a, const Entry& b) {
    if (auto c = a.poly.lm() <=> b.poly.lm(); c != 0) return c < 0;
    return a.key() < b.key();
  });
  // Scalar multiples share an lm, so duplicates sit in one lm block.
  for (std::size_t i = 0; i < entries.size(); ++i) {
    bool duplicate = false;
    for (std::size_t j = elements_.size(); j-- > 0;) {
      if (elements_[j].lm() != entries[i].poly.lm()) break;
      if (elements_[j].monic() == entries[i].monic) {
        duplicate = true;
        break;
      }
    }
    if (!duplicate) elements_.push_back(std::move(entries[i].poly));
  }
}

std::optional<std::size_t> Basis::find(const Polynomial& p) const {
  if (p.is_zero() || p.size() != n_) return std::nullopt;
  auto it = std::lower_bound(elements_.begin(), elements_.end(), p.lm(),
                             [](const Polynomial& e, const Monomial& w) { return e.lm() < w; });
  Polynomial target = p.monic();
  for (; it != elements_.end() && it->lm() == p.lm(); ++it)
    if (it->monic() == target) return static_cast<std::size_t>(it - elements_.begin());
  return std::nullopt;
}

Basis Basis::monic() const {
  std::vector<Polynomial> out;
  out.reserve(elements_.size());
  for (const auto& p : elements_) out.push_back(p.monic());
  return Basis(n_, std::move(out));
}

// ---------------------------------------------------------------- certificates

bool verify_certificate(const GroebnerCertificate& c, const Basis& g) {
  require_same_size(c.target.size(), g.size());
  std::vector<Term> terms;
  for (const auto& s : c.summands) {
    if (s.generator >= g.count())
      throw InvalidArgument("certificate generator index " + std::to_string(s.generator) + " outside basis of size " +
                            std::to_string(g.count()));
    if (sgn(s.coeff) == 0) continue;
    const Polynomial& gen = g[s.generator];
    if (c.target.is_zero()) return false;
    Monomial top = s.left * gen.lm();
    top *= s.right;
    if (top > c.target.lm()) return false;
    for (const auto& t : gen.terms()) {
      Monomial w = s.left * t.word;
      w *= s.right;
      terms.push_back(Term{s.coeff * t.coeff, std::move(w)});
    }
  }
  return Polynomial(g.size(), std::move(terms)) == c.target;
}

// ---------------------------------------------------------------- divisor index

DivisorIndex::DivisorIndex(const Basis& basis) {
  std::set<std::size_t> lengths;
  for (std::size_t i = 0; i < basis.count(); ++i) {
    const Monomial& w = basis[i].lm();
    lengths.insert(w.degree());
    if (w.degree() <= 4)
      short_[w.degree()][pack(w.letters())].push_back(static_cast<std::uint32_t>(i));
    else
      long_[w].push_back(static_cast<std::uint32_t>(i));
  }
  lengths_.assign(lengths.begin(), lengths.end());
}

std::uint64_t DivisorIndex::pack(std::span<const Letter> s) {
  std::uint64_t k = 0;
  for (Letter x : s) k = (k << 16) | x;
  return k;
}

const std::vector<std::uint32_t>* DivisorIndex::lookup(std::span<const Letter> s) const {
  if (s.size() <= 4) {
    const auto& table = short_[s.size()];
    auto it = table.find(pack(s));
    return it == table.end() ? nullptr : &it->second;
  }
  auto it = long_.find(Monomial(s));
  return it == long_.end() ? nullptr : &it->second;
}

std::optional<DivisorIndex::Hit> DivisorIndex::first(const Monomial& w, std::optional<std::size_t> skip) const {
  std::optional<Hit> best;
  auto letters = w.letters();
  for (std::size_t len : lengths_) {
    if (len > letters.size()) break;
    for (std::size_t pos = 0; pos + len <= letters.size(); ++pos) {
      const auto* bucket = lookup(letters.subspan(pos, len));
      if (!bucket) continue;
      for (std::uint32_t gi : *bucket) {
        if (skip && gi == *skip) continue;
        if (!best || gi < best->generator) best = Hit{gi, pos};
        break;
      }
    }
  }
  return best;
}

void DivisorIndex::all(const Monomial& w, std::vector<Hit>& out) const {
  out.clear();
  auto letters = w.letters();
  for (std::size_t len : lengths_) {
    if (len > letters.size()) break;
    for (std::size_t pos = 0; pos + len <= letters.size(); ++pos)
      if (const auto* bucket = lookup(letters.subspan(pos, len)))
        for (std::uint32_t gi : *bucket) out.push_back(Hit{gi, pos});
  }
}

// ---------------------------------------------------------------- reduction

template <class Choose>
Polynomial Reducer::run(const Polynomial& f, GroebnerCertificate* log, Choose choose) const {
  require_same_size(f.size(), basis_->size());
  std::map<Monomial, Coefficient, std::greater<Monomial>> work;
  for (const auto& t : f.terms()) work.emplace(t.word, t.coeff);
  std::vector<Term> remainder;
  if (log) log->summands.clear();

  while (!work.empty()) {
    auto top = work.begin();
    std::optional<DivisorIndex::Hit> hit = choose(top->first);
    if (!hit) {
      remainder.push_back(Term{std::move(top->second), top->first});
      work.erase(top);
      continue;
    }
    const Polynomial& g = (*basis_)[hit->generator];
    const Monomial& w = top->first;
    const std::size_t len = g.lm().degree();
    Monomial left = w.subword(0, hit->position);
    Monomial right = w.subword(hit->position + len, w.degree() - hit->position - len);
    Coefficient c = top->second / g.lc();
    work.erase(top);
    auto terms = g.terms();
    for (std::size_t k = 1; k < terms.size(); ++k) {
      Monomial word = left * terms[k].word;
      word *= right;
      Coefficient delta = c * terms[k].coeff;
      auto [it, inserted] = work.try_emplace(std::move(word), 0);
      it->second -= delta;
      if (sgn(it->second) == 0) work.erase(it);
    }
    if (log) log->summands.push_back(CertificateSummand{std::move(c), std::move(left), hit->generator, std::move(right)});
  }
  Polynomial out(f.size(), std::move(remainder));
  if (log) log->target = f - out;
  return out;
}

Polynomial Reducer::reduce(const Polynomial& f, GroebnerCertificate* log, std::optional<std::size_t> skip) const {
  return run(f, log, [&](const Monomial& w) { return index_.first(w, skip); });
}

Polynomial Reducer::reduce_randomized(const Polynomial& f, std::mt19937_64& rng, GroebnerCertificate* log) const {
  std::vector<DivisorIndex::Hit> hits;
  return run(f, log, [&](const Monomial& w) -> std::optional<DivisorIndex::Hit> {
    index_.all(w, hits);
    if (hits.empty()) return std::nullopt;
    std::uniform_int_distribution<std::size_t> pick(0, hits.size() - 1);
    return hits[pick(rng)];
  });
}

Polynomial Reducer::reduce_longest_first(const Polynomial& f, GroebnerCertificate* log) const {
  std::vector<DivisorIndex::Hit> hits;
  return run(f, log, [&](const Monomial& w) -> std::optional<DivisorIndex::Hit> {
    index_.all(w, hits);
    if (hits.empty()) return std::nullopt;
    auto key = [&](const DivisorIndex::Hit& h) {
      return std::tuple(-static_cast<long>((*basis_)[h.generator].lm().degree()), h.generator, h.position);
    };
    return *std::min_element(hits.begin(), hits.end(),
                             [&](const auto& a, const auto& b) { return key(a) < key(b); });
  });
}

bool Reducer::is_reduced(const Polynomial& f) const {
  for (const auto& t : f.terms())
    if (index_.divides_any(t.word)) return false;
  return true;
}

NormalFormResult normal_form(const Polynomial& f, const Basis& g, bool log) {
  Reducer r(g);
  if (!log) return {r.reduce(f), std::nullopt};
  GroebnerCertificate cert{Polynomial(f.size()), {}};
  Polynomial nf = r.reduce(f, &cert);
  return {std::move(nf), std::move(cert)};
}

// ---------------------------------------------------------------- interreduction

Basis interreduce(const Basis& f) {
  Basis current = f;
  for (;;) {
    Reducer r(current);
    bool replaced = false;
    for (std::size_t i = 0; i < current.count(); ++i) {
      Polynomial nf = r.reduce(current[i], nullptr, i);
      if (nf == current[i]) continue;
      std::vector<Polynomial> next(current.begin(), current.end());
      next[i] = std::move(nf);
      current = Basis(f.size(), std::move(next));
      replaced = true;
      break;
    }
    if (!replaced) return current.monic();
  }
}

// ---------------------------------------------------------------- overlaps

std::string to_string(OverlapKind k) {
  switch (k) {
    case OverlapKind::overlap_left: return "overlap-left";
    case OverlapKind::overlap_right: return "overlap-right";
    case OverlapKind::division: return "division";
  }
  return "?";
}

Monomial ambiguity_word(const OverlapTask& t, const Basis& g) {
  switch (t.kind) {
    case OverlapKind::overlap_left: return g[t.f_index].lm() * t.a;
    case OverlapKind::overlap_right: return t.a * g[t.f_index].lm();
    case OverlapKind::division: return g[t.g_index].lm();
  }
  return {};
}

std::vector<OverlapTask> enumerate_overlaps(const Basis& g, std::size_t i, std::size_t j, bool discharge) {
  std::vector<OverlapTask> out;
  const Monomial& v = g[i].lm();
  const Monomial& w = g[j].lm();
  auto vl = v.letters();
  auto wl = w.letters();
  const std::size_t limit = std::min(vl.size(), wl.size());
  auto add = [&](OverlapKind kind, std::size_t t) {
    if (kind == OverlapKind::overlap_left) {
      // suffix of v == prefix of w, length t
      out.push_back(OverlapTask{kind, i, j, w.subword(t, wl.size() - t), v.subword(0, vl.size() - t),
                                discharge && t == 0});
    } else {
      // prefix of v == suffix of w, length t
      out.push_back(OverlapTask{kind, i, j, w.subword(0, wl.size() - t), v.subword(t, vl.size() - t),
                                discharge && t == 0});
    }
  };
  for (std::size_t t = 0; t < limit; ++t)
    if (std::equal(vl.end() - t, vl.end(), wl.begin())) add(OverlapKind::overlap_left, t);
  if (i != j)
    for (std::size_t t = 0; t < limit; ++t)
      if (std::equal(vl.begin(), vl.begin() + t, wl.end() - t)) add(OverlapKind::overlap_right, t);
  return out;
}

std::vector<OverlapTask> enumerate_divisions(const Basis& g, std::size_t i, std::size_t j) {
  std::vector<OverlapTask> out;
  if (i == j) return out;
  const Monomial& v = g[i].lm();
  const Monomial& w = g[j].lm();
  for (std::size_t pos : find_occurrences(v, w))
    out.push_back(OverlapTask{OverlapKind::division, i, j, w.subword(0, pos),
                              w.subword(pos + v.degree(), w.degree() - pos - v.degree()), false});
  return out;
}

std::vector<OverlapTask> enumerate_all_tasks(const Basis& g, bool discharge) {
  std::vector<OverlapTask> out;
  for (std::size_t i = 0; i < g.count(); ++i)
    for (std::size_t j = i; j < g.count(); ++j) {
      auto ov = enumerate_overlaps(g, i, j, discharge);
      out.insert(out.end(), std::make_move_iterator(ov.begin()), std::make_move_iterator(ov.end()));
    }
  for (std::size_t i = 0; i < g.count(); ++i)
    for (std::size_t j = 0; j < g.count(); ++j) {
      if (i == j || g[i].lm().degree() > g[j].lm().degree()) continue;
      auto dv = enumerate_divisions(g, i, j);
      out.insert(out.end(), std::make_move_iterator(dv.begin()), std::make_move_iterator(dv.end()));
    }
  return out;
}

Polynomial overlap_relation(const OverlapTask& t, const Basis& g) {
  const Polynomial& f = g[t.f_index];
  const Polynomial& h = g[t.g_index];
  Coefficient cf = 1 / f.lc();
  Coefficient ch = 1 / h.lc();
  const Monomial none;
  switch (t.kind) {
    case OverlapKind::overlap_left: return multiply(cf, none, f, t.a) - multiply(ch, t.b, h, none);
    case OverlapKind::overlap_right: return multiply(cf, t.a, f, none) - multiply(ch, none, h, t.b);
    case OverlapKind::division: return multiply(cf, t.a, f, t.b) - multiply(ch, none, h, none);
  }
  return Polynomial(g.size());
}

// ---------------------------------------------------------------- checking

namespace {

// Runs body(k) for k in [0, count) over `jobs` workers with a strided split.
template <class Body>
void parallel_for(std::size_t count, unsigned jobs, Body body) {
  if (jobs <= 1 || count < 2) {
    for (std::size_t k = 0; k < count; ++k) body(k);
    return;
  }
  std::vector<std::jthread> workers;
  for (unsigned w = 0; w < jobs; ++w)
    workers.emplace_back([&, w] {
      for (std::size_t k = w; k < count; k += jobs) body(k);
    });
}

}  // namespace

GroebnerCheck is_groebner(const Basis& g, const GroebnerCheckOptions& options) {
  GroebnerCheck report;
  auto all = enumerate_all_tasks(g, options.discharge_concatenation);
  report.tasks_total = all.size();
  std::vector<OverlapTask> tasks;
  for (auto& t : all) {
    if (t.discharged)
      ++report.tasks_discharged;
    else
      tasks.push_back(std::move(t));
  }
  report.tasks_checked = tasks.size();

  Reducer reducer(g);
  struct Outcome {
    std::optional<Polynomial> relation;
    std::optional<Polynomial> nf;
    int certificate = -1;  // -1 unchecked, 0 rejected, 1 verified
  };
  std::vector<Outcome> outcomes(tasks.size());
  parallel_for(tasks.size(), options.jobs, [&](std::size_t k) {
    Polynomial rel = overlap_relation(tasks[k], g);
    if (rel.is_zero()) return;
    Outcome& o = outcomes[k];
    if (options.verify_certificates) {
      GroebnerCertificate cert{Polynomial(g.size()), {}};
      Polynomial nf = reducer.reduce(rel, &cert);
      o.certificate = verify_certificate(cert, g) ? 1 : 0;
      if (!nf.is_zero()) o.nf = std::move(nf);
    } else {
      Polynomial nf = reducer.reduce(rel);
      if (!nf.is_zero()) o.nf = std::move(nf);
    }
    if (o.nf) o.relation = std::move(rel);
  });
  for (std::size_t k = 0; k < tasks.size(); ++k) {
    auto& o = outcomes[k];
    if (o.certificate == 1) ++report.certificates_verified;
    if (o.certificate == 0) ++report.certificates_rejected;
    if (o.nf) report.failures.push_back(OverlapFailure{tasks[k], std::move(*o.relation), std::move(*o.nf)});
  }
  report.is_groebner = report.failures.empty();
  return report;
}

// ---------------------------------------------------------------- completion

CompletionResult buchberger(const Basis& f, const CompletionConfig& cfg) {
  if (cfg.max_degree && *cfg.max_degree <= 0) throw InvalidArgument("max_degree must be positive");
  if (cfg.max_rounds && *cfg.max_rounds <= 0) throw InvalidArgument("max_rounds must be positive");

  CompletionResult result{interreduce(f), CompletionStatus::completed, 0, 0};
  Basis& current = result.basis;
  std::set<std::string> processed;
  bool deferred = false;
  bool dropped = false;

  for (;;) {
    struct Pending {
      OverlapTask task;
      Monomial word;
      std::string key;
    };
    std::vector<Pending> pending;
    std::vector<std::string> texts;
    texts.reserve(current.count());
    for (const auto& p : current) texts.push_back(to_string(p));
    deferred = false;
    for (auto& t : enumerate_all_tasks(current, cfg.discharge_concatenation_overlaps)) {
      if (t.discharged) continue;
      std::string key = texts[t.f_index] + "|" + texts[t.g_index] + "|" + to_string(t.kind) + "|" +
                        to_string(t.a, current.size()) + "|" + to_string(t.b, current.size());
      if (processed.count(key)) continue;
      Monomial word = ambiguity_word(t, current);
      if (cfg.max_degree && static_cast<int>(word.degree()) > *cfg.max_degree) {
        deferred = true;
        continue;
      }
      pending.push_back(Pending{std::move(t), std::move(word), std::move(key)});
    }
    if (pending.empty()) break;
    if (cfg.max_rounds && result.rounds >= *cfg.max_rounds) {
      deferred = true;
      break;
    }
    std::sort(pending.begin(), pending.end(), [](const Pending& a, const Pending& b) {
      if (auto c = a.word <=> b.word; c != 0) return c < 0;
      return a.key < b.key;
    });

    Reducer reducer(current);
    std::vector<std::optional<Polynomial>> found(pending.size());
    parallel_for(pending.size(), cfg.jobs, [&](std::size_t k) {
      Polynomial rel = overlap_relation(pending[k].task, current);
      if (rel.is_zero()) return;
      Polynomial nf = reducer.reduce(rel);
      if (!nf.is_zero()) found[k] = std::move(nf);
    });
    result.relations_reduced += pending.size();

    std::vector<Polynomial> next(current.begin(), current.end());
    for (std::size_t k = 0; k < pending.size(); ++k) {
      processed.insert(pending[k].key);
      if (!found[k]) continue;
      if (cfg.max_degree && static_cast<int>(found[k]->degree()) > *cfg.max_degree) {
        dropped = true;
        continue;
      }
      next.push_back(std::move(*found[k]));
    }
    ++result.rounds;
    if (next.size() != current.count()) current = interreduce(Basis(current.size(), std::move(next)));
  }
  result.status = deferred || dropped ? CompletionStatus::capped : CompletionStatus::completed;
  return result;
}

}  // namespace qsym
