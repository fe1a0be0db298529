#include "qsym/qsym.h"

#include <cstdlib>
#include <cstring>
#include <exception>
#include <memory>
#include <new>
#include <optional>
#include <string>
#include <utility>

#include "qsym/certificate.hpp"
#include "qsym/error.hpp"
#include "qsym/groebner.hpp"
#include "qsym/identity.hpp"
#include "qsym/relations.hpp"
#include "qsym/suite.hpp"
#include "qsym/text.hpp"

struct qsym_poly {
  qsym::Polynomial value;
};
struct qsym_basis {
  qsym::Basis value;
};
struct qsym_certificate {
  qsym::GroebnerCertificate value;
};

namespace {

thread_local std::string last_error;

qsym_status fail(qsym_status s, std::string message) {
  last_error = std::move(message);
  return s;
}

// Runs body, mapping exceptions to status codes.
template <class Body>
qsym_status guarded(Body&& body) {
  last_error.clear();
  try {
    return body();
  } catch (const qsym::ParseError& e) {
    return fail(QSYM_PARSE, e.what());
  } catch (const qsym::IndexError& e) {
    return fail(QSYM_INDEX, e.what());
  } catch (const qsym::SizeMismatch& e) {
    return fail(QSYM_SIZE, e.what());
  } catch (const qsym::Unsupported& e) {
    return fail(QSYM_UNSUPPORTED, e.what());
  } catch (const qsym::NotRepresentable& e) {
    return fail(QSYM_NOT_REPRESENTABLE, e.what());
  } catch (const qsym::InvalidArgument& e) {
    return fail(QSYM_INVALID_ARGUMENT, e.what());
  } catch (const std::bad_alloc&) {
    return fail(QSYM_INTERNAL, "out of memory");
  } catch (const std::exception& e) {
    return fail(QSYM_INTERNAL, e.what());
  } catch (...) {
    return fail(QSYM_INTERNAL, "unknown error");
  }
}

char* dup_string(const std::string& s) {
  char* out = static_cast<char*>(std::malloc(s.size() + 1));
  if (!out) throw std::bad_alloc();
  std::memcpy(out, s.c_str(), s.size() + 1);
  return out;
}

#define QSYM_REQUIRE(cond, what) \
  if (!(cond)) return fail(QSYM_INVALID_ARGUMENT, what)

}  // namespace

extern "C" {

const char* qsym_version(void) { return "1.0.0"; }

const char* qsym_last_error(void) { return last_error.c_str(); }

const char* qsym_status_name(qsym_status s) {
  switch (s) {
    case QSYM_OK: return "ok";
    case QSYM_INVALID_ARGUMENT: return "invalid argument";
    case QSYM_PARSE: return "parse error";
    case QSYM_INDEX: return "index error";
    case QSYM_SIZE: return "size mismatch";
    case QSYM_UNSUPPORTED: return "unsupported";
    case QSYM_IO: return "i/o error";
    case QSYM_NOT_REPRESENTABLE: return "not representable";
    case QSYM_INTERNAL: return "internal error";
  }
  return "unknown status";
}

void qsym_string_free(char* s) { std::free(s); }

qsym_status qsym_poly_parse(int n, const char* text, qsym_poly** out) {
  return guarded([&] {
    QSYM_REQUIRE(text && out, "null argument");
    *out = new qsym_poly{qsym::parse_polynomial(text, qsym::Size(n))};
    return QSYM_OK;
  });
}

qsym_status qsym_poly_to_string(const qsym_poly* p, char** out) {
  return guarded([&] {
    QSYM_REQUIRE(p && out, "null argument");
    *out = dup_string(qsym::to_string(p->value));
    return QSYM_OK;
  });
}

int qsym_poly_size(const qsym_poly* p) { return p ? p->value.size().value() : 0; }

int qsym_poly_term_count(const qsym_poly* p) { return p ? static_cast<int>(p->value.term_count()) : 0; }

int qsym_poly_is_zero(const qsym_poly* p) { return p && p->value.is_zero() ? 1 : 0; }

int qsym_poly_equal(const qsym_poly* a, const qsym_poly* b) { return a && b && a->value == b->value ? 1 : 0; }

void qsym_poly_free(qsym_poly* p) { delete p; }

qsym_status qsym_relation_make(int n, const char* family, const int* indices, size_t count, qsym_poly** out) {
  return guarded([&] {
    QSYM_REQUIRE(family && out && (indices || count == 0), "null argument");
    auto f = qsym::parse_family(family);
    if (!f) return fail(QSYM_INVALID_ARGUMENT, std::string("unknown family '") + family + "'");
    if (static_cast<int>(count) != qsym::family_arity(*f))
      return fail(QSYM_INVALID_ARGUMENT, std::string(family) + " takes " + std::to_string(qsym::family_arity(*f)) +
                                             " indices");
    *out = new qsym_poly{qsym::make_relation(*f, std::span<const int>(indices, count), qsym::Size(n))};
    return QSYM_OK;
  });
}

qsym_status qsym_basis_named(int n, const char* set, qsym_basis** out) {
  return guarded([&] {
    QSYM_REQUIRE(set && out, "null argument");
    auto s = qsym::parse_named_set(set);
    if (!s) return fail(QSYM_INVALID_ARGUMENT, std::string("unknown set '") + set + "'");
    *out = new qsym_basis{qsym::named_set(*s, qsym::Size(n))};
    return QSYM_OK;
  });
}

qsym_status qsym_basis_parse(int n, const char* text, qsym_basis** out) {
  return guarded([&] {
    QSYM_REQUIRE(text && out, "null argument");
    const qsym::Size size(n);
    *out = new qsym_basis{qsym::Basis(size, qsym::parse_polynomial_list(text, size))};
    return QSYM_OK;
  });
}

qsym_status qsym_basis_count(const qsym_basis* b, size_t* out) {
  return guarded([&] {
    QSYM_REQUIRE(b && out, "null argument");
    *out = b->value.count();
    return QSYM_OK;
  });
}

qsym_status qsym_basis_element(const qsym_basis* b, size_t index, qsym_poly** out) {
  return guarded([&] {
    QSYM_REQUIRE(b && out, "null argument");
    if (index >= b->value.count()) return fail(QSYM_INDEX, "basis index out of range");
    *out = new qsym_poly{b->value[index]};
    return QSYM_OK;
  });
}

qsym_status qsym_basis_to_string(const qsym_basis* b, char** out) {
  return guarded([&] {
    QSYM_REQUIRE(b && out, "null argument");
    std::string s;
    for (const auto& p : b->value) s += qsym::to_string(p) + "\n";
    *out = dup_string(s);
    return QSYM_OK;
  });
}

void qsym_basis_free(qsym_basis* b) { delete b; }

qsym_status qsym_normal_form(const qsym_poly* f, const qsym_basis* g, qsym_poly** remainder,
                             qsym_certificate** certificate) {
  return guarded([&] {
    QSYM_REQUIRE(f && g && remainder, "null argument");
    qsym::NormalFormResult r = qsym::normal_form(f->value, g->value, certificate != nullptr);
    auto rem = std::make_unique<qsym_poly>(qsym_poly{std::move(r.remainder)});
    if (certificate) *certificate = new qsym_certificate{std::move(*r.certificate)};
    *remainder = rem.release();
    return QSYM_OK;
  });
}

qsym_status qsym_check_groebner(const qsym_basis* g, unsigned jobs, int strict_concatenation, int verify_certificates,
                                qsym_groebner_report* report, char** failures_text) {
  return guarded([&] {
    QSYM_REQUIRE(g && report, "null argument");
    qsym::GroebnerCheckOptions o;
    o.jobs = jobs == 0 ? 1 : jobs;
    o.discharge_concatenation = !strict_concatenation;
    o.verify_certificates = verify_certificates != 0;
    qsym::GroebnerCheck c = qsym::is_groebner(g->value, o);
    *report = qsym_groebner_report{c.is_groebner, c.tasks_total, c.tasks_discharged, c.tasks_checked,
                                   c.failures.size(), c.certificates_verified, c.certificates_rejected};
    if (failures_text) {
      std::string s;
      const qsym::Size n = g->value.size();
      for (const auto& f : c.failures)
        s += qsym::to_string(f.task.kind) + " G[" + std::to_string(f.task.f_index) + "] G[" +
             std::to_string(f.task.g_index) + "] at " + qsym::to_string(qsym::ambiguity_word(f.task, g->value), n) +
             ": relation " + qsym::to_string(f.relation) + " -> " + qsym::to_string(f.normal_form) + "\n";
      *failures_text = dup_string(s);
    }
    return QSYM_OK;
  });
}

qsym_status qsym_buchberger(const qsym_basis* input, int max_degree, int max_rounds, unsigned jobs, qsym_basis** out,
                            int* completed, int* rounds) {
  return guarded([&] {
    QSYM_REQUIRE(input && out && completed, "null argument");
    qsym::CompletionConfig cfg;
    if (max_degree > 0) cfg.max_degree = max_degree;
    if (max_rounds > 0) cfg.max_rounds = max_rounds;
    cfg.jobs = jobs == 0 ? 1 : jobs;
    qsym::CompletionResult r = qsym::buchberger(input->value, cfg);
    *completed = r.status == qsym::CompletionStatus::completed;
    if (rounds) *rounds = r.rounds;
    *out = new qsym_basis{r.basis.monic()};
    return QSYM_OK;
  });
}

qsym_status qsym_word_problem(const qsym_poly* lhs, const qsym_poly* rhs, int* equivalent, qsym_poly** lhs_nf,
                              qsym_poly** rhs_nf) {
  return guarded([&] {
    QSYM_REQUIRE(lhs && rhs && equivalent, "null argument");
    qsym::WordProblemResult r = qsym::word_problem(lhs->value, rhs->value);
    *equivalent = r.equivalent;
    if (lhs_nf) *lhs_nf = new qsym_poly{std::move(r.lhs_normal_form)};
    if (rhs_nf) *rhs_nf = new qsym_poly{std::move(r.rhs_normal_form)};
    return QSYM_OK;
  });
}

qsym_status qsym_certificate_parse(const char* text, qsym_certificate** out) {
  return guarded([&] {
    QSYM_REQUIRE(text && out, "null argument");
    *out = new qsym_certificate{qsym::parse_certificate(text)};
    return QSYM_OK;
  });
}

qsym_status qsym_certificate_to_string(const qsym_certificate* c, char** out) {
  return guarded([&] {
    QSYM_REQUIRE(c && out, "null argument");
    *out = dup_string(qsym::to_string(c->value));
    return QSYM_OK;
  });
}

int qsym_certificate_size(const qsym_certificate* c) { return c ? c->value.target.size().value() : 0; }

qsym_status qsym_certificate_verify(const qsym_certificate* c, const qsym_basis* g, int* valid) {
  return guarded([&] {
    QSYM_REQUIRE(c && g && valid, "null argument");
    *valid = qsym::verify_certificate(c->value, g->value);
    return QSYM_OK;
  });
}

void qsym_certificate_free(qsym_certificate* c) { delete c; }

qsym_status qsym_param_check(const char* identity_text, int sample_lo, int sample_hi, int* passed, char** report) {
  return guarded([&] {
    QSYM_REQUIRE(identity_text && passed, "null argument");
    auto id = qsym::param::parse_identity(identity_text);
    std::optional<std::pair<int, int>> samples;
    if (sample_lo > 0) {
      if (sample_hi < sample_lo || sample_hi > qsym::Size::kMax)
        return fail(QSYM_INVALID_ARGUMENT, "sample range must satisfy 1 <= lo <= hi <= 255");
      samples = std::pair{sample_lo, sample_hi};
    }
    auto r = qsym::param::verify_parametric_identity(id, samples);
    *passed = r.passed();
    if (report) *report = dup_string(qsym::param::to_string(r));
    return QSYM_OK;
  });
}

qsym_status qsym_run_suite(int extended, int extra_size, unsigned jobs, int criterion, qsym_line_callback on_line,
                           void* user, int* all_passed) {
  return guarded([&] {
    QSYM_REQUIRE(all_passed, "null argument");
    if (criterion < 0 || criterion > qsym::kCriterionCount)
      return fail(QSYM_INVALID_ARGUMENT, "criterion must be in 0.." + std::to_string(qsym::kCriterionCount));
    if (extra_size != 0 && extra_size < 4) return fail(QSYM_UNSUPPORTED, "suite sizes must be >= 4");
    qsym::SuiteOptions o;
    o.extended = extended != 0;
    if (extra_size != 0) o.extra_size = qsym::Size(extra_size).value();
    o.jobs = jobs == 0 ? 1 : jobs;
    qsym::AcceptanceSuite suite(o);
    bool ok = true;
    auto emit = [&](const qsym::CriterionResult& r) {
      ok = ok && r.passed;
      if (on_line) on_line(qsym::format_result(r).c_str(), r.passed, user);
    };
    if (criterion == 0)
      suite.run_all(emit);
    else
      emit(suite.run(criterion));
    *all_passed = ok;
    return QSYM_OK;
  });
}

}  // extern "C"
