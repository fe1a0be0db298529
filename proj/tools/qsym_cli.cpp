// Command-line front end over the C interface.
#include <cstdio>
#include <fstream>
#include <iostream>
#include <memory>
#include <optional>
#include <sstream>
#include <string>
#include <thread>
#include <vector>

#include <CLI11.hpp>

#include "qsym/qsym.h"

namespace {

enum Exit { kOk = 0, kInternal = 1, kUsage = 2, kMathFailure = 3, kCapped = 4 };

struct Failure {
  int code;
};

int exit_for(qsym_status s) {
  switch (s) {
    case QSYM_OK: return kOk;
    case QSYM_NOT_REPRESENTABLE: return kMathFailure;
    case QSYM_INTERNAL: return kInternal;
    default: return kUsage;
  }
}

void check(qsym_status s) {
  if (s == QSYM_OK) return;
  std::cerr << "error: " << qsym_status_name(s) << ": " << qsym_last_error() << "\n";
  throw Failure{exit_for(s)};
}

[[noreturn]] void usage(const std::string& message) {
  std::cerr << "error: " << message << "\n";
  throw Failure{kUsage};
}

struct PolyDeleter {
  void operator()(qsym_poly* p) const { qsym_poly_free(p); }
};
struct BasisDeleter {
  void operator()(qsym_basis* b) const { qsym_basis_free(b); }
};
struct CertDeleter {
  void operator()(qsym_certificate* c) const { qsym_certificate_free(c); }
};
struct StringDeleter {
  void operator()(char* s) const { qsym_string_free(s); }
};
using Poly = std::unique_ptr<qsym_poly, PolyDeleter>;
using BasisPtr = std::unique_ptr<qsym_basis, BasisDeleter>;
using Cert = std::unique_ptr<qsym_certificate, CertDeleter>;
using CString = std::unique_ptr<char, StringDeleter>;

std::string read_file(const std::string& path) {
  std::ifstream in(path, std::ios::binary);
  if (!in) usage("cannot read " + path);
  std::ostringstream ss;
  ss << in.rdbuf();
  return ss.str();
}

void write_file(const std::string& path, const std::string& text) {
  std::ofstream out(path, std::ios::binary);
  if (!out || !(out << text)) usage("cannot write " + path);
}

std::string take(char* s) {
  CString owned(s);
  return owned ? std::string(owned.get()) : std::string();
}

Poly parse_poly(int n, const std::string& text) {
  qsym_poly* p = nullptr;
  check(qsym_poly_parse(n, text.c_str(), &p));
  return Poly(p);
}

std::string poly_text(const qsym_poly* p) {
  char* s = nullptr;
  check(qsym_poly_to_string(p, &s));
  return take(s);
}

// A named set (G, F, Fpp, Fp, B) or a file with one polynomial per line.
BasisPtr load_basis(int n, const std::string& spec) {
  qsym_basis* b = nullptr;
  for (const char* name : {"G", "F", "Fpp", "Fp", "B"})
    if (spec == name) {
      check(qsym_basis_named(n, name, &b));
      return BasisPtr(b);
    }
  check(qsym_basis_parse(n, read_file(spec).c_str(), &b));
  return BasisPtr(b);
}

std::string basis_text(const qsym_basis* b) {
  char* s = nullptr;
  check(qsym_basis_to_string(b, &s));
  return take(s);
}

std::vector<int> parse_indices(const std::string& text) {
  std::vector<int> out;
  std::stringstream ss(text);
  std::string item;
  while (std::getline(ss, item, ',')) {
    try {
      std::size_t used = 0;
      int v = std::stoi(item, &used);
      if (used != item.size()) throw std::invalid_argument(item);
      out.push_back(v);
    } catch (const std::exception&) {
      usage("--indices must be a comma-separated list of integers");
    }
  }
  return out;
}

std::pair<int, int> parse_samples(const std::string& text) {
  auto dots = text.find("..");
  if (dots == std::string::npos) usage("--samples must look like LO..HI");
  try {
    return {std::stoi(text.substr(0, dots)), std::stoi(text.substr(dots + 2))};
  } catch (const std::exception&) {
    usage("--samples must look like LO..HI");
  }
}

void require_n(int n) {
  if (n < 4) usage("--n must be at least 4 for this command");
}

void print_line(const char* line, int, void*) {
  std::cout << line << std::endl;
}

}  // namespace

int main(int argc, char** argv) {
  CLI::App app{"Exact non-commutative Groebner engine for the quantum symmetric group relations"};
  app.require_subcommand(1);
  app.set_version_flag("--version", std::string(qsym_version()));

  const unsigned default_jobs = std::max(1u, std::thread::hardware_concurrency());
  int n = 0;
  unsigned jobs = default_jobs;

  auto* gens = app.add_subcommand("gens", "print a named relation set or a single relation");
  std::string set_name, family, indices;
  gens->add_option("--n", n, "matrix size")->required();
  auto* set_opt = gens->add_option("--set", set_name, "G, F, Fpp, Fp or B");
  auto* family_opt = gens->add_option("--family", family, "relation family name");
  gens->add_option("--indices", indices, "comma-separated indices")->needs(family_opt);
  set_opt->excludes(family_opt);

  auto* nf = app.add_subcommand("nf", "normal form modulo a basis");
  std::string poly, basis_spec = "G", cert_out;
  nf->add_option("--n", n, "matrix size")->required();
  nf->add_option("--poly", poly, "polynomial")->required();
  nf->add_option("--basis", basis_spec, "G, F, Fpp, Fp, B or a file")->capture_default_str();
  nf->add_option("--certificate", cert_out, "write a certificate to this file");

  auto* gb = app.add_subcommand("check-gb", "check the Groebner property of a basis");
  bool strict_concat = false, verify_certs = false;
  gb->add_option("--n", n, "matrix size")->required();
  gb->add_option("--basis", basis_spec, "G, F, Fpp, Fp, B or a file")->capture_default_str();
  gb->add_option("--jobs", jobs, "worker threads")->capture_default_str();
  gb->add_flag("--strict-concat", strict_concat, "also reduce overlaps that are plain concatenations");
  gb->add_flag("--verify-certificates", verify_certs, "record and re-verify a certificate per relation");

  auto* bb = app.add_subcommand("buchberger", "two-sided completion");
  std::string input;
  int max_deg = 0, max_rounds = 0;
  bb->add_option("--n", n, "matrix size")->required();
  bb->add_option("--input", input, "named set or file")->required();
  bb->add_option("--max-deg", max_deg, "defer or drop relations above this degree");
  bb->add_option("--max-rounds", max_rounds, "stop after this many rounds");
  bb->add_option("--jobs", jobs, "worker threads")->capture_default_str();

  auto* wp = app.add_subcommand("wordproblem", "decide equality in the quotient algebra");
  std::string lhs, rhs;
  wp->add_option("--n", n, "matrix size")->required();
  wp->add_option("--lhs", lhs, "left polynomial")->required();
  wp->add_option("--rhs", rhs, "right polynomial")->required();

  auto* vc = app.add_subcommand("verify-cert", "re-verify a certificate");
  std::string cert_file;
  vc->add_option("--n", n, "matrix size")->required();
  vc->add_option("--basis", basis_spec, "G, F, Fpp, Fp, B or a file")->capture_default_str();
  vc->add_option("--cert", cert_file, "certificate file")->required();

  auto* pc = app.add_subcommand("param-check", "verify an n-parametric identity file");
  std::string identity_file, samples;
  pc->add_option("--identity", identity_file, "identity file")->required();
  pc->add_option("--samples", samples, "sample range LO..HI for the expansion cross-check");

  auto* st = app.add_subcommand("suite", "run the acceptance battery");
  bool extended = false;
  int criterion = 0;
  st->add_option("--n", n, "also run the per-size checks at this size");
  st->add_flag("--extended", extended, "include n = 6 in the Groebner check");
  st->add_option("--criterion", criterion, "run only this criterion (1..11)");
  st->add_option("--jobs", jobs, "worker threads")->capture_default_str();

  try {
    app.parse(argc, argv);
  } catch (const CLI::ParseError& e) {
    int code = app.exit(e);
    return code == 0 ? kOk : kUsage;
  }

  try {
    if (*gens) {
      if (set_name.empty() == family.empty()) usage("gens needs exactly one of --set or --family");
      if (!set_name.empty()) {
        require_n(n);
        std::cout << basis_text(load_basis(n, set_name).get());
      } else {
        std::vector<int> idx = parse_indices(indices);
        qsym_poly* p = nullptr;
        check(qsym_relation_make(n, family.c_str(), idx.data(), idx.size(), &p));
        Poly owned(p);
        std::cout << poly_text(owned.get()) << "\n";
      }
      return kOk;
    }

    if (*nf) {
      BasisPtr basis = load_basis(n, basis_spec);
      Poly f = parse_poly(n, poly);
      qsym_poly* rem = nullptr;
      qsym_certificate* cert = nullptr;
      check(qsym_normal_form(f.get(), basis.get(), &rem, cert_out.empty() ? nullptr : &cert));
      Poly r(rem);
      Cert c(cert);
      std::cout << poly_text(r.get()) << "\n";
      if (c) {
        char* s = nullptr;
        check(qsym_certificate_to_string(c.get(), &s));
        write_file(cert_out, take(s));
      }
      return kOk;
    }

    if (*gb) {
      BasisPtr basis = load_basis(n, basis_spec);
      qsym_groebner_report rep{};
      char* failures = nullptr;
      check(qsym_check_groebner(basis.get(), jobs, strict_concat, verify_certs, &rep, &failures));
      std::string witness = take(failures);
      std::cout << (rep.is_groebner ? "PASS" : "FAIL") << ": " << rep.tasks_total << " overlap and division tasks, "
                << rep.tasks_discharged << " discharged, " << rep.tasks_checked << " reduced, " << rep.failures
                << " failing";
      if (verify_certs)
        std::cout << ", " << rep.certificates_verified << " certificates verified, " << rep.certificates_rejected
                  << " rejected";
      std::cout << "\n" << witness;
      return rep.is_groebner && rep.certificates_rejected == 0 ? kOk : kMathFailure;
    }

    if (*bb) {
      BasisPtr basis = load_basis(n, input);
      qsym_basis* out = nullptr;
      int completed = 0, rounds = 0;
      check(qsym_buchberger(basis.get(), max_deg, max_rounds, jobs, &out, &completed, &rounds));
      BasisPtr result(out);
      std::size_t count = 0;
      check(qsym_basis_count(result.get(), &count));
      std::cout << basis_text(result.get());
      std::cout << "# status: " << (completed ? "completed" : "capped") << ", " << rounds << " rounds, " << count
                << " elements\n";
      return completed ? kOk : kCapped;
    }

    if (*wp) {
      require_n(n);
      Poly a = parse_poly(n, lhs), b = parse_poly(n, rhs);
      int equivalent = 0;
      qsym_poly *na = nullptr, *nb = nullptr;
      check(qsym_word_problem(a.get(), b.get(), &equivalent, &na, &nb));
      Poly pa(na), pb(nb);
      std::cout << (equivalent ? "EQUIVALENT" : "DISTINCT") << "\n"
                << "lhs normal form: " << poly_text(pa.get()) << "\n"
                << "rhs normal form: " << poly_text(pb.get()) << "\n";
      return kOk;
    }

    if (*vc) {
      qsym_certificate* cert = nullptr;
      check(qsym_certificate_parse(read_file(cert_file).c_str(), &cert));
      Cert c(cert);
      if (qsym_certificate_size(c.get()) != n)
        usage("certificate is for n=" + std::to_string(qsym_certificate_size(c.get())) + ", not " + std::to_string(n));
      BasisPtr basis = load_basis(n, basis_spec);
      int valid = 0;
      check(qsym_certificate_verify(c.get(), basis.get(), &valid));
      std::cout << (valid ? "VALID" : "INVALID") << "\n";
      return valid ? kOk : kMathFailure;
    }

    if (*pc) {
      int lo = 0, hi = 0;
      if (!samples.empty()) std::tie(lo, hi) = parse_samples(samples);
      int passed = 0;
      char* report = nullptr;
      check(qsym_param_check(read_file(identity_file).c_str(), lo, hi, &passed, &report));
      std::cout << take(report);
      return passed ? kOk : kMathFailure;
    }

    if (*st) {
      if (st->count("--n")) require_n(n);
      int all_passed = 0;
      check(qsym_run_suite(extended, st->count("--n") ? n : 0, jobs, criterion, print_line, nullptr, &all_passed));
      return all_passed ? kOk : kMathFailure;
    }
  } catch (const Failure& f) {
    return f.code;
  }
  return kUsage;
}
