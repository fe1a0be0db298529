#include "qsym/certificate.hpp"

#include <charconv>
#include <vector>

#include "qsym/text.hpp"

namespace qsym {

namespace {

constexpr std::string_view kMagic = "qsym-certificate 1";

std::string fraction(const Coefficient& c) { return c.get_num().get_str() + "/" + c.get_den().get_str(); }

std::string_view trim(std::string_view s) {
  while (!s.empty() && (s.front() == ' ' || s.front() == '\t' || s.front() == '\r')) s.remove_prefix(1);
  while (!s.empty() && (s.back() == ' ' || s.back() == '\t' || s.back() == '\r')) s.remove_suffix(1);
  return s;
}

std::vector<std::string_view> split(std::string_view s, char sep) {
  std::vector<std::string_view> out;
  std::size_t start = 0;
  for (;;) {
    std::size_t at = s.find(sep, start);
    out.push_back(trim(s.substr(start, at == std::string_view::npos ? std::string_view::npos : at - start)));
    if (at == std::string_view::npos) break;
    start = at + 1;
  }
  return out;
}

std::size_t to_index(std::string_view s, std::size_t line_offset) {
  std::size_t v = 0;
  auto [ptr, ec] = std::from_chars(s.data(), s.data() + s.size(), v);
  if (ec != std::errc() || ptr != s.data() + s.size() || s.empty())
    throw ParseError("expected a non-negative integer, got '" + std::string(s) + "'", line_offset);
  return v;
}

}  // namespace

std::string to_string(const GroebnerCertificate& c) {
  const Size n = c.target.size();
  std::string out;
  out += kMagic;
  out += "\nn: " + std::to_string(n.value());
  out += "\ntarget: " + to_string(c.target);
  out += "\nsummands: " + std::to_string(c.summands.size());
  for (const auto& s : c.summands) {
    out += "\nsummand: " + fraction(s.coeff) + " | " + to_string(s.left, n) + " | " + std::to_string(s.generator) +
           " | " + to_string(s.right, n);
  }
  out += '\n';
  return out;
}

GroebnerCertificate parse_certificate(std::string_view text) {
  std::vector<std::pair<std::string_view, std::size_t>> lines;
  std::size_t offset = 0;
  while (offset < text.size()) {
    std::size_t end = text.find('\n', offset);
    if (end == std::string_view::npos) end = text.size();
    std::string_view line = trim(text.substr(offset, end - offset));
    if (!line.empty() && line.front() != '#') lines.emplace_back(line, offset);
    offset = end + 1;
  }
  std::size_t k = 0;
  auto field = [&](std::string_view key) -> std::pair<std::string_view, std::size_t> {
    if (k >= lines.size()) throw ParseError("missing '" + std::string(key) + ":' line", text.size());
    auto [line, at] = lines[k++];
    if (line.substr(0, key.size()) != key || line.size() <= key.size() || line[key.size()] != ':')
      throw ParseError("expected '" + std::string(key) + ":'", at);
    return {trim(line.substr(key.size() + 1)), at};
  };

  if (lines.empty() || lines[0].first != kMagic) throw ParseError("missing certificate header", 0);
  ++k;
  auto [n_text, n_at] = field("n");
  const Size n(static_cast<int>(to_index(n_text, n_at)));
  auto [target_text, target_at] = field("target");
  GroebnerCertificate cert{Polynomial(n), {}};
  try {
    cert.target = parse_polynomial(target_text, n);
  } catch (const ParseError& e) {
    throw ParseError(std::string("target: ") + e.what(), target_at);
  }
  auto [count_text, count_at] = field("summands");
  const std::size_t count = to_index(count_text, count_at);
  for (std::size_t i = 0; i < count; ++i) {
    auto [body, at] = field("summand");
    auto parts = split(body, '|');
    if (parts.size() != 4) throw ParseError("summand needs 4 '|'-separated fields", at);
    try {
      cert.summands.push_back(CertificateSummand{parse_coefficient(parts[0]), parse_word(parts[1], n),
                                                 to_index(parts[2], at), parse_word(parts[3], n)});
    } catch (const ParseError& e) {
      throw ParseError(std::string("summand ") + std::to_string(i) + ": " + e.what(), at);
    }
  }
  if (k != lines.size()) throw ParseError("unexpected trailing lines", lines[k].second);
  return cert;
}

}  // namespace qsym
