#include "cmreg/parse.hpp"

#include <algorithm>
#include <cctype>
#include <fstream>
#include <limits>
#include <optional>
#include <sstream>

namespace cmreg {

ParseError::ParseError(const std::string& what, std::size_t position, std::size_t line)
    : std::runtime_error(what), position_(position), line_(line) {}

namespace {

bool is_name_start(char c) { return std::isalpha(static_cast<unsigned char>(c)) || c == '_'; }
bool is_name_char(char c) { return std::isalnum(static_cast<unsigned char>(c)) || c == '_'; }
bool is_digit(char c) { return std::isdigit(static_cast<unsigned char>(c)) != 0; }

class PolynomialParser {
 public:
  PolynomialParser(std::string_view text, const Ring& ring) : text_(text), ring_(ring) {}

  Polynomial parse() {
    std::vector<Term> terms;
    skip_space();
    if (at_end()) fail("empty polynomial");
    bool negative = false;
    if (peek() == '+' || peek() == '-') {
      negative = peek() == '-';
      ++pos_;
    }
    terms.push_back(term(negative));
    while (true) {
      skip_space();
      if (at_end()) break;
      const char c = peek();
      if (c != '+' && c != '-') {
        if (is_name_start(c) || is_digit(c)) fail("expected '*' between factors");
        fail(std::string("unexpected character '") + c + "'");
      }
      ++pos_;
      terms.push_back(term(c == '-'));
    }
    return Polynomial(ring_.size(), std::move(terms));
  }

 private:
  Term term(bool negative) {
    skip_space();
    Term t{Rational(1), Monomial(ring_.size())};
    if (at_end()) fail("expected a term");
    if (is_digit(peek())) {
      t.coeff = coefficient();
      skip_space();
      if (!at_end() && peek() == '*') {
        ++pos_;
        factor(t.mono);
      } else if (!at_end() && is_name_start(peek())) {
        fail("expected '*' between coefficient and variable");
      }
    } else {
      factor(t.mono);
    }
    while (true) {
      skip_space();
      if (at_end() || peek() != '*') break;
      ++pos_;
      factor(t.mono);
    }
    if (negative) t.coeff = -t.coeff;
    return t;
  }

  Rational coefficient() {
    mpz_class num(digits());
    if (!at_end() && peek() == '/') {
      ++pos_;
      const std::size_t at = pos_;
      mpz_class den(digits());
      if (den == 0) fail_at("zero denominator", at);
      Rational q(num, den);
      q.canonicalize();
      return q;
    }
    return Rational(num);
  }

  std::string digits() {
    skip_space();
    const std::size_t start = pos_;
    while (!at_end() && is_digit(peek())) ++pos_;
    if (start == pos_) fail("expected a number");
    return std::string(text_.substr(start, pos_ - start));
  }

  void factor(Monomial& mono) {
    skip_space();
    if (at_end() || !is_name_start(peek())) fail("expected a variable");
    const std::size_t start = pos_;
    while (!at_end() && is_name_char(peek())) ++pos_;
    const std::string name(text_.substr(start, pos_ - start));
    const auto index = ring_.index_of(name);
    if (!index) {
      for (const auto& v : ring_.names()) {
        if (name.size() > v.size() && name.compare(0, v.size(), v) == 0 &&
            is_name_start(name[v.size()])) {
          fail_at("expected '*' between factors", start + v.size());
        }
      }
      fail_at("unknown variable '" + name + "'", start);
    }
    std::uint64_t e = 1;
    skip_space();
    if (!at_end() && peek() == '^') {
      ++pos_;
      const std::size_t at = pos_;
      const std::string d = digits();
      try {
        e = std::stoull(d);
      } catch (const std::out_of_range&) {
        fail_at("exponent too large", at);
      }
      if (e > std::numeric_limits<Exponent>::max()) fail_at("exponent too large", at);
    }
    mono.set(*index, static_cast<Exponent>(mono[*index] + e));
  }

  void skip_space() {
    while (!at_end() && std::isspace(static_cast<unsigned char>(peek()))) ++pos_;
  }
  bool at_end() const { return pos_ >= text_.size(); }
  char peek() const { return text_[pos_]; }

  [[noreturn]] void fail(const std::string& what) const { fail_at(what, pos_); }
  [[noreturn]] void fail_at(const std::string& what, std::size_t at) const {
    throw ParseError(what + " at position " + std::to_string(at), at);
  }

  std::string_view text_;
  const Ring& ring_;
  std::size_t pos_ = 0;
};

std::string_view strip_comment(std::string_view line) {
  const auto hash = line.find('#');
  if (hash != std::string_view::npos) line = line.substr(0, hash);
  return line;
}

bool blank(std::string_view s) {
  for (char c : s) {
    if (!std::isspace(static_cast<unsigned char>(c))) return false;
  }
  return true;
}

}  // namespace

Polynomial parse_polynomial(std::string_view text, const Ring& ring) {
  return PolynomialParser(text, ring).parse();
}

IdealFile parse_ideal_file(std::string_view text) {
  std::vector<std::string_view> lines;
  std::size_t start = 0;
  while (start <= text.size()) {
    auto end = text.find('\n', start);
    if (end == std::string_view::npos) end = text.size();
    lines.push_back(text.substr(start, end - start));
    start = end + 1;
  }

  std::size_t k = 0;
  while (k < lines.size() && blank(strip_comment(lines[k]))) ++k;
  if (k == lines.size()) throw ParseError("missing 'ring:' line", 0, 1);
  std::string_view header = strip_comment(lines[k]);
  const std::size_t header_line = k + 1;
  const auto colon = header.find(':');
  std::string key(header.substr(0, colon == std::string_view::npos ? 0 : colon));
  std::erase_if(key, [](char c) { return std::isspace(static_cast<unsigned char>(c)); });
  if (colon == std::string_view::npos || key != "ring") {
    throw ParseError("first line must be 'ring: <variables>'", 0, header_line);
  }
  std::vector<std::string> names;
  std::istringstream words{std::string(header.substr(colon + 1))};
  for (std::string w; words >> w;) {
    if (!is_name_start(w.front()) || !std::all_of(w.begin(), w.end(), is_name_char)) {
      throw ParseError("bad variable name '" + w + "'", colon + 1, header_line);
    }
    names.push_back(w);
  }
  std::optional<Ring> ring;
  try {
    ring.emplace(std::move(names));
  } catch (const std::invalid_argument& e) {
    throw ParseError(e.what(), colon + 1, header_line);
  }

  IdealFile file{*ring, {}};
  for (++k; k < lines.size(); ++k) {
    const std::string_view body = strip_comment(lines[k]);
    if (blank(body)) continue;
    try {
      file.generators.push_back(parse_polynomial(body, file.ring));
    } catch (const ParseError& e) {
      throw ParseError(std::string("line ") + std::to_string(k + 1) + ": " + e.what(), e.position(),
                       k + 1);
    }
  }
  return file;
}

IdealFile read_ideal_file(const std::filesystem::path& path) {
  std::ifstream in(path);
  if (!in) throw std::runtime_error("cannot open " + path.string());
  std::ostringstream buf;
  buf << in.rdbuf();
  return parse_ideal_file(buf.str());
}

std::string format_ideal_file(const Ring& ring, const std::vector<Polynomial>& gens) {
  std::ostringstream out;
  out << "ring:";
  for (const auto& n : ring.names()) out << ' ' << n;
  out << '\n';
  for (const auto& g : gens) out << to_string(g, ring) << '\n';
  return out.str();
}

}  // namespace cmreg
