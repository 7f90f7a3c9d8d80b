#include "tate/poly_io.hpp"

#include <algorithm>
#include <cctype>
#include <map>
#include <numeric>

namespace tate {

namespace {

struct RawFactor {
  std::string name;
  Monomial::Exponent power = 1;
  std::size_t column = 0;
};

struct RawTerm {
  Rational coeff{1};
  std::vector<RawFactor> factors;
};

struct RawPolynomial {
  std::vector<RawTerm> terms;
  std::size_t line = 0;
  std::size_t column = 0;
};

bool ident_start(char c) { return std::isalpha(static_cast<unsigned char>(c)) || c == '_'; }
bool ident_char(char c) { return std::isalnum(static_cast<unsigned char>(c)) || c == '_'; }
bool digit(char c) { return std::isdigit(static_cast<unsigned char>(c)) != 0; }

class PolyParser {
 public:
  PolyParser(std::string_view text, std::size_t line, std::size_t column0)
      : text_(text), line_(line), col0_(column0) {}

  RawPolynomial parse() {
    RawPolynomial out;
    out.line = line_;
    out.column = col0_;
    skip_ws();
    if (at_end()) fail("empty polynomial");
    bool negative = false;
    if (peek() == '+' || peek() == '-') {
      negative = peek() == '-';
      ++pos_;
    }
    while (true) {
      RawTerm t = parse_term();
      if (negative) t.coeff = -t.coeff;
      out.terms.push_back(std::move(t));
      skip_ws();
      if (at_end()) break;
      if (peek() != '+' && peek() != '-') fail(std::string("unexpected character '") + peek() + "'");
      negative = peek() == '-';
      ++pos_;
    }
    return out;
  }

 private:
  RawTerm parse_term() {
    RawTerm t;
    skip_ws();
    if (at_end()) fail("expected a term");
    bool need_factor = true;
    if (digit(peek())) {
      t.coeff = parse_number();
      need_factor = false;
      skip_ws();
      if (!at_end() && peek() == '*') {
        ++pos_;
        need_factor = true;
      }
    }
    while (true) {
      skip_ws();
      if (at_end() || !ident_start(peek())) {
        if (need_factor) fail("expected a variable");
        break;
      }
      t.factors.push_back(parse_factor());
      need_factor = false;
      skip_ws();
      if (!at_end() && peek() == '*') {
        ++pos_;
        need_factor = true;
      }
    }
    return t;
  }

  Rational parse_number() {
    const std::size_t start = pos_;
    while (!at_end() && digit(peek())) ++pos_;
    skip_ws();
    if (!at_end() && peek() == '/') {
      ++pos_;
      skip_ws();
      if (at_end() || !digit(peek())) fail("expected denominator");
      while (!at_end() && digit(peek())) ++pos_;
    }
    if (!at_end() && peek() == '.') fail("floating-point coefficients are not accepted");
    std::string s;
    for (char c : text_.substr(start, pos_ - start)) {
      if (!std::isspace(static_cast<unsigned char>(c))) s += c;
    }
    try {
      return Rational::parse(s);
    } catch (const std::invalid_argument& e) {
      pos_ = start;
      fail(e.what());
    }
  }

  RawFactor parse_factor() {
    RawFactor f;
    f.column = col0_ + pos_;
    const std::size_t start = pos_;
    while (!at_end() && ident_char(peek())) ++pos_;
    f.name = std::string(text_.substr(start, pos_ - start));
    skip_ws();
    if (!at_end() && peek() == '^') {
      ++pos_;
      skip_ws();
      if (at_end() || !digit(peek())) fail("expected exponent");
      long e = 0;
      while (!at_end() && digit(peek())) {
        e = e * 10 + (peek() - '0');
        if (e > 1000000) fail("exponent too large");
        ++pos_;
      }
      f.power = static_cast<Monomial::Exponent>(e);
    }
    return f;
  }

  void skip_ws() {
    while (!at_end() && std::isspace(static_cast<unsigned char>(peek()))) ++pos_;
  }
  bool at_end() const { return pos_ >= text_.size(); }
  char peek() const { return text_[pos_]; }

  [[noreturn]] void fail(const std::string& what) const {
    throw ParseError(what, line_, col0_ + pos_);
  }

  std::string_view text_;
  std::size_t line_;
  std::size_t col0_;
  std::size_t pos_ = 0;
};

Polynomial build(const RawPolynomial& raw, const std::vector<std::string>& variables) {
  std::map<std::string, std::size_t, std::less<>> index;
  for (std::size_t i = 0; i < variables.size(); ++i) index.emplace(variables[i], i);
  const std::size_t n = variables.size();
  std::vector<Term> terms;
  for (const RawTerm& rt : raw.terms) {
    std::vector<Monomial::Exponent> exps(n, 0);
    for (const RawFactor& f : rt.factors) {
      auto it = index.find(f.name);
      if (it == index.end()) throw ParseError("unknown variable '" + f.name + "'", raw.line, f.column);
      exps[it->second] += f.power;
    }
    terms.push_back(Term{rt.coeff, Monomial(std::span<const Monomial::Exponent>(exps))});
  }
  return Polynomial(n, std::move(terms));
}

// Splits "x12" into ("x", 12); nullopt when there is no numeric suffix.
std::optional<std::pair<std::string, long>> split_indexed(const std::string& name) {
  std::size_t k = name.size();
  while (k > 0 && digit(name[k - 1])) --k;
  if (k == 0 || k == name.size() || name.size() - k > 9) return std::nullopt;
  return std::make_pair(name.substr(0, k), std::stol(name.substr(k)));
}

std::vector<std::string> infer_variables(const std::vector<RawPolynomial>& raws) {
  std::vector<std::string> names;
  for (const RawPolynomial& p : raws) {
    for (const RawTerm& t : p.terms) {
      for (const RawFactor& f : t.factors) {
        if (std::find(names.begin(), names.end(), f.name) == names.end()) names.push_back(f.name);
      }
    }
  }
  std::optional<std::string> prefix;
  bool indexed = !names.empty();
  for (const std::string& n : names) {
    auto split = split_indexed(n);
    if (!split || (prefix && *prefix != split->first)) {
      indexed = false;
      break;
    }
    prefix = split->first;
  }
  if (indexed) {
    std::stable_sort(names.begin(), names.end(), [](const std::string& a, const std::string& b) {
      return split_indexed(a)->second < split_indexed(b)->second;
    });
  }
  return names;
}

std::string_view trim(std::string_view s) {
  while (!s.empty() && std::isspace(static_cast<unsigned char>(s.front()))) s.remove_prefix(1);
  while (!s.empty() && std::isspace(static_cast<unsigned char>(s.back()))) s.remove_suffix(1);
  return s;
}

std::vector<std::string> parse_declaration(std::string_view body, std::size_t line, std::size_t column) {
  std::vector<std::string> vars;
  std::size_t i = 0;
  while (i < body.size()) {
    const char c = body[i];
    if (std::isspace(static_cast<unsigned char>(c)) || c == ',') {
      ++i;
      continue;
    }
    if (!ident_start(c)) throw ParseError("malformed variable declaration", line, column + i);
    const std::size_t start = i;
    while (i < body.size() && ident_char(body[i])) ++i;
    std::string name(body.substr(start, i - start));
    if (std::find(vars.begin(), vars.end(), name) != vars.end()) {
      throw ParseError("duplicate variable '" + name + "'", line, column + start);
    }
    vars.push_back(std::move(name));
  }
  return vars;
}

}  // namespace

ParseError::ParseError(const std::string& what, std::size_t line, std::size_t column)
    : std::runtime_error(what + " (line " + std::to_string(line) + ", column " + std::to_string(column) + ")"),
      line_(line),
      column_(column) {}

Polynomial parse_polynomial(std::string_view text, const std::vector<std::string>& variables) {
  return build(PolyParser(text, 1, 1).parse(), variables);
}

ParsedInput parse_input(std::string_view text, const std::optional<std::vector<std::string>>& declared) {
  ParsedInput out;
  std::optional<std::vector<std::string>> vars = declared;
  std::vector<RawPolynomial> raws;
  std::size_t line_no = 0;
  std::size_t start = 0;
  while (start <= text.size()) {
    ++line_no;
    const std::size_t nl = text.find('\n', start);
    std::string_view line = text.substr(start, nl == std::string_view::npos ? text.npos : nl - start);
    if (const auto hash = line.find('#'); hash != std::string_view::npos) line = line.substr(0, hash);
    std::string_view body = trim(line);
    if (body.rfind("vars", 0) == 0 && (body.size() == 4 || body[4] == ':' || std::isspace(static_cast<unsigned char>(body[4])))) {
      if (vars && !declared) throw ParseError("variables declared twice", line_no, 1);
      const std::size_t offset = static_cast<std::size_t>(body.data() - line.data()) + 4;
      std::string_view rest = body.substr(4);
      std::size_t col = offset + 1;
      if (!rest.empty() && rest.front() == ':') {
        rest.remove_prefix(1);
        ++col;
      }
      auto parsed = parse_declaration(rest, line_no, col);
      if (!declared) vars = std::move(parsed);
    } else {
      std::size_t seg = 0;
      while (seg <= line.size()) {
        std::size_t sep = line.find_first_of(";,", seg);
        std::string_view piece = line.substr(seg, sep == std::string_view::npos ? line.npos : sep - seg);
        const std::string_view trimmed = trim(piece);
        if (!trimmed.empty()) {
          const std::size_t col = static_cast<std::size_t>(trimmed.data() - line.data()) + 1;
          raws.push_back(PolyParser(trimmed, line_no, col).parse());
        } else if (sep != std::string_view::npos) {
          throw ParseError("empty polynomial", line_no, seg + 1);
        }
        if (sep == std::string_view::npos) break;
        seg = sep + 1;
      }
    }
    if (nl == std::string_view::npos) break;
    start = nl + 1;
  }
  out.variables = vars ? *vars : infer_variables(raws);
  for (const RawPolynomial& raw : raws) {
    Polynomial f = build(raw, out.variables);
    if (f.is_zero()) {
      out.warnings.push_back("line " + std::to_string(raw.line) + ": zero polynomial dropped");
      continue;
    }
    out.polynomials.push_back(std::move(f));
  }
  return out;
}

std::string format_term(const Term& t, const std::vector<std::string>& variables) {
  std::string mono;
  for (std::size_t i = 0; i < t.mono.size(); ++i) {
    if (t.mono[i] == 0) continue;
    if (!mono.empty()) mono += '*';
    mono += i < variables.size() ? variables[i] : "x" + std::to_string(i + 1);
    if (t.mono[i] != 1) mono += "^" + std::to_string(t.mono[i]);
  }
  if (mono.empty()) return t.coeff.to_string();
  if (t.coeff.is_one()) return mono;
  if (t.coeff == Rational(-1)) return "-" + mono;
  return t.coeff.to_string() + "*" + mono;
}

std::string format_polynomial(const Polynomial& f, const std::vector<std::string>& variables, const TateOrder* order) {
  if (f.is_zero()) return "0";
  std::vector<Term> terms(f.terms().begin(), f.terms().end());
  if (order) {
    std::vector<std::pair<TermKey, std::size_t>> keyed;
    keyed.reserve(terms.size());
    for (std::size_t i = 0; i < terms.size(); ++i) keyed.emplace_back(order->key(terms[i]), i);
    std::sort(keyed.begin(), keyed.end(), [&](const auto& a, const auto& b) {
      return order->compare(a.first, terms[a.second].mono, b.first, terms[b.second].mono) > 0;
    });
    std::vector<Term> sorted;
    sorted.reserve(terms.size());
    for (const auto& [k, i] : keyed) sorted.push_back(terms[i]);
    terms = std::move(sorted);
  } else {
    std::reverse(terms.begin(), terms.end());
  }
  std::string s;
  for (std::size_t i = 0; i < terms.size(); ++i) {
    const Term& t = terms[i];
    if (i == 0) {
      s += format_term(t, variables);
    } else if (t.coeff.sign() < 0) {
      s += " - " + format_term(Term{-t.coeff, t.mono}, variables);
    } else {
      s += " + " + format_term(t, variables);
    }
  }
  return s;
}

std::vector<std::string> default_variable_names(std::size_t n, bool from_zero) {
  std::vector<std::string> names;
  names.reserve(n);
  for (std::size_t i = 0; i < n; ++i) names.push_back("x" + std::to_string(from_zero ? i : i + 1));
  return names;
}

}  // namespace tate
