#include <cctype>
#include <stdexcept>

#include "nsring/series.hpp"

namespace nsring {

namespace {

struct Cursor {
  const std::string& s;
  size_t i = 0;
  void skip_ws() {
    while (i < s.size() && std::isspace(static_cast<unsigned char>(s[i]))) ++i;
  }
  bool done() {
    skip_ws();
    return i >= s.size();
  }
  char peek() {
    skip_ws();
    return i < s.size() ? s[i] : '\0';
  }
  bool eat(char c) {
    skip_ws();
    if (i < s.size() && s[i] == c) {
      ++i;
      return true;
    }
    return false;
  }
  long long integer() {
    skip_ws();
    size_t start = i;
    while (i < s.size() && std::isdigit(static_cast<unsigned char>(s[i]))) ++i;
    if (i == start) throw std::invalid_argument("expected integer in series at '" + s.substr(start) + "'");
    return std::stoll(s.substr(start, i - start));
  }
};

// term := [coeff ['*']] ['t' ['^' int]] with coeff := int ['/' int] | 'c'
SeriesTerm parse_term(Cursor& cur) {
  SeriesTerm t;
  bool have_coeff = false;
  char c = cur.peek();
  if (c == 'c') {
    ++cur.i;
    t.slot = true;
    have_coeff = true;
  } else if (std::isdigit(static_cast<unsigned char>(c))) {
    t.num = cur.integer();
    if (cur.eat('/')) t.den = cur.integer();
    have_coeff = true;
  }
  if (have_coeff) cur.eat('*');
  if (cur.peek() == 't') {
    ++cur.i;
    t.exp = cur.eat('^') ? cur.integer() : 1;
  } else if (!have_coeff) {
    throw std::invalid_argument("expected a term in series literal");
  }
  if (t.den == 0) throw std::invalid_argument("zero denominator in series literal");
  return t;
}

}  // namespace

SeriesPattern parse_series(const std::string& text) {
  SeriesPattern p;
  Cursor cur{text};
  bool negate = cur.eat('-');
  for (;;) {
    SeriesTerm t = parse_term(cur);
    if (negate) t.num = -t.num;
    p.terms.push_back(t);
    if (cur.done()) break;
    if (cur.eat('+'))
      negate = false;
    else if (cur.eat('-'))
      negate = true;
    else
      throw std::invalid_argument("unexpected character in series literal: '" +
                                  std::string(1, cur.peek()) + "'");
  }
  if (p.terms.empty()) throw std::invalid_argument("empty series literal");
  return p;
}

std::vector<SeriesPattern> parse_series_list(const std::string& text) {
  std::vector<SeriesPattern> out;
  size_t start = 0;
  while (start <= text.size()) {
    size_t comma = text.find(',', start);
    std::string part = text.substr(
        start, comma == std::string::npos ? std::string::npos : comma - start);
    if (part.find_first_not_of(" \t") != std::string::npos)
      out.push_back(parse_series(part));
    if (comma == std::string::npos) break;
    start = comma + 1;
  }
  if (out.empty()) throw std::invalid_argument("empty series list");
  return out;
}

}  // namespace nsring
