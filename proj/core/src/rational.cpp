#include "padic/rational.hpp"

#include <cctype>
#include <cstddef>

#include "padic/error.hpp"

namespace padic {

namespace {

// [+-]?[0-9]+ starting at pos; advances pos past it.
integer scan_integer(const std::string& text, std::size_t& pos) {
  std::size_t start = pos;
  if (pos < text.size() && (text[pos] == '+' || text[pos] == '-')) ++pos;
  std::size_t digits_at = pos;
  while (pos < text.size() &&
         std::isdigit(static_cast<unsigned char>(text[pos])))
    ++pos;
  if (pos == digits_at) throw parse_error("expected an integer", start);
  return integer(text.substr(start, pos - start));
}

}  // namespace

integer parse_integer(const std::string& text) {
  if (text.empty()) throw parse_error("empty input", 0);
  std::size_t pos = 0;
  integer n = scan_integer(text, pos);
  if (pos != text.size())
    throw parse_error("trailing characters after integer", pos);
  return n;
}

rational parse_rational(const std::string& text) {
  if (text.empty()) throw parse_error("empty input", 0);
  std::size_t pos = 0;
  integer num = scan_integer(text, pos);
  integer den = 1;
  if (pos < text.size() && text[pos] == '/') {
    std::size_t slash = pos;
    ++pos;
    den = scan_integer(text, pos);
    if (den == 0) throw parse_error("denominator is zero", slash + 1);
  }
  if (pos != text.size())
    throw parse_error("trailing characters after rational", pos);
  rational x(num, den);
  x.canonicalize();
  return x;
}

std::string to_string(const rational& x) {
  return x.get_str();
}

std::string to_string(const integer& n) {
  return n.get_str();
}

}  // namespace padic
