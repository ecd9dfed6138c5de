#include "msk/rational.hpp"

#include <cctype>

#include "msk/errors.hpp"

namespace msk {

Rational parse_rational(const std::string& text) {
  std::size_t i = 0;
  auto digits = [&](std::size_t start) {
    std::size_t j = start;
    while (j < text.size() && std::isdigit(static_cast<unsigned char>(text[j]))) ++j;
    return j;
  };
  if (i < text.size() && (text[i] == '+' || text[i] == '-')) ++i;
  std::size_t after_num = digits(i);
  if (after_num == i) throw parse_error("invalid rational: '" + text + "'");
  i = after_num;
  if (i < text.size()) {
    if (text[i] != '/') throw parse_error("invalid rational: '" + text + "'");
    std::size_t after_den = digits(i + 1);
    if (after_den == i + 1 || after_den != text.size())
      throw parse_error("invalid rational: '" + text + "'");
  }
  // mpq_set_str does not accept a leading '+'.
  Rational q(text[0] == '+' ? text.substr(1) : text);
  if (sgn(q.get_den()) == 0) throw parse_error("zero denominator in '" + text + "'");
  q.canonicalize();
  return q;
}

std::string to_string(const Rational& q) { return q.get_str(); }

std::string to_string(const QVector& v) {
  std::string s = "[";
  for (std::size_t i = 0; i < v.size(); ++i) {
    if (i) s += ", ";
    s += to_string(v[i]);
  }
  return s + "]";
}

}  // namespace msk
