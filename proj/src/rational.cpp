#include "qkloc/rational.hpp"

#include "qkloc/errors.hpp"

namespace qkloc {

std::string to_string(const Rational& r) { return r.get_str(); }

Rational parse_rational(std::string_view text) {
  Rational r;
  if (text.empty() || r.set_str(std::string(text), 10) != 0) {
    throw DomainError("malformed rational '" + std::string(text) + "'");
  }
  if (r.get_den() == 0) throw DomainError("zero denominator in '" + std::string(text) + "'");
  r.canonicalize();
  return r;
}

Rational make_rational(long num, long den) {
  Rational r(num, den);
  r.canonicalize();
  return r;
}

}  // namespace qkloc
