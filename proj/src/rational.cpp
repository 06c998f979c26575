#include "weylsum/rational.hpp"

#include <cctype>

#include "weylsum/errors.hpp"

namespace weylsum {

Rational parse_rational(const std::string& text) {
  if (text.empty()) throw ValidationError("empty rational literal");
  std::size_t i = 0;
  if (text[i] == '-') ++i;
  bool saw_digit = false, saw_slash = false;
  for (; i < text.size(); ++i) {
    if (std::isdigit(static_cast<unsigned char>(text[i]))) {
      saw_digit = true;
    } else if (text[i] == '/' && !saw_slash && saw_digit) {
      saw_slash = true;
      saw_digit = false;
    } else {
      throw ValidationError("malformed rational literal: " + text);
    }
  }
  if (!saw_digit) throw ValidationError("malformed rational literal: " + text);
  Rational q(text);
  if (q.get_den() == 0) throw ValidationError("zero denominator: " + text);
  q.canonicalize();
  return q;
}

Rational rat_pow(const Rational& q, unsigned e) {
  Rational r(1);
  for (unsigned i = 0; i < e; ++i) r *= q;
  return r;
}

}  // namespace weylsum
