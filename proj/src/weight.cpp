#include "weylsum/weight.hpp"

#include <algorithm>
#include <cstdlib>

namespace weylsum {

bool Weight::is_zero() const {
  return std::all_of(c.begin(), c.end(), [](int x) { return x == 0; });
}

Weight Weight::operator+(const Weight& o) const {
  Weight r = *this;
  for (std::size_t i = 0; i < c.size(); ++i) r.c[i] += o.c[i];
  return r;
}

Weight Weight::operator-(const Weight& o) const {
  Weight r = *this;
  for (std::size_t i = 0; i < c.size(); ++i) r.c[i] -= o.c[i];
  return r;
}

Weight Weight::operator-() const {
  Weight r = *this;
  for (int& x : r.c) x = -x;
  return r;
}

long Weight::dot(const Weight& o) const {
  long s = 0;
  for (std::size_t i = 0; i < c.size(); ++i) s += static_cast<long>(c[i]) * o.c[i];
  return s;
}

std::string Weight::to_string() const {
  std::string out;
  for (std::size_t i = 0; i < c.size(); ++i) {
    if (c[i] == 0) continue;
    if (out.empty()) {
      if (c[i] < 0) out += "-";
    } else {
      out += c[i] < 0 ? " - " : " + ";
    }
    int a = std::abs(c[i]);
    if (a != 1) out += std::to_string(a) + "*";
    out += "e" + std::to_string(i + 1);
  }
  return out.empty() ? "0" : out;
}

}  // namespace weylsum
