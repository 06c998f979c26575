#pragma once

#include <string>
#include <vector>

namespace weylsum {

/* Integer vector in the character lattice of the maximal torus, written in
   the coordinate basis chi_1..chi_l.  Roots and all torus weights live here. */
struct Weight {
  std::vector<int> c;

  Weight() = default;
  explicit Weight(std::vector<int> coords) : c(std::move(coords)) {}

  int rank() const { return static_cast<int>(c.size()); }
  bool is_zero() const;

  Weight operator+(const Weight& o) const;
  Weight operator-(const Weight& o) const;
  Weight operator-() const;
  bool operator==(const Weight& o) const { return c == o.c; }
  bool operator<(const Weight& o) const { return c < o.c; }

  // Euclidean pairing of the coordinate realization.
  long dot(const Weight& o) const;

  // Rendered as "e1 - e2", "2*e1", "0".
  std::string to_string() const;
};

inline Weight basis_weight(int rank, int i) {
  std::vector<int> c(rank, 0);
  c[i] = 1;
  return Weight(std::move(c));
}

}  // namespace weylsum
