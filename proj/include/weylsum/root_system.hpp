#pragma once

#include <cstddef>
#include <string>
#include <vector>

#include "weylsum/weight.hpp"

namespace weylsum {

/* Classical families in their standard coordinate realizations.
   Family A is U(n)-style: rank n acts on n coordinates and the Weyl group is
   the full symmetric group S_n (so rank n carries the type A_{n-1} root
   system).  B/C/D are rank-l on l coordinates with signed permutations. */
enum class Family { A, B, C, D };

Family family_from_string(const std::string& s);
char family_letter(Family f);

/* Signed permutation: coordinate i is routed to coordinate perm[i] and
   multiplied by signs[i].  Equivalently the linear map sending the basis
   vector e_i to signs[i] * e_{perm[i]}. */
struct WeylElement {
  std::vector<int> perm;   // 0-based, a permutation of 0..l-1
  std::vector<int> signs;  // entries in {+1, -1}

  int rank() const { return static_cast<int>(perm.size()); }

  static WeylElement identity(int rank);
  bool is_identity() const;

  Weight apply(const Weight& v) const;

  // (a.compose(b)).apply(v) == a.apply(b.apply(v))
  WeylElement compose(const WeylElement& other) const;
  WeylElement inverse() const;

  // Determinant of the signed permutation matrix.
  int det() const;

  // Signed one-line notation, 1-based: entry i is signs[i]*(perm[i]+1).
  std::vector<int> one_line() const;
  std::string to_string() const;

  bool operator==(const WeylElement& o) const {
    return perm == o.perm && signs == o.signs;
  }
};

/* Root system data.  positive_roots is in the canonical deterministic order
   (height, then lexicographically descending coordinates); expert-mode
   subsystem files index into it.  simple_coords[r] expresses positive root r
   in the simple-root basis (always nonnegative integers). */
struct RootSystem {
  Family family;
  int rank;
  std::vector<Weight> simple_roots;
  std::vector<Weight> positive_roots;
  std::vector<std::vector<int>> simple_coords;

  bool is_positive_root(const Weight& w) const;
  bool is_root(const Weight& w) const;
  // Index into positive_roots, or -1.
  int positive_index(const Weight& w) const;

  std::size_t weyl_order() const;

  bool operator==(const RootSystem& o) const {
    return family == o.family && rank == o.rank;
  }
};

// Throws ValidationError on unsupported rank (A/B/C need rank >= 1, D >= 2).
RootSystem build_root_system(Family family, int rank);

// Reflection in a root of rs, as a signed permutation.
WeylElement reflection_for_root(const RootSystem& rs, const Weight& root);

/* Full Weyl group in the deterministic order: by length, then by signed
   one-line notation.  Size = l! (A), 2^l l! (B/C), 2^{l-1} l! (D). */
std::vector<WeylElement> weyl_elements(const RootSystem& rs);

// Number of positive roots sent negative; sign is (-1)^length = det.
int length(const RootSystem& rs, const WeylElement& w);
int weyl_sign(const RootSystem& rs, const WeylElement& w);

/* Root subsystem H of a parent system, closed under addition and stable
   under its own reflections, with rank(H-torus) = rank(G).  Construction
   validates closure and that every simple reflection of H permutes the
   complement Delta+ \ Delta+(H) setwise; violations are rejected. */
struct SubsystemSpec {
  RootSystem parent;
  std::vector<int> root_indices;      // into parent.positive_roots, sorted
  std::vector<int> simple_selection;  // 1-based simple indices, empty if none
  std::vector<Weight> h_positive;
  std::vector<Weight> complement;
  std::vector<Weight> h_simple_roots;  // indecomposables of h_positive
  std::size_t h_order = 1;             // |W_H|

  bool is_torus() const { return h_positive.empty(); }
};

// H from a set of 1-based simple-root indices of the parent; {} gives T.
SubsystemSpec subsystem(const RootSystem& rs, const std::vector<int>& simple_indices);

// Expert mode: H from 0-based indices into the canonical positive-root order.
SubsystemSpec subsystem_from_root_indices(const RootSystem& rs, std::vector<int> root_indices);

/* Expert-mode file: one 0-based positive-root index per line, '#' starts a
   comment, blank lines ignored. */
SubsystemSpec load_subsystem_file(const RootSystem& rs, const std::string& path);

// W_H, enumerated by closure from the simple reflections of H.
std::vector<WeylElement> subgroup_elements(const SubsystemSpec& sub);

/* Minimal-length coset representative of one w W_H coset, characterized by
   w(Delta+(H)) subset Delta+.  index follows the deterministic order
   (length, then one-line lex). */
struct CosetRep {
  WeylElement element;
  int index = 0;
  int len = 0;
};

// All minimal representatives; count is |W_G| / |W_H| (checked).
std::vector<CosetRep> coset_reps(const SubsystemSpec& sub);

}  // namespace weylsum
