#pragma once

#include <memory>
#include <vector>

#include "weylsum/linear_form.hpp"
#include "weylsum/polynomial.hpp"
#include "weylsum/ratfunc.hpp"
#include "weylsum/root_system.hpp"

namespace weylsum {

/* A homogeneous space G/H described by root data.  Fixed points of the
   maximal-torus action correspond to the minimal coset representatives,
   enumerated once at construction in the deterministic order.  dim_complex
   is the number of complement roots. */
struct SpaceSpec {
  RootSystem g;
  SubsystemSpec h;
  int dim_complex = 0;
  std::shared_ptr<const std::vector<CosetRep>> reps;
  std::shared_ptr<const std::vector<WeylElement>> h_elements;  // all of W_H

  long coset_count() const { return static_cast<long>(reps->size()); }
};

// h must be a subsystem of g; d = 0 iff H = G iff one coset.
SpaceSpec make_space(RootSystem g, SubsystemSpec h);

/* Polynomial in the y-variables, verified W_H-invariant at construction so
   the localization sum is well defined. */
class EquivariantClass {
public:
  EquivariantClass(SpaceSpec space, Polynomial poly);
  const SpaceSpec& space() const { return space_; }
  const Polynomial& poly() const { return poly_; }

private:
  SpaceSpec space_;
  Polynomial poly_;
};

// Throws NotInvariant naming the violating reflection of H.
EquivariantClass make_class(const SpaceSpec& space, Polynomial poly);

// Pullback to the fixed point w: substitute y -> u, then act by w.
Polynomial restrict_to_fixed_point(const EquivariantClass& cls, const CosetRep& rep);
Polynomial restrict_to_fixed_point(const EquivariantClass& cls, const WeylElement& w);

/* Equivariant Euler class of the normal "bundle" at a fixed point, kept
   factored.  The complex orientation of G/H is pinned throughout the
   engine: the tangent weights at the representative w are w(-alpha) for
   alpha ranging over the complement roots. */
FactoredLinearProduct euler_at(const SpaceSpec& space, const CosetRep& rep);

/* One rational-function term per fixed point: restriction over Euler class.
   Exposed unreduced so callers can cross-check by point evaluation.
   threads > 1 evaluates terms in parallel; output is identical. */
std::vector<RatFunc> localization_terms(const EquivariantClass& cls, int threads = 1);

/* Pushforward to a point: sum of the fixed-point terms, reduced.  Inhomo-
   geneous inputs are summed per homogeneous degree.  Always a polynomial in
   u; degree drops by dim_complex on each component. */
Polynomial equivariant_integrate(const EquivariantClass& cls, int threads = 1);

/* Ordinary integral over G/H: the u = 0 specialization.  Requires the class
   homogeneous of degree exactly dim_complex. */
Rational integrate(const EquivariantClass& cls, int threads = 1);

/* Full-flag route (H = T): signed Weyl symmetrization of f divided exactly
   by the product of the complement-root forms.  Agrees with
   equivariant_integrate on the same space. */
Polynomial antisym_integrate(const SpaceSpec& space, const Polynomial& f_u, int threads = 1);

/* Witness for the fixed-point relations: a W_G-invariant b has equal
   restriction at every fixed point.  Throws NotInvariant if b is not
   W_G-invariant; returns true when all restrictions equal b(u). */
bool verify_relation(const SpaceSpec& space, const Polynomial& b_u);

/* Fixed-point count |W_G|/|W_H|, cross-checked internally by integrating
   the tangent Euler class (every fixed-point term is identically 1). */
long euler_characteristic(const SpaceSpec& space);

/* Coefficient list in t: coefficient 2*length(rep) counts each cell. */
std::vector<long> poincare_polynomial(const SpaceSpec& space);

// Average of the W_H-orbit of a y-polynomial; projects onto valid classes.
Polynomial symmetrize(const SpaceSpec& space, const Polynomial& poly_y);

}  // namespace weylsum
