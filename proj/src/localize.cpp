#include "weylsum/localize.hpp"

#include <omp.h>

#include <stdexcept>

#include "weylsum/errors.hpp"

namespace weylsum {

SpaceSpec make_space(RootSystem g, SubsystemSpec h) {
  if (!(h.parent == g))
    throw ValidationError("subsystem was built from a different root system");
  SpaceSpec space;
  space.dim_complex = static_cast<int>(h.complement.size());
  space.reps = std::make_shared<const std::vector<CosetRep>>(coset_reps(h));
  space.h_elements = std::make_shared<const std::vector<WeylElement>>(subgroup_elements(h));
  space.g = std::move(g);
  space.h = std::move(h);
  if ((space.dim_complex == 0) != (space.reps->size() == 1))
    throw ValidationError("degenerate space: dimension and fixed-point count disagree");
  return space;
}

EquivariantClass::EquivariantClass(SpaceSpec space, Polynomial poly)
    : space_(std::move(space)), poly_(std::move(poly)) {
  if (poly_.family() != VarFamily::Y)
    throw ValidationError("equivariant classes are polynomials in the y-variables");
  if (poly_.rank() != space_.g.rank)
    throw ValidationError("class rank does not match the space");
}

EquivariantClass make_class(const SpaceSpec& space, Polynomial poly) {
  EquivariantClass cls(space, std::move(poly));
  for (const auto& root : space.h.h_simple_roots) {
    WeylElement s = reflection_for_root(space.g, root);
    if (!(act(s, cls.poly()) == cls.poly()))
      throw NotInvariantError("class is not invariant under the reflection in " + root.to_string() +
                                  " (" + s.to_string() + ")",
                              s.to_string());
  }
  return cls;
}

Polynomial restrict_to_fixed_point(const EquivariantClass& cls, const WeylElement& w) {
  return act(w, cls.poly().retagged(VarFamily::U));
}

Polynomial restrict_to_fixed_point(const EquivariantClass& cls, const CosetRep& rep) {
  return restrict_to_fixed_point(cls, rep.element);
}

FactoredLinearProduct euler_at(const SpaceSpec& space, const CosetRep& rep) {
  FactoredLinearProduct out{Rational(1), {}, space.g.rank};
  for (const auto& alpha : space.h.complement) {
    ScaledForm sf = root_to_linear_form(rep.element.apply(-alpha));
    out.scale *= rational(sf.scalar);
    out.forms[sf.form] += 1;
  }
  return out;
}

namespace {

RatFunc term_at(const EquivariantClass& cls, const CosetRep& rep) {
  FactoredLinearProduct euler = euler_at(cls.space(), rep);
  return RatFunc(1 / euler.scale, restrict_to_fixed_point(cls, rep), std::move(euler.forms));
}

std::vector<RatFunc> terms_of_poly(const SpaceSpec& space, const Polynomial& poly_y, int threads) {
  // Invariance was checked by the caller; skip revalidation per component.
  EquivariantClass cls(space, poly_y);
  const auto& reps = *space.reps;
  std::vector<RatFunc> terms(reps.size(), RatFunc::zero(space.g.rank));
  if (threads > 1) {
#pragma omp parallel for schedule(dynamic) num_threads(threads)
    for (std::size_t i = 0; i < reps.size(); ++i) terms[i] = term_at(cls, reps[i]);
  } else {
    for (std::size_t i = 0; i < reps.size(); ++i) terms[i] = term_at(cls, reps[i]);
  }
  return terms;
}

}  // namespace

std::vector<RatFunc> localization_terms(const EquivariantClass& cls, int threads) {
  return terms_of_poly(cls.space(), cls.poly(), threads);
}

Polynomial equivariant_integrate(const EquivariantClass& cls, int threads) {
  const SpaceSpec& space = cls.space();
  Polynomial result(VarFamily::U, space.g.rank);
  // Term sums run per homogeneous degree; each reduces on its own.
  for (const auto& [deg, comp] : cls.poly().homogeneous_components()) {
    auto terms = terms_of_poly(space, comp, threads);
    result += sum_ratfuncs(terms, space.g.rank, threads).to_poly();
  }
  return result;
}

Rational integrate(const EquivariantClass& cls, int threads) {
  const int d = cls.space().dim_complex;
  if (!cls.poly().is_homogeneous_of_degree(d))
    throw DegreeMismatchError("integrand must be homogeneous of degree " + std::to_string(d) +
                              " (the complex dimension), got degree " +
                              std::to_string(cls.poly().degree()));
  Polynomial eq = equivariant_integrate(cls, threads);
  // u = 0 specialization of a degree-0 polynomial: its constant term.
  return eq.eval(std::vector<Rational>(cls.space().g.rank, Rational(0)));
}

Polynomial antisym_integrate(const SpaceSpec& space, const Polynomial& f_u, int threads) {
  if (!space.h.is_torus())
    throw ValidationError("antisymmetrization route requires H = T");
  if (f_u.family() != VarFamily::U || f_u.rank() != space.g.rank)
    throw ValidationError("input must be a u-polynomial of the space's rank");

  const auto& reps = *space.reps;  // H = T: the representatives are all of W
  std::vector<Polynomial> parts(reps.size(), Polynomial(VarFamily::U, space.g.rank));
  if (threads > 1) {
#pragma omp parallel for schedule(dynamic) num_threads(threads)
    for (std::size_t i = 0; i < reps.size(); ++i) {
      Polynomial t = act(reps[i].element, f_u);
      parts[i] = reps[i].len % 2 ? -t : std::move(t);
    }
  } else {
    for (std::size_t i = 0; i < reps.size(); ++i) {
      Polynomial t = act(reps[i].element, f_u);
      parts[i] = reps[i].len % 2 ? -t : std::move(t);
    }
  }
  Polynomial numerator(VarFamily::U, space.g.rank);
  for (const auto& p : parts) numerator += p;

  // Weyl denominator in the pinned orientation: product of c(-alpha).
  Rational scale(1);
  FormProduct forms;
  for (const auto& alpha : space.h.complement) {
    ScaledForm sf = root_to_linear_form(-alpha);
    scale *= rational(sf.scalar);
    forms[sf.form] += 1;
  }
  return RatFunc(1 / scale, std::move(numerator), std::move(forms)).to_poly();
}

bool verify_relation(const SpaceSpec& space, const Polynomial& b_u) {
  if (b_u.family() != VarFamily::U || b_u.rank() != space.g.rank)
    throw ValidationError("relation witness must be a u-polynomial of the space's rank");
  for (const auto& root : space.g.simple_roots) {
    WeylElement s = reflection_for_root(space.g, root);
    if (!(act(s, b_u) == b_u))
      throw NotInvariantError("witness is not Weyl-invariant: moved by the reflection in " +
                                  root.to_string() + " (" + s.to_string() + ")",
                              s.to_string());
  }
  // Restriction of b(y) at the fixed point w is w . b(u); all must agree.
  for (const auto& rep : *space.reps)
    if (!(act(rep.element, b_u) == b_u)) return false;
  return true;
}

long euler_characteristic(const SpaceSpec& space) {
  const long count = space.coset_count();
  // Cross-check: integrating the tangent Euler class counts fixed points.
  Polynomial euler_y = Polynomial::constant(VarFamily::Y, space.g.rank, Rational(1));
  for (const auto& alpha : space.h.complement) {
    ScaledForm sf = root_to_linear_form(-alpha);
    euler_y = euler_y * sf.form.to_poly(VarFamily::Y) * rational(sf.scalar);
  }
  Rational chi = integrate(make_class(space, euler_y));
  if (chi != rational(count))
    throw std::logic_error("Euler characteristic cross-check failed");
  return count;
}

std::vector<long> poincare_polynomial(const SpaceSpec& space) {
  std::vector<long> coeff(2 * space.dim_complex + 1, 0);
  for (const auto& rep : *space.reps) coeff[2 * rep.len] += 1;
  return coeff;
}

Polynomial symmetrize(const SpaceSpec& space, const Polynomial& poly_y) {
  if (poly_y.family() != VarFamily::Y || poly_y.rank() != space.g.rank)
    throw ValidationError("symmetrization expects a y-polynomial of the space's rank");
  Polynomial acc(VarFamily::Y, space.g.rank);
  for (const auto& h : *space.h_elements) acc += act(h, poly_y);
  return acc * rational(1, static_cast<long>(space.h_elements->size()));
}

}  // namespace weylsum
