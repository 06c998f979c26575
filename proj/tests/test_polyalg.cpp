#include <optional>

#include "doctest.h"
#include "json.hpp"
#include "test_support.hpp"
#include "weylsum/errors.hpp"
#include "weylsum/linear_form.hpp"
#include "weylsum/polynomial.hpp"
#include "weylsum/ratfunc.hpp"
#include "weylsum/rational.hpp"

using namespace weylsum;
using testsupport::make_rng;
using testsupport::random_polynomial;

namespace {

Polynomial var(VarFamily f, int rank, int i) { return Polynomial::variable(f, rank, i); }

Polynomial cns(VarFamily f, int rank, long v) {
  return Polynomial::constant(f, rank, rational(v));
}

}  // namespace

TEST_CASE("rational parsing and canonical form") {
  CHECK(parse_rational("3/6") == rational(1, 2));
  CHECK(parse_rational("-4/2") == rational(-2));
  CHECK(parse_rational("0") == rational(0));
  CHECK(to_string(parse_rational("-10/4")) == "-5/2");
  CHECK_THROWS_AS(parse_rational("1/0"), ValidationError);
  CHECK_THROWS_AS(parse_rational("a"), ValidationError);
  CHECK_THROWS_AS(parse_rational("1/"), ValidationError);
  CHECK_THROWS_AS(parse_rational(""), ValidationError);
  CHECK(rat_pow(rational(2, 3), 3) == rational(8, 27));
  CHECK(rat_pow(rational(5), 0) == rational(1));
}

TEST_CASE("terms merge and zero terms vanish") {
  Polynomial p(VarFamily::U, 2);
  p.add_term({1, 0}, rational(2));
  p.add_term({1, 0}, rational(-2));
  CHECK(p.is_zero());
  CHECK(p.degree() == -1);
  p.add_term({0, 0}, rational(1, 2));
  p.add_term({0, 0}, rational(1, 2));
  CHECK(p.terms().size() == 1);
  CHECK(p.terms().begin()->second == rational(1));
}

TEST_CASE("difference of squares") {
  Polynomial u1 = var(VarFamily::U, 2, 0), u2 = var(VarFamily::U, 2, 1);
  Polynomial prod = (u1 - u2) * (u1 + u2);
  CHECK(prod == u1 * u1 - u2 * u2);
  CHECK(prod.to_string() == "u1^2 - u2^2");
}

TEST_CASE("binomial cube and power operator") {
  Polynomial y1 = var(VarFamily::Y, 2, 0), y2 = var(VarFamily::Y, 2, 1);
  Polynomial cube = pow(y1 + y2, 3);
  CHECK(cube.to_string() == "y1^3 + 3*y1^2*y2 + 3*y1*y2^2 + y2^3");
  CHECK(pow(y1, 0) == cns(VarFamily::Y, 2, 1));
}

TEST_CASE("rendering follows graded-lex descending order") {
  Polynomial p(VarFamily::U, 2);
  p.add_term({1, 2}, rational(1));
  p.add_term({3, 0}, rational(1));
  p.add_term({0, 1}, rational(1));
  CHECK(p.to_string() == "u1^3 + u1*u2^2 + u2");
  CHECK(cns(VarFamily::U, 2, 0).to_string() == "0");
  Polynomial q(VarFamily::U, 2);
  q.add_term({1, 0}, rational(1, 2));
  q.add_term({0, 0}, rational(-3));
  CHECK(q.to_string() == "1/2*u1 - 3");
}

TEST_CASE("json rendering is the canonical term list") {
  Polynomial p(VarFamily::U, 2);
  p.add_term({2, 0}, rational(1));
  p.add_term({0, 2}, rational(-1));
  auto j = nlohmann::json::parse(p.to_json());
  REQUIRE(j.is_array());
  REQUIRE(j.size() == 2);
  CHECK(j[0]["exponents"] == nlohmann::json::array({2, 0}));
  CHECK(j[0]["coeff"] == "1");
  CHECK(j[1]["exponents"] == nlohmann::json::array({0, 2}));
  CHECK(j[1]["coeff"] == "-1");
}

TEST_CASE("ring laws on random inputs") {
  auto rng = make_rng(11);
  for (int it = 0; it < 25; ++it) {
    Polynomial a = random_polynomial(rng, VarFamily::U, 3, 3, 4);
    Polynomial b = random_polynomial(rng, VarFamily::U, 3, 3, 4);
    Polynomial c = random_polynomial(rng, VarFamily::U, 3, 3, 4);
    CHECK(a + b == b + a);
    CHECK(a * b == b * a);
    CHECK((a + b) + c == a + (b + c));
    CHECK((a * b) * c == a * (b * c));
    CHECK(a * (b + c) == a * b + a * c);
    CHECK(a - a == Polynomial(VarFamily::U, 3));
  }
}

TEST_CASE("evaluation commutes with arithmetic") {
  auto rng = make_rng(12);
  std::vector<Rational> pt{rational(3, 2), rational(-1), rational(5)};
  for (int it = 0; it < 20; ++it) {
    Polynomial a = random_polynomial(rng, VarFamily::U, 3, 3, 4);
    Polynomial b = random_polynomial(rng, VarFamily::U, 3, 3, 4);
    CHECK((a + b).eval(pt) == a.eval(pt) + b.eval(pt));
    CHECK((a * b).eval(pt) == a.eval(pt) * b.eval(pt));
  }
}

TEST_CASE("degree and homogeneous decomposition") {
  Polynomial u1 = var(VarFamily::U, 2, 0), u2 = var(VarFamily::U, 2, 1);
  Polynomial p = u1 * u1 + u2 + cns(VarFamily::U, 2, 7);
  CHECK(p.degree() == 2);
  CHECK(!p.is_homogeneous());
  auto parts = p.homogeneous_components();
  CHECK(parts.size() == 3);
  CHECK(parts.at(2) == u1 * u1);
  CHECK(parts.at(1) == u2);
  CHECK(parts.at(0) == cns(VarFamily::U, 2, 7));
  CHECK((u1 * u2).is_homogeneous_of_degree(2));
  Polynomial sum(VarFamily::U, 2);
  for (auto& [d, comp] : parts) sum += comp;
  CHECK(sum == p);
}

TEST_CASE("weyl action substitutes and flips variables") {
  RootSystem a3 = build_root_system(Family::A, 3);
  WeylElement swap12 = reflection_for_root(a3, Weight({1, -1, 0}));
  Polynomial u1 = var(VarFamily::U, 3, 0);
  Polynomial u2 = var(VarFamily::U, 3, 1);
  CHECK(act(swap12, u1) == u2);
  CHECK(act(swap12, u2) == u1);

  RootSystem b2 = build_root_system(Family::B, 2);
  WeylElement flip2 = reflection_for_root(b2, Weight({0, 1}));
  Polynomial p = var(VarFamily::U, 2, 0) * var(VarFamily::U, 2, 0) +
                 var(VarFamily::U, 2, 0) * var(VarFamily::U, 2, 1);
  Polynomial expect = var(VarFamily::U, 2, 0) * var(VarFamily::U, 2, 0) -
                      var(VarFamily::U, 2, 0) * var(VarFamily::U, 2, 1);
  CHECK(act(flip2, p) == expect);
}

TEST_CASE("weyl action is a ring homomorphism compatible with composition") {
  auto rng = make_rng(13);
  RootSystem b2 = build_root_system(Family::B, 2);
  std::vector<WeylElement> group = weyl_elements(b2);
  for (int it = 0; it < 10; ++it) {
    Polynomial a = random_polynomial(rng, VarFamily::U, 2, 3, 3);
    Polynomial b = random_polynomial(rng, VarFamily::U, 2, 3, 3);
    for (const WeylElement& w : group) {
      CHECK(act(w, a * b) == act(w, a) * act(w, b));
      CHECK(act(w, a + b) == act(w, a) + act(w, b));
    }
    const WeylElement& w1 = group[3];
    const WeylElement& w2 = group[6];
    CHECK(act(w1.compose(w2), a) == act(w1, act(w2, a)));
    CHECK(act(WeylElement::identity(2), a) == a);
  }
}

TEST_CASE("action on variables matches the action on weights") {
  RootSystem c3 = build_root_system(Family::C, 3);
  for (const WeylElement& w : weyl_elements(c3)) {
    for (int i = 0; i < 3; ++i) {
      Weight img = w.apply(basis_weight(3, i));
      ScaledForm sf = root_to_linear_form(img);
      Polynomial expect = sf.form.to_poly(VarFamily::U) * rational(sf.scalar);
      CHECK(act(w, var(VarFamily::U, 3, i)) == expect);
    }
  }
}

TEST_CASE("elementary symmetric polynomials") {
  std::vector<int> all{0, 1, 2};
  Polynomial s2 = elem_sym(VarFamily::Y, 3, all, 2);
  Polynomial y1 = var(VarFamily::Y, 3, 0), y2 = var(VarFamily::Y, 3, 1),
             y3 = var(VarFamily::Y, 3, 2);
  CHECK(s2 == y1 * y2 + y1 * y3 + y2 * y3);
  CHECK(elem_sym(VarFamily::Y, 3, all, 0) == cns(VarFamily::Y, 3, 1));
  CHECK(elem_sym(VarFamily::Y, 3, {0, 1}, 3).is_zero());
  CHECK(elem_sym(VarFamily::Y, 4, {2, 3}, 2) ==
        var(VarFamily::Y, 4, 2) * var(VarFamily::Y, 4, 3));
}

TEST_CASE("elementary symmetrics satisfy the generating identity") {
  // prod_i (1 + t*y_i) = sum_r t^r sigma_r, with t realized as an extra variable
  int rank = 4;
  std::vector<int> vars{0, 1, 2};
  Polynomial lhs = cns(VarFamily::Y, rank, 1);
  Polynomial t = var(VarFamily::Y, rank, 3);
  for (int i : vars) lhs = lhs * (cns(VarFamily::Y, rank, 1) + t * var(VarFamily::Y, rank, i));
  Polynomial rhs(VarFamily::Y, rank);
  for (int r = 0; r <= 3; ++r) rhs += elem_sym(VarFamily::Y, rank, vars, r) * pow(t, r);
  CHECK(lhs == rhs);
}

TEST_CASE("power sums") {
  CHECK(power_sum(VarFamily::Y, 2, {0, 1}, 2) ==
        var(VarFamily::Y, 2, 0) * var(VarFamily::Y, 2, 0) +
            var(VarFamily::Y, 2, 1) * var(VarFamily::Y, 2, 1));
  CHECK(power_sum(VarFamily::Y, 2, {0, 1}, 0) == cns(VarFamily::Y, 2, 2));
  CHECK(power_sum(VarFamily::U, 3, {1}, 3) == pow(var(VarFamily::U, 3, 1), 3));
}

TEST_CASE("retagging moves between variable families") {
  Polynomial y = var(VarFamily::Y, 2, 0) + cns(VarFamily::Y, 2, 3);
  Polynomial u = y.retagged(VarFamily::U);
  CHECK(u.family() == VarFamily::U);
  CHECK(u.to_string() == "u1 + 3");
  CHECK(u.retagged(VarFamily::Y) == y);
}

TEST_CASE("mixed-family arithmetic is rejected") {
  Polynomial y = var(VarFamily::Y, 2, 0);
  Polynomial u = var(VarFamily::U, 2, 0);
  CHECK_THROWS_AS(y + u, ValidationError);
  CHECK_THROWS_AS(y * u, ValidationError);
}

TEST_CASE("linear form normalization") {
  auto [f1, s1] = LinearForm::normalized({2, -2, 0});
  CHECK(f1.coeffs() == std::vector<int>{1, -1, 0});
  CHECK(s1 == 2);
  auto [f2, s2] = LinearForm::normalized({0, -3, 3});
  CHECK(f2.coeffs() == std::vector<int>{0, 1, -1});
  CHECK(s2 == -3);
  CHECK_THROWS_AS(LinearForm::normalized({0, 0}), ValidationError);
  CHECK(f1.to_string() == "u1 - u2");
  CHECK(f1.eval({rational(5), rational(2), rational(0)}) == rational(3));
}

TEST_CASE("weights become scaled primitive forms") {
  ScaledForm a = root_to_linear_form(Weight({1, -1, 0}));
  CHECK(a.scalar == 1);
  CHECK(a.form.coeffs() == std::vector<int>{1, -1, 0});
  ScaledForm b = root_to_linear_form(Weight({-1, 1, 0}));
  CHECK(b.scalar == -1);
  CHECK(b.form.coeffs() == std::vector<int>{1, -1, 0});
  ScaledForm c = root_to_linear_form(Weight({2, 0}));
  CHECK(c.scalar == 2);
  CHECK(c.form.coeffs() == std::vector<int>{1, 0});
  CHECK_THROWS_AS(root_to_linear_form(Weight({0, 0})), ValidationError);
}

TEST_CASE("form product expansion and multiset algebra") {
  auto [d12, s12] = LinearForm::normalized({1, -1, 0});
  auto [d13, s13] = LinearForm::normalized({1, 0, -1});
  FormProduct a{{d12, 2}, {d13, 1}};
  FormProduct b{{d12, 1}};
  FormProduct lcm = multiset_union_max(a, b);
  CHECK(lcm == a);
  FormProduct quo = multiset_subtract(a, b);
  CHECK(quo == FormProduct{{d12, 1}, {d13, 1}});
  Polynomial u1 = var(VarFamily::U, 3, 0), u2 = var(VarFamily::U, 3, 1),
             u3 = var(VarFamily::U, 3, 2);
  CHECK(expand(quo, VarFamily::U, 3) == (u1 - u2) * (u1 - u3));
}

TEST_CASE("exact division by linear forms") {
  Polynomial u1 = var(VarFamily::U, 2, 0), u2 = var(VarFamily::U, 2, 1);
  auto [d, s] = LinearForm::normalized({1, -1});
  auto q = divide_exact(u1 * u1 - u2 * u2, d);
  REQUIRE(q.has_value());
  CHECK(*q == u1 + u2);
  CHECK(!divide_exact(u1 * u1 + u2 * u2, d).has_value());
  CHECK(!divide_exact(cns(VarFamily::U, 2, 1), d).has_value());
  auto z = divide_exact(Polynomial(VarFamily::U, 2), d);
  REQUIRE(z.has_value());
  CHECK(z->is_zero());
}

TEST_CASE("division recovers random cofactors") {
  auto rng = make_rng(14);
  auto [d, s] = LinearForm::normalized({1, 0, -1});
  for (int it = 0; it < 20; ++it) {
    Polynomial f = random_polynomial(rng, VarFamily::U, 3, 4, 5);
    Polynomial prod = f * d.to_poly(VarFamily::U);
    auto q = divide_exact(prod, d);
    REQUIRE(q.has_value());
    CHECK(*q == f);
  }
}

TEST_CASE("rational function sum telescopes to a constant") {
  // u1/(u1-u2) + u2/(u2-u1) = 1
  Polynomial u1 = var(VarFamily::U, 2, 0), u2 = var(VarFamily::U, 2, 1);
  auto [d, s] = LinearForm::normalized({1, -1});
  RatFunc t1(rational(1), u1, FormProduct{{d, 1}});
  RatFunc t2(rational(-1), u2, FormProduct{{d, 1}});
  RatFunc sum = t1 + t2;
  CHECK(sum.to_poly() == cns(VarFamily::U, 2, 1));

  RatFunc n1(rational(1), cns(VarFamily::U, 2, 1), FormProduct{{d, 1}});
  RatFunc n2(rational(-1), cns(VarFamily::U, 2, 1), FormProduct{{d, 1}});
  CHECK((n1 + n2).is_zero());
  CHECK((n1 + n2).to_poly().is_zero());
}

TEST_CASE("non-polynomial sums report the surviving factors") {
  Polynomial one = cns(VarFamily::U, 2, 1);
  auto [d, s] = LinearForm::normalized({1, -1});
  RatFunc f(rational(1), one, FormProduct{{d, 1}});
  CHECK_THROWS_AS(f.to_poly(), NotPolynomialError);
  try {
    f.to_poly();
  } catch (const NotPolynomialError& e) {
    CHECK(e.surviving_factors() == "(u1 - u2)");
    CHECK(e.kind() == "NotPolynomial");
  }
}

TEST_CASE("rational function evaluation") {
  Polynomial one = cns(VarFamily::U, 2, 1);
  auto [d, s] = LinearForm::normalized({1, -1});
  RatFunc f(rational(1), one, FormProduct{{d, 1}});
  CHECK(f.eval({rational(3), rational(1)}) == rational(1, 2));
  CHECK_THROWS_AS(f.eval({rational(1), rational(1)}), DenominatorVanishesError);
}

TEST_CASE("evaluated partial fractions sum to one") {
  // sum_i u_i^2 / prod_{j != i} (u_i - u_j) over three variables is 1;
  // checked at the point (0, 1, 5)
  int rank = 3;
  std::vector<Rational> pt{rational(0), rational(1), rational(5)};
  Rational total(0);
  for (int i = 0; i < rank; ++i) {
    Polynomial num = pow(var(VarFamily::U, rank, i), 2);
    Rational scale(1);
    FormProduct den;
    for (int j = 0; j < rank; ++j) {
      if (j == i) continue;
      ScaledForm sf = root_to_linear_form(basis_weight(rank, i) - basis_weight(rank, j));
      scale *= rational(sf.scalar);
      den[sf.form] += 1;
    }
    RatFunc term(rational(1) / scale, num, den);
    total += term.eval(pt);
  }
  CHECK(total == rational(1));
}

TEST_CASE("ratfunc addition matches evaluation") {
  auto rng = make_rng(15);
  std::vector<Rational> pt{rational(2), rational(9), rational(31)};
  auto [d12, s12] = LinearForm::normalized({1, -1, 0});
  auto [d23, s23] = LinearForm::normalized({0, 1, -1});
  for (int it = 0; it < 15; ++it) {
    Polynomial a = random_polynomial(rng, VarFamily::U, 3, 3, 3);
    Polynomial b = random_polynomial(rng, VarFamily::U, 3, 3, 3);
    RatFunc fa(rational(1, 2), a, FormProduct{{d12, 1}});
    RatFunc fb(rational(3), b, FormProduct{{d12, 1}, {d23, 2}});
    RatFunc sum = fa + fb;
    CHECK(sum.eval(pt) == fa.eval(pt) + fb.eval(pt));
  }
}

TEST_CASE("sum_ratfuncs is independent of thread count") {
  auto rng = make_rng(16);
  auto [d12, s12] = LinearForm::normalized({1, -1, 0});
  auto [d13, s13] = LinearForm::normalized({1, 0, -1});
  std::vector<RatFunc> terms;
  for (int it = 0; it < 17; ++it) {
    Polynomial a = random_polynomial(rng, VarFamily::U, 3, 3, 3);
    terms.emplace_back(rational((it % 5) + 1, 3), a, FormProduct{{d12, (it % 2) + 1}, {d13, 1}});
  }
  RatFunc serial = sum_ratfuncs(terms, 3, 1);
  RatFunc parallel = sum_ratfuncs(terms, 3, 4);
  CHECK(serial.scale() == parallel.scale());
  CHECK(serial.numerator() == parallel.numerator());
  CHECK(serial.denominator() == parallel.denominator());
  CHECK(serial.to_string() == parallel.to_string());
}
