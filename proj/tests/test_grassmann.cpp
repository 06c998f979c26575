#include <algorithm>
#include <set>

#include "doctest.h"
#include "test_support.hpp"
#include "weylsum/errors.hpp"
#include "weylsum/grassmann.hpp"

using namespace weylsum;
using testsupport::make_rng;
using testsupport::random_distinct_point;
using testsupport::random_invariant;

namespace {

Polynomial yvar(int rank, int i) { return Polynomial::variable(VarFamily::Y, rank, i); }

}  // namespace

TEST_CASE("grassmannian construction") {
  GrassmannSpec g13 = grassmannian(1, 3);
  CHECK(g13.dim() == 2);
  CHECK(g13.space.dim_complex == 2);
  CHECK(g13.space.coset_count() == 3);

  GrassmannSpec g24 = grassmannian(2, 4);
  CHECK(g24.dim() == 4);
  CHECK(g24.space.coset_count() == 6);

  // n = 2 degenerates to the full flag of rank 2
  GrassmannSpec g12 = grassmannian(1, 2);
  CHECK(g12.space.coset_count() == 2);
  CHECK(g12.space.h.is_torus());

  CHECK_THROWS_AS(grassmannian(0, 3), ValidationError);
  CHECK_THROWS_AS(grassmannian(3, 3), ValidationError);
  CHECK_THROWS_AS(grassmannian(4, 3), ValidationError);
}

TEST_CASE("tautological chern classes are block elementary symmetrics") {
  GrassmannSpec g24 = grassmannian(2, 4);
  CHECK(chern(g24, TautBundle::Sub, 1) == yvar(4, 0) + yvar(4, 1));
  CHECK(chern(g24, TautBundle::Sub, 2) == yvar(4, 0) * yvar(4, 1));
  CHECK(chern(g24, TautBundle::Quot, 2) == yvar(4, 2) * yvar(4, 3));
  CHECK(chern(g24, TautBundle::Quot, 1) == yvar(4, 2) + yvar(4, 3));
  CHECK(chern(g24, TautBundle::Sub, 0) ==
        Polynomial::constant(VarFamily::Y, 4, rational(1)));
  CHECK_THROWS_AS(chern(g24, TautBundle::Sub, 3), ValidationError);
  CHECK_THROWS_AS(chern(g24, TautBundle::Quot, -1), ValidationError);
}

TEST_CASE("fixed points carry the increasing multi-indices") {
  GrassmannSpec g24 = grassmannian(2, 4);
  std::set<std::vector<int>> seen;
  for (const CosetRep& rep : *g24.space.reps) {
    auto [I, J] = multi_index(g24, rep);
    REQUIRE(I.size() == 2);
    REQUIRE(J.size() == 2);
    CHECK(I[0] < I[1]);
    CHECK(J[0] < J[1]);
    std::vector<int> all = {I[0], I[1], J[0], J[1]};
    std::sort(all.begin(), all.end());
    CHECK(all == std::vector<int>{1, 2, 3, 4});
    seen.insert(I);
  }
  CHECK(seen.size() == 6);
  auto [I0, J0] = multi_index(g24, (*g24.space.reps)[0]);
  CHECK(I0 == std::vector<int>{1, 2});
  CHECK(J0 == std::vector<int>{3, 4});
}

TEST_CASE("characteristic numbers of the projective plane") {
  GrassmannSpec g13 = grassmannian(1, 3);
  CHECK(char_number(g13, {2}) == rational(1));
  CHECK(char_number_direct(g13, {2}) == rational(1));
}

TEST_CASE("characteristic numbers of the four-dimensional Grassmannian") {
  GrassmannSpec g24 = grassmannian(2, 4);
  CHECK(char_number(g24, {4, 0}) == rational(2));
  CHECK(char_number(g24, {0, 2}) == rational(1));
  CHECK(char_number(g24, {2, 1}) == rational(1));
}

TEST_CASE("degree side condition is enforced") {
  GrassmannSpec g24 = grassmannian(2, 4);
  CHECK_THROWS_AS(char_number(g24, {1, 0}), DegreeMismatchError);
  CHECK_THROWS_AS(char_number(g24, {0, 0}), DegreeMismatchError);
  CHECK_THROWS_AS(char_number(g24, {1, 1, 1}), ValidationError);
  CHECK_THROWS_AS(char_number(g24, {-4, 0}), ValidationError);
}

TEST_CASE("coset route and direct multi-index route agree") {
  GrassmannSpec g24 = grassmannian(2, 4);
  for (const std::vector<int>& m : {std::vector<int>{4, 0}, std::vector<int>{2, 1},
                                    std::vector<int>{0, 2}}) {
    CHECK(char_number(g24, m) == char_number_direct(g24, m));
  }
  GrassmannSpec g14 = grassmannian(1, 4);
  CHECK(char_number(g14, {3}) == rational(-1));
  CHECK(char_number_direct(g14, {3}) == rational(-1));
  GrassmannSpec g25 = grassmannian(2, 5);
  CHECK(char_number(g25, {6, 0}) == char_number_direct(g25, {6, 0}));
}

TEST_CASE("unreduced multi-index terms sum to the same constant everywhere") {
  auto rng = make_rng(31);
  GrassmannSpec g24 = grassmannian(2, 4);
  std::vector<RatFunc> terms = char_number_terms(g24, {0, 2});
  CHECK(terms.size() == 6);
  Rational expect = char_number(g24, {0, 2});
  for (int it = 0; it < 3; ++it) {
    std::vector<Rational> pt = random_distinct_point(rng, 4);
    Rational total(0);
    for (const RatFunc& t : terms) total += t.eval(pt);
    CHECK(total == expect);
  }
}

TEST_CASE("pluecker degrees") {
  CHECK(plucker_degree(1, 2) == 1);
  CHECK(plucker_degree(1, 5) == 1);
  CHECK(plucker_degree(2, 4) == 2);
  CHECK(plucker_degree(2, 5) == 5);
  CHECK(plucker_degree(3, 6) == 42);
  CHECK(plucker_degree(2, 6) == 14);
  CHECK_THROWS_AS(plucker_degree(0, 3), ValidationError);
}

TEST_CASE("top self-intersection matches the embedding degree up to orientation") {
  for (auto [k, n] : {std::pair{1, 2}, std::pair{1, 3}, std::pair{2, 4}}) {
    GrassmannSpec g = grassmannian(k, n);
    int d = g.dim();
    std::vector<int> m(static_cast<std::size_t>(k), 0);
    m[0] = d;
    Rational value = char_number(g, m);
    Rational expect = rational(BigInt(plucker_degree(k, n)), BigInt(1));
    if (d % 2) expect = -expect;
    CHECK(value == expect);
  }
}

TEST_CASE("complementary grassmannians pair subbundle and quotient powers") {
  // lines in C^3 against planes in C^3
  GrassmannSpec g13 = grassmannian(1, 3);
  GrassmannSpec g23 = grassmannian(2, 3);
  Rational via_q =
      integrate(make_class(g23.space, pow(chern(g23, TautBundle::Quot, 1), 2)));
  CHECK(char_number(g13, {2}) == via_q);

  GrassmannSpec g12 = grassmannian(1, 2);
  Rational s_side = char_number(g12, {1});
  Rational q_side = integrate(make_class(g12.space, chern(g12, TautBundle::Quot, 1)));
  CHECK(s_side == rational(-1));
  CHECK(q_side == rational(1));
}

TEST_CASE("whitney sum: classes of the trivial bundle integrate to zero") {
  auto rng = make_rng(32);
  GrassmannSpec g24 = grassmannian(2, 4);
  std::vector<int> all{0, 1, 2, 3};
  for (int j = 1; j <= 4; ++j) {
    Polynomial trivial_j = elem_sym(VarFamily::Y, 4, all, j);
    Polynomial h = j == 4 ? Polynomial::constant(VarFamily::Y, 4, rational(1))
                          : random_invariant(rng, g24.space, 4 - j);
    CHECK(integrate(make_class(g24.space, trivial_j * h)) == rational(0));
  }
}

TEST_CASE("pullbacks from the point obey the projection formula") {
  auto rng = make_rng(33);
  GrassmannSpec g24 = grassmannian(2, 4);
  std::vector<int> all{0, 1, 2, 3};
  Polynomial s2_y = elem_sym(VarFamily::Y, 4, all, 2);
  Polynomial s2_u = elem_sym(VarFamily::U, 4, all, 2);
  for (int it = 0; it < 5; ++it) {
    Polynomial h = random_invariant(rng, g24.space, 4);
    Polynomial lhs = equivariant_integrate(make_class(g24.space, s2_y * h));
    Polynomial rhs = s2_u * equivariant_integrate(make_class(g24.space, h));
    CHECK(lhs == rhs);
  }
}

TEST_CASE("characteristic numbers are thread-count independent") {
  GrassmannSpec g25 = grassmannian(2, 5);
  CHECK(char_number(g25, {4, 1}, 1) == char_number(g25, {4, 1}, 4));
  CHECK(char_number_direct(g25, {4, 1}, 1) == char_number_direct(g25, {4, 1}, 4));
}
