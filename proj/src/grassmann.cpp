#include "weylsum/grassmann.hpp"

#include <numeric>

#include "weylsum/errors.hpp"

namespace weylsum {

GrassmannSpec grassmannian(int k, int n) {
  if (n < 2 || k < 1 || k >= n)
    throw ValidationError("Grassmannian needs 0 < k < n, got k=" + std::to_string(k) +
                          ", n=" + std::to_string(n));
  RootSystem rs = build_root_system(Family::A, n);
  // U(k) x U(n-k): every simple root except the k-th.
  std::vector<int> sel;
  for (int i = 1; i <= n - 1; ++i)
    if (i != k) sel.push_back(i);
  SubsystemSpec h = subsystem(rs, sel);
  GrassmannSpec spec;
  spec.k = k;
  spec.n = n;
  spec.space = make_space(std::move(rs), std::move(h));
  return spec;
}

Polynomial chern(const GrassmannSpec& spec, TautBundle bundle, int r) {
  const int rank_of_bundle = bundle == TautBundle::Sub ? spec.k : spec.n - spec.k;
  if (r < 0 || r > rank_of_bundle)
    throw ValidationError("Chern index " + std::to_string(r) + " outside 0.." +
                          std::to_string(rank_of_bundle));
  std::vector<int> vars;
  if (bundle == TautBundle::Sub)
    for (int i = 0; i < spec.k; ++i) vars.push_back(i);
  else
    for (int i = spec.k; i < spec.n; ++i) vars.push_back(i);
  return elem_sym(VarFamily::Y, spec.n, vars, r);
}

std::pair<std::vector<int>, std::vector<int>> multi_index(const GrassmannSpec& spec,
                                                          const CosetRep& rep) {
  std::vector<int> I, J;
  for (int i = 0; i < spec.k; ++i) I.push_back(rep.element.perm[i] + 1);
  for (int i = spec.k; i < spec.n; ++i) J.push_back(rep.element.perm[i] + 1);
  return {std::move(I), std::move(J)};
}

namespace {

void check_degree(const GrassmannSpec& spec, const std::vector<int>& m) {
  if (static_cast<int>(m.size()) > spec.k)
    throw ValidationError("exponent vector longer than the subbundle rank");
  long total = 0;
  for (std::size_t r = 0; r < m.size(); ++r) {
    if (m[r] < 0) throw ValidationError("negative exponent in characteristic number");
    total += static_cast<long>(r + 1) * m[r];
  }
  if (total != spec.dim())
    throw DegreeMismatchError("monomial degree " + std::to_string(total) +
                              " must equal dim G(k,n) = " + std::to_string(spec.dim()));
}

}  // namespace

Rational char_number(const GrassmannSpec& spec, const std::vector<int>& m, int threads) {
  check_degree(spec, m);
  Polynomial f = Polynomial::constant(VarFamily::Y, spec.n, Rational(1));
  for (std::size_t r = 0; r < m.size(); ++r)
    if (m[r]) f = f * pow(chern(spec, TautBundle::Sub, static_cast<int>(r + 1)), m[r]);
  return integrate(make_class(spec.space, std::move(f)), threads);
}

std::vector<RatFunc> char_number_terms(const GrassmannSpec& spec, const std::vector<int>& m) {
  check_degree(spec, m);
  const int k = spec.k, n = spec.n;
  std::vector<RatFunc> terms;
  std::vector<int> I(k);
  std::iota(I.begin(), I.end(), 0);
  while (true) {
    std::vector<bool> in_I(n, false);
    for (int i : I) in_I[i] = true;

    Polynomial num = Polynomial::constant(VarFamily::U, n, Rational(1));
    for (std::size_t r = 0; r < m.size(); ++r)
      if (m[r]) num = num * pow(elem_sym(VarFamily::U, n, I, static_cast<int>(r + 1)), m[r]);

    // Tangent weights at the coordinate plane I: u_j - u_i, i in I, j not.
    Rational scale(1);
    FormProduct den;
    for (int i : I)
      for (int j = 0; j < n; ++j) {
        if (in_I[j]) continue;
        Weight w(std::vector<int>(n, 0));
        w.c[j] = 1;
        w.c[i] = -1;
        ScaledForm sf = root_to_linear_form(w);
        scale *= rational(sf.scalar);
        den[sf.form] += 1;
      }
    terms.emplace_back(1 / scale, std::move(num), std::move(den));

    int i = k - 1;
    while (i >= 0 && I[i] == n - k + i) --i;
    if (i < 0) break;
    ++I[i];
    for (int j = i + 1; j < k; ++j) I[j] = I[j - 1] + 1;
  }
  return terms;
}

Rational char_number_direct(const GrassmannSpec& spec, const std::vector<int>& m, int threads) {
  auto terms = char_number_terms(spec, m);
  Polynomial reduced = sum_ratfuncs(terms, spec.n, threads).to_poly();
  return reduced.eval(std::vector<Rational>(spec.n, Rational(0)));
}

BigInt plucker_degree(int k, int n) {
  if (n < 2 || k < 1 || k >= n)
    throw ValidationError("Pluecker degree needs 0 < k < n");
  auto fac = [](unsigned long v) {
    BigInt f;
    mpz_fac_ui(f.get_mpz_t(), v);
    return f;
  };
  BigInt num = fac(static_cast<unsigned long>(k) * (n - k));
  BigInt den(1);
  for (int i = 0; i < k; ++i) {
    num *= fac(i);
    den *= fac(n - k + i);
  }
  Rational q = rational(num, den);
  if (q.get_den() != 1) throw std::logic_error("Pluecker degree is not integral");
  return q.get_num();
}

}  // namespace weylsum
