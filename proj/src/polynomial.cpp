#include "weylsum/polynomial.hpp"

#include <algorithm>
#include <sstream>

#include "weylsum/errors.hpp"

namespace weylsum {

char variable_letter(VarFamily f) { return f == VarFamily::U ? 'u' : 'y'; }

namespace {

void require_compatible(const Polynomial& a, const Polynomial& b) {
  if (a.family() != b.family() || a.rank() != b.rank())
    throw ValidationError("polynomial family/rank mismatch");
}

}  // namespace

Polynomial Polynomial::constant(VarFamily family, int rank, const Rational& c) {
  Polynomial p(family, rank);
  p.add_term(Exponents(rank, 0), c);
  return p;
}

Polynomial Polynomial::variable(VarFamily family, int rank, int index0) {
  if (index0 < 0 || index0 >= rank)
    throw ValidationError("variable index out of range: " + std::to_string(index0 + 1));
  Polynomial p(family, rank);
  Exponents e(rank, 0);
  e[index0] = 1;
  p.add_term(e, Rational(1));
  return p;
}

int Polynomial::degree() const {
  if (terms_.empty()) return -1;
  // Leading term of the graded order has maximal total degree.
  return static_cast<int>(total_degree(terms_.begin()->first));
}

bool Polynomial::is_homogeneous() const {
  if (terms_.empty()) return true;
  unsigned d = total_degree(terms_.begin()->first);
  for (const auto& [e, c] : terms_)
    if (total_degree(e) != d) return false;
  return true;
}

bool Polynomial::is_homogeneous_of_degree(int d) const {
  for (const auto& [e, c] : terms_)
    if (static_cast<int>(total_degree(e)) != d) return false;
  return true;
}

std::map<int, Polynomial> Polynomial::homogeneous_components() const {
  std::map<int, Polynomial> out;
  for (const auto& [e, c] : terms_) {
    int d = static_cast<int>(total_degree(e));
    auto it = out.find(d);
    if (it == out.end()) it = out.emplace(d, Polynomial(family_, rank_)).first;
    it->second.add_term(e, c);
  }
  return out;
}

void Polynomial::add_term(const Exponents& e, const Rational& coeff) {
  if (coeff == 0) return;
  if (static_cast<int>(e.size()) != rank_)
    throw ValidationError("exponent vector length does not match rank");
  auto [it, inserted] = terms_.emplace(e, coeff);
  if (!inserted) {
    it->second += coeff;
    if (it->second == 0) terms_.erase(it);
  }
}

Polynomial& Polynomial::operator+=(const Polynomial& o) {
  require_compatible(*this, o);
  for (const auto& [e, c] : o.terms_) add_term(e, c);
  return *this;
}

Polynomial& Polynomial::operator-=(const Polynomial& o) {
  require_compatible(*this, o);
  for (const auto& [e, c] : o.terms_) add_term(e, -c);
  return *this;
}

Polynomial Polynomial::operator+(const Polynomial& o) const {
  Polynomial r = *this;
  r += o;
  return r;
}

Polynomial Polynomial::operator-(const Polynomial& o) const {
  Polynomial r = *this;
  r -= o;
  return r;
}

Polynomial Polynomial::operator-() const {
  Polynomial r(family_, rank_);
  for (const auto& [e, c] : terms_) r.terms_.emplace(e, -c);
  return r;
}

Polynomial Polynomial::operator*(const Polynomial& o) const {
  require_compatible(*this, o);
  Polynomial r(family_, rank_);
  Exponents e(rank_);
  for (const auto& [ea, ca] : terms_)
    for (const auto& [eb, cb] : o.terms_) {
      for (int i = 0; i < rank_; ++i) e[i] = ea[i] + eb[i];
      r.add_term(e, ca * cb);
    }
  return r;
}

Polynomial Polynomial::operator*(const Rational& c) const {
  Polynomial r(family_, rank_);
  if (c == 0) return r;
  for (const auto& [e, k] : terms_) r.terms_.emplace(e, k * c);
  return r;
}

bool Polynomial::operator==(const Polynomial& o) const {
  return family_ == o.family_ && rank_ == o.rank_ && terms_ == o.terms_;
}

Polynomial Polynomial::retagged(VarFamily family) const {
  Polynomial r(family, rank_);
  r.terms_ = terms_;
  return r;
}

Rational Polynomial::eval(const std::vector<Rational>& point) const {
  if (static_cast<int>(point.size()) != rank_)
    throw ValidationError("evaluation point has wrong dimension");
  Rational acc(0);
  for (const auto& [e, c] : terms_) {
    Rational t = c;
    for (int i = 0; i < rank_; ++i)
      if (e[i]) t *= rat_pow(point[i], e[i]);
    acc += t;
  }
  return acc;
}

std::string Polynomial::to_string() const {
  if (terms_.empty()) return "0";
  const char letter = variable_letter(family_);
  std::string out;
  for (const auto& [e, c] : terms_) {
    bool neg = c < 0;
    Rational a = neg ? Rational(-c) : c;
    if (out.empty()) {
      if (neg) out += "-";
    } else {
      out += neg ? " - " : " + ";
    }
    std::string vars;
    for (int i = 0; i < rank_; ++i) {
      if (!e[i]) continue;
      if (!vars.empty()) vars += "*";
      vars += letter + std::to_string(i + 1);
      if (e[i] > 1) vars += "^" + std::to_string(e[i]);
    }
    if (vars.empty()) {
      out += weylsum::to_string(a);
    } else {
      if (a != 1) out += weylsum::to_string(a) + "*";
      out += vars;
    }
  }
  return out;
}

std::string Polynomial::to_json() const {
  std::ostringstream os;
  os << "[";
  bool first = true;
  for (const auto& [e, c] : terms_) {
    if (!first) os << ",";
    first = false;
    os << "{\"exponents\":[";
    for (int i = 0; i < rank_; ++i) {
      if (i) os << ",";
      os << e[i];
    }
    os << "],\"coeff\":\"" << weylsum::to_string(c) << "\"}";
  }
  os << "]";
  return os.str();
}

Polynomial pow(const Polynomial& p, unsigned e) {
  Polynomial r = Polynomial::constant(p.family(), p.rank(), Rational(1));
  Polynomial base = p;
  while (e) {
    if (e & 1) r = r * base;
    e >>= 1;
    if (e) base = base * base;
  }
  return r;
}

Polynomial act(const WeylElement& w, const Polynomial& p) {
  if (w.rank() != p.rank())
    throw ValidationError("Weyl element rank does not match polynomial rank");
  Polynomial r(p.family(), p.rank());
  const int l = p.rank();
  Exponents e(l);
  for (const auto& [ea, c] : p.terms()) {
    bool flip = false;
    for (int i = 0; i < l; ++i) {
      e[w.perm[i]] = ea[i];
      if (w.signs[i] < 0 && (ea[i] & 1)) flip = !flip;
    }
    r.add_term(e, flip ? Rational(-c) : c);
  }
  return r;
}

namespace {

void check_subset(int rank, const std::vector<int>& vars) {
  std::vector<bool> seen(rank, false);
  for (int v : vars) {
    if (v < 0 || v >= rank)
      throw ValidationError("variable index out of range: " + std::to_string(v + 1));
    if (seen[v]) throw ValidationError("duplicate variable index: " + std::to_string(v + 1));
    seen[v] = true;
  }
}

}  // namespace

Polynomial elem_sym(VarFamily family, int rank, const std::vector<int>& vars, int r) {
  check_subset(rank, vars);
  if (r < 0) throw ValidationError("negative symmetric-function degree");
  Polynomial out(family, rank);
  const int n = static_cast<int>(vars.size());
  if (r > n) return out;  // sigma_r vanishes past the variable count
  if (r == 0) return Polynomial::constant(family, rank, Rational(1));
  std::vector<int> pick(r);
  // Lexicographic enumeration of r-subsets of vars.
  for (int i = 0; i < r; ++i) pick[i] = i;
  while (true) {
    Exponents e(rank, 0);
    for (int i : pick) e[vars[i]] += 1;
    out.add_term(e, Rational(1));
    int i = r - 1;
    while (i >= 0 && pick[i] == n - r + i) --i;
    if (i < 0) break;
    ++pick[i];
    for (int j = i + 1; j < r; ++j) pick[j] = pick[j - 1] + 1;
  }
  return out;
}

Polynomial power_sum(VarFamily family, int rank, const std::vector<int>& vars, int r) {
  check_subset(rank, vars);
  if (r < 0) throw ValidationError("negative symmetric-function degree");
  if (r == 0) return Polynomial::constant(family, rank, rational(static_cast<long>(vars.size())));
  Polynomial out(family, rank);
  for (int v : vars) {
    Exponents e(rank, 0);
    e[v] = static_cast<unsigned>(r);
    out.add_term(e, Rational(1));
  }
  return out;
}

}  // namespace weylsum
