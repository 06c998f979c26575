#include "weylsum/root_system.hpp"

#include <algorithm>
#include <fstream>
#include <numeric>
#include <set>
#include <sstream>

#include "weylsum/errors.hpp"
#include "weylsum/rational.hpp"

namespace weylsum {

Family family_from_string(const std::string& s) {
  if (s == "A" || s == "a") return Family::A;
  if (s == "B" || s == "b") return Family::B;
  if (s == "C" || s == "c") return Family::C;
  if (s == "D" || s == "d") return Family::D;
  throw ValidationError("unknown family '" + s + "' (expected A, B, C or D)");
}

char family_letter(Family f) {
  switch (f) {
    case Family::A: return 'A';
    case Family::B: return 'B';
    case Family::C: return 'C';
    case Family::D: return 'D';
  }
  return '?';
}

WeylElement WeylElement::identity(int rank) {
  WeylElement w;
  w.perm.resize(rank);
  std::iota(w.perm.begin(), w.perm.end(), 0);
  w.signs.assign(rank, 1);
  return w;
}

bool WeylElement::is_identity() const {
  for (int i = 0; i < rank(); ++i)
    if (perm[i] != i || signs[i] != 1) return false;
  return true;
}

Weight WeylElement::apply(const Weight& v) const {
  Weight r;
  r.c.assign(rank(), 0);
  for (int i = 0; i < rank(); ++i) r.c[perm[i]] = signs[i] * v.c[i];
  return r;
}

WeylElement WeylElement::compose(const WeylElement& other) const {
  WeylElement r;
  const int l = rank();
  r.perm.resize(l);
  r.signs.resize(l);
  for (int i = 0; i < l; ++i) {
    r.perm[i] = perm[other.perm[i]];
    r.signs[i] = other.signs[i] * signs[other.perm[i]];
  }
  return r;
}

WeylElement WeylElement::inverse() const {
  WeylElement r;
  const int l = rank();
  r.perm.resize(l);
  r.signs.resize(l);
  for (int i = 0; i < l; ++i) {
    r.perm[perm[i]] = i;
    r.signs[perm[i]] = signs[i];
  }
  return r;
}

int WeylElement::det() const {
  int d = 1;
  for (int s : signs) d *= s;
  // Parity of perm by counting inversions; ranks are small.
  for (int i = 0; i < rank(); ++i)
    for (int j = i + 1; j < rank(); ++j)
      if (perm[i] > perm[j]) d = -d;
  return d;
}

std::vector<int> WeylElement::one_line() const {
  std::vector<int> out(rank());
  for (int i = 0; i < rank(); ++i) out[i] = signs[i] * (perm[i] + 1);
  return out;
}

std::string WeylElement::to_string() const {
  std::string s = "[";
  auto ol = one_line();
  for (std::size_t i = 0; i < ol.size(); ++i) {
    if (i) s += ",";
    s += std::to_string(ol[i]);
  }
  return s + "]";
}

namespace {

std::vector<Weight> raw_positive_roots(Family family, int rank) {
  std::vector<Weight> roots;
  auto e = [rank](int i) { return basis_weight(rank, i); };
  switch (family) {
    case Family::A:
      for (int i = 0; i < rank; ++i)
        for (int j = i + 1; j < rank; ++j) roots.push_back(e(i) - e(j));
      break;
    case Family::B:
      for (int i = 0; i < rank; ++i)
        for (int j = i + 1; j < rank; ++j) {
          roots.push_back(e(i) - e(j));
          roots.push_back(e(i) + e(j));
        }
      for (int i = 0; i < rank; ++i) roots.push_back(e(i));
      break;
    case Family::C:
      for (int i = 0; i < rank; ++i)
        for (int j = i + 1; j < rank; ++j) {
          roots.push_back(e(i) - e(j));
          roots.push_back(e(i) + e(j));
        }
      for (int i = 0; i < rank; ++i) roots.push_back(e(i) + e(i));
      break;
    case Family::D:
      for (int i = 0; i < rank; ++i)
        for (int j = i + 1; j < rank; ++j) {
          roots.push_back(e(i) - e(j));
          roots.push_back(e(i) + e(j));
        }
      break;
  }
  return roots;
}

std::vector<Weight> make_simple_roots(Family family, int rank) {
  std::vector<Weight> simples;
  auto e = [rank](int i) { return basis_weight(rank, i); };
  for (int i = 0; i + 1 < rank; ++i) simples.push_back(e(i) - e(i + 1));
  switch (family) {
    case Family::A: break;
    case Family::B: simples.push_back(e(rank - 1)); break;
    case Family::C: simples.push_back(e(rank - 1) + e(rank - 1)); break;
    case Family::D: simples.push_back(e(rank - 2) + e(rank - 1)); break;
  }
  return simples;
}

/* Exact solve of  sum_k x_k * simple[k] = target  by Gaussian elimination
   over the rationals; simple roots are linearly independent. */
std::vector<int> simple_coordinates(const std::vector<Weight>& simples, const Weight& target) {
  const int rows = target.rank();
  const int cols = static_cast<int>(simples.size());
  std::vector<std::vector<Rational>> m(rows, std::vector<Rational>(cols + 1));
  for (int r = 0; r < rows; ++r) {
    for (int c = 0; c < cols; ++c) m[r][c] = rational(simples[c].c[r]);
    m[r][cols] = rational(target.c[r]);
  }
  std::vector<int> pivot_row(cols, -1);
  int row = 0;
  for (int col = 0; col < cols && row < rows; ++col) {
    int p = -1;
    for (int r = row; r < rows; ++r)
      if (m[r][col] != 0) { p = r; break; }
    if (p < 0) continue;
    std::swap(m[p], m[row]);
    Rational inv = m[row][col];
    for (int c = col; c <= cols; ++c) m[row][c] /= inv;
    for (int r = 0; r < rows; ++r) {
      if (r == row || m[r][col] == 0) continue;
      Rational f = m[r][col];
      for (int c = col; c <= cols; ++c) m[r][c] -= f * m[row][c];
    }
    pivot_row[col] = row;
    ++row;
  }
  std::vector<Rational> x(cols, Rational(0));
  for (int c = 0; c < cols; ++c)
    if (pivot_row[c] >= 0) x[c] = m[pivot_row[c]][cols];
  // Residual must vanish and coordinates must be nonnegative integers.
  for (int r = 0; r < rows; ++r) {
    Rational acc(0);
    for (int c = 0; c < cols; ++c) acc += x[c] * rational(simples[c].c[r]);
    if (acc != rational(target.c[r]))
      throw ValidationError("root outside the simple-root span: " + target.to_string());
  }
  std::vector<int> out(cols);
  for (int c = 0; c < cols; ++c) {
    if (x[c].get_den() != 1 || x[c] < 0)
      throw ValidationError("root with non-integral simple coordinates: " + target.to_string());
    out[c] = static_cast<int>(x[c].get_num().get_si());
  }
  return out;
}

}  // namespace

RootSystem build_root_system(Family family, int rank) {
  const int min_rank = family == Family::D ? 2 : 1;
  if (rank < min_rank)
    throw ValidationError(std::string("family ") + family_letter(family) + " needs rank >= " + std::to_string(min_rank));

  RootSystem rs;
  rs.family = family;
  rs.rank = rank;
  rs.simple_roots = make_simple_roots(family, rank);

  auto roots = raw_positive_roots(family, rank);
  std::vector<std::pair<Weight, std::vector<int>>> tagged;
  tagged.reserve(roots.size());
  for (auto& r : roots) {
    auto coords = simple_coordinates(rs.simple_roots, r);
    tagged.emplace_back(std::move(r), std::move(coords));
  }
  // Canonical deterministic order: height, then lex-descending coordinates.
  std::sort(tagged.begin(), tagged.end(), [](const auto& a, const auto& b) {
    int ha = std::accumulate(a.second.begin(), a.second.end(), 0);
    int hb = std::accumulate(b.second.begin(), b.second.end(), 0);
    if (ha != hb) return ha < hb;
    return b.first.c < a.first.c;
  });
  for (auto& [w, coords] : tagged) {
    rs.positive_roots.push_back(std::move(w));
    rs.simple_coords.push_back(std::move(coords));
  }
  return rs;
}

int RootSystem::positive_index(const Weight& w) const {
  for (std::size_t i = 0; i < positive_roots.size(); ++i)
    if (positive_roots[i] == w) return static_cast<int>(i);
  return -1;
}

bool RootSystem::is_positive_root(const Weight& w) const { return positive_index(w) >= 0; }

bool RootSystem::is_root(const Weight& w) const {
  return is_positive_root(w) || is_positive_root(-w);
}

std::size_t RootSystem::weyl_order() const {
  std::size_t f = 1;
  for (int i = 2; i <= rank; ++i) f *= i;
  switch (family) {
    case Family::A: return f;
    case Family::B:
    case Family::C: return f << rank;
    case Family::D: return f << (rank - 1);
  }
  return f;
}

WeylElement reflection_for_root(const RootSystem& rs, const Weight& root) {
  if (!rs.is_root(root))
    throw ValidationError("not a root of the system: " + root.to_string());
  const int l = rs.rank;
  const long norm = root.dot(root);
  WeylElement w;
  w.perm.assign(l, -1);
  w.signs.assign(l, 0);
  for (int i = 0; i < l; ++i) {
    // s(e_i) = e_i - (2 root_i / (root,root)) root: must be +-e_j.
    Rational coef = rational(2L * root.c[i], norm);
    int hit = -1, sign = 0;
    for (int j = 0; j < l; ++j) {
      Rational v = rational(i == j ? 1 : 0) - coef * rational(root.c[j]);
      if (v == 0) continue;
      if (hit >= 0 || (v != 1 && v != -1))
        throw ValidationError("reflection is not a signed permutation for root " + root.to_string());
      hit = j;
      sign = v == 1 ? 1 : -1;
    }
    if (hit < 0)
      throw ValidationError("degenerate reflection for root " + root.to_string());
    w.perm[i] = hit;
    w.signs[i] = sign;
  }
  return w;
}

int length(const RootSystem& rs, const WeylElement& w) {
  int inv = 0;
  for (const auto& a : rs.positive_roots)
    if (!rs.is_positive_root(w.apply(a))) ++inv;
  return inv;
}

int weyl_sign(const RootSystem& rs, const WeylElement& w) {
  return length(rs, w) % 2 == 0 ? 1 : -1;
}

namespace {

constexpr std::size_t kWeylEnumerationCap = 2'000'000;

std::vector<WeylElement> enumerate_unsorted(const RootSystem& rs) {
  if (rs.weyl_order() > kWeylEnumerationCap)
    throw ValidationError("Weyl group too large to enumerate (order " + std::to_string(rs.weyl_order()) + ")");
  const int l = rs.rank;
  std::vector<int> p(l);
  std::iota(p.begin(), p.end(), 0);
  std::vector<WeylElement> out;
  out.reserve(rs.weyl_order());
  do {
    if (rs.family == Family::A) {
      WeylElement w;
      w.perm = p;
      w.signs.assign(l, 1);
      out.push_back(std::move(w));
      continue;
    }
    for (unsigned mask = 0; mask < (1u << l); ++mask) {
      if (rs.family == Family::D && __builtin_popcount(mask) % 2 != 0) continue;
      WeylElement w;
      w.perm = p;
      w.signs.resize(l);
      for (int i = 0; i < l; ++i) w.signs[i] = (mask >> i) & 1 ? -1 : 1;
      out.push_back(std::move(w));
    }
  } while (std::next_permutation(p.begin(), p.end()));
  return out;
}

}  // namespace

std::vector<WeylElement> weyl_elements(const RootSystem& rs) {
  auto out = enumerate_unsorted(rs);
  std::vector<std::pair<int, std::vector<int>>> keys(out.size());
  for (std::size_t i = 0; i < out.size(); ++i)
    keys[i] = {length(rs, out[i]), out[i].one_line()};
  std::vector<std::size_t> idx(out.size());
  std::iota(idx.begin(), idx.end(), 0);
  std::sort(idx.begin(), idx.end(), [&](std::size_t a, std::size_t b) { return keys[a] < keys[b]; });
  std::vector<WeylElement> sorted;
  sorted.reserve(out.size());
  for (auto i : idx) sorted.push_back(std::move(out[i]));
  return sorted;
}

namespace {

std::vector<WeylElement> closure_from_generators(int rank, const std::vector<WeylElement>& gens) {
  std::vector<WeylElement> elems{WeylElement::identity(rank)};
  std::set<std::vector<int>> seen{elems[0].one_line()};
  for (std::size_t head = 0; head < elems.size(); ++head) {
    WeylElement cur = elems[head];  // copy: elems may reallocate below
    for (const auto& g : gens) {
      WeylElement next = g.compose(cur);
      if (seen.insert(next.one_line()).second) elems.push_back(std::move(next));
    }
  }
  return elems;
}

SubsystemSpec build_subsystem(const RootSystem& rs, std::vector<int> root_indices,
                              std::vector<int> simple_selection) {
  std::sort(root_indices.begin(), root_indices.end());
  if (std::adjacent_find(root_indices.begin(), root_indices.end()) != root_indices.end())
    throw ValidationError("duplicate root index in subsystem selection");
  for (int i : root_indices)
    if (i < 0 || i >= static_cast<int>(rs.positive_roots.size()))
      throw ValidationError("positive-root index out of range: " + std::to_string(i));

  SubsystemSpec sub;
  sub.parent = rs;
  sub.root_indices = root_indices;
  sub.simple_selection = std::move(simple_selection);

  std::vector<bool> in_h(rs.positive_roots.size(), false);
  for (int i : root_indices) in_h[i] = true;
  for (std::size_t i = 0; i < rs.positive_roots.size(); ++i)
    (in_h[i] ? sub.h_positive : sub.complement).push_back(rs.positive_roots[i]);

  // Closure under addition within the parent's positive roots.
  for (const auto& a : sub.h_positive)
    for (const auto& b : sub.h_positive) {
      int idx = rs.positive_index(a + b);
      if (idx >= 0 && !in_h[idx])
        throw ValidationError("subsystem not closed: " + a.to_string() + " + " + b.to_string() +
                              " lies outside the selection");
    }

  // Indecomposables of h_positive are the simple roots of H.
  for (const auto& a : sub.h_positive) {
    bool decomposable = false;
    for (const auto& b : sub.h_positive) {
      Weight diff = a - b;
      if (diff.is_zero()) continue;
      if (std::find(sub.h_positive.begin(), sub.h_positive.end(), diff) != sub.h_positive.end()) {
        decomposable = true;
        break;
      }
    }
    if (!decomposable) sub.h_simple_roots.push_back(a);
  }

  /* Euler classes of G/H are well defined only if W_H fixes the complement
     product; require the stronger setwise condition and reject otherwise. */
  std::vector<Weight> comp_sorted = sub.complement;
  std::sort(comp_sorted.begin(), comp_sorted.end());
  std::vector<WeylElement> h_reflections;
  for (const auto& a : sub.h_simple_roots) h_reflections.push_back(reflection_for_root(rs, a));
  for (std::size_t k = 0; k < h_reflections.size(); ++k) {
    std::vector<Weight> image;
    image.reserve(comp_sorted.size());
    for (const auto& g : sub.complement) image.push_back(h_reflections[k].apply(g));
    std::sort(image.begin(), image.end());
    if (image != comp_sorted)
      throw ValidationError("reflection in " + sub.h_simple_roots[k].to_string() +
                            " does not permute the complement roots; subsystem rejected");
  }

  sub.h_order = closure_from_generators(rs.rank, h_reflections).size();
  if (rs.weyl_order() % sub.h_order != 0)
    throw ValidationError("subsystem Weyl order does not divide the parent's");
  return sub;
}

}  // namespace

SubsystemSpec subsystem(const RootSystem& rs, const std::vector<int>& simple_indices) {
  const int n_simple = static_cast<int>(rs.simple_roots.size());
  std::vector<int> sel = simple_indices;
  std::sort(sel.begin(), sel.end());
  if (std::adjacent_find(sel.begin(), sel.end()) != sel.end())
    throw ValidationError("duplicate simple-root index");
  for (int i : sel)
    if (i < 1 || i > n_simple)
      throw ValidationError("simple-root index out of range: " + std::to_string(i) +
                            " (system has " + std::to_string(n_simple) + " simple roots, 1-based)");
  std::vector<bool> chosen(n_simple, false);
  for (int i : sel) chosen[i - 1] = true;

  // H consists of the positive roots supported on the chosen simples.
  std::vector<int> root_indices;
  for (std::size_t r = 0; r < rs.positive_roots.size(); ++r) {
    bool ok = true;
    for (int s = 0; s < n_simple; ++s)
      if (rs.simple_coords[r][s] != 0 && !chosen[s]) { ok = false; break; }
    if (ok) root_indices.push_back(static_cast<int>(r));
  }
  return build_subsystem(rs, std::move(root_indices), std::move(sel));
}

SubsystemSpec subsystem_from_root_indices(const RootSystem& rs, std::vector<int> root_indices) {
  return build_subsystem(rs, std::move(root_indices), {});
}

SubsystemSpec load_subsystem_file(const RootSystem& rs, const std::string& path) {
  std::ifstream in(path);
  if (!in) throw ValidationError("cannot open subsystem file: " + path);
  std::vector<int> indices;
  std::string line;
  int lineno = 0;
  while (std::getline(in, line)) {
    ++lineno;
    auto hash = line.find('#');
    if (hash != std::string::npos) line.erase(hash);
    std::istringstream ls(line);
    std::string tok;
    if (!(ls >> tok)) continue;  // blank or comment-only line
    std::string rest;
    if (ls >> rest)
      throw ValidationError(path + ":" + std::to_string(lineno) + ": one index per line");
    try {
      std::size_t used = 0;
      int v = std::stoi(tok, &used);
      if (used != tok.size()) throw std::invalid_argument(tok);
      indices.push_back(v);
    } catch (const std::exception&) {
      throw ValidationError(path + ":" + std::to_string(lineno) + ": malformed index '" + tok + "'");
    }
  }
  return subsystem_from_root_indices(rs, std::move(indices));
}

std::vector<WeylElement> subgroup_elements(const SubsystemSpec& sub) {
  std::vector<WeylElement> gens;
  for (const auto& a : sub.h_simple_roots) gens.push_back(reflection_for_root(sub.parent, a));
  return closure_from_generators(sub.parent.rank, gens);
}

std::vector<CosetRep> coset_reps(const SubsystemSpec& sub) {
  const RootSystem& rs = sub.parent;
  std::vector<CosetRep> reps;
  for (auto& w : weyl_elements(rs)) {
    bool minimal = true;
    for (const auto& a : sub.h_positive)
      if (!rs.is_positive_root(w.apply(a))) { minimal = false; break; }
    if (!minimal) continue;
    CosetRep rep;
    rep.len = length(rs, w);
    rep.element = std::move(w);
    rep.index = static_cast<int>(reps.size());
    reps.push_back(std::move(rep));
  }
  if (reps.size() * sub.h_order != rs.weyl_order())
    throw ValidationError("coset enumeration does not tile the Weyl group");
  return reps;
}

}  // namespace weylsum
