#include "stm/decomp.hpp"

#include "stm/error.hpp"

#include <algorithm>
#include <map>
#include <numeric>

namespace stm {

namespace mp = boost::multiprecision;

std::vector<Q> charpoly(const Mat& a) {
  const std::size_t n = a.rows();
  std::vector<Q> c(n + 1);
  c[n] = 1;
  Mat m(n, n);
  for (std::size_t k = 1; k <= n; ++k) {
    m = a * m;
    for (std::size_t i = 0; i < n; ++i) m(i, i) += c[n - k + 1];
    Mat am = a * m;
    Q tr = 0;
    for (std::size_t i = 0; i < n; ++i) tr += am(i, i);
    c[n - k] = -tr / Q(static_cast<long>(k));
  }
  return c;
}

namespace {

Q eval(const std::vector<mp::mpz_int>& p, const Q& x) {
  Q r = 0;
  for (auto it = p.rbegin(); it != p.rend(); ++it) r = r * x + Q(*it);
  return r;
}

std::vector<long> divisors(mp::mpz_int n) {
  if (n < 0) n = -n;
  if (n > 1000000) throw Error(Err::IrrationalEigenvalue, "eigenvalue search too large");
  long v = n.convert_to<long>();
  std::vector<long> d;
  for (long k = 1; k <= v; ++k)
    if (v % k == 0) d.push_back(k);
  return d;
}

Mat shifted(const Mat& m, const Q& lambda) {
  Mat r = m;
  for (std::size_t i = 0; i < m.rows(); ++i) r(i, i) -= lambda;
  return r;
}

}  // namespace

std::vector<Q> rational_eigenvalues(const Mat& m) {
  if (m.rows() == 0) return {};
  auto c = charpoly(m);
  std::vector<Q> out;
  std::size_t lo = 0;
  while (lo < c.size() && c[lo] == 0) ++lo;
  if (lo > 0) out.push_back(0);
  mp::mpz_int l = 1;
  for (std::size_t k = lo; k < c.size(); ++k) l = mp::lcm(l, mp::denominator(c[k]));
  std::vector<mp::mpz_int> p;
  for (std::size_t k = lo; k < c.size(); ++k) p.push_back(mp::numerator(c[k] * Q(l)));
  if (p.size() > 1) {
    // |λ| is at most the largest absolute row sum
    Q bound = 0;
    for (std::size_t i = 0; i < m.rows(); ++i) {
      Q s = 0;
      for (std::size_t j = 0; j < m.cols(); ++j) s += mp::abs(m(i, j));
      bound = std::max(bound, s);
    }
    if (bound > 100000) throw Error(Err::IrrationalEigenvalue, "eigenvalue search too large");
    long b = static_cast<long>(mp::numerator(bound) / mp::denominator(bound)) + 1;
    for (long q : divisors(p.back())) {
      if (b * q > 1000000) throw Error(Err::IrrationalEigenvalue, "eigenvalue search too large");
      for (long num = -b * q; num <= b * q; ++num) {
        if (num == 0 || std::gcd(num, q) != 1) continue;
        Q x(num, q);
        if (eval(p, x) == 0) out.push_back(x);
      }
    }
  }
  std::sort(out.begin(), out.end());
  return out;
}

std::vector<Eigenspace> simultaneous_eigenspaces(const std::vector<Mat>& gens, std::size_t dim,
                                                 bool strict) {
  for (std::size_t a = 0; a < gens.size(); ++a)
    for (std::size_t b = a + 1; b < gens.size(); ++b)
      if (gens[a] * gens[b] != gens[b] * gens[a])
        throw Error(Err::NonCommutingGenerators,
                    "generators " + std::to_string(a + 1) + " and " + std::to_string(b + 1));
  std::vector<Eigenspace> cur{{{}, Mat::identity(dim)}};
  for (auto& g : gens) {
    std::vector<Eigenspace> next;
    for (auto& sp : cur) {
      Mat r = restrict_to(g, sp.basis);
      std::size_t found = 0;
      for (auto& lam : rational_eigenvalues(r)) {
        Mat k = nullspace(shifted(r, lam));
        found += k.cols();
        auto vals = sp.values;
        vals.push_back(lam);
        next.push_back({std::move(vals), sp.basis * k});
      }
      if (strict && found != sp.basis.cols())
        throw Error(Err::IrrationalEigenvalue, "generators are not simultaneously diagonalizable over Q");
    }
    cur = std::move(next);
  }
  std::sort(cur.begin(), cur.end(), [](auto& x, auto& y) { return x.values < y.values; });
  return cur;
}

Mat spin(const std::vector<Mat>& gens, const std::vector<Vec>& seeds) {
  if (seeds.empty()) return {};
  const std::size_t n = seeds[0].size();
  RowSpace rs(n);
  std::vector<Vec> basis;
  for (auto& s : seeds)
    if (rs.insert(s)) basis.push_back(s);
  for (std::size_t k = 0; k < basis.size(); ++k)
    for (auto& g : gens) {
      Vec w = g * basis[k];
      if (rs.insert(w)) basis.push_back(std::move(w));
    }
  return Mat::from_columns(basis, n);
}

Mat restrict_to(const Mat& g, const Mat& basis) {
  if (basis.cols() == 0) return {};
  auto r = solve(basis, g * basis);
  if (!r) throw std::logic_error("subspace is not invariant");
  return *r;
}

HomRep restrict_rep(const HomRep& rep, const Mat& basis) {
  HomRep out;
  for (auto& g : rep.gens) out.gens.push_back(restrict_to(g, basis));
  for (auto& g : rep.elements) out.elements.push_back(restrict_to(g, basis));
  return out;
}

bool is_invariant(const std::vector<Mat>& gens, const Mat& basis) {
  for (auto& g : gens)
    if (!solve(basis, g * basis)) return false;
  return true;
}

std::vector<Mat> intertwiner_space(const std::vector<Mat>& a, const std::vector<Mat>& b) {
  const std::size_t p = a.at(0).rows(), q = b.at(0).rows();
  Mat sys(a.size() * p * q, p * q);
  std::size_t row = 0;
  for (std::size_t g = 0; g < a.size(); ++g)
    for (std::size_t i = 0; i < p; ++i)
      for (std::size_t j = 0; j < q; ++j, ++row) {
        for (std::size_t k = 0; k < p; ++k) sys(row, k * q + j) += a[g](i, k);
        for (std::size_t k = 0; k < q; ++k) sys(row, i * q + k) -= b[g](k, j);
      }
  Mat ker = nullspace(sys);
  std::vector<Mat> out;
  for (std::size_t c = 0; c < ker.cols(); ++c) {
    Mat x(p, q);
    for (std::size_t i = 0; i < p; ++i)
      for (std::size_t j = 0; j < q; ++j) x(i, j) = ker(i * q + j, c);
    out.push_back(std::move(x));
  }
  return out;
}

std::optional<Mat> invertible_intertwiner(const std::vector<Mat>& space) {
  if (space.empty() || !space[0].square()) return std::nullopt;
  for (auto& x : space)
    if (det(x) != 0) return x;
  for (long t = 1; t <= 16; ++t) {
    Mat x = space[0];
    for (std::size_t k = 1; k < space.size(); ++k) x += space[k] * Q((t * static_cast<long>(k + 3)) % 7 - 3);
    if (det(x) != 0) return x;
  }
  return std::nullopt;
}

std::string division_name(Division d) {
  switch (d) {
    case Division::R: return "R";
    case Division::C: return "C";
    case Division::H: return "H";
    case Division::Unknown: break;
  }
  return "unknown";
}

namespace {

// a proper invariant subspace cut out by an eigenspace of a commuting matrix
std::optional<Mat> split_by_commutant(const std::vector<Mat>& centralizer, std::size_t dim) {
  for (auto& x : centralizer) {
    std::vector<Q> evs;
    try {
      evs = rational_eigenvalues(x);
    } catch (const Error&) {
      continue;
    }
    for (auto& lam : evs) {
      Mat k = nullspace(shifted(x, lam));
      if (k.cols() > 0 && k.cols() < dim) return k;
    }
  }
  return std::nullopt;
}

}  // namespace

Division division_algebra_type(const HomRep& rep) {
  auto c = intertwiner_space(rep.gens, rep.gens);
  if (c.size() == 1) return Division::R;
  if (split_by_commutant(c, rep.dim())) throw Error(Err::NotIrreducible, "restriction splits");
  if (c.size() == 2) return Division::C;
  if (c.size() == 4) return Division::H;
  throw Error(Err::NotIrreducible, "centralizer of dimension " + std::to_string(c.size()));
}

namespace {

struct Irreducible {
  Mat basis;  // columns in the coordinates of the enclosing space
  bool certified = false;
};

Irreducible find_irreducible(const HomRep& w) {
  const std::size_t d = w.dim();
  // seeds: eigenvectors of single elements and of commuting pairs, small spaces first
  std::vector<std::pair<std::size_t, Vec>> seeds;
  auto add_space = [&](const Mat& b) {
    for (std::size_t j = 0; j < b.cols(); ++j) seeds.push_back({b.cols(), b.col(j)});
  };
  const auto& el = w.elements;
  for (std::size_t a = 0; a < el.size(); ++a) {
    try {
      for (auto& sp : simultaneous_eigenspaces({el[a]}, d, false)) add_space(sp.basis);
    } catch (const Error&) {
    }
    for (std::size_t b = a + 1; b < el.size(); ++b) {
      if (el[a] * el[b] != el[b] * el[a]) continue;
      try {
        for (auto& sp : simultaneous_eigenspaces({el[a], el[b]}, d, false)) add_space(sp.basis);
      } catch (const Error&) {
      }
    }
  }
  for (std::size_t j = 0; j < d; ++j) {
    Vec e(d);
    e[j] = 1;
    seeds.push_back({d, e});
  }
  std::stable_sort(seeds.begin(), seeds.end(), [](auto& x, auto& y) { return x.first < y.first; });
  Mat best = Mat::identity(d);
  for (auto& [sz, v] : seeds) {
    if (best.cols() == 1) break;
    Mat u = spin(w.gens, {v});
    if (u.cols() < best.cols()) best = u;
  }
  // refine until the commutant is trivial or cannot be cut further
  while (true) {
    HomRep r = restrict_rep(w, best);
    auto c = intertwiner_space(r.gens, r.gens);
    if (c.size() == 1) return {best, true};
    auto k = split_by_commutant(c, best.cols());
    if (!k) return {best, false};
    best = best * *k;
  }
}

std::vector<std::vector<std::size_t>> real_classes(const std::vector<Mat>& el) {
  const std::size_t n = el.size();
  std::vector<std::size_t> inv(n, n);
  for (std::size_t a = 0; a < n; ++a)
    for (std::size_t b = 0; b < n; ++b)
      if ((el[a] * el[b]).is_identity()) inv[a] = b;
  auto index_of = [&](const Mat& m) {
    for (std::size_t k = 0; k < n; ++k)
      if (el[k] == m) return k;
    throw std::logic_error("element list is not closed");
  };
  std::vector<int> cls(n, -1);
  std::vector<std::vector<std::size_t>> out;
  for (std::size_t x = 0; x < n; ++x) {
    if (cls[x] >= 0) continue;
    int id = static_cast<int>(out.size());
    out.emplace_back();
    for (std::size_t base : {x, inv[x]}) {
      for (std::size_t g = 0; g < n; ++g) {
        std::size_t y = index_of(el[g] * el[base] * el[inv[g]]);
        if (cls[y] < 0) {
          cls[y] = id;
          out.back().push_back(y);
        }
      }
    }
  }
  return out;
}

std::vector<Mat> dedupe(const std::vector<Mat>& el) {
  std::vector<Mat> out;
  for (auto& m : el)
    if (std::find(out.begin(), out.end(), m) == out.end()) out.push_back(m);
  return out;
}

}  // namespace

IsotypicReport isotypic_decomposition(const HomRep& rep, const Mat& omega, const Mat& hol) {
  IsotypicReport rpt;
  const std::size_t n = rep.dim();
  rpt.total_dim = n;
  for (auto& a : rep.gens)
    for (auto& b : rep.gens)
      if (a * b != b * a) rpt.abelian = false;

  std::vector<Eigenspace> spaces;
  if (rpt.abelian) {
    spaces = simultaneous_eigenspaces(rep.gens, n, false);
  } else {
    auto el = dedupe(rep.elements);
    std::vector<Mat> sums;
    for (auto& k : real_classes(el)) {
      Mat s(n, n);
      for (auto i : k) s += el[i];
      sums.push_back(std::move(s));
    }
    spaces = simultaneous_eigenspaces(sums, n, false);
  }

  std::size_t covered = 0;
  for (auto& sp : spaces) {
    Component c;
    c.basis = sp.basis;
    c.label = sp.values;
    const std::size_t d = sp.basis.cols();
    covered += d;
    HomRep w = restrict_rep(rep, sp.basis);
    auto irr = find_irreducible(w);
    c.irreducible_dim = irr.basis.cols();
    HomRep u = restrict_rep(w, irr.basis);
    c.centralizer_dim = intertwiner_space(u.gens, u.gens).size();
    c.commutant_dim = intertwiner_space(w.gens, w.gens).size();
    c.irreducible_certified = irr.certified;
    if (irr.certified) {
      c.division = Division::R;
    } else {
      try {
        c.division = division_algebra_type(u);
      } catch (const Error&) {
        c.division = Division::Unknown;
      }
    }
    for (auto& g : u.elements) {
      Q t = 0;
      for (std::size_t i = 0; i < g.rows(); ++i) t += g(i, i);
      c.character.push_back(t);
    }
    // copies: images of a basis of the intertwiners from one piece into the block
    RowSpace acc(d);
    for (auto& x : intertwiner_space(w.gens, u.gens)) {
      const Mat& img = x;
      RowSpace trial = acc;
      bool independent = true;
      for (std::size_t j = 0; j < img.cols(); ++j)
        if (!trial.insert(img.col(j))) independent = false;
      if (!independent) continue;
      acc = trial;
      c.copies.push_back(sp.basis * img);
      if (acc.dim() == d) break;
    }
    c.multiplicity = c.copies.size();
    if (acc.dim() != d) rpt.complete = false;
    c.tautological = !(hol * sp.basis).is_zero();
    rpt.components.push_back(std::move(c));
  }
  if (covered != n) rpt.complete = false;
  for (std::size_t i = 0; i < rpt.components.size(); ++i)
    for (std::size_t j = i + 1; j < rpt.components.size(); ++j)
      if (!(rpt.components[i].basis.transpose() * omega * rpt.components[j].basis).is_zero())
        rpt.omega_orthogonal = false;
  return rpt;
}

std::string group_name(const std::vector<std::size_t>& factors) {
  if (factors.empty()) return "trivial";
  std::map<std::size_t, std::size_t> count;
  for (auto f : factors) ++count[f];
  std::string s;
  for (auto [k, m] : count) {
    if (!s.empty()) s += " x ";
    s += "Sp(" + std::to_string(k) + ",R)";
    if (m > 1) s += "^" + std::to_string(m);
  }
  return s;
}

GroupBound myz_upper_bound(const IsotypicReport& report) {
  if (!report.complete) throw Error(Err::DecompositionIncomplete, "components do not fill the space");
  GroupBound b;
  for (auto& c : report.components) {
    if (c.division != Division::R)
      throw Error(Err::UnsupportedAlgebraType, "centralizer of type " + division_name(c.division));
    std::size_t k = c.multiplicity;
    if (c.tautological) {
      if (k < 2) throw Error(Err::DecompositionIncomplete, "tautological block has multiplicity below 2");
      k -= 2;
    }
    if (k == 0) continue;
    b.factors.push_back(k);
    b.dim += k * (k + 1) / 2;
  }
  std::sort(b.factors.begin(), b.factors.end());
  b.name = group_name(b.factors);
  return b;
}

}  // namespace stm
