#include "stm/homology.hpp"

#include "stm/error.hpp"

#include <numeric>

namespace stm {

namespace mp = boost::multiprecision;

Chain h_edge(int n, int i) {
  Chain c(2 * n);
  c[i] = 1;
  return c;
}

Chain v_edge(int n, int i) {
  Chain c(2 * n);
  c[n + i] = 1;
  return c;
}

Chain face_boundary(const Origami& o, int i) {
  const int n = o.n();
  Chain c(2 * n);
  c[i] += 1;
  c[n + o.h[i]] += 1;
  c[o.v[i]] -= 1;
  c[n + i] -= 1;
  return c;
}

bool Homology::is_cycle(const Chain& c) const { return is_zero(d1 * c); }

Vec Homology::cls(const Chain& c) const {
  if (c.size() != coh.rows()) throw Error(Err::BadInput, "chain has the wrong length");
  return coh.transpose() * c;
}

Homology build_homology(const Origami& o) {
  Homology hb;
  hb.o = o;
  hb.cc = corner_complex(o);
  const int n = o.n();
  hb.d1 = Mat(hb.cc.vertices, 2 * n);
  for (int i = 0; i < n; ++i) {
    auto& q = hb.cc.vertex[i];
    hb.d1(q[BR], i) += 1;
    hb.d1(q[BL], i) -= 1;
    hb.d1(q[TL], n + i) += 1;
    hb.d1(q[BL], n + i) -= 1;
  }
  std::vector<Vec> faces;
  for (int i = 0; i < n; ++i) faces.push_back(face_boundary(o, i));
  hb.d2 = Mat::from_columns(faces, 2 * n);

  // cocycles modulo coboundaries
  Mat z = nullspace(hb.d2.transpose());
  RowSpace span(2 * n);
  for (std::size_t r = 0; r < hb.d1.rows(); ++r) span.insert(hb.d1.row(r));
  std::vector<Vec> coh;
  for (std::size_t j = 0; j < z.cols(); ++j)
    if (span.insert(z.col(j))) coh.push_back(z.col(j));
  hb.coh = Mat::from_columns(coh, 2 * n);

  const std::size_t k = coh.size();
  hb.cup = Mat(k, k);
  for (std::size_t a = 0; a < k; ++a)
    for (std::size_t b = 0; b < k; ++b) {
      Q s = 0;
      for (int i = 0; i < n; ++i)
        s += coh[a][i] * coh[b][n + o.h[i]] - coh[a][n + i] * coh[b][o.v[i]];
      hb.cup(a, b) = s;
    }
  auto inv = inverse(hb.cup);
  if (!inv) throw std::logic_error("cup pairing is degenerate");
  hb.cup_inv = *inv;
  return hb;
}

namespace {

enum class Side { Bottom, Left, Right };

// path inside square i from an entry point to an exit point, both pushed to corners
void add_path(Chain& c, int i, Side from, Side to) {
  auto push = [&](Side s, int sign) {
    if (s == Side::Right) c[i] += sign;  // bottom-right corner
  };
  push(to, 1);
  push(from, -1);
}

}  // namespace

Chain straight_curve(const Origami& o, int start, long p, long q) {
  const int n = o.n();
  if (start < 0 || start >= n) throw Error(Err::BadInput, "start square out of range");
  if (std::gcd(p, q) != 1) throw Error(Err::BadInput, "direction must be primitive");
  if (q < 0) {
    Chain c = straight_curve(o, start, -p, -q);
    for (auto& x : c) x = -x;
    return c;
  }
  Chain c(2 * n);
  if (q == 0) {
    if (p > 0) {
      int i = start;
      do {
        c[i] += 1;
        i = o.h[i];
      } while (i != start);
    } else {
      Perm hi = inverse(o.h);
      int i = start;
      do {
        i = hi[i];
        c[i] -= 1;
      } while (i != start);
    }
    return c;
  }
  // start on the bottom edge of `start`; this offset never meets a lattice point
  const Q x0(1, 2 * q);
  Perm hi = inverse(o.h);
  Q x = x0, y = 0;
  int i = start;
  Side entry = Side::Bottom;
  while (true) {
    Q to_top = (1 - y) / q;
    bool side = false;
    Q to_side;
    if (p > 0) {
      to_side = (1 - x) / p;
      side = to_side < to_top;
    } else if (p < 0) {
      to_side = x / (-p);
      side = to_side < to_top;
    }
    if (side) {
      y += q * to_side;
      if (p > 0) {
        add_path(c, i, entry, Side::Right);
        i = o.h[i];
        x = 0;
        entry = Side::Left;
      } else {
        add_path(c, i, entry, Side::Left);
        i = hi[i];
        x = 1;
        entry = Side::Right;
      }
    } else {
      x += p * to_top;
      y = 0;
      // exit through the top: top-left corner, reached by v_i from bottom-left
      c[n + i] += 1;
      add_path(c, i, entry, Side::Bottom);
      i = o.v[i];
      entry = Side::Bottom;
      if (i == start && x == x0) break;
    }
  }
  return c;
}

std::pair<Q, Q> holonomy(const Chain& c) {
  const std::size_t n = c.size() / 2;
  Q a = 0, b = 0;
  for (std::size_t i = 0; i < n; ++i) {
    a += c[i];
    b += c[n + i];
  }
  return {a, b};
}

Mat intersection_form(const Homology& hb, const std::vector<Chain>& cycles) {
  std::vector<Vec> rows;
  for (auto& c : cycles) {
    if (!hb.is_cycle(c)) throw Error(Err::NonCycleInput, "chain has nonzero boundary");
    rows.push_back(hb.cls(c));
  }
  Mat e = Mat::from_rows(rows, hb.dim());
  return -(e * hb.cup_inv * e.transpose());
}

CycleCoords::CycleCoords(const Homology& hb, std::vector<Chain> basis)
    : hb_(&hb), basis_(std::move(basis)) {
  std::vector<Vec> cols;
  for (auto& b : basis_) {
    if (!hb.is_cycle(b)) throw Error(Err::NonCycleInput, "basis chain has nonzero boundary");
    cols.push_back(hb.cls(b));
  }
  e_ = Mat::from_columns(cols, hb.dim());
  if (rank(e_) != basis_.size()) throw Error(Err::BadInput, "basis cycles are linearly dependent");
  if (!basis_.empty()) {
    Mat et = e_.transpose();
    left_ = *inverse(et * e_) * et;
  }
}

Vec CycleCoords::operator()(const Chain& c) const {
  if (!hb_->is_cycle(c)) throw Error(Err::NonCycleInput, "chain has nonzero boundary");
  Vec target = hb_->cls(c);
  if (basis_.empty()) {
    if (!is_zero(target)) throw Error(Err::NotInSpan, "class is not in the span of the basis");
    return {};
  }
  Vec x = left_ * target;
  if (e_ * x != target) throw Error(Err::NotInSpan, "class is not in the span of the basis");
  return x;
}

Mat CycleCoords::columns(const std::vector<Chain>& chains) const {
  std::vector<Vec> cols;
  for (auto& c : chains) cols.push_back((*this)(c));
  return Mat::from_columns(cols, basis_.size());
}

Vec express_in_basis(const Homology& hb, const Chain& c, const std::vector<Chain>& basis) {
  return CycleCoords(hb, basis)(c);
}

Chain relabel_chain(const Chain& c, const Perm& phi) {
  const std::size_t n = phi.size();
  Chain d(2 * n);
  for (std::size_t i = 0; i < n; ++i) {
    d[phi[i]] += c[i];
    d[n + phi[i]] += c[n + i];
  }
  return d;
}

Chain linear_combination(const std::vector<Chain>& chains, const Vec& coeffs) {
  if (chains.empty()) return {};
  Chain out(chains[0].size());
  for (std::size_t k = 0; k < chains.size(); ++k)
    if (coeffs[k] != 0) out = out + coeffs[k] * chains[k];
  return out;
}

namespace {

struct DisjointSets {
  std::vector<int> p;
  explicit DisjointSets(int n) : p(n) { std::iota(p.begin(), p.end(), 0); }
  int find(int x) {
    while (p[x] != x) x = p[x] = p[p[x]];
    return x;
  }
  bool unite(int a, int b) {
    a = find(a);
    b = find(b);
    if (a == b) return false;
    p[a] = b;
    return true;
  }
};

}  // namespace

std::vector<Chain> integral_basis(const Homology& hb) {
  const Origami& o = hb.o;
  const int n = o.n();
  const int nv = hb.cc.vertices;
  // edge e < n is h_e, otherwise v_{e-n}; tail and head vertices
  std::vector<int> tail(2 * n), head(2 * n);
  for (int i = 0; i < n; ++i) {
    auto& q = hb.cc.vertex[i];
    tail[i] = q[BL];
    head[i] = q[BR];
    tail[n + i] = q[BL];
    head[n + i] = q[TL];
  }
  std::vector<char> in_tree(2 * n, 0);
  std::vector<std::vector<std::pair<int, int>>> adj(nv);
  DisjointSets vs(nv);
  for (int e = 0; e < 2 * n; ++e)
    if (vs.unite(tail[e], head[e])) {
      in_tree[e] = 1;
      adj[tail[e]].push_back({head[e], e});
      adj[head[e]].push_back({tail[e], e});
    }

  // up[x]: chain of the tree path from x to the root
  std::vector<Chain> up(nv);
  std::vector<char> seen(nv, 0);
  up[0] = Chain(2 * n);
  seen[0] = 1;
  std::vector<int> stack{0};
  while (!stack.empty()) {
    int x = stack.back();
    stack.pop_back();
    for (auto [y, e] : adj[x]) {
      if (seen[y]) continue;
      seen[y] = 1;
      up[y] = up[x];
      up[y][e] += (tail[e] == y) ? 1 : -1;
      stack.push_back(y);
    }
  }

  // dual tree across the remaining edges; faces on either side of each edge
  Perm vi = inverse(o.v), hi = inverse(o.h);
  DisjointSets fs(n);
  std::vector<char> in_cotree(2 * n, 0);
  for (int e = 0; e < 2 * n; ++e) {
    if (in_tree[e]) continue;
    int a = e < n ? e : e - n;
    int b = e < n ? vi[a] : hi[a];
    if (fs.unite(a, b)) in_cotree[e] = 1;
  }

  std::vector<Chain> out;
  for (int e = 0; e < 2 * n; ++e) {
    if (in_tree[e] || in_cotree[e]) continue;
    Chain c = up[head[e]] - up[tail[e]];
    c[e] += 1;
    out.push_back(std::move(c));
  }
  return out;
}

std::vector<Chain> zero_holonomy_basis(const std::vector<Chain>& basis, Mat* coeffs) {
  Mat hol(2, basis.size());
  for (std::size_t k = 0; k < basis.size(); ++k) {
    auto [a, b] = holonomy(basis[k]);
    hol(0, k) = a;
    hol(1, k) = b;
  }
  Mat ker = nullspace(hol);
  std::vector<Vec> cols;
  std::vector<Chain> out;
  for (std::size_t j = 0; j < ker.cols(); ++j) {
    Vec x = ker.col(j);
    mp::mpz_int l = 1, g = 0;
    for (auto& q : x) l = mp::lcm(l, mp::denominator(q));
    for (auto& q : x) {
      q *= Q(l);
      g = mp::gcd(g, mp::numerator(q));
    }
    if (g > 1)
      for (auto& q : x) q /= Q(g);
    out.push_back(linear_combination(basis, x));
    cols.push_back(std::move(x));
  }
  if (coeffs) *coeffs = Mat::from_columns(cols, basis.size());
  return out;
}

}  // namespace stm
