#include "stm/perm.hpp"

#include "stm/error.hpp"

#include <algorithm>
#include <numeric>
#include <sstream>

namespace stm {

Perm identity_perm(int n) {
  Perm p(n);
  std::iota(p.begin(), p.end(), 0);
  return p;
}

Perm compose(const Perm& a, const Perm& b) {
  Perm r(b.size());
  for (std::size_t i = 0; i < b.size(); ++i) r[i] = a[b[i]];
  return r;
}

Perm inverse(const Perm& p) {
  Perm r(p.size());
  for (std::size_t i = 0; i < p.size(); ++i) r[p[i]] = static_cast<int>(i);
  return r;
}

bool is_bijection(const Perm& p) {
  std::vector<char> seen(p.size(), 0);
  for (int x : p) {
    if (x < 0 || x >= static_cast<int>(p.size()) || seen[x]) return false;
    seen[x] = 1;
  }
  return true;
}

Perm perm_from_cycles(int n, const std::vector<std::vector<int>>& cycles) {
  if (n <= 0) throw Error(Err::BadInput, "permutation size must be positive");
  Perm p = identity_perm(n);
  std::vector<char> used(n, 0);
  for (auto& c : cycles) {
    for (std::size_t k = 0; k < c.size(); ++k) {
      int a = c[k], b = c[(k + 1) % c.size()];
      if (a < 1 || a > n || b < 1 || b > n)
        throw Error(Err::NotABijection, "cycle entry out of range 1.." + std::to_string(n));
      if (used[a - 1]) throw Error(Err::NotABijection, "entry " + std::to_string(a) + " repeated");
      used[a - 1] = 1;
      p[a - 1] = b - 1;
    }
  }
  return p;
}

Perm perm_from_one_line(const std::vector<int>& images) {
  Perm p(images.size());
  for (std::size_t i = 0; i < images.size(); ++i) p[i] = images[i] - 1;
  if (!is_bijection(p)) throw Error(Err::NotABijection, "one-line images are not a bijection");
  return p;
}

std::vector<int> one_line(const Perm& p) {
  std::vector<int> r(p.size());
  for (std::size_t i = 0; i < p.size(); ++i) r[i] = p[i] + 1;
  return r;
}

std::vector<std::vector<int>> cycles_of(const Perm& p, bool with_fixed) {
  std::vector<std::vector<int>> out;
  std::vector<char> seen(p.size(), 0);
  for (std::size_t i = 0; i < p.size(); ++i) {
    if (seen[i]) continue;
    std::vector<int> c;
    for (int j = static_cast<int>(i); !seen[j]; j = p[j]) {
      seen[j] = 1;
      c.push_back(j + 1);
    }
    if (c.size() > 1 || with_fixed) out.push_back(std::move(c));
  }
  return out;
}

std::string cycle_string(const Perm& p) {
  auto cs = cycles_of(p);
  if (cs.empty()) return "()";
  std::string s;
  for (auto& c : cs) {
    s += '(';
    for (std::size_t k = 0; k < c.size(); ++k) {
      if (k) s += ',';
      s += std::to_string(c[k]);
    }
    s += ')';
  }
  return s;
}

Perm parse_cycles(int n, const std::string& text) {
  std::vector<std::vector<int>> cycles;
  std::vector<int> cur;
  bool open = false;
  std::string num;
  auto flush = [&] {
    if (!num.empty()) {
      cur.push_back(std::stoi(num));
      num.clear();
    }
  };
  for (char ch : text) {
    if (ch == '(') {
      if (open) throw Error(Err::BadInput, "nested '(' in cycle text");
      open = true;
    } else if (ch == ')') {
      if (!open) throw Error(Err::BadInput, "unbalanced ')' in cycle text");
      flush();
      cycles.push_back(cur);
      cur.clear();
      open = false;
    } else if (ch == ',' || ch == ' ') {
      flush();
    } else if (ch >= '0' && ch <= '9') {
      num += ch;
    } else {
      throw Error(Err::BadInput, std::string("unexpected character '") + ch + "'");
    }
  }
  if (open) throw Error(Err::BadInput, "unterminated cycle");
  return perm_from_cycles(n, cycles);
}

int perm_order(const Perm& p) {
  int o = 1;
  for (auto& c : cycles_of(p)) o = std::lcm(o, static_cast<int>(c.size()));
  return o;
}

bool is_connected(const Perm& h, const Perm& v) {
  int n = static_cast<int>(h.size());
  if (n == 0) return false;
  std::vector<char> seen(n, 0);
  std::vector<int> stack{0};
  seen[0] = 1;
  int count = 1;
  while (!stack.empty()) {
    int i = stack.back();
    stack.pop_back();
    for (int j : {h[i], v[i]}) {
      if (!seen[j]) {
        seen[j] = 1;
        ++count;
        stack.push_back(j);
      }
    }
  }
  return count == n;
}

Origami make_origami(Perm h, Perm v) {
  if (h.size() != v.size()) throw Error(Err::BadInput, "sigma_h and sigma_v have different lengths");
  if (h.empty()) throw Error(Err::BadInput, "origami needs at least one square");
  if (!is_bijection(h)) throw Error(Err::NotABijection, "sigma_h");
  if (!is_bijection(v)) throw Error(Err::NotABijection, "sigma_v");
  if (!is_connected(h, v)) throw Error(Err::Disconnected, "<sigma_h, sigma_v> is not transitive");
  return Origami{std::move(h), std::move(v)};
}

Origami conjugate(const Origami& o, const Perm& phi) {
  Perm pi = inverse(phi);
  return Origami{compose(phi, compose(o.h, pi)), compose(phi, compose(o.v, pi))};
}

Canonical canonical_form(const Origami& o) {
  const int n = o.n();
  Canonical best;
  std::vector<int> lab(n), order(n);
  Perm h(n), v(n);
  for (int s = 0; s < n; ++s) {
    std::fill(lab.begin(), lab.end(), -1);
    lab[s] = 0;
    order[0] = s;
    int filled = 1;
    for (int k = 0; k < filled; ++k) {
      int i = order[k];
      for (int j : {o.h[i], o.v[i]}) {
        if (lab[j] < 0) {
          lab[j] = filled;
          order[filled++] = j;
        }
      }
    }
    for (int t = 0; t < n; ++t) {
      h[t] = lab[o.h[order[t]]];
      v[t] = lab[o.v[order[t]]];
    }
    if (s == 0 || std::tie(h, v) < std::tie(best.o.h, best.o.v)) {
      best.o.h = h;
      best.o.v = v;
      best.relabel = lab;
    }
  }
  return best;
}

namespace {

struct UnionFind {
  std::vector<int> p;
  explicit UnionFind(int n) : p(n) { std::iota(p.begin(), p.end(), 0); }
  int find(int x) {
    while (p[x] != x) x = p[x] = p[p[x]];
    return x;
  }
  void unite(int a, int b) { p[find(a)] = find(b); }
};

}  // namespace

CornerComplex corner_complex(const Origami& o) {
  const int n = o.n();
  UnionFind uf(4 * n);
  auto c = [](int sq, Corner k) { return 4 * sq + k; };
  for (int i = 0; i < n; ++i) {
    uf.unite(c(i, TL), c(o.v[i], BL));
    uf.unite(c(i, TR), c(o.v[i], BR));
    uf.unite(c(i, BR), c(o.h[i], BL));
    uf.unite(c(i, TR), c(o.h[i], TL));
  }
  CornerComplex cc;
  cc.vertex.resize(n);
  std::vector<int> id(4 * n, -1);
  for (int i = 0; i < n; ++i)
    for (int k = 0; k < 4; ++k) {
      int r = uf.find(4 * i + k);
      if (id[r] < 0) id[r] = cc.vertices++;
      cc.vertex[i][k] = id[r];
    }
  cc.edges = 2 * n;
  cc.faces = n;
  return cc;
}

int genus(const Origami& o) {
  auto cc = corner_complex(o);
  return 1 + (cc.edges - cc.vertices - cc.faces) / 2;
}

std::vector<int> singularity_profile(const Origami& o) {
  auto cc = corner_complex(o);
  // cone angle / 2π = number of bottom-left corners in the class
  std::vector<int> bl(cc.vertices, 0);
  for (auto& q : cc.vertex) ++bl[q[BL]];
  std::vector<int> out;
  for (int k : bl)
    if (k > 1) out.push_back(k - 1);
  std::sort(out.rbegin(), out.rend());
  return out;
}

}  // namespace stm
