#include "stm/aut.hpp"

#include "stm/error.hpp"

#include <algorithm>
#include <numeric>
#include <set>

namespace stm {

std::vector<Perm> isomorphisms(const Origami& from, const Origami& to) {
  std::vector<Perm> out;
  const int n = from.n();
  if (to.n() != n) return out;
  for (int j = 0; j < n; ++j) {
    Perm phi(n, -1);
    phi[0] = j;
    std::vector<int> stack{0};
    bool ok = true;
    while (!stack.empty() && ok) {
      int i = stack.back();
      stack.pop_back();
      for (auto [a, b] : {std::pair{from.h[i], to.h[phi[i]]}, std::pair{from.v[i], to.v[phi[i]]}}) {
        if (phi[a] < 0) {
          phi[a] = b;
          stack.push_back(a);
        } else if (phi[a] != b) {
          ok = false;
          break;
        }
      }
    }
    if (ok && is_bijection(phi)) out.push_back(std::move(phi));
  }
  return out;
}

bool is_automorphism(const Origami& o, const Perm& phi) {
  return phi.size() == o.h.size() && is_bijection(phi) && compose(phi, o.h) == compose(o.h, phi) &&
         compose(phi, o.v) == compose(o.v, phi);
}

namespace {

std::set<Perm> closure(const std::vector<Perm>& gens, int n) {
  std::set<Perm> seen{identity_perm(n)};
  std::vector<Perm> todo{identity_perm(n)};
  while (!todo.empty()) {
    Perm x = todo.back();
    todo.pop_back();
    for (auto& g : gens) {
      Perm y = compose(g, x);
      if (seen.insert(y).second) todo.push_back(y);
    }
  }
  return seen;
}

}  // namespace

AutGroup automorphisms(const Origami& o) {
  AutGroup g;
  const int n = o.n();
  g.elements = isomorphisms(o, o);
  Perm id = identity_perm(n);
  auto it = std::find(g.elements.begin(), g.elements.end(), id);
  std::iter_swap(g.elements.begin(), it);
  std::set<Perm> span{id};
  for (auto& x : g.elements) {
    if (span.count(x)) continue;
    g.generators.push_back(x);
    span = closure(g.generators, n);
  }
  for (auto& a : g.elements) {
    int k = perm_order(a);
    g.exponent = std::lcm(g.exponent, k);
    if (k == 2) ++g.involutions;
    for (auto& b : g.elements)
      if (compose(a, b) != compose(b, a)) g.abelian = false;
  }
  g.structure = structure_name(g);
  return g;
}

std::string structure_name(const AutGroup& g) {
  const std::size_t n = g.order();
  if (n == 1) return "trivial";
  if (g.abelian) {
    if (g.exponent == static_cast<int>(n)) return "Z/" + std::to_string(n) + "Z";
    if (g.exponent == 2) {
      int k = 0;
      while ((std::size_t{1} << k) < n) ++k;
      return "(Z/2Z)^" + std::to_string(k);
    }
    return "abelian of order " + std::to_string(n);
  }
  if (n == 6) return "S3";
  if (n == 8) return g.involutions == 5 ? "D4" : "Q8";
  if (n == 12 && g.involutions == 3 && g.exponent == 6) return "A4";
  if (n == 24 && g.involutions == 9 && g.exponent == 12) return "S4";
  return "nonabelian of order " + std::to_string(n);
}

Mat aut_action(const Homology& hb, const CycleCoords& coords, const Perm& phi) {
  if (!is_automorphism(hb.o, phi)) throw Error(Err::NotAnAutomorphism, cycle_string(phi));
  std::vector<Chain> images;
  for (auto& c : coords.basis()) images.push_back(relabel_chain(c, phi));
  return coords.columns(images);
}

}  // namespace stm
