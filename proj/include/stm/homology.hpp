#pragma once

#include "stm/matrix.hpp"
#include "stm/perm.hpp"

#include <utility>
#include <vector>

namespace stm {

// Chains have length 2N: h_0..h_{N-1} then v_0..v_{N-1}.
// h_i runs along the bottom of square i (left to right), v_i up its left side.
using Chain = Vec;

struct Homology {
  Origami o;
  CornerComplex cc;
  Mat d1;    // vertices x edges
  Mat d2;    // edges x faces
  Mat coh;   // 2N x 2g, cocycles representing a cohomology basis
  Mat cup;   // 2g x 2g cup pairing of those cocycles
  Mat cup_inv;

  int n() const { return o.n(); }
  std::size_t dim() const { return coh.cols(); }
  bool is_cycle(const Chain& c) const;
  bool is_boundary(const Chain& c) const { return is_zero(cls(c)); }
  // coordinates of the class of c against the cocycle basis
  Vec cls(const Chain& c) const;
};

Homology build_homology(const Origami& o);

Chain h_edge(int n, int i);
Chain v_edge(int n, int i);
// face i: h_i + v_{σ_h(i)} - h_{σ_v(i)} - v_i
Chain face_boundary(const Origami& o, int i);

// Closed straight line of primitive direction (p, q) through square `start`.
Chain straight_curve(const Origami& o, int start, long p, long q);

std::pair<Q, Q> holonomy(const Chain& c);

// Pairing matrix of the given cycles, antisymmetric; torus gives <h, v> = 1.
Mat intersection_form(const Homology& hb, const std::vector<Chain>& cycles);

// Solves for coordinates of a class in a linearly independent family of cycles.
class CycleCoords {
 public:
  CycleCoords(const Homology& hb, std::vector<Chain> basis);
  // throws NotInSpan
  Vec operator()(const Chain& c) const;
  // columns are the coordinates of the given chains
  Mat columns(const std::vector<Chain>& chains) const;
  const std::vector<Chain>& basis() const { return basis_; }

 private:
  const Homology* hb_;
  std::vector<Chain> basis_;
  Mat e_;     // 2g x k
  Mat left_;  // k x 2g left inverse of e_
};

Vec express_in_basis(const Homology& hb, const Chain& c, const std::vector<Chain>& basis);

// h_i -> h_{φ(i)}, v_i -> v_{φ(i)}
Chain relabel_chain(const Chain& c, const Perm& phi);

// Integral basis from a spanning tree of the 1-skeleton and a spanning tree of
// the dual graph; the cycles generate H_1(X; Z).
std::vector<Chain> integral_basis(const Homology& hb);

// 2g - 2 integral combinations of `basis` spanning the kernel of holonomy.
// Coefficients relative to `basis` are returned in `coeffs` when requested.
std::vector<Chain> zero_holonomy_basis(const std::vector<Chain>& basis, Mat* coeffs = nullptr);

Chain linear_combination(const std::vector<Chain>& chains, const Vec& coeffs);

}  // namespace stm
