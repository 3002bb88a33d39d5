#pragma once

#include "stm/homology.hpp"
#include "stm/perm.hpp"

#include <string>
#include <vector>

namespace stm {

struct AutGroup {
  std::vector<Perm> elements;  // elements[0] is the identity
  std::vector<Perm> generators;
  bool abelian = true;
  int exponent = 1;
  int involutions = 0;
  std::string structure;
  std::size_t order() const { return elements.size(); }
};

// all φ with φ∘from.σ = to.σ∘φ for both permutations
std::vector<Perm> isomorphisms(const Origami& from, const Origami& to);
bool is_automorphism(const Origami& o, const Perm& phi);
AutGroup automorphisms(const Origami& o);
// recognizes the small groups that show up here; falls back to "order N"
std::string structure_name(const AutGroup& g);

// Matrix of the induced map on the span of coords.basis(); columns are images.
Mat aut_action(const Homology& hb, const CycleCoords& coords, const Perm& phi);

}  // namespace stm
