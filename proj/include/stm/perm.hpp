#pragma once

#include <array>
#include <string>
#include <vector>

namespace stm {

// 0-based images; p[i] is the image of i.
using Perm = std::vector<int>;

Perm identity_perm(int n);
// (a∘b)(i) = a(b(i))
Perm compose(const Perm& a, const Perm& b);
Perm inverse(const Perm& p);
bool is_bijection(const Perm& p);
// 1-based cycles; fixed points may be omitted
Perm perm_from_cycles(int n, const std::vector<std::vector<int>>& cycles);
// 1-based one-line notation
Perm perm_from_one_line(const std::vector<int>& images);
std::vector<int> one_line(const Perm& p);
std::vector<std::vector<int>> cycles_of(const Perm& p, bool with_fixed = false);
std::string cycle_string(const Perm& p);
// parses "(1,2,3)(4,5)" style text
Perm parse_cycles(int n, const std::string& text);
int perm_order(const Perm& p);

struct Origami {
  Perm h;  // right neighbour
  Perm v;  // top neighbour
  int n() const { return static_cast<int>(h.size()); }
  friend bool operator==(const Origami&, const Origami&) = default;
  friend auto operator<=>(const Origami&, const Origami&) = default;
};

// validates bijectivity and transitivity
Origami make_origami(Perm h, Perm v);
bool is_connected(const Perm& h, const Perm& v);

struct Canonical {
  Origami o;
  Perm relabel;  // old label i becomes relabel[i]
};
Canonical canonical_form(const Origami& o);
// (φσ_hφ⁻¹, φσ_vφ⁻¹)
Origami conjugate(const Origami& o, const Perm& phi);

enum Corner { BL = 0, BR = 1, TL = 2, TR = 3 };

struct CornerComplex {
  std::vector<std::array<int, 4>> vertex;  // vertex class of each corner of each square
  int vertices = 0;
  int edges = 0;
  int faces = 0;
};
CornerComplex corner_complex(const Origami& o);
int genus(const Origami& o);
// zero orders k_i > 0, descending
std::vector<int> singularity_profile(const Origami& o);

Origami catalog(const std::string& name);
const std::vector<std::string>& catalog_names();

}  // namespace stm
