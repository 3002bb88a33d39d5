#pragma once

#include <array>
#include <cstddef>
#include <string>
#include <vector>

namespace stm {

// SL(2,Z) = < T, S | T S⁻¹ T = S⁻¹ T S⁻¹, (T S⁻¹ T)^4 = 1 >
const std::vector<std::string>& sl2z_relators();

// Right cosets of a subgroup of SL(2,Z); coset 0 is the subgroup itself.
struct CosetTable {
  std::vector<std::array<int, 4>> next;  // indexed by letter_index
  std::size_t index() const { return next.size(); }
  int trace(int coset, const std::string& word) const;
  bool contains(const std::string& word) const { return trace(0, word) == 0; }
};

// Todd–Coxeter (HLT with coincidences). Throws OrbitTooLarge past `limit` cosets.
CosetTable enumerate_cosets(const std::vector<std::string>& subgroup, std::size_t limit = 200000);

}  // namespace stm
