#pragma once

#include "stm/perm.hpp"

#include <array>
#include <cstddef>
#include <string>
#include <vector>

namespace stm {

// Words are strings over 'T', 't' (T⁻¹), 'S', 's' (S⁻¹). A word is the
// matrix product of its letters read left to right, so the right-most letter
// acts on a surface first.
using Mat2 = std::array<long long, 4>;  // a b c d

Mat2 letter_matrix(char letter);
Mat2 mat2_mul(const Mat2& x, const Mat2& y);
Mat2 word_matrix(const std::string& word);
std::string inverse_word(const std::string& word);
std::string reduce_word(const std::string& word);
bool is_word(const std::string& word);
// "T^3 S^-1 T" style rendering and its inverse
std::string pretty_word(const std::string& word);
std::string parse_word(const std::string& text);
// some word with word_matrix(w) == m; m must lie in SL(2,Z)
std::string word_for(const Mat2& m);

// σ-level action with labels kept: T(X) = (σ_h, σ_vσ_h⁻¹), S(X) = (σ_hσ_v⁻¹, σ_v)
Origami apply_letter_raw(const Origami& o, char letter);
Origami apply_word_raw(const Origami& o, const std::string& word);

struct LetterImage {
  Origami o;     // canonical form of the image
  Perm relabel;  // raw image label -> canonical label
};
LetterImage apply_letter(const Origami& o, char letter);

inline constexpr char kLetters[4] = {'T', 'S', 't', 's'};
int letter_index(char letter);

struct OrbitGraph {
  std::vector<Origami> nodes;  // canonical forms; nodes[base] is the input's
  std::vector<std::array<int, 4>> edge;
  std::vector<std::array<Perm, 4>> edge_relabel;
  std::vector<int> parent;
  std::vector<char> parent_letter;
  // tree_word[u] carries the base node to node u
  std::vector<std::string> tree_word;
  int base = 0;
  Perm base_relabel;  // input labels -> canonical labels of nodes[base]

  std::size_t size() const { return nodes.size(); }
  int act(int node, const std::string& word) const;
  bool stabilizes(const std::string& word) const { return act(base, word) == base; }
};

OrbitGraph orbit(const Origami& o, std::size_t cap = 1000000);
// Schreier generators, freely reduced, one per non-tree edge (duplicates removed)
std::vector<std::string> veech_generators(const OrbitGraph& g);
bool subgroup_equals(const std::vector<std::string>& a, const std::vector<std::string>& b,
                     const OrbitGraph& g);

}  // namespace stm
