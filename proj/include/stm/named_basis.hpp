#pragma once

#include "stm/homology.hpp"

#include <optional>
#include <string>
#include <vector>

namespace stm {

struct CycleBasis {
  std::string kind;  // "named" or "auto"
  std::vector<Chain> cycles;  // spans H_1
  std::vector<std::string> labels;
  std::vector<Chain> zero;  // spans the zero-holonomy subspace
  std::vector<std::string> zero_labels;
};

// Hand-picked bases of straight curves for the built-in surfaces that have one.
std::optional<CycleBasis> named_basis(const std::string& surface, const Origami& o);
// Integral basis plus an integral zero-holonomy basis built from it.
CycleBasis auto_basis(const Homology& hb);

}  // namespace stm
