#pragma once

#include "stm/homology.hpp"
#include "stm/named_basis.hpp"
#include "stm/orbit.hpp"

#include <string>
#include <vector>

namespace stm {

// Image of a chain under the shear of one letter; labels are those of `o`,
// which are kept by apply_letter_raw.
Chain letter_chain_map(const Origami& o, char letter, const Chain& c);
// right-most letter first, transforming the surface along the way
Chain word_chain_map(const Origami& o, const std::string& word, const Chain& c);

struct AffineElement {
  std::string word;
  Mat2 derivative{1, 0, 0, 1};
  // identifications of the sheared surface with the original, one per automorphism
  std::vector<Perm> lifts;
  std::vector<Mat> full;  // on the whole basis, one per lift
  std::vector<Mat> zero;  // on the zero-holonomy basis, one per lift
  const Mat& full_matrix() const { return full.front(); }
  const Mat& zero_matrix() const { return zero.front(); }
};

class AffineContext {
 public:
  AffineContext(const Homology& hb, const CycleBasis& basis);
  // throws WordDoesNotStabilize
  AffineElement act(const std::string& word) const;
  const Homology& homology() const { return *hb_; }
  const CycleCoords& full_coords() const { return full_; }
  const CycleCoords& zero_coords() const { return zero_; }

 private:
  const Homology* hb_;
  CycleCoords full_, zero_;
};

std::vector<AffineElement> monodromy_generators(const AffineContext& ctx,
                                                const std::vector<std::string>& words);

}  // namespace stm
