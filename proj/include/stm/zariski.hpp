#pragma once

#include "stm/decomp.hpp"
#include "stm/matrix.hpp"

#include <string>
#include <vector>

namespace stm {

bool is_unipotent(const Mat& m);
// finite series; throws NotUnipotent
Mat unipotent_log(const Mat& m);
// finite series; throws NotUnipotent when x is not nilpotent
Mat nilpotent_exp(const Mat& x);
// Xᵀ Ω + Ω X = 0
bool infinitesimally_symplectic(const Mat& x, const Mat& omega);

// Words over a group given by generators: letter 'A' + k is generator k, the
// lowercase letter its inverse; digit '1' + j is extra conjugator j (no inverse).
struct WordGroup {
  std::vector<Mat> gens;
  std::vector<Mat> inverses;
  std::vector<Mat> extra;
  std::vector<Mat> extra_inverses;
  WordGroup(std::vector<Mat> generators, std::vector<Mat> extra_conjugators = {});
  std::size_t dim() const;
  std::vector<char> letters(bool with_extra) const;
  const Mat& letter(char c) const;
  const Mat& letter_inverse(char c) const;
  Mat product(const std::string& word) const;
};

// all words up to max_len in breadth-first order, no letter next to its inverse;
// generators come before inverses, extras last
std::vector<std::string> enumerate_words(const WordGroup& g, std::size_t max_len, bool with_extra);

struct Unipotent {
  std::string word;
  std::size_t coset = 0;  // index of the extra element multiplied on the left (0 = none)
  Mat matrix;
};
// Words whose matrix, possibly left-multiplied by one of `cosets`, is unipotent and
// not the identity; deduplicated by matrix.
std::vector<Unipotent> find_unipotents(const WordGroup& g, std::size_t max_len,
                                       const std::vector<Mat>& cosets = {});

struct LieSpan {
  std::vector<Mat> elements;
  std::vector<std::string> witnesses;
  std::size_t dimension() const { return elements.size(); }
};

struct SpanOptions {
  std::size_t max_word_len = 8;
  bool brackets = true;
  bool use_extra = true;
  std::size_t target = 0;  // stop once reached; 0 means exhaust the word length
};
// span of g X g⁻¹ over words g and seeds X, closed under brackets if asked
LieSpan conjugation_span(const WordGroup& g, const std::vector<Mat>& seeds, const SpanOptions& opt);
// rank of the span of explicitly listed conjugates g_w X g_w⁻¹
std::size_t listed_span_rank(const WordGroup& g, const Mat& seed, const std::vector<std::string>& words);

struct Verdict {
  std::size_t lower = 0;
  std::size_t upper = 0;
  std::string group_name;
  bool certified = false;
  std::vector<std::string> seeds;      // words of the unipotents used
  std::vector<std::string> witnesses;  // how each spanning element arose
  std::string summary() const;
};

// Lower bound from the Lie span of logarithms of unipotents, upper bound from
// the isotypic decomposition.
Verdict zariski_verdict(const WordGroup& g, const GroupBound& bound, const Mat& omega0,
                        std::size_t max_word_len);

}  // namespace stm
