#include "stm/affine.hpp"

#include "stm/aut.hpp"
#include "stm/error.hpp"

namespace stm {

Chain letter_chain_map(const Origami& o, char letter, const Chain& c) {
  const int n = o.n();
  Chain d(2 * n);
  switch (letter) {
    case 'T':
      for (int i = 0; i < n; ++i) {
        d[i] += c[i] + c[n + i];
        d[n + o.h[i]] += c[n + i];
      }
      break;
    case 't': {
      Perm hi = inverse(o.h);
      for (int i = 0; i < n; ++i) {
        d[i] += c[i];
        d[n + hi[i]] += c[n + i];
        d[hi[i]] -= c[n + i];
      }
      break;
    }
    case 'S':
      for (int i = 0; i < n; ++i) {
        d[n + i] += c[n + i] + c[i];
        d[o.v[i]] += c[i];
      }
      break;
    case 's': {
      Perm vi = inverse(o.v);
      for (int i = 0; i < n; ++i) {
        d[n + i] += c[n + i];
        d[vi[i]] += c[i];
        d[n + vi[i]] -= c[i];
      }
      break;
    }
    default:
      throw Error(Err::BadInput, std::string("not a letter: ") + letter);
  }
  return d;
}

Chain word_chain_map(const Origami& o, const std::string& word, const Chain& c) {
  Origami x = o;
  Chain d = c;
  for (auto it = word.rbegin(); it != word.rend(); ++it) {
    d = letter_chain_map(x, *it, d);
    x = apply_letter_raw(x, *it);
  }
  return d;
}

AffineContext::AffineContext(const Homology& hb, const CycleBasis& basis)
    : hb_(&hb), full_(hb, basis.cycles), zero_(hb, basis.zero) {}

AffineElement AffineContext::act(const std::string& word) const {
  if (!is_word(word)) throw Error(Err::BadInput, "bad word: " + word);
  const Origami& o = hb_->o;
  AffineElement a;
  a.word = word;
  a.derivative = word_matrix(word);
  Origami y = o;
  std::vector<Chain> full = full_.basis(), zero = zero_.basis();
  for (auto it = word.rbegin(); it != word.rend(); ++it) {
    for (auto& c : full) c = letter_chain_map(y, *it, c);
    for (auto& c : zero) c = letter_chain_map(y, *it, c);
    y = apply_letter_raw(y, *it);
  }
  a.lifts = isomorphisms(y, o);
  if (a.lifts.empty()) throw Error(Err::WordDoesNotStabilize, pretty_word(word));
  for (auto& phi : a.lifts) {
    std::vector<Chain> f, z;
    for (auto& c : full) f.push_back(relabel_chain(c, phi));
    for (auto& c : zero) z.push_back(relabel_chain(c, phi));
    a.full.push_back(full_.columns(f));
    a.zero.push_back(zero_.columns(z));
  }
  return a;
}

std::vector<AffineElement> monodromy_generators(const AffineContext& ctx,
                                                const std::vector<std::string>& words) {
  std::vector<AffineElement> out;
  for (auto& w : words) out.push_back(ctx.act(w));
  return out;
}

}  // namespace stm
