#include "stm/orbit.hpp"

#include "stm/coset.hpp"
#include "stm/error.hpp"

#include <algorithm>
#include <cctype>
#include <map>
#include <set>

namespace stm {

int letter_index(char letter) {
  switch (letter) {
    case 'T': return 0;
    case 'S': return 1;
    case 't': return 2;
    case 's': return 3;
  }
  throw Error(Err::BadInput, std::string("not a letter: ") + letter);
}

namespace {
char inverse_letter(char l) {
  switch (l) {
    case 'T': return 't';
    case 't': return 'T';
    case 'S': return 's';
    case 's': return 'S';
  }
  throw Error(Err::BadInput, std::string("not a letter: ") + l);
}

long long floor_div(long long a, long long b) {
  long long q = a / b;
  if ((a % b != 0) && ((a < 0) != (b < 0))) --q;
  return q;
}
}  // namespace

Mat2 letter_matrix(char letter) {
  switch (letter) {
    case 'T': return {1, 1, 0, 1};
    case 't': return {1, -1, 0, 1};
    case 'S': return {1, 0, 1, 1};
    case 's': return {1, 0, -1, 1};
  }
  throw Error(Err::BadInput, std::string("not a letter: ") + letter);
}

Mat2 mat2_mul(const Mat2& x, const Mat2& y) {
  return {x[0] * y[0] + x[1] * y[2], x[0] * y[1] + x[1] * y[3], x[2] * y[0] + x[3] * y[2],
          x[2] * y[1] + x[3] * y[3]};
}

Mat2 word_matrix(const std::string& word) {
  Mat2 m{1, 0, 0, 1};
  for (char l : word) m = mat2_mul(m, letter_matrix(l));
  return m;
}

bool is_word(const std::string& word) {
  return std::all_of(word.begin(), word.end(),
                     [](char c) { return c == 'T' || c == 't' || c == 'S' || c == 's'; });
}

std::string inverse_word(const std::string& word) {
  std::string r;
  for (auto it = word.rbegin(); it != word.rend(); ++it) r += inverse_letter(*it);
  return r;
}

std::string reduce_word(const std::string& word) {
  std::string r;
  for (char l : word) {
    if (!r.empty() && r.back() == inverse_letter(l))
      r.pop_back();
    else
      r += l;
  }
  return r;
}

std::string pretty_word(const std::string& word) {
  if (word.empty()) return "1";
  std::string out;
  std::size_t i = 0;
  while (i < word.size()) {
    std::size_t j = i;
    while (j < word.size() && word[j] == word[i]) ++j;
    long k = static_cast<long>(j - i);
    char l = word[i];
    bool neg = (l == 't' || l == 's');
    if (!out.empty()) out += ' ';
    out += static_cast<char>(neg ? l - 'a' + 'A' : l);
    if (neg)
      out += "^-" + std::to_string(k);
    else if (k > 1)
      out += "^" + std::to_string(k);
    i = j;
  }
  return out;
}

std::string parse_word(const std::string& text) {
  std::string out;
  std::size_t i = 0;
  auto skip = [&] {
    while (i < text.size() && (text[i] == ' ' || text[i] == '*' || text[i] == '.')) ++i;
  };
  skip();
  if (text.substr(i) == "1") return "";
  while (i < text.size()) {
    char l = text[i];
    if (l != 'T' && l != 'S' && l != 't' && l != 's')
      throw Error(Err::BadInput, "bad word: " + text);
    ++i;
    long e = 1;
    if (i < text.size() && text[i] == '^') {
      ++i;
      std::size_t j = i;
      if (j < text.size() && text[j] == '-') ++j;
      std::size_t k = j;
      while (k < text.size() && std::isdigit(static_cast<unsigned char>(text[k]))) ++k;
      if (k == j) throw Error(Err::BadInput, "bad exponent in word: " + text);
      e = std::stol(text.substr(i, k - i));
      i = k;
    }
    char base = l;
    if (e < 0) {
      base = inverse_letter(l);
      e = -e;
    }
    out.append(static_cast<std::size_t>(e), base);
    skip();
  }
  return out;
}

std::string word_for(const Mat2& target) {
  if (target[0] * target[3] - target[1] * target[2] != 1)
    throw Error(Err::BadInput, "matrix is not in SL(2,Z)");
  Mat2 m = target;
  std::string ops;
  auto ap = [&](char l) {
    ops += l;
    m = mat2_mul(letter_matrix(l), m);
  };
  while (m[2] != 0) {
    long long a = m[0], c = m[2];
    if (a == 0) {
      ap('T');
      ap('s');
    } else if (std::llabs(a) >= std::llabs(c)) {
      long long q = floor_div(a, c);
      for (long long k = 0; k < std::llabs(q); ++k) ap(q > 0 ? 't' : 'T');
    } else {
      long long q = floor_div(c, a);
      for (long long k = 0; k < std::llabs(q); ++k) ap(q > 0 ? 's' : 'S');
    }
  }
  if (m[0] == -1)
    for (char l : std::string("TsTTsT")) ap(l);
  long long x = m[1];
  for (long long k = 0; k < std::llabs(x); ++k) ap(x > 0 ? 't' : 'T');
  std::string w;
  for (char l : ops) w += inverse_letter(l);
  return reduce_word(w);
}

Origami apply_letter_raw(const Origami& o, char letter) {
  switch (letter) {
    case 'T': return {o.h, compose(o.v, inverse(o.h))};
    case 't': return {o.h, compose(o.v, o.h)};
    case 'S': return {compose(o.h, inverse(o.v)), o.v};
    case 's': return {compose(o.h, o.v), o.v};
  }
  throw Error(Err::BadInput, std::string("not a letter: ") + letter);
}

Origami apply_word_raw(const Origami& o, const std::string& word) {
  Origami x = o;
  for (auto it = word.rbegin(); it != word.rend(); ++it) x = apply_letter_raw(x, *it);
  return x;
}

LetterImage apply_letter(const Origami& o, char letter) {
  auto c = canonical_form(apply_letter_raw(o, letter));
  return {std::move(c.o), std::move(c.relabel)};
}

int OrbitGraph::act(int node, const std::string& word) const {
  for (auto it = word.rbegin(); it != word.rend(); ++it) node = edge[node][letter_index(*it)];
  return node;
}

OrbitGraph orbit(const Origami& o, std::size_t cap) {
  OrbitGraph g;
  auto c0 = canonical_form(o);
  g.base_relabel = c0.relabel;
  std::map<Origami, int> index;
  index.emplace(c0.o, 0);
  g.nodes.push_back(c0.o);
  g.parent.push_back(-1);
  g.parent_letter.push_back(0);
  g.tree_word.push_back("");
  for (std::size_t u = 0; u < g.nodes.size(); ++u) {
    std::array<int, 4> e{};
    std::array<Perm, 4> rl;
    for (int k = 0; k < 4; ++k) {
      auto img = apply_letter(g.nodes[u], kLetters[k]);
      auto it = index.find(img.o);
      int w;
      if (it == index.end()) {
        if (g.nodes.size() >= cap)
          throw Error(Err::OrbitTooLarge, "orbit exceeds " + std::to_string(cap) + " nodes");
        w = static_cast<int>(g.nodes.size());
        index.emplace(img.o, w);
        g.nodes.push_back(img.o);
        g.parent.push_back(static_cast<int>(u));
        g.parent_letter.push_back(kLetters[k]);
        g.tree_word.push_back(kLetters[k] + g.tree_word[u]);
      } else {
        w = it->second;
      }
      e[k] = w;
      rl[k] = std::move(img.relabel);
    }
    g.edge.push_back(e);
    g.edge_relabel.push_back(std::move(rl));
  }
  return g;
}

std::vector<std::string> veech_generators(const OrbitGraph& g) {
  std::vector<std::string> out;
  std::set<std::string> seen;
  for (std::size_t u = 0; u < g.size(); ++u) {
    for (int k = 0; k < 4; ++k) {
      int w = g.edge[u][k];
      std::string s = reduce_word(inverse_word(g.tree_word[w]) + kLetters[k] + g.tree_word[u]);
      if (s.empty() || seen.count(s) || seen.count(inverse_word(s))) continue;
      seen.insert(s);
      out.push_back(s);
    }
  }
  return out;
}

bool subgroup_equals(const std::vector<std::string>& a, const std::vector<std::string>& b,
                     const OrbitGraph& g) {
  for (auto* ws : {&a, &b})
    for (auto& w : *ws)
      if (!g.stabilizes(w))
        throw Error(Err::WordDoesNotStabilize, pretty_word(w));
  std::size_t limit = std::max<std::size_t>(200000, 1000 * g.size());
  auto ta = enumerate_cosets(a, limit);
  auto tb = enumerate_cosets(b, limit);
  for (auto& w : a)
    if (!tb.contains(w)) return false;
  for (auto& w : b)
    if (!ta.contains(w)) return false;
  return true;
}

}  // namespace stm
