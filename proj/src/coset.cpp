#include "stm/coset.hpp"

#include "stm/error.hpp"
#include "stm/orbit.hpp"

#include <numeric>

namespace stm {

const std::vector<std::string>& sl2z_relators() {
  static const std::vector<std::string> rel = {"TsTStS", "TsTTsTTsTTsT"};
  return rel;
}

int CosetTable::trace(int coset, const std::string& word) const {
  for (char l : word) coset = next[coset][letter_index(l)];
  return coset;
}

namespace {

inline int inv(int x) { return (x + 2) % 4; }

class Enumerator {
 public:
  explicit Enumerator(std::size_t limit) : limit_(limit) { add(); }

  void scan_and_fill(int c, const std::vector<int>& w) {
    if (w.empty()) return;
    int f = c, b = c;
    int i = 0, j = static_cast<int>(w.size()) - 1;
    while (true) {
      while (i <= j && t_[f][w[i]] >= 0) f = t_[f][w[i++]];
      if (i > j) {
        if (f != b) coincidence(f, b);
        return;
      }
      while (j >= i && t_[b][inv(w[j])] >= 0) b = t_[b][inv(w[j--])];
      if (j < i) {
        coincidence(f, b);
        return;
      }
      if (i == j) {
        t_[f][w[i]] = b;
        t_[b][inv(w[i])] = f;
        return;
      }
      define(f, w[i]);
    }
  }

  void run(const std::vector<std::vector<int>>& subgroup, const std::vector<std::vector<int>>& rels) {
    for (auto& w : subgroup) scan_and_fill(0, w);
    for (std::size_t c = 0; c < t_.size(); ++c) {
      for (auto& r : rels) {
        if (!live(c)) break;
        scan_and_fill(static_cast<int>(c), r);
      }
      if (!live(c)) continue;
      for (int x = 0; x < 4; ++x)
        if (t_[c][x] < 0) define(static_cast<int>(c), x);
    }
  }

  CosetTable compact() {
    std::vector<int> id(t_.size(), -1);
    int k = 0;
    for (std::size_t c = 0; c < t_.size(); ++c)
      if (live(c)) id[c] = k++;
    CosetTable out;
    out.next.resize(k);
    for (std::size_t c = 0; c < t_.size(); ++c) {
      if (!live(c)) continue;
      for (int x = 0; x < 4; ++x) {
        if (t_[c][x] < 0) throw std::logic_error("incomplete coset table");
        out.next[id[c]][x] = id[rep(t_[c][x])];
      }
    }
    return out;
  }

 private:
  bool live(std::size_t c) const { return p_[c] == static_cast<int>(c); }

  int add() {
    if (t_.size() >= limit_)
      throw Error(Err::OrbitTooLarge, "coset enumeration exceeded " + std::to_string(limit_) + " cosets");
    t_.push_back({-1, -1, -1, -1});
    p_.push_back(static_cast<int>(p_.size()));
    return static_cast<int>(t_.size()) - 1;
  }

  void define(int c, int x) {
    int d = add();
    t_[c][x] = d;
    t_[d][inv(x)] = c;
  }

  int rep(int k) {
    int r = k;
    while (p_[r] != r) r = p_[r];
    while (p_[k] != r) {
      int nx = p_[k];
      p_[k] = r;
      k = nx;
    }
    return r;
  }

  void merge(int k, int l, std::vector<int>& queue) {
    k = rep(k);
    l = rep(l);
    if (k == l) return;
    if (k > l) std::swap(k, l);
    p_[l] = k;
    queue.push_back(l);
  }

  void coincidence(int a, int b) {
    std::vector<int> queue;
    merge(a, b, queue);
    for (std::size_t q = 0; q < queue.size(); ++q) {
      int e = queue[q];
      for (int x = 0; x < 4; ++x) {
        int f = t_[e][x];
        if (f < 0) continue;
        t_[f][inv(x)] = -1;
        int e1 = rep(e), f1 = rep(f);
        if (t_[e1][x] >= 0)
          merge(f1, t_[e1][x], queue);
        else if (t_[f1][inv(x)] >= 0)
          merge(e1, t_[f1][inv(x)], queue);
        else {
          t_[e1][x] = f1;
          t_[f1][inv(x)] = e1;
        }
      }
    }
  }

  std::size_t limit_;
  std::vector<std::array<int, 4>> t_;
  std::vector<int> p_;
};

std::vector<int> encode(const std::string& w) {
  std::vector<int> out;
  for (char l : w) out.push_back(letter_index(l));
  return out;
}

}  // namespace

CosetTable enumerate_cosets(const std::vector<std::string>& subgroup, std::size_t limit) {
  std::vector<std::vector<int>> gens, rels;
  for (auto& w : subgroup) gens.push_back(encode(w));
  for (auto& r : sl2z_relators()) rels.push_back(encode(r));
  Enumerator e(limit);
  e.run(gens, rels);
  return e.compact();
}

}  // namespace stm
