#include "stm/named_basis.hpp"

namespace stm {

namespace {

std::string combo_label(const Vec& x, const std::vector<std::string>& labels) {
  std::string s;
  for (std::size_t k = 0; k < x.size(); ++k) {
    if (x[k] == 0) continue;
    Q a = x[k];
    if (a < 0) {
      s += '-';
      a = -a;
    } else if (!s.empty()) {
      s += '+';
    }
    if (a != 1) s += to_string(a);
    s += labels[k];
  }
  return s.empty() ? "0" : s;
}

struct Builder {
  const Origami& o;
  CycleBasis b;

  int add(const std::string& tag, int square, long p, long q) {
    b.cycles.push_back(straight_curve(o, square - 1, p, q));
    b.labels.push_back(tag + std::to_string(square));
    return static_cast<int>(b.cycles.size()) - 1;
  }
  void zero(const std::vector<std::pair<int, Q>>& terms) {
    Vec x(b.cycles.size());
    for (auto& [k, c] : terms) x[k] += c;
    b.zero.push_back(linear_combination(b.cycles, x));
    b.zero_labels.push_back(combo_label(x, b.labels));
  }
};

}  // namespace

std::optional<CycleBasis> named_basis(const std::string& surface, const Origami& o) {
  Builder bl{o, {}};
  bl.b.kind = "named";
  if (surface == "torus") {
    bl.add("hor", 1, 1, 0);
    bl.add("ver", 1, 0, 1);
    return bl.b;
  }
  if (surface == "octahedron-O") {
    std::vector<int> h, v;
    for (int i : {1, 4, 7, 10}) h.push_back(bl.add("hor", i, 1, 0));
    for (int j : {1, 2, 3, 6}) v.push_back(bl.add("ver", j, 0, 1));
    for (int k = 0; k < 3; ++k) bl.zero({{h[k], 1}, {h[3], -1}});
    for (int k = 1; k < 4; ++k) bl.zero({{v[0], 1}, {v[k], -1}});
    return bl.b;
  }
  if (surface == "cube-C") {
    std::vector<int> h, v, d;
    for (int i : {1, 2, 3, 5, 8, 9}) h.push_back(bl.add("hor", i, 1, 0));
    for (int j : {1, 2, 3, 4, 5, 8}) v.push_back(bl.add("ver", j, 0, 1));
    for (int k : {1, 2, 3, 4, 6, 8}) d.push_back(bl.add("diag", k, 1, 1));
    for (int k = 0; k < 5; ++k) bl.zero({{h[k], 1}, {h[5], -1}});
    for (int k = 0; k < 5; ++k) bl.zero({{v[k], 1}, {v[5], -1}});
    for (int k = 0; k < 6; ++k) bl.zero({{d[k], 1}, {h[5], -2}, {v[5], Q(-4, 3)}});
    return bl.b;
  }
  if (surface == "mutetrahedron-M") {
    std::vector<int> a, c;
    for (int i : {1, 3, 4, 6, 8}) a.push_back(bl.add("diag", i, 1, 1));
    for (int i : {1, 3, 4, 6, 8}) c.push_back(bl.add("steep", i, -2, 1));
    for (int k = 0; k < 4; ++k) bl.zero({{a[k], 1}, {a[4], -1}});
    for (int k = 0; k < 4; ++k) bl.zero({{c[k], 1}, {c[4], -1}});
    return bl.b;
  }
  return std::nullopt;
}

CycleBasis auto_basis(const Homology& hb) {
  CycleBasis b;
  b.kind = "auto";
  b.cycles = integral_basis(hb);
  for (std::size_t k = 0; k < b.cycles.size(); ++k) b.labels.push_back("c" + std::to_string(k + 1));
  Mat coeffs;
  b.zero = zero_holonomy_basis(b.cycles, &coeffs);
  for (std::size_t j = 0; j < coeffs.cols(); ++j) b.zero_labels.push_back(combo_label(coeffs.col(j), b.labels));
  return b;
}

}  // namespace stm
