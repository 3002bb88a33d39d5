#include "stm/error.hpp"
#include "stm/homology.hpp"
#include "stm/named_basis.hpp"

#include "doctest.h"
#include "fixtures.hpp"
#include "oracles.hpp"

using namespace stm;

namespace {

Mat hol_matrix(const std::vector<Chain>& cs) {
  Mat m(2, cs.size());
  for (std::size_t k = 0; k < cs.size(); ++k) std::tie(m(0, k), m(1, k)) = holonomy(cs[k]);
  return m;
}

CycleBasis named(const std::string& s) { return *named_basis(s, catalog(s)); }

}  // namespace

TEST_CASE("dimensions of first homology") {
  CHECK(build_homology(catalog("torus")).dim() == 2);
  CHECK(build_homology(catalog("octahedron-O")).dim() == 8);
  CHECK(build_homology(catalog("cube-C")).dim() == 18);
  CHECK(build_homology(catalog("mutetrahedron-M")).dim() == 10);
}

TEST_CASE("chain complex") {
  for (auto& name : catalog_names()) {
    auto hb = build_homology(catalog(name));
    CHECK((hb.d1 * hb.d2).is_zero());
    for (int i = 0; i < hb.n(); ++i) CHECK(hb.is_boundary(face_boundary(hb.o, i)));
  }
}

TEST_CASE("straight curves") {
  Origami t = catalog("torus");
  CHECK(straight_curve(t, 0, 1, 0) == h_edge(1, 0));
  CHECK(straight_curve(t, 0, 0, 1) == v_edge(1, 0));

  Origami o = catalog("octahedron-O");
  auto hb = build_homology(o);
  Chain s1 = straight_curve(o, 0, 1, 0);
  CHECK(holonomy(s1) == std::pair<Q, Q>{3, 0});
  for (int j : {1, 2, 3, 6}) CHECK(holonomy(straight_curve(o, j - 1, 0, 1)) == std::pair<Q, Q>{0, 3});
  CHECK(holonomy(s1 - straight_curve(o, 9, 1, 0)) == std::pair<Q, Q>{0, 0});

  Origami c = catalog("cube-C");
  CHECK(holonomy(straight_curve(c, 0, 1, 1)) == std::pair<Q, Q>{4, 4});
  Origami m = catalog("mutetrahedron-M");
  CHECK(holonomy(straight_curve(m, 0, 1, 1)) == std::pair<Q, Q>{2, 2});
  CHECK(holonomy(straight_curve(m, 0, -2, 1)) == std::pair<Q, Q>{-4, 2});

  for (auto [p, q] : std::vector<std::pair<long, long>>{{1, 0}, {0, 1}, {1, 1}, {-2, 1}, {3, -2}, {-1, -1}, {2, 5}})
    for (int i = 0; i < o.n(); ++i) CHECK(hb.is_cycle(straight_curve(o, i, p, q)));
  CHECK(straight_curve(o, 0, -1, -1) == -1 * straight_curve(o, 0, 1, 1));

  CHECK_THROWS_WITH_AS(straight_curve(o, 0, 2, 2), doctest::Contains("BadInput"), Error);
  CHECK_THROWS_WITH_AS(straight_curve(o, 0, 0, 0), doctest::Contains("BadInput"), Error);
  CHECK_THROWS_WITH_AS(straight_curve(o, 12, 1, 0), doctest::Contains("BadInput"), Error);
}

TEST_CASE("torus pairing") {
  auto hb = build_homology(catalog("torus"));
  CHECK(intersection_form(hb, {h_edge(1, 0), v_edge(1, 0)}) == Mat::parse("0 1; -1 0"));
}

TEST_CASE("pairing of core curves counts shared squares") {
  for (auto& name : catalog_names()) {
    Origami o = catalog(name);
    auto hb = build_homology(o);
    for (int i = 0; i < o.n(); ++i)
      for (int j = 0; j < o.n(); ++j) {
        auto row = oracle::row_of(o.h, i), col = oracle::row_of(o.v, j);
        long shared = 0;
        for (int k : row) shared += col.count(k);
        Mat w = intersection_form(hb, {straight_curve(o, i, 1, 0), straight_curve(o, j, 0, 1)});
        CHECK(w(0, 1) == shared);
      }
  }
}

TEST_CASE("octahedron pairing in the hand-picked basis") {
  auto b = named("octahedron-O");
  auto hb = build_homology(catalog("octahedron-O"));
  CHECK(b.labels == std::vector<std::string>{"hor1", "hor4", "hor7", "hor10", "ver1", "ver2", "ver3", "ver6"});
  CHECK(intersection_form(hb, b.cycles) == Mat::parse(fx::kOctOmega));
}

TEST_CASE("cube and mutetrahedron pairings differ from the printed ones by a sign or a block order") {
  auto hb = build_homology(catalog("cube-C"));
  Mat w = intersection_form(hb, named("cube-C").cycles);
  Mat a = Mat::parse(fx::kCubeA), b = Mat::parse(fx::kCubeB), c = Mat::parse(fx::kCubeC);
  Mat z(6, 6);
  Mat printed = vstack(vstack(hstack(hstack(z, -a), -b), hstack(hstack(a.transpose(), z), -c)),
                       hstack(hstack(b.transpose(), c.transpose()), z));
  CHECK(w == -printed);

  CHECK(w != printed);

  // printed with the two halves of the basis exchanged
  auto hm = build_homology(catalog("mutetrahedron-M"));
  Mat wm = intersection_form(hm, named("mutetrahedron-M").cycles);
  Mat pm = Mat::parse(fx::kMutOmega);
  Mat swap(10, 10);
  for (std::size_t k = 0; k < 5; ++k) swap(k, k + 5) = swap(k + 5, k) = 1;
  CHECK(swap.transpose() * wm * swap == pm);
  CHECK(wm != pm);
  CHECK(wm != -pm);
}

TEST_CASE("intersection form rejects non-cycles") {
  auto hb = build_homology(catalog("octahedron-O"));
  CHECK_THROWS_WITH_AS(intersection_form(hb, {h_edge(12, 0), v_edge(12, 0)}), doctest::Contains("NonCycleInput"),
                       Error);
}

TEST_CASE("coordinates in a cycle family") {
  auto hb = build_homology(catalog("octahedron-O"));
  auto b = named("octahedron-O");
  CycleCoords coords(hb, b.cycles);
  Vec e1(8, 0);
  e1[0] = 1;
  CHECK(coords(b.cycles[0]) == e1);
  // a homologous representative: add a face boundary
  CHECK(coords(b.cycles[0] + face_boundary(hb.o, 5)) == e1);
  CHECK_THROWS_WITH_AS(coords(h_edge(12, 0)), doctest::Contains("NonCycleInput"), Error);

  CycleCoords part(hb, {b.cycles[0], b.cycles[4]});
  CHECK_THROWS_WITH_AS(part(b.cycles[1]), doctest::Contains("NotInSpan"), Error);
  CHECK_THROWS_AS(CycleCoords(hb, {b.cycles[0], b.cycles[0]}), Error);
}

TEST_CASE("hand-picked zero-holonomy bases") {
  auto o = named("octahedron-O");
  CHECK(o.zero.size() == 6);
  auto c = named("cube-C");
  CHECK(c.zero.size() == 16);
  auto m = named("mutetrahedron-M");
  CHECK(m.zero.size() == 8);
  CHECK(named("torus").zero.empty());
  for (auto* b : {&o, &c, &m}) CHECK(hol_matrix(b->zero).is_zero());

  auto hb = build_homology(catalog("cube-C"));
  CycleCoords coords(hb, c.cycles);
  Vec hk = coords(c.zero[10]);
  CHECK(hk == fx::combo(fx::kCubeLabels, fx::kCubeZero[10]));
  CHECK(boost::multiprecision::denominator(hk[11]) == 3);
  for (std::size_t k = 0; k < 16; ++k) CHECK(coords(c.zero[k]) == fx::combo(fx::kCubeLabels, fx::kCubeZero[k]));

  auto ho = build_homology(catalog("octahedron-O"));
  CycleCoords oc(ho, o.cycles);
  for (std::size_t k = 0; k < 6; ++k) CHECK(oc(o.zero[k]) == fx::combo(fx::kOctLabels, fx::kOctZero[k]));
  auto hm = build_homology(catalog("mutetrahedron-M"));
  CycleCoords mc(hm, m.cycles);
  for (std::size_t k = 0; k < 8; ++k) CHECK(mc(m.zero[k]) == fx::combo(fx::kMutLabels, fx::kMutZero[k]));
}

TEST_CASE("integral bases are unimodular") {
  for (auto& name : catalog_names()) {
    auto hb = build_homology(catalog(name));
    auto b = integral_basis(hb);
    CHECK(b.size() == hb.dim());
    Q d = det(intersection_form(hb, b));
    CHECK((d == 1 || d == -1));
    Mat coeffs;
    auto z = zero_holonomy_basis(b, &coeffs);
    CHECK(z.size() + 2 == b.size());
    CHECK(hol_matrix(z).is_zero());
    for (auto& x : coeffs.flatten()) CHECK(is_integer(x));
  }
}

TEST_CASE("auto basis") {
  auto hb = build_homology(catalog("mutetrahedron-M"));
  auto b = auto_basis(hb);
  CHECK(b.kind == "auto");
  CHECK(b.cycles.size() == 10);
  CHECK(b.labels.front() == "c1");
  CHECK(b.zero.size() == 8);
  CHECK_FALSE(named_basis("cube-C1", catalog("cube-C1")));
}

TEST_CASE("relabelling chains") {
  Origami o = catalog("octahedron-O");
  Perm phi = parse_cycles(12, fx::kOctPi1);
  Chain c = straight_curve(o, 3, 1, 0);
  Chain r = relabel_chain(c, phi);
  CHECK(r == straight_curve(o, phi[3], 1, 0));
  CHECK(linear_combination({c, r}, {Q(2), Q(-1)}) == 2 * c - r);
}
