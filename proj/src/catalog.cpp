#include "stm/error.hpp"
#include "stm/orbit.hpp"
#include "stm/perm.hpp"

namespace stm {

namespace {

Origami octahedron() {
  return make_origami(parse_cycles(12, "(1,2,3)(4,5,6)(7,8,9)(10,11,12)"),
                      parse_cycles(12, "(1,4,7)(2,9,11)(3,10,5)(6,12,8)"));
}

Origami cube_c1() {
  return make_origami(parse_cycles(24, "(1,2,3,4)(5,6,7,8)(9,10,11,12)(13,14,15,16)(17,18,19,20)(21,22,23,24)"),
                      parse_cycles(24, "(1,9,14,22)(2,20,13,7)(3,24,16,11)(4,5,15,18)(6,10,17,21)(8,23,19,12)"));
}

Origami mutetrahedron() {
  return make_origami(parse_cycles(24, "(1,2,3,4,5,6)(7,8,9,10,11,12)(13,14,15,16,17,18)(19,20,21,22,23,24)"),
                      parse_cycles(24, "(1,7,13,11,3,21)(2,20,14,12,18,22)(4,10,16,8,6,24)(5,23,17,9,15,19)"));
}

}  // namespace

const std::vector<std::string>& catalog_names() {
  static const std::vector<std::string> names = {"torus", "octahedron-O", "cube-C1", "cube-C",
                                                 "mutetrahedron-M"};
  return names;
}

Origami catalog(const std::string& name) {
  if (name == "torus") return make_origami({0}, {0});
  if (name == "octahedron-O") return octahedron();
  if (name == "cube-C1") return cube_c1();
  // labels kept from C1 so the named cycles below refer to fixed squares
  if (name == "cube-C") return apply_word_raw(cube_c1(), "TSS");
  if (name == "mutetrahedron-M") return mutetrahedron();
  throw Error(Err::UnknownName, "unknown surface '" + name + "'");
}

}  // namespace stm
