#pragma once
// Printed data from the reference computations, transcribed verbatim.
// Bases: octahedron {s1,s4,s7,s10,z1,z2,z3,z6}; cube {s1,s2,s3,s5,s8,s9,z1..z5,z8,e1,e2,e3,e4,e6,e8};
// mutetrahedron {s1,s3,s4,s6,s8,z1,z3,z4,z6,z8}.

#include "stm/matrix.hpp"

#include <array>
#include <sstream>
#include <stdexcept>
#include <string>
#include <vector>

namespace fx {

using stm::Mat;
using stm::Q;
using stm::Vec;

// "2*s1 -2*s3 +z1 -1/2*e4" against a label list
inline Vec combo(const std::vector<std::string>& labels, const std::string& text) {
  Vec v(labels.size(), 0);
  std::istringstream in(text);
  std::string tok;
  while (in >> tok) {
    Q c = 1;
    std::string lab = tok;
    if (auto star = tok.find('*'); star != std::string::npos) {
      c = stm::parse_rational(tok.substr(0, star));
      lab = tok.substr(star + 1);
    } else if (lab[0] == '+' || lab[0] == '-') {
      if (lab[0] == '-') c = -1;
      lab = lab.substr(1);
    }
    std::size_t k = 0;
    while (k < labels.size() && labels[k] != lab) ++k;
    if (k == labels.size()) throw std::invalid_argument("unknown label " + lab);
    v[k] += c;
  }
  return v;
}

inline Mat cols(const std::vector<std::string>& labels, const std::vector<std::string>& texts) {
  std::vector<Vec> cs;
  for (auto& t : texts) cs.push_back(combo(labels, t));
  return Mat::from_columns(cs, labels.size());
}

// ---- octahedron
inline const std::vector<std::string> kOctLabels = {"s1", "s4", "s7", "s10", "z1", "z2", "z3", "z6"};
inline const char* kOctH = "(1,2,3)(4,5,6)(7,8,9)(10,11,12)";
inline const char* kOctV = "(1,4,7)(2,9,11)(3,10,5)(6,12,8)";
inline const char* kOctPi1 = "(1,3,2)(4,10,9)(5,11,7)(6,12,8)";
inline const char* kOctPi2 = "(1,6,11)(2,4,12)(3,5,10)(7,8,9)";
inline const char* kOctOmega =
    "0 0 0 0 1 1 1 0; 0 0 0 0 1 0 1 1; 0 0 0 0 1 1 0 1; 0 0 0 0 0 1 1 1;"
    "-1 -1 -1 0 0 0 0 0; -1 0 -1 -1 0 0 0 0; -1 -1 0 -1 0 0 0 0; 0 -1 -1 -1 0 0 0 0";
inline const char* kOctRho1 =
    "1 0 0 0 0 0 0 0; 0 0 1 0 0 0 0 0; 0 0 0 1 0 0 0 0; 0 1 0 0 0 0 0 0;"
    "0 0 0 0 0 1 0 0; 0 0 0 0 0 0 1 0; 0 0 0 0 1 0 0 0; 0 0 0 0 0 0 0 1";
inline const char* kOctRho2 =
    "0 0 0 1 0 0 0 0; 1 0 0 0 0 0 0 0; 0 0 1 0 0 0 0 0; 0 1 0 0 0 0 0 0;"
    "0 0 0 0 0 1 0 0; 0 0 0 0 0 0 0 1; 0 0 0 0 0 0 1 0; 0 0 0 0 1 0 0 0";
// zero-holonomy basis {S1,S4,S7,Z2,Z3,Z6}: S_i = s_i - s10, Z_j = z1 - z_j
inline const std::vector<std::string> kOctZero = {"s1 -s10", "s4 -s10", "s7 -s10", "z1 -z2", "z1 -z3", "z1 -z6"};
inline const char* kOctAlphaT3 =
    "1 0 0 0 0 1; 0 1 0 1 0 0; 0 0 1 0 1 0; 0 0 0 1 0 0; 0 0 0 0 1 0; 0 0 0 0 0 1";
inline const char* kOctAlphaSinvT =
    "-1 -1 -1 1 0 1; 0 0 1 0 0 0; 1 0 0 0 0 -1; 0 0 1 0 0 0; 1 0 0 0 0 0; -1 0 -1 0 0 0";
// images of z1, z2, z3, z6 under the lift of T^3
inline const std::vector<std::string> kOctT3Images = {"s1 s4 s7 z1", "s1 s7 s10 z2", "s1 s4 s10 z3", "s4 s7 s10 z6"};
inline const std::vector<std::string> kOctLieWords = {"", "A", "AA"};  // A = alpha(S^-1 T), seed log alpha(T^3)
inline const char* kOctRho1Z1 = "1 0 0; 0 0 1; -1 -1 -1";
inline const char* kOctRho2Z1 = "-1 -1 -1; 1 0 0; 0 0 1";

// ---- cube
inline const char* kCubeH1 = "(1,2,3,4)(5,6,7,8)(9,10,11,12)(13,14,15,16)(17,18,19,20)(21,22,23,24)";
inline const char* kCubeV1 = "(1,9,14,22)(2,20,13,7)(3,24,16,11)(4,5,15,18)(6,10,17,21)(8,23,19,12)";
inline const std::vector<std::string> kCubeLabels = {"s1", "s2", "s3", "s5", "s8", "s9", "z1", "z2", "z3",
                                                     "z4", "z5", "z8", "e1", "e2", "e3", "e4", "e6", "e8"};
inline const char* kCubePi1 = "(1,13)(2,14)(3,15)(4,16)(5,11)(6,12)(7,9)(8,10)(17,23)(18,24)(19,21)(20,22)";
inline const char* kCubePi2 = "(1,14)(2,15)(3,16)(4,13)(5,7)(6,8)(9,22)(10,23)(11,24)(12,21)(17,19)(18,20)";
inline const char* kCubePi3 = "(1,23,5)(2,24,6)(3,21,7)(4,22,8)(9,19,15)(10,20,16)(11,17,13)(12,18,14)";
inline const std::vector<std::array<long long, 4>> kCubeVeech = {{1, 2, 0, 1}, {5, -2, 3, -1}, {3, -2, 5, -3}};
inline const char* kCubeA = "1 0 0 0 0 0; 0 1 0 0 0 0; 0 0 1 0 0 1; 0 0 0 0 1 0; 0 0 0 0 0 1; 0 0 0 0 0 0";
inline const char* kCubeB = "1 0 0 1 0 0; 1 1 0 0 0 0; 0 1 1 0 0 0; 0 0 0 1 0 1; 0 1 0 0 0 1; 1 0 0 0 0 1";
inline const char* kCubeC =
    "-1 0 0 -1 -1 0; -1 -1 0 0 -1 0; 0 -1 -1 0 -1 0; 0 0 -1 -1 -1 0; 0 0 -1 -1 0 -1; 0 -1 -1 0 0 -1";
inline const std::vector<std::string> kCubeZero = {
    "s1 -s9", "s2 -s9", "s3 -s9", "s5 -s9", "s8 -s9", "z1 -z8", "z2 -z8", "z3 -z8", "z4 -z8", "z5 -z8",
    "e1 -2*s9 -4/3*z8", "e2 -2*s9 -4/3*z8", "e3 -2*s9 -4/3*z8", "e4 -2*s9 -4/3*z8", "e6 -2*s9 -4/3*z8",
    "e8 -2*s9 -4/3*z8"};
inline const char* kCubeE1 = "2*s1 -2*s3 +z1 -z2 -z3 -z4 -2*z8 +2*e2 +2*e3 +e6 +e8";
inline const char* kCubeE2 = "-e1 -e2 -e3 -e4 -e6 -e8";
inline const char* kCubeV1Vec =
    "8*s1 -2*s2 -10*s3 -4*s5 -4*s8 +7*z1 -3*z2 -2*z3 -2*z4 +z5 -9*z8 +3*e2 +8*e3 -7*e4 -e6 +3*e8";
inline const char* kCubePi3V1 = "-2*s1 -2*s2 +2*s5 +2*s8 -z1 -z2 +z5 +z8 -2*e1 -4*e3 +4*e6 +2*e8";
inline const std::vector<std::string> kCubeL2 = {"e1 -e2 +e3 -e4", "-e1 -e3 +e6 +e8"};
inline const std::vector<std::string> kCubeH1Span = {"e1 -e2 -e3 +e4 -e6 +e8", "e1 +e2 -e3 -e4 +e6 -e8",
                                                     "-e1 +e2 +e3 -e4 -e6 +e8"};
inline const std::vector<std::string> kCubeH2Span = {
    "s1 -s3", "s1 -s3 +z1 -z2 +z5 -z8 +e2 -e4",
    "4*s1 -4*s3 +3*z1 -z2 +z5 -3*z8 -e1 +2*e2 +e3 -2*e4 -e6 +e8"};
inline const std::vector<std::string> kCubeP1Span = {
    "s1 -s2 -s5 +s8", "-s1 +s2 -s5 +s8 -z1 +z2 -z5 +z8 -e2 +e4",
    "12*s1 -4*s2 -12*s3 -2*s5 -2*s8 -4*s9 +9*z1 -5*z2 -2*z3 -2*z4 +3*z5 -11*z8 -3*e1 +8*e2 +5*e3 -6*e4 -e6 +3*e8"};
inline const std::vector<std::string> kCubeP2Span = {
    "-z1 +z2 -z3 +z4", "2*s1 -2*s3 +2*z1 -z3 -z4 +z5 -z8 -e1 +e2 +e3 -e4", "-z3 +z4 -z5 +z8"};
inline const char* kCubeL1Rho1 = "-1 1; 0 1";
inline const char* kCubeL1Rho2 = "1 0; 0 1";
inline const char* kCubeL1Rho3 = "0 -1; 1 -1";
inline const char* kCubeH1Rho1 = "-1 1 0; 0 1 0; 0 1 -1";
inline const char* kCubeH1Rho2 = "0 1 -1; 1 0 -1; 0 0 -1";
inline const char* kCubeH1Rho3 = "1 0 -1; 0 0 -1; 0 1 -1";
inline const char* kCubeH2Rho1 = "-1 0 0; 0 1 0; 0 0 -1";
inline const char* kCubeH2Rho2 = "0 1 0; 1 0 0; 0 0 -1";
inline const char* kCubeH2Rho3 = "1/2 -1/2 2; 1/2 -1/2 -2; 1/4 1/4 0";
inline const char* kCubeP1Rho1 = "0 -1 2; 0 1 0; 1/2 1/2 0";
inline const char* kCubeP1Rho2 = "0 1 0; 1 0 0; 0 0 -1";
inline const char* kCubeP1Rho3 = "0 -1 2; 0 1 0; -1/2 1/2 -1";
inline const char* kCubeP2Rho1 = "1 0 0; 0 0 1; 0 1 0";
inline const char* kCubeP2Rho2 = "-1 0 0; 0 -1 0; 0 0 1";
inline const char* kCubeP2Rho3 = "0 0 1; 1 0 0; 0 1 0";
inline const char* kCubeXH = "1 0 -1; 1 2 1; 2 0 2";
inline const char* kCubeXP = "1 1 2; 0 2 0; -1 1 2";
// A = alpha(g1), B = alpha(g2), C = alpha(g3); seed log A
inline const std::vector<std::string> kCubeLieWords = {"", "B", "BB", "BBB", "C", "BC", "BBC", "AC", "AAC"};

// ---- mutetrahedron
inline const char* kMutH = "(1,2,3,4,5,6)(7,8,9,10,11,12)(13,14,15,16,17,18)(19,20,21,22,23,24)";
inline const std::vector<std::string> kMutLabels = {"s1", "s3", "s4", "s6", "s8", "z1", "z3", "z4", "z6", "z8"};
inline const char* kMutPi1 = "(1,4)(2,5)(3,6)(7,10)(8,11)(9,12)(13,16)(14,17)(15,18)(19,22)(20,23)(21,24)";
inline const char* kMutPi2 = "(1,8)(2,9)(3,10)(4,11)(5,12)(6,7)(13,24)(14,19)(15,20)(16,21)(17,22)(18,23)";
inline const char* kMutPi3 = "(1,18)(2,13)(3,14)(4,15)(5,16)(6,17)(7,22)(8,23)(9,24)(10,19)(11,20)(12,21)";
inline const char* kMutOmega =
    "0 0 0 0 0 -1 0 -1 -1 0; 0 0 0 0 0 -1 -1 0 -1 0; 0 0 0 0 0 -1 -1 -1 0 0;"
    "0 0 0 0 0 0 -1 -1 -1 -1; 0 0 0 0 0 0 0 0 -1 -1;"
    "1 1 1 0 0 0 0 0 0 0; 0 1 1 1 0 0 0 0 0 0; 1 0 1 1 0 0 0 0 0 0; 1 1 0 1 1 0 0 0 0 0; 0 0 0 1 1 0 0 0 0 0";
inline const char* kMutRho1 =
    "0 0 1 0 1 0 0 0 0 0; 0 0 0 1 0 0 0 0 0 0; 1 0 0 0 -1 0 0 0 0 0; 0 1 0 0 0 0 0 0 0 0; 0 0 0 0 1 0 0 0 0 0;"
    "0 0 0 0 0 0 0 1 0 -1; 0 0 0 0 0 0 0 0 1 0; 0 0 0 0 0 1 0 0 0 1; 0 0 0 0 0 0 1 0 0 0; 0 0 0 0 0 0 0 0 0 1";
inline const char* kMutRho2 =
    "0 0 1 0 1 0 0 0 0 0; 0 1 0 0 0 0 0 0 0 0; 0 0 -1 0 0 0 0 0 0 0; 0 0 0 1 0 0 0 0 0 0; 1 0 1 0 0 0 0 0 0 0;"
    "0 0 0 0 0 0 0 -1 0 1; 0 0 0 0 0 0 0 0 1 0; 0 0 0 0 0 0 0 1 0 0; 0 0 0 0 0 0 1 0 0 0; 0 0 0 0 0 1 0 1 0 0";
inline const char* kMutRho3 =
    "1 1 0 1 0 0 0 0 0 0; 0 0 0 -1 0 0 0 0 0 0; -1 0 0 0 1 0 0 0 0 0; 0 -1 0 0 0 0 0 0 0 0; 1 1 1 1 0 0 0 0 0 0;"
    "0 0 0 0 0 1 1 0 1 0; 0 0 0 0 0 0 0 0 -1 0; 0 0 0 0 0 -1 0 0 0 1; 0 0 0 0 0 0 -1 0 0 0; 0 0 0 0 0 1 1 1 1 0";
inline const std::vector<std::string> kMutZero = {"s1 -s8", "s3 -s8", "s4 -s8", "s6 -s8",
                                                  "z1 -z8", "z3 -z8", "z4 -z8", "z6 -z8"};
struct EigenFixture {
  std::vector<int> values;
  std::vector<std::string> span;
};
inline const std::vector<EigenFixture> kMutEigen = {
    {{-1, -1, 1}, {"-s1 +s4", "-z3 +z6"}},
    {{-1, 1, 1}, {"-s3 +s6", "-z1 +z4"}},
    {{1, -1, -1}, {"-s4 +s8", "-z1 +z8"}},
    {{1, 1, -1}, {"-s1 +s3 +s6 -s8", "z3 -z4 +z6 -z8"}},
    {{1, 1, 1}, {"-s1 -s8", "-z4 -z8"}},
};
// A = alpha(S^-1 T), B = alpha(T S T^-1); seed log B^2
inline const std::vector<std::string> kMutLieWords = {"",       "A",       "AA",       "BAA",
                                                      "ABAA",   "AABAA",   "BAABAA",   "ABAABAA",
                                                      "AABAABAA", "BAABAABAABABA", "BAABAAA", "AABABA"};

inline const char* kCubeG1 =
      "1 0 0 0 0 0 -1 -7 -8 -1 -1/3 -19/3 -13/3 -19/3 -16/3 -4/3;"
      "0 1 0 0 0 0 1 1 2 1 4/3 7/3 4/3 7/3 1/3 1/3;"
      "0 0 1 0 0 0 0 8 8 0 1/3 22/3 13/3 22/3 13/3 1/3;"
      "0 0 0 1 0 0 1 2 1 1 1/3 7/3 1/3 7/3 4/3 4/3;"
      "0 0 0 0 1 0 -1 0 1 -1 -1 1 -1 1 0 0;"
      "0 0 0 0 0 -1 -1 -11/2 -15/2 -1 -5/3 -31/6 -11/3 -43/6 -31/6 -7/6;"
      "0 0 0 0 0 0 0 3/2 7/2 1 0 3/2 2 7/2 1/2 1/2;"
      "0 0 0 0 0 0 0 2 1 0 1/3 4/3 1/3 4/3 1/3 1/3;"
      "0 0 0 0 0 0 0 1 2 0 1/3 4/3 1/3 4/3 1/3 1/3;"
      "0 0 0 0 0 0 1 -1/2 -5/2 0 1/3 -1/6 -5/3 -13/6 -1/6 -1/6;"
      "0 0 0 0 0 1 1 5/2 5/2 0 2 5/2 1 5/2 5/2 1/2;"
      "0 0 0 0 0 -1 0 -4 -6 -1 -1 -3 -3 -6 -3 -1;"
      "0 0 0 0 0 -1 -1 -7/2 -7/2 0 -4/3 -23/6 -1/3 -23/6 -17/6 -5/6;"
      "0 0 0 0 0 1 0 3 5 1 2/3 8/3 8/3 17/3 8/3 2/3;"
      "0 0 0 0 0 1 1 3/2 3/2 0 2/3 7/6 2/3 7/6 19/6 1/6;"
      "0 0 0 0 0 -1 -1 -5/2 -5/2 0 -1 -5/2 -1 -5/2 -5/2 1/2";
inline const char* kCubeG2 =
      "0 -2 -1 -5 1 0 8 7 1 6 13/3 1/3 13/3 1/3 4/3 4/3;"
      "-1 0 -1 1 0 0 -2 -1 -1 -2 -7/3 -4/3 -7/3 -4/3 -1/3 -1/3;"
      "0 1 1 6 -1 0 -8 -8 0 -6 -16/3 -1/3 -16/3 -1/3 -1/3 -1/3;"
      "0 0 0 1 0 0 -1 -2 -1 -1 -7/3 -1/3 -7/3 -1/3 -4/3 -4/3;"
      "1 1 1 2 1 0 -1 0 1 -1 1 3 1 3 2 2;"
      "0 -2 0 -9/2 1 1 15/2 11/2 1 11/2 25/6 2/3 25/6 2/3 7/6 7/6;"
      "-1 1 -1 3/2 0 0 -7/2 -3/2 0 -5/2 -5/2 -1 -5/2 -1 -1/2 -1/2;"
      "0 -1 0 1 -1 0 -1 -2 0 -1 -7/3 -4/3 -7/3 -4/3 -4/3 -4/3;"
      "0 1 0 2 0 0 -2 -1 0 -2 -1/3 2/3 -1/3 2/3 2/3 2/3;"
      "0 -1 0 -3/2 0 0 5/2 1/2 -1 3/2 1/6 -1/3 1/6 -1/3 -5/6 -5/6;"
      "1 0 0 5/2 -1 -1 -5/2 -5/2 -1 -5/2 -3/2 -1 -3/2 0 -1/2 -1/2;"
      "0 -1 1 -3 1 1 6 4 0 4 4 2 5 2 2 2;"
      "-1 0 0 -7/2 1 1 7/2 7/2 1 7/2 17/6 1/3 17/6 -2/3 5/6 5/6;"
      "0 1 -1 2 -1 -1 -5 -3 0 -3 -11/3 -5/3 -14/3 -5/3 -5/3 -5/3;"
      "1 1 1 1/2 0 -1 -3/2 -3/2 -1 -1/2 5/6 4/3 5/6 4/3 5/6 -1/6;"
      "-1 -1 -1 -3/2 0 1 5/2 5/2 1 3/2 1/2 -1 1/2 -1 -3/2 -1/2";
inline const char* kCubeG3 =
      "-1 5 -1 1 1 0 -4 1 -7 -6 0 1 0 1 -3 -3;"
      "0 -1 0 1 0 0 0 -1 1 0 -1 0 -1 0 1 1;"
      "1 -6 1 -1 0 0 6 0 8 8 1/3 1/3 1/3 1/3 16/3 16/3;"
      "-1 -2 -1 -1 -1 0 1 -1 0 1 -2 -3 -2 -3 -1 -1;"
      "0 -1 0 0 0 0 1 1 2 1 4/3 1/3 4/3 1/3 7/3 7/3;"
      "-1 9/2 -1/2 0 1 0 -7/2 0 -13/2 -9/2 1/6 2/3 1/6 2/3 -17/6 -17/6;"
      "0 -3/2 1/2 1 0 1 3/2 0 7/2 3/2 1/2 1 1/2 1 5/2 5/2;"
      "0 -2 0 -1 0 0 2 0 1 2 -2/3 -2/3 -2/3 -2/3 1/3 1/3;"
      "1 -1 1 1 0 0 1 0 2 1 4/3 4/3 4/3 4/3 7/3 7/3;"
      "-1 1/2 -3/2 -1 -1 -1 -3/2 -1 -7/2 -3/2 -5/2 -3 -5/2 -3 -7/2 -7/2;"
      "0 -5/2 -1/2 -1 -1 0 3/2 0 5/2 5/2 -1/2 -2 -1/2 -1 1/2 1/2;"
      "0 4 0 0 0 0 -3 0 -5 -4 1/3 1/3 1/3 1/3 -8/3 -11/3;"
      "-1 5/2 -1/2 0 0 0 -5/2 0 -7/2 -7/2 -1/2 0 -1/2 -1 -5/2 -5/2;"
      "1 -2 1 0 0 0 2 0 4 3 2/3 2/3 2/3 2/3 5/3 8/3;"
      "0 -1/2 -1/2 0 0 0 1/2 0 1/2 1/2 1/6 -1/3 -5/6 -1/3 1/6 1/6;"
      "0 3/2 1/2 1 1 0 -3/2 0 -3/2 -3/2 -1/6 4/3 5/6 4/3 -1/6 -1/6";
inline const char* kMutA =
      "0 0 0 0 0 0 -1 0;"
      "0 0 0 0 -1 -1 -1 -1;"
      "0 0 0 0 0 0 1 1;"
      "0 0 0 0 1 0 1 0;"
      "0 0 -1 0 1 0 1 1;"
      "0 1 0 0 0 0 -1 0;"
      "1 0 1 0 -1 -1 -1 -1;"
      "0 0 0 1 0 1 1 1";
inline const char* kMutB =
      "1 0 1 0 -1 0 -1 0;"
      "0 1 0 0 0 -1 -1 -1;"
      "0 0 -1 0 1 -1 1 2;"
      "0 0 0 1 0 0 1 0;"
      "0 0 0 0 0 0 -1 -1;"
      "0 0 0 0 1 1 1 1;"
      "0 0 0 0 0 0 1 0;"
      "0 0 0 0 -1 0 -1 0";

}  // namespace fx
