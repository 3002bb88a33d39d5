#pragma once

#include "stm/matrix.hpp"

#include <optional>
#include <string>
#include <vector>

namespace stm {

// A finite group acting linearly: generator images (at least one, the identity
// for the trivial group) and the images of all elements.
struct HomRep {
  std::vector<Mat> gens;
  std::vector<Mat> elements;
  std::size_t dim() const { return gens.at(0).rows(); }
};

// characteristic polynomial, coefficients from the constant term up, monic
std::vector<Q> charpoly(const Mat& m);
// distinct rational eigenvalues, ascending
std::vector<Q> rational_eigenvalues(const Mat& m);

struct Eigenspace {
  std::vector<Q> values;  // one per generator
  Mat basis;              // columns
};
// Common eigenspaces of pairwise commuting matrices. With strict set, throws
// IrrationalEigenvalue when they do not fill the space; otherwise returns what exists.
std::vector<Eigenspace> simultaneous_eigenspaces(const std::vector<Mat>& gens, std::size_t dim,
                                                 bool strict = true);

// smallest subspace containing the seeds and invariant under gens (columns)
Mat spin(const std::vector<Mat>& gens, const std::vector<Vec>& seeds);
// matrix of g on the invariant subspace spanned by the columns of basis
Mat restrict_to(const Mat& g, const Mat& basis);
HomRep restrict_rep(const HomRep& rep, const Mat& basis);
bool is_invariant(const std::vector<Mat>& gens, const Mat& basis);

// all X with a(g) X = X b(g) for each generator
std::vector<Mat> intertwiner_space(const std::vector<Mat>& a, const std::vector<Mat>& b);
// an invertible element of the span, if a short deterministic search finds one
std::optional<Mat> invertible_intertwiner(const std::vector<Mat>& space);

enum class Division { R, C, H, Unknown };
std::string division_name(Division d);
// tag from the centralizer dimension of an irreducible restriction; throws NotIrreducible
// when the restriction is found to split
Division division_algebra_type(const HomRep& irreducible);

struct Component {
  Mat basis;                 // columns, ambient coordinates
  std::vector<Mat> copies;   // irreducible pieces, ambient coordinates
  std::size_t multiplicity = 0;
  std::size_t irreducible_dim = 0;
  std::size_t centralizer_dim = 0;  // of one irreducible piece
  std::size_t commutant_dim = 0;    // of the whole isotypic block
  Division division = Division::Unknown;
  bool irreducible_certified = false;
  bool tautological = false;
  std::vector<Q> label;      // eigenvalues (abelian) or class-sum eigenvalues
  std::vector<Q> character;  // trace on one piece, per element of the rep
};

struct IsotypicReport {
  std::vector<Component> components;
  bool complete = true;
  bool abelian = true;
  bool omega_orthogonal = true;
  std::size_t total_dim = 0;
};

// hol is the 2 x dim holonomy matrix of the basis, omega the pairing on it.
IsotypicReport isotypic_decomposition(const HomRep& rep, const Mat& omega, const Mat& hol);

struct GroupBound {
  std::size_t dim = 0;
  std::vector<std::size_t> factors;  // rank n of each Sp(n,R) factor
  std::string name;                  // "Sp(2,R)^3", "trivial", ...
};
// Symplectic-group bound on the Zariski closure; throws UnsupportedAlgebraType
GroupBound myz_upper_bound(const IsotypicReport& report);
std::string group_name(const std::vector<std::size_t>& factors);

}  // namespace stm
