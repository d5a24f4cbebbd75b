// Links to neighbouring structures: the antisymmetric matroid of an ordinary
// matroid, symmetric matroids (lifts of delta-matroids) and their even
// extensions, gaussoids, and oriented gaussoids.

#ifndef LAGMAT_BRIDGES_HPP
#define LAGMAT_BRIDGES_HPP

#include <optional>
#include <string>
#include <vector>

#include "lagmat/antisym.hpp"
#include "lagmat/ground.hpp"
#include "lagmat/matroids.hpp"
#include "lagmat/tract_antisym.hpp"

namespace lagmat {

// Circuits of N together with the starred circuits of its dual.
CircuitFamily ant_circuits(const Matroid& n);
AntisymmetricMatroid ant_of_matroid(const Matroid& n);

struct MinorCommutation {
  bool contraction = false;  // ant(N)|i == ant(N/i)
  bool deletion = false;     // ant(N)|i* == ant(N\i)
  bool ok() const { return contraction && deletion; }
};
MinorCommutation minor_commutation_check(const Matroid& n, int i);

struct SeaWitness {
  ESubset b1;
  ESubset b2;
  Element x;
};
// First (B1, B2, x) for which no y in B1 - B2 puts B1 ^ {x, x*, y, y*} back
// in the family.  The family must be sorted.
std::optional<SeaWitness> check_sea(int n, const std::vector<ESubset>& sorted_family);

class SymmetricMatroid {
 public:
  // Throws std::invalid_argument unless the family is a nonempty set of
  // transversals satisfying the symmetric exchange axiom.
  SymmetricMatroid(int n, std::vector<ESubset> bases);

  int n() const { return n_; }
  const std::vector<ESubset>& bases() const { return bases_; }
  bool is_basis(const ESubset& b) const;
  bool is_even() const;

  friend bool operator==(const SymmetricMatroid&, const SymmetricMatroid&) = default;

 private:
  int n_ = 0;
  std::vector<ESubset> bases_;
};

// Feasible sets are masks over [n]; F maps to F u ([n] - F)*.
SymmetricMatroid lift(int n, const std::vector<Mask>& feasible);
SymmetricMatroid restrict_transversal(const AntisymmetricMatroid& m);

// Minimal subtransversals lying in no basis.
std::vector<ESubset> symmetric_circuits(const SymmetricMatroid& m);

struct SymmetricCircuitReport {
  bool c1 = true;
  bool c2 = true;
  bool orth = true;
  bool add = true;
  std::string failure;
  bool ok() const { return c1 && c2 && orth && add; }
};
// Throws std::invalid_argument for a member that is not a subtransversal.
SymmetricCircuitReport check_symmetric_circuit_axioms(int n, const std::vector<ESubset>& family);

// B u B' with B' built from pairs A - x + y, A - x* + y* of bases.  Throws
// std::invalid_argument if the input is not even.
AntisymmetricMatroid antisym_extension_even(const SymmetricMatroid& s);
// Every B'' of almost-transversals making B u B'' an antisymmetric matroid,
// by exhaustive search; n <= 3.
std::vector<AntisymmetricMatroid> extend_symmetric(const SymmetricMatroid& s);

// Exhaustive families.  antisymmetric: n <= 3; symmetric: n <= 4.
std::vector<AntisymmetricMatroid> enumerate_antisymmetric(int n);
std::vector<SymmetricMatroid> enumerate_symmetric(int n);
std::vector<SymmetricMatroid> enumerate_even(int n);

// The 3-term relations split into square relations, whose skew pair lies in
// S - T, and edge relations.
bool is_square_relation(const RelationPair& r);
std::vector<RelationPair> edge_relations(int n);
std::vector<RelationPair> square_relations(int n);

struct GaussoidReport {
  bool members = true;  // all almost-transversals
  bool allowable = true;
  bool compatible = true;
  std::string failure;
  bool ok() const { return members && allowable && compatible; }
};
GaussoidReport check_gaussoid(int n, const std::vector<ESubset>& family);

class Gaussoid {
 public:
  // Throws std::invalid_argument unless check_gaussoid passes.
  Gaussoid(int n, std::vector<ESubset> members);
  int n() const { return n_; }
  const std::vector<ESubset>& members() const { return members_; }
  friend bool operator==(const Gaussoid&, const Gaussoid&) = default;

 private:
  int n_ = 0;
  std::vector<ESubset> members_;
};

// A_n minus the bases; throws std::invalid_argument unless every transversal
// is a basis.
Gaussoid gaussoid_from_antisym(const AntisymmetricMatroid& m);

// Sign relating det Sigma[X, Y] to the coordinate at [n] - X + Y* of
// [I | Sigma]; depends on X only.  Returns the exponent mod 2.
int principal_sign_exponent(int n, Mask x);

// a_{ij|K}: the minor of Sigma on rows K+i, columns K+j, i < j.
struct AlmostPrincipal {
  int i = 0;
  int j = 0;
  Mask k = 0;
  std::string to_string() const;
  friend auto operator<=>(const AlmostPrincipal&, const AlmostPrincipal&) = default;
};
AlmostPrincipal almost_principal_of(const ESubset& a);

struct OrientedGaussoidReport {
  bool principal = true;  // condition on [n] - X + X*
  bool edges = true;      // every edge relation null over the signs
  std::string failure;
  std::vector<AlmostPrincipal> negative;  // almost-principal unknowns of sign -1
  bool ok() const { return principal && edges; }
};
// phi must take values in the sign hyperfield.
OrientedGaussoidReport check_oriented_gaussoid(const RGPFunction& phi);
bool is_positive(const RGPFunction& phi);

}  // namespace lagmat

#endif  // LAGMAT_BRIDGES_HPP
