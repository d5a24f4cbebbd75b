// Restricted Grassmann-Pluecker functions and antisymmetric F-circuit sets
// over a tract, with the constructions turning one into the other.

#ifndef LAGMAT_TRACT_ANTISYM_HPP
#define LAGMAT_TRACT_ANTISYM_HPP

#include <optional>
#include <string>
#include <utility>
#include <vector>

#include "lagmat/antisym.hpp"
#include "lagmat/ground.hpp"
#include "lagmat/matroids.hpp"
#include "lagmat/tracts.hpp"

namespace lagmat {

// A map T_n u A_n -> F.  Holding one says nothing about the relations; use
// check_sym and check_rgp.
class RGPFunction {
 public:
  RGPFunction() = default;
  RGPFunction(int n, TractId tract);

  int n() const { return n_; }
  TractId tract() const { return tract_; }
  // Throws std::invalid_argument for sets outside T_n u A_n.
  const TractElement& operator()(const ESubset& b) const;
  void set(const ESubset& b, const TractElement& value);
  const std::vector<ESubset>& domain() const { return domain_; }
  const std::vector<TractElement>& values() const { return values_; }
  std::vector<ESubset> support() const;
  bool trivial() const;
  std::string to_string() const;

  friend bool operator==(const RGPFunction&, const RGPFunction&) = default;

 private:
  std::size_t index(const ESubset& b) const;

  int n_ = 0;
  TractId tract_;
  std::vector<ESubset> domain_;
  std::vector<TractElement> values_;
};

enum class RelationMode {
  Full,       // every (S, T)
  Weak,       // |S - T| <= 4
  ThreeTerm,  // |S - T| <= 3
};
int max_terms(RelationMode mode);
const char* to_string(RelationMode mode);

struct RelationViolation {
  ESubset s;
  ESubset t;
  FormalSum sum;
};

struct RelationReport {
  bool ok = true;
  std::size_t checked = 0;
  std::vector<RelationViolation> violations;
};

// The signed sum over x in S - T of phi(S - x) phi(T + x).
FormalSum relation_sum(const RGPFunction& phi, const ESubset& s, const ESubset& t);
// Throws std::invalid_argument for the zero map.
RelationReport check_rgp(const RGPFunction& phi, RelationMode mode);

struct SymReport {
  bool ok = true;
  std::optional<std::pair<ESubset, ESubset>> witness;
};
SymReport check_sym(const RGPFunction& phi);

// Support of phi.  Throws if it is not an antisymmetric matroid.
AntisymmetricMatroid underlying(const RGPFunction& phi);
RGPFunction pushforward(const RGPFunction& phi, const TractMorphism& m);
bool equivalent(const RGPFunction& a, const RGPFunction& b);
// Image under the signed swap of the pairs in `pairs` (a mask over [n]):
// coordinates move by swapping i and i* for those i, with the sign picked up
// by the corresponding column operation on a representing matrix.
RGPFunction twist(const RGPFunction& phi, std::uint64_t pairs);
// Sign exponent of the twist at a single coordinate.
int twist_exponent(const ESubset& b, std::uint64_t pairs);
ESubset twist_set(const ESubset& b, std::uint64_t pairs);

// Vectors in F^E are indexed by bit position (1..n, then 1*..n*).
using FVector = std::vector<TractElement>;
ESubset support(int n, const FVector& x);
// Scales so the first nonzero coordinate is 1.
FVector normalized(const FVector& x);
// sum_i X(i)Y(i*) + eps X(i*)Y(i).
FormalSum symplectic_pairing(TractId t, int n, const FVector& x, const FVector& y);

// One representative per projective class, first nonzero coordinate 1,
// kept sorted; the unit multiples are implicit.
class FCircuitSet {
 public:
  FCircuitSet() = default;
  FCircuitSet(int n, TractId tract);

  int n() const { return n_; }
  TractId tract() const { return tract_; }
  // Normalizes and inserts; throws for the zero vector or wrong length.
  void add(const FVector& x);
  const std::vector<FVector>& vectors() const { return vectors_; }
  std::vector<ESubset> supports() const;
  // The representative whose support lies inside s, if any.
  const FVector* covering(const ESubset& s) const;
  FCircuitSet star() const;

  friend bool operator==(const FCircuitSet&, const FCircuitSet&) = default;

 private:
  int n_ = 0;
  TractId tract_;
  std::vector<FVector> vectors_;
};

struct FCircuitReport {
  bool prepared = true;
  bool orth = true;
  bool max = true;
  std::string failure;
  bool ok() const { return prepared && orth && max; }
};
FCircuitReport check_fcircuit_set(const FCircuitSet& c);

FCircuitSet circuit_set_from_rgp(const RGPFunction& phi);
TractElement gamma(const FCircuitSet& c, const ESubset& b1, const ESubset& b2);

// Bases of the underlying matroid in ascending order with the edges of the
// basis graph (|B - B'| = 1, at least one a transversal).
struct BasisGraphView {
  std::vector<ESubset> vertices;
  std::vector<std::vector<int>> neighbours;  // ascending
};
BasisGraphView basis_graph_view(const AntisymmetricMatroid& m);

// Product of gamma along a vertex path in the basis graph.
TractElement path_product(const FCircuitSet& c, const std::vector<ESubset>& path);

class PathInconsistency : public std::logic_error {
 public:
  using std::logic_error::logic_error;
};
RGPFunction rgp_from_circuit_set(const FCircuitSet& c);

// phi(B) = psi(B & [n]) psi_dual(B* & [n]) when |B & [n]| = r.
RGPFunction antisym_from_gp(const GPFunction& psi);

}  // namespace lagmat

#endif  // LAGMAT_TRACT_ANTISYM_HPP
