// Antisymmetric matroids: basis axioms (B1), (B2), (Exch) and the
// alternative (Exch'), circuit axioms (C1), (C2), (Orth), (Max), the
// conversion between the two, fundamental circuits, elementary minors and
// basis-polytope vertices.

#ifndef LAGMAT_ANTISYM_HPP
#define LAGMAT_ANTISYM_HPP

#include <optional>
#include <string>
#include <vector>

#include "lagmat/ground.hpp"

namespace lagmat {

struct BasisAxiomReport {
  bool b1 = true;
  bool b2 = true;
  bool exch = true;
  bool exch_prime = true;
  // (B2): an almost-transversal basis A whose partner A - p + q is missing.
  std::optional<std::pair<ESubset, ESubset>> b2_witness;
  struct ExchWitness {
    ESubset b, b_prime;
    Element e;
  };
  std::optional<ExchWitness> exch_witness;
  struct ExchPrimeWitness {
    ESubset t, t_prime;
    Element e, f;
  };
  std::optional<ExchPrimeWitness> exch_prime_witness;

  bool ok() const { return b1 && b2 && exch; }
  // First failing clause among B1, B2, Exch with its witness; empty if ok.
  std::string failure() const;
};

// Throws std::invalid_argument if a member is neither a transversal nor an
// almost-transversal of +-[n].
BasisAxiomReport check_basis_axioms(int n, const std::vector<ESubset>& family);
// Early-exit form used by the enumerators: B1, B2 and Exch only.
bool satisfies_basis_axioms(int n, const std::vector<ESubset>& sorted_family);

class AntisymmetricMatroid {
 public:
  // Validates the basis axioms; throws std::invalid_argument on failure.
  AntisymmetricMatroid(int n, std::vector<ESubset> bases);

  int n() const { return n_; }
  const std::vector<ESubset>& bases() const { return bases_; }
  bool is_basis(const ESubset& b) const;
  std::vector<ESubset> transversal_bases() const;
  std::vector<ESubset> almost_transversal_bases() const;

  friend bool operator==(const AntisymmetricMatroid&, const AntisymmetricMatroid&) = default;

 private:
  int n_ = 0;
  std::vector<ESubset> bases_;
};

struct CircuitFamily {
  int n = 0;
  std::vector<ESubset> circuits;  // ascending

  static CircuitFamily make(int n, std::vector<ESubset> circuits);
  CircuitFamily star() const;
  friend bool operator==(const CircuitFamily&, const CircuitFamily&) = default;
};

struct CircuitAxiomReport {
  bool c1 = true;
  bool c2 = true;
  bool orth = true;
  bool max = true;
  // Evaluated only when the four clauses above pass.
  bool max_prime = true;
  bool add = true;
  std::string failure;  // first failing clause with witness

  bool ok() const { return c1 && c2 && orth && max; }
};

// Throws std::invalid_argument for a member with two or more skew pairs.
CircuitAxiomReport check_circuit_axioms(const CircuitFamily& family);

CircuitFamily circuits_from_bases(const AntisymmetricMatroid& m);
AntisymmetricMatroid bases_from_circuits(const CircuitFamily& c);

// {x in B+e : B+e-x is a basis}.
ESubset fundamental_circuit(const AntisymmetricMatroid& m, const ESubset& b, Element e);

// M|i on +-[n] - {i, i*}, relabelled to +-[n-1].  Computed by the basis
// rule and by the circuit rule; disagreement throws std::logic_error.
AntisymmetricMatroid elementary_minor(const AntisymmetricMatroid& m, Element i);

// e_B for the transversal bases, with e_{i*} = -e_i.
std::vector<std::vector<int>> polytope_vertices(const AntisymmetricMatroid& m);

struct TrichotomyReport {
  // {T+p-q, T-p+q}, {T, T^(p+q)}, {T^p, T^q}
  bool present[3] = {false, false, false};
  int count = 0;
};
TrichotomyReport three_term_trichotomy(const AntisymmetricMatroid& m, const ESubset& t, int p, int q);

}  // namespace lagmat

#endif  // LAGMAT_ANTISYM_HPP
