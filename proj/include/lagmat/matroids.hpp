// Ordinary matroids on [n] stored by explicit basis lists, plus
// Grassmann-Pluecker functions over tracts.  Subsets of [n] are bitmasks
// with bit i-1 for element i.

#ifndef LAGMAT_MATROIDS_HPP
#define LAGMAT_MATROIDS_HPP

#include <cstdint>
#include <optional>
#include <string>
#include <vector>

#include "lagmat/tracts.hpp"

namespace lagmat {

using Mask = std::uint32_t;

inline constexpr int kMaxMatroidGround = 20;

std::string mask_to_string(Mask m);
Mask parse_mask(int n, const std::string& text);
// Ascending list of the r-subsets of [n].
std::vector<Mask> subsets_of_size(int n, int r);

struct ExchangeWitness {
  Mask b = 0;
  Mask b_prime = 0;
  int e = 0;
};

struct ExchangeReport {
  bool ok = false;
  std::optional<ExchangeWitness> witness;
};

// Strong basis exchange; an empty family fails without a witness.
ExchangeReport check_basis_exchange(int n, const std::vector<Mask>& family);

class Matroid {
 public:
  // Throws std::invalid_argument unless the family is a basis system.
  Matroid(int n, std::vector<Mask> bases);
  static Matroid uniform(int r, int n);

  int n() const { return n_; }
  int rank() const { return rank_; }
  const std::vector<Mask>& bases() const { return bases_; }
  bool is_basis(Mask b) const;
  bool is_independent(Mask s) const;

  friend bool operator==(const Matroid&, const Matroid&) = default;

 private:
  int n_ = 0;
  int rank_ = 0;
  std::vector<Mask> bases_;
};

std::vector<Mask> circuits(const Matroid& m);
Matroid dual(const Matroid& m);
std::vector<Mask> cocircuits(const Matroid& m);
// Contraction and deletion of element i; the result lives on [n-1] with
// larger elements shifted down.
Matroid contract(const Matroid& m, int i);
Matroid delete_element(const Matroid& m, int i);
// Removes bit i-1 and shifts higher bits down.
Mask squeeze_mask(Mask s, int i);

struct MintyReport {
  bool ok = false;
  std::string failure;
};
MintyReport check_minty(const std::vector<Mask>& c, const std::vector<Mask>& d, int n);

// Every matroid on [n] (all ranks), found by filtering set families through
// basis exchange.  n <= 5.
std::vector<Matroid> all_matroids(int n);

// Sign of the permutation listing B ascending and then [n] - B ascending.
int permutation_sign(int n, Mask b);

class GPFunction {
 public:
  GPFunction(TractId tract, int n, int r);
  TractId tract() const { return tract_; }
  int n() const { return n_; }
  int rank() const { return r_; }
  const TractElement& operator()(Mask b) const;
  void set(Mask b, const TractElement& value);
  const std::vector<Mask>& domain() const { return domain_; }
  std::vector<Mask> support() const;

 private:
  TractId tract_;
  int n_;
  int r_;
  std::vector<Mask> domain_;
  std::vector<TractElement> values_;
};

// Grassmann-Pluecker relations over all (S, T) with |S| = r+1, |T| = r-1.
bool check_gp(const GPFunction& psi);
GPFunction gp_dual(const GPFunction& psi);

}  // namespace lagmat

#endif  // LAGMAT_MATROIDS_HPP
