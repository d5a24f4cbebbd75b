// Exact linear algebra over GF(p) and Q for Lagrangian subspaces of the
// standard symplectic space: Pluecker coordinates, circuit vectors,
// reconstruction from coordinates, twisting, minors, and the passage from
// functions satisfying only the short relations to a representing matrix.

#ifndef LAGMAT_LAGRANGIAN_HPP
#define LAGMAT_LAGRANGIAN_HPP

#include <cstdint>
#include <optional>
#include <random>
#include <string>
#include <vector>

#include "lagmat/tract_antisym.hpp"
#include "lagmat/tracts.hpp"

namespace lagmat {

class FieldMatrix {
 public:
  FieldMatrix() = default;
  // Zero matrix; the field must be GF(p) or Q.
  FieldMatrix(TractId field, int rows, int cols);
  static FieldMatrix from_ints(TractId field, const std::vector<std::vector<long>>& rows);

  TractId field() const { return field_; }
  int rows() const { return rows_; }
  int cols() const { return cols_; }
  const TractElement& at(int r, int c) const { return entries_[index(r, c)]; }
  void set(int r, int c, const TractElement& v);
  std::vector<TractElement> row(int r) const;
  // Submatrix made of the listed columns, in the listed order.
  FieldMatrix columns(const std::vector<int>& cols) const;
  FieldMatrix transposed() const;
  std::string to_string() const;

  friend bool operator==(const FieldMatrix&, const FieldMatrix&) = default;

 private:
  std::size_t index(int r, int c) const;
  TractId field_;
  int rows_ = 0;
  int cols_ = 0;
  std::vector<TractElement> entries_;
};

// Bareiss over Q, plain elimination over GF(p).
TractElement determinant(const FieldMatrix& m);
int rank(const FieldMatrix& m);
// Reduced row echelon form with zero rows removed.
FieldMatrix row_reduce(const FieldMatrix& m);
bool same_row_space(const FieldMatrix& a, const FieldMatrix& b);
// Basis of {c : c^T m = 0}, one vector per row of the result.
FieldMatrix left_kernel(const FieldMatrix& m);
FieldMatrix multiply(const FieldMatrix& a, const FieldMatrix& b);

class NotLagrangian : public std::invalid_argument {
 public:
  using std::invalid_argument::invalid_argument;
};

// n x 2n, columns 1..n then 1*..n*.  Throws NotLagrangian for a wrong shape
// or a rank below n; otherwise compares both isotropy criteria.
bool is_lagrangian(const FieldMatrix& m);

class LagrangianWitness {
 public:
  // Throws NotLagrangian unless the row space is Lagrangian.
  static LagrangianWitness verify(FieldMatrix m);
  const FieldMatrix& matrix() const { return m_; }
  int n() const { return m_.rows(); }
  TractId field() const { return m_.field(); }

 private:
  explicit LagrangianWitness(FieldMatrix m) : m_(std::move(m)) {}
  FieldMatrix m_;
};

RGPFunction plucker(const LagrangianWitness& w);
FCircuitSet circuit_vectors(const LagrangianWitness& w);
bool support_duality_check(const LagrangianWitness& w);
// Rows X_i for i in the least transversal basis T; throws
// std::invalid_argument unless x satisfies (Sym) and every relation.
LagrangianWitness reconstruct(const RGPFunction& x);

// Psi_S on row vectors: w(i*) = v(i), w(i) = -v(i*) for i in S (a mask over
// [n]); `inverse` applies Psi_S^{-1}.
FieldMatrix twist(const FieldMatrix& m, std::uint64_t pairs, bool inverse = false);

// Row space intersected with {X : X(i*) = 0}, coordinates i and i* dropped.
LagrangianWitness subspace_minor(const LagrangianWitness& w, Element i);

struct Refutation {
  std::string reason;
  std::optional<RelationViolation> relation;
};

struct WeakToStrongResult {
  std::optional<LagrangianWitness> witness;
  std::optional<Refutation> refutation;
};
// Checks the support axioms, (Sym) and the relations with at most four
// terms; on success builds [I | Sigma] for the twist making [n] a basis and
// twists back.  A result whose coordinates disagree with phi throws
// std::logic_error.
WeakToStrongResult weak_to_strong(const RGPFunction& phi);

// [I | Sigma] with Sigma symmetric and uniform entries; over Q the numerators
// lie in [-4, 4] and the denominators in [1, 4].
FieldMatrix random_symmetric_embedding(int n, TractId field, std::mt19937_64& rng);

}  // namespace lagmat

#endif  // LAGMAT_LAGRANGIAN_HPP
