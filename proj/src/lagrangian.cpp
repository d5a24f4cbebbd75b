#include "lagmat/lagrangian.hpp"

#include <algorithm>
#include <stdexcept>

namespace lagmat {

namespace {

void require_field(TractId t) {
  if (!t.is_field()) throw std::invalid_argument("matrices live over GF(p) or Q, not " + t.tag());
}

std::string set_text(const ESubset& s) { return "{" + s.to_string() + "}"; }

std::vector<int> column_indices(const ESubset& b) {
  std::vector<int> cols;
  for (const Element& x : b.elements()) cols.push_back(x.bit(b.n()));
  return cols;
}

mpq_class bareiss(std::vector<std::vector<mpq_class>> a) {
  const std::size_t n = a.size();
  mpq_class prev = 1;
  int sign = 1;
  for (std::size_t k = 0; k < n; ++k) {
    if (a[k][k] == 0) {
      std::size_t r = k + 1;
      while (r < n && a[r][k] == 0) ++r;
      if (r == n) return 0;
      std::swap(a[k], a[r]);
      sign = -sign;
    }
    for (std::size_t i = k + 1; i < n; ++i) {
      for (std::size_t j = k + 1; j < n; ++j) a[i][j] = (a[i][j] * a[k][k] - a[i][k] * a[k][j]) / prev;
      a[i][k] = 0;
    }
    prev = a[k][k];
  }
  return n == 0 ? mpq_class(1) : mpq_class(sign * a[n - 1][n - 1]);
}

std::int64_t modular_determinant(std::vector<std::vector<std::int64_t>> a, std::int64_t p) {
  const std::size_t n = a.size();
  std::int64_t det = 1;
  auto inverse = [p](std::int64_t x) {
    std::int64_t r = 1, e = p - 2;
    while (e > 0) {
      if (e & 1) r = r * x % p;
      x = x * x % p;
      e >>= 1;
    }
    return r;
  };
  for (std::size_t k = 0; k < n; ++k) {
    std::size_t r = k;
    while (r < n && a[r][k] == 0) ++r;
    if (r == n) return 0;
    if (r != k) {
      std::swap(a[k], a[r]);
      det = (p - det) % p;
    }
    det = det * a[k][k] % p;
    std::int64_t inv = inverse(a[k][k]);
    for (std::size_t i = k + 1; i < n; ++i) {
      std::int64_t factor = a[i][k] * inv % p;
      if (factor == 0) continue;
      for (std::size_t j = k; j < n; ++j) a[i][j] = ((a[i][j] - factor * a[k][j]) % p + p) % p;
    }
  }
  return det;
}

}  // namespace

FieldMatrix::FieldMatrix(TractId field, int rows, int cols)
    : field_(field), rows_(rows), cols_(cols),
      entries_(static_cast<std::size_t>(rows) * static_cast<std::size_t>(cols), TractElement::zero(field)) {
  require_field(field);
  if (rows < 0 || cols < 0) throw std::invalid_argument("negative matrix shape");
}

FieldMatrix FieldMatrix::from_ints(TractId field, const std::vector<std::vector<long>>& rows) {
  const int r = static_cast<int>(rows.size());
  const int c = r == 0 ? 0 : static_cast<int>(rows.front().size());
  FieldMatrix m(field, r, c);
  for (int i = 0; i < r; ++i) {
    if (static_cast<int>(rows[static_cast<std::size_t>(i)].size()) != c) throw std::invalid_argument("ragged matrix");
    for (int j = 0; j < c; ++j)
      m.set(i, j, TractElement::from_int(field, rows[static_cast<std::size_t>(i)][static_cast<std::size_t>(j)]));
  }
  return m;
}

std::size_t FieldMatrix::index(int r, int c) const {
  if (r < 0 || r >= rows_ || c < 0 || c >= cols_) throw std::out_of_range("matrix index out of range");
  return static_cast<std::size_t>(r) * static_cast<std::size_t>(cols_) + static_cast<std::size_t>(c);
}

void FieldMatrix::set(int r, int c, const TractElement& v) {
  if (!(v.tract() == field_)) throw TractMismatch("entry from " + v.tract().tag() + " in a " + field_.tag() + " matrix");
  entries_[index(r, c)] = v;
}

std::vector<TractElement> FieldMatrix::row(int r) const {
  std::vector<TractElement> out;
  for (int c = 0; c < cols_; ++c) out.push_back(at(r, c));
  return out;
}

FieldMatrix FieldMatrix::columns(const std::vector<int>& cols) const {
  FieldMatrix out(field_, rows_, static_cast<int>(cols.size()));
  for (int r = 0; r < rows_; ++r)
    for (std::size_t k = 0; k < cols.size(); ++k) out.set(r, static_cast<int>(k), at(r, cols[k]));
  return out;
}

FieldMatrix FieldMatrix::transposed() const {
  FieldMatrix out(field_, cols_, rows_);
  for (int r = 0; r < rows_; ++r)
    for (int c = 0; c < cols_; ++c) out.set(c, r, at(r, c));
  return out;
}

std::string FieldMatrix::to_string() const {
  std::string out = "[";
  for (int r = 0; r < rows_; ++r) {
    out += r ? "; " : "";
    for (int c = 0; c < cols_; ++c) out += (c ? " " : "") + at(r, c).to_string();
  }
  return out + "]";
}

TractElement determinant(const FieldMatrix& m) {
  if (m.rows() != m.cols()) throw std::invalid_argument("determinant of a non-square matrix");
  const auto n = static_cast<std::size_t>(m.rows());
  if (m.field().kind() == TractKind::Rationals) {
    std::vector<std::vector<mpq_class>> a(n, std::vector<mpq_class>(n));
    for (std::size_t i = 0; i < n; ++i)
      for (std::size_t j = 0; j < n; ++j) {
        const TractElement& v = m.at(static_cast<int>(i), static_cast<int>(j));
        a[i][j] = v.is_zero() ? mpq_class(0) : v.rational();
      }
    return TractElement::from_rational(m.field(), bareiss(std::move(a)));
  }
  std::vector<std::vector<std::int64_t>> a(n, std::vector<std::int64_t>(n));
  for (std::size_t i = 0; i < n; ++i)
    for (std::size_t j = 0; j < n; ++j) {
      const TractElement& v = m.at(static_cast<int>(i), static_cast<int>(j));
      a[i][j] = v.is_zero() ? 0 : v.small();
    }
  return TractElement::from_int(m.field(), static_cast<long>(modular_determinant(std::move(a), m.field().characteristic())));
}

FieldMatrix row_reduce(const FieldMatrix& m) {
  FieldMatrix a = m;
  int lead = 0;
  for (int c = 0; c < a.cols() && lead < a.rows(); ++c) {
    int r = lead;
    while (r < a.rows() && a.at(r, c).is_zero()) ++r;
    if (r == a.rows()) continue;
    if (r != lead)
      for (int j = 0; j < a.cols(); ++j) {
        TractElement tmp = a.at(r, j);
        a.set(r, j, a.at(lead, j));
        a.set(lead, j, tmp);
      }
    const TractElement inv = a.at(lead, c).inverse();
    for (int j = 0; j < a.cols(); ++j) a.set(lead, j, a.at(lead, j) * inv);
    for (int i = 0; i < a.rows(); ++i) {
      if (i == lead || a.at(i, c).is_zero()) continue;
      const TractElement factor = a.at(i, c);
      for (int j = 0; j < a.cols(); ++j) a.set(i, j, a.at(i, j) - factor * a.at(lead, j));
    }
    ++lead;
  }
  FieldMatrix out(m.field(), lead, m.cols());
  for (int i = 0; i < lead; ++i)
    for (int j = 0; j < m.cols(); ++j) out.set(i, j, a.at(i, j));
  return out;
}

int rank(const FieldMatrix& m) { return row_reduce(m).rows(); }

bool same_row_space(const FieldMatrix& a, const FieldMatrix& b) {
  if (!(a.field() == b.field()) || a.cols() != b.cols()) return false;
  return row_reduce(a) == row_reduce(b);
}

FieldMatrix left_kernel(const FieldMatrix& m) {
  // c^T m = 0  <=>  m^T c = 0; read the kernel off the echelon form of m^T.
  const FieldMatrix e = row_reduce(m.transposed());
  const int vars = m.rows();
  std::vector<int> pivot_of_row;
  std::vector<bool> is_pivot(static_cast<std::size_t>(vars), false);
  for (int r = 0; r < e.rows(); ++r) {
    int c = 0;
    while (e.at(r, c).is_zero()) ++c;
    pivot_of_row.push_back(c);
    is_pivot[static_cast<std::size_t>(c)] = true;
  }
  std::vector<std::vector<TractElement>> basis;
  for (int f = 0; f < vars; ++f) {
    if (is_pivot[static_cast<std::size_t>(f)]) continue;
    std::vector<TractElement> v(static_cast<std::size_t>(vars), TractElement::zero(m.field()));
    v[static_cast<std::size_t>(f)] = TractElement::one(m.field());
    for (int r = 0; r < e.rows(); ++r) v[static_cast<std::size_t>(pivot_of_row[static_cast<std::size_t>(r)])] = -e.at(r, f);
    basis.push_back(std::move(v));
  }
  FieldMatrix out(m.field(), static_cast<int>(basis.size()), vars);
  for (std::size_t k = 0; k < basis.size(); ++k)
    for (int j = 0; j < vars; ++j) out.set(static_cast<int>(k), j, basis[k][static_cast<std::size_t>(j)]);
  return out;
}

FieldMatrix multiply(const FieldMatrix& a, const FieldMatrix& b) {
  if (a.cols() != b.rows() || !(a.field() == b.field())) throw std::invalid_argument("matrix shapes do not match");
  FieldMatrix out(a.field(), a.rows(), b.cols());
  for (int i = 0; i < a.rows(); ++i)
    for (int j = 0; j < b.cols(); ++j) {
      TractElement acc = TractElement::zero(a.field());
      for (int k = 0; k < a.cols(); ++k) acc = acc + a.at(i, k) * b.at(k, j);
      out.set(i, j, acc);
    }
  return out;
}

bool is_lagrangian(const FieldMatrix& m) {
  const int n = m.rows();
  if (m.cols() != 2 * n) throw NotLagrangian("expected an n x 2n matrix");
  if (rank(m) != n) throw NotLagrangian("matrix has rank below n");
  std::vector<int> left, right;
  for (int i = 0; i < n; ++i) {
    left.push_back(i);
    right.push_back(n + i);
  }
  const FieldMatrix product = multiply(m.columns(left), m.columns(right).transposed());
  bool symmetric = true;
  for (int i = 0; i < n; ++i)
    for (int j = i + 1; j < n; ++j)
      if (!(product.at(i, j) == product.at(j, i))) symmetric = false;
  bool isotropic = true;
  for (int a = 0; a < n; ++a)
    for (int b = a + 1; b < n; ++b) {
      TractElement w = TractElement::zero(m.field());
      for (int i = 0; i < n; ++i) w = w + m.at(a, i) * m.at(b, n + i) - m.at(a, n + i) * m.at(b, i);
      if (!w.is_zero()) isotropic = false;
    }
  if (symmetric != isotropic) throw std::logic_error("isotropy criteria disagree");
  return symmetric;
}

LagrangianWitness LagrangianWitness::verify(FieldMatrix m) {
  if (!is_lagrangian(m)) throw NotLagrangian("row space is not isotropic: " + m.to_string());
  return LagrangianWitness(std::move(m));
}

RGPFunction plucker(const LagrangianWitness& w) {
  RGPFunction out(w.n(), w.field());
  for (const ESubset& b : out.domain()) out.set(b, determinant(w.matrix().columns(column_indices(b))));
  return out;
}

FCircuitSet circuit_vectors(const LagrangianWitness& w) {
  const int n = w.n();
  const FieldMatrix& m = w.matrix();
  FCircuitSet out(n, w.field());
  const std::uint64_t all = ground_set(n).bits();
  // A set D is a minimal support exactly when the vectors supported in D
  // form a line spanned by a vector with support D.
  for (std::uint64_t bits = 1; bits <= all; ++bits) {
    const ESubset d(n, bits);
    if (d.skew_pair_count() > 1 || d.size() > n + 1) continue;
    std::vector<int> outside;
    for (int c = 0; c < 2 * n; ++c)
      if (!((bits >> c) & 1U)) outside.push_back(c);
    const FieldMatrix kernel = left_kernel(m.columns(outside));
    if (kernel.rows() != 1) continue;
    FVector v(static_cast<std::size_t>(2 * n), TractElement::zero(w.field()));
    for (int c = 0; c < 2 * n; ++c)
      for (int r = 0; r < n; ++r) v[static_cast<std::size_t>(c)] = v[static_cast<std::size_t>(c)] + kernel.at(0, r) * m.at(r, c);
    if (support(n, v) == d) out.add(v);
  }
  return out;
}

bool support_duality_check(const LagrangianWitness& w) {
  const FCircuitSet c = circuit_vectors(w);
  const AntisymmetricMatroid from_circuits = bases_from_circuits(CircuitFamily::make(w.n(), c.supports()));
  std::vector<ESubset> starred;
  for (const ESubset& b : plucker(w).support()) starred.push_back(b.star());
  std::sort(starred.begin(), starred.end());
  const AntisymmetricMatroid from_minors = underlying(plucker(w));
  return from_circuits.bases() == starred &&
         circuits_from_bases(from_minors).star() == CircuitFamily::make(w.n(), c.supports());
}

namespace {

FieldMatrix rows_from_transversal(const RGPFunction& x, const ESubset& t) {
  const int n = x.n();
  const TractId f = x.tract();
  const TractElement inv_t = x(t).inverse();
  FieldMatrix m(f, n, 2 * n);
  int row = 0;
  for (const Element& i : t.elements()) {
    const ESubset rest = t.without(i);
    const ESubset cols = t.star().with(i);
    for (const Element& j : cols.elements()) {
      int exponent = t.smaller_count(i) + rest.smaller_count(j);
      m.set(row, j.bit(n), epsilon_power(f, exponent) * x(rest.with(j)) * inv_t);
    }
    ++row;
  }
  return m;
}

std::optional<ESubset> least_transversal_basis(const RGPFunction& x) {
  for (const ESubset& b : x.domain())
    if (b.classify() == SetKind::Transversal && !x(b).is_zero()) return b;
  return std::nullopt;
}

}  // namespace

LagrangianWitness reconstruct(const RGPFunction& x) {
  require_field(x.tract());
  if (x.trivial()) throw std::invalid_argument("identically zero coordinates");
  if (!check_sym(x).ok) throw std::invalid_argument("coordinates violate (Sym)");
  RelationReport rel = check_rgp(x, RelationMode::Full);
  if (!rel.ok)
    throw std::invalid_argument("coordinates violate the relation at S=" + set_text(rel.violations.front().s) +
                                ", T=" + set_text(rel.violations.front().t));
  std::optional<ESubset> t = least_transversal_basis(x);
  if (!t) throw std::logic_error("no transversal with a nonzero coordinate");
  LagrangianWitness w = LagrangianWitness::verify(rows_from_transversal(x, *t));
  if (!equivalent(plucker(w), x)) throw std::logic_error("reconstructed matrix does not reproduce the coordinates");
  return w;
}

FieldMatrix twist(const FieldMatrix& m, std::uint64_t pairs, bool inverse) {
  const int n = m.rows();
  if (m.cols() != 2 * n) throw std::invalid_argument("expected an n x 2n matrix");
  FieldMatrix out = m;
  for (int i = 0; i < n; ++i) {
    if (!((pairs >> i) & 1U)) continue;
    for (int r = 0; r < n; ++r) {
      const TractElement v_lo = m.at(r, i);
      const TractElement v_hi = m.at(r, n + i);
      if (!inverse) {
        out.set(r, n + i, v_lo);
        out.set(r, i, -v_hi);
      } else {
        out.set(r, i, v_hi);
        out.set(r, n + i, -v_lo);
      }
    }
  }
  return out;
}

LagrangianWitness subspace_minor(const LagrangianWitness& w, Element i) {
  const int n = w.n();
  if (i.index() > n) throw std::invalid_argument("element outside ground set");
  const FieldMatrix& m = w.matrix();
  const FieldMatrix coeffs = left_kernel(m.columns({i.star().bit(n)}));
  const FieldMatrix sub = multiply(coeffs, m);
  std::vector<int> keep;
  for (int c = 0; c < 2 * n; ++c)
    if (c != i.bit(n) && c != i.star().bit(n)) keep.push_back(c);
  FieldMatrix reduced = row_reduce(sub.columns(keep));
  if (reduced.rows() != n - 1) throw std::logic_error("minor has the wrong dimension");
  return LagrangianWitness::verify(std::move(reduced));
}

WeakToStrongResult weak_to_strong(const RGPFunction& phi) {
  require_field(phi.tract());
  WeakToStrongResult result;
  if (phi.trivial()) {
    result.refutation = Refutation{"identically zero", std::nullopt};
    return result;
  }
  BasisAxiomReport axioms = check_basis_axioms(phi.n(), phi.support());
  if (!axioms.ok()) {
    result.refutation = Refutation{"support is not an antisymmetric matroid: " + axioms.failure(), std::nullopt};
    return result;
  }
  SymReport sym = check_sym(phi);
  if (!sym.ok) {
    result.refutation = Refutation{"(Sym) fails at " + set_text(sym.witness->first), std::nullopt};
    return result;
  }
  RelationReport rel = check_rgp(phi, RelationMode::Weak);
  if (!rel.ok) {
    const RelationViolation& v = rel.violations.front();
    result.refutation = Refutation{"relation with " + std::to_string((v.s - v.t).size()) + " terms fails at S=" +
                                       set_text(v.s) + ", T=" + set_text(v.t) + ": " + v.sum.to_string(),
                                   v};
    return result;
  }

  const int n = phi.n();
  const TractId f = phi.tract();
  std::optional<ESubset> t0 = least_transversal_basis(phi);
  if (!t0) throw std::logic_error("antisymmetric matroid without a transversal basis");
  const std::uint64_t pairs = t0->high();
  const RGPFunction twisted = twist(phi, pairs);
  const ESubset base = unstarred(n);
  const TractElement inv0 = twisted(base).inverse();

  FieldMatrix lam(f, n, 2 * n);
  for (int i = 1; i <= n; ++i) {
    lam.set(i - 1, i - 1, TractElement::one(f));
    for (int j = 1; j <= n; ++j) {
      const ESubset b = base.without(Element(i, false)).with(Element(j, true));
      lam.set(i - 1, n + j - 1, epsilon_power(f, n - i) * twisted(b) * inv0);
    }
  }
  for (int i = 0; i < n; ++i)
    for (int j = 0; j < n; ++j)
      if (!(lam.at(i, n + j) == lam.at(j, n + i))) throw std::logic_error("Sigma is not symmetric");

  LagrangianWitness w = LagrangianWitness::verify(twist(lam, pairs, /*inverse=*/true));
  const RGPFunction back = plucker(w);
  if (!equivalent(back, phi)) {
    for (const ESubset& b : phi.domain())
      if (back(b).is_zero() != phi(b).is_zero())
        throw std::logic_error("minor " + set_text(b) + " disagrees in support with the input");
    throw std::logic_error("recovered matrix is not unit-equivalent to the input");
  }
  result.witness = std::move(w);
  return result;
}

FieldMatrix random_symmetric_embedding(int n, TractId field, std::mt19937_64& rng) {
  require_field(field);
  FieldMatrix m(field, n, 2 * n);
  auto draw = [&]() {
    if (field.kind() == TractKind::FiniteField) {
      std::uniform_int_distribution<long> d(0, field.characteristic() - 1);
      return TractElement::from_int(field, d(rng));
    }
    std::uniform_int_distribution<long> num(-4, 4);
    std::uniform_int_distribution<long> den(1, 4);
    long a = num(rng);
    long b = den(rng);
    return TractElement::from_rational(field, mpq_class(a, b));
  };
  for (int i = 0; i < n; ++i) {
    m.set(i, i, TractElement::one(field));
    for (int j = i; j < n; ++j) {
      TractElement v = draw();
      m.set(i, n + j, v);
      m.set(j, n + i, v);
    }
  }
  return m;
}

}  // namespace lagmat
