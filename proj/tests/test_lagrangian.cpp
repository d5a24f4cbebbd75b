#include "doctest.h"
#include "lagmat/bridges.hpp"
#include "lagmat/examples.hpp"
#include "lagmat/lagrangian.hpp"
#include "oracles.hpp"

#include <random>

using namespace lagmat;

namespace {

ESubset s_(int n, const char* text) { return ESubset::parse(n, text); }

const std::vector<TractId>& fields() {
  static const std::vector<TractId> f = {TractId::finite_field(2), TractId::finite_field(3), TractId::finite_field(5),
                                         TractId::rationals()};
  return f;
}

// A twist of [I | Sigma] by random pairs: every Lagrangian arises this way.
LagrangianWitness random_lagrangian(int n, TractId f, std::mt19937_64& rng) {
  const std::uint64_t pairs = rng() & ((std::uint64_t{1} << n) - 1);
  return LagrangianWitness::verify(twist(random_symmetric_embedding(n, f, rng), pairs));
}

ESubset star_of(const ESubset& s) { return s.star(); }

AntisymmetricMatroid starred(const AntisymmetricMatroid& m) {
  std::vector<ESubset> b;
  for (const ESubset& x : m.bases()) b.push_back(star_of(x));
  std::sort(b.begin(), b.end());
  return AntisymmetricMatroid(m.n(), b);
}

}  // namespace

TEST_CASE("is_lagrangian") {
  const TractId q = TractId::rationals();
  CHECK(is_lagrangian(examples::small_lagrangian()));
  CHECK(is_lagrangian(examples::identity_pair(3, q)));
  CHECK(is_lagrangian(FieldMatrix::from_ints(q, {{1, 0, 0, 0}, {0, 1, 0, 0}})));
  // [I | N] with N not symmetric.
  CHECK_FALSE(is_lagrangian(FieldMatrix::from_ints(q, {{1, 0, 0, 1}, {0, 1, 0, 0}})));
  CHECK_THROWS_AS(is_lagrangian(FieldMatrix::from_ints(q, {{1, 0, 0, 0}, {2, 0, 0, 0}})), NotLagrangian);
  CHECK_THROWS_AS(is_lagrangian(FieldMatrix::from_ints(q, {{1, 0, 0}})), NotLagrangian);
  CHECK_THROWS_AS(LagrangianWitness::verify(FieldMatrix::from_ints(q, {{1, 0, 0, 1}, {0, 1, 0, 0}})), NotLagrangian);
}

TEST_CASE("determinant against cofactor expansion") {
  std::mt19937_64 rng(11);
  for (const TractId& f : fields())
    for (int k = 1; k <= 5; ++k)
      for (int trial = 0; trial < 20; ++trial) {
        FieldMatrix m(f, k, k);
        for (int r = 0; r < k; ++r)
          for (int c = 0; c < k; ++c) m.set(r, c, TractElement::from_int(f, static_cast<long>(rng() % 7) - 3));
        CHECK(determinant(m) == oracle::cofactor_det(m));
        CHECK((rank(m) == k) == !determinant(m).is_zero());
      }
}

TEST_CASE("Pluecker coordinates of the small Lagrangian") {
  const RGPFunction phi = plucker(LagrangianWitness::verify(examples::small_lagrangian()));
  const TractId q = TractId::rationals();
  CHECK(phi(s_(2, "1,2")) == TractElement::from_int(q, 1));
  CHECK(phi(s_(2, "1,1*")) == TractElement::from_int(q, 1));
  CHECK(phi(s_(2, "1,2*")) == TractElement::from_int(q, 1));
  CHECK(phi(s_(2, "2,1*")) == TractElement::from_int(q, -1));
  CHECK(phi(s_(2, "2,2*")) == TractElement::from_int(q, -1));
  CHECK(phi(s_(2, "1*,2*")).is_zero());
}

TEST_CASE("Pluecker coordinates against maximal minors, random instances") {
  std::mt19937_64 rng(5);
  for (const TractId& f : fields())
    for (int n = 1; n <= 4; ++n)
      for (int trial = 0; trial < 8; ++trial) {
        const LagrangianWitness w = random_lagrangian(n, f, rng);
        const RGPFunction phi = plucker(w);
        for (const auto& [b, v] : oracle::maximal_minors(w.matrix())) CHECK(phi(b) == v);
        CHECK(check_sym(phi).ok);
        CHECK(check_rgp(phi, RelationMode::Full).ok);
      }
}

TEST_CASE("circuit vectors against brute-force minimal supports over GF(p)") {
  std::mt19937_64 rng(8);
  for (int p : {2, 3, 5})
    for (int n = 1; n <= 4; ++n)
      for (int trial = 0; trial < (p == 5 && n == 4 ? 3 : 8); ++trial) {
        const LagrangianWitness w = random_lagrangian(n, TractId::finite_field(p), rng);
        std::vector<FVector> got = circuit_vectors(w).vectors();
        std::sort(got.begin(), got.end());
        CHECK(got == oracle::minimal_support_vectors(w.matrix()));
      }
}

TEST_CASE("support duality") {
  std::mt19937_64 rng(9);
  CHECK(support_duality_check(LagrangianWitness::verify(examples::small_lagrangian())));
  for (const TractId& f : fields())
    for (int n = 1; n <= 4; ++n)
      for (int trial = 0; trial < 6; ++trial) CHECK(support_duality_check(random_lagrangian(n, f, rng)));
}

TEST_CASE("reconstruct") {
  const TractId q = TractId::rationals();
  const LagrangianWitness one = reconstruct(plucker(LagrangianWitness::verify(FieldMatrix::from_ints(q, {{1, 0}}))));
  CHECK(same_row_space(one.matrix(), FieldMatrix::from_ints(q, {{1, 0}})));

  std::mt19937_64 rng(10);
  for (const TractId& f : fields())
    for (int n = 1; n <= 4; ++n)
      for (int trial = 0; trial < 6; ++trial) {
        const LagrangianWitness w = random_lagrangian(n, f, rng);
        const LagrangianWitness back = reconstruct(plucker(w));
        CHECK(same_row_space(back.matrix(), w.matrix()));
      }

  CHECK_THROWS_AS(reconstruct(examples::four_term_obstruction()), std::invalid_argument);
  CHECK_THROWS_AS(reconstruct(RGPFunction(2, q)), std::invalid_argument);
}

TEST_CASE("matrix twist matches the coordinate twist") {
  std::mt19937_64 rng(12);
  for (const TractId& f : fields())
    for (int n = 1; n <= 3; ++n)
      for (int trial = 0; trial < 6; ++trial) {
        const LagrangianWitness w = random_lagrangian(n, f, rng);
        for (std::uint64_t pairs = 0; pairs < (std::uint64_t{1} << n); ++pairs) {
          const FieldMatrix t = twist(w.matrix(), pairs);
          CHECK(twist(t, pairs, true) == w.matrix());
          CHECK(twist(twist(twist(t, pairs), pairs), pairs) == w.matrix());
          CHECK(equivalent(plucker(LagrangianWitness::verify(t)), twist(plucker(w), pairs)));
        }
      }
}

TEST_CASE("subspace minors") {
  const TractId q = TractId::rationals();
  const LagrangianWitness id3 = LagrangianWitness::verify(examples::identity_pair(3, q));
  CHECK(same_row_space(subspace_minor(id3, Element(2, false)).matrix(), examples::identity_pair(2, q)));
  CHECK(subspace_minor(id3, Element(1, true)).n() == 2);
  CHECK_THROWS(subspace_minor(id3, Element(4, false)));

  // Row-space minor at i corresponds to the elementary minor at i* of the
  // matroid with bases B*, i.e. of the support of the circuit vectors.
  std::mt19937_64 rng(13);
  for (const TractId& f : fields())
    for (int n = 2; n <= 4; ++n)
      for (int trial = 0; trial < 5; ++trial) {
        const LagrangianWitness w = random_lagrangian(n, f, rng);
        const AntisymmetricMatroid dual_side = starred(underlying(plucker(w)));
        for (int i = 1; i <= n; ++i)
          for (bool s : {false, true}) {
            const Element e(i, s);
            const AntisymmetricMatroid from_space = starred(underlying(plucker(subspace_minor(w, e))));
            CHECK(from_space == elementary_minor(dual_side, e));
          }
      }
}

TEST_CASE("weak_to_strong") {
  const TractId q = TractId::rationals();
  for (long a : {-3L, 0L, 2L}) {
    RGPFunction phi(1, q);
    phi.set(s_(1, "1"), TractElement::one(q));
    phi.set(s_(1, "1*"), TractElement::from_int(q, a));
    const WeakToStrongResult r = weak_to_strong(phi);
    REQUIRE(r.witness);
    CHECK(same_row_space(r.witness->matrix(), FieldMatrix::from_ints(q, {{1, a}})));
  }

  const WeakToStrongResult four = weak_to_strong(examples::four_term_obstruction());
  CHECK_FALSE(four.witness);
  REQUIRE(four.refutation);
  REQUIRE(four.refutation->relation);
  CHECK((four.refutation->relation->s - four.refutation->relation->t).size() == 4);

  CHECK(weak_to_strong(RGPFunction(2, q)).refutation);

  std::mt19937_64 rng(14);
  for (const TractId& f : fields())
    for (int n = 1; n <= 4; ++n)
      for (int trial = 0; trial < 6; ++trial) {
        const LagrangianWitness w = random_lagrangian(n, f, rng);
        const WeakToStrongResult r = weak_to_strong(plucker(w));
        REQUIRE(r.witness);
        CHECK(same_row_space(r.witness->matrix(), w.matrix()));
      }
}

TEST_CASE("principal and almost-principal minors of [I | Sigma]") {
  // The coordinate at ([n] - X) + Y* equals (-1)^e(X) det Sigma[X, Y] whenever
  // |X ^ Y| <= 2, with e(X) from principal_sign_exponent.
  std::mt19937_64 rng(15);
  for (const TractId& f : {TractId::rationals(), TractId::finite_field(5)})
    for (int n = 1; n <= 4; ++n)
      for (int trial = 0; trial < 4; ++trial) {
        const FieldMatrix m = random_symmetric_embedding(n, f, rng);
        const RGPFunction phi = plucker(LagrangianWitness::verify(m));
        const Mask all = static_cast<Mask>((1U << n) - 1);
        for (Mask x = 0; x <= all; ++x)
          for (Mask y = 0; y <= all; ++y) {
            if (std::popcount(x) != std::popcount(y) || std::popcount(x & ~y) > 1) continue;
            std::vector<int> rows, cols;
            for (int i = 0; i < n; ++i) {
              if ((x >> i) & 1U) rows.push_back(i);
              if ((y >> i) & 1U) cols.push_back(n + i);
            }
            FieldMatrix sub(f, static_cast<int>(rows.size()), static_cast<int>(cols.size()));
            for (std::size_t r = 0; r < rows.size(); ++r)
              for (std::size_t c = 0; c < cols.size(); ++c)
                sub.set(static_cast<int>(r), static_cast<int>(c), m.at(rows[r], cols[c]));
            const ESubset b(n, static_cast<std::uint64_t>(all & ~x) | (static_cast<std::uint64_t>(y) << n));
            const TractElement det = rows.empty() ? TractElement::one(f) : oracle::cofactor_det(sub);
            const TractElement sign = principal_sign_exponent(n, x) ? -TractElement::one(f) : TractElement::one(f);
            CHECK(phi(b) == sign * det);
          }
      }
}

TEST_CASE("random_symmetric_embedding") {
  std::mt19937_64 a(21), b(21);
  for (const TractId& f : fields()) {
    const FieldMatrix x = random_symmetric_embedding(3, f, a);
    CHECK(x == random_symmetric_embedding(3, f, b));
    CHECK(is_lagrangian(x));
  }
  CHECK_THROWS(random_symmetric_embedding(2, TractId::sign(), a));
}
