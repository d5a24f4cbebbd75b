#include "doctest.h"
#include "lagmat/bridges.hpp"
#include "lagmat/examples.hpp"
#include "lagmat/lagrangian.hpp"
#include "oracles.hpp"

#include <random>

using namespace lagmat;

namespace {

std::vector<ESubset> sets(int n, std::initializer_list<const char*> texts) {
  std::vector<ESubset> out;
  for (const char* t : texts) out.push_back(ESubset::parse(n, t));
  std::sort(out.begin(), out.end());
  return out;
}

AntisymmetricMatroid matroid_of(const FieldMatrix& m) { return underlying(plucker(LagrangianWitness::verify(m))); }

// All almost-transversal families B'' making B u B'' a matroid, found here
// without the library search.
std::vector<std::vector<ESubset>> completions(const SymmetricMatroid& s) {
  const int n = s.n();
  const std::vector<ESubset> a = enumerate(n, SetKind::AlmostTransversal);
  std::vector<std::vector<ESubset>> out;
  for (std::uint64_t pick = 0; pick < (std::uint64_t{1} << a.size()); ++pick) {
    std::vector<ESubset> fam = s.bases();
    for (std::size_t j = 0; j < a.size(); ++j)
      if ((pick >> j) & 1U) fam.push_back(a[j]);
    std::sort(fam.begin(), fam.end());
    if (check_basis_axioms(n, fam).ok()) out.push_back(fam);
  }
  return out;
}

}  // namespace

TEST_CASE("ant of ordinary matroids") {
  CHECK(ant_circuits(Matroid::uniform(2, 3)).circuits == sets(3, {"1,2,3", "1*,2*", "1*,3*", "2*,3*"}));
  CHECK(ant_circuits(Matroid::uniform(3, 4)).circuits ==
        sets(4, {"1,2,3,4", "1*,2*", "1*,3*", "1*,4*", "2*,3*", "2*,4*", "3*,4*"}));
  CHECK(ant_circuits(Matroid::uniform(0, 1)).circuits == sets(1, {"1"}));
  for (int n = 1; n <= 4; ++n)
    for (const Matroid& x : all_matroids(n)) {
      const CircuitFamily c = ant_circuits(x);
      CHECK(check_circuit_axioms(c).ok());
      CHECK(ant_of_matroid(x) == bases_from_circuits(c));
      // Transversal bases are B u ([n] - B)* for the bases B of x.
      CHECK(ant_of_matroid(x).transversal_bases().size() == x.bases().size());
    }
}

TEST_CASE("ant commutes with minors on every matroid with at most four elements") {
  CHECK(minor_commutation_check(Matroid::uniform(3, 4), 4).ok());
  CHECK(minor_commutation_check(Matroid::uniform(2, 3), 1).ok());
  CHECK(minor_commutation_check(Matroid::uniform(1, 1), 1).ok());
  for (int n = 1; n <= 4; ++n)
    for (const Matroid& x : all_matroids(n))
      for (int i = 1; i <= n; ++i) CHECK(minor_commutation_check(x, i).ok());
}

TEST_CASE("lift and restrict_transversal") {
  const SymmetricMatroid l = lift(3, {0b000, 0b001, 0b010, 0b100, 0b111});
  CHECK(l.bases() == sets(3, {"1*,2*,3*", "1,2*,3*", "1*,2,3*", "1*,2*,3", "1,2,3"}));
  CHECK_FALSE(l.is_even());
  CHECK(l == examples::non_even_lift());
  CHECK_THROWS_AS(lift(2, {}), std::invalid_argument);

  const SymmetricMatroid t2(2, enumerate(2, SetKind::Transversal));
  CHECK(restrict_transversal(AntisymmetricMatroid(2, enumerate(2, SetKind::Transversal))) == t2);
  // Two different matroids with the same transversal bases.
  CHECK(restrict_transversal(AntisymmetricMatroid(2, coordinates(2))) == t2);

  for (const AntisymmetricMatroid& m : enumerate_antisymmetric(2)) {
    const SymmetricMatroid s = restrict_transversal(m);
    CHECK_FALSE(check_sea(2, s.bases()));
  }
  std::mt19937_64 rng(2);
  const auto all3 = enumerate_antisymmetric(3);
  for (int trial = 0; trial < 200; ++trial) {
    const SymmetricMatroid s = restrict_transversal(all3[rng() % all3.size()]);
    CHECK_FALSE(check_sea(3, s.bases()));
  }
}

TEST_CASE("symmetric exchange") {
  CHECK_THROWS_AS(SymmetricMatroid(2, {}), std::invalid_argument);
  CHECK_THROWS_AS(SymmetricMatroid(2, sets(2, {"1,1*"})), std::invalid_argument);
  // 12 and 1*2* alone: x = 1 forces y = 2 and 12 ^ {1,1*,2,2*} = 1*2*.
  CHECK(SymmetricMatroid(2, sets(2, {"1,2", "1*,2*"})).is_even());
  const auto w = check_sea(2, sets(2, {"1,2", "1*,2"}));
  CHECK_FALSE(w);
  CHECK(check_sea(3, sets(3, {"1,2,3", "1*,2*,3*"})));
}

TEST_CASE("even extension") {
  const SymmetricMatroid s(2, sets(2, {"1,2", "1*,2*"}));
  const AntisymmetricMatroid e = antisym_extension_even(s);
  CHECK(e.almost_transversal_bases() == sets(2, {"1,1*", "2,2*"}));
  CHECK(extend_symmetric(s) == std::vector<AntisymmetricMatroid>{e});
  CHECK_THROWS_AS(antisym_extension_even(examples::non_even_lift()), std::invalid_argument);

  // Matroid-shaped input: the extension is ant of the matroid.
  for (int n = 1; n <= 3; ++n)
    for (const Matroid& x : all_matroids(n)) {
      const AntisymmetricMatroid a = ant_of_matroid(x);
      CHECK(antisym_extension_even(restrict_transversal(a)) == a);
    }
}

TEST_CASE("even extension is unique, against an independent search, n <= 3") {
  std::size_t total = 0;
  for (int n = 1; n <= 3; ++n)
    for (const SymmetricMatroid& s : enumerate_even(n)) {
      ++total;
      const auto found = completions(s);
      REQUIRE(found.size() == 1);
      CHECK(antisym_extension_even(s).bases() == found.front());
    }
  CHECK(total > 0);
}

TEST_CASE("the non-even lift has a unique extension with twelve almost-transversal bases") {
  const SymmetricMatroid s = examples::non_even_lift();
  const auto found = completions(s);
  REQUIRE(found.size() == 1);
  const auto ext = extend_symmetric(s);
  REQUIRE(ext.size() == 1);
  CHECK(ext.front().bases() == found.front());
  CHECK(ext.front().almost_transversal_bases().size() == 12);
  CHECK(ext.front().almost_transversal_bases() == enumerate(3, SetKind::AlmostTransversal));
}

TEST_CASE("symmetric circuit axioms") {
  const SymmetricMatroid s = examples::non_even_lift();
  CHECK(check_symmetric_circuit_axioms(3, symmetric_circuits(s)).ok());
  CHECK_FALSE(check_symmetric_circuit_axioms(2, {ESubset(2, 0)}).c1);
  const SymmetricCircuitReport orth = check_symmetric_circuit_axioms(2, sets(2, {"1,2", "1*,2"}));
  CHECK_FALSE(orth.orth);
  CHECK_THROWS_AS(check_symmetric_circuit_axioms(2, sets(2, {"1,1*"})), std::invalid_argument);
  for (int n = 1; n <= 3; ++n)
    for (const SymmetricMatroid& x : enumerate_symmetric(n))
      CHECK(check_symmetric_circuit_axioms(n, symmetric_circuits(x)).ok());
}

TEST_CASE("relation classes") {
  for (int n = 2; n <= 4; ++n) {
    const auto e = edge_relations(n);
    const auto q = square_relations(n);
    const auto all = relation_pairs(n, 3);
    CHECK(e.size() + q.size() ==
          static_cast<std::size_t>(std::count_if(all.begin(), all.end(), [](const RelationPair& r) { return r.terms == 3; })));
    for (const RelationPair& r : e) CHECK_FALSE(is_square_relation(r));
    for (const RelationPair& r : q) CHECK(is_square_relation(r));
  }
}

TEST_CASE("gaussoids") {
  const TractId q = TractId::rationals();
  CHECK(gaussoid_from_antisym(matroid_of(examples::positive_definite())).members().empty());
  for (int n = 1; n <= 4; ++n)
    CHECK(gaussoid_from_antisym(matroid_of(examples::identity_pair(n, q))).members() ==
          enumerate(n, SetKind::AlmostTransversal));
  CHECK(gaussoid_from_antisym(AntisymmetricMatroid(2, coordinates(2))).members().empty());
  CHECK_THROWS_AS(gaussoid_from_antisym(matroid_of(examples::small_lagrangian())), std::invalid_argument);
  CHECK_FALSE(check_gaussoid(2, sets(2, {"1,2"})).members);

  // Every matroid containing T_n gives a gaussoid.
  for (int n = 2; n <= 3; ++n)
    for (const AntisymmetricMatroid& m : enumerate_antisymmetric(n)) {
      if (m.transversal_bases().size() != (std::size_t{1} << n)) continue;
      const Gaussoid g = gaussoid_from_antisym(m);
      CHECK(check_gaussoid(n, g.members()).ok());
    }

  // Random positive-definite Sigma = A A^T + I over Q.
  std::mt19937_64 rng(6);
  for (int trial = 0; trial < 20; ++trial) {
    const int n = 2 + static_cast<int>(rng() % 3);
    std::vector<std::vector<long>> a(n, std::vector<long>(n));
    for (auto& row : a)
      for (long& x : row) x = static_cast<long>(rng() % 5) - 2;
    FieldMatrix m(q, n, 2 * n);
    for (int i = 0; i < n; ++i) {
      m.set(i, i, TractElement::one(q));
      for (int j = 0; j < n; ++j) {
        long s = i == j ? 1 : 0;
        for (int k = 0; k < n; ++k) s += a[i][k] * a[j][k];
        m.set(i, n + j, TractElement::from_int(q, s));
      }
    }
    const AntisymmetricMatroid am = matroid_of(m);
    REQUIRE(am.transversal_bases().size() == (std::size_t{1} << n));
    CHECK(check_gaussoid(n, gaussoid_from_antisym(am).members()).ok());
  }
}

TEST_CASE("almost-principal unknowns") {
  // [n] - X = {1}, Y* = {1*,3*}: rows {2,3}, columns {1,3}.
  const AlmostPrincipal a = almost_principal_of(ESubset::parse(3, "1,1*,3*"));
  CHECK(a.i == 1);
  CHECK(a.j == 2);
  CHECK(a.k == 0b100);
  CHECK(a.to_string() == "a12|3");
  CHECK(almost_principal_of(ESubset::parse(3, "1,1*,2")).to_string() == "a13|");
  CHECK(almost_principal_of(ESubset::parse(3, "3,2*,3*")).to_string() == "a13|2");
}

TEST_CASE("oriented gaussoids") {
  const RGPFunction pd = pushforward(plucker(LagrangianWitness::verify(examples::positive_definite())),
                                     TractMorphism::rationals_to_sign());
  const OrientedGaussoidReport r = check_oriented_gaussoid(pd);
  CHECK(r.ok());
  REQUIRE(r.negative.size() == 1);
  CHECK(r.negative.front().to_string() == "a13|2");
  CHECK_FALSE(is_positive(pd));

  const RGPFunction id = pushforward(plucker(LagrangianWitness::verify(examples::identity_pair(3, TractId::rationals()))),
                                     TractMorphism::rationals_to_sign());
  CHECK(check_oriented_gaussoid(id).ok());
  CHECK(is_positive(id));

  // Flipping a principal sign breaks condition (i).
  RGPFunction bad = id;
  const ESubset t = unstarred(3);
  bad.set(t, TractElement::epsilon(bad.tract()) * bad(t));
  CHECK_FALSE(check_oriented_gaussoid(bad).principal);

  CHECK_THROWS(check_oriented_gaussoid(plucker(LagrangianWitness::verify(examples::identity_pair(2, TractId::rationals())))));
}

TEST_CASE("sign pushforwards with the principal pattern are oriented gaussoids") {
  std::mt19937_64 rng(19);
  int seen = 0;
  for (int trial = 0; trial < 400; ++trial) {
    const int n = 2 + static_cast<int>(rng() % 2);
    const RGPFunction s = pushforward(plucker(LagrangianWitness::verify(
                                          random_symmetric_embedding(n, TractId::rationals(), rng))),
                                      TractMorphism::rationals_to_sign());
    if (!check_oriented_gaussoid(s).principal) continue;
    ++seen;
    CHECK(check_oriented_gaussoid(s).ok());
  }
  CHECK(seen > 0);
}
