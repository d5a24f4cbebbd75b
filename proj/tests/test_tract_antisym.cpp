#include "doctest.h"
#include "lagmat/bridges.hpp"
#include "lagmat/examples.hpp"
#include "lagmat/homotopy.hpp"
#include "lagmat/lagrangian.hpp"
#include "lagmat/tract_antisym.hpp"

#include <random>

using namespace lagmat;

namespace {

ESubset s_(int n, const char* text) { return ESubset::parse(n, text); }

std::vector<ESubset> sets(int n, std::initializer_list<const char*> texts) {
  std::vector<ESubset> out;
  for (const char* t : texts) out.push_back(ESubset::parse(n, t));
  std::sort(out.begin(), out.end());
  return out;
}

RGPFunction plucker_of(const FieldMatrix& m) { return plucker(LagrangianWitness::verify(m)); }

// V-perp on the unstarred side and V on the starred side, V the row space
// of [[1,0,1],[0,1,1]] (a representation of U_{2,3}).
FieldMatrix u23_lagrangian(TractId f) {
  return FieldMatrix::from_ints(f, {{1, 1, -1, 0, 0, 0}, {0, 0, 0, 1, 0, 1}, {0, 0, 0, 0, 1, 1}});
}

RGPFunction constant_one(int n, TractId t) {
  RGPFunction phi(n, t);
  for (const ESubset& b : enumerate(n, SetKind::Transversal)) phi.set(b, TractElement::one(t));
  return phi;
}

}  // namespace

TEST_CASE("check_rgp on the listed functions") {
  const RGPFunction id2 = plucker_of(examples::identity_pair(2, TractId::finite_field(2)));
  CHECK(check_rgp(id2, RelationMode::Full).ok);

  const RGPFunction four = examples::four_term_obstruction();
  CHECK(check_rgp(four, RelationMode::ThreeTerm).ok);
  CHECK_FALSE(check_rgp(four, RelationMode::Weak).ok);
  const RelationReport full = check_rgp(four, RelationMode::Full);
  CHECK_FALSE(full.ok);
  const ESubset s = s_(4, "1,2,2*,3*,4*"), t = s_(4, "1*,2,3");
  auto hit = std::find_if(full.violations.begin(), full.violations.end(),
                          [&](const RelationViolation& v) { return v.s == s && v.t == t; });
  REQUIRE(hit != full.violations.end());
  CHECK(hit->sum.terms().size() == 3);
  for (const RelationViolation& v : full.violations) CHECK((v.s - v.t).size() >= 4);

  const RGPFunction one = constant_one(1, TractId::rationals());
  CHECK(check_rgp(one, RelationMode::Full).ok);
  CHECK(check_rgp(constant_one(1, TractId::sign()), RelationMode::Full).ok);
  CHECK_THROWS_AS(check_rgp(RGPFunction(2, TractId::rationals()), RelationMode::Full), std::invalid_argument);
}

TEST_CASE("check_sym") {
  for (TractId f : {TractId::finite_field(3), TractId::rationals()}) {
    std::mt19937_64 rng(9);
    for (int n = 2; n <= 4; ++n) CHECK(check_sym(plucker_of(random_symmetric_embedding(n, f, rng))).ok);
  }
  RGPFunction q(2, TractId::rationals());
  q.set(s_(2, "1,2"), TractElement::one(TractId::rationals()));
  q.set(s_(2, "1,1*"), TractElement::one(TractId::rationals()));
  q.set(s_(2, "2,2*"), TractElement::one(TractId::rationals()));
  const SymReport bad = check_sym(q);
  CHECK_FALSE(bad.ok);
  REQUIRE(bad.witness);
  RGPFunction g(2, TractId::finite_field(2));
  g.set(s_(2, "1,2"), TractElement::one(g.tract()));
  g.set(s_(2, "1,1*"), TractElement::one(g.tract()));
  g.set(s_(2, "2,2*"), TractElement::one(g.tract()));
  CHECK(check_sym(g).ok);
}

TEST_CASE("underlying matroids") {
  CHECK(underlying(plucker_of(examples::identity_pair(2, TractId::rationals()))).bases() ==
        enumerate(2, SetKind::Transversal));
  CHECK(underlying(plucker_of(examples::small_lagrangian())).bases() ==
        sets(2, {"1,2", "1,1*", "1,2*", "2,1*", "2,2*"}));
  CHECK(underlying(constant_one(1, TractId::krasner())).bases() == enumerate(1, SetKind::Transversal));
  RGPFunction bad(2, TractId::krasner());
  bad.set(s_(2, "1,2"), TractElement::one(bad.tract()));
  bad.set(s_(2, "1*,2*"), TractElement::one(bad.tract()));
  CHECK_THROWS(underlying(bad));
}

TEST_CASE("small Lagrangian coordinates") {
  const RGPFunction phi = plucker_of(examples::small_lagrangian());
  const TractId q = TractId::rationals();
  CHECK(phi(s_(2, "1,2")) == TractElement::from_int(q, 1));
  CHECK(phi(s_(2, "1,1*")) == TractElement::from_int(q, 1));
  CHECK(phi(s_(2, "1,2*")) == TractElement::from_int(q, 1));
  CHECK(phi(s_(2, "2,1*")) == TractElement::from_int(q, -1));
  CHECK(phi(s_(2, "2,2*")) == TractElement::from_int(q, -1));
  CHECK(phi(s_(2, "1*,2*")).is_zero());
}

TEST_CASE("pushforwards") {
  std::mt19937_64 rng(1);
  const RGPFunction g3 = plucker_of(random_symmetric_embedding(3, TractId::finite_field(3), rng));
  const RGPFunction k = pushforward(g3, TractMorphism::to_krasner(g3.tract()));
  CHECK(k.support() == underlying(g3).bases());
  for (const TractElement& v : k.values()) CHECK((v.is_zero() || v == TractElement::one(TractId::krasner())));
  CHECK(check_rgp(k, RelationMode::Full).ok);
  CHECK(pushforward(g3, TractMorphism::identity(g3.tract())) == g3);
  const RGPFunction pd = pushforward(plucker_of(examples::positive_definite()), TractMorphism::rationals_to_sign());
  CHECK(pd.tract() == TractId::sign());
  CHECK(check_sym(pd).ok);
  CHECK(check_rgp(pd, RelationMode::Full).ok);
  CHECK_THROWS(pushforward(g3, TractMorphism::rationals_to_sign()));
}

TEST_CASE("circuit sets from restricted G-P functions") {
  const TractId f2 = TractId::finite_field(2);
  const FCircuitSet c = circuit_set_from_rgp(plucker_of(examples::identity_pair(2, f2)));
  const FVector* v = c.covering(s_(2, "1,2,1*"));
  REQUIRE(v != nullptr);
  CHECK(support(2, *v) == s_(2, "1,1*"));
  CHECK((*v)[0] == TractElement::one(f2));
  CHECK((*v)[2] == TractElement::one(f2));

  const RGPFunction u23 = plucker_of(u23_lagrangian(TractId::rationals()));
  CHECK(circuit_set_from_rgp(u23).supports() == sets(3, {"1*,2*,3*", "1,2", "1,3", "2,3"}));
  CHECK(circuit_vectors(LagrangianWitness::verify(u23_lagrangian(TractId::rationals()))).supports() ==
        sets(3, {"1,2,3", "1*,2*", "1*,3*", "2*,3*"}));

  const FCircuitSet one = circuit_set_from_rgp(constant_one(1, TractId::rationals()));
  CHECK(one.supports() == sets(1, {"1,1*"}));
}

TEST_CASE("gamma on the small Lagrangian") {
  const RGPFunction phi = plucker_of(examples::small_lagrangian());
  const FCircuitSet c = circuit_set_from_rgp(phi);
  const TractId q = TractId::rationals();
  CHECK(gamma(c, s_(2, "1,2"), s_(2, "1,1*")) == TractElement::from_int(q, 1));
  CHECK(gamma(c, s_(2, "1,2"), s_(2, "2,1*")) == TractElement::from_int(q, -1));
  const BasisGraphView g = basis_graph_view(underlying(phi));
  for (std::size_t a = 0; a < g.vertices.size(); ++a)
    for (int b : g.neighbours[a]) {
      const ESubset b1 = g.vertices[a], b2 = g.vertices[static_cast<std::size_t>(b)];
      CHECK(gamma(c, b1, b2) == phi(b2) * phi(b1).inverse());
      CHECK(gamma(c, b2, b1) == gamma(c, b1, b2).inverse());
    }
  CHECK_THROWS(gamma(c, s_(2, "1,2"), s_(2, "1*,2*")));
}

TEST_CASE("restricted G-P functions from circuit sets") {
  const RGPFunction phi = plucker_of(examples::small_lagrangian());
  CHECK(equivalent(rgp_from_circuit_set(circuit_set_from_rgp(phi)), phi));
  const RGPFunction id3 = plucker_of(examples::identity_pair(2, TractId::finite_field(3)));
  CHECK(equivalent(rgp_from_circuit_set(circuit_set_from_rgp(id3)), id3));
  FCircuitSet k(1, TractId::krasner());
  k.add({TractElement::one(TractId::krasner()), TractElement::one(TractId::krasner())});
  CHECK(rgp_from_circuit_set(k) == constant_one(1, TractId::krasner()));
  // A circuit set failing orthogonality is refused.
  FCircuitSet bad(2, TractId::rationals());
  const TractElement one = TractElement::one(TractId::rationals()), zero = TractElement::zero(TractId::rationals());
  bad.add({one, zero, one, zero});
  bad.add({zero, one, one, zero});
  CHECK_FALSE(check_fcircuit_set(bad).ok());
  CHECK_THROWS(rgp_from_circuit_set(bad));
}

TEST_CASE("roundtrips and orthogonality on random instances") {
  std::mt19937_64 rng(21);
  for (TractId f : {TractId::finite_field(2), TractId::finite_field(3), TractId::finite_field(5), TractId::rationals()}) {
    for (int n = 2; n <= 4; ++n) {
      for (int rep = 0; rep < 3; ++rep) {
        const RGPFunction phi = plucker_of(random_symmetric_embedding(n, f, rng));
        const FCircuitSet c = circuit_set_from_rgp(phi);
        CHECK(check_fcircuit_set(c).ok());
        for (const FVector& x : c.vectors())
          for (const FVector& y : c.vectors()) CHECK(is_null(symplectic_pairing(f, n, x, y)));
        CHECK(CircuitFamily::make(n, c.supports()) == circuits_from_bases(underlying(phi)));
        const RGPFunction back = rgp_from_circuit_set(c);
        CHECK(equivalent(back, phi));
        CHECK(circuit_set_from_rgp(back) == c);
        CHECK(is_connected(basis_graph_view(underlying(phi))));
        CHECK(check_rgp(phi, RelationMode::Weak).ok);
      }
    }
  }
}

TEST_CASE("F-matroid embedding") {
  const TractId k = TractId::krasner();
  GPFunction psi(k, 3, 2);
  for (Mask b : psi.domain()) psi.set(b, TractElement::one(k));
  const RGPFunction phi = antisym_from_gp(psi);
  CHECK(check_sym(phi).ok);
  CHECK(check_rgp(phi, RelationMode::Full).ok);
  CHECK(phi(s_(3, "1,2,1*")) == TractElement::one(k));
  for (const ESubset& b : phi.support()) CHECK(std::popcount(b.low()) == 2);
  CHECK(underlying(phi) == ant_of_matroid(Matroid::uniform(2, 3)));

  GPFunction rank0(k, 3, 0);
  rank0.set(0, TractElement::one(k));
  CHECK(antisym_from_gp(rank0).support() == sets(3, {"1*,2*,3*"}));

  const TractId f3 = TractId::finite_field(3);
  GPFunction g(f3, 3, 2);
  // Maximal minors of [[1,0,1],[0,1,1]].
  g.set(parse_mask(3, "1,2"), TractElement::from_int(f3, 1));
  g.set(parse_mask(3, "1,3"), TractElement::from_int(f3, 1));
  g.set(parse_mask(3, "2,3"), TractElement::from_int(f3, -1));
  REQUIRE(check_gp(g));
  const RGPFunction phi3 = antisym_from_gp(g);
  CHECK(check_rgp(phi3, RelationMode::Full).ok);
  CHECK(circuits_from_bases(underlying(phi3)) == ant_circuits(Matroid::uniform(2, 3)));
}

TEST_CASE("equivalence") {
  const TractId f3 = TractId::finite_field(3);
  std::mt19937_64 rng(4);
  const RGPFunction phi = plucker_of(random_symmetric_embedding(3, f3, rng));
  RGPFunction twice(3, f3), zeroed = phi;
  for (std::size_t j = 0; j < phi.domain().size(); ++j)
    twice.set(phi.domain()[j], phi.values()[j] * TractElement::from_int(f3, 2));
  CHECK(equivalent(phi, twice));
  zeroed.set(phi.support().front(), TractElement::zero(f3));
  CHECK_FALSE(equivalent(phi, zeroed));
  CHECK(pushforward(phi, TractMorphism::to_krasner(f3)) == pushforward(twice, TractMorphism::to_krasner(f3)));
}

TEST_CASE("twisting functions matches twisting matrices") {
  std::mt19937_64 rng(8);
  for (TractId f : {TractId::finite_field(5), TractId::rationals()}) {
    for (int n = 1; n <= 3; ++n) {
      const FieldMatrix m = random_symmetric_embedding(n, f, rng);
      const RGPFunction phi = plucker_of(m);
      for (std::uint64_t pairs = 0; pairs < (std::uint64_t{1} << n); ++pairs) {
        const RGPFunction t = twist(phi, pairs);
        CHECK(check_rgp(t, RelationMode::Full).ok);
        CHECK(check_sym(t).ok);
        CHECK(equivalent(t, plucker_of(twist(m, pairs))));
        CHECK(twist(twist(twist(twist(phi, pairs), pairs), pairs), pairs) == phi);
        for (const ESubset& b : phi.support()) CHECK(!t(twist_set(b, pairs)).is_zero());
      }
    }
  }
}
