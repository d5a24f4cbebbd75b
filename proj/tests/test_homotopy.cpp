#include "doctest.h"
#include "lagmat/bridges.hpp"
#include "lagmat/examples.hpp"
#include "lagmat/homotopy.hpp"
#include "lagmat/lagrangian.hpp"
#include "oracles.hpp"

#include <random>

using namespace lagmat;

namespace {

ESubset s_(int n, const char* text) { return ESubset::parse(n, text); }

WeightedBasisGraph transversal_graph(const AntisymmetricMatroid& m) { return build_graphs(m).transversal; }

AntisymmetricMatroid matroid_of(const FieldMatrix& m) { return underlying(plucker(LagrangianWitness::verify(m))); }

}  // namespace

TEST_CASE("graphs of the full matroid on +-[2]") {
  const BasisGraphs g = build_graphs(AntisymmetricMatroid(2, coordinates(2)));
  CHECK(g.transversal.vertices.size() == 4);
  CHECK(g.full.vertices.size() == 6);
  CHECK(is_connected(g.full));
  CHECK(is_connected(g.transversal));
  // Four weight-1 edges around the square and both diagonals of weight 2.
  CHECK(g.transversal.edges.size() == 6);
  int heavy = 0;
  for (const WeightedEdge& e : g.transversal.edges) {
    CHECK(e.u < e.v);
    heavy += e.weight == 2;
  }
  CHECK(heavy == 2);
  CHECK(weighted_distance(g.transversal, s_(2, "1,2"), s_(2, "1*,2*")) == 2);
  CHECK(weighted_distance(g.transversal, s_(2, "1,2"), s_(2, "1,2*")) == 1);
  CHECK(g.transversal.index_of(s_(2, "1,1*")) == -1);
  CHECK_THROWS_AS(weighted_distance(g.transversal, s_(2, "1,2"), s_(2, "1,1*")), std::invalid_argument);
}

TEST_CASE("T_n alone has no weight-2 edges") {
  for (int n = 1; n <= 4; ++n) {
    const WeightedBasisGraph g = transversal_graph(AntisymmetricMatroid(n, enumerate(n, SetKind::Transversal)));
    CHECK(g.vertices.size() == (std::size_t{1} << n));
    CHECK(g.edges.size() == static_cast<std::size_t>(n) << (n - 1));
    for (const WeightedEdge& e : g.edges) CHECK(e.weight == 1);
    const auto d = all_distances(g);
    for (std::size_t a = 0; a < g.vertices.size(); ++a)
      for (std::size_t b = 0; b < g.vertices.size(); ++b)
        CHECK(d[a][b] == static_cast<int>((g.vertices[a] - g.vertices[b]).size()));
  }
}

TEST_CASE("single basis") {
  const AntisymmetricMatroid one(2, {s_(2, "1,2")});
  const BasisGraphs g = build_graphs(one);
  CHECK(g.transversal.vertices.size() == 1);
  CHECK(g.transversal.edges.empty());
  CHECK(is_connected(g.full));
  const CycleReport r = short_cycle_generation(g.transversal);
  CHECK(r.passed());
  CHECK(r.cyclomatic == 0);
}

TEST_CASE("Smith invariants against determinantal divisors") {
  std::mt19937_64 rng(4);
  for (int trial = 0; trial < 200; ++trial) {
    const std::size_t rows = 1 + rng() % 4, cols = 1 + rng() % 4;
    IntMatrix a(rows, std::vector<mpz_class>(cols));
    for (auto& row : a)
      for (auto& x : row) x = static_cast<long>(rng() % 13) - 6;
    const std::vector<mpz_class> d = oracle::determinantal_divisors(a);
    const std::vector<mpz_class> s = smith_invariants(a);
    REQUIRE(s.size() == d.size());
    // d_k = s_1 ... s_k.
    mpz_class product = 1;
    for (std::size_t k = 0; k < s.size(); ++k) {
      CHECK(s[k] > 0);
      if (k > 0) CHECK(s[k] % s[k - 1] == 0);
      product *= s[k];
      CHECK(product == d[k]);
    }
  }
  CHECK(smith_invariants(IntMatrix{{0, 0}, {0, 0}}).empty());
  CHECK(smith_invariants(IntMatrix{{2, 0}, {0, 3}}) == std::vector<mpz_class>{1, 6});
}

TEST_CASE("boundary matrix and cycle vectors") {
  const WeightedBasisGraph g = transversal_graph(AntisymmetricMatroid(2, coordinates(2)));
  const IntMatrix d = boundary_matrix(g);
  REQUIRE(d.size() == g.vertices.size());
  for (std::size_t e = 0; e < g.edges.size(); ++e) {
    mpz_class column_sum = 0;
    for (const auto& row : d) column_sum += row[e];
    CHECK(column_sum == 0);
  }
  bool capped = false;
  const std::vector<Cycle> cycles = enumerate_cycles(g, {}, capped);
  CHECK_FALSE(capped);
  CHECK_FALSE(cycles.empty());
  for (const Cycle& c : cycles) {
    CHECK(c.weight % 2 == 0);
    // Closed chains are cycles: boundary times the vector vanishes.
    const std::vector<mpz_class> v = cycle_vector(g, c);
    for (const auto& row : d) {
      mpz_class s = 0;
      for (std::size_t e = 0; e < v.size(); ++e) s += row[e] * v[e];
      CHECK(s == 0);
    }
  }
}

TEST_CASE("short cycles generate: every matroid on +-[2]") {
  for (const AntisymmetricMatroid& m : enumerate_antisymmetric(2)) {
    const BasisGraphs g = build_graphs(m);
    CHECK(is_connected(g.full));
    const CycleReport r = short_cycle_generation(g.transversal);
    CHECK(r.passed());
    CHECK(r.rank == r.cyclomatic);
  }
}

TEST_CASE("short cycles generate: every matroid on +-[3]") {
  for (const AntisymmetricMatroid& m : enumerate_antisymmetric(3)) {
    const WeightedBasisGraph g = transversal_graph(m);
    CHECK(is_connected(g));
    for (const WeightedEdge& e : g.edges) CHECK(weighted_distance(g, g.vertices[e.u], g.vertices[e.v]) == e.weight);
    CHECK(short_cycle_generation(g).passed());
  }
}

TEST_CASE("short cycles generate: random Lagrangians over GF(3)") {
  std::mt19937_64 rng(17);
  for (int n = 2; n <= 4; ++n)
    for (int trial = 0; trial < 10; ++trial) {
      const std::uint64_t pairs = rng() & ((std::uint64_t{1} << n) - 1);
      const FieldMatrix m = twist(random_symmetric_embedding(n, TractId::finite_field(3), rng), pairs);
      const CycleReport r = short_cycle_generation(transversal_graph(matroid_of(m)));
      CHECK(r.passed());
    }
}

TEST_CASE("lifted even symmetric matroids: cycles of length at most four suffice") {
  for (int n = 2; n <= 3; ++n)
    for (const SymmetricMatroid& s : enumerate_even(n)) {
      const AntisymmetricMatroid m = antisym_extension_even(s);
      CHECK(short_cycle_generation(transversal_graph(m), {8, 4, 1000000}).passed());
    }
}

TEST_CASE("bounds too small to reach the squares") {
  const WeightedBasisGraph g = transversal_graph(AntisymmetricMatroid(3, enumerate(3, SetKind::Transversal)));
  const CycleReport r = short_cycle_generation(g, {2, 2, 1000000});
  CHECK_FALSE(r.passed());
  CHECK(r.verdict != CycleVerdict::Generated);
  CHECK(short_cycle_generation(g).passed());
  CHECK(std::string(to_string(CycleVerdict::Generated)) != to_string(CycleVerdict::NotGenerated));
}

TEST_CASE("disconnected graph is rejected") {
  WeightedBasisGraph g;
  g.n = 2;
  g.vertices = {s_(2, "1,2"), s_(2, "1*,2*")};
  g.adjacency.resize(2);
  CHECK_FALSE(is_connected(g));
  CHECK_THROWS_AS(short_cycle_generation(g), std::invalid_argument);
}
