// Basis graphs of an antisymmetric matroid, weighted distances, and an
// integer check that short cycles generate the first homology group of the
// transversal basis graph.

#ifndef LAGMAT_HOMOTOPY_HPP
#define LAGMAT_HOMOTOPY_HPP

#include <gmpxx.h>

#include <cstddef>
#include <string>
#include <utility>
#include <vector>

#include "lagmat/antisym.hpp"
#include "lagmat/ground.hpp"
#include "lagmat/tract_antisym.hpp"

namespace lagmat {

struct WeightedEdge {
  int u = 0;  // u < v in vertex order
  int v = 0;
  int weight = 1;
  friend bool operator==(const WeightedEdge&, const WeightedEdge&) = default;
};

// Vertices are the transversal bases in ascending bitmask order.  Two of them
// are joined with weight 1 when they differ in one pair, and with weight 2
// when they differ in two pairs and some almost-transversal basis is one
// step away from both.
struct WeightedBasisGraph {
  int n = 0;
  std::vector<ESubset> vertices;
  std::vector<WeightedEdge> edges;
  std::vector<std::vector<std::pair<int, int>>> adjacency;  // (neighbour, edge index)

  int index_of(const ESubset& b) const;  // -1 when absent
};

struct BasisGraphs {
  WeightedBasisGraph transversal;
  BasisGraphView full;
};
BasisGraphs build_graphs(const AntisymmetricMatroid& m);
bool is_connected(const BasisGraphView& g);
bool is_connected(const WeightedBasisGraph& g);

// Dijkstra distances from every vertex; -1 marks unreachable pairs.
std::vector<std::vector<int>> all_distances(const WeightedBasisGraph& g);
// Throws std::invalid_argument for a missing vertex and std::logic_error if
// the distance is not |B - B'|.
int weighted_distance(const WeightedBasisGraph& g, const ESubset& b, const ESubset& b_prime);

using IntMatrix = std::vector<std::vector<mpz_class>>;
// Rows are vertices, columns edges; the edge uv with u < v maps to u - v.
IntMatrix boundary_matrix(const WeightedBasisGraph& g);
// Nonzero invariant factors, each dividing the next, all positive.
std::vector<mpz_class> smith_invariants(IntMatrix m);

struct Cycle {
  std::vector<int> vertices;  // closed implicitly; starts at its least vertex
  int weight = 0;
};

struct CycleOptions {
  int max_weight = 8;
  int max_length = 8;
  std::size_t cap = 1000000;
};

// Simple cycles within the bounds, each listed once.  Sets `capped` and stops
// when more than options.cap cycles exist.
std::vector<Cycle> enumerate_cycles(const WeightedBasisGraph& g, const CycleOptions& options, bool& capped);
std::vector<mpz_class> cycle_vector(const WeightedBasisGraph& g, const Cycle& c);

enum class CycleVerdict { Generated, NotGenerated, Inconclusive };
const char* to_string(CycleVerdict v);

struct CycleReport {
  CycleVerdict verdict = CycleVerdict::Inconclusive;
  std::size_t vertex_count = 0;
  std::size_t edge_count = 0;
  long cyclomatic = 0;
  std::size_t cycles = 0;  // enumerated
  std::size_t used = 0;    // inserted before the lattice was complete
  long rank = 0;
  std::vector<mpz_class> invariant_factors;
  std::string note;
  bool passed() const { return verdict == CycleVerdict::Generated; }
};

// Throws std::invalid_argument for a disconnected graph and std::logic_error
// for a cycle of odd weight.
CycleReport short_cycle_generation(const WeightedBasisGraph& g, const CycleOptions& options = {});

}  // namespace lagmat

#endif  // LAGMAT_HOMOTOPY_HPP
