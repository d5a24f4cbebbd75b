#include "lagmat/homotopy.hpp"

#include <algorithm>
#include <functional>
#include <limits>
#include <queue>
#include <stdexcept>

namespace lagmat {

namespace {

std::string set_text(const ESubset& s) { return "{" + s.to_string() + "}"; }

bool one_step(const ESubset& a, const ESubset& b) { return (a - b).size() == 1; }

// Echelon basis of a sublattice of Z^k, rows ordered by pivot column.
class Lattice {
 public:
  explicit Lattice(std::size_t width) : width_(width) {}

  void insert(std::vector<mpz_class> v) {
    std::size_t k = 0;
    while (true) {
      const std::size_t lead = leading(v);
      if (lead == width_) return;
      while (k < rows_.size() && pivot(rows_[k]) < lead) ++k;
      if (k == rows_.size() || pivot(rows_[k]) > lead) {
        if (v[lead] < 0)
          for (auto& x : v) x = -x;
        rows_.insert(rows_.begin() + static_cast<std::ptrdiff_t>(k), std::move(v));
        return;
      }
      std::vector<mpz_class>& r = rows_[k];
      const mpz_class a = r[lead];
      const mpz_class b = v[lead];
      if (mpz_divisible_p(b.get_mpz_t(), a.get_mpz_t())) {
        const mpz_class q = b / a;
        for (std::size_t j = lead; j < width_; ++j) v[j] -= q * r[j];
      } else {
        mpz_class g, s, t;
        mpz_gcdext(g.get_mpz_t(), s.get_mpz_t(), t.get_mpz_t(), a.get_mpz_t(), b.get_mpz_t());
        const mpz_class ag = a / g;
        const mpz_class bg = b / g;
        for (std::size_t j = lead; j < width_; ++j) {
          const mpz_class rj = r[j];
          const mpz_class vj = v[j];
          r[j] = s * rj + t * vj;
          v[j] = ag * vj - bg * rj;
        }
        if (r[lead] < 0)
          for (auto& x : r) x = -x;
      }
      ++k;
    }
  }

  std::size_t rank() const { return rows_.size(); }
  bool unimodular_pivots() const {
    return std::all_of(rows_.begin(), rows_.end(), [this](const auto& r) { return abs(r[pivot(r)]) == 1; });
  }
  const std::vector<std::vector<mpz_class>>& rows() const { return rows_; }

 private:
  std::size_t leading(const std::vector<mpz_class>& v) const {
    std::size_t j = 0;
    while (j < width_ && v[j] == 0) ++j;
    return j;
  }
  std::size_t pivot(const std::vector<mpz_class>& v) const { return leading(v); }

  std::size_t width_;
  std::vector<std::vector<mpz_class>> rows_;
};

}  // namespace

int WeightedBasisGraph::index_of(const ESubset& b) const {
  auto it = std::lower_bound(vertices.begin(), vertices.end(), b);
  if (it == vertices.end() || *it != b) return -1;
  return static_cast<int>(it - vertices.begin());
}

BasisGraphs build_graphs(const AntisymmetricMatroid& m) {
  BasisGraphs out;
  WeightedBasisGraph& g = out.transversal;
  g.n = m.n();
  g.vertices = m.transversal_bases();
  const std::vector<ESubset> almost = m.almost_transversal_bases();
  g.adjacency.assign(g.vertices.size(), {});
  for (std::size_t a = 0; a < g.vertices.size(); ++a) {
    for (std::size_t b = a + 1; b < g.vertices.size(); ++b) {
      const ESubset& x = g.vertices[a];
      const ESubset& y = g.vertices[b];
      const int d = (x - y).size();
      int weight = 0;
      if (d == 1) {
        weight = 1;
      } else if (d == 2 &&
                 std::any_of(almost.begin(), almost.end(), [&](const ESubset& t) { return one_step(x, t) && one_step(y, t); })) {
        weight = 2;
      }
      if (weight == 0) continue;
      const int e = static_cast<int>(g.edges.size());
      g.edges.push_back({static_cast<int>(a), static_cast<int>(b), weight});
      g.adjacency[a].emplace_back(static_cast<int>(b), e);
      g.adjacency[b].emplace_back(static_cast<int>(a), e);
    }
  }
  out.full = basis_graph_view(m);
  return out;
}

namespace {

template <class Neighbours>
bool connected_impl(std::size_t count, Neighbours neighbours) {
  if (count == 0) return true;
  std::vector<bool> seen(count, false);
  std::vector<std::size_t> stack{0};
  seen[0] = true;
  std::size_t reached = 1;
  while (!stack.empty()) {
    std::size_t a = stack.back();
    stack.pop_back();
    for (int b : neighbours(a)) {
      if (seen[static_cast<std::size_t>(b)]) continue;
      seen[static_cast<std::size_t>(b)] = true;
      ++reached;
      stack.push_back(static_cast<std::size_t>(b));
    }
  }
  return reached == count;
}

}  // namespace

bool is_connected(const BasisGraphView& g) {
  return connected_impl(g.vertices.size(), [&](std::size_t a) { return g.neighbours[a]; });
}

bool is_connected(const WeightedBasisGraph& g) {
  return connected_impl(g.vertices.size(), [&](std::size_t a) {
    std::vector<int> out;
    for (auto [b, e] : g.adjacency[a]) out.push_back(b);
    return out;
  });
}

std::vector<std::vector<int>> all_distances(const WeightedBasisGraph& g) {
  const std::size_t v = g.vertices.size();
  std::vector<std::vector<int>> dist(v, std::vector<int>(v, -1));
  using Item = std::pair<int, int>;
  for (std::size_t s = 0; s < v; ++s) {
    std::priority_queue<Item, std::vector<Item>, std::greater<>> queue;
    std::vector<int>& d = dist[s];
    d[s] = 0;
    queue.emplace(0, static_cast<int>(s));
    while (!queue.empty()) {
      auto [du, u] = queue.top();
      queue.pop();
      if (du > d[static_cast<std::size_t>(u)]) continue;
      for (auto [w, e] : g.adjacency[static_cast<std::size_t>(u)]) {
        const int nd = du + g.edges[static_cast<std::size_t>(e)].weight;
        int& dw = d[static_cast<std::size_t>(w)];
        if (dw < 0 || nd < dw) {
          dw = nd;
          queue.emplace(nd, w);
        }
      }
    }
  }
  return dist;
}

int weighted_distance(const WeightedBasisGraph& g, const ESubset& b, const ESubset& b_prime) {
  const int i = g.index_of(b);
  const int j = g.index_of(b_prime);
  if (i < 0 || j < 0) throw std::invalid_argument("vertex is not a transversal basis");
  const int d = all_distances(g)[static_cast<std::size_t>(i)][static_cast<std::size_t>(j)];
  if (d < 0) throw std::logic_error(set_text(b) + " and " + set_text(b_prime) + " are in different components");
  if (d != (b - b_prime).size())
    throw std::logic_error("distance " + std::to_string(d) + " between " + set_text(b) + " and " + set_text(b_prime) +
                           " differs from the set difference");
  return d;
}

IntMatrix boundary_matrix(const WeightedBasisGraph& g) {
  IntMatrix m(g.vertices.size(), std::vector<mpz_class>(g.edges.size(), 0));
  for (std::size_t e = 0; e < g.edges.size(); ++e) {
    m[static_cast<std::size_t>(g.edges[e].u)][e] = 1;
    m[static_cast<std::size_t>(g.edges[e].v)][e] = -1;
  }
  return m;
}

std::vector<mpz_class> smith_invariants(IntMatrix m) {
  const std::size_t rows = m.size();
  const std::size_t cols = rows == 0 ? 0 : m[0].size();
  std::vector<mpz_class> diagonal;
  for (std::size_t t = 0; t < std::min(rows, cols); ++t) {
    // Bring the smallest nonzero entry to (t, t) and clear its row and column;
    // repeat while a remainder survives.
    while (true) {
      std::size_t pr = rows, pc = cols;
      for (std::size_t i = t; i < rows; ++i)
        for (std::size_t j = t; j < cols; ++j)
          if (m[i][j] != 0 && (pr == rows || abs(m[i][j]) < abs(m[pr][pc]))) {
            pr = i;
            pc = j;
          }
      if (pr == rows) break;
      std::swap(m[t], m[pr]);
      for (auto& row : m) std::swap(row[t], row[pc]);
      bool clean = true;
      for (std::size_t i = t + 1; i < rows; ++i) {
        if (m[i][t] == 0) continue;
        const mpz_class q = m[i][t] / m[t][t];
        for (std::size_t j = t; j < cols; ++j) m[i][j] -= q * m[t][j];
        if (m[i][t] != 0) clean = false;
      }
      for (std::size_t j = t + 1; j < cols; ++j) {
        if (m[t][j] == 0) continue;
        const mpz_class q = m[t][j] / m[t][t];
        for (std::size_t i = t; i < rows; ++i) m[i][j] -= q * m[i][t];
        if (m[t][j] != 0) clean = false;
      }
      if (clean) {
        diagonal.push_back(abs(m[t][t]));
        break;
      }
    }
    if (diagonal.size() == t) break;
  }
  // diag(a, b) is equivalent to diag(gcd, lcm).
  for (std::size_t i = 0; i < diagonal.size(); ++i)
    for (std::size_t j = i + 1; j < diagonal.size(); ++j) {
      mpz_class g = gcd(diagonal[i], diagonal[j]);
      mpz_class l = lcm(diagonal[i], diagonal[j]);
      diagonal[i] = g;
      diagonal[j] = l;
    }
  return diagonal;
}

std::vector<Cycle> enumerate_cycles(const WeightedBasisGraph& g, const CycleOptions& options, bool& capped) {
  capped = false;
  const std::size_t v = g.vertices.size();
  const std::vector<std::vector<int>> dist = all_distances(g);
  std::vector<Cycle> out;
  std::vector<int> path;
  std::vector<bool> on_path(v, false);

  std::function<void(int, int, int)> extend = [&](int root, int u, int weight) {
    if (capped) return;
    for (auto [w, e] : g.adjacency[static_cast<std::size_t>(u)]) {
      const int nw = weight + g.edges[static_cast<std::size_t>(e)].weight;
      if (w == root) {
        // Each cycle is met twice, once per direction; keep one.
        if (path.size() >= 3 && path[1] < path.back() && nw <= options.max_weight) {
          if (out.size() >= options.cap) {
            capped = true;
            return;
          }
          out.push_back({path, nw});
        }
        continue;
      }
      if (w < root || on_path[static_cast<std::size_t>(w)]) continue;
      if (static_cast<int>(path.size()) + 1 > options.max_length) continue;
      const int back = dist[static_cast<std::size_t>(w)][static_cast<std::size_t>(root)];
      if (back < 0 || nw + back > options.max_weight) continue;
      on_path[static_cast<std::size_t>(w)] = true;
      path.push_back(w);
      extend(root, w, nw);
      path.pop_back();
      on_path[static_cast<std::size_t>(w)] = false;
      if (capped) return;
    }
  };

  for (std::size_t r = 0; r < v && !capped; ++r) {
    path.assign(1, static_cast<int>(r));
    on_path[r] = true;
    extend(static_cast<int>(r), static_cast<int>(r), 0);
    on_path[r] = false;
  }
  return out;
}

std::vector<mpz_class> cycle_vector(const WeightedBasisGraph& g, const Cycle& c) {
  std::vector<mpz_class> x(g.edges.size(), 0);
  const std::size_t len = c.vertices.size();
  for (std::size_t k = 0; k < len; ++k) {
    const int a = c.vertices[k];
    const int b = c.vertices[(k + 1) % len];
    int edge = -1;
    for (auto [w, e] : g.adjacency[static_cast<std::size_t>(a)])
      if (w == b) edge = e;
    if (edge < 0) throw std::invalid_argument("cycle uses a missing edge");
    x[static_cast<std::size_t>(edge)] += a < b ? 1 : -1;
  }
  return x;
}

const char* to_string(CycleVerdict v) {
  switch (v) {
    case CycleVerdict::Generated: return "generated";
    case CycleVerdict::NotGenerated: return "not-generated";
    case CycleVerdict::Inconclusive: return "inconclusive";
  }
  return "?";
}

CycleReport short_cycle_generation(const WeightedBasisGraph& g, const CycleOptions& options) {
  if (!is_connected(g)) throw std::invalid_argument("transversal basis graph is disconnected");
  CycleReport report;
  report.vertex_count = g.vertices.size();
  report.edge_count = g.edges.size();
  const std::vector<mpz_class> boundary = smith_invariants(boundary_matrix(g));
  report.cyclomatic = static_cast<long>(g.edges.size()) - static_cast<long>(boundary.size());
  if (report.cyclomatic != static_cast<long>(g.edges.size()) - static_cast<long>(g.vertices.size()) + 1)
    throw std::logic_error("boundary rank disagrees with a connected graph");

  bool capped = false;
  std::vector<Cycle> cycles = enumerate_cycles(g, options, capped);
  report.cycles = cycles.size();
  for (const Cycle& c : cycles)
    if (c.weight % 2 != 0) {
      std::string text;
      for (int x : c.vertices) text += set_text(g.vertices[static_cast<std::size_t>(x)]);
      throw std::logic_error("cycle of odd weight " + std::to_string(c.weight) + ": " + text);
    }
  if (capped) {
    report.verdict = CycleVerdict::Inconclusive;
    report.note = "more than " + std::to_string(options.cap) + " cycles within the bounds";
    return report;
  }

  std::stable_sort(cycles.begin(), cycles.end(), [](const Cycle& a, const Cycle& b) {
    if (a.weight != b.weight) return a.weight < b.weight;
    return a.vertices.size() < b.vertices.size();
  });
  Lattice lattice(g.edges.size());
  for (const Cycle& c : cycles) {
    if (static_cast<long>(lattice.rank()) == report.cyclomatic && lattice.unimodular_pivots()) break;
    lattice.insert(cycle_vector(g, c));
    ++report.used;
  }
  report.rank = static_cast<long>(lattice.rank());
  report.invariant_factors = smith_invariants(lattice.rows());
  const bool unit = std::all_of(report.invariant_factors.begin(), report.invariant_factors.end(),
                                [](const mpz_class& d) { return d == 1; });
  report.verdict = report.rank == report.cyclomatic && unit ? CycleVerdict::Generated : CycleVerdict::NotGenerated;
  if (!report.passed())
    report.note = report.rank != report.cyclomatic ? "short cycles span a proper subspace" : "short cycles span a sublattice of finite index";
  return report;
}

}  // namespace lagmat
