#include "lagmat/tract_antisym.hpp"

#include <algorithm>
#include <array>
#include <bit>
#include <deque>
#include <mutex>
#include <stdexcept>

namespace lagmat {

namespace {

const std::vector<ESubset>& cached_coordinates(int n) {
  static std::mutex mu;
  static std::array<std::vector<ESubset>, 13> table;
  static std::array<bool, 13> ready{};
  if (n < 0 || n > 12) throw CapacityError("restricted G-P functions are supported for n <= 12");
  std::lock_guard<std::mutex> lock(mu);
  if (!ready[static_cast<std::size_t>(n)]) {
    table[static_cast<std::size_t>(n)] = coordinates(n);
    ready[static_cast<std::size_t>(n)] = true;
  }
  return table[static_cast<std::size_t>(n)];
}

std::string set_text(const ESubset& s) { return "{" + s.to_string() + "}"; }

void require_valid(const RGPFunction& phi) {
  if (phi.trivial()) throw std::invalid_argument("restricted G-P function is identically zero");
  SymReport sym = check_sym(phi);
  if (!sym.ok)
    throw std::invalid_argument("(Sym) fails at " + set_text(sym.witness->first) + " / " +
                                set_text(sym.witness->second));
  RelationReport rel = check_rgp(phi, RelationMode::Full);
  if (!rel.ok)
    throw std::invalid_argument("(rGP) fails at S=" + set_text(rel.violations.front().s) +
                                ", T=" + set_text(rel.violations.front().t));
}

}  // namespace

RGPFunction::RGPFunction(int n, TractId tract)
    : n_(n), tract_(tract), domain_(cached_coordinates(n)), values_(domain_.size(), TractElement::zero(tract)) {}

std::size_t RGPFunction::index(const ESubset& b) const {
  auto it = std::lower_bound(domain_.begin(), domain_.end(), b);
  if (it == domain_.end() || *it != b)
    throw std::invalid_argument(set_text(b) + " is neither a transversal nor an almost-transversal of +-[" +
                                std::to_string(n_) + "]");
  return static_cast<std::size_t>(it - domain_.begin());
}

const TractElement& RGPFunction::operator()(const ESubset& b) const { return values_[index(b)]; }

void RGPFunction::set(const ESubset& b, const TractElement& value) {
  if (!(value.tract() == tract_)) throw TractMismatch("value from " + value.tract().tag() + " in a " + tract_.tag() + " function");
  values_[index(b)] = value;
}

std::vector<ESubset> RGPFunction::support() const {
  std::vector<ESubset> out;
  for (std::size_t k = 0; k < domain_.size(); ++k)
    if (!values_[k].is_zero()) out.push_back(domain_[k]);
  return out;
}

bool RGPFunction::trivial() const {
  return std::all_of(values_.begin(), values_.end(), [](const TractElement& x) { return x.is_zero(); });
}

std::string RGPFunction::to_string() const {
  std::string out;
  for (std::size_t k = 0; k < domain_.size(); ++k) {
    if (values_[k].is_zero()) continue;
    out += set_text(domain_[k]) + "=" + values_[k].to_string() + " ";
  }
  return out;
}

int max_terms(RelationMode mode) {
  switch (mode) {
    case RelationMode::Full: return 1 << 20;
    case RelationMode::Weak: return 4;
    case RelationMode::ThreeTerm: return 3;
  }
  return 0;
}

const char* to_string(RelationMode mode) {
  switch (mode) {
    case RelationMode::Full: return "full";
    case RelationMode::Weak: return "weak";
    case RelationMode::ThreeTerm: return "three-term";
  }
  return "?";
}

FormalSum relation_sum(const RGPFunction& phi, const ESubset& s, const ESubset& t) {
  FormalSum sum(phi.tract());
  for (const Element& x : (s - t).elements()) {
    int exponent = s.smaller_count(x) + t.smaller_count(x);
    sum.add(epsilon_power(phi.tract(), exponent) * phi(s.without(x)) * phi(t.with(x)));
  }
  return sum;
}

RelationReport check_rgp(const RGPFunction& phi, RelationMode mode) {
  if (phi.trivial()) throw std::invalid_argument("restricted G-P function is identically zero");
  RelationReport report;
  for (const RelationPair& pair : relation_pairs(phi.n(), max_terms(mode))) {
    ++report.checked;
    FormalSum sum = relation_sum(phi, pair.s, pair.t);
    if (!is_null(sum)) {
      report.ok = false;
      report.violations.push_back({pair.s, pair.t, std::move(sum)});
    }
  }
  return report;
}

SymReport check_sym(const RGPFunction& phi) {
  SymReport report;
  const int n = phi.n();
  for (const ESubset& a : phi.domain()) {
    if (a.classify() != SetKind::AlmostTransversal) continue;
    std::uint64_t p = a.skew_pairs();
    std::uint64_t q = a.missing_pairs();
    int i = std::countr_zero(p) + 1;
    int j = std::countr_zero(q) + 1;
    ESubset partner(n, (a.bits() & ~(p | (p << n))) | q | (q << n));
    if (!(phi(a) == epsilon_power(phi.tract(), i + j) * phi(partner))) {
      report.ok = false;
      report.witness = std::make_pair(a, partner);
      return report;
    }
  }
  return report;
}

AntisymmetricMatroid underlying(const RGPFunction& phi) {
  std::vector<ESubset> supp = phi.support();
  BasisAxiomReport r = check_basis_axioms(phi.n(), supp);
  if (!r.ok()) throw std::logic_error("support of the function is not an antisymmetric matroid: " + r.failure());
  return AntisymmetricMatroid(phi.n(), supp);
}

RGPFunction pushforward(const RGPFunction& phi, const TractMorphism& m) {
  if (!(m.source() == phi.tract()))
    throw TractMismatch("morphism from " + m.source().tag() + " applied to a " + phi.tract().tag() + " function");
  RGPFunction out(phi.n(), m.target());
  for (const ESubset& b : phi.domain()) out.set(b, m.apply(phi(b)));
  return out;
}

bool equivalent(const RGPFunction& a, const RGPFunction& b) {
  if (a.n() != b.n() || !(a.tract() == b.tract())) return false;
  if (a.support() != b.support()) return false;
  std::vector<ESubset> supp = a.support();
  if (supp.empty()) return true;
  const TractElement c = b(supp.front()) * a(supp.front()).inverse();
  for (const ESubset& s : supp)
    if (!(b(s) == c * a(s))) return false;
  return true;
}

ESubset twist_set(const ESubset& b, std::uint64_t pairs) {
  const int n = b.n();
  std::uint64_t lo = b.low();
  std::uint64_t hi = b.high();
  std::uint64_t new_lo = (lo & ~pairs) | (hi & pairs);
  std::uint64_t new_hi = (hi & ~pairs) | (lo & pairs);
  return ESubset(n, new_lo | (new_hi << n));
}

int twist_exponent(const ESubset& b, std::uint64_t pairs) {
  const int n = b.n();
  // Starred elements of twisted pairs become unstarred with a sign.
  int exponent = std::popcount(b.high() & pairs);
  std::vector<int> moved;
  for (const Element& x : b.elements()) {
    bool swap = (pairs >> (x.index() - 1)) & 1U;
    moved.push_back(swap ? x.star().bit(n) : x.bit(n));
  }
  for (std::size_t a = 0; a < moved.size(); ++a)
    for (std::size_t c = a + 1; c < moved.size(); ++c)
      if (moved[a] > moved[c]) ++exponent;
  return exponent;
}

RGPFunction twist(const RGPFunction& phi, std::uint64_t pairs) {
  RGPFunction out(phi.n(), phi.tract());
  for (const ESubset& b : phi.domain())
    out.set(twist_set(b, pairs), epsilon_power(phi.tract(), twist_exponent(b, pairs)) * phi(b));
  return out;
}

ESubset support(int n, const FVector& x) {
  if (x.size() != static_cast<std::size_t>(2 * n)) throw std::invalid_argument("vector length must be 2n");
  std::uint64_t bits = 0;
  for (std::size_t k = 0; k < x.size(); ++k)
    if (!x[k].is_zero()) bits |= std::uint64_t{1} << k;
  return ESubset(n, bits);
}

FVector normalized(const FVector& x) {
  auto first = std::find_if(x.begin(), x.end(), [](const TractElement& v) { return !v.is_zero(); });
  if (first == x.end()) throw std::invalid_argument("zero vector");
  const TractElement scale = first->inverse();
  FVector out;
  out.reserve(x.size());
  for (const TractElement& v : x) out.push_back(v * scale);
  return out;
}

FormalSum symplectic_pairing(TractId t, int n, const FVector& x, const FVector& y) {
  FormalSum sum(t);
  const TractElement eps = epsilon(t);
  for (int i = 0; i < n; ++i) {
    const auto lo = static_cast<std::size_t>(i);
    const auto hi = static_cast<std::size_t>(n + i);
    sum.add(x[lo] * y[hi]);
    sum.add(eps * x[hi] * y[lo]);
  }
  return sum;
}

FCircuitSet::FCircuitSet(int n, TractId tract) : n_(n), tract_(tract) { require_half_size(n); }

void FCircuitSet::add(const FVector& x) {
  if (x.size() != static_cast<std::size_t>(2 * n_)) throw std::invalid_argument("vector length must be 2n");
  for (const TractElement& v : x)
    if (!(v.tract() == tract_)) throw TractMismatch("vector entry from " + v.tract().tag());
  FVector v = normalized(x);
  auto key = [this](const FVector& a) { return support(n_, a); };
  auto less = [&key](const FVector& a, const FVector& b) {
    ESubset sa = key(a), sb = key(b);
    if (sa != sb) return sa < sb;
    return a < b;
  };
  auto it = std::lower_bound(vectors_.begin(), vectors_.end(), v, less);
  if (it != vectors_.end() && *it == v) return;
  vectors_.insert(it, std::move(v));
}

std::vector<ESubset> FCircuitSet::supports() const {
  std::vector<ESubset> out;
  for (const FVector& v : vectors_) out.push_back(support(n_, v));
  return out;
}

const FVector* FCircuitSet::covering(const ESubset& s) const {
  for (const FVector& v : vectors_)
    if (support(n_, v).subset_of(s)) return &v;
  return nullptr;
}

FCircuitSet FCircuitSet::star() const {
  FCircuitSet out(n_, tract_);
  for (const FVector& v : vectors_) {
    FVector w(v.size(), TractElement::zero(tract_));
    for (int i = 0; i < n_; ++i) {
      w[static_cast<std::size_t>(i)] = v[static_cast<std::size_t>(n_ + i)];
      w[static_cast<std::size_t>(n_ + i)] = v[static_cast<std::size_t>(i)];
    }
    out.add(w);
  }
  return out;
}

FCircuitReport check_fcircuit_set(const FCircuitSet& c) {
  FCircuitReport report;
  const int n = c.n();
  const std::vector<ESubset> supp = c.supports();
  for (std::size_t a = 0; a < supp.size(); ++a) {
    if (supp[a].skew_pair_count() > 1) {
      report.prepared = false;
      report.failure = "support " + set_text(supp[a]) + " has two skew pairs";
      return report;
    }
    for (std::size_t b = 0; b < supp.size(); ++b) {
      if (a != b && supp[a].subset_of(supp[b])) {
        report.prepared = false;
        report.failure = "support " + set_text(supp[a]) + " inside " + set_text(supp[b]) +
                         " without the vectors being proportional";
        return report;
      }
    }
  }
  for (const FVector& x : c.vectors())
    for (const FVector& y : c.vectors())
      if (!is_null(symplectic_pairing(c.tract(), n, x, y))) {
        report.orth = false;
        report.failure = "(Orth') pairing not null for supports " + set_text(support(n, x)) + " and " +
                         set_text(support(n, y));
        return report;
      }
  for (const ESubset& t : enumerate(n, SetKind::Transversal)) {
    for (const Element& x : t.elements()) {
      ESubset s = t.with(x.star());
      if (!c.covering(s)) {
        report.max = false;
        report.failure = "(Max') nothing inside " + set_text(s);
        return report;
      }
    }
  }
  return report;
}

FCircuitSet circuit_set_from_rgp(const RGPFunction& phi) {
  require_valid(phi);
  const int n = phi.n();
  const TractId t = phi.tract();
  FCircuitSet out(n, t);
  const AntisymmetricMatroid m = underlying(phi);
  for (const ESubset& b : m.transversal_bases()) {
    for (const Element& x : b.elements()) {
      const ESubset s = b.with(x.star());
      FVector v(static_cast<std::size_t>(2 * n), TractElement::zero(t));
      for (const Element& y : s.elements())
        v[static_cast<std::size_t>(y.bit(n))] = epsilon_power(t, y.chi() + s.smaller_count(y)) * phi(s.without(y));
      out.add(v);
    }
  }
  return out;
}

TractElement gamma(const FCircuitSet& c, const ESubset& b1, const ESubset& b2) {
  const ESubset s = b1 | b2;
  if (s.size() != c.n() + 1 || s.skew_pair_count() != 1)
    throw std::invalid_argument("gamma needs B1 u B2 of size n+1 with one skew pair");
  const Element x = (s - b1).elements().front();
  const Element y = (s - b2).elements().front();
  const FVector* v = c.covering(s);
  if (!v) throw std::invalid_argument("no circuit vector inside " + set_text(s));
  const int n = c.n();
  const TractElement& vx = (*v)[static_cast<std::size_t>(x.bit(n))];
  const TractElement& vy = (*v)[static_cast<std::size_t>(y.bit(n))];
  if (vx.is_zero()) throw std::invalid_argument(set_text(b1) + " is not a basis of the circuit set");
  int exponent = x.chi() + y.chi() + s.smaller_count(x) + s.smaller_count(y);
  return epsilon_power(c.tract(), exponent) * vy * vx.inverse();
}

BasisGraphView basis_graph_view(const AntisymmetricMatroid& m) {
  BasisGraphView g;
  g.vertices = m.bases();
  const std::size_t v = g.vertices.size();
  g.neighbours.assign(v, {});
  for (std::size_t a = 0; a < v; ++a) {
    for (std::size_t b = a + 1; b < v; ++b) {
      const ESubset& x = g.vertices[a];
      const ESubset& y = g.vertices[b];
      if ((x - y).size() != 1) continue;
      if (x.classify() != SetKind::Transversal && y.classify() != SetKind::Transversal) continue;
      g.neighbours[a].push_back(static_cast<int>(b));
      g.neighbours[b].push_back(static_cast<int>(a));
    }
  }
  for (auto& row : g.neighbours) std::sort(row.begin(), row.end());
  return g;
}

TractElement path_product(const FCircuitSet& c, const std::vector<ESubset>& path) {
  TractElement acc = TractElement::one(c.tract());
  for (std::size_t k = 0; k + 1 < path.size(); ++k) acc = acc * gamma(c, path[k], path[k + 1]);
  return acc;
}

RGPFunction rgp_from_circuit_set(const FCircuitSet& c) {
  FCircuitReport report = check_fcircuit_set(c);
  if (!report.ok()) throw std::invalid_argument("not an antisymmetric F-circuit set: " + report.failure);
  const AntisymmetricMatroid m = bases_from_circuits(CircuitFamily::make(c.n(), c.supports()));
  const BasisGraphView g = basis_graph_view(m);
  const std::size_t v = g.vertices.size();
  std::vector<TractElement> value(v, TractElement::zero(c.tract()));
  std::vector<bool> seen(v, false);
  std::deque<std::size_t> queue{0};
  seen[0] = true;
  value[0] = TractElement::one(c.tract());
  while (!queue.empty()) {
    std::size_t a = queue.front();
    queue.pop_front();
    for (int b : g.neighbours[a]) {
      auto bi = static_cast<std::size_t>(b);
      if (seen[bi]) continue;
      seen[bi] = true;
      value[bi] = value[a] * gamma(c, g.vertices[a], g.vertices[bi]);
      queue.push_back(bi);
    }
  }
  if (std::find(seen.begin(), seen.end(), false) != seen.end())
    throw PathInconsistency("basis graph is disconnected");
  // Every edge must agree with the tree values; this is path independence.
  for (std::size_t a = 0; a < v; ++a)
    for (int b : g.neighbours[a]) {
      auto bi = static_cast<std::size_t>(b);
      if (!(value[bi] == value[a] * gamma(c, g.vertices[a], g.vertices[bi])))
        throw PathInconsistency("gamma products disagree on the edge " + set_text(g.vertices[a]) + " -- " +
                                set_text(g.vertices[bi]));
    }
  RGPFunction out(c.n(), c.tract());
  for (std::size_t a = 0; a < v; ++a) out.set(g.vertices[a], value[a]);
  return out;
}

RGPFunction antisym_from_gp(const GPFunction& psi) {
  if (!check_gp(psi)) throw std::invalid_argument("not a Grassmann-Pluecker function");
  const int n = psi.n();
  const GPFunction dual = gp_dual(psi);
  RGPFunction out(n, psi.tract());
  for (const ESubset& b : out.domain()) {
    const auto lo = static_cast<Mask>(b.low());
    const auto hi = static_cast<Mask>(b.high());
    if (std::popcount(lo) != psi.rank()) continue;
    out.set(b, psi(lo) * dual(hi));
  }
  return out;
}

}  // namespace lagmat
