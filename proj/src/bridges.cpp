#include "lagmat/bridges.hpp"

#include <algorithm>
#include <bit>
#include <stdexcept>

namespace lagmat {

namespace {

std::string set_text(const ESubset& s) { return "{" + s.to_string() + "}"; }

bool is_subtransversal(const ESubset& s) { return s.skew_pair_count() == 0; }

bool contains_sorted(const std::vector<ESubset>& sorted, const ESubset& x) {
  return std::binary_search(sorted.begin(), sorted.end(), x);
}

// The partner A - p + q of an almost-transversal A.
ESubset sym_partner(const ESubset& a) {
  const int n = a.n();
  const std::uint64_t p = a.skew_pairs();
  const std::uint64_t q = a.missing_pairs();
  return ESubset(n, (a.bits() & ~(p | (p << n))) | q | (q << n));
}

ESubset swap_pairs(const ESubset& b, const ESubset& x_pair_bits) { return b ^ x_pair_bits; }

ESubset pair_bits(int n, Element x) { return skew_pair(n, x.index()); }

}  // namespace

CircuitFamily ant_circuits(const Matroid& n) {
  std::vector<ESubset> out;
  for (Mask c : circuits(n)) out.emplace_back(n.n(), std::uint64_t{c});
  for (Mask c : circuits(dual(n))) out.emplace_back(n.n(), std::uint64_t{c} << n.n());
  return CircuitFamily::make(n.n(), std::move(out));
}

AntisymmetricMatroid ant_of_matroid(const Matroid& n) {
  const CircuitFamily c = ant_circuits(n);
  CircuitAxiomReport report = check_circuit_axioms(c);
  if (!report.ok()) throw std::logic_error("circuits of ant(N) fail the axioms: " + report.failure);
  return bases_from_circuits(c);
}

MinorCommutation minor_commutation_check(const Matroid& n, int i) {
  if (i < 1 || i > n.n()) throw std::invalid_argument("element outside ground set");
  const AntisymmetricMatroid m = ant_of_matroid(n);
  MinorCommutation out;
  out.contraction = elementary_minor(m, Element(i, false)) == ant_of_matroid(contract(n, i));
  out.deletion = elementary_minor(m, Element(i, true)) == ant_of_matroid(delete_element(n, i));
  return out;
}

std::optional<SeaWitness> check_sea(int n, const std::vector<ESubset>& family) {
  for (const ESubset& b1 : family)
    for (const ESubset& b2 : family) {
      const ESubset diff = b1 - b2;
      for (const Element& x : diff.elements()) {
        bool found = false;
        for (const Element& y : diff.elements()) {
          const ESubset moved = swap_pairs(b1, pair_bits(n, x) ^ (x.index() == y.index() ? ESubset(n, 0) : pair_bits(n, y)));
          if (contains_sorted(family, moved)) {
            found = true;
            break;
          }
        }
        if (!found) return SeaWitness{b1, b2, x};
      }
    }
  return std::nullopt;
}

SymmetricMatroid::SymmetricMatroid(int n, std::vector<ESubset> bases) : n_(n), bases_(std::move(bases)) {
  require_half_size(n);
  std::sort(bases_.begin(), bases_.end());
  bases_.erase(std::unique(bases_.begin(), bases_.end()), bases_.end());
  if (bases_.empty()) throw std::invalid_argument("a symmetric matroid needs a basis");
  for (const ESubset& b : bases_)
    if (b.n() != n || b.classify() != SetKind::Transversal)
      throw std::invalid_argument(set_text(b) + " is not a transversal");
  if (auto w = check_sea(n, bases_))
    throw std::invalid_argument("symmetric exchange fails for B1=" + set_text(w->b1) + ", B2=" + set_text(w->b2) +
                                ", x=" + w->x.to_string());
}

bool SymmetricMatroid::is_basis(const ESubset& b) const { return contains_sorted(bases_, b); }

bool SymmetricMatroid::is_even() const {
  const int parity = std::popcount(bases_.front().low()) % 2;
  return std::all_of(bases_.begin(), bases_.end(), [parity](const ESubset& b) { return std::popcount(b.low()) % 2 == parity; });
}

SymmetricMatroid lift(int n, const std::vector<Mask>& feasible) {
  if (feasible.empty()) throw std::invalid_argument("a delta-matroid needs a feasible set");
  require_half_size(n);
  const std::uint64_t all = n == 0 ? 0 : (~std::uint64_t{0} >> (64 - n));
  std::vector<ESubset> bases;
  for (Mask f : feasible) {
    if (std::uint64_t{f} & ~all) throw std::invalid_argument("feasible set outside [n]");
    bases.emplace_back(n, std::uint64_t{f} | ((all & ~std::uint64_t{f}) << n));
  }
  return SymmetricMatroid(n, std::move(bases));
}

SymmetricMatroid restrict_transversal(const AntisymmetricMatroid& m) {
  return SymmetricMatroid(m.n(), m.transversal_bases());
}

std::vector<ESubset> symmetric_circuits(const SymmetricMatroid& m) {
  const int n = m.n();
  std::vector<ESubset> dependent;
  const std::uint64_t all = ground_set(n).bits();
  for (std::uint64_t bits = 0; bits <= all; ++bits) {
    const ESubset s(n, bits);
    if (!is_subtransversal(s)) continue;
    if (std::none_of(m.bases().begin(), m.bases().end(), [&](const ESubset& b) { return s.subset_of(b); }))
      dependent.push_back(s);
    if (bits == all) break;
  }
  std::vector<ESubset> out;
  for (const ESubset& s : dependent)
    if (std::none_of(dependent.begin(), dependent.end(), [&](const ESubset& t) { return t != s && t.subset_of(s); }))
      out.push_back(s);
  std::sort(out.begin(), out.end());
  return out;
}

SymmetricCircuitReport check_symmetric_circuit_axioms(int n, const std::vector<ESubset>& family) {
  SymmetricCircuitReport r;
  for (const ESubset& c : family)
    if (c.n() != n || !is_subtransversal(c)) throw std::invalid_argument(set_text(c) + " is not a subtransversal");
  auto fail = [&r](bool& flag, std::string text) {
    if (flag && r.failure.empty()) r.failure = std::move(text);
    flag = false;
  };
  for (const ESubset& c : family)
    if (c.empty()) fail(r.c1, "(C1) the empty set is a member");
  for (const ESubset& a : family)
    for (const ESubset& b : family) {
      if (a != b && a.subset_of(b)) fail(r.c2, "(C2) " + set_text(a) + " inside " + set_text(b));
      if ((a & b.star()).size() == 1) fail(r.orth, "(Orth) " + set_text(a) + " and " + set_text(b));
      if (a == b || !is_subtransversal(a | b)) continue;
      for (const Element& e : (a & b).elements()) {
        const ESubset rest = (a | b).without(e);
        if (std::none_of(family.begin(), family.end(), [&](const ESubset& c) { return c.subset_of(rest); }))
          fail(r.add, "(Add') nothing inside " + set_text(rest) + " from " + set_text(a) + ", " + set_text(b));
      }
    }
  return r;
}

AntisymmetricMatroid antisym_extension_even(const SymmetricMatroid& s) {
  if (!s.is_even()) throw std::invalid_argument("symmetric matroid is not even");
  const int n = s.n();
  std::vector<ESubset> bases = s.bases();
  for (const ESubset& a : enumerate(n, SetKind::AlmostTransversal)) {
    const int p = std::countr_zero(a.skew_pairs()) + 1;
    const int q = std::countr_zero(a.missing_pairs()) + 1;
    bool found = false;
    for (bool xs : {false, true})
      for (bool ys : {false, true}) {
        const Element x(p, xs), y(q, ys);
        if (s.is_basis(a.without(x).with(y)) && s.is_basis(a.without(x.star()).with(y.star()))) found = true;
      }
    if (found) bases.push_back(a);
  }
  return AntisymmetricMatroid(n, std::move(bases));
}

std::vector<AntisymmetricMatroid> extend_symmetric(const SymmetricMatroid& s) {
  const int n = s.n();
  if (n > 3) throw CapacityError("exhaustive extension search is limited to n <= 3");
  const std::vector<ESubset> almost = enumerate(n, SetKind::AlmostTransversal);
  std::vector<AntisymmetricMatroid> out;
  for (std::uint64_t pick = 0; pick < (std::uint64_t{1} << almost.size()); ++pick) {
    std::vector<ESubset> family = s.bases();
    for (std::size_t k = 0; k < almost.size(); ++k)
      if ((pick >> k) & 1U) family.push_back(almost[k]);
    std::sort(family.begin(), family.end());
    if (satisfies_basis_axioms(n, family)) out.emplace_back(n, std::move(family));
  }
  return out;
}

std::vector<AntisymmetricMatroid> enumerate_antisymmetric(int n) {
  if (n < 0 || n > 3) throw CapacityError("exhaustive antisymmetric enumeration is limited to n <= 3");
  const std::vector<ESubset> trans = enumerate(n, SetKind::Transversal);
  std::vector<std::pair<ESubset, ESubset>> orbits;
  for (const ESubset& a : enumerate(n, SetKind::AlmostTransversal)) {
    const ESubset b = sym_partner(a);
    if (a < b) orbits.emplace_back(a, b);
  }
  std::vector<AntisymmetricMatroid> out;
  for (std::uint64_t t = 0; t < (std::uint64_t{1} << trans.size()); ++t)
    for (std::uint64_t o = 0; o < (std::uint64_t{1} << orbits.size()); ++o) {
      std::vector<ESubset> family;
      for (std::size_t k = 0; k < trans.size(); ++k)
        if ((t >> k) & 1U) family.push_back(trans[k]);
      for (std::size_t k = 0; k < orbits.size(); ++k)
        if ((o >> k) & 1U) {
          family.push_back(orbits[k].first);
          family.push_back(orbits[k].second);
        }
      if (family.empty()) continue;
      std::sort(family.begin(), family.end());
      if (satisfies_basis_axioms(n, family)) out.emplace_back(n, std::move(family));
    }
  std::sort(out.begin(), out.end(), [](const auto& a, const auto& b) { return a.bases() < b.bases(); });
  return out;
}

std::vector<SymmetricMatroid> enumerate_symmetric(int n) {
  if (n < 0 || n > 4) throw CapacityError("exhaustive symmetric enumeration is limited to n <= 4");
  const std::vector<ESubset> trans = enumerate(n, SetKind::Transversal);
  std::vector<SymmetricMatroid> out;
  for (std::uint64_t t = 1; t < (std::uint64_t{1} << trans.size()); ++t) {
    std::vector<ESubset> family;
    for (std::size_t k = 0; k < trans.size(); ++k)
      if ((t >> k) & 1U) family.push_back(trans[k]);
    if (!check_sea(n, family)) out.emplace_back(n, std::move(family));
  }
  std::sort(out.begin(), out.end(), [](const auto& a, const auto& b) { return a.bases() < b.bases(); });
  return out;
}

std::vector<SymmetricMatroid> enumerate_even(int n) {
  std::vector<SymmetricMatroid> out;
  for (SymmetricMatroid& s : enumerate_symmetric(n))
    if (s.is_even()) out.push_back(std::move(s));
  return out;
}

bool is_square_relation(const RelationPair& r) {
  const int n = r.s.n();
  const std::uint64_t p = r.s.skew_pairs();
  const std::uint64_t pair = p | (p << n);
  return ((r.s - r.t).bits() & pair) == pair;
}

std::vector<RelationPair> edge_relations(int n) {
  std::vector<RelationPair> out;
  for (const RelationPair& r : relation_pairs(n, 3))
    if (r.terms == 3 && !is_square_relation(r)) out.push_back(r);
  return out;
}

std::vector<RelationPair> square_relations(int n) {
  std::vector<RelationPair> out;
  for (const RelationPair& r : relation_pairs(n, 3))
    if (r.terms == 3 && is_square_relation(r)) out.push_back(r);
  return out;
}

GaussoidReport check_gaussoid(int n, const std::vector<ESubset>& family) {
  GaussoidReport r;
  std::vector<ESubset> g = family;
  std::sort(g.begin(), g.end());
  g.erase(std::unique(g.begin(), g.end()), g.end());
  for (const ESubset& a : g)
    if (a.n() != n || a.classify() != SetKind::AlmostTransversal) {
      r.members = false;
      r.failure = set_text(a) + " is not an almost-transversal";
      return r;
    }
  for (const ESubset& a : g)
    if (!contains_sorted(g, sym_partner(a))) {
      r.allowable = false;
      r.failure = set_text(a) + " is a member but " + set_text(sym_partner(a)) + " is not";
      return r;
    }
  for (const RelationPair& rel : edge_relations(n)) {
    int free_terms = 0;
    for (const Element& x : (rel.s - rel.t).elements())
      if (!contains_sorted(g, rel.s.without(x)) && !contains_sorted(g, rel.t.with(x))) ++free_terms;
    if (free_terms == 1) {
      r.compatible = false;
      r.failure = "incompatible with the edge relation S=" + set_text(rel.s) + ", T=" + set_text(rel.t);
      return r;
    }
  }
  return r;
}

Gaussoid::Gaussoid(int n, std::vector<ESubset> members) : n_(n), members_(std::move(members)) {
  std::sort(members_.begin(), members_.end());
  members_.erase(std::unique(members_.begin(), members_.end()), members_.end());
  GaussoidReport r = check_gaussoid(n, members_);
  if (!r.ok()) throw std::invalid_argument("not a gaussoid: " + r.failure);
}

Gaussoid gaussoid_from_antisym(const AntisymmetricMatroid& m) {
  for (const ESubset& t : enumerate(m.n(), SetKind::Transversal))
    if (!m.is_basis(t)) throw std::invalid_argument("transversal " + set_text(t) + " is not a basis");
  std::vector<ESubset> members;
  for (const ESubset& a : enumerate(m.n(), SetKind::AlmostTransversal))
    if (!m.is_basis(a)) members.push_back(a);
  return Gaussoid(m.n(), std::move(members));
}

int principal_sign_exponent(int n, Mask x) {
  int m = 0;
  int position = 0;
  for (int k = 1; k <= n; ++k) {
    if ((x >> (k - 1)) & 1U) continue;
    ++position;
    m += k + position;
  }
  return m % 2;
}

std::string AlmostPrincipal::to_string() const {
  std::string out = "a" + std::to_string(i) + std::to_string(j) + "|";
  for (int b = 0; b < 32; ++b)
    if ((k >> b) & 1U) out += std::to_string(b + 1);
  return out;
}

AlmostPrincipal almost_principal_of(const ESubset& a) {
  if (a.classify() != SetKind::AlmostTransversal) throw std::invalid_argument(set_text(a) + " is not an almost-transversal");
  const int n = a.n();
  const std::uint64_t all = n == 0 ? 0 : (~std::uint64_t{0} >> (64 - n));
  const std::uint64_t x = all & ~a.low();
  const std::uint64_t y = a.high();
  AlmostPrincipal out;
  const int i = std::countr_zero(x & ~y) + 1;
  const int j = std::countr_zero(y & ~x) + 1;
  out.i = std::min(i, j);
  out.j = std::max(i, j);
  out.k = static_cast<Mask>(x & y);
  return out;
}

namespace {

TractElement sign_of_exponent(int e) { return epsilon_power(TractId::sign(), e); }

Mask x_of(const ESubset& b) {
  const int n = b.n();
  const std::uint64_t all = n == 0 ? 0 : (~std::uint64_t{0} >> (64 - n));
  return static_cast<Mask>(all & ~b.low());
}

}  // namespace

OrientedGaussoidReport check_oriented_gaussoid(const RGPFunction& phi) {
  if (!(phi.tract() == TractId::sign())) throw TractMismatch("oriented gaussoids take values in the sign hyperfield");
  const int n = phi.n();
  OrientedGaussoidReport r;
  for (const ESubset& t : enumerate(n, SetKind::Transversal)) {
    const TractElement want = sign_of_exponent(principal_sign_exponent(n, x_of(t)));
    if (!(phi(t) == want) && r.principal) {
      r.principal = false;
      r.failure = "value at " + set_text(t) + " is " + phi(t).to_string() + ", expected " + want.to_string();
    }
  }
  for (const RelationPair& rel : edge_relations(n)) {
    if (is_null(relation_sum(phi, rel.s, rel.t))) continue;
    if (r.edges && r.failure.empty())
      r.failure = "edge relation S=" + set_text(rel.s) + ", T=" + set_text(rel.t) + " is not null";
    r.edges = false;
  }
  for (const ESubset& a : enumerate(n, SetKind::AlmostTransversal)) {
    if (phi(a).is_zero()) continue;
    if (phi(a) * sign_of_exponent(principal_sign_exponent(n, x_of(a))) == TractElement::epsilon(phi.tract()))
      r.negative.push_back(almost_principal_of(a));
  }
  std::sort(r.negative.begin(), r.negative.end());
  r.negative.erase(std::unique(r.negative.begin(), r.negative.end()), r.negative.end());
  return r;
}

bool is_positive(const RGPFunction& phi) {
  const OrientedGaussoidReport r = check_oriented_gaussoid(phi);
  return r.ok() && r.negative.empty();
}

}  // namespace lagmat
