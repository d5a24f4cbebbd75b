#include "lagmat/antisym.hpp"

#include <algorithm>
#include <bit>
#include <stdexcept>

namespace lagmat {

namespace {

class Lookup {
 public:
  explicit Lookup(const std::vector<ESubset>& sorted) : sorted_(sorted) {}
  bool operator()(const ESubset& s) const { return std::binary_search(sorted_.begin(), sorted_.end(), s); }

 private:
  const std::vector<ESubset>& sorted_;
};

std::vector<ESubset> normalized(int n, std::vector<ESubset> family) {
  for (const ESubset& s : family) {
    if (s.n() != n) throw std::invalid_argument("member " + s.to_string() + " lives on another ground set");
    if (s.classify() == SetKind::Neither)
      throw std::invalid_argument("member {" + s.to_string() + "} is neither a transversal nor an almost-transversal");
  }
  std::sort(family.begin(), family.end());
  family.erase(std::unique(family.begin(), family.end()), family.end());
  return family;
}

// The partner A - p + q of an almost-transversal A under (B2).
ESubset b2_partner(const ESubset& a) {
  const int n = a.n();
  std::uint64_t p = a.skew_pairs();
  std::uint64_t q = a.missing_pairs();
  std::uint64_t pair_p = p | (p << n);
  std::uint64_t pair_q = q | (q << n);
  return ESubset(n, (a.bits() & ~pair_p) | pair_q);
}

std::optional<std::pair<ESubset, ESubset>> find_b2_violation(const std::vector<ESubset>& family, const Lookup& in) {
  for (const ESubset& a : family) {
    if (a.classify() != SetKind::AlmostTransversal) continue;
    ESubset partner = b2_partner(a);
    if (!in(partner)) return std::make_pair(a, partner);
  }
  return std::nullopt;
}

std::optional<BasisAxiomReport::ExchWitness> find_exch_violation(const std::vector<ESubset>& family,
                                                                  const Lookup& in) {
  for (const ESubset& b : family) {
    for (const ESubset& bp : family) {
      for (const Element& e : (b - bp).elements()) {
        ESubset b_minus = b.without(e);
        ESubset bp_plus = bp.with(e);
        if (b_minus.skew_pair_count() != 0 || bp_plus.skew_pair_count() != 1) continue;
        bool found = false;
        for (const Element& f : (bp - b).elements()) {
          if (in(b_minus.with(f)) && in(bp_plus.without(f))) {
            found = true;
            break;
          }
        }
        if (!found) return BasisAxiomReport::ExchWitness{b, bp, e};
      }
    }
  }
  return std::nullopt;
}

std::optional<BasisAxiomReport::ExchPrimeWitness> find_exch_prime_violation(int n, const Lookup& in) {
  const std::vector<ESubset> trans = enumerate(n, SetKind::Transversal);
  for (const ESubset& t : trans) {
    for (const ESubset& tp : trans) {
      const std::vector<Element> diff = (tp - t).elements();
      for (const Element& e : diff) {
        for (const Element& f : diff) {
          ESubset s = t.with(e);
          ESubset r = tp.without(f);
          int count = 0;
          for (const Element& g : (s - r).elements())
            if (in(s.without(g)) && in(r.with(g))) ++count;
          if (count == 1) return BasisAxiomReport::ExchPrimeWitness{t, tp, e, f};
        }
      }
    }
  }
  return std::nullopt;
}

std::string set_text(const ESubset& s) { return "{" + s.to_string() + "}"; }

}  // namespace

std::string BasisAxiomReport::failure() const {
  if (!b1) return "(B1) empty basis family";
  if (!b2)
    return "(B2) " + set_text(b2_witness->first) + " is a basis but " + set_text(b2_witness->second) + " is not";
  if (!exch)
    return "(Exch) B=" + set_text(exch_witness->b) + ", B'=" + set_text(exch_witness->b_prime) +
           ", e=" + exch_witness->e.to_string();
  return {};
}

BasisAxiomReport check_basis_axioms(int n, const std::vector<ESubset>& family) {
  const std::vector<ESubset> sorted = normalized(n, family);
  const Lookup in(sorted);
  BasisAxiomReport report;
  report.b1 = !sorted.empty();
  report.b2_witness = find_b2_violation(sorted, in);
  report.b2 = !report.b2_witness;
  report.exch_witness = find_exch_violation(sorted, in);
  report.exch = !report.exch_witness;
  report.exch_prime_witness = find_exch_prime_violation(n, in);
  report.exch_prime = !report.exch_prime_witness;
  return report;
}

bool satisfies_basis_axioms(int n, const std::vector<ESubset>& sorted_family) {
  (void)n;
  if (sorted_family.empty()) return false;
  const Lookup in(sorted_family);
  return !find_b2_violation(sorted_family, in) && !find_exch_violation(sorted_family, in);
}

AntisymmetricMatroid::AntisymmetricMatroid(int n, std::vector<ESubset> bases)
    : n_(n), bases_(normalized(n, std::move(bases))) {
  if (!satisfies_basis_axioms(n_, bases_)) {
    BasisAxiomReport r = check_basis_axioms(n_, bases_);
    throw std::invalid_argument("not an antisymmetric matroid: " + r.failure());
  }
}

bool AntisymmetricMatroid::is_basis(const ESubset& b) const {
  return std::binary_search(bases_.begin(), bases_.end(), b);
}

std::vector<ESubset> AntisymmetricMatroid::transversal_bases() const {
  std::vector<ESubset> out;
  for (const ESubset& b : bases_)
    if (b.classify() == SetKind::Transversal) out.push_back(b);
  return out;
}

std::vector<ESubset> AntisymmetricMatroid::almost_transversal_bases() const {
  std::vector<ESubset> out;
  for (const ESubset& b : bases_)
    if (b.classify() == SetKind::AlmostTransversal) out.push_back(b);
  return out;
}

CircuitFamily CircuitFamily::make(int n, std::vector<ESubset> circuits) {
  require_half_size(n);
  for (const ESubset& c : circuits) {
    if (c.n() != n) throw std::invalid_argument("circuit " + set_text(c) + " lives on another ground set");
    if (c.skew_pair_count() > 1) throw std::invalid_argument("circuit " + set_text(c) + " has two or more skew pairs");
  }
  std::sort(circuits.begin(), circuits.end());
  circuits.erase(std::unique(circuits.begin(), circuits.end()), circuits.end());
  return CircuitFamily{n, std::move(circuits)};
}

CircuitFamily CircuitFamily::star() const {
  std::vector<ESubset> out;
  for (const ESubset& c : circuits) out.push_back(c.star());
  return make(n, out);
}

CircuitAxiomReport check_circuit_axioms(const CircuitFamily& family) {
  const CircuitFamily c = CircuitFamily::make(family.n, family.circuits);
  const int n = c.n;
  CircuitAxiomReport report;
  for (const ESubset& x : c.circuits) {
    if (x.empty()) {
      report.c1 = false;
      report.failure = "(C1) the empty set is a circuit";
      return report;
    }
  }
  for (const ESubset& x : c.circuits)
    for (const ESubset& y : c.circuits)
      if (x != y && x.subset_of(y)) {
        report.c2 = false;
        report.failure = "(C2) " + set_text(x) + " is inside " + set_text(y);
        return report;
      }
  for (const ESubset& x : c.circuits)
    for (const ESubset& y : c.circuits)
      if ((x & y.star()).size() == 1) {
        report.orth = false;
        report.failure = "(Orth) |C1 & C2*| = 1 for C1=" + set_text(x) + ", C2=" + set_text(y);
        return report;
      }
  auto contains_circuit = [&c](const ESubset& s) {
    return std::any_of(c.circuits.begin(), c.circuits.end(), [&s](const ESubset& x) { return x.subset_of(s); });
  };
  for (const ESubset& t : enumerate(n, SetKind::Transversal)) {
    for (const Element& x : t.elements()) {
      ESubset s = t.with(x.star());
      if (!contains_circuit(s)) {
        report.max = false;
        report.failure = "(Max) no circuit inside " + set_text(s);
        return report;
      }
      const ESubset pair = skew_pair(n, x.index());
      bool hit = std::any_of(c.circuits.begin(), c.circuits.end(),
                             [&](const ESubset& y) { return y.subset_of(s) && !(y & pair).empty(); });
      if (!hit && report.max_prime) {
        report.max_prime = false;
        report.failure = "(Max') no circuit inside " + set_text(s) + " meets the pair of " + x.to_string();
      }
    }
  }
  for (const ESubset& x : c.circuits) {
    for (const ESubset& y : c.circuits) {
      if (!(x < y)) continue;
      for (const Element& e : (x & y).elements()) {
        ESubset u = (x | y).without(e);
        if (u.skew_pair_count() > 1) continue;
        if (!contains_circuit(u) && report.add) {
          report.add = false;
          if (report.failure.empty())
            report.failure = "(Add) no circuit inside (" + set_text(x) + " | " + set_text(y) + ") - " + e.to_string();
        }
      }
    }
  }
  return report;
}

ESubset fundamental_circuit(const AntisymmetricMatroid& m, const ESubset& b, Element e) {
  if (b.classify() != SetKind::Transversal || !m.is_basis(b))
    throw std::invalid_argument(set_text(b) + " is not a transversal basis");
  if (b.contains(e) || !b.contains(e.star()))
    throw std::invalid_argument(e.to_string() + " is not in the star of the basis");
  const ESubset s = b.with(e);
  ESubset out(m.n(), 0);
  for (const Element& x : s.elements())
    if (m.is_basis(s.without(x))) out = out.with(x);
  return out;
}

namespace {

std::vector<ESubset> minimal_members(std::vector<ESubset> family) {
  std::sort(family.begin(), family.end());
  family.erase(std::unique(family.begin(), family.end()), family.end());
  std::vector<ESubset> out;
  for (const ESubset& x : family) {
    bool minimal = std::none_of(family.begin(), family.end(),
                                [&x](const ESubset& y) { return y != x && y.subset_of(x); });
    if (minimal) out.push_back(x);
  }
  return out;
}

}  // namespace

CircuitFamily circuits_from_bases(const AntisymmetricMatroid& m) {
  std::vector<ESubset> found;
  for (const ESubset& b : m.transversal_bases())
    for (const Element& x : b.elements()) found.push_back(fundamental_circuit(m, b, x.star()));
  return CircuitFamily::make(m.n(), minimal_members(std::move(found)));
}

AntisymmetricMatroid bases_from_circuits(const CircuitFamily& c) {
  CircuitAxiomReport r = check_circuit_axioms(c);
  if (!r.ok()) throw std::invalid_argument("not an antisymmetric circuit family: " + r.failure);
  std::vector<ESubset> bases;
  for (const ESubset& s : coordinates(c.n)) {
    bool free = std::none_of(c.circuits.begin(), c.circuits.end(), [&s](const ESubset& x) { return x.subset_of(s); });
    if (free) bases.push_back(s);
  }
  return AntisymmetricMatroid(c.n, bases);
}

AntisymmetricMatroid elementary_minor(const AntisymmetricMatroid& m, Element i) {
  const int n = m.n();
  if (i.index() > n) throw std::invalid_argument("element outside ground set");
  const Element is = i.star();

  bool some_basis_has_i =
      std::any_of(m.bases().begin(), m.bases().end(), [&](const ESubset& b) { return b.contains(i); });
  std::vector<ESubset> by_bases;
  for (const ESubset& b : m.bases()) {
    if (some_basis_has_i) {
      if (b.contains(i) && !b.contains(is)) by_bases.push_back(remove_pair(b.without(i), i.index()));
    } else {
      by_bases.push_back(remove_pair(b.without(is), i.index()));
    }
  }
  AntisymmetricMatroid minor(n - 1, by_bases);

  std::vector<ESubset> reduced;
  const ESubset single = ESubset(n, 0).with(i);
  for (const ESubset& c : circuits_from_bases(m).circuits) {
    if (c.contains(is) || c == single) continue;
    reduced.push_back(remove_pair(c.without(i), i.index()));
  }
  CircuitFamily by_circuits = CircuitFamily::make(n - 1, minimal_members(std::move(reduced)));
  if (circuits_from_bases(minor) != by_circuits || bases_from_circuits(by_circuits) != minor)
    throw std::logic_error("basis rule and circuit rule disagree for the minor at " + i.to_string());
  return minor;
}

std::vector<std::vector<int>> polytope_vertices(const AntisymmetricMatroid& m) {
  std::vector<std::vector<int>> out;
  for (const ESubset& b : m.transversal_bases()) {
    std::vector<int> v(static_cast<std::size_t>(m.n()));
    for (const Element& x : b.elements()) v[static_cast<std::size_t>(x.index() - 1)] = x.starred() ? -1 : 1;
    out.push_back(v);
  }
  return out;
}

TrichotomyReport three_term_trichotomy(const AntisymmetricMatroid& m, const ESubset& t, int p, int q) {
  if (t.classify() != SetKind::Transversal) throw std::invalid_argument("T must be a transversal");
  if (p == q) throw std::invalid_argument("skew pairs must be distinct");
  const int n = t.n();
  const ESubset pp = skew_pair(n, p);
  const ESubset qq = skew_pair(n, q);
  auto both = [&m](const ESubset& a, const ESubset& b) { return m.is_basis(a) && m.is_basis(b); };
  TrichotomyReport r;
  r.present[0] = both((t | pp) - qq, (t - pp) | qq);
  r.present[1] = both(t, t ^ (pp | qq));
  r.present[2] = both(t ^ pp, t ^ qq);
  r.count = r.present[0] + r.present[1] + r.present[2];
  return r;
}

}  // namespace lagmat
