#include "lagmat/matroids.hpp"

#include <algorithm>
#include <bit>
#include <stdexcept>

#include "lagmat/ground.hpp"

namespace lagmat {

namespace {

void require_ground(int n) {
  if (n < 0 || n > kMaxMatroidGround)
    throw CapacityError("matroid ground size " + std::to_string(n) + " outside [0, 20]");
}

Mask full(int n) { return n == 0 ? 0 : (~Mask{0} >> (32 - n)); }

bool contains(const std::vector<Mask>& sorted, Mask b) {
  return std::binary_search(sorted.begin(), sorted.end(), b);
}

int count_below(Mask s, int e) { return std::popcount(s & ((Mask{1} << e) - 1)); }

}  // namespace

std::string mask_to_string(Mask m) {
  std::string out;
  for (int i = 0; m >> i; ++i) {
    if (!((m >> i) & 1U)) continue;
    if (!out.empty()) out += ',';
    out += std::to_string(i + 1);
  }
  return out;
}

Mask parse_mask(int n, const std::string& text) {
  ESubset s = ESubset::parse(n, text);
  if (s.high() != 0) throw std::invalid_argument("starred element in a subset of [n]: '" + text + "'");
  return static_cast<Mask>(s.low());
}

std::vector<Mask> subsets_of_size(int n, int r) {
  require_ground(n);
  std::vector<Mask> out;
  for (Mask s = 0; s <= full(n); ++s) {
    if (std::popcount(s) == r) out.push_back(s);
    if (s == full(n)) break;
  }
  return out;
}

ExchangeReport check_basis_exchange(int n, const std::vector<Mask>& family) {
  require_ground(n);
  std::vector<Mask> sorted = family;
  std::sort(sorted.begin(), sorted.end());
  sorted.erase(std::unique(sorted.begin(), sorted.end()), sorted.end());
  ExchangeReport report;
  if (sorted.empty()) return report;
  for (Mask b : sorted) {
    for (Mask bp : sorted) {
      for (int e = 0; e < n; ++e) {
        if (!((b >> e) & 1U) || ((bp >> e) & 1U)) continue;
        bool found = false;
        for (int f = 0; f < n && !found; ++f) {
          if (!((bp >> f) & 1U) || ((b >> f) & 1U)) continue;
          Mask x = (b & ~(Mask{1} << e)) | (Mask{1} << f);
          Mask y = (bp & ~(Mask{1} << f)) | (Mask{1} << e);
          found = contains(sorted, x) && contains(sorted, y);
        }
        if (!found) {
          report.witness = ExchangeWitness{b, bp, e + 1};
          return report;
        }
      }
    }
  }
  report.ok = true;
  return report;
}

Matroid::Matroid(int n, std::vector<Mask> bases) : n_(n), bases_(std::move(bases)) {
  require_ground(n);
  std::sort(bases_.begin(), bases_.end());
  bases_.erase(std::unique(bases_.begin(), bases_.end()), bases_.end());
  for (Mask b : bases_)
    if (b & ~full(n)) throw std::invalid_argument("basis outside [n]");
  ExchangeReport r = check_basis_exchange(n, bases_);
  if (!r.ok) {
    std::string why = bases_.empty() ? "empty basis family"
                                     : "basis exchange fails at B=" + mask_to_string(r.witness->b) +
                                           ", B'=" + mask_to_string(r.witness->b_prime) +
                                           ", e=" + std::to_string(r.witness->e);
    throw std::invalid_argument(why);
  }
  rank_ = std::popcount(bases_.front());
}

Matroid Matroid::uniform(int r, int n) { return Matroid(n, subsets_of_size(n, r)); }

bool Matroid::is_basis(Mask b) const { return contains(bases_, b); }

bool Matroid::is_independent(Mask s) const {
  for (Mask b : bases_)
    if ((s & ~b) == 0) return true;
  return false;
}

std::vector<Mask> circuits(const Matroid& m) {
  std::vector<Mask> out;
  for (Mask s = 0;; ++s) {
    if (!m.is_independent(s)) {
      bool minimal = true;
      for (int e = 0; e < m.n() && minimal; ++e)
        if ((s >> e) & 1U) minimal = m.is_independent(s & ~(Mask{1} << e));
      if (minimal) out.push_back(s);
    }
    if (s == full(m.n())) break;
  }
  return out;
}

Matroid dual(const Matroid& m) {
  std::vector<Mask> bases;
  for (Mask b : m.bases()) bases.push_back(full(m.n()) & ~b);
  return Matroid(m.n(), bases);
}

std::vector<Mask> cocircuits(const Matroid& m) { return circuits(dual(m)); }

Mask squeeze_mask(Mask s, int i) {
  Mask below = s & ((Mask{1} << (i - 1)) - 1);
  Mask above = (s >> i) << (i - 1);
  return below | above;
}

Matroid contract(const Matroid& m, int i) {
  if (i < 1 || i > m.n()) throw std::invalid_argument("element outside ground set");
  const Mask bit = Mask{1} << (i - 1);
  bool loop = std::none_of(m.bases().begin(), m.bases().end(), [bit](Mask b) { return b & bit; });
  std::vector<Mask> bases;
  for (Mask b : m.bases())
    if (loop || (b & bit)) bases.push_back(squeeze_mask(b & ~bit, i));
  return Matroid(m.n() - 1, bases);
}

Matroid delete_element(const Matroid& m, int i) {
  if (i < 1 || i > m.n()) throw std::invalid_argument("element outside ground set");
  const Mask bit = Mask{1} << (i - 1);
  bool coloop = std::all_of(m.bases().begin(), m.bases().end(), [bit](Mask b) { return b & bit; });
  std::vector<Mask> bases;
  for (Mask b : m.bases())
    if (coloop || !(b & bit)) bases.push_back(squeeze_mask(b & ~bit, i));
  return Matroid(m.n() - 1, bases);
}

MintyReport check_minty(const std::vector<Mask>& c, const std::vector<Mask>& d, int n) {
  require_ground(n);
  MintyReport report;
  auto clutter_problem = [](const std::vector<Mask>& family) -> std::string {
    for (Mask x : family) {
      if (x == 0) return "contains the empty set";
      for (Mask y : family)
        if (x != y && (x & ~y) == 0) return "not a clutter: " + mask_to_string(x) + " inside " + mask_to_string(y);
    }
    return {};
  };
  if (auto p = clutter_problem(c); !p.empty()) {
    report.failure = "C " + p;
    return report;
  }
  if (auto p = clutter_problem(d); !p.empty()) {
    report.failure = "D " + p;
    return report;
  }
  for (Mask x : c)
    for (Mask y : d)
      if (std::popcount(x & y) == 1) {
        report.failure = "|C & D| = 1 for C=" + mask_to_string(x) + ", D=" + mask_to_string(y);
        return report;
      }
  const Mask all = full(n);
  for (int e = 0; e < n; ++e) {
    const Mask eb = Mask{1} << e;
    const Mask rest = all & ~eb;
    // P ranges over subsets of the other elements; Q is what is left.
    for (Mask p = rest;; p = (p - 1) & rest) {
      Mask q = rest & ~p;
      bool covered = false;
      for (Mask x : c)
        if ((x & eb) && (x & ~(p | eb)) == 0) covered = true;
      for (Mask y : d)
        if ((y & eb) && (y & ~(q | eb)) == 0) covered = true;
      if (!covered) {
        report.failure = "tripartition (" + mask_to_string(p) + " | " + mask_to_string(q) + " | " +
                         std::to_string(e + 1) + ") uncovered";
        return report;
      }
      if (p == 0) break;
    }
  }
  report.ok = true;
  return report;
}

std::vector<Matroid> all_matroids(int n) {
  if (n > 5) throw CapacityError("all_matroids enumerates only n <= 5");
  std::vector<Matroid> out;
  for (int r = 0; r <= n; ++r) {
    std::vector<Mask> candidates = subsets_of_size(n, r);
    const std::size_t k = candidates.size();
    for (std::uint64_t pick = 1; pick < (std::uint64_t{1} << k); ++pick) {
      std::vector<Mask> family;
      for (std::size_t j = 0; j < k; ++j)
        if ((pick >> j) & 1U) family.push_back(candidates[j]);
      if (check_basis_exchange(n, family).ok) out.emplace_back(n, family);
    }
  }
  return out;
}

int permutation_sign(int n, Mask b) {
  // Inversions: pairs (x in B, y outside B) with x > y.
  long inversions = 0;
  for (int x = 0; x < n; ++x) {
    if (!((b >> x) & 1U)) continue;
    inversions += x - count_below(b, x);
  }
  return inversions % 2 == 0 ? 1 : -1;
}

GPFunction::GPFunction(TractId tract, int n, int r) : tract_(tract), n_(n), r_(r) {
  require_ground(n);
  if (r < 0 || r > n) throw std::invalid_argument("rank outside [0, n]");
  domain_ = subsets_of_size(n, r);
  values_.assign(domain_.size(), TractElement::zero(tract));
}

const TractElement& GPFunction::operator()(Mask b) const {
  auto it = std::lower_bound(domain_.begin(), domain_.end(), b);
  if (it == domain_.end() || *it != b) throw std::invalid_argument("subset of wrong size: " + mask_to_string(b));
  return values_[static_cast<std::size_t>(it - domain_.begin())];
}

void GPFunction::set(Mask b, const TractElement& value) {
  if (!(value.tract() == tract_)) throw TractMismatch("value from another tract");
  auto it = std::lower_bound(domain_.begin(), domain_.end(), b);
  if (it == domain_.end() || *it != b) throw std::invalid_argument("subset of wrong size: " + mask_to_string(b));
  values_[static_cast<std::size_t>(it - domain_.begin())] = value;
}

std::vector<Mask> GPFunction::support() const {
  std::vector<Mask> out;
  for (std::size_t k = 0; k < domain_.size(); ++k)
    if (!values_[k].is_zero()) out.push_back(domain_[k]);
  return out;
}

bool check_gp(const GPFunction& psi) {
  if (psi.support().empty()) throw std::invalid_argument("identically zero Grassmann-Pluecker function");
  const int n = psi.n();
  const int r = psi.rank();
  if (r == 0 || r == n) return true;
  for (Mask s : subsets_of_size(n, r + 1)) {
    for (Mask t : subsets_of_size(n, r - 1)) {
      FormalSum sum(psi.tract());
      for (int x = 0; x < n; ++x) {
        const Mask xb = Mask{1} << x;
        if (!(s & xb) || (t & xb)) continue;
        int exponent = count_below(s, x) + count_below(t, x);
        sum.add(epsilon_power(psi.tract(), exponent) * psi(s & ~xb) * psi(t | xb));
      }
      if (!is_null(sum)) return false;
    }
  }
  return true;
}

GPFunction gp_dual(const GPFunction& psi) {
  const int n = psi.n();
  GPFunction out(psi.tract(), n, n - psi.rank());
  for (Mask b : psi.domain())
    out.set(full(n) & ~b, epsilon_power(psi.tract(), permutation_sign(n, b) < 0 ? 1 : 0) * psi(b));
  return out;
}

}  // namespace lagmat
