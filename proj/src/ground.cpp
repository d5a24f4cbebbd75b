#include "lagmat/ground.hpp"

#include <algorithm>
#include <bit>
#include <charconv>

namespace lagmat {

void require_half_size(int n) {
  if (n < 0) throw std::invalid_argument("negative ground-set size");
  if (n > kMaxHalfSize)
    throw CapacityError("n = " + std::to_string(n) + " exceeds the 64-bit mask width");
}

Element::Element(int index, bool starred) : index_(index), starred_(starred) {
  if (index < 1) throw std::invalid_argument("element index must be positive");
}

Element Element::from_bit(int n, int bit) {
  return bit < n ? Element(bit + 1, false) : Element(bit - n + 1, true);
}

std::string Element::to_string() const {
  return std::to_string(index_) + (starred_ ? "*" : "");
}

Element Element::parse(std::string_view text) {
  bool starred = false;
  if (!text.empty() && text.back() == '*') {
    starred = true;
    text.remove_suffix(1);
  }
  int value = 0;
  auto [ptr, ec] = std::from_chars(text.data(), text.data() + text.size(), value);
  if (text.empty() || ec != std::errc() || ptr != text.data() + text.size() || value < 1)
    throw std::invalid_argument("bad element text '" + std::string(text) + "'");
  return Element(value, starred);
}

const char* to_string(SetKind kind) {
  switch (kind) {
    case SetKind::Transversal: return "Transversal";
    case SetKind::AlmostTransversal: return "AlmostTransversal";
    case SetKind::Neither: return "Neither";
  }
  return "?";
}

ESubset::ESubset(int n, std::uint64_t bits) : n_(n), bits_(bits) {
  require_half_size(n);
  if (2 * n < 64 && (bits >> (2 * n)) != 0)
    throw std::invalid_argument("mask has bits outside the ground set");
}

ESubset ESubset::from_elements(int n, const std::vector<Element>& elements) {
  ESubset s(n, 0);
  for (const Element& x : elements) s = s.with(x);
  return s;
}

ESubset ESubset::parse(int n, std::string_view text) {
  ESubset s(n, 0);
  while (!text.empty()) {
    auto comma = text.find(',');
    std::string_view piece = text.substr(0, comma);
    Element x = Element::parse(piece);
    if (s.contains(x)) throw std::invalid_argument("repeated element " + x.to_string());
    s = s.with(x);
    if (comma == std::string_view::npos) break;
    text.remove_prefix(comma + 1);
    if (text.empty()) throw std::invalid_argument("trailing comma in subset text");
  }
  return s;
}

int ESubset::size() const { return std::popcount(bits_); }

bool ESubset::contains(Element x) const {
  if (x.index() > n_) return false;
  return (bits_ >> x.bit(n_)) & 1U;
}

ESubset ESubset::with(Element x) const {
  if (x.index() > n_)
    throw std::invalid_argument("element " + x.to_string() + " outside +-[" + std::to_string(n_) + "]");
  return {n_, bits_ | (std::uint64_t{1} << x.bit(n_))};
}

ESubset ESubset::without(Element x) const {
  if (x.index() > n_) return *this;
  return {n_, bits_ & ~(std::uint64_t{1} << x.bit(n_))};
}

int ESubset::skew_pair_count() const { return std::popcount(skew_pairs()); }

ESubset ESubset::star() const { return {n_, (low() << n_) | high()}; }

int ESubset::smaller_count(Element x) const {
  if (x.index() > n_) throw std::invalid_argument("element outside ground set");
  std::uint64_t below = (std::uint64_t{1} << x.bit(n_)) - 1;
  return std::popcount(bits_ & below);
}

int ESubset::smaller_or_equal_count(Element x) const {
  return smaller_count(x) + (contains(x) ? 1 : 0);
}

SetKind ESubset::classify() const {
  if (size() != n_) return SetKind::Neither;
  switch (skew_pair_count()) {
    case 0: return SetKind::Transversal;
    case 1: return SetKind::AlmostTransversal;
    default: return SetKind::Neither;
  }
}

std::vector<Element> ESubset::elements() const {
  std::vector<Element> out;
  for (std::uint64_t b = bits_; b != 0; b &= b - 1)
    out.push_back(Element::from_bit(n_, std::countr_zero(b)));
  return out;
}

std::string ESubset::to_string() const {
  std::string out;
  for (const Element& x : elements()) {
    if (!out.empty()) out += ',';
    out += x.to_string();
  }
  return out;
}

ESubset star(const ESubset& s) { return s.star(); }
int smaller_count(const ESubset& s, Element x) { return s.smaller_count(x); }
SetKind classify(const ESubset& s) { return s.classify(); }

namespace {

// Spreads the bits of `choice` over the indices in `free` (a mask over [n])
// and returns the transversal of those indices: index i gets i when its bit
// is set, i* otherwise.
std::uint64_t partial_transversal(int n, std::uint64_t free, std::uint64_t choice) {
  std::uint64_t out = 0;
  int k = 0;
  for (int i = 0; i < n; ++i) {
    if (!((free >> i) & 1U)) continue;
    if ((choice >> k) & 1U)
      out |= std::uint64_t{1} << i;
    else
      out |= std::uint64_t{1} << (n + i);
    ++k;
  }
  return out;
}

std::uint64_t full_half(int n) {
  return n == 0 ? 0 : (~std::uint64_t{0} >> (64 - n));
}

}  // namespace

std::vector<ESubset> enumerate(int n, SetKind kind) {
  require_half_size(n);
  if (n > 24) throw CapacityError("enumeration beyond n = 24 does not fit in memory");
  std::vector<ESubset> out;
  const std::uint64_t all = full_half(n);
  if (kind == SetKind::Transversal) {
    for (std::uint64_t m = 0; m < (std::uint64_t{1} << n); ++m)
      out.emplace_back(n, m | ((~m & all) << n));
  } else if (kind == SetKind::AlmostTransversal) {
    for (int p = 0; p < n; ++p) {
      for (int q = 0; q < n; ++q) {
        if (p == q) continue;
        std::uint64_t rest = all & ~(std::uint64_t{1} << p) & ~(std::uint64_t{1} << q);
        std::uint64_t pair = (std::uint64_t{1} << p) | (std::uint64_t{1} << (n + p));
        for (std::uint64_t c = 0; c < (std::uint64_t{1} << (n - 2)); ++c)
          out.emplace_back(n, pair | partial_transversal(n, rest, c));
      }
    }
  } else {
    throw std::invalid_argument("enumerate expects Transversal or AlmostTransversal");
  }
  std::sort(out.begin(), out.end());
  return out;
}

std::vector<ESubset> coordinates(int n) {
  std::vector<ESubset> out = enumerate(n, SetKind::Transversal);
  std::vector<ESubset> almost = enumerate(n, SetKind::AlmostTransversal);
  out.insert(out.end(), almost.begin(), almost.end());
  std::sort(out.begin(), out.end());
  return out;
}

ESubset skew_pair(int n, int i) {
  return ESubset(n, 0).with(Element(i, false)).with(Element(i, true));
}

ESubset ground_set(int n) {
  require_half_size(n);
  return {n, full_half(n) | (full_half(n) << n)};
}

ESubset unstarred(int n) {
  require_half_size(n);
  return {n, full_half(n)};
}

ESubset remove_pair(const ESubset& s, int i) {
  const int n = s.n();
  if (i < 1 || i > n) throw std::invalid_argument("pair index out of range");
  auto squeeze = [i](std::uint64_t half) {
    std::uint64_t below = half & ((std::uint64_t{1} << (i - 1)) - 1);
    std::uint64_t above = (half >> i) << (i - 1);
    return below | above;
  };
  return {n - 1, squeeze(s.low()) | (squeeze(s.high()) << (n - 1))};
}

std::vector<RelationPair> relation_pairs(int n, int max_terms) {
  require_half_size(n);
  std::vector<ESubset> big;
  std::vector<ESubset> small;
  const std::uint64_t all = full_half(n);
  for (int p = 0; p < n; ++p) {
    std::uint64_t rest = all & ~(std::uint64_t{1} << p);
    std::uint64_t pair = (std::uint64_t{1} << p) | (std::uint64_t{1} << (n + p));
    for (std::uint64_t c = 0; c < (std::uint64_t{1} << (n - 1)); ++c) {
      big.emplace_back(n, pair | partial_transversal(n, rest, c));
      small.emplace_back(n, partial_transversal(n, rest, c));
    }
  }
  std::sort(big.begin(), big.end());
  std::sort(small.begin(), small.end());
  std::vector<RelationPair> out;
  for (const ESubset& s : big) {
    for (const ESubset& t : small) {
      int terms = (s - t).size();
      if (terms <= max_terms) out.push_back({s, t, terms});
    }
  }
  return out;
}

}  // namespace lagmat
