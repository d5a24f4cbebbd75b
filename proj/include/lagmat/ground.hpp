// Ground set +-[n] = {1, ..., n, 1*, ..., n*} with the star involution.
//
// Subsets are 64-bit masks: bit i-1 holds element i and bit n+i-1 holds
// element i*.  Bit order coincides with the linear order
// 1 < ... < n < 1* < ... < n*, so "ascending bitmask" and "counting smaller
// elements" are both plain integer operations.

#ifndef LAGMAT_GROUND_HPP
#define LAGMAT_GROUND_HPP

#include <compare>
#include <cstdint>
#include <stdexcept>
#include <string>
#include <string_view>
#include <vector>

namespace lagmat {

inline constexpr int kMaxHalfSize = 32;

// Thrown when a request exceeds what a 64-bit mask (or a configured guard)
// can hold.
class CapacityError : public std::runtime_error {
 public:
  using std::runtime_error::runtime_error;
};

void require_half_size(int n);

class Element {
 public:
  Element() = default;
  Element(int index, bool starred);

  int index() const { return index_; }
  bool starred() const { return starred_; }
  // chi(i) = 0, chi(i*) = 1.
  int chi() const { return starred_ ? 1 : 0; }
  Element star() const { return Element(index_, !starred_); }
  int bit(int n) const { return starred_ ? n + index_ - 1 : index_ - 1; }
  static Element from_bit(int n, int bit);

  std::string to_string() const;
  static Element parse(std::string_view text);

  friend bool operator==(const Element&, const Element&) = default;
  friend std::strong_ordering operator<=>(const Element& a, const Element& b) {
    if (a.starred_ != b.starred_) return a.starred_ <=> b.starred_;
    return a.index_ <=> b.index_;
  }

 private:
  int index_ = 1;
  bool starred_ = false;
};

enum class SetKind { Transversal, AlmostTransversal, Neither };

const char* to_string(SetKind kind);

class ESubset {
 public:
  ESubset() = default;
  ESubset(int n, std::uint64_t bits);
  static ESubset from_elements(int n, const std::vector<Element>& elements);
  // Comma separated element texts, e.g. "1,2*".  The empty string is the
  // empty set.
  static ESubset parse(int n, std::string_view text);

  int n() const { return n_; }
  std::uint64_t bits() const { return bits_; }
  std::uint64_t low() const { return bits_ & half_mask(); }
  std::uint64_t high() const { return bits_ >> n_; }

  int size() const;
  bool empty() const { return bits_ == 0; }
  bool contains(Element x) const;
  ESubset with(Element x) const;
  ESubset without(Element x) const;
  bool subset_of(const ESubset& other) const {
    return (bits_ & ~other.bits_) == 0;
  }
  int skew_pair_count() const;
  // Mask over [n] of the indices i with {i, i*} inside the set.
  std::uint64_t skew_pairs() const { return low() & high(); }
  // Mask over [n] of the indices i with neither i nor i* in the set.
  std::uint64_t missing_pairs() const { return ~(low() | high()) & half_mask(); }
  ESubset star() const;
  int smaller_count(Element x) const;
  int smaller_or_equal_count(Element x) const;
  SetKind classify() const;
  std::vector<Element> elements() const;
  std::string to_string() const;

  ESubset operator|(const ESubset& o) const { return {n_, bits_ | o.bits_}; }
  ESubset operator&(const ESubset& o) const { return {n_, bits_ & o.bits_}; }
  ESubset operator-(const ESubset& o) const { return {n_, bits_ & ~o.bits_}; }
  ESubset operator^(const ESubset& o) const { return {n_, bits_ ^ o.bits_}; }

  friend bool operator==(const ESubset&, const ESubset&) = default;
  friend std::strong_ordering operator<=>(const ESubset& a, const ESubset& b) {
    if (a.n_ != b.n_) return a.n_ <=> b.n_;
    return a.bits_ <=> b.bits_;
  }

 private:
  std::uint64_t half_mask() const {
    return n_ == 0 ? 0 : (~std::uint64_t{0} >> (64 - n_));
  }

  int n_ = 0;
  std::uint64_t bits_ = 0;
};

ESubset star(const ESubset& s);
int smaller_count(const ESubset& s, Element x);
SetKind classify(const ESubset& s);

// All transversals (or almost-transversals) of +-[n] in ascending bitmask
// order.
std::vector<ESubset> enumerate(int n, SetKind kind);
// T_n and A_n together, ascending.
std::vector<ESubset> coordinates(int n);
// The skew pair {i, i*} and the full ground set.
ESubset skew_pair(int n, int i);
ESubset ground_set(int n);
// [n] itself, i.e. {1, ..., n}.
ESubset unstarred(int n);

// Drops the pair {i, i*} and shifts larger indices down by one.
ESubset remove_pair(const ESubset& s, int i);

// Index pairs (S, T) for the restricted exchange relations: |S| = n+1 with
// exactly one skew pair, |T| = n-1 with none.  |S - T| is the number of
// terms in the relation.
struct RelationPair {
  ESubset s;
  ESubset t;
  int terms = 0;
};
// Ascending in (S, T).  Pairs with more than max_terms terms are skipped.
std::vector<RelationPair> relation_pairs(int n, int max_terms);

}  // namespace lagmat

#endif  // LAGMAT_GROUND_HPP
