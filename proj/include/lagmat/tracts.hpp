// Tracts: a multiplicative group with zero plus a set of "null" formal sums.
//
// Supported: Krasner K, sign S, tropical T (positive rationals written
// multiplicatively, null when the maximum repeats), GF(p), Q, the regular
// partial field U0 (units +-1, null when the integer sum vanishes) and the
// initial tract I (only the empty sum and 1 + (-1) are null).

#ifndef LAGMAT_TRACTS_HPP
#define LAGMAT_TRACTS_HPP

#include <gmpxx.h>

#include <compare>
#include <cstdint>
#include <stdexcept>
#include <string>
#include <string_view>
#include <vector>

namespace lagmat {

class TractMismatch : public std::invalid_argument {
 public:
  using std::invalid_argument::invalid_argument;
};

enum class TractKind {
  Krasner,
  Sign,
  Tropical,
  FiniteField,
  Rationals,
  RegularPartialField,
  Initial
};

class TractId {
 public:
  TractId() = default;
  static TractId krasner() { return TractId(TractKind::Krasner, 0); }
  static TractId sign() { return TractId(TractKind::Sign, 0); }
  static TractId tropical() { return TractId(TractKind::Tropical, 0); }
  // p prime, p <= 97.
  static TractId finite_field(int p);
  static TractId rationals() { return TractId(TractKind::Rationals, 0); }
  static TractId regular() { return TractId(TractKind::RegularPartialField, 0); }
  static TractId initial() { return TractId(TractKind::Initial, 0); }

  TractKind kind() const { return kind_; }
  int characteristic() const { return p_; }
  bool is_field() const {
    return kind_ == TractKind::FiniteField || kind_ == TractKind::Rationals;
  }
  // Tag used in JSON: "K", "S", "T", "GF(p)", "Q", "U0", "I".
  std::string tag() const;
  static TractId parse(std::string_view tag);

  friend bool operator==(const TractId&, const TractId&) = default;

 private:
  TractId(TractKind kind, int p) : kind_(kind), p_(p) {}
  TractKind kind_ = TractKind::Krasner;
  int p_ = 0;
};

class TractElement {
 public:
  TractElement() = default;
  static TractElement zero(TractId t);
  static TractElement one(TractId t);
  static TractElement epsilon(TractId t);
  // Integer image: a residue in GF(p), an integer in Q, +-1 in S, U0, I;
  // any nonzero value maps to the unit in K.  Tropical takes positive
  // integers.
  static TractElement from_int(TractId t, long value);
  static TractElement from_rational(TractId t, const mpq_class& value);
  static TractElement parse(TractId t, std::string_view text);

  TractId tract() const { return tract_; }
  bool is_zero() const { return zero_; }
  // +-1 for S, U0, I; residue for GF(p); 1 for K.
  std::int64_t small() const { return small_; }
  // Payload for T and Q.
  const mpq_class& rational() const { return rational_; }

  TractElement operator*(const TractElement& other) const;
  TractElement inverse() const;
  // epsilon * x.
  TractElement negate() const;
  std::string to_string() const;

  friend bool operator==(const TractElement& a, const TractElement& b);
  // Total order used for sorted multisets; zero first.
  friend std::strong_ordering operator<=>(const TractElement& a, const TractElement& b);

 private:
  TractId tract_;
  bool zero_ = true;
  std::int64_t small_ = 0;
  mpq_class rational_;
};

TractElement mul(const TractElement& x, const TractElement& y);
TractElement inv(const TractElement& x);
TractElement epsilon(TractId t);
// epsilon^k.
TractElement epsilon_power(TractId t, long k);

// Field arithmetic, defined for GF(p) and Q only.
TractElement operator+(const TractElement& a, const TractElement& b);
TractElement operator-(const TractElement& a, const TractElement& b);
TractElement operator-(const TractElement& a);

class FormalSum {
 public:
  explicit FormalSum(TractId t) : tract_(t) {}
  FormalSum(TractId t, std::vector<TractElement> terms);

  // Zero terms are dropped.
  void add(const TractElement& x);
  TractId tract() const { return tract_; }
  const std::vector<TractElement>& terms() const { return terms_; }
  FormalSum scaled(const TractElement& unit) const;
  std::string to_string() const;

 private:
  TractId tract_;
  std::vector<TractElement> terms_;
};

bool is_null(const FormalSum& s);

enum class MorphismKind { ToKrasner, RationalsToSign, RegularToField, Identity };

class TractMorphism {
 public:
  static TractMorphism to_krasner(TractId source);
  static TractMorphism rationals_to_sign();
  static TractMorphism regular_to_field(TractId target);
  static TractMorphism identity(TractId t);

  TractId source() const { return source_; }
  TractId target() const { return target_; }
  MorphismKind kind() const { return kind_; }
  TractElement apply(const TractElement& x) const;
  FormalSum apply(const FormalSum& s) const;

 private:
  TractMorphism(TractId s, TractId t, MorphismKind k) : source_(s), target_(t), kind_(k) {}
  TractId source_;
  TractId target_;
  MorphismKind kind_;
};

TractElement morphism_apply(const TractMorphism& m, const TractElement& x);

// Every nonzero element of a finite tract (K, S, U0, I, GF(p)).
std::vector<TractElement> finite_units(TractId t);

}  // namespace lagmat

#endif  // LAGMAT_TRACTS_HPP
