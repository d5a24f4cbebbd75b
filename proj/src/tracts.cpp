#include "lagmat/tracts.hpp"

#include <algorithm>
#include <charconv>

namespace lagmat {

namespace {

bool is_prime(int p) {
  if (p < 2) return false;
  for (int d = 2; static_cast<long>(d) * d <= p; ++d)
    if (p % d == 0) return false;
  return true;
}

bool has_sign_payload(TractKind k) {
  return k == TractKind::Sign || k == TractKind::RegularPartialField || k == TractKind::Initial;
}

bool has_rational_payload(TractKind k) {
  return k == TractKind::Tropical || k == TractKind::Rationals;
}

std::int64_t mod(std::int64_t a, std::int64_t p) {
  a %= p;
  return a < 0 ? a + p : a;
}

std::int64_t mod_pow(std::int64_t b, std::int64_t e, std::int64_t p) {
  std::int64_t r = 1;
  b = mod(b, p);
  while (e > 0) {
    if (e & 1) r = r * b % p;
    b = b * b % p;
    e >>= 1;
  }
  return r;
}

void require_same(const TractElement& a, const TractElement& b) {
  if (!(a.tract() == b.tract()))
    throw TractMismatch("tract mismatch: " + a.tract().tag() + " vs " + b.tract().tag());
}

void require_field(TractId t) {
  if (!t.is_field()) throw TractMismatch("addition is only defined over GF(p) and Q, not " + t.tag());
}

}  // namespace

TractId TractId::finite_field(int p) {
  if (!is_prime(p)) throw std::invalid_argument("GF(p) needs a prime p, got " + std::to_string(p));
  if (p > 97) throw std::invalid_argument("GF(p) limited to p <= 97, got " + std::to_string(p));
  return TractId(TractKind::FiniteField, p);
}

std::string TractId::tag() const {
  switch (kind_) {
    case TractKind::Krasner: return "K";
    case TractKind::Sign: return "S";
    case TractKind::Tropical: return "T";
    case TractKind::FiniteField: return "GF(" + std::to_string(p_) + ")";
    case TractKind::Rationals: return "Q";
    case TractKind::RegularPartialField: return "U0";
    case TractKind::Initial: return "I";
  }
  return "?";
}

TractId TractId::parse(std::string_view tag) {
  if (tag == "K") return krasner();
  if (tag == "S") return sign();
  if (tag == "T") return tropical();
  if (tag == "Q") return rationals();
  if (tag == "U0") return regular();
  if (tag == "I") return initial();
  if (tag.size() > 4 && tag.substr(0, 3) == "GF(" && tag.back() == ')') {
    std::string_view digits = tag.substr(3, tag.size() - 4);
    int p = 0;
    auto [ptr, ec] = std::from_chars(digits.data(), digits.data() + digits.size(), p);
    if (ec == std::errc() && ptr == digits.data() + digits.size()) return finite_field(p);
  }
  throw std::invalid_argument("unknown tract tag '" + std::string(tag) + "'");
}

TractElement TractElement::zero(TractId t) {
  TractElement x;
  x.tract_ = t;
  return x;
}

TractElement TractElement::one(TractId t) {
  TractElement x;
  x.tract_ = t;
  x.zero_ = false;
  x.small_ = 1;
  if (has_rational_payload(t.kind())) x.rational_ = 1;
  return x;
}

TractElement TractElement::epsilon(TractId t) {
  switch (t.kind()) {
    case TractKind::Krasner:
    case TractKind::Tropical:
      return one(t);
    default:
      return from_int(t, -1);
  }
}

TractElement TractElement::from_int(TractId t, long value) {
  if (value == 0) return zero(t);
  TractElement x = one(t);
  switch (t.kind()) {
    case TractKind::Krasner:
      break;
    case TractKind::Sign:
    case TractKind::RegularPartialField:
    case TractKind::Initial:
      if (value != 1 && value != -1 && t.kind() != TractKind::Sign)
        throw std::invalid_argument(t.tag() + " has units +-1 only");
      x.small_ = value > 0 ? 1 : -1;
      break;
    case TractKind::FiniteField:
      x.small_ = mod(value, t.characteristic());
      if (x.small_ == 0) return zero(t);
      break;
    case TractKind::Rationals:
      x.rational_ = value;
      break;
    case TractKind::Tropical:
      if (value < 0) throw std::invalid_argument("tropical units are positive rationals");
      x.rational_ = value;
      break;
  }
  return x;
}

TractElement TractElement::from_rational(TractId t, const mpq_class& value) {
  if (value == 0) return zero(t);
  switch (t.kind()) {
    case TractKind::Rationals:
    case TractKind::Tropical: {
      if (t.kind() == TractKind::Tropical && value < 0)
        throw std::invalid_argument("tropical units are positive rationals");
      TractElement x = one(t);
      x.rational_ = value;
      x.rational_.canonicalize();
      return x;
    }
    case TractKind::FiniteField: {
      std::int64_t p = t.characteristic();
      mpz_class num = value.get_num() % p;
      mpz_class den = value.get_den() % p;
      if (den == 0) throw std::invalid_argument("denominator vanishes in " + t.tag());
      std::int64_t a = mod(num.get_si(), p);
      std::int64_t b = mod(den.get_si(), p);
      return from_int(t, static_cast<long>(a * mod_pow(b, p - 2, p) % p));
    }
    default:
      if (value.get_den() != 1 || !value.get_num().fits_slong_p())
        throw std::invalid_argument("non-integer value for " + t.tag());
      return from_int(t, value.get_num().get_si());
  }
}

TractElement TractElement::parse(TractId t, std::string_view text) {
  std::string s(text);
  mpq_class q;
  if (s.empty() || q.set_str(s, 10) != 0)
    throw std::invalid_argument("bad " + t.tag() + " value '" + s + "'");
  if (q.get_den() == 0) throw std::invalid_argument("zero denominator in '" + s + "'");
  q.canonicalize();
  if (t.kind() == TractKind::FiniteField && (q < 0 || q >= t.characteristic() || q.get_den() != 1))
    throw std::invalid_argument("residue out of range for " + t.tag() + ": '" + s + "'");
  if (has_sign_payload(t.kind()) && q != 0 && q != 1 && q != -1)
    throw std::invalid_argument(t.tag() + " values are 0 or +-1, got '" + s + "'");
  if (t.kind() == TractKind::Krasner && q != 0 && q != 1)
    throw std::invalid_argument("K values are 0 or 1, got '" + s + "'");
  return from_rational(t, q);
}

TractElement TractElement::operator*(const TractElement& other) const {
  require_same(*this, other);
  if (zero_ || other.zero_) return zero(tract_);
  TractElement x = one(tract_);
  switch (tract_.kind()) {
    case TractKind::Krasner:
      break;
    case TractKind::FiniteField:
      x.small_ = small_ * other.small_ % tract_.characteristic();
      break;
    case TractKind::Rationals:
    case TractKind::Tropical:
      x.rational_ = rational_ * other.rational_;
      break;
    default:
      x.small_ = small_ * other.small_;
  }
  return x;
}

TractElement TractElement::inverse() const {
  if (zero_) throw std::domain_error("inverse of zero");
  TractElement x = *this;
  if (tract_.kind() == TractKind::FiniteField)
    x.small_ = mod_pow(small_, tract_.characteristic() - 2, tract_.characteristic());
  else if (has_rational_payload(tract_.kind()))
    x.rational_ = 1 / rational_;
  return x;
}

TractElement TractElement::negate() const { return epsilon(tract_) * (*this); }

std::string TractElement::to_string() const {
  if (zero_) return "0";
  if (has_rational_payload(tract_.kind()))
    return rational_.get_num().get_str() + "/" + rational_.get_den().get_str();
  return std::to_string(small_);
}

bool operator==(const TractElement& a, const TractElement& b) {
  if (!(a.tract_ == b.tract_) || a.zero_ != b.zero_) return false;
  if (a.zero_) return true;
  if (has_rational_payload(a.tract_.kind())) return a.rational_ == b.rational_;
  return a.small_ == b.small_;
}

std::strong_ordering operator<=>(const TractElement& a, const TractElement& b) {
  if (a.zero_ != b.zero_) return a.zero_ ? std::strong_ordering::less : std::strong_ordering::greater;
  if (a.zero_) return std::strong_ordering::equal;
  if (has_rational_payload(a.tract_.kind())) {
    int c = cmp(a.rational_, b.rational_);
    return c < 0 ? std::strong_ordering::less
                 : (c > 0 ? std::strong_ordering::greater : std::strong_ordering::equal);
  }
  return a.small_ <=> b.small_;
}

TractElement mul(const TractElement& x, const TractElement& y) { return x * y; }
TractElement inv(const TractElement& x) { return x.inverse(); }
TractElement epsilon(TractId t) { return TractElement::epsilon(t); }

TractElement epsilon_power(TractId t, long k) {
  return (k % 2 == 0) ? TractElement::one(t) : TractElement::epsilon(t);
}

TractElement operator+(const TractElement& a, const TractElement& b) {
  require_same(a, b);
  require_field(a.tract());
  if (a.is_zero()) return b;
  if (b.is_zero()) return a;
  if (a.tract().kind() == TractKind::FiniteField)
    return TractElement::from_int(a.tract(), static_cast<long>((a.small() + b.small()) % a.tract().characteristic()));
  return TractElement::from_rational(a.tract(), a.rational() + b.rational());
}

TractElement operator-(const TractElement& a) {
  require_field(a.tract());
  return a.negate();
}

TractElement operator-(const TractElement& a, const TractElement& b) { return a + (-b); }

FormalSum::FormalSum(TractId t, std::vector<TractElement> terms) : tract_(t) {
  for (const auto& x : terms) add(x);
}

void FormalSum::add(const TractElement& x) {
  if (!(x.tract() == tract_)) throw TractMismatch("formal sum over " + tract_.tag() + " got " + x.tract().tag());
  if (x.is_zero()) return;
  terms_.insert(std::upper_bound(terms_.begin(), terms_.end(), x), x);
}

FormalSum FormalSum::scaled(const TractElement& unit) const {
  FormalSum out(tract_);
  for (const auto& x : terms_) out.add(x * unit);
  return out;
}

std::string FormalSum::to_string() const {
  if (terms_.empty()) return "0";
  std::string out;
  for (const auto& x : terms_) {
    if (!out.empty()) out += " + ";
    out += x.to_string();
  }
  return out;
}

bool is_null(const FormalSum& s) {
  const auto& terms = s.terms();
  if (terms.empty()) return true;
  const TractId t = s.tract();
  switch (t.kind()) {
    case TractKind::Krasner:
      return terms.size() != 1;
    case TractKind::Sign:
      return terms.front().small() < 0 && terms.back().small() > 0;
    case TractKind::Tropical:
      return terms.size() >= 2 && terms[terms.size() - 1] == terms[terms.size() - 2];
    case TractKind::FiniteField: {
      std::int64_t sum = 0;
      for (const auto& x : terms) sum = (sum + x.small()) % t.characteristic();
      return sum == 0;
    }
    case TractKind::Rationals: {
      mpq_class sum = 0;
      for (const auto& x : terms) sum += x.rational();
      return sum == 0;
    }
    case TractKind::RegularPartialField: {
      std::int64_t sum = 0;
      for (const auto& x : terms) sum += x.small();
      return sum == 0;
    }
    case TractKind::Initial:
      return terms.size() == 2 && terms[0].small() == -1 && terms[1].small() == 1;
  }
  return false;
}

TractMorphism TractMorphism::to_krasner(TractId source) {
  return TractMorphism(source, TractId::krasner(), MorphismKind::ToKrasner);
}

TractMorphism TractMorphism::rationals_to_sign() {
  return TractMorphism(TractId::rationals(), TractId::sign(), MorphismKind::RationalsToSign);
}

TractMorphism TractMorphism::regular_to_field(TractId target) {
  if (!target.is_field()) throw std::invalid_argument("U0 maps only into GF(p) or Q, not " + target.tag());
  return TractMorphism(TractId::regular(), target, MorphismKind::RegularToField);
}

TractMorphism TractMorphism::identity(TractId t) { return TractMorphism(t, t, MorphismKind::Identity); }

TractElement TractMorphism::apply(const TractElement& x) const {
  if (!(x.tract() == source_))
    throw TractMismatch("morphism from " + source_.tag() + " applied to " + x.tract().tag());
  if (x.is_zero()) return TractElement::zero(target_);
  switch (kind_) {
    case MorphismKind::ToKrasner:
      return TractElement::one(target_);
    case MorphismKind::RationalsToSign:
      return TractElement::from_int(target_, sgn(x.rational()));
    case MorphismKind::RegularToField:
      return TractElement::from_int(target_, static_cast<long>(x.small()));
    case MorphismKind::Identity:
      return x;
  }
  throw std::logic_error("unsupported morphism kind");
}

FormalSum TractMorphism::apply(const FormalSum& s) const {
  FormalSum out(target_);
  for (const auto& x : s.terms()) out.add(apply(x));
  return out;
}

TractElement morphism_apply(const TractMorphism& m, const TractElement& x) { return m.apply(x); }

std::vector<TractElement> finite_units(TractId t) {
  std::vector<TractElement> out;
  switch (t.kind()) {
    case TractKind::Krasner:
      out.push_back(TractElement::one(t));
      break;
    case TractKind::Sign:
    case TractKind::RegularPartialField:
    case TractKind::Initial:
      out.push_back(TractElement::from_int(t, -1));
      out.push_back(TractElement::one(t));
      break;
    case TractKind::FiniteField:
      for (int a = 1; a < t.characteristic(); ++a) out.push_back(TractElement::from_int(t, a));
      break;
    default:
      throw std::invalid_argument(t.tag() + " has infinitely many units");
  }
  return out;
}

}  // namespace lagmat
