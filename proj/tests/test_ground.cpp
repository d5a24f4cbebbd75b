#include "doctest.h"
#include "lagmat/ground.hpp"

#include <set>

using namespace lagmat;

namespace {

ESubset set_of(int n, const char* text) { return ESubset::parse(n, text); }

}  // namespace

TEST_CASE("star is an elementwise involution") {
  CHECK(star(set_of(2, "1,2*")) == set_of(2, "1*,2"));
  const ESubset s = set_of(3, "1,3,2*");
  CHECK(star(star(s)) == s);
  for (const ESubset& t : enumerate(3, SetKind::Transversal)) CHECK(classify(star(t)) == SetKind::Transversal);
  for (int n = 1; n <= 4; ++n)
    for (std::uint64_t b = 0; b < (std::uint64_t{1} << (2 * n)); ++b) {
      const ESubset x(n, b);
      CHECK(classify(x) == classify(star(x)));
      CHECK(star(star(x)) == x);
    }
}

TEST_CASE("smaller_count follows 1 < ... < n < 1* < ... < n*") {
  CHECK(smaller_count(set_of(3, "1,3,1*"), Element(1, true)) == 2);
  CHECK(smaller_count(ESubset(3, 0), Element(2, false)) == 0);
  CHECK(smaller_count(set_of(3, "2,3"), Element(2, false)) == 0);
  CHECK(Element(3, false) < Element(1, true));
}

TEST_CASE("classify") {
  CHECK(classify(set_of(3, "1,2*,3")) == SetKind::Transversal);
  CHECK(classify(set_of(3, "1,1*,2")) == SetKind::AlmostTransversal);
  CHECK(classify(set_of(4, "1,1*,2,2*")) == SetKind::Neither);
  CHECK(classify(set_of(3, "1,2")) == SetKind::Neither);
}

TEST_CASE("enumeration sizes 2^n and n(n-1)2^(n-2)") {
  CHECK(enumerate(3, SetKind::Transversal).size() == 8);
  CHECK(enumerate(3, SetKind::AlmostTransversal).size() == 12);
  CHECK(enumerate(2, SetKind::Transversal).size() == 4);
  CHECK(enumerate(2, SetKind::AlmostTransversal).size() == 2);
  CHECK(enumerate(1, SetKind::Transversal).size() == 2);
  CHECK(enumerate(1, SetKind::AlmostTransversal).empty());
  for (int n = 1; n <= 8; ++n) {
    const auto t = enumerate(n, SetKind::Transversal);
    const auto a = enumerate(n, SetKind::AlmostTransversal);
    CHECK(t.size() == (std::size_t{1} << n));
    CHECK(a.size() == (n >= 2 ? static_cast<std::size_t>(n * (n - 1)) << (n - 2) : 0));
    CHECK(std::is_sorted(t.begin(), t.end()));
    CHECK(std::set<ESubset>(a.begin(), a.end()).size() == a.size());
    for (const ESubset& x : a) CHECK(classify(x) == SetKind::AlmostTransversal);
  }
  CHECK_THROWS_AS(enumerate(33, SetKind::Transversal), CapacityError);
}

TEST_CASE("text forms round-trip") {
  CHECK(Element::parse("3*") == Element(3, true));
  CHECK(Element(3, false).to_string() == "3");
  CHECK_THROWS(Element::parse("3 *"));
  CHECK_THROWS(Element::parse("0"));
  for (const ESubset& x : coordinates(3)) CHECK(ESubset::parse(3, x.to_string()) == x);
  CHECK(ESubset::parse(2, "").empty());
  CHECK_THROWS(ESubset::parse(2, "3"));
}

TEST_CASE("parity identity over subtransversals of size n-2, n <= 5") {
  // S a subtransversal of size n-2 missing the pairs i < j, U = S + {i,i*,j,j*}:
  // i + j = 1 + sum over z in {i,i*,j,j*} of |U<z| mod 2.
  long checked = 0;
  for (int n = 2; n <= 5; ++n) {
    for (std::uint64_t b = 0; b < (std::uint64_t{1} << (2 * n)); ++b) {
      const ESubset s(n, b);
      if (s.skew_pair_count() != 0 || s.size() != n - 2) continue;
      const std::uint64_t missing = s.missing_pairs();
      for (int i = 1; i <= n; ++i)
        for (int j = i + 1; j <= n; ++j) {
          if (!((missing >> (i - 1)) & 1U) || !((missing >> (j - 1)) & 1U)) continue;
          const ESubset u = s | skew_pair(n, i) | skew_pair(n, j);
          int total = 0;
          for (Element z : {Element(i, false), Element(i, true), Element(j, false), Element(j, true)})
            total += smaller_count(u, z);
          CHECK((i + j) % 2 == (1 + total) % 2);
          ++checked;
        }
    }
  }
  CHECK(checked > 0);
}

TEST_CASE("relation pairs") {
  const auto pairs = relation_pairs(2, 99);
  for (const RelationPair& p : pairs) {
    CHECK(p.s.size() == 3);
    CHECK(p.s.skew_pair_count() == 1);
    CHECK(p.t.size() == 1);
    CHECK(p.terms == (p.s - p.t).size());
  }
  // S: 2 skew pairs x 2 choices of the other element; T: 4 singletons.
  CHECK(pairs.size() == 16);
  for (const RelationPair& p : relation_pairs(4, 3)) CHECK(p.terms <= 3);
}

TEST_CASE("remove_pair shifts indices") {
  CHECK(remove_pair(set_of(3, "1,2*,3"), 2) == set_of(2, "1,2"));
  CHECK(remove_pair(set_of(3, "1,1*,3*"), 1) == set_of(2, "2*"));
}
