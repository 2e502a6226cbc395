#include "doctest.h"

#include <algorithm>
#include <bit>
#include <stdexcept>

#include "rankmap/ring.hpp"

using namespace rankmap;

namespace {

RingInstance table_zmod(std::size_t n) { return RingInstance::table(TableRing::zmod(n)); }
RingInstance f4() { return RingInstance::table(TableRing::f2_quotient(0b111)); }

std::vector<std::int64_t> tags(const std::vector<PrimeIdeal>& primes) {
  std::vector<std::int64_t> out;
  for (const auto& p : primes) out.push_back(p.kind == PrimeIdeal::Kind::generic ? 0 : p.p);
  return out;
}

}  // namespace

TEST_CASE("table ring validation names the failed axiom") {
  // Commutative group table with a non-associative "multiplication".
  std::vector<std::vector<std::size_t>> add{{0, 1}, {1, 0}};
  std::vector<std::vector<std::size_t>> bad_mul{{0, 1}, {1, 1}};  // 0*1 = 1 breaks distributivity
  try {
    TableRing({"a", "b"}, add, bad_mul);
    FAIL("expected RingAxiomError");
  } catch (const RingAxiomError& e) {
    CHECK_FALSE(e.axiom().empty());
  }
  std::vector<std::vector<std::size_t>> noncomm{{0, 1}, {0, 1}};
  CHECK_THROWS_AS(TableRing({"a", "b"}, add, noncomm), RingAxiomError);
  CHECK_THROWS_AS(TableRing({"a", "a"}, add, add), std::invalid_argument);
  CHECK_NOTHROW(TableRing::zmod(6));
  CHECK_NOTHROW(TableRing::f2_quotient(0b1011));
  CHECK_NOTHROW(TableRing::product(TableRing::zmod(2), TableRing::zmod(3)));
}

TEST_CASE("semi-local integers validate their primes") {
  CHECK_THROWS_AS(RingInstance::zloc({}), std::invalid_argument);
  CHECK_THROWS_AS(RingInstance::zloc({2, 2}), std::invalid_argument);
  CHECK_THROWS_AS(RingInstance::zloc({4}), std::invalid_argument);
  CHECK(RingInstance::zloc({3, 2}).as_zloc().primes == std::vector<std::int64_t>{2, 3});
  CHECK_THROWS_AS(RingInstance::zmod(0), std::invalid_argument);
}

TEST_CASE("enum_primes") {
  CHECK(tags(enum_primes(RingInstance::zmod(12))) == std::vector<std::int64_t>{2, 3});
  CHECK(enum_primes(RingInstance::zmod(1)).empty());
  const auto z = enum_primes(RingInstance::zloc({2, 3}));
  REQUIRE(z.size() == 3);
  CHECK(z[0].kind == PrimeIdeal::Kind::generic);
  CHECK(tags(z) == std::vector<std::int64_t>{0, 2, 3});
}

TEST_CASE("specialization order") {
  const auto a = specialization_order(RingInstance::zmod(12));
  CHECK(a.size() == 2);
  CHECK(a.covers().empty());
  const auto z = specialization_order(RingInstance::zloc({2, 3}));
  REQUIRE(z.size() == 3);
  CHECK(z.leq(0, 1));
  CHECK(z.leq(0, 2));
  CHECK_FALSE(z.leq(1, 2));
  CHECK_FALSE(z.leq(1, 0));
  CHECK(specialization_order(table_zmod(4)).size() == 1);
}

TEST_CASE("residue fields") {
  CHECK(residue_field(RingInstance::zmod(12), PrimeIdeal::rational(2)).size() == 2U);
  CHECK(residue_field(RingInstance::zloc({2, 3}), PrimeIdeal::zero_ideal()).is_rationals());
  CHECK(residue_field(RingInstance::zmod(9), PrimeIdeal::rational(3)).size() == 3U);
  CHECK_THROWS_AS(residue_field(RingInstance::zmod(9), PrimeIdeal::rational(2)), std::domain_error);
  const auto r = RingInstance::table(TableRing::f2_quotient(0b1011));  // F8
  const auto primes = enum_primes(r);
  REQUIRE(primes.size() == 1);
  const auto k = residue_field(r, primes[0]);
  CHECK(k.size() == 8U);
  CHECK(k.characteristic() == 2);
  for (std::size_t a = 1; a < 8; ++a) CHECK(k.mul(a, k.inv(a)) == k.one());
}

TEST_CASE("localize") {
  CHECK(localize(RingInstance::zmod(12), PrimeIdeal::rational(2)) == RingInstance::zmod(4));
  CHECK(localize(RingInstance::zloc({2, 3}), PrimeIdeal::rational(2)) == RingInstance::zloc({2}));
  CHECK(localize(RingInstance::zmod(9), PrimeIdeal::rational(3)) == RingInstance::zmod(9));
  CHECK(localize(RingInstance::zloc({2, 3}), PrimeIdeal::zero_ideal()).is_rationals());
  // Z/2 × F4 at the prime 0 × F4 is Z/2.
  const auto prod = RingInstance::table(TableRing::product(TableRing::zmod(2), TableRing::f2_quotient(0b111)));
  for (const auto& p : enum_primes(prod)) {
    const auto local = localize(prod, p);
    CHECK(is_local(local));
    CHECK((local.cardinality() == 2 || local.cardinality() == 4));
  }
}

TEST_CASE("oracle_enum_ideals") {
  CHECK(oracle_enum_ideals(table_zmod(6)).size() == 4);
  CHECK(oracle_enum_ideals(table_zmod(4)).size() == 3);
  CHECK(oracle_enum_ideals(f4()).size() == 2);
  CHECK_THROWS_AS(oracle_enum_ideals(table_zmod(17)), CapExceeded);
}

TEST_CASE("ideal membership") {
  const auto r = RingInstance::zmod(12);
  CHECK(ideal_members(r, {8}) == ideal_members(r, {4}));
  CHECK(std::popcount(ideal_members(r, {2, 3})) == 12);
}

// Properties

TEST_CASE("local factors multiply back to n and are local") {
  for (std::int64_t n = 1; n <= 64; ++n) {
    const auto r = RingInstance::zmod(n);
    std::int64_t product = 1;
    for (const auto& p : enum_primes(r)) {
      const auto local = localize(r, p);
      CHECK(is_local(local));
      product *= local.as_zmod().n;
    }
    CHECK(product == n);
  }
}

TEST_CASE("localization then residue field equals the residue field") {
  for (auto primes : {std::vector<std::int64_t>{2, 3}, {5}, {3, 7, 13}}) {
    const auto r = RingInstance::zloc(primes);
    for (const auto& p : enum_primes(r)) {
      const auto direct = residue_field(r, p);
      const auto local = localize(r, p);
      const auto via = residue_field(local, p);
      CHECK(direct.size() == via.size());
      CHECK(direct.characteristic() == via.characteristic());
    }
  }
}

TEST_CASE("table-ring primes of Z/n match the arithmetic backend") {
  for (std::size_t n = 1; n <= 16; ++n) {
    const auto arithmetic = enum_primes(RingInstance::zmod(static_cast<std::int64_t>(n)));
    const auto table = table_zmod(n);
    const auto brute = enum_primes(table);
    REQUIRE(brute.size() == arithmetic.size());
    for (const auto& p : arithmetic) {
      // pZ/nZ as an element set of the table ring
      ElementSet members = 0;
      for (std::size_t a = 0; a < n; ++a)
        if (a % static_cast<std::size_t>(p.p) == 0) members |= ElementSet{1} << a;
      CHECK(std::count(brute.begin(), brute.end(), PrimeIdeal::table_ideal(members)) == 1);
    }
  }
}

TEST_CASE("every enumerated table prime is a proper prime ideal") {
  std::vector<RingInstance> rings{table_zmod(12), f4(), RingInstance::table(TableRing::f2_quotient(0b1000)),
                                  RingInstance::table(TableRing::f2_quotient(0b100)),
                                  RingInstance::table(TableRing::product(TableRing::zmod(2), TableRing::zmod(4)))};
  for (const auto& r : rings) {
    const auto& t = r.as_table();
    for (const auto& p : enum_primes(r)) {
      const auto in = [&](std::size_t x) { return ((p.members >> x) & 1U) != 0; };
      CHECK_FALSE(in(t.one()));
      CHECK(in(t.zero()));
      for (std::size_t a = 0; a < t.size(); ++a) {
        for (std::size_t b = 0; b < t.size(); ++b) {
          if (in(a) && in(b)) CHECK(in(t.add(a, b)));
          if (in(a)) CHECK(in(t.mul(a, b)));
          if (in(t.mul(a, b))) CHECK((in(a) || in(b)));
        }
      }
    }
  }
}

TEST_CASE("descriptions") {
  CHECK(RingInstance::zmod(12).describe() == "Z/12");
  CHECK(RingInstance::zloc({2, 3}).describe() == "Z_(2,3)");
  CHECK(RingInstance::rationals().describe() == "Q");
  CHECK(PrimeIdeal::zero_ideal().label(RingInstance::zloc({2})) == "generic");
}
