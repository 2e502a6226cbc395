#include "doctest.h"

#include <algorithm>
#include <numeric>
#include <random>

#include "rankmap/linalg.hpp"

using namespace rankmap;

TEST_CASE("rank over prime fields and the rationals") {
  const Matrix m{{2, 4}, {1, 2}};
  CHECK(integer_matrix_rank(m, PrimeField{2}) == 1);
  CHECK(integer_matrix_rank(m, PrimeField{3}) == 1);
  CHECK(integer_matrix_rank(m, RationalField{}) == 1);
  CHECK(integer_matrix_rank(Matrix{{6, 0}, {0, 6}}, PrimeField{5}) == 2);
  CHECK(integer_matrix_rank(Matrix{{6, 0}, {0, 6}}, PrimeField{3}) == 0);
  CHECK(integer_matrix_rank(Matrix{}, RationalField{}) == 0);
  CHECK(integer_matrix_rank(Matrix{{-1}}, PrimeField{7}) == 1);
}

TEST_CASE("prime field inverses") {
  for (std::int64_t p : {2, 3, 5, 7, 13}) {
    const PrimeField f{p};
    for (std::int64_t a = 1; a < p; ++a) CHECK(f.mul(a, f.inv(a)) == 1);
  }
}

TEST_CASE("smith invariants") {
  CHECK(smith_invariants({{4, 0}, {0, 6}}) == std::vector<BigInt>{2, 12});
  CHECK(smith_invariants({{2, 3}}) == std::vector<BigInt>{1});
  CHECK(smith_invariants({{0, 0}}).empty());
  CHECK(smith_invariants({}).empty());
  CHECK(smith_invariants({{2, 4, 4}, {-6, 6, 12}, {10, -4, -16}}) == std::vector<BigInt>{2, 6, 12});
}

TEST_CASE("smith invariants: divisibility chain and determinant") {
  std::mt19937_64 rng(7);
  std::uniform_int_distribution<int> d(-9, 9);
  for (int trial = 0; trial < 300; ++trial) {
    Matrix m(3, std::vector<std::int64_t>(3));
    for (auto& row : m)
      for (auto& x : row) x = d(rng);
    const auto inv = smith_invariants(m);
    for (std::size_t i = 1; i < inv.size(); ++i) REQUIRE(inv[i] % inv[i - 1] == 0);
    const BigInt det = BigInt(m[0][0]) * (m[1][1] * m[2][2] - m[1][2] * m[2][1]) -
                       BigInt(m[0][1]) * (m[1][0] * m[2][2] - m[1][2] * m[2][0]) +
                       BigInt(m[0][2]) * (m[1][0] * m[2][1] - m[1][1] * m[2][0]);
    if (det != 0) {
      REQUIRE(inv.size() == 3);
      const BigInt prod = inv[0] * inv[1] * inv[2];
      REQUIRE(prod == abs(det));
    } else {
      REQUIRE(inv.size() < 3);
    }
    REQUIRE(inv.size() == integer_matrix_rank(m, RationalField{}));
  }
}

TEST_CASE("binomial and combinations") {
  CHECK(binomial(5, 2) == 10);
  CHECK(binomial(3, 4) == 0);
  CHECK(binomial(0, 0) == 1);
  CHECK(combinations(3, 2) == std::vector<std::vector<std::size_t>>{{0, 1}, {0, 2}, {1, 2}});
  CHECK(combinations(2, 0) == std::vector<std::vector<std::size_t>>{{}});
  CHECK(combinations(2, 3).empty());
  for (std::size_t n = 0; n <= 7; ++n)
    for (std::size_t k = 0; k <= n + 1; ++k) CHECK(combinations(n, k).size() == binomial(n, k));
}

TEST_CASE("permutation sign agrees with transposition counting") {
  std::vector<std::size_t> p(5);
  std::iota(p.begin(), p.end(), 0);
  do {
    auto q = p;
    int swaps = 0;
    for (std::size_t i = 0; i < q.size(); ++i) {
      while (q[i] != i) {
        std::swap(q[i], q[q[i]]);
        ++swaps;
      }
    }
    REQUIRE(permutation_sign(p) == (swaps % 2 ? -1 : 1));
  } while (std::next_permutation(p.begin(), p.end()));
  const std::vector<std::size_t> gapped{7, 2, 9};
  CHECK(permutation_sign(gapped) == -1);
}

TEST_CASE("factorize") {
  CHECK(factorize(12) == std::vector<std::pair<std::int64_t, unsigned>>{{2, 2}, {3, 1}});
  CHECK(factorize(1).empty());
  CHECK(factorize(97) == std::vector<std::pair<std::int64_t, unsigned>>{{97, 1}});
  CHECK(is_prime(13));
  CHECK_FALSE(is_prime(1));
  CHECK_FALSE(is_prime(91));
}
