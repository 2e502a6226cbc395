#pragma once

#include <cstddef>
#include <cstdint>
#include <span>
#include <stdexcept>
#include <utility>
#include <vector>

#include <boost/multiprecision/cpp_int.hpp>

namespace rankmap {

using BigInt = boost::multiprecision::cpp_int;
using BigRational = boost::multiprecision::cpp_rational;

/// Dense matrix of ring elements, row-major. Integer entries for Z/n and the
/// semi-local integers, element indices for table rings.
using Matrix = std::vector<std::vector<std::int64_t>>;

/// Integers modulo a prime.
struct PrimeField {
  using value_type = std::int64_t;
  std::int64_t p;

  value_type reduce(std::int64_t x) const { return ((x % p) + p) % p; }
  value_type zero() const { return 0; }
  bool is_zero(value_type a) const { return a == 0; }
  value_type sub(value_type a, value_type b) const { return reduce(a - b); }
  value_type mul(value_type a, value_type b) const {
    return static_cast<value_type>((static_cast<__int128>(a) * b) % p);
  }
  value_type inv(value_type a) const;
};

struct RationalField {
  using value_type = BigRational;

  value_type reduce(std::int64_t x) const { return value_type(x); }
  value_type zero() const { return 0; }
  bool is_zero(const value_type& a) const { return a == 0; }
  value_type sub(const value_type& a, const value_type& b) const { return a - b; }
  value_type mul(const value_type& a, const value_type& b) const { return a * b; }
  value_type inv(const value_type& a) const { return 1 / a; }
};

/// Row rank by Gaussian elimination over an exact field. The matrix must
/// already hold field elements.
template <class Field>
std::size_t rank(std::vector<std::vector<typename Field::value_type>> m, const Field& field) {
  if (m.empty()) return 0;
  const std::size_t rows = m.size();
  const std::size_t cols = m.front().size();
  std::size_t r = 0;
  for (std::size_t c = 0; c < cols && r < rows; ++c) {
    std::size_t pivot = r;
    while (pivot < rows && field.is_zero(m[pivot][c])) ++pivot;
    if (pivot == rows) continue;
    std::swap(m[pivot], m[r]);
    const auto inv = field.inv(m[r][c]);
    for (std::size_t i = r + 1; i < rows; ++i) {
      if (field.is_zero(m[i][c])) continue;
      const auto factor = field.mul(m[i][c], inv);
      for (std::size_t j = c; j < cols; ++j) {
        m[i][j] = field.sub(m[i][j], field.mul(factor, m[r][j]));
      }
    }
    ++r;
  }
  return r;
}

/// Reduces integer entries into the field and returns the rank.
template <class Field>
std::size_t integer_matrix_rank(const Matrix& m, const Field& field) {
  std::vector<std::vector<typename Field::value_type>> reduced;
  reduced.reserve(m.size());
  for (const auto& row : m) {
    auto& out = reduced.emplace_back();
    out.reserve(row.size());
    for (auto x : row) out.push_back(field.reduce(x));
  }
  return rank(std::move(reduced), field);
}

/// Nonzero invariant factors d_1 | d_2 | ... (all positive) of an integer
/// matrix, by unimodular row and column operations.
std::vector<BigInt> smith_invariants(const Matrix& m);

std::uint64_t binomial(std::uint64_t n, std::uint64_t k);

/// All strictly increasing k-tuples from {0..n-1} in lexicographic order.
std::vector<std::vector<std::size_t>> combinations(std::size_t n, std::size_t k);

/// +1 or -1: parity of the inversion count, found by merge sort. Entries
/// must be distinct.
int permutation_sign(std::span<const std::size_t> sequence);

/// The prime factorisation of n > 0 as (prime, exponent) pairs.
std::vector<std::pair<std::int64_t, unsigned>> factorize(std::int64_t n);

bool is_prime(std::int64_t n);

}  // namespace rankmap
