#include "rankmap/linalg.hpp"

#include <algorithm>

namespace rankmap {

PrimeField::value_type PrimeField::inv(value_type a) const {
  // Extended Euclid; p is prime so gcd(a, p) = 1 for a != 0.
  std::int64_t old_r = a, r = p, old_s = 1, s = 0;
  while (r != 0) {
    const auto q = old_r / r;
    std::tie(old_r, r) = std::make_pair(r, old_r - q * r);
    std::tie(old_s, s) = std::make_pair(s, old_s - q * s);
  }
  if (old_r != 1) throw std::domain_error("element is not invertible modulo p");
  return reduce(old_s);
}

namespace {

using BigMatrix = std::vector<std::vector<BigInt>>;

// Moves the entry of least nonzero magnitude in the lower-right block
// starting at (t, t) onto (t, t). Returns false when the block is zero.
bool move_min_to_pivot(BigMatrix& a, std::size_t t) {
  const std::size_t rows = a.size();
  const std::size_t cols = a.front().size();
  std::size_t bi = rows, bj = cols;
  BigInt best = 0;
  for (std::size_t i = t; i < rows; ++i) {
    for (std::size_t j = t; j < cols; ++j) {
      if (a[i][j] == 0) continue;
      BigInt v = abs(a[i][j]);
      if (bi == rows || v < best) {
        best = v;
        bi = i;
        bj = j;
      }
    }
  }
  if (bi == rows) return false;
  std::swap(a[t], a[bi]);
  for (auto& row : a) std::swap(row[t], row[bj]);
  return true;
}

}  // namespace

std::vector<BigInt> smith_invariants(const Matrix& m) {
  if (m.empty() || m.front().empty()) return {};
  BigMatrix a(m.size());
  for (std::size_t i = 0; i < m.size(); ++i) {
    a[i].assign(m[i].begin(), m[i].end());
  }
  const std::size_t rows = a.size();
  const std::size_t cols = a.front().size();
  std::vector<BigInt> diag;
  for (std::size_t t = 0; t < std::min(rows, cols); ++t) {
    if (!move_min_to_pivot(a, t)) break;
    for (;;) {
      bool clean = true;
      for (std::size_t i = t + 1; i < rows; ++i) {
        if (a[i][t] == 0) continue;
        const BigInt q = a[i][t] / a[t][t];
        for (std::size_t j = t; j < cols; ++j) a[i][j] -= q * a[t][j];
        if (a[i][t] != 0) clean = false;
      }
      for (std::size_t j = t + 1; j < cols; ++j) {
        if (a[t][j] == 0) continue;
        const BigInt q = a[t][j] / a[t][t];
        for (std::size_t i = t; i < rows; ++i) a[i][j] -= q * a[i][t];
        if (a[t][j] != 0) clean = false;
      }
      if (clean) {
        // The pivot must divide the whole remaining block.
        std::size_t bad_row = rows;
        for (std::size_t i = t + 1; i < rows && bad_row == rows; ++i) {
          for (std::size_t j = t + 1; j < cols; ++j) {
            if (a[i][j] % a[t][t] != 0) {
              bad_row = i;
              break;
            }
          }
        }
        if (bad_row == rows) break;
        for (std::size_t j = t; j < cols; ++j) a[t][j] += a[bad_row][j];
      }
      move_min_to_pivot(a, t);
    }
    diag.push_back(abs(a[t][t]));
  }
  return diag;
}

std::uint64_t binomial(std::uint64_t n, std::uint64_t k) {
  if (k > n) return 0;
  k = std::min(k, n - k);
  std::uint64_t result = 1;
  for (std::uint64_t i = 1; i <= k; ++i) {
    result = result * (n - k + i) / i;
  }
  return result;
}

std::vector<std::vector<std::size_t>> combinations(std::size_t n, std::size_t k) {
  std::vector<std::vector<std::size_t>> out;
  if (k > n) return out;
  std::vector<std::size_t> current(k);
  for (std::size_t i = 0; i < k; ++i) current[i] = i;
  for (;;) {
    out.push_back(current);
    std::size_t i = k;
    while (i > 0 && current[i - 1] == n - k + i - 1) --i;
    if (i == 0) break;
    ++current[i - 1];
    for (std::size_t j = i; j < k; ++j) current[j] = current[j - 1] + 1;
  }
  return out;
}

namespace {

std::size_t count_inversions(std::vector<std::size_t>& v, std::vector<std::size_t>& scratch,
                             std::size_t lo, std::size_t hi) {
  if (hi - lo < 2) return 0;
  const std::size_t mid = lo + (hi - lo) / 2;
  std::size_t count = count_inversions(v, scratch, lo, mid) + count_inversions(v, scratch, mid, hi);
  std::size_t i = lo, j = mid, k = lo;
  while (i < mid && j < hi) {
    if (v[j] < v[i]) {
      count += mid - i;
      scratch[k++] = v[j++];
    } else {
      scratch[k++] = v[i++];
    }
  }
  while (i < mid) scratch[k++] = v[i++];
  while (j < hi) scratch[k++] = v[j++];
  std::copy(scratch.begin() + static_cast<std::ptrdiff_t>(lo),
            scratch.begin() + static_cast<std::ptrdiff_t>(hi),
            v.begin() + static_cast<std::ptrdiff_t>(lo));
  return count;
}

}  // namespace

int permutation_sign(std::span<const std::size_t> sequence) {
  std::vector<std::size_t> v(sequence.begin(), sequence.end());
  std::vector<std::size_t> scratch(v.size());
  return count_inversions(v, scratch, 0, v.size()) % 2 == 0 ? 1 : -1;
}

std::vector<std::pair<std::int64_t, unsigned>> factorize(std::int64_t n) {
  if (n <= 0) throw std::domain_error("factorize expects a positive integer");
  std::vector<std::pair<std::int64_t, unsigned>> out;
  for (std::int64_t p = 2; p * p <= n; ++p) {
    unsigned e = 0;
    while (n % p == 0) {
      n /= p;
      ++e;
    }
    if (e > 0) out.emplace_back(p, e);
  }
  if (n > 1) out.emplace_back(n, 1);
  return out;
}

bool is_prime(std::int64_t n) {
  if (n < 2) return false;
  for (std::int64_t d = 2; d * d <= n; ++d) {
    if (n % d == 0) return false;
  }
  return true;
}

}  // namespace rankmap
