#include "rankmap/exterior.hpp"

#include <algorithm>
#include <map>
#include <numeric>

namespace rankmap {

std::vector<WedgeIndex> wedge_basis(std::size_t g, std::size_t n) { return combinations(g, n); }

Presentation ext_presentation(const Presentation& m, std::size_t n) {
  const auto& ring = m.ring();
  const auto g = m.generators();
  if (n == 0) return Presentation::free(ring, 1);
  if (binomial(g, n) > kMaxWedgeGenerators) {
    throw CapExceeded("exterior power would have more than " + std::to_string(kMaxWedgeGenerators) + " generators");
  }
  const auto wedges = wedge_basis(g, n);
  std::map<WedgeIndex, std::size_t> column;
  for (std::size_t c = 0; c < wedges.size(); ++c) column[wedges[c]] = c;

  Matrix rows;
  const auto tails = wedge_basis(g, n - 1);
  for (const auto& r : m.relations()) {
    for (const auto& tail : tails) {
      std::vector<Elem> row(wedges.size(), ring.zero());
      bool nonzero = false;
      for (std::size_t i = 0; i < g; ++i) {
        if (r[i] == ring.zero() || std::binary_search(tail.begin(), tail.end(), i)) continue;
        WedgeIndex seq{i};
        seq.insert(seq.end(), tail.begin(), tail.end());
        const int sign = permutation_sign(seq);
        std::sort(seq.begin(), seq.end());
        auto& entry = row[column.at(seq)];
        entry = ring.add(entry, sign > 0 ? r[i] : ring.neg(r[i]));
        nonzero = nonzero || entry != ring.zero();
      }
      if (nonzero) rows.push_back(std::move(row));
    }
  }
  return Presentation(ring, wedges.size(), std::move(rows));
}

Elem determinant(const RingInstance& ring, const Matrix& a) {
  const std::size_t n = a.size();
  std::vector<std::size_t> perm(n);
  std::iota(perm.begin(), perm.end(), std::size_t{0});
  Elem total = ring.zero();
  do {
    Elem term = ring.one();
    for (std::size_t i = 0; i < n && term != ring.zero(); ++i) term = ring.mul(term, a[i][perm[i]]);
    total = ring.add(total, permutation_sign(perm) > 0 ? term : ring.neg(term));
  } while (std::next_permutation(perm.begin(), perm.end()));
  return total;
}

Matrix compound_matrix(const RingInstance& ring, const Matrix& a, std::size_t n) {
  const std::size_t rows = a.size();
  const std::size_t cols = rows == 0 ? 0 : a.front().size();
  if (n > rows || n > cols) return {};
  const auto row_sets = combinations(rows, n);
  const auto col_sets = combinations(cols, n);
  Matrix out(row_sets.size(), std::vector<Elem>(col_sets.size()));
  Matrix minor(n, std::vector<Elem>(n));
  for (std::size_t r = 0; r < row_sets.size(); ++r) {
    for (std::size_t c = 0; c < col_sets.size(); ++c) {
      for (std::size_t i = 0; i < n; ++i) {
        for (std::size_t j = 0; j < n; ++j) minor[i][j] = a[row_sets[r][i]][col_sets[c][j]];
      }
      out[r][c] = determinant(ring, minor);
    }
  }
  return out;
}

Matrix delta_matrix(std::size_t g, std::size_t n, const RingInstance& ring) {
  std::uint64_t tensor_rows = 1;
  for (std::size_t i = 0; i < n; ++i) {
    tensor_rows *= g;
    if (tensor_rows > (std::uint64_t{1} << 20)) throw CapExceeded("tensor power too large for delta matrix");
  }
  const auto wedges = wedge_basis(g, n);
  Matrix out(tensor_rows, std::vector<Elem>(wedges.size(), ring.zero()));
  std::vector<std::size_t> perm(n);
  for (std::size_t c = 0; c < wedges.size(); ++c) {
    std::iota(perm.begin(), perm.end(), std::size_t{0});
    do {
      std::uint64_t row = 0;
      for (std::size_t k = 0; k < n; ++k) row = row * g + wedges[c][perm[k]];
      out[row][c] = permutation_sign(perm) > 0 ? ring.one() : ring.neg(ring.one());
    } while (std::next_permutation(perm.begin(), perm.end()));
  }
  return out;
}

bool has_zero_kernel(const RingInstance& ring, const Matrix& a, std::uint64_t scan_cap) {
  if (a.empty()) return true;
  const std::size_t cols = a.front().size();
  if (!ring.is_finite()) {
    return integer_matrix_rank(a, RationalField{}) == cols;
  }
  const std::uint64_t q = ring.cardinality();
  std::uint64_t total = 1;
  for (std::size_t i = 0; i < cols; ++i) {
    total *= q;
    if (total > scan_cap) throw CapExceeded("kernel scan exceeds its cap");
  }
  std::vector<Elem> x(cols);
  for (std::uint64_t idx = 0; idx < total; ++idx) {
    std::uint64_t rest = idx;
    bool is_zero_vector = true;
    for (auto& e : x) {
      e = static_cast<Elem>(rest % q);
      rest /= q;
      is_zero_vector = is_zero_vector && e == ring.zero();
    }
    if (is_zero_vector) continue;
    bool image_zero = true;
    for (std::size_t r = 0; r < a.size() && image_zero; ++r) {
      Elem acc = ring.zero();
      for (std::size_t c = 0; c < cols; ++c) acc = ring.add(acc, ring.mul(a[r][c], x[c]));
      image_zero = acc == ring.zero();
    }
    if (image_zero) return false;
  }
  return true;
}

// ---------------------------------------------------------------------------
// Multilinear tables

namespace {

std::uint64_t power(std::uint64_t base, std::size_t exp, std::uint64_t cap) {
  std::uint64_t out = 1;
  for (std::size_t i = 0; i < exp; ++i) {
    if (base != 0 && out > cap / base) throw CapExceeded("multilinear table exceeds its cap");
    out *= base;
  }
  return out;
}

constexpr std::uint64_t kTableCap = std::uint64_t{1} << 20;

// Base-q digit arithmetic on encoded vectors, without materializing them.
struct Codec {
  const RingInstance& ring;
  std::size_t rank;
  std::uint64_t q;

  std::uint64_t encode(const std::vector<Elem>& v) const {
    std::uint64_t idx = 0;
    for (std::size_t j = v.size(); j-- > 0;) idx = idx * q + static_cast<std::uint64_t>(v[j]);
    return idx;
  }
  std::vector<Elem> decode(std::uint64_t idx) const {
    std::vector<Elem> v(rank);
    for (auto& x : v) {
      x = static_cast<Elem>(idx % q);
      idx /= q;
    }
    return v;
  }
  template <class Op>
  std::uint64_t digitwise(std::uint64_t a, std::uint64_t b, Op op) const {
    std::uint64_t out = 0, weight = 1;
    for (std::size_t i = 0; i < rank; ++i) {
      out += static_cast<std::uint64_t>(op(static_cast<Elem>(a % q), static_cast<Elem>(b % q))) * weight;
      a /= q;
      b /= q;
      weight *= q;
    }
    return out;
  }
  std::uint64_t add(std::uint64_t a, std::uint64_t b) const {
    return digitwise(a, b, [&](Elem x, Elem y) { return ring.add(x, y); });
  }
  std::uint64_t scale(Elem r, std::uint64_t a) const {
    return digitwise(a, 0, [&](Elem x, Elem) { return ring.mul(r, x); });
  }
  std::uint64_t negate(std::uint64_t a) const {
    return digitwise(a, 0, [&](Elem x, Elem) { return ring.neg(x); });
  }
  std::uint64_t zero() const { return digitwise(0, 0, [&](Elem, Elem) { return ring.zero(); }); }
};

}  // namespace

std::uint64_t MultilinearTable::source_size() const { return power(ring.cardinality(), source_rank, kTableCap); }
std::uint64_t MultilinearTable::target_size() const { return power(ring.cardinality(), target_rank, kTableCap); }

MultilinearTable MultilinearTable::tabulate(RingInstance ring, std::size_t source_rank, std::size_t target_rank,
                                            std::size_t arity, const Function& f) {
  MultilinearTable table{std::move(ring), source_rank, target_rank, arity, {}};
  const auto s = table.source_size();
  const auto tuples = power(s, arity, kTableCap);
  const Codec source{table.ring, source_rank, table.ring.cardinality()};
  const Codec target{table.ring, target_rank, table.ring.cardinality()};
  table.values.resize(tuples);
  std::vector<Vector> args(arity);
  for (std::uint64_t t = 0; t < tuples; ++t) {
    std::uint64_t rest = t;
    for (auto& arg : args) {
      arg = source.decode(rest % s);
      rest /= s;
    }
    auto value = f(args);
    for (auto& e : value) e = table.ring.normalize(e);
    table.values[t] = static_cast<std::uint32_t>(target.encode(value));
  }
  return table;
}

AlternatingFlags alternating_report(const MultilinearTable& f) {
  const auto& ring = f.ring;
  const auto s = f.source_size();
  const auto n = f.arity;
  const auto tuples = power(s, n, kTableCap);
  if (f.values.size() != tuples) throw std::invalid_argument("multilinear table has the wrong number of values");
  const Codec source{ring, f.source_rank, ring.cardinality()};
  const Codec target{ring, f.target_rank, ring.cardinality()};
  const auto target_zero = target.zero();

  std::vector<std::uint64_t> slot_weight(n, 1);
  for (std::size_t i = 1; i < n; ++i) slot_weight[i] = slot_weight[i - 1] * s;
  auto slot = [&](std::uint64_t t, std::size_t i) { return (t / slot_weight[i]) % s; };
  auto replace = [&](std::uint64_t t, std::size_t i, std::uint64_t x) {
    return t - slot(t, i) * slot_weight[i] + x * slot_weight[i];
  };

  const auto scalars = ring.elements();
  AlternatingFlags flags{true, true, true, true};
  for (std::uint64_t t = 0; t < tuples && flags.multilinear; ++t) {
    for (std::size_t i = 0; i < n && flags.multilinear; ++i) {
      const auto xi = slot(t, i);
      for (std::uint64_t y = 0; y < s && flags.multilinear; ++y) {
        const auto lhs = f.values[replace(t, i, source.add(xi, y))];
        const auto rhs = target.add(f.values[t], f.values[replace(t, i, y)]);
        flags.multilinear = lhs == rhs;
      }
      for (auto r : scalars) {
        if (!flags.multilinear) break;
        flags.multilinear = f.values[replace(t, i, source.scale(r, xi))] == target.scale(r, f.values[t]);
      }
    }
  }

  std::vector<std::size_t> perm(n);
  for (std::uint64_t t = 0; t < tuples; ++t) {
    const auto value = f.values[t];
    bool any_equal = false, adjacent_equal = false;
    for (std::size_t i = 0; i < n; ++i) {
      for (std::size_t j = i + 1; j < n; ++j) {
        if (slot(t, i) == slot(t, j)) {
          any_equal = true;
          if (j == i + 1) adjacent_equal = true;
        }
      }
    }
    if (any_equal && value != target_zero) flags.alternating = false;
    if (adjacent_equal && value != target_zero) flags.alternating_adjacent = false;

    if (!flags.skew_symmetric) continue;
    std::iota(perm.begin(), perm.end(), std::size_t{0});
    while (std::next_permutation(perm.begin(), perm.end())) {
      std::uint64_t permuted = 0;
      for (std::size_t k = 0; k < n; ++k) permuted += slot(t, perm[k]) * slot_weight[k];
      const auto expected = permutation_sign(perm) > 0 ? value : target.negate(value);
      if (f.values[permuted] != expected) {
        flags.skew_symmetric = false;
        break;
      }
    }
  }
  return flags;
}

BaseChangeVerdict base_change_fiber_check(const Presentation& m, std::size_t n, const PrimeIdeal& p) {
  BaseChangeVerdict v;
  v.lhs = fiber_dim(ext_presentation(m, n), p);
  v.rhs = binomial(fiber_dim(m, p), n);
  v.equal = v.lhs == v.rhs;
  return v;
}

}  // namespace rankmap
