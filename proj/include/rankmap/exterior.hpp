#pragma once

#include <cstddef>
#include <cstdint>
#include <functional>
#include <span>
#include <vector>

#include "rankmap/module.hpp"

namespace rankmap {

/// Strictly increasing generator indices i_1 < ... < i_n naming the pure
/// wedge e_{i_1} ∧ ... ∧ e_{i_n}.
using WedgeIndex = std::vector<std::size_t>;

inline constexpr std::uint64_t kMaxWedgeGenerators = 4096;

/// Λⁿ(M). Generators are the wedges of length n in lexicographic order;
/// relations are r ∧ e_J for every relation r of M and every wedge J of
/// length n-1, with each e_i ∧ e_J re-sorted by its permutation sign and
/// dropped when i ∈ J. Λ⁰(M) = R.
Presentation ext_presentation(const Presentation& m, std::size_t n);

/// Wedges of length n on g generators, in the generator order used above.
std::vector<WedgeIndex> wedge_basis(std::size_t g, std::size_t n);

/// Determinant by permutation expansion.
Elem determinant(const RingInstance& ring, const Matrix& a);

/// n×n minors of a, rows and columns indexed by wedge_basis. Empty when
/// n exceeds either dimension.
Matrix compound_matrix(const RingInstance& ring, const Matrix& a, std::size_t n);

/// Matrix of δ: Λⁿ(R^g) → (R^g)^{⊗n}, one column per wedge, g^n rows
/// indexed by tensor tuples in lexicographic order.
Matrix delta_matrix(std::size_t g, std::size_t n, const RingInstance& ring);

/// Whether the columns of a matrix are R-linearly independent: exhaustive
/// kernel scan on finite rings, full rational rank on the semi-local
/// integers.
bool has_zero_kernel(const RingInstance& ring, const Matrix& a,
                     std::uint64_t scan_cap = std::uint64_t{1} << 20);

/// A map f: (R^s)^n → R^t over a finite ring, given by its full value table.
/// Module elements are encoded as base-|R| integers with coordinate 0 least
/// significant; tuples as base-|R^s| integers with slot 0 least significant.
struct MultilinearTable {
  RingInstance ring;
  std::size_t source_rank = 0;
  std::size_t target_rank = 0;
  std::size_t arity = 0;
  std::vector<std::uint32_t> values;

  using Vector = std::vector<Elem>;
  using Function = std::function<Vector(std::span<const Vector>)>;

  /// Tabulates f. Throws CapExceeded beyond 2^20 tuples.
  static MultilinearTable tabulate(RingInstance ring, std::size_t source_rank, std::size_t target_rank,
                                   std::size_t arity, const Function& f);

  std::uint64_t source_size() const;
  std::uint64_t target_size() const;
};

struct AlternatingFlags {
  bool multilinear = false;
  bool alternating = false;
  bool alternating_adjacent = false;
  bool skew_symmetric = false;

  bool operator==(const AlternatingFlags&) const = default;
};

/// Every flag decided by exhaustive check over the table.
AlternatingFlags alternating_report(const MultilinearTable& f);

struct BaseChangeVerdict {
  std::size_t lhs = 0;  // fiber of Λⁿ(M) at p
  std::size_t rhs = 0;  // binomial(fiber of M at p, n)
  bool equal = false;
};

BaseChangeVerdict base_change_fiber_check(const Presentation& m, std::size_t n, const PrimeIdeal& p);

}  // namespace rankmap
