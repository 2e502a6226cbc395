#pragma once

#include <cstddef>
#include <cstdint>
#include <string>
#include <utility>
#include <variant>
#include <vector>

#include "rankmap/ordinal.hpp"

namespace rankmap {

inline constexpr std::size_t kMaxPoints = 64;

/// A subset of the points 0..63 of a finite space.
class PointSet {
 public:
  constexpr PointSet() = default;
  constexpr explicit PointSet(std::uint64_t bits) : bits_(bits) {}

  static constexpr PointSet all(std::size_t n) {
    return PointSet(n >= 64 ? ~std::uint64_t{0} : (std::uint64_t{1} << n) - 1);
  }
  static PointSet of(std::initializer_list<std::size_t> points);

  constexpr std::uint64_t bits() const { return bits_; }
  constexpr bool contains(std::size_t p) const { return (bits_ >> p) & 1U; }
  constexpr bool empty() const { return bits_ == 0; }
  constexpr bool is_subset_of(PointSet o) const { return (bits_ & ~o.bits_) == 0; }
  std::size_t size() const;
  void insert(std::size_t p) { bits_ |= std::uint64_t{1} << p; }
  std::vector<std::size_t> elements() const;

  constexpr PointSet operator|(PointSet o) const { return PointSet(bits_ | o.bits_); }
  constexpr PointSet operator&(PointSet o) const { return PointSet(bits_ & o.bits_); }
  /// Complement relative to the first n points.
  constexpr PointSet complement(std::size_t n) const { return PointSet(~bits_ & all(n).bits_); }
  constexpr bool operator==(const PointSet&) const = default;

 private:
  std::uint64_t bits_ = 0;
};

/// Finite set of primes ordered by inclusion: leq(p, q) iff p ⊆ q, i.e. q
/// lies in the Zariski closure of {p}.
class SpectrumPoset {
 public:
  SpectrumPoset() = default;
  /// Throws std::invalid_argument unless leq is a partial order.
  SpectrumPoset(std::vector<std::string> labels, std::vector<std::vector<bool>> leq);

  /// Builds the order generated by the given cover relations (lower, upper).
  static SpectrumPoset from_covers(std::vector<std::string> labels,
                                   const std::vector<std::pair<std::size_t, std::size_t>>& covers);
  static SpectrumPoset antichain(std::size_t n);
  static SpectrumPoset chain(std::size_t n);

  std::size_t size() const { return labels_.size(); }
  const std::vector<std::string>& labels() const { return labels_; }
  bool leq(std::size_t p, std::size_t q) const { return leq_[p][q]; }
  PointSet all() const { return PointSet::all(size()); }

  /// Pairs (p, q) with p < q and nothing strictly between.
  std::vector<std::pair<std::size_t, std::size_t>> covers() const;

  bool operator==(const SpectrumPoset&) const = default;

 private:
  std::vector<std::string> labels_;
  std::vector<std::vector<bool>> leq_;
};

enum class TopologyKind { zariski, flat, patch };

std::string to_string(TopologyKind kind);

PointSet up_closure(const SpectrumPoset& space, PointSet s);
PointSet down_closure(const SpectrumPoset& space, PointSet s);

/// zariski: up-set. flat: down-set. patch: anything.
bool is_closed(const SpectrumPoset& space, PointSet s, TopologyKind kind);
bool is_open(const SpectrumPoset& space, PointSet s, TopologyKind kind);

/// All closed sets of the given topology, in increasing bit order.
/// Throws std::length_error above 20 points.
std::vector<PointSet> closed_sets(const SpectrumPoset& space, TopologyKind kind);

/// A total assignment point -> Ordinal on a spectrum.
struct PointMap {
  SpectrumPoset source;
  std::vector<Ordinal> values;
};

struct DiscreteTarget {};
struct WellFoundedTarget {
  Ordinal alpha;
};
using Target = std::variant<DiscreteTarget, WellFoundedTarget>;

std::string to_string(const Target& target);

/// Continuity of map from (source, source_kind) into the target topology.
/// Throws std::domain_error if a value is not below a well-founded alpha.
bool is_continuous(const PointMap& map, TopologyKind source_kind, const Target& target);

/// p ≤ q implies map(p) == map(q).
bool is_specialization_stable(const PointMap& map);

/// Exhaustively checks that every intersection of flat opens is flat open.
/// Throws std::length_error above 15 points.
bool arbitrary_meet_of_flat_opens_is_open(const SpectrumPoset& space);

/// A topology on n ≤ 64 points given by its family of closed sets.
class FiniteTopology {
 public:
  FiniteTopology(std::size_t n, std::vector<PointSet> closed);

  std::size_t size() const { return n_; }
  const std::vector<PointSet>& closed() const { return closed_; }
  std::vector<PointSet> opens() const;

  bool is_closed(PointSet s) const;
  bool is_open(PointSet s) const;
  PointSet closure(PointSet s) const;

  /// Contains ∅ and the whole space, closed under pairwise union and
  /// intersection (hence under all finite families and, being finite,
  /// arbitrary intersections).
  bool satisfies_axioms() const;
  bool is_t0() const;
  bool is_irreducible(PointSet closed_set) const;
  std::vector<std::size_t> generic_points(PointSet closed_set) const;
  bool is_sober() const;
  bool is_discrete() const;

  /// T0, quasi-compact, quasi-compact opens stable under finite intersection
  /// and forming a basis, sober. On a finite space every subset is
  /// quasi-compact, so the compactness clauses reduce to the open family
  /// being closed under intersection.
  bool is_spectral() const;

  /// Topology on a subset, as closed sets re-indexed onto 0..|subset|-1.
  FiniteTopology subspace(PointSet subset) const;

  bool same_closed_sets(const FiniteTopology& other) const;

 private:
  std::size_t n_;
  std::vector<PointSet> closed_;
};

FiniteTopology topology(const SpectrumPoset& space, TopologyKind kind);

}  // namespace rankmap
