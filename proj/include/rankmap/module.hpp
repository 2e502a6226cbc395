#pragma once

#include <cstddef>
#include <cstdint>
#include <optional>
#include <set>
#include <string>
#include <vector>

#include "rankmap/finspace.hpp"
#include "rankmap/linalg.hpp"
#include "rankmap/ring.hpp"

namespace rankmap {

/// coker(R^rows -> R^generators): the module generated by e_1..e_g subject
/// to the rows of `relations`.
class Presentation {
 public:
  /// Throws std::invalid_argument on a row of the wrong length or an entry
  /// that is not a ring element. Entries are normalized.
  Presentation(RingInstance ring, std::size_t generators, Matrix relations = {});

  static Presentation free(RingInstance ring, std::size_t rank);

  const RingInstance& ring() const { return ring_; }
  std::size_t generators() const { return generators_; }
  const Matrix& relations() const { return relations_; }

  /// The same module with extra relation rows appended.
  Presentation with_relations(const Matrix& extra) const;

  bool operator==(const Presentation&) const = default;

 private:
  RingInstance ring_;
  std::size_t generators_;
  Matrix relations_;
};

/// Enumeration limits for the brute-force oracles.
struct ModuleCaps {
  std::uint64_t module_elements = std::uint64_t{1} << 12;
  std::uint64_t ambient_elements = std::uint64_t{1} << 20;
  std::uint64_t search_nodes = 100'000'000;
};

/// p ↦ dim κ(p) ⊗ M over Spec(R).
struct RankMap {
  std::vector<PrimeIdeal> primes;
  SpectrumPoset spectrum;
  std::vector<std::size_t> dims;

  PointMap as_point_map() const;
  std::size_t at(const PrimeIdeal& p) const;
};

struct ModuleClassification {
  /// Rank of the largest free summand detected: zero invariant factors over
  /// the semi-local integers, invariant factors equal to n over Z/n, the
  /// constant local rank of a projective module over a table ring. Absent
  /// for non-projective modules over table rings.
  std::optional<std::size_t> free_rank;
  /// Semi-local integers: S-parts > 1 of the invariant factors. Z/n: the
  /// local parts gcd(d, p^v) of the invariant factors d that are neither 1
  /// nor p^v. Empty for table rings.
  std::vector<std::int64_t> torsion_invariants;
  bool is_free = false;
  bool is_projective = false;
  /// Identified with projectivity: every supported ring has finitely many
  /// primes, where f.g. flat modules are projective.
  bool is_flat = false;
  bool is_locally_free = false;
  /// |M| on finite rings.
  std::optional<std::uint64_t> cardinality;
};

std::size_t fiber_dim(const Presentation& m, const PrimeIdeal& p);
RankMap rank_map(const Presentation& m);
/// Primes with nonzero fiber, as points of specialization_order(ring).
PointSet support(const Presentation& m);
ModuleClassification classify(const Presentation& m, const ModuleCaps& caps = {});

/// Whether M = 𝔭M, i.e. M/𝔭M = 0.
bool is_pM_equal_M(const Presentation& m, const PrimeIdeal& p);

/// |M| from the Smith form (Z/n) or by enumeration (table rings).
std::uint64_t cardinality(const Presentation& m, const ModuleCaps& caps = {});

/// A module over a finite ring, materialized as cosets of the relation span.
class FiniteModule {
 public:
  /// Throws CapExceeded when |R|^g exceeds caps.ambient_elements.
  explicit FiniteModule(const Presentation& m, const ModuleCaps& caps = {});

  /// A submodule or other element subset, indexed by element id.
  using Subset = std::vector<bool>;

  std::size_t size() const { return reps_.size(); }
  std::uint64_t ambient_size() const { return ambient_; }
  std::size_t zero() const { return 0; }
  std::size_t generator(std::size_t j) const;
  std::size_t add(std::size_t a, std::size_t b) const;
  std::size_t scale(Elem r, std::size_t a) const;
  /// Coordinates of a representative of a in R^g.
  std::vector<Elem> representative(std::size_t a) const;

  /// The submodule generated by the given elements.
  Subset span(const std::vector<std::size_t>& elements) const;
  /// I·M for an ideal given by its members.
  Subset ideal_times_module(ElementSet ideal) const;

 private:
  std::uint64_t encode(const std::vector<Elem>& v) const;
  std::vector<Elem> decode(std::uint64_t index) const;
  Subset additive_closure(const std::vector<std::size_t>& generators) const;

  Presentation m_;
  std::uint64_t q_;
  std::uint64_t ambient_;
  std::vector<Elem> additive_generators_;  // of (R, +)
  std::vector<std::uint32_t> coset_of_;    // ambient index -> element id
  std::vector<std::uint64_t> reps_;        // element id -> ambient index
};

struct MinimalGensetSummary {
  std::set<std::size_t> sizes;
  std::size_t fiber = 0;
  std::uint64_t search_nodes = 0;
};

/// Sizes of all minimal generating sets of a module over a finite local
/// ring, by exhaustive search. A set generates iff no maximal submodule
/// contains it; maximal submodules are the kernels of the nonzero maps to
/// the residue field.
MinimalGensetSummary minimal_gensets_oracle(const Presentation& m, const ModuleCaps& caps = {});

/// Checks ∩(I_α M) = (∩ I_α) M by enumeration. Throws std::domain_error when
/// require_projective is set and M is not projective.
bool ideal_action_intersection_check(const Presentation& m, const std::vector<Ideal>& ideals,
                                     bool require_projective = true, const ModuleCaps& caps = {});

}  // namespace rankmap
