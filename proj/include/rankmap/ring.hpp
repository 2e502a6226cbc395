#pragma once

#include <cstddef>
#include <cstdint>
#include <optional>
#include <stdexcept>
#include <string>
#include <variant>
#include <vector>

#include "rankmap/finspace.hpp"
#include "rankmap/linalg.hpp"

namespace rankmap {

/// A ring element: a residue for Z/n, an integer for the semi-local
/// integers, an element index for table rings.
using Elem = std::int64_t;

/// Subset of a finite ring with at most 64 elements, as a bitmask of indices.
using ElementSet = std::uint64_t;

/// Thrown when a multiplication/addition table is not a commutative unital ring.
class RingAxiomError : public std::invalid_argument {
 public:
  RingAxiomError(std::string axiom, const std::string& detail)
      : std::invalid_argument("ring axiom violated (" + axiom + "): " + detail), axiom_(std::move(axiom)) {}
  const std::string& axiom() const { return axiom_; }

 private:
  std::string axiom_;
};

/// Thrown when an enumeration would exceed its configured size cap.
class CapExceeded : public std::length_error {
 public:
  using std::length_error::length_error;
};

/// A finite commutative unital ring given by explicit tables.
class TableRing {
 public:
  /// Validates every ring axiom; throws RingAxiomError naming the first
  /// failure. Zero and one are located from the tables.
  TableRing(std::vector<std::string> names, std::vector<std::vector<std::size_t>> add,
            std::vector<std::vector<std::size_t>> mul);

  static TableRing zmod(std::size_t n);
  /// F_2[x]/(f) for a modulus f given by its coefficient bits (bit i = x^i).
  static TableRing f2_quotient(unsigned modulus_bits);
  static TableRing product(const TableRing& a, const TableRing& b);

  std::size_t size() const { return names_.size(); }
  std::size_t zero() const { return zero_; }
  std::size_t one() const { return one_; }
  std::size_t add(std::size_t a, std::size_t b) const { return add_[a][b]; }
  std::size_t mul(std::size_t a, std::size_t b) const { return mul_[a][b]; }
  std::size_t neg(std::size_t a) const { return neg_[a]; }
  const std::vector<std::string>& names() const { return names_; }
  const std::vector<std::vector<std::size_t>>& add_table() const { return add_; }
  const std::vector<std::vector<std::size_t>>& mul_table() const { return mul_; }

  bool operator==(const TableRing& o) const { return add_ == o.add_ && mul_ == o.mul_ && names_ == o.names_; }

 private:
  std::vector<std::string> names_;
  std::vector<std::vector<std::size_t>> add_;
  std::vector<std::vector<std::size_t>> mul_;
  std::vector<std::size_t> neg_;
  std::size_t zero_ = 0;
  std::size_t one_ = 0;
};

struct ZMod {
  std::int64_t n;
  bool operator==(const ZMod&) const = default;
};

/// The integers localized at the complement of the union of the given
/// primes. An empty prime list denotes the rationals; it only arises as a
/// localization at the generic point.
struct ZLoc {
  std::vector<std::int64_t> primes;
  bool operator==(const ZLoc&) const = default;
};

enum class RingKind { zmod, zloc, table };

class RingInstance {
 public:
  static RingInstance zmod(std::int64_t n);
  /// Throws std::invalid_argument on an empty list, a non-prime or a duplicate.
  static RingInstance zloc(std::vector<std::int64_t> primes);
  static RingInstance rationals();
  static RingInstance table(TableRing ring);

  RingKind kind() const;
  const ZMod& as_zmod() const { return std::get<ZMod>(variant_); }
  const ZLoc& as_zloc() const { return std::get<ZLoc>(variant_); }
  const TableRing& as_table() const { return std::get<TableRing>(variant_); }
  bool is_rationals() const { return kind() == RingKind::zloc && as_zloc().primes.empty(); }

  bool is_finite() const { return kind() != RingKind::zloc; }
  /// Number of elements of a finite ring.
  std::size_t cardinality() const;
  /// Elements of a finite ring in index order.
  std::vector<Elem> elements() const;

  Elem zero() const;
  Elem one() const;
  Elem add(Elem a, Elem b) const;
  Elem neg(Elem a) const;
  Elem sub(Elem a, Elem b) const { return add(a, neg(b)); }
  Elem mul(Elem a, Elem b) const;
  /// Canonical form of an element given in presentation input.
  Elem normalize(Elem a) const;
  /// Image of an integer under Z -> R.
  Elem from_int(std::int64_t k) const;
  bool is_valid_element(Elem a) const;

  std::string element_label(Elem a) const;
  std::string describe() const;

  bool operator==(const RingInstance&) const = default;

 private:
  using Variant = std::variant<ZMod, ZLoc, TableRing>;
  explicit RingInstance(Variant v) : variant_(std::move(v)) {}
  Variant variant_;
};

struct PrimeIdeal {
  enum class Kind { rational_prime, generic, table };
  Kind kind = Kind::generic;
  std::int64_t p = 0;        // rational_prime
  ElementSet members = 0;    // table

  static PrimeIdeal rational(std::int64_t p) { return {Kind::rational_prime, p, 0}; }
  static PrimeIdeal zero_ideal() { return {Kind::generic, 0, 0}; }
  static PrimeIdeal table_ideal(ElementSet members) { return {Kind::table, 0, members}; }

  std::string label(const RingInstance& ring) const;
  bool operator==(const PrimeIdeal&) const = default;
};

/// κ(𝔭): a prime field, the rationals, or a finite quotient R/𝔭 of a table ring.
class ResidueField {
 public:
  static ResidueField prime_field(std::int64_t p);
  static ResidueField rational_field();
  /// Throws RingAxiomError if R/𝔭 is not a field.
  static ResidueField table_quotient(const TableRing& ring, ElementSet prime);

  std::int64_t characteristic() const { return characteristic_; }
  /// Number of elements; nullopt for the rationals.
  std::optional<std::uint64_t> size() const { return size_; }
  bool is_rationals() const { return !size_.has_value(); }
  std::string describe() const;

  /// Rank of a matrix of ring elements after reduction into the field.
  std::size_t rank_of(const RingInstance& ring, const Matrix& m) const;

  // Finite fields only: elements are indices 0..size()-1 with 0 the zero.
  std::size_t reduce(const RingInstance& ring, Elem a) const;
  std::size_t add(std::size_t a, std::size_t b) const;
  std::size_t mul(std::size_t a, std::size_t b) const;
  std::size_t neg(std::size_t a) const;
  std::size_t inv(std::size_t a) const;
  std::size_t one() const;

 private:
  std::int64_t characteristic_ = 0;
  std::optional<std::uint64_t> size_;
  // Table quotients only.
  std::vector<std::size_t> coset_of_;
  std::vector<std::vector<std::size_t>> add_;
  std::vector<std::vector<std::size_t>> mul_;
  std::vector<std::size_t> neg_;
  std::vector<std::size_t> inv_;
  std::size_t zero_ = 0;
  std::size_t one_ = 1;
};

struct Ideal {
  RingInstance ring;
  std::vector<Elem> generators;
};

/// Members of an ideal of a finite ring with at most 64 elements.
ElementSet ideal_members(const RingInstance& ring, const std::vector<Elem>& generators);

inline constexpr std::size_t kTableEnumerationCap = 16;

/// Spec(R), complete and duplicate-free.
std::vector<PrimeIdeal> enum_primes(const RingInstance& r);

/// Primes ordered by inclusion, labelled by PrimeIdeal::label.
SpectrumPoset specialization_order(const RingInstance& r);

ResidueField residue_field(const RingInstance& r, const PrimeIdeal& p);

/// R_𝔭. For finite rings this is the local factor in the idempotent
/// decomposition; at the generic point of the semi-local integers it is the
/// rationals.
RingInstance localize(const RingInstance& r, const PrimeIdeal& p);

/// Every ideal of a table ring with at most 16 elements, as closures of
/// generator sets, deduplicated. Generators of each result are its members.
std::vector<Ideal> oracle_enum_ideals(const RingInstance& r);

/// True iff the ring has exactly one maximal ideal.
bool is_local(const RingInstance& r);

/// Largest power of p dividing n.
std::int64_t prime_power_part(std::int64_t n, std::int64_t p);

}  // namespace rankmap
