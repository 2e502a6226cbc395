#pragma once

#include <compare>
#include <cstdint>
#include <optional>
#include <string>
#include <string_view>
#include <vector>

namespace rankmap {

/// An ordinal below ω·2, written ω·omega_part + finite_part.
class Ordinal {
 public:
  constexpr Ordinal() = default;

  static constexpr Ordinal finite(std::uint64_t n) { return Ordinal(0, n); }
  static constexpr Ordinal omega(std::uint64_t k = 0) { return Ordinal(1, k); }

  constexpr std::uint8_t omega_part() const { return omega_part_; }
  constexpr std::uint64_t finite_part() const { return finite_part_; }
  constexpr bool is_finite() const { return omega_part_ == 0; }

  constexpr auto operator<=>(const Ordinal&) const = default;

  /// "7", "w", "w+3".
  std::string to_string() const;

  /// Accepts exactly the forms produced by to_string(). Throws std::invalid_argument.
  static Ordinal parse(std::string_view token);

 private:
  constexpr Ordinal(std::uint8_t omega_part, std::uint64_t finite_part)
      : omega_part_(omega_part), finite_part_(finite_part) {}

  std::uint8_t omega_part_ = 0;
  std::uint64_t finite_part_ = 0;
};

/// Throws std::range_error when the finite part would overflow.
Ordinal succ(Ordinal o);

/// 0 counts as a limit: it is not the successor of anything.
bool is_limit(Ordinal o);

/// The ordinal alpha with the well-founded topology. Points are the β < alpha,
/// closed sets are exactly the β ≤ alpha.
struct WellFoundedSpace {
  Ordinal alpha;
};

/// Closure of {beta}, returned as the closed set it names. Throws
/// std::domain_error unless beta < alpha.
Ordinal closure_of_point(const WellFoundedSpace& space, Ordinal beta);

/// The unique generic point of the closed set beta, if any.
std::optional<Ordinal> generic_point_of_closed(const WellFoundedSpace& space, Ordinal beta);

bool is_irreducible_closed(const WellFoundedSpace& space, Ordinal beta);

struct SpectralityReport {
  bool spectral = false;
  // Finite alpha only: result of checking the spectral-space axioms on the
  // explicit finite topology.
  std::optional<bool> direct_check;
  std::string witness;
};

/// Decides spectrality of the well-founded topology on alpha. For finite
/// alpha the axioms are also verified directly and must agree with
/// alpha < ω (a disagreement throws std::logic_error).
SpectralityReport spectrality(Ordinal alpha);
bool is_spectral(Ordinal alpha);

/// Finite alpha only. Closed sets as bitmasks over the points 0..alpha-1.
std::vector<std::uint64_t> wellfounded_closed_sets(std::uint64_t alpha);

/// Largest finite alpha for which exhaustive topology checks are run.
inline constexpr std::uint64_t kExhaustiveOrdinalCap = 12;

}  // namespace rankmap
