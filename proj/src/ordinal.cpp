#include "rankmap/ordinal.hpp"

#include <charconv>
#include <limits>
#include <stdexcept>

#include "rankmap/finspace.hpp"

namespace rankmap {

std::string Ordinal::to_string() const {
  if (omega_part_ == 0) return std::to_string(finite_part_);
  if (finite_part_ == 0) return "w";
  return "w+" + std::to_string(finite_part_);
}

namespace {

std::uint64_t parse_natural(std::string_view digits, std::string_view whole) {
  if (digits.empty() || (digits.size() > 1 && digits.front() == '0')) {
    throw std::invalid_argument("malformed ordinal token '" + std::string(whole) + "'");
  }
  std::uint64_t value = 0;
  auto [ptr, ec] = std::from_chars(digits.data(), digits.data() + digits.size(), value);
  if (ec != std::errc() || ptr != digits.data() + digits.size()) {
    throw std::invalid_argument("malformed ordinal token '" + std::string(whole) + "'");
  }
  return value;
}

}  // namespace

Ordinal Ordinal::parse(std::string_view token) {
  if (token == "w") return omega();
  if (token.starts_with("w+")) {
    const auto k = parse_natural(token.substr(2), token);
    if (k == 0) throw std::invalid_argument("ordinal token 'w+0' is not canonical; use 'w'");
    return omega(k);
  }
  return finite(parse_natural(token, token));
}

Ordinal succ(Ordinal o) {
  if (o.finite_part() == std::numeric_limits<std::uint64_t>::max()) {
    throw std::range_error("successor of " + o.to_string() + " is not representable");
  }
  return o.is_finite() ? Ordinal::finite(o.finite_part() + 1) : Ordinal::omega(o.finite_part() + 1);
}

bool is_limit(Ordinal o) { return o.finite_part() == 0; }

Ordinal closure_of_point(const WellFoundedSpace& space, Ordinal beta) {
  if (!(beta < space.alpha)) {
    throw std::domain_error("point " + beta.to_string() + " is not in " + space.alpha.to_string());
  }
  // beta < alpha gives succ(beta) <= alpha.
  return succ(beta);
}

std::optional<Ordinal> generic_point_of_closed(const WellFoundedSpace& space, Ordinal beta) {
  if (space.alpha < beta) {
    throw std::domain_error(beta.to_string() + " is not a closed subset of " + space.alpha.to_string());
  }
  if (is_limit(beta)) return std::nullopt;
  return beta.is_finite() ? Ordinal::finite(beta.finite_part() - 1)
                          : Ordinal::omega(beta.finite_part() - 1);
}

bool is_irreducible_closed(const WellFoundedSpace& space, Ordinal beta) {
  if (space.alpha < beta) {
    throw std::domain_error(beta.to_string() + " is not a closed subset of " + space.alpha.to_string());
  }
  return beta != Ordinal{};
}

std::vector<std::uint64_t> wellfounded_closed_sets(std::uint64_t alpha) {
  if (alpha > 63) throw std::length_error("well-founded topology too large to enumerate");
  std::vector<std::uint64_t> sets;
  sets.reserve(alpha + 1);
  for (std::uint64_t k = 0; k <= alpha; ++k) sets.push_back((std::uint64_t{1} << k) - 1);
  return sets;
}

SpectralityReport spectrality(Ordinal alpha) {
  SpectralityReport report;
  if (!alpha.is_finite()) {
    report.spectral = false;
    report.witness = "closed set w is irreducible and has no generic point";
    return report;
  }
  report.spectral = true;
  if (alpha.finite_part() <= 63) {
    std::vector<PointSet> closed;
    for (auto bits : wellfounded_closed_sets(alpha.finite_part())) closed.emplace_back(bits);
    const FiniteTopology topo(alpha.finite_part(), std::move(closed));
    report.direct_check = topo.is_spectral();
    if (*report.direct_check != report.spectral) {
      throw std::logic_error("direct spectrality check disagrees for " + alpha.to_string());
    }
  }
  return report;
}

bool is_spectral(Ordinal alpha) { return spectrality(alpha).spectral; }

}  // namespace rankmap
