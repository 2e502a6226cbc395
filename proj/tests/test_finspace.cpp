#include "doctest.h"

#include <functional>
#include <set>
#include <stdexcept>

#include "rankmap/finspace.hpp"

using namespace rankmap;

namespace {

// Spec of the integers localized at {2,3}: generic point below (2) and (3).
SpectrumPoset zloc23() { return SpectrumPoset::from_covers({"0", "2", "3"}, {{0, 1}, {0, 2}}); }

PointMap map_of(SpectrumPoset s, std::vector<std::uint64_t> v) {
  PointMap m{std::move(s), {}};
  for (auto x : v) m.values.push_back(Ordinal::finite(x));
  return m;
}

// Calls f once on every poset with n points, up to relabeling: the distinct
// orders generated by subsets of the pairs i < j.
void for_each_poset(std::size_t n, const std::function<void(const SpectrumPoset&)>& f) {
  std::vector<std::pair<std::size_t, std::size_t>> pairs;
  for (std::size_t i = 0; i < n; ++i)
    for (std::size_t j = i + 1; j < n; ++j) pairs.emplace_back(i, j);
  std::vector<std::string> labels;
  for (std::size_t i = 0; i < n; ++i) labels.push_back(std::to_string(i));
  std::set<std::vector<std::pair<std::size_t, std::size_t>>> seen;
  for (std::uint64_t mask = 0; mask < (std::uint64_t{1} << pairs.size()); ++mask) {
    std::vector<std::pair<std::size_t, std::size_t>> covers;
    for (std::size_t k = 0; k < pairs.size(); ++k)
      if ((mask >> k) & 1U) covers.push_back(pairs[k]);
    auto poset = SpectrumPoset::from_covers(labels, covers);
    if (seen.insert(poset.covers()).second) f(poset);
  }
}

}  // namespace

TEST_CASE("poset validation") {
  CHECK_THROWS_AS(SpectrumPoset({"a", "b"}, {{true, true}, {true, true}}), std::invalid_argument);
  CHECK_THROWS_AS(SpectrumPoset({"a"}, {{false}}), std::invalid_argument);
  CHECK_NOTHROW(SpectrumPoset::chain(3));
  CHECK(SpectrumPoset::chain(3).leq(0, 2));
  CHECK(zloc23().covers().size() == 2);
}

TEST_CASE("up_closure") {
  const auto chain = SpectrumPoset::chain(2);
  CHECK(up_closure(chain, PointSet::of({0})) == PointSet::of({0, 1}));
  CHECK(up_closure(chain, PointSet::of({1})) == PointSet::of({1}));
  CHECK(up_closure(SpectrumPoset::antichain(2), PointSet::of({0})) == PointSet::of({0}));
  CHECK_THROWS_AS(up_closure(chain, PointSet::of({5})), std::domain_error);
}

TEST_CASE("is_closed") {
  const auto chain = SpectrumPoset::chain(2);
  CHECK(is_closed(chain, PointSet::of({1}), TopologyKind::zariski));
  CHECK_FALSE(is_closed(chain, PointSet::of({0}), TopologyKind::zariski));
  CHECK(is_closed(chain, PointSet::of({0}), TopologyKind::flat));
  for (std::uint64_t b = 0; b < 4; ++b) CHECK(is_closed(chain, PointSet(b), TopologyKind::patch));
  CHECK_THROWS_AS(is_closed(chain, PointSet::of({3}), TopologyKind::patch), std::domain_error);
}

TEST_CASE("is_continuous") {
  const auto s = zloc23();
  for (auto kind : {TopologyKind::zariski, TopologyKind::flat, TopologyKind::patch}) {
    CHECK(is_continuous(map_of(s, {2, 2, 2}), kind, DiscreteTarget{}));
    CHECK(is_continuous(map_of(s, {2, 2, 2}), kind, WellFoundedTarget{Ordinal::omega()}));
  }
  const auto m = map_of(s, {0, 1, 0});
  CHECK_FALSE(is_continuous(m, TopologyKind::zariski, DiscreteTarget{}));
  CHECK(is_continuous(m, TopologyKind::patch, WellFoundedTarget{Ordinal::omega()}));
  CHECK(is_continuous(m, TopologyKind::patch, DiscreteTarget{}));
  // {x : ψ(x) < 1} = {0, (3)} is not an up-set
  CHECK_FALSE(is_continuous(m, TopologyKind::zariski, WellFoundedTarget{Ordinal::omega()}));
  CHECK_THROWS_AS(is_continuous(m, TopologyKind::zariski, WellFoundedTarget{Ordinal::finite(1)}),
                  std::domain_error);
}

TEST_CASE("well-founded continuity with an omega value") {
  // Synthetic map with value ω on a chain: lower set {ψ < t} must be closed.
  const auto chain = SpectrumPoset::chain(2);
  PointMap m{chain, {Ordinal::omega(), Ordinal::finite(3)}};
  // {ψ < t} for t in (3, ω] is {1}: an up-set, not a down-set.
  CHECK(is_continuous(m, TopologyKind::zariski, WellFoundedTarget{Ordinal::omega(1)}));
  CHECK_FALSE(is_continuous(m, TopologyKind::flat, WellFoundedTarget{Ordinal::omega(1)}));
}

TEST_CASE("specialization stability") {
  CHECK(is_specialization_stable(map_of(zloc23(), {1, 1, 1})));
  CHECK_FALSE(is_specialization_stable(map_of(zloc23(), {0, 1, 1})));
  CHECK(is_specialization_stable(map_of(SpectrumPoset::antichain(3), {0, 1, 2})));
}

TEST_CASE("arbitrary meets of flat opens") {
  CHECK(arbitrary_meet_of_flat_opens_is_open(SpectrumPoset::chain(2)));
  CHECK(arbitrary_meet_of_flat_opens_is_open(SpectrumPoset::antichain(3)));
  CHECK(arbitrary_meet_of_flat_opens_is_open(SpectrumPoset{}));
  CHECK_THROWS_AS(arbitrary_meet_of_flat_opens_is_open(SpectrumPoset::antichain(16)), std::length_error);
}

TEST_CASE("closed families are topologies, dual, and refined by patch") {
  for (std::size_t n = 0; n <= 6; ++n) {
    for_each_poset(n, [&](const SpectrumPoset& s) {
      const auto all = s.all();
      for (auto kind : {TopologyKind::zariski, TopologyKind::flat, TopologyKind::patch}) {
        REQUIRE(topology(s, kind).satisfies_axioms());
      }
      for (std::uint64_t b = 0; b <= all.bits(); ++b) {
        const PointSet x(b);
        const bool z = is_closed(s, x, TopologyKind::zariski);
        REQUIRE(z == is_closed(s, x.complement(n), TopologyKind::flat));
        REQUIRE(z == (down_closure(s, x.complement(n)) == x.complement(n)));
        REQUIRE(is_closed(s, x, TopologyKind::patch));
      }
    });
  }
}

TEST_CASE("finite spectra from posets are spectral and sober in Zariski and flat") {
  for (std::size_t n = 0; n <= 4; ++n) {
    for_each_poset(n, [&](const SpectrumPoset& s) {
      CHECK(topology(s, TopologyKind::zariski).is_spectral());
      CHECK(topology(s, TopologyKind::flat).is_spectral());
      CHECK(topology(s, TopologyKind::patch).is_discrete());
    });
  }
}

TEST_CASE("patch continuity is unconditional on finite spectra") {
  for (std::size_t n = 1; n <= 4; ++n) {
    for_each_poset(n, [&](const SpectrumPoset& s) {
      for (std::uint64_t code = 0; code < (std::uint64_t{1} << n); ++code) {
        std::vector<std::uint64_t> v;
        for (std::size_t i = 0; i < n; ++i) v.push_back((code >> i) & 1U);
        const auto m = map_of(s, v);
        const bool discrete = is_continuous(m, TopologyKind::patch, DiscreteTarget{});
        const bool wf = is_continuous(m, TopologyKind::patch, WellFoundedTarget{Ordinal::omega()});
        CHECK(discrete);
        CHECK(wf);
      }
    });
  }
}

TEST_CASE("arbitrary meets of flat opens on all small posets") {
  for (std::size_t n = 0; n <= 4; ++n) {
    for_each_poset(n, [&](const SpectrumPoset& s) { CHECK(arbitrary_meet_of_flat_opens_is_open(s)); });
  }
}
