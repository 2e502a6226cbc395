#include "rankmap/finspace.hpp"

#include <algorithm>
#include <bit>
#include <set>
#include <stdexcept>

namespace rankmap {

PointSet PointSet::of(std::initializer_list<std::size_t> points) {
  PointSet s;
  for (auto p : points) s.insert(p);
  return s;
}

std::size_t PointSet::size() const { return static_cast<std::size_t>(std::popcount(bits_)); }

std::vector<std::size_t> PointSet::elements() const {
  std::vector<std::size_t> out;
  for (std::uint64_t b = bits_; b != 0; b &= b - 1) {
    out.push_back(static_cast<std::size_t>(std::countr_zero(b)));
  }
  return out;
}

SpectrumPoset::SpectrumPoset(std::vector<std::string> labels, std::vector<std::vector<bool>> leq)
    : labels_(std::move(labels)), leq_(std::move(leq)) {
  const auto n = labels_.size();
  if (n > kMaxPoints) throw std::invalid_argument("spectrum has more than 64 points");
  if (leq_.size() != n) throw std::invalid_argument("order relation has wrong size");
  for (const auto& row : leq_) {
    if (row.size() != n) throw std::invalid_argument("order relation has wrong size");
  }
  for (std::size_t p = 0; p < n; ++p) {
    if (!leq_[p][p]) throw std::invalid_argument("order relation is not reflexive");
    for (std::size_t q = 0; q < n; ++q) {
      if (p != q && leq_[p][q] && leq_[q][p]) {
        throw std::invalid_argument("order relation is not antisymmetric");
      }
      for (std::size_t r = 0; r < n; ++r) {
        if (leq_[p][q] && leq_[q][r] && !leq_[p][r]) {
          throw std::invalid_argument("order relation is not transitive");
        }
      }
    }
  }
}

SpectrumPoset SpectrumPoset::from_covers(std::vector<std::string> labels,
                                         const std::vector<std::pair<std::size_t, std::size_t>>& covers) {
  const auto n = labels.size();
  std::vector<std::vector<bool>> leq(n, std::vector<bool>(n, false));
  for (std::size_t p = 0; p < n; ++p) leq[p][p] = true;
  for (auto [lo, hi] : covers) {
    if (lo >= n || hi >= n) throw std::invalid_argument("cover relation names an unknown point");
    leq[lo][hi] = true;
  }
  // Warshall closure.
  for (std::size_t k = 0; k < n; ++k) {
    for (std::size_t i = 0; i < n; ++i) {
      if (!leq[i][k]) continue;
      for (std::size_t j = 0; j < n; ++j) {
        if (leq[k][j]) leq[i][j] = true;
      }
    }
  }
  return SpectrumPoset(std::move(labels), std::move(leq));
}

SpectrumPoset SpectrumPoset::antichain(std::size_t n) {
  std::vector<std::string> labels;
  for (std::size_t i = 0; i < n; ++i) labels.push_back(std::to_string(i));
  return from_covers(std::move(labels), {});
}

SpectrumPoset SpectrumPoset::chain(std::size_t n) {
  std::vector<std::string> labels;
  std::vector<std::pair<std::size_t, std::size_t>> covers;
  for (std::size_t i = 0; i < n; ++i) {
    labels.push_back(std::to_string(i));
    if (i > 0) covers.emplace_back(i - 1, i);
  }
  return from_covers(std::move(labels), covers);
}

std::vector<std::pair<std::size_t, std::size_t>> SpectrumPoset::covers() const {
  std::vector<std::pair<std::size_t, std::size_t>> out;
  const auto n = size();
  for (std::size_t p = 0; p < n; ++p) {
    for (std::size_t q = 0; q < n; ++q) {
      if (p == q || !leq_[p][q]) continue;
      bool between = false;
      for (std::size_t r = 0; r < n && !between; ++r) {
        between = r != p && r != q && leq_[p][r] && leq_[r][q];
      }
      if (!between) out.emplace_back(p, q);
    }
  }
  return out;
}

std::string to_string(TopologyKind kind) {
  switch (kind) {
    case TopologyKind::zariski: return "zariski";
    case TopologyKind::flat: return "flat";
    case TopologyKind::patch: return "patch";
  }
  return "?";
}

namespace {

void check_points(const SpectrumPoset& space, PointSet s) {
  if (!s.is_subset_of(space.all())) throw std::domain_error("point set names an unknown point");
}

}  // namespace

PointSet up_closure(const SpectrumPoset& space, PointSet s) {
  check_points(space, s);
  PointSet out = s;
  for (auto p : s.elements()) {
    for (std::size_t q = 0; q < space.size(); ++q) {
      if (space.leq(p, q)) out.insert(q);
    }
  }
  return out;
}

PointSet down_closure(const SpectrumPoset& space, PointSet s) {
  check_points(space, s);
  PointSet out = s;
  for (auto p : s.elements()) {
    for (std::size_t q = 0; q < space.size(); ++q) {
      if (space.leq(q, p)) out.insert(q);
    }
  }
  return out;
}

bool is_closed(const SpectrumPoset& space, PointSet s, TopologyKind kind) {
  switch (kind) {
    case TopologyKind::zariski: return up_closure(space, s) == s;
    case TopologyKind::flat: return down_closure(space, s) == s;
    case TopologyKind::patch: check_points(space, s); return true;
  }
  return false;
}

bool is_open(const SpectrumPoset& space, PointSet s, TopologyKind kind) {
  check_points(space, s);
  return is_closed(space, s.complement(space.size()), kind);
}

std::vector<PointSet> closed_sets(const SpectrumPoset& space, TopologyKind kind) {
  if (space.size() > 20) throw std::length_error("too many points to enumerate closed sets");
  std::vector<PointSet> out;
  const std::uint64_t limit = std::uint64_t{1} << space.size();
  for (std::uint64_t bits = 0; bits < limit; ++bits) {
    if (is_closed(space, PointSet(bits), kind)) out.emplace_back(bits);
  }
  return out;
}

std::string to_string(const Target& target) {
  if (std::holds_alternative<DiscreteTarget>(target)) return "discrete";
  return "wellfounded(" + std::get<WellFoundedTarget>(target).alpha.to_string() + ")";
}

bool is_continuous(const PointMap& map, TopologyKind source_kind, const Target& target) {
  const auto& space = map.source;
  if (map.values.size() != space.size()) throw std::invalid_argument("point map is not total");
  const std::set<Ordinal> attained(map.values.begin(), map.values.end());

  auto preimage = [&](auto pred) {
    PointSet s;
    for (std::size_t p = 0; p < space.size(); ++p) {
      if (pred(map.values[p])) s.insert(p);
    }
    return s;
  };

  if (std::holds_alternative<DiscreteTarget>(target)) {
    return std::all_of(attained.begin(), attained.end(), [&](Ordinal v) {
      return is_open(space, preimage([v](Ordinal x) { return x == v; }), source_kind);
    });
  }

  const Ordinal alpha = std::get<WellFoundedTarget>(target).alpha;
  for (auto v : attained) {
    if (!(v < alpha)) {
      throw std::domain_error("value " + v.to_string() + " is not a point of " + alpha.to_string());
    }
  }
  // The preimage of the closed set t only changes when t crosses an attained
  // value, so t in {0, alpha} ∪ {v, v+1} covers every distinct preimage.
  std::set<Ordinal> thresholds{Ordinal{}, alpha};
  for (auto v : attained) {
    thresholds.insert(v);
    thresholds.insert(succ(v));
  }
  for (auto t : thresholds) {
    if (alpha < t) continue;
    if (!is_closed(space, preimage([t](Ordinal x) { return x < t; }), source_kind)) return false;
  }
  return true;
}

bool is_specialization_stable(const PointMap& map) {
  const auto& space = map.source;
  for (std::size_t p = 0; p < space.size(); ++p) {
    for (std::size_t q = 0; q < space.size(); ++q) {
      if (space.leq(p, q) && map.values[p] != map.values[q]) return false;
    }
  }
  return true;
}

bool arbitrary_meet_of_flat_opens_is_open(const SpectrumPoset& space) {
  if (space.size() > 15) throw std::length_error("flat-open meet check is capped at 15 points");
  std::vector<PointSet> opens;
  const std::uint64_t limit = std::uint64_t{1} << space.size();
  for (std::uint64_t bits = 0; bits < limit; ++bits) {
    if (is_open(space, PointSet(bits), TopologyKind::flat)) opens.emplace_back(bits);
  }
  // Every family of subsets of a finite set is finite, so closure under
  // pairwise meets is closure under arbitrary meets. The empty family meets
  // to the whole space.
  if (!is_open(space, space.all(), TopologyKind::flat)) return false;
  for (auto a : opens) {
    for (auto b : opens) {
      if (!is_open(space, a & b, TopologyKind::flat)) return false;
    }
  }
  return true;
}

FiniteTopology::FiniteTopology(std::size_t n, std::vector<PointSet> closed)
    : n_(n), closed_(std::move(closed)) {
  if (n_ > kMaxPoints) throw std::invalid_argument("finite topology has more than 64 points");
  for (auto c : closed_) {
    if (!c.is_subset_of(PointSet::all(n_))) throw std::invalid_argument("closed set out of range");
  }
  std::sort(closed_.begin(), closed_.end(), [](PointSet a, PointSet b) { return a.bits() < b.bits(); });
  closed_.erase(std::unique(closed_.begin(), closed_.end()), closed_.end());
}

std::vector<PointSet> FiniteTopology::opens() const {
  std::vector<PointSet> out;
  out.reserve(closed_.size());
  for (auto c : closed_) out.push_back(c.complement(n_));
  return out;
}

bool FiniteTopology::is_closed(PointSet s) const {
  return std::binary_search(closed_.begin(), closed_.end(), s,
                            [](PointSet a, PointSet b) { return a.bits() < b.bits(); });
}

bool FiniteTopology::is_open(PointSet s) const { return is_closed(s.complement(n_)); }

PointSet FiniteTopology::closure(PointSet s) const {
  PointSet out = PointSet::all(n_);
  for (auto c : closed_) {
    if (s.is_subset_of(c)) out = out & c;
  }
  return out;
}

bool FiniteTopology::satisfies_axioms() const {
  if (!is_closed(PointSet{}) || !is_closed(PointSet::all(n_))) return false;
  for (std::size_t i = 0; i < closed_.size(); ++i) {
    for (std::size_t j = i + 1; j < closed_.size(); ++j) {
      if (!is_closed(closed_[i] | closed_[j]) || !is_closed(closed_[i] & closed_[j])) return false;
    }
  }
  return true;
}

bool FiniteTopology::is_t0() const {
  std::set<std::uint64_t> seen;
  for (std::size_t p = 0; p < n_; ++p) {
    if (!seen.insert(closure(PointSet::of({p})).bits()).second) return false;
  }
  return true;
}

bool FiniteTopology::is_irreducible(PointSet closed_set) const {
  if (closed_set.empty()) return false;
  for (auto a : closed_) {
    if (a == closed_set || !a.is_subset_of(closed_set)) continue;
    for (auto b : closed_) {
      if (b == closed_set || !b.is_subset_of(closed_set)) continue;
      if ((a | b) == closed_set) return false;
    }
  }
  return true;
}

std::vector<std::size_t> FiniteTopology::generic_points(PointSet closed_set) const {
  std::vector<std::size_t> out;
  for (auto p : closed_set.elements()) {
    if (closure(PointSet::of({p})) == closed_set) out.push_back(p);
  }
  return out;
}

bool FiniteTopology::is_sober() const {
  return std::all_of(closed_.begin(), closed_.end(), [this](PointSet c) {
    return !is_irreducible(c) || generic_points(c).size() == 1;
  });
}

bool FiniteTopology::is_discrete() const {
  for (std::size_t p = 0; p < n_; ++p) {
    if (!is_closed(PointSet::of({p}))) return false;
  }
  return true;
}

bool FiniteTopology::is_spectral() const {
  if (!satisfies_axioms() || !is_t0()) return false;
  const auto open_sets = opens();
  for (auto u : open_sets) {
    for (auto v : open_sets) {
      if (!is_open(u & v)) return false;
    }
  }
  return is_sober();
}

FiniteTopology FiniteTopology::subspace(PointSet subset) const {
  const auto points = subset.elements();
  std::vector<PointSet> induced;
  for (auto c : closed_) {
    PointSet s;
    for (std::size_t i = 0; i < points.size(); ++i) {
      if (c.contains(points[i])) s.insert(i);
    }
    induced.push_back(s);
  }
  return FiniteTopology(points.size(), std::move(induced));
}

bool FiniteTopology::same_closed_sets(const FiniteTopology& other) const {
  return n_ == other.n_ && closed_ == other.closed_;
}

FiniteTopology topology(const SpectrumPoset& space, TopologyKind kind) {
  return FiniteTopology(space.size(), closed_sets(space, kind));
}

}  // namespace rankmap
