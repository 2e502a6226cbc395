#include "rankmap/verify.hpp"

#include <algorithm>
#include <chrono>
#include <iomanip>
#include <numeric>
#include <random>
#include <sstream>

namespace rankmap {

using nlohmann::json;

namespace {

constexpr std::array<std::string_view, 12> kSuiteNames{"th11",    "th22",      "lemma33",  "prop2",
                                                       "lemma566", "prop1",    "prop300",  "thm721000",
                                                       "theorem1", "th190",    "lemma400", "appendix"};

const std::string kPatchLimitation =
    "patch topology on a finite spectrum is discrete, so patch continuity holds unconditionally; only the "
    "projective => continuous direction is falsifiable at this scale";
const std::string kFlatLimitation =
    "f.g. flat and projective coincide on every supported ring, so the <= direction of the projectivity / "
    "patch-continuity equivalence is structurally vacuous";

const Target kDiscrete = DiscreteTarget{};
const Target kOmega = WellFoundedTarget{Ordinal::omega()};
const Target kOmegaPlus = WellFoundedTarget{Ordinal::omega(1)};

json labels_of(const SpectrumPoset& space, PointSet s) {
  json out = json::array();
  for (auto p : s.elements()) out.push_back(space.labels()[p]);
  return out;
}

json rank_map_json(const RankMap& rm) {
  json out = json::object();
  for (std::size_t i = 0; i < rm.primes.size(); ++i) out[rm.spectrum.labels()[i]] = rm.dims[i];
  return out;
}

bool continuous(const RankMap& rm, TopologyKind kind, const Target& target) {
  return is_continuous(rm.as_point_map(), kind, target);
}

// ψ^{-1}({n}) for each attained n.
std::map<std::size_t, PointSet> level_sets(const RankMap& rm) {
  std::map<std::size_t, PointSet> out;
  for (std::size_t i = 0; i < rm.dims.size(); ++i) out[rm.dims[i]].insert(i);
  return out;
}

// ---------------------------------------------------------------------------
// Module suites

void th11(const Presentation& m, Verdict& v) {
  const auto c = classify(m);
  const auto& ring = m.ring();
  json table = json::array();
  json failing = json::array();
  for (const auto& p : enum_primes(ring)) {
    const bool fiber_zero = fiber_dim(m, p) == 0;
    const bool pm = is_pM_equal_M(m, p);
    json row{{"prime", p.label(ring)}, {"localization_zero", fiber_zero}, {"pM_equals_M", pm}};
    if (fiber_zero != pm) failing.push_back(row);
    table.push_back(std::move(row));
  }
  if (!c.is_projective && !c.is_flat) {
    v.status = Status::vacuous;
    v.notes.push_back("module is neither projective nor flat");
    v.witnesses.push_back({{"truth_table", table}});
    return;
  }
  v.status = failing.empty() ? Status::pass : Status::fail;
  v.witnesses = failing.empty() ? table : failing;
}

void th22(const Presentation& m, Verdict& v) {
  const auto space = specialization_order(m.ring());
  const auto s = support(m);
  json evidence{{"support", labels_of(space, s)},
                {"zariski_closed", is_closed(space, s, TopologyKind::zariski)},
                {"zariski_open", is_open(space, s, TopologyKind::zariski)},
                {"flat_closed", is_closed(space, s, TopologyKind::flat)},
                {"flat_open", is_open(space, s, TopologyKind::flat)}};
  v.witnesses.push_back(evidence);
  if (!classify(m).is_projective) {
    v.status = Status::vacuous;
    v.notes.push_back("module is not projective");
    return;
  }
  const bool ok = evidence["zariski_closed"] && evidence["zariski_open"] && evidence["flat_closed"] &&
                  evidence["flat_open"];
  v.status = ok ? Status::pass : Status::fail;
}

void lemma33(const Presentation& m, Verdict& v) {
  if (!classify(m).is_locally_free) {
    v.status = Status::vacuous;
    v.notes.push_back("module is not locally free");
    return;
  }
  const auto rm = rank_map(m);
  const auto space = rm.spectrum;
  v.status = Status::pass;
  for (std::size_t n = 0; n <= m.generators() + 1; ++n) {
    const auto ext = ext_presentation(m, n);
    const auto actual = support(ext);
    PointSet expected;
    for (std::size_t i = 0; i < rm.dims.size(); ++i)
      if (rm.dims[i] >= n) expected.insert(i);
    const bool projective = classify(ext).is_projective;
    if (actual != expected || !projective) {
      v.status = Status::fail;
      v.witnesses.push_back({{"n", n},
                             {"support", labels_of(space, actual)},
                             {"rank_at_least_n", labels_of(space, expected)},
                             {"exterior_power_projective", projective}});
    }
  }
}

void prop2(const Presentation& m, Verdict& v) {
  const auto rm = rank_map(m);
  const bool z = continuous(rm, TopologyKind::zariski, kDiscrete);
  const bool f = continuous(rm, TopologyKind::flat, kDiscrete);
  v.witnesses.push_back({{"rank_map", rank_map_json(rm)}, {"zariski_discrete", z}, {"flat_discrete", f}});
  if (!classify(m).is_projective) {
    v.status = Status::vacuous;
    v.notes.push_back("module is not projective");
    return;
  }
  v.status = z && f ? Status::pass : Status::fail;
}

void lemma566(const Presentation& m, const std::string& label, Verdict& v) {
  const auto rm = rank_map(m);
  const bool patch = continuous(rm, TopologyKind::patch, kDiscrete);
  const bool z = continuous(rm, TopologyKind::zariski, kDiscrete);
  const bool f = continuous(rm, TopologyKind::flat, kDiscrete);
  json evidence{{"rank_map", rank_map_json(rm)}, {"patch_discrete", patch}, {"zariski_discrete", z},
                {"flat_discrete", f}};
  v.witnesses.push_back(evidence);
  if (!classify(m).is_locally_free) {
    v.status = Status::vacuous;
    v.notes.push_back("module is not locally free");
    if (patch && !(z && f)) {
      v.notes.push_back("hypothesis-necessity witness: patch continuous but not both Zariski and flat continuous");
      json w = evidence;
      w["instance"] = label;
      w["missing_hypothesis"] = "locally free";
      v.hypothesis_necessity = std::move(w);
    }
    return;
  }
  if (!patch) {
    v.status = Status::vacuous;
    v.notes.push_back("rank map is not patch continuous");
    return;
  }
  v.status = z && f ? Status::pass : Status::fail;
}

void prop1(const Presentation& m, Verdict& v) {
  const auto c = classify(m);
  if (!c.is_flat) {
    v.status = Status::vacuous;
    v.notes.push_back("module is not flat");
    return;
  }
  v.notes.push_back("flatness is identified with projectivity on this backend");
  const auto rm = rank_map(m);
  v.status = Status::pass;
  if (!continuous(rm, TopologyKind::patch, kDiscrete) || !continuous(rm, TopologyKind::patch, kOmega)) {
    v.status = Status::fail;
    v.witnesses.push_back({{"rank_map", rank_map_json(rm)}, {"patch_continuous", false}});
  }
  // Finitely many minimal primes and maximal ideals: every level set is
  // Zariski open and flat open.
  for (const auto& [n, level] : level_sets(rm)) {
    const bool zo = is_open(rm.spectrum, level, TopologyKind::zariski);
    const bool fo = is_open(rm.spectrum, level, TopologyKind::flat);
    if (!zo || !fo) {
      v.status = Status::fail;
      v.witnesses.push_back({{"rank", n}, {"level_set", labels_of(rm.spectrum, level)}, {"zariski_open", zo},
                             {"flat_open", fo}});
    }
  }
  if (!c.is_projective) {
    v.status = Status::fail;
    v.witnesses.push_back({{"flat", true}, {"projective", false}});
  }
}

void prop300(const Presentation& m, Verdict& v) {
  const auto rm = rank_map(m);
  json evidence{{"rank_map", rank_map_json(rm)}};
  bool ok = true;
  for (auto kind : {TopologyKind::zariski, TopologyKind::flat}) {
    for (const auto* target : {&kOmega, &kOmegaPlus}) {
      const bool c = continuous(rm, kind, *target);
      evidence[to_string(kind) + "_" + to_string(*target)] = c;
      ok = ok && c;
    }
  }
  v.witnesses.push_back(evidence);
  v.notes.push_back(kPatchLimitation);
  if (!classify(m).is_projective) {
    v.status = Status::vacuous;
    v.notes.push_back("module is not projective");
    return;
  }
  v.status = ok ? Status::pass : Status::fail;
}

void thm721000(const Presentation& m, Verdict& v) {
  const auto c = classify(m);
  const auto rm = rank_map(m);
  const bool patch = continuous(rm, TopologyKind::patch, kOmega);
  v.witnesses.push_back({{"projective", c.is_projective}, {"patch_continuous_wellfounded_omega", patch}});
  v.notes.push_back(kPatchLimitation);
  v.notes.push_back(kFlatLimitation);
  if (!c.is_flat) {
    v.status = Status::vacuous;
    v.notes.push_back("module is not flat");
    return;
  }
  v.status = c.is_projective == patch ? Status::pass : Status::fail;
}

void lemma400(const RingInstance& ring, Verdict& v) {
  const auto space = specialization_order(ring);
  if (space.size() > 15) {
    v.status = Status::vacuous;
    v.notes.push_back("spectrum too large for exhaustive subfamily enumeration");
    return;
  }
  const bool ok = arbitrary_meet_of_flat_opens_is_open(space);
  v.witnesses.push_back({{"points", space.size()}, {"meets_of_flat_opens_open", ok}});
  v.status = ok ? Status::pass : Status::fail;
}

constexpr std::uint64_t kSuiteKernelScanCap = std::uint64_t{1} << 12;

void appendix_module(const Presentation& m, Verdict& v) {
  const auto& ring = m.ring();
  v.status = Status::pass;
  for (const auto& p : enum_primes(ring)) {
    for (std::size_t n = 0; n <= 3; ++n) {
      const auto check = base_change_fiber_check(m, n, p);
      if (!check.equal) {
        v.status = Status::fail;
        v.witnesses.push_back({{"prime", p.label(ring)}, {"n", n}, {"lhs", check.lhs}, {"rhs", check.rhs}});
      }
    }
  }
  // δ on the free cover R^g.
  std::size_t skipped = 0;
  for (std::size_t n = 1; n <= std::min<std::size_t>(m.generators(), 3); ++n) {
    try {
      if (!has_zero_kernel(ring, delta_matrix(m.generators(), n, ring), kSuiteKernelScanCap)) {
        v.status = Status::fail;
        v.witnesses.push_back({{"delta_not_injective", true}, {"g", m.generators()}, {"n", n}});
      }
    } catch (const CapExceeded&) {
      ++skipped;
    }
  }
  if (skipped > 0) v.notes.push_back("delta kernel scan skipped for " + std::to_string(skipped) + " degree(s)");
}

json flags_json(const AlternatingFlags& f) {
  return {{"multilinear", f.multilinear},
          {"alternating", f.alternating},
          {"alternating_adjacent", f.alternating_adjacent},
          {"skew_symmetric", f.skew_symmetric}};
}

void appendix_table(const TableInstance& t, Verdict& v) {
  const auto f = alternating_report(t.table);
  v.witnesses.push_back(flags_json(f));
  v.status = Status::pass;
  if (f.multilinear && f.alternating && !f.skew_symmetric) {
    v.status = Status::fail;
    v.notes.push_back("alternating multilinear map that is not skew-symmetric");
  }
  if (f.multilinear && f.alternating != f.alternating_adjacent) {
    v.status = Status::fail;
    v.notes.push_back("alternating and adjacent-alternating disagree on a multilinear map");
  }
  if (t.expected && !(*t.expected == f)) {
    v.status = Status::fail;
    v.witnesses.push_back({{"expected", flags_json(*t.expected)}});
  }
  if (f.multilinear && f.skew_symmetric && !f.alternating) {
    v.notes.push_back("skew-symmetric but not alternating");
  }
}

// ---------------------------------------------------------------------------
// Ordinal suites

void theorem1_finite(std::uint64_t a, Verdict& v) {
  std::vector<PointSet> closed;
  for (auto c : wellfounded_closed_sets(a)) closed.emplace_back(c);
  const FiniteTopology topo(a, closed);
  const WellFoundedSpace space{Ordinal::finite(a)};
  auto fail = [&](json w) {
    v.status = Status::fail;
    v.witnesses.push_back(std::move(w));
  };
  v.status = Status::pass;

  if (!topo.satisfies_axioms()) fail({{"check", "topology axioms"}});
  // (i) closure of a point is its successor
  for (std::uint64_t b = 0; b < a; ++b) {
    const auto c = closure_of_point(space, Ordinal::finite(b));
    const auto direct = topo.closure(PointSet::of({b}));
    if (c != Ordinal::finite(b + 1) || direct != PointSet::all(b + 1))
      fail({{"check", "closure of a point"}, {"point", b}});
  }
  // (ii) irreducible closed sets have exactly one generic point
  for (std::uint64_t b = 0; b <= a; ++b) {
    const PointSet set = PointSet::all(b);
    const bool irreducible = topo.is_irreducible(set);
    if (irreducible != is_irreducible_closed(space, Ordinal::finite(b)))
      fail({{"check", "irreducibility"}, {"closed_set", b}});
    const auto generic = topo.generic_points(set);
    const auto formula = generic_point_of_closed(space, Ordinal::finite(b));
    const bool agree = irreducible ? generic.size() == 1 && formula == Ordinal::finite(generic.front())
                                   : generic.empty() && !formula.has_value();
    if (!agree) fail({{"check", "generic point"}, {"closed_set", b}});
  }
  // (iii) subspace topology
  for (std::uint64_t b = 0; b < a; ++b) {
    std::vector<PointSet> sub;
    for (auto c : wellfounded_closed_sets(b)) sub.emplace_back(c);
    if (!topo.subspace(PointSet::all(b)).same_closed_sets(FiniteTopology(b, sub)))
      fail({{"check", "subspace topology"}, {"beta", b}});
  }
  // (v) arbitrary unions and (vi) quasi-compact opens, over all subfamilies
  const std::size_t k = closed.size();
  for (std::uint64_t fam = 1; fam < (std::uint64_t{1} << k); ++fam) {
    std::uint64_t join = 0;
    for (std::size_t i = 0; i < k; ++i)
      if ((fam >> i) & 1U) join |= closed[i].bits();
    if (!topo.is_closed(PointSet(join))) fail({{"check", "union of closed sets"}, {"family", fam}});
    // The opens indexed by fam cover their union; the one with the least
    // complement is already that union.
    const std::uint64_t full = PointSet::all(a).bits();
    std::uint64_t cover = 0;
    std::size_t least = k;
    for (std::size_t i = 0; i < k; ++i) {
      if (!((fam >> i) & 1U)) continue;
      cover |= full & ~closed[i].bits();
      least = std::min(least, i);
    }
    if ((full & ~closed[least].bits()) != cover) fail({{"check", "quasi-compact open"}, {"family", fam}});
  }
  // (vii) noetherian: closed sets form a finite chain
  for (std::size_t i = 1; i < k; ++i)
    if (!closed[i - 1].is_subset_of(closed[i])) fail({{"check", "closed sets form a chain"}});
  if (topo.is_discrete() != (a <= 1)) fail({{"check", "discreteness boundary"}});
}

void theorem1_infinite(Ordinal alpha, Verdict& v) {
  const WellFoundedSpace space{alpha};
  v.status = Status::pass;
  std::vector<Ordinal> points;
  for (std::uint64_t k = 0; k <= 5; ++k) points.push_back(Ordinal::finite(k));
  for (std::uint64_t k = 0; k <= 5 && Ordinal::omega(k) < alpha; ++k) points.push_back(Ordinal::omega(k));
  for (auto b : points) {
    const auto c = closure_of_point(space, b);
    if (c != succ(b) || generic_point_of_closed(space, c) != b || !is_irreducible_closed(space, c)) {
      v.status = Status::fail;
      v.witnesses.push_back({{"check", "closure of a point"}, {"point", b.to_string()}});
    }
  }
  const auto w = Ordinal::omega();
  if (!is_irreducible_closed(space, w) || generic_point_of_closed(space, w).has_value()) {
    v.status = Status::fail;
    v.witnesses.push_back({{"check", "closed set w"}});
  } else {
    v.witnesses.push_back({{"closed_set", "w"}, {"irreducible", true}, {"generic_point", nullptr}});
  }
  v.notes.push_back("infinite ordinal: checked on sample points; noetherianity is proof-level only");
}

void theorem1(Ordinal alpha, Verdict& v) {
  if (alpha.is_finite() && alpha.finite_part() <= kExhaustiveOrdinalCap) {
    theorem1_finite(alpha.finite_part(), v);
  } else if (alpha.is_finite()) {
    v.status = Status::vacuous;
    v.notes.push_back("finite ordinal above the exhaustive cap of " + std::to_string(kExhaustiveOrdinalCap));
  } else {
    theorem1_infinite(alpha, v);
  }
}

void th190(Ordinal alpha, Verdict& v) {
  const auto r = spectrality(alpha);
  json evidence{{"alpha", alpha.to_string()}, {"spectral", r.spectral}};
  if (r.direct_check) evidence["direct_check"] = *r.direct_check;
  if (!r.witness.empty()) evidence["witness"] = r.witness;
  v.witnesses.push_back(evidence);
  const bool expected = alpha.is_finite();
  const bool agree = r.spectral == expected && (!r.direct_check || *r.direct_check == expected);
  v.status = agree ? Status::pass : Status::fail;
}

std::string describe_module(const Presentation& m) {
  std::ostringstream out;
  out << m.ring().describe() << " g=" << m.generators() << " rel=[";
  for (std::size_t i = 0; i < m.relations().size(); ++i) {
    out << (i ? "," : "") << "(";
    for (std::size_t j = 0; j < m.relations()[i].size(); ++j) out << (j ? "," : "") << m.relations()[i][j];
    out << ")";
  }
  out << "]";
  return out.str();
}

}  // namespace

std::string to_string(SuiteId id) { return std::string(kSuiteNames.at(static_cast<std::size_t>(id))); }

std::optional<SuiteId> parse_suite(std::string_view name) {
  for (std::size_t i = 0; i < kSuiteNames.size(); ++i)
    if (kSuiteNames[i] == name) return static_cast<SuiteId>(i);
  return std::nullopt;
}

std::string to_string(Status s) {
  switch (s) {
    case Status::pass: return "pass";
    case Status::fail: return "fail";
    case Status::vacuous: return "vacuous";
  }
  return "?";
}

const std::string& label_of(const Instance& instance) {
  return std::visit([](const auto& i) -> const std::string& { return i.label; }, instance);
}

bool suite_accepts(SuiteId id, const Instance& instance) {
  switch (id) {
    case SuiteId::theorem1:
    case SuiteId::th190: return std::holds_alternative<OrdinalInstance>(instance);
    case SuiteId::appendix: return !std::holds_alternative<OrdinalInstance>(instance);
    default: return std::holds_alternative<ModuleInstance>(instance);
  }
}

json Verdict::to_json() const {
  json out{{"suite", rankmap::to_string(suite)},
           {"instance", instance},
           {"status", rankmap::to_string(status)},
           {"witnesses", witnesses},
           {"notes", notes},
           {"runtime_ms", runtime_ms}};
  if (hypothesis_necessity) out["hypothesis_necessity"] = *hypothesis_necessity;
  return out;
}

Verdict run_suite(SuiteId id, const Instance& instance) {
  if (!suite_accepts(id, instance)) {
    throw std::invalid_argument("suite " + to_string(id) + " does not apply to instance " + label_of(instance));
  }
  Verdict v;
  v.suite = id;
  v.instance = label_of(instance);
  const auto start = std::chrono::steady_clock::now();
  if (const auto* mi = std::get_if<ModuleInstance>(&instance)) {
    const auto& m = mi->module;
    switch (id) {
      case SuiteId::th11: th11(m, v); break;
      case SuiteId::th22: th22(m, v); break;
      case SuiteId::lemma33: lemma33(m, v); break;
      case SuiteId::prop2: prop2(m, v); break;
      case SuiteId::lemma566: lemma566(m, mi->label, v); break;
      case SuiteId::prop1: prop1(m, v); break;
      case SuiteId::prop300: prop300(m, v); break;
      case SuiteId::thm721000: thm721000(m, v); break;
      case SuiteId::lemma400: lemma400(m.ring(), v); break;
      case SuiteId::appendix: appendix_module(m, v); break;
      default: break;
    }
  } else if (const auto* oi = std::get_if<OrdinalInstance>(&instance)) {
    if (id == SuiteId::theorem1) theorem1(oi->alpha, v);
    else th190(oi->alpha, v);
  } else {
    appendix_table(std::get<TableInstance>(instance), v);
  }
  v.runtime_ms = std::chrono::duration<double, std::milli>(std::chrono::steady_clock::now() - start).count();
  return v;
}

// ---------------------------------------------------------------------------
// Corpora

namespace {

std::vector<TableRing> small_table_rings() {
  std::vector<TableRing> out;
  for (std::size_t n = 2; n <= 8; ++n) out.push_back(TableRing::zmod(n));
  out.push_back(TableRing::f2_quotient(0b111));   // F4
  out.push_back(TableRing::f2_quotient(0b1011));  // F8
  out.push_back(TableRing::f2_quotient(0b100));   // F2[ε]
  out.push_back(TableRing::f2_quotient(0b1000));  // F2[x]/x^3
  out.push_back(TableRing::product(TableRing::zmod(2), TableRing::zmod(2)));
  out.push_back(TableRing::product(TableRing::zmod(2), TableRing::zmod(4)));
  out.push_back(TableRing::product(TableRing::zmod(2), TableRing::f2_quotient(0b111)));
  return out;
}

const std::vector<TableRing>& table_ring_pool() {
  static const auto pool = small_table_rings();
  return pool;
}

RingInstance random_ring(std::mt19937_64& rng, std::size_t backend) {
  switch (backend) {
    case 0: return RingInstance::zmod(std::uniform_int_distribution<std::int64_t>(1, 64)(rng));
    case 1: {
      std::vector<std::int64_t> pool{2, 3, 5, 7, 11, 13};
      std::shuffle(pool.begin(), pool.end(), rng);
      pool.resize(std::uniform_int_distribution<std::size_t>(1, 3)(rng));
      return RingInstance::zloc(pool);
    }
    default: {
      const auto& pool = table_ring_pool();
      return RingInstance::table(pool[std::uniform_int_distribution<std::size_t>(0, pool.size() - 1)(rng)]);
    }
  }
}

std::vector<Elem> non_units(const RingInstance& ring) {
  std::vector<Elem> out;
  if (!ring.is_finite()) return out;
  const auto elems = ring.elements();
  for (auto a : elems) {
    if (std::none_of(elems.begin(), elems.end(), [&](Elem b) { return ring.mul(a, b) == ring.one(); }))
      out.push_back(a);
  }
  return out;
}

// Zero half the time so that presentations are not almost always trivial,
// and biased toward non-units so that torsion appears on finite rings too.
Elem random_entry(std::mt19937_64& rng, const RingInstance& ring, const std::vector<Elem>& nonunits) {
  if (rng() % 2 == 0) return ring.zero();
  if (!ring.is_finite()) return std::uniform_int_distribution<Elem>(-12, 12)(rng);
  if (!nonunits.empty() && rng() % 2 == 0) return nonunits[rng() % nonunits.size()];
  return static_cast<Elem>(rng() % ring.cardinality());
}

Presentation random_presentation(std::mt19937_64& rng, const RingInstance& ring) {
  const std::size_t g = std::uniform_int_distribution<std::size_t>(0, 4)(rng);
  const std::size_t shape = rng() % 5;
  Matrix rel;
  if (shape == 0 || g == 0) return Presentation(ring, g, rel);  // free
  const auto nonunits = non_units(ring);
  const std::size_t rows = std::uniform_int_distribution<std::size_t>(1, 4)(rng);
  for (std::size_t r = 0; r < rows; ++r) {
    std::vector<Elem> row(g, ring.zero());
    if (shape == 1) {
      // diagonal relation: e_i times a single element
      row[r % g] = random_entry(rng, ring, nonunits);
    } else {
      for (auto& x : row) x = random_entry(rng, ring, nonunits);
    }
    rel.push_back(std::move(row));
  }
  return Presentation(ring, g, rel);
}

}  // namespace

std::vector<Instance> generate_corpus(std::uint64_t seed, std::size_t budget) {
  if (budget > kMaxCorpusBudget) {
    throw CapExceeded("corpus budget " + std::to_string(budget) + " exceeds " + std::to_string(kMaxCorpusBudget));
  }
  std::mt19937_64 rng(seed);
  std::vector<Instance> out;
  out.reserve(budget);
  for (std::size_t i = 0; i < budget; ++i) {
    const auto ring = random_ring(rng, i % 3);
    auto m = random_presentation(rng, ring);
    out.push_back(ModuleInstance{"corpus[" + std::to_string(i) + "] " + describe_module(m), std::move(m)});
  }
  return out;
}

std::vector<Instance> curated_controls() {
  const auto z23 = RingInstance::zloc({2, 3});
  const auto z12 = RingInstance::zmod(12);
  std::vector<Presentation> modules{
      Presentation(z23, 1, {{2}}),                 // torsion, not locally free
      Presentation(z23, 1, {{6}}),                 // torsion at both maximal primes
      Presentation(z23, 2, {{2, 0}}),              // torsion plus a free summand
      Presentation::free(z23, 2),                  //
      Presentation::free(z12, 3),                  //
      Presentation(z12, 1, {{2}}),                 // Z/2 over Z/12: not projective
      Presentation(RingInstance::zmod(6), 1, {{3}}),  // projective, not free
      Presentation(z12, 2, {{2, 3}}),              // a unimodular row: M ≅ R
      Presentation::free(z23, 0),                  // zero module
  };
  std::vector<Instance> out;
  for (auto& m : modules) out.push_back(ModuleInstance{"control " + describe_module(m), std::move(m)});
  return out;
}

std::vector<Instance> ordinal_corpus() {
  std::vector<Instance> out;
  for (std::uint64_t k = 0; k <= kExhaustiveOrdinalCap; ++k)
    out.push_back(OrdinalInstance{"ordinal " + std::to_string(k), Ordinal::finite(k)});
  for (auto o : {Ordinal::omega(), Ordinal::omega(1), Ordinal::omega(5)})
    out.push_back(OrdinalInstance{"ordinal " + o.to_string(), o});
  return out;
}

std::vector<Instance> multilinear_corpus(std::uint64_t seed, std::size_t count) {
  std::vector<Instance> out;
  {
    const auto z4 = RingInstance::zmod(4);
    auto det = MultilinearTable::tabulate(z4, 2, 1, 2, [&](std::span<const MultilinearTable::Vector> x) {
      return MultilinearTable::Vector{z4.sub(z4.mul(x[0][0], x[1][1]), z4.mul(x[0][1], x[1][0]))};
    });
    out.push_back(TableInstance{"table det2 over Z/4", std::move(det), AlternatingFlags{true, true, true, true}});
    const auto z2 = RingInstance::zmod(2);
    auto xy = MultilinearTable::tabulate(z2, 1, 1, 2, [&](std::span<const MultilinearTable::Vector> x) {
      return MultilinearTable::Vector{z2.mul(x[0][0], x[1][0])};
    });
    out.push_back(TableInstance{"table xy over Z/2", std::move(xy), AlternatingFlags{true, false, false, true}});
  }
  std::mt19937_64 rng(seed);
  const std::vector<RingInstance> rings{RingInstance::zmod(2), RingInstance::zmod(3), RingInstance::zmod(4),
                                        RingInstance::zmod(6),
                                        RingInstance::table(TableRing::f2_quotient(0b111))};
  for (std::size_t i = out.size(); i < count; ++i) {
    const auto& ring = rings[rng() % rings.size()];
    const std::size_t q = ring.cardinality();
    const std::size_t rank = 1 + rng() % 2;
    // keep (q^rank)^arity small
    const std::size_t arity = q * rank <= 4 ? 2 + rng() % 2 : 2;
    const std::size_t kind = i % 3;
    // Coefficients of a multilinear form Σ c_I x_{1,i1} ... x_{n,in}.
    std::size_t terms = 1;
    for (std::size_t k = 0; k < arity; ++k) terms *= rank;
    std::vector<Elem> coeff(terms);
    for (auto& c : coeff) c = static_cast<Elem>(rng() % q);
    auto form = [&](std::span<const MultilinearTable::Vector> x) {
      Elem acc = ring.zero();
      for (std::size_t idx = 0; idx < coeff.size(); ++idx) {
        Elem term = coeff[idx];
        std::size_t rest = idx;
        for (std::size_t k = 0; k < arity; ++k, rest /= rank) term = ring.mul(term, x[k][rest % rank]);
        acc = ring.add(acc, term);
      }
      return acc;
    };
    MultilinearTable::Function f;
    std::string what;
    if (kind == 0) {
      what = "form";
      f = [&](std::span<const MultilinearTable::Vector> x) { return MultilinearTable::Vector{form(x)}; };
    } else if (kind == 1) {
      what = "antisymmetrized form";
      f = [&](std::span<const MultilinearTable::Vector> x) {
        std::vector<std::size_t> perm(arity);
        std::iota(perm.begin(), perm.end(), std::size_t{0});
        Elem acc = ring.zero();
        std::vector<MultilinearTable::Vector> permuted(arity);
        do {
          for (std::size_t k = 0; k < arity; ++k) permuted[k] = x[perm[k]];
          const Elem term = form(permuted);
          acc = ring.add(acc, permutation_sign(perm) > 0 ? term : ring.neg(term));
        } while (std::next_permutation(perm.begin(), perm.end()));
        return MultilinearTable::Vector{acc};
      };
    } else {
      what = "arbitrary map";
      f = [&](std::span<const MultilinearTable::Vector>) {
        return MultilinearTable::Vector{static_cast<Elem>(rng() % q)};
      };
    }
    auto table = MultilinearTable::tabulate(ring, rank, 1, arity, f);
    out.push_back(TableInstance{"table[" + std::to_string(i) + "] " + what + " " + ring.describe() +
                                    " rank=" + std::to_string(rank) + " arity=" + std::to_string(arity),
                                std::move(table), std::nullopt});
  }
  return out;
}

// ---------------------------------------------------------------------------
// Summary

bool Summary::success() const { return failures() == 0; }

std::size_t Summary::failures() const {
  std::size_t n = 0;
  for (const auto& [id, c] : counts) n += c.fail;
  return n;
}

json Summary::to_json() const {
  json suites = json::object();
  for (const auto& [id, c] : counts) {
    suites[to_string(id)] = {{"pass", c.pass}, {"fail", c.fail}, {"vacuous", c.vacuous}};
  }
  json records = json::array();
  for (const auto& v : verdicts) records.push_back(v.to_json());
  return {{"success", success()},
          {"failures", failures()},
          {"suites", suites},
          {"hypothesis_necessity_witnesses", hypothesis_necessity_witnesses},
          {"limitations", limitations},
          {"verdicts", records}};
}

std::string Summary::to_table() const {
  std::ostringstream out;
  out << std::left << std::setw(12) << "suite" << std::right << std::setw(8) << "pass" << std::setw(8) << "fail"
      << std::setw(9) << "vacuous" << "\n";
  for (const auto& [id, c] : counts) {
    out << std::left << std::setw(12) << to_string(id) << std::right << std::setw(8) << c.pass << std::setw(8)
        << c.fail << std::setw(9) << c.vacuous << "\n";
  }
  for (const auto& v : verdicts) {
    if (v.status != Status::fail) continue;
    out << "FAIL " << to_string(v.suite) << " on " << v.instance << ": " << v.witnesses.dump() << "\n";
  }
  for (const auto& w : hypothesis_necessity_witnesses) {
    out << "hypothesis-necessity witness: " << w.value("instance", "") << " (missing: "
        << w.value("missing_hypothesis", "") << ")\n";
  }
  for (const auto& l : limitations) out << "limitation: " << l << "\n";
  out << (success() ? "OK" : "FAILED") << ": " << failures() << " failure(s)\n";
  return out.str();
}

Summary run_all(const std::vector<Instance>& corpus, const std::vector<SuiteId>& suites) {
  Summary s;
  for (auto id : suites) s.counts[id];
  for (const auto& instance : corpus) {
    for (auto id : suites) {
      if (!suite_accepts(id, instance)) continue;
      Verdict v;
      try {
        v = run_suite(id, instance);
      } catch (const std::exception& e) {
        // An oracle that cannot finish is reported, never hidden.
        v.suite = id;
        v.instance = label_of(instance);
        v.status = Status::fail;
        v.witnesses.push_back({{"error", e.what()}});
      }
      auto& c = s.counts[id];
      switch (v.status) {
        case Status::pass: ++c.pass; break;
        case Status::fail: ++c.fail; break;
        case Status::vacuous: ++c.vacuous; break;
      }
      if (v.hypothesis_necessity) s.hypothesis_necessity_witnesses.push_back(*v.hypothesis_necessity);
      s.verdicts.push_back(std::move(v));
    }
  }
  const bool continuity_suites = std::any_of(suites.begin(), suites.end(), [](SuiteId id) {
    return id == SuiteId::prop300 || id == SuiteId::thm721000;
  });
  if (continuity_suites) {
    s.limitations.push_back(kPatchLimitation);
    if (std::find(suites.begin(), suites.end(), SuiteId::thm721000) != suites.end()) {
      s.limitations.push_back(kFlatLimitation);
    }
  }
  return s;
}

}  // namespace rankmap
