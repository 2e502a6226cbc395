// Acceptance run: one line per criterion, nonzero exit if any fails.
#include <chrono>
#include <cstdio>
#include <functional>
#include <string>

#include "rankmap/exterior.hpp"
#include "rankmap/verify.hpp"

using namespace rankmap;

namespace {

struct Outcome {
  bool ok = true;
  std::string detail;
};

int failures = 0;

void criterion(int id, const char* name, double limit_s, const std::function<Outcome()>& body) {
  const auto start = std::chrono::steady_clock::now();
  Outcome o;
  try {
    o = body();
  } catch (const std::exception& e) {
    o = {false, std::string("exception: ") + e.what()};
  }
  const double secs = std::chrono::duration<double>(std::chrono::steady_clock::now() - start).count();
  if (limit_s > 0 && secs >= limit_s) {
    o.ok = false;
    o.detail += " (over the " + std::to_string(limit_s) + " s limit)";
  }
  if (!o.ok) ++failures;
  std::printf("%s %2d %-34s %7.3f s  %s\n", o.ok ? "PASS" : "FAIL", id, name, secs, o.detail.c_str());
  std::fflush(stdout);
}

std::vector<Presentation> corpus_modules() {
  std::vector<Presentation> out;
  for (const auto& i : generate_corpus(0, 200)) out.push_back(std::get<ModuleInstance>(i).module);
  for (const auto& i : curated_controls()) out.push_back(std::get<ModuleInstance>(i).module);
  return out;
}

bool continuous(const Presentation& m, TopologyKind kind, const Target& target) {
  return is_continuous(rank_map(m).as_point_map(), kind, target);
}

}  // namespace

int main() {
  const auto modules = corpus_modules();

  criterion(1, "exterior ranks of free modules", 1.0, [] {
    std::size_t checks = 0;
    for (const auto& ring : {RingInstance::zmod(12), RingInstance::zloc({2, 3})}) {
      for (std::size_t n = 0; n <= 6; ++n) {
        for (std::size_t i = 0; i <= n + 2; ++i) {
          const auto ext = ext_presentation(Presentation::free(ring, n), i);
          const auto c = classify(ext);
          const auto expected = binomial(n, i);
          if (!c.is_free || c.free_rank != expected || ext.generators() != expected) {
            return Outcome{false, ring.describe() + " n=" + std::to_string(n) + " i=" + std::to_string(i)};
          }
          ++checks;
        }
      }
    }
    return Outcome{true, std::to_string(checks) + " powers"};
  });

  criterion(2, "base change of exterior powers", 30.0, [&] {
    std::size_t checks = 0;
    for (const auto& i : generate_corpus(0, 200)) {
      const auto& m = std::get<ModuleInstance>(i).module;
      for (const auto& p : enum_primes(m.ring())) {
        for (std::size_t n = 0; n <= 3; ++n) {
          if (!base_change_fiber_check(m, n, p).equal) {
            return Outcome{false, label_of(i) + " at " + p.label(m.ring()) + " n=" + std::to_string(n)};
          }
          ++checks;
        }
      }
    }
    return Outcome{true, std::to_string(checks) + " (instance, prime, n) checks"};
  });

  criterion(3, "localization zero iff pM = M", 0, [&] {
    std::size_t projective = 0;
    for (const auto& m : modules) {
      if (!classify(m).is_projective) continue;
      ++projective;
      for (const auto& p : enum_primes(m.ring())) {
        if ((fiber_dim(m, p) == 0) != is_pM_equal_M(m, p)) return Outcome{false, m.ring().describe()};
      }
    }
    return Outcome{true, std::to_string(projective) + " projective instances"};
  });

  criterion(4, "support clopen in both topologies", 0, [&] {
    std::size_t projective = 0;
    for (const auto& m : modules) {
      if (!classify(m).is_projective) continue;
      ++projective;
      const auto space = specialization_order(m.ring());
      const auto s = support(m);
      for (auto kind : {TopologyKind::zariski, TopologyKind::flat}) {
        if (!is_closed(space, s, kind) || !is_open(space, s, kind)) return Outcome{false, m.ring().describe()};
      }
    }
    return Outcome{true, std::to_string(projective) + " projective instances"};
  });

  criterion(5, "rank map continuity of projectives", 0, [&] {
    const std::vector<Target> targets{DiscreteTarget{}, WellFoundedTarget{Ordinal::omega()}};
    std::size_t checks = 0;
    for (const auto& m : modules) {
      if (!classify(m).is_projective) continue;
      for (auto kind : {TopologyKind::zariski, TopologyKind::flat}) {
        for (const auto& t : targets) {
          if (!continuous(m, kind, t)) return Outcome{false, m.ring().describe() + " " + to_string(t)};
          ++checks;
        }
      }
    }
    return Outcome{true, std::to_string(checks) + " (instance, topology, target) checks"};
  });

  criterion(6, "negative control coker([2]) over Z_(2,3)", 0, [] {
    const Presentation m(RingInstance::zloc({2, 3}), 1, {{2}});
    const bool patch = continuous(m, TopologyKind::patch, DiscreteTarget{});
    const bool zariski = continuous(m, TopologyKind::zariski, DiscreteTarget{});
    const auto s = run_all({ModuleInstance{"coker([2])", m}}, {SuiteId::lemma566});
    const bool reported = s.success() && s.hypothesis_necessity_witnesses.size() == 1 &&
                          s.hypothesis_necessity_witnesses[0]["patch_discrete"] == true &&
                          s.hypothesis_necessity_witnesses[0]["zariski_discrete"] == false;
    return Outcome{patch && !zariski && reported, "patch=" + std::string(patch ? "true" : "false") +
                                                      " zariski-to-discrete=" + (zariski ? "true" : "false")};
  });

  criterion(7, "well-founded topology on ordinals", 5.0, [] {
    std::vector<Instance> ordinals;
    for (std::uint64_t a = 0; a <= kExhaustiveOrdinalCap; ++a) {
      ordinals.push_back(OrdinalInstance{std::to_string(a), Ordinal::finite(a)});
      const auto r = spectrality(Ordinal::finite(a));
      if (!r.spectral || r.direct_check != true) return Outcome{false, "alpha=" + std::to_string(a)};
    }
    for (auto alpha : {Ordinal::omega(), Ordinal::omega(1)}) {
      ordinals.push_back(OrdinalInstance{alpha.to_string(), alpha});
      const auto r = spectrality(alpha);
      if (r.spectral || r.witness.find("no generic point") == std::string::npos) {
        return Outcome{false, "alpha=" + alpha.to_string()};
      }
    }
    const auto s = run_all(ordinals, {SuiteId::theorem1, SuiteId::th190});
    return Outcome{s.success(), std::to_string(s.verdicts.size()) + " verdicts"};
  });

  criterion(8, "alternating maps", 0, [] {
    const auto tables = multilinear_corpus(0, 100);
    std::size_t count = 0;
    for (const auto& i : tables) {
      const auto& t = std::get<TableInstance>(i);
      const auto f = alternating_report(t.table);
      if (f.multilinear && f.alternating && !f.skew_symmetric) return Outcome{false, t.label};
      if (f.multilinear && f.alternating != f.alternating_adjacent) return Outcome{false, t.label};
      if (t.expected && *t.expected != f) return Outcome{false, t.label + " flags differ"};
      ++count;
    }
    const auto z2 = RingInstance::zmod(2);
    const auto xy = MultilinearTable::tabulate(z2, 1, 1, 2, [&](std::span<const MultilinearTable::Vector> x) {
      return MultilinearTable::Vector{z2.mul(x[0][0], x[1][0])};
    });
    const auto f = alternating_report(xy);
    if (!(f.multilinear && f.skew_symmetric && !f.alternating)) return Outcome{false, "xy over Z/2"};
    const auto s = run_all(tables, {SuiteId::appendix});
    if (count < 100 || !s.success()) return Outcome{false, "appendix suite"};
    return Outcome{true, std::to_string(count) + " tables; xy over Z/2 skew but not alternating"};
  });

  criterion(9, "oracle agreement", 0, [&] {
    for (std::int64_t n = 1; n <= 16; ++n) {
      const auto arithmetic = enum_primes(RingInstance::zmod(n));
      const auto brute = enum_primes(RingInstance::table(TableRing::zmod(static_cast<std::size_t>(n))));
      if (arithmetic.size() != brute.size()) return Outcome{false, "prime count for n=" + std::to_string(n)};
      for (const auto& p : arithmetic) {
        ElementSet members = 0;
        for (std::int64_t a = 0; a < n; ++a) {
          if (a % p.p == 0) members |= ElementSet{1} << a;
        }
        if (std::find(brute.begin(), brute.end(), PrimeIdeal::table_ideal(members)) == brute.end()) {
          return Outcome{false, "prime " + std::to_string(p.p) + " of Z/" + std::to_string(n)};
        }
      }
    }
    std::size_t counted = 0;
    for (const auto& m : modules) {
      if (m.ring().kind() != RingKind::zmod || m.ring().as_zmod().n > 16) continue;
      if (cardinality(m) != FiniteModule(m).size()) return Outcome{false, "cardinality of a Z/n module"};
      ++counted;
    }
    return Outcome{true, std::to_string(counted) + " cokernels counted"};
  });

  criterion(10, "minimal generating sets have fiber size", 0, [&] {
    std::size_t checked = 0;
    for (const auto& m : modules) {
      if (!m.ring().is_finite() || !is_local(m.ring())) continue;
      if (cardinality(m) > (std::uint64_t{1} << 12)) continue;
      const auto s = minimal_gensets_oracle(m);
      if (s.sizes != std::set<std::size_t>{s.fiber}) return Outcome{false, m.ring().describe()};
      ++checked;
    }
    return Outcome{true, std::to_string(checked) + " local instances"};
  });

  std::printf("%s: %d criterion failure(s)\n", failures == 0 ? "OK" : "FAILED", failures);
  return failures == 0 ? 0 : 1;
}
