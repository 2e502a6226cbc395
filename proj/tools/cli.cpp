#include "cli.hpp"

#include <CLI11.hpp>

#include <fstream>
#include <iomanip>
#include <iostream>
#include <iterator>
#include <sstream>

#include "rankmap/exterior.hpp"
#include "rankmap/io.hpp"
#include "rankmap/verify.hpp"

namespace rankmap::cli {

using nlohmann::json;

namespace {

// Bad input is a usage problem, not a verification failure.
struct InputError : std::runtime_error {
  using std::runtime_error::runtime_error;
};

InstanceFile read_instance(const std::string& path, std::istream& in) {
  std::string text;
  if (path == "-") {
    text.assign(std::istreambuf_iterator<char>(in), {});
  } else {
    std::ifstream file(path);
    if (!file) throw InputError("cannot open " + path);
    text.assign(std::istreambuf_iterator<char>(file), {});
  }
  try {
    return parse_instance(text);
  } catch (const ParseError& e) {
    throw InputError("parse error at byte " + std::to_string(e.position()) + ": " + e.what());
  } catch (const ValidationError& e) {
    throw InputError(std::string("validation error: ") + e.what());
  }
}

const char* yes_no(bool b) { return b ? "true" : "false"; }

std::string set_string(PointSet s) {
  std::string out = "{";
  bool first = true;
  for (auto p : s.elements()) {
    out += (first ? "" : ",") + std::to_string(p);
    first = false;
  }
  return out + "}";
}

constexpr std::array kSourceKinds{TopologyKind::zariski, TopologyKind::flat, TopologyKind::patch};

std::vector<Target> rank_targets() {
  return {DiscreteTarget{}, WellFoundedTarget{Ordinal::omega()}, WellFoundedTarget{Ordinal::omega(1)}};
}

// ---------------------------------------------------------------------------

int cmd_spec(const InstanceFile& f, bool as_json, std::ostream& out) {
  if (!f.ring) throw InputError("spec needs a ring");
  const auto& ring = *f.ring;
  const auto primes = enum_primes(ring);
  const auto order = specialization_order(ring);
  json closed = json::object();
  for (auto kind : kSourceKinds) {
    json sets = json::array();
    for (auto s : closed_sets(order, kind)) sets.push_back(to_json(s));
    closed[to_string(kind)] = sets;
  }
  if (as_json) {
    out << json{{"ring", to_json(ring)}, {"description", ring.describe()}, {"order", to_json(order)},
                {"closed_sets", closed}}
               .dump(2)
        << "\n";
    return kExitOk;
  }
  out << "ring: " << ring.describe() << "\n";
  out << "primes:\n";
  for (std::size_t i = 0; i < order.size(); ++i) out << "  " << i << "  " << order.labels()[i] << "\n";
  out << "specialization (p < q means q is in the closure of p):\n";
  const auto covers = order.covers();
  if (covers.empty()) out << "  none\n";
  for (const auto& [lo, hi] : covers) out << "  " << order.labels()[lo] << " < " << order.labels()[hi] << "\n";
  for (auto kind : kSourceKinds) {
    out << to_string(kind) << " closed sets:";
    for (auto s : closed_sets(order, kind)) out << " " << set_string(s);
    out << "\n";
  }
  return kExitOk;
}

json classification_json(const Presentation& m, std::vector<std::string>& notes) {
  try {
    const auto c = classify(m);
    json out{{"free", c.is_free},
             {"projective", c.is_projective},
             {"flat", c.is_flat},
             {"locally_free", c.is_locally_free},
             {"torsion_invariants", c.torsion_invariants}};
    out["free_rank"] = c.free_rank ? json(*c.free_rank) : json(nullptr);
    out["cardinality"] = c.cardinality ? json(*c.cardinality) : json(nullptr);
    return out;
  } catch (const CapExceeded& e) {
    notes.push_back(std::string("classification skipped: ") + e.what());
    return nullptr;
  }
}

int cmd_rank_map(const InstanceFile& f, bool as_json, std::ostream& out) {
  if (!f.module) throw InputError("rank-map needs a module");
  const auto& m = *f.module;
  const auto psi = rank_map(m);
  const auto map = psi.as_point_map();
  std::vector<std::string> notes;
  json psi_json = json::array();
  for (std::size_t i = 0; i < psi.primes.size(); ++i) {
    psi_json.push_back({{"prime", psi.spectrum.labels()[i]}, {"fiber_dim", psi.dims[i]}});
  }
  json continuity = json::array();
  for (auto kind : kSourceKinds) {
    for (const auto& target : rank_targets()) {
      continuity.push_back(
          {{"source", to_string(kind)}, {"target", to_string(target)}, {"continuous", is_continuous(map, kind, target)}});
    }
  }
  const auto classification = classification_json(m, notes);
  if (as_json) {
    out << json{{"ring", to_json(m.ring())},
                {"module", to_json(m)},
                {"rank_map", psi_json},
                {"specialization_stable", is_specialization_stable(map)},
                {"continuity", continuity},
                {"classification", classification},
                {"notes", notes}}
               .dump(2)
        << "\n";
    return kExitOk;
  }
  out << "ring: " << m.ring().describe() << "\n";
  out << "module: " << m.generators() << " generator(s), " << m.relations().size() << " relation(s)\n";
  out << "rank map:\n";
  for (const auto& row : psi_json) {
    out << "  " << std::left << std::setw(12) << row["prime"].get<std::string>() << row["fiber_dim"] << "\n";
  }
  out << "specialization stable: " << yes_no(is_specialization_stable(map)) << "\n";
  out << "continuity:\n";
  for (const auto& c : continuity) {
    out << "  " << std::left << std::setw(8) << c["source"].get<std::string>() << " -> " << std::setw(16)
        << c["target"].get<std::string>() << " " << yes_no(c["continuous"].get<bool>()) << "\n";
  }
  if (!classification.is_null()) {
    out << "classification: projective=" << yes_no(classification["projective"]) << " free=" << yes_no(classification["free"])
        << " locally_free=" << yes_no(classification["locally_free"]) << "\n";
  }
  for (const auto& n : notes) out << "note: " << n << "\n";
  return kExitOk;
}

int cmd_extpow(const InstanceFile& f, std::size_t n, bool as_json, std::ostream& out) {
  if (!f.module) throw InputError("extpow needs a module");
  const auto& m = *f.module;
  const auto ext = ext_presentation(m, n);
  std::vector<std::string> notes;
  const auto classification = classification_json(ext, notes);
  json checks = json::array();
  bool all_equal = true;
  for (const auto& p : enum_primes(m.ring())) {
    const auto v = base_change_fiber_check(m, n, p);
    all_equal = all_equal && v.equal;
    checks.push_back({{"prime", p.label(m.ring())}, {"ext_fiber", v.lhs}, {"binomial", v.rhs}, {"equal", v.equal}});
  }
  if (as_json) {
    out << json{{"n", n},
                {"generators", ext.generators()},
                {"relations", ext.relations().size()},
                {"presentation", to_json(ext)},
                {"classification", classification},
                {"base_change", checks},
                {"notes", notes}}
               .dump(2)
        << "\n";
  } else {
    out << "exterior power " << n << " of a module with " << m.generators() << " generator(s) over "
        << m.ring().describe() << "\n";
    out << "presentation: " << ext.generators() << " generator(s), " << ext.relations().size() << " relation(s)\n";
    if (!classification.is_null()) {
      out << "projective=" << yes_no(classification["projective"]) << " free_rank=" << classification["free_rank"]
          << "\n";
    }
    out << "base change (fiber of the power vs binomial of the fiber):\n";
    for (const auto& c : checks) {
      out << "  " << std::left << std::setw(12) << c["prime"].get<std::string>() << c["ext_fiber"] << " vs "
          << c["binomial"] << "  " << (c["equal"].get<bool>() ? "ok" : "MISMATCH") << "\n";
    }
    for (const auto& note : notes) out << "note: " << note << "\n";
  }
  return all_equal ? kExitOk : kExitFailed;
}

int cmd_ordinal(Ordinal alpha, bool as_json, std::ostream& out) {
  const auto report = spectrality(alpha);
  const OrdinalInstance instance{alpha.to_string(), alpha};
  const std::vector<SuiteId> suites{SuiteId::theorem1, SuiteId::th190};
  const auto summary = run_all({instance}, suites);
  json info{{"ordinal", alpha.to_string()},
            {"limit", is_limit(alpha)},
            {"spectral", report.spectral},
            {"direct_check", report.direct_check ? json(*report.direct_check) : json(nullptr)},
            {"witness", report.witness}};
  if (as_json) {
    info["verdicts"] = summary.to_json()["verdicts"];
    info["success"] = summary.success();
    out << info.dump(2) << "\n";
  } else {
    out << "ordinal: " << alpha.to_string() << "\n";
    out << "limit: " << yes_no(is_limit(alpha)) << "\n";
    out << "spectral=" << yes_no(report.spectral) << "\n";
    if (report.direct_check) out << "direct check on the finite topology: " << yes_no(*report.direct_check) << "\n";
    if (!report.witness.empty()) out << "witness: " << report.witness << "\n";
    for (const auto& v : summary.verdicts) {
      out << to_string(v.suite) << ": " << to_string(v.status);
      if (!v.witnesses.empty()) out << " " << v.witnesses.dump();
      out << "\n";
    }
  }
  return summary.success() ? kExitOk : kExitFailed;
}

int cmd_verify(const std::vector<std::string>& suite_names, std::uint64_t seed, std::size_t budget,
               const std::string& input, bool as_json, std::istream& in, std::ostream& out) {
  std::vector<SuiteId> suites;
  for (const auto& name : suite_names) {
    std::stringstream list(name);
    std::string item;
    while (std::getline(list, item, ',')) {
      if (item.empty()) continue;
      if (item == "all") {
        suites.assign(kAllSuites.begin(), kAllSuites.end());
        continue;
      }
      const auto id = parse_suite(item);
      if (!id) throw InputError("unknown suite " + item);
      if (std::find(suites.begin(), suites.end(), *id) == suites.end()) suites.push_back(*id);
    }
  }
  if (suites.empty()) suites.assign(kAllSuites.begin(), kAllSuites.end());
  if (budget > kMaxCorpusBudget) throw InputError("budget above " + std::to_string(kMaxCorpusBudget));

  std::vector<Instance> corpus;
  if (!input.empty()) {
    const auto f = read_instance(input, in);
    if (f.module) corpus.emplace_back(ModuleInstance{"input module", *f.module});
    if (f.ordinal) corpus.emplace_back(OrdinalInstance{"input ordinal " + f.ordinal->to_string(), *f.ordinal});
  } else {
    corpus = generate_corpus(seed, budget);
    for (auto& i : curated_controls()) corpus.push_back(std::move(i));
    for (auto& i : ordinal_corpus()) corpus.push_back(std::move(i));
    for (auto& i : multilinear_corpus(seed, 100)) corpus.push_back(std::move(i));
  }
  const auto summary = run_all(corpus, suites);
  if (as_json) {
    out << summary.to_json().dump(2) << "\n";
  } else {
    out << summary.to_table();
  }
  return summary.success() ? kExitOk : kExitFailed;
}

}  // namespace

int run(const std::vector<std::string>& args, std::istream& in, std::ostream& out, std::ostream& err) {
  CLI::App app{"Rank maps, exterior powers and spectral topologies on finite instances", "rankmap"};
  app.require_subcommand(1);

  bool as_json = false;
  std::string input = "-";
  std::size_t power = 1;
  std::string ordinal_token;
  std::vector<std::string> suite_names;
  std::uint64_t seed = 0;
  std::size_t budget = 50;
  std::string verify_input;

  auto* spec = app.add_subcommand("spec", "primes, specialization order and closed sets of a ring");
  auto* rank = app.add_subcommand("rank-map", "fiber dimensions and continuity of the rank map of a module");
  auto* extpow = app.add_subcommand("extpow", "exterior power of a module and its base-change checks");
  auto* ordinal = app.add_subcommand("ordinal", "well-founded topology report for an ordinal");
  auto* verify = app.add_subcommand("verify", "run verification suites over a seeded corpus");
  for (auto* sub : {spec, rank, extpow}) {
    sub->add_option("input", input, "instance JSON file, or - for standard input");
    sub->add_flag("--json", as_json, "machine-readable output");
  }
  extpow->add_option("-n,--n", power, "exterior power")->required();
  ordinal->add_option("token", ordinal_token, "ordinal such as 7, w or w+3, or an instance file")->required();
  ordinal->add_flag("--json", as_json, "machine-readable output");
  verify->add_option("--suite", suite_names, "suite name, comma list, or all (repeatable)");
  verify->add_option("--seed", seed, "corpus seed");
  verify->add_option("--budget", budget, "number of generated module instances");
  verify->add_option("--input", verify_input, "verify one instance file (- for standard input) instead of the corpus");
  verify->add_flag("--json", as_json, "machine-readable output");

  try {
    std::vector<std::string> reversed(args.rbegin(), args.rend());
    app.parse(reversed);
  } catch (const CLI::ParseError& e) {
    const int code = app.exit(e, out, err);
    return code == 0 ? kExitOk : kExitUsage;
  }

  try {
    if (*spec) return cmd_spec(read_instance(input, in), as_json, out);
    if (*rank) return cmd_rank_map(read_instance(input, in), as_json, out);
    if (*extpow) return cmd_extpow(read_instance(input, in), power, as_json, out);
    if (*ordinal) {
      Ordinal alpha;
      try {
        alpha = Ordinal::parse(ordinal_token);
      } catch (const std::invalid_argument&) {
        const auto f = read_instance(ordinal_token, in);
        if (!f.ordinal) throw InputError("instance has no ordinal");
        alpha = *f.ordinal;
      }
      return cmd_ordinal(alpha, as_json, out);
    }
    if (*verify) return cmd_verify(suite_names, seed, budget, verify_input, as_json, in, out);
  } catch (const InputError& e) {
    err << "error: " << e.what() << "\n";
    return kExitUsage;
  } catch (const CapExceeded& e) {
    err << "error: instance too large: " << e.what() << "\n";
    return kExitUsage;
  } catch (const std::exception& e) {
    err << "error: " << e.what() << "\n";
    return kExitFailed;
  }
  return kExitUsage;
}

}  // namespace rankmap::cli
