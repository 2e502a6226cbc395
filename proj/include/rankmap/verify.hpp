#pragma once

#include <array>
#include <cstddef>
#include <cstdint>
#include <map>
#include <optional>
#include <string>
#include <string_view>
#include <variant>
#include <vector>

#include <json.hpp>

#include "rankmap/exterior.hpp"
#include "rankmap/module.hpp"
#include "rankmap/ordinal.hpp"

namespace rankmap {

enum class SuiteId { th11, th22, lemma33, prop2, lemma566, prop1, prop300, thm721000, theorem1, th190, lemma400, appendix };

inline constexpr std::array kAllSuites{SuiteId::th11,     SuiteId::th22,    SuiteId::lemma33,   SuiteId::prop2,
                                       SuiteId::lemma566, SuiteId::prop1,   SuiteId::prop300,   SuiteId::thm721000,
                                       SuiteId::theorem1, SuiteId::th190,   SuiteId::lemma400,  SuiteId::appendix};

std::string to_string(SuiteId id);
std::optional<SuiteId> parse_suite(std::string_view name);

enum class Status { pass, fail, vacuous };
std::string to_string(Status s);

struct ModuleInstance {
  std::string label;
  Presentation module;
};

struct OrdinalInstance {
  std::string label;
  Ordinal alpha;
};

/// A map (R^s)^n → R^t with, optionally, the flags it is known to have.
struct TableInstance {
  std::string label;
  MultilinearTable table;
  std::optional<AlternatingFlags> expected;
};

using Instance = std::variant<ModuleInstance, OrdinalInstance, TableInstance>;

const std::string& label_of(const Instance& instance);

/// Whether the suite has a check for this kind of instance.
bool suite_accepts(SuiteId id, const Instance& instance);

struct Verdict {
  SuiteId suite = SuiteId::th11;
  std::string instance;
  Status status = Status::vacuous;
  /// Structured evidence: failing primes, thresholds, truth tables.
  nlohmann::json witnesses = nlohmann::json::array();
  std::vector<std::string> notes;
  /// Set when an instance shows that a hypothesis cannot be dropped.
  std::optional<nlohmann::json> hypothesis_necessity;
  double runtime_ms = 0;

  nlohmann::json to_json() const;
};

/// Throws std::invalid_argument when the suite does not accept the instance.
Verdict run_suite(SuiteId id, const Instance& instance);

inline constexpr std::size_t kMaxCorpusBudget = 10000;

/// Deterministic pseudo-random module instances; backends rotate so that a
/// budget of 3 or more covers Z/n, the semi-local integers and table rings.
/// Throws CapExceeded above kMaxCorpusBudget.
std::vector<Instance> generate_corpus(std::uint64_t seed, std::size_t budget);

/// Hand-picked boundary cases, including the non-locally-free torsion
/// module coker([2]) over Z_(2,3).
std::vector<Instance> curated_controls();

/// 0..12, w, w+1, w+5.
std::vector<Instance> ordinal_corpus();

/// Random multilinear, antisymmetrized and arbitrary tables, plus the
/// determinant over Z/4 and xy over Z/2 with known flags.
std::vector<Instance> multilinear_corpus(std::uint64_t seed, std::size_t count);

struct SuiteCounts {
  std::size_t pass = 0;
  std::size_t fail = 0;
  std::size_t vacuous = 0;
};

struct Summary {
  std::map<SuiteId, SuiteCounts> counts;
  std::vector<Verdict> verdicts;
  std::vector<nlohmann::json> hypothesis_necessity_witnesses;
  std::vector<std::string> limitations;

  bool success() const;
  std::size_t failures() const;
  nlohmann::json to_json() const;
  std::string to_table() const;
};

/// Runs every selected suite on every instance it accepts.
Summary run_all(const std::vector<Instance>& corpus, const std::vector<SuiteId>& suites);

}  // namespace rankmap
