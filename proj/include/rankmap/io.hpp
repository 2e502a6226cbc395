#pragma once

#include <cstddef>
#include <optional>
#include <stdexcept>
#include <string>
#include <string_view>

#include <json.hpp>

#include "rankmap/module.hpp"
#include "rankmap/ordinal.hpp"
#include "rankmap/ring.hpp"

namespace rankmap {

/// Malformed JSON. position is the byte offset reported by the parser.
class ParseError : public std::invalid_argument {
 public:
  ParseError(const std::string& what, std::size_t position)
      : std::invalid_argument(what), position_(position) {}
  std::size_t position() const { return position_; }

 private:
  std::size_t position_;
};

/// Well-formed JSON that does not describe a valid instance.
class ValidationError : public std::invalid_argument {
 public:
  using std::invalid_argument::invalid_argument;
};

/// One instance file: a ring, optionally a module over it, optionally an
/// ordinal. At least one of module and ordinal is present.
struct InstanceFile {
  std::optional<RingInstance> ring;
  std::optional<Presentation> module;
  std::optional<Ordinal> ordinal;

  bool operator==(const InstanceFile&) const = default;
};

InstanceFile parse_instance(std::string_view text);
InstanceFile instance_from_json(const nlohmann::json& j);
nlohmann::json to_json(const InstanceFile& f);

RingInstance ring_from_json(const nlohmann::json& j);
nlohmann::json to_json(const RingInstance& ring);

Presentation module_from_json(const RingInstance& ring, const nlohmann::json& j);
nlohmann::json to_json(const Presentation& m);

/// Sorted point ids of a point set.
nlohmann::json to_json(PointSet s);
/// Labels plus the cover relation as an edge list.
nlohmann::json to_json(const SpectrumPoset& poset);

}  // namespace rankmap
