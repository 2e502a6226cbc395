#include "rankmap/io.hpp"

#include <set>

namespace rankmap {

using nlohmann::json;

namespace {

void require(bool ok, const std::string& message) {
  if (!ok) throw ValidationError(message);
}

void reject_unknown_keys(const json& j, std::initializer_list<std::string_view> allowed, const std::string& where) {
  for (const auto& [key, value] : j.items()) {
    bool known = false;
    for (auto a : allowed) known = known || key == a;
    require(known, where + ": unknown key \"" + key + "\"");
  }
}

std::int64_t as_int(const json& j, const std::string& what) {
  require(j.is_number_integer(), what + " must be an integer");
  return j.get<std::int64_t>();
}

std::size_t as_index(const json& j, const std::string& what) {
  const auto v = as_int(j, what);
  require(v >= 0, what + " must be non-negative");
  return static_cast<std::size_t>(v);
}

std::vector<std::vector<std::size_t>> as_table(const json& j, std::size_t n, const std::string& name) {
  require(j.is_array() && j.size() == n, "ring table \"" + name + "\" must have " + std::to_string(n) + " rows");
  std::vector<std::vector<std::size_t>> out;
  for (std::size_t i = 0; i < n; ++i) {
    const auto& row = j[i];
    require(row.is_array() && row.size() == n,
            "ring table \"" + name + "\" row " + std::to_string(i) + " must have " + std::to_string(n) + " entries");
    auto& r = out.emplace_back();
    for (const auto& x : row) {
      const auto v = as_index(x, "ring table entry");
      require(v < n, "ring table \"" + name + "\" entry " + std::to_string(v) + " is not an element index");
      r.push_back(v);
    }
  }
  return out;
}

}  // namespace

RingInstance ring_from_json(const json& j) {
  require(j.is_object(), "ring must be an object");
  require(j.contains("kind") && j["kind"].is_string(), "ring needs a string \"kind\"");
  const auto kind = j["kind"].get<std::string>();
  if (kind == "zmod") {
    reject_unknown_keys(j, {"kind", "n"}, "zmod ring");
    require(j.contains("n"), "zmod ring needs \"n\"");
    const auto n = as_int(j["n"], "zmod modulus");
    require(n >= 1, "zmod modulus must be at least 1");
    return RingInstance::zmod(n);
  }
  if (kind == "zloc") {
    reject_unknown_keys(j, {"kind", "primes"}, "zloc ring");
    require(j.contains("primes") && j["primes"].is_array(), "zloc ring needs a \"primes\" array");
    std::vector<std::int64_t> primes;
    for (const auto& p : j["primes"]) primes.push_back(as_int(p, "zloc prime"));
    if (primes.empty()) return RingInstance::rationals();
    try {
      return RingInstance::zloc(std::move(primes));
    } catch (const std::invalid_argument& e) {
      throw ValidationError(e.what());
    }
  }
  if (kind == "table") {
    reject_unknown_keys(j, {"kind", "elements", "add", "mul", "zero", "one"}, "table ring");
    require(j.contains("elements") && j["elements"].is_array() && !j["elements"].empty(),
            "table ring needs a non-empty \"elements\" array");
    std::vector<std::string> names;
    for (const auto& e : j["elements"]) names.push_back(e.is_string() ? e.get<std::string>() : e.dump());
    require(std::set<std::string>(names.begin(), names.end()).size() == names.size(),
            "table ring element names must be distinct");
    require(j.contains("add") && j.contains("mul"), "table ring needs \"add\" and \"mul\"");
    const auto n = names.size();
    auto add = as_table(j["add"], n, "add");
    auto mul = as_table(j["mul"], n, "mul");
    std::optional<TableRing> table;
    try {
      table.emplace(std::move(names), std::move(add), std::move(mul));
    } catch (const std::invalid_argument& e) {
      throw ValidationError(e.what());
    }
    if (j.contains("zero")) require(as_index(j["zero"], "zero") == table->zero(), "\"zero\" is not the additive identity");
    if (j.contains("one")) require(as_index(j["one"], "one") == table->one(), "\"one\" is not the multiplicative identity");
    return RingInstance::table(std::move(*table));
  }
  throw ValidationError("unknown ring kind \"" + kind + "\"");
}

json to_json(const RingInstance& ring) {
  switch (ring.kind()) {
    case RingKind::zmod:
      return {{"kind", "zmod"}, {"n", ring.as_zmod().n}};
    case RingKind::zloc:
      return {{"kind", "zloc"}, {"primes", ring.as_zloc().primes}};
    case RingKind::table: {
      const auto& t = ring.as_table();
      return {{"kind", "table"}, {"elements", t.names()}, {"add", t.add_table()}, {"mul", t.mul_table()},
              {"zero", t.zero()}, {"one", t.one()}};
    }
  }
  return {};
}

Presentation module_from_json(const RingInstance& ring, const json& j) {
  require(j.is_object(), "module must be an object");
  reject_unknown_keys(j, {"generators", "relations"}, "module");
  require(j.contains("generators"), "module needs \"generators\"");
  const auto g = as_index(j["generators"], "generators");
  Matrix rows;
  if (j.contains("relations")) {
    require(j["relations"].is_array(), "\"relations\" must be an array of rows");
    for (std::size_t i = 0; i < j["relations"].size(); ++i) {
      const auto& row = j["relations"][i];
      require(row.is_array(), "relation row " + std::to_string(i) + " must be an array");
      require(row.size() == g, "relation row " + std::to_string(i) + " has " + std::to_string(row.size()) +
                                   " entries, expected " + std::to_string(g));
      auto& r = rows.emplace_back();
      for (const auto& x : row) r.push_back(as_int(x, "relation entry"));
    }
  }
  try {
    return Presentation(ring, g, std::move(rows));
  } catch (const std::invalid_argument& e) {
    throw ValidationError(e.what());
  }
}

json to_json(const Presentation& m) { return {{"generators", m.generators()}, {"relations", m.relations()}}; }

InstanceFile instance_from_json(const json& j) {
  require(j.is_object(), "instance must be a JSON object");
  reject_unknown_keys(j, {"ring", "module", "ordinal"}, "instance");
  InstanceFile f;
  if (j.contains("ring")) f.ring = ring_from_json(j["ring"]);
  if (j.contains("module")) {
    require(f.ring.has_value(), "a module needs a ring");
    f.module = module_from_json(*f.ring, j["module"]);
  }
  if (j.contains("ordinal")) {
    const auto& o = j["ordinal"];
    try {
      if (o.is_number_unsigned()) {
        f.ordinal = Ordinal::finite(o.get<std::uint64_t>());
      } else {
        require(o.is_string(), "ordinal must be a token such as \"w+1\"");
        f.ordinal = Ordinal::parse(o.get<std::string>());
      }
    } catch (const ValidationError&) {
      throw;
    } catch (const std::exception& e) {
      throw ValidationError(std::string("bad ordinal: ") + e.what());
    }
  }
  require(f.module || f.ordinal || f.ring, "instance needs a ring, a module or an ordinal");
  return f;
}

InstanceFile parse_instance(std::string_view text) {
  json j;
  try {
    j = json::parse(text.begin(), text.end());
  } catch (const json::parse_error& e) {
    throw ParseError(e.what(), e.byte);
  }
  return instance_from_json(j);
}

json to_json(const InstanceFile& f) {
  json out = json::object();
  if (f.ring) out["ring"] = to_json(*f.ring);
  if (f.module) out["module"] = to_json(*f.module);
  if (f.ordinal) out["ordinal"] = f.ordinal->to_string();
  return out;
}

json to_json(PointSet s) { return s.elements(); }

json to_json(const SpectrumPoset& poset) {
  json covers = json::array();
  for (const auto& [lo, hi] : poset.covers()) covers.push_back({lo, hi});
  return {{"points", poset.labels()}, {"covers", covers}};
}

}  // namespace rankmap
