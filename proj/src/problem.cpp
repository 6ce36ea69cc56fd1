// Copyright 2026 The QDT Engine Authors
//
// Licensed under the Apache License, Version 2.0 (the "License");
// you may not use this file except in compliance with the License.
// You may obtain a copy of the License at
//
//      http://www.apache.org/licenses/LICENSE-2.0
//
// Unless required by applicable law or agreed to in writing, software
// distributed under the License is distributed on an "AS IS" BASIS,
// WITHOUT WARRANTIES OR CONDITIONS OF ANY KIND, either express or implied.
// See the License for the specific language governing permissions and
// limitations under the License.

#include "qdt/problem.hpp"

#include <cmath>
#include <iterator>
#include <string>

#include "json.hpp"
#include "qdt/errors.hpp"

namespace qdt {

namespace {

using json = nlohmann::json;

std::string child(const std::string& path, std::string_view key) {
  return path + "/" + std::string(key);
}
std::string child(const std::string& path, std::size_t index) {
  return path + "/" + std::to_string(index);
}

const char* type_name(const json& v) { return v.type_name(); }

void expect_object(const json& v, const std::string& path,
                   std::initializer_list<std::string_view> allowed) {
  if (!v.is_object())
    throw ValidationError(std::string("expected an object, found ") + type_name(v), path);
  for (const auto& [key, _] : v.items()) {
    bool known = false;
    for (auto a : allowed) known = known || key == a;
    if (!known) throw ValidationError("unknown field", child(path, key));
  }
}

const json& require(const json& obj, std::string_view key, const std::string& path) {
  const auto it = obj.find(std::string(key));
  if (it == obj.end()) throw ValidationError("missing required field", child(path, key));
  return *it;
}

const json& expect_array(const json& v, const std::string& path) {
  if (!v.is_array())
    throw ValidationError(std::string("expected an array, found ") + type_name(v), path);
  return v;
}

std::string expect_string(const json& v, const std::string& path) {
  if (!v.is_string())
    throw ValidationError(std::string("expected a string, found ") + type_name(v), path);
  return v.get<std::string>();
}

bool expect_bool(const json& v, const std::string& path) {
  if (!v.is_boolean())
    throw ValidationError(std::string("expected a boolean, found ") + type_name(v), path);
  return v.get<bool>();
}

std::uint64_t expect_uint(const json& v, const std::string& path) {
  if (v.is_number_unsigned()) return v.get<std::uint64_t>();
  if (v.is_number_integer())
    throw ValidationError("expected a nonnegative integer, found a negative number", path);
  throw ValidationError(std::string("expected a nonnegative integer, found ") + type_name(v), path);
}

double expect_number(const json& v, const std::string& path) {
  if (!v.is_number())
    throw ValidationError(std::string("expected a number, found ") + type_name(v), path);
  const double x = v.get<double>();
  if (!std::isfinite(x)) throw ValidationError("number is not finite", path);
  return x;
}

Complex parse_complex(const json& v, const std::string& path) {
  if (!v.is_array() || v.size() != 2)
    throw ValidationError("complex numbers are written as [re, im]", path);
  return {expect_number(v[0], child(path, 0)), expect_number(v[1], child(path, 1))};
}

Amplitudes parse_amplitudes(const json& v, const std::string& path, std::size_t expected) {
  expect_array(v, path);
  if (v.size() != expected)
    throw ValidationError("expected " + std::to_string(expected) + " amplitudes (product of mode "
                          "counts), found " + std::to_string(v.size()),
                          path);
  Amplitudes out;
  out.reserve(v.size());
  for (std::size_t i = 0; i < v.size(); ++i) out.push_back(parse_complex(v[i], child(path, i)));
  return out;
}

// Re-throws engine errors raised while building an object from a field so
// that they carry the field's path.
template <typename Fn>
auto at_path(const std::string& path, Fn&& fn) -> decltype(fn()) {
  try {
    return fn();
  } catch (const ValidationError& e) {
    if (!e.path().empty()) throw;
    throw ValidationError(e.what(), path);
  } catch (const StructuralError& e) {
    throw ValidationError(e.what(), path);
  }
}

ActionRing parse_actions(const json& v, const std::string& path) {
  expect_array(v, path);
  std::vector<Action> actions;
  for (std::size_t i = 0; i < v.size(); ++i) {
    const auto p = child(path, i);
    expect_object(v[i], p, {"name", "modes"});
    Action a{expect_string(require(v[i], "name", p), child(p, "name")), {}};
    const auto& modes = expect_array(require(v[i], "modes", p), child(p, "modes"));
    for (std::size_t m = 0; m < modes.size(); ++m)
      a.modes.push_back(expect_string(modes[m], child(child(p, "modes"), m)));
    actions.push_back(std::move(a));
  }
  return at_path(path, [&] { return ActionRing(std::move(actions)); });
}

StrategicState parse_strategic(const json& v, const std::string& path, const MindSpace& space) {
  expect_object(v, path, {"amplitudes", "normalize"});
  const auto amp_path = child(path, "amplitudes");
  auto amp = parse_amplitudes(require(v, "amplitudes", path), amp_path, space.dimension());
  bool normalize = false;
  if (v.contains("normalize")) normalize = expect_bool(v["normalize"], child(path, "normalize"));
  return at_path(amp_path, [&] { return make_strategic(space, std::move(amp), normalize); });
}

Event parse_support(const json& v, const std::string& path, const ActionRing& ring) {
  if (!v.is_object())
    throw ValidationError(std::string("expected an object, found ") + type_name(v), path);
  std::vector<std::vector<std::string>> subsets(ring.num_actions());
  std::vector<bool> given(ring.num_actions(), false);
  for (const auto& [key, modes] : v.items()) {
    const auto p = child(path, key);
    const std::size_t i = at_path(p, [&] { return ring.action_index(key); });
    expect_array(modes, p);
    for (std::size_t m = 0; m < modes.size(); ++m) {
      auto name = expect_string(modes[m], child(p, m));
      at_path(child(p, m), [&] { return ring.mode_index(i, name); });
      subsets[i].push_back(std::move(name));
    }
    given[i] = true;
  }
  for (std::size_t i = 0; i < ring.num_actions(); ++i)
    if (!given[i]) subsets[i] = ring.action(i).modes;
  return at_path(path, [&] {
    return prospect_support(ring, std::span<const std::vector<std::string>>(subsets));
  });
}

ProspectState parse_prospect(const json& v, const std::string& path, const MindSpace& space) {
  expect_object(v, path, {"name", "amplitudes", "support", "phases"});
  auto name = expect_string(require(v, "name", path), child(path, "name"));

  std::optional<Event> support;
  if (v.contains("support")) support = parse_support(v["support"], child(path, "support"), space.ring());

  if (v.contains("amplitudes")) {
    if (v.contains("phases"))
      throw ValidationError("phases apply only to support-built prospects", child(path, "phases"));
    const auto amp_path = child(path, "amplitudes");
    auto amp = parse_amplitudes(v["amplitudes"], amp_path, space.dimension());
    return at_path(amp_path, [&] {
      return prospect_from_amplitudes(space, std::move(name), std::move(amp), std::move(support));
    });
  }
  if (!support)
    throw ValidationError("a prospect needs \"amplitudes\" or \"support\"", path);

  std::optional<std::vector<Complex>> phases;
  if (v.contains("phases")) {
    const auto ph_path = child(path, "phases");
    const auto& arr = expect_array(v["phases"], ph_path);
    phases.emplace();
    for (std::size_t k = 0; k < arr.size(); ++k) phases->push_back(parse_complex(arr[k], child(ph_path, k)));
  }
  return at_path(child(path, v.contains("phases") ? "phases" : "support"), [&] {
    return prospect_from_support_uniform(space, std::move(name), *support, std::move(phases));
  });
}

MachineConfig parse_machine(const json& v, const std::string& path) {
  expect_object(v, path, {"shots", "seed", "report_raw"});
  MachineConfig cfg;
  if (v.contains("shots")) cfg.shots = expect_uint(v["shots"], child(path, "shots"));
  if (v.contains("seed")) cfg.seed = expect_uint(v["seed"], child(path, "seed"));
  if (v.contains("report_raw")) cfg.report_raw = expect_bool(v["report_raw"], child(path, "report_raw"));
  return cfg;
}

ProblemDocument build(const json& doc) {
  const std::string root;
  expect_object(doc, root, {"actions", "strategic_state", "prospects", "machine"});
  auto ring = parse_actions(require(doc, "actions", root), "/actions");
  const MindSpace space(ring);
  auto strategic = parse_strategic(require(doc, "strategic_state", root), "/strategic_state", space);

  const auto& arr = expect_array(require(doc, "prospects", root), "/prospects");
  std::vector<ProspectState> prospects;
  for (std::size_t j = 0; j < arr.size(); ++j)
    prospects.push_back(parse_prospect(arr[j], child("/prospects", j), space));
  auto lattice = at_path("/prospects", [&] { return ProspectLattice(std::move(prospects)); });

  MachineConfig machine;
  if (doc.contains("machine")) machine = parse_machine(doc["machine"], "/machine");
  return ProblemDocument{std::move(ring), std::move(strategic), std::move(lattice), machine};
}

}  // namespace

ProblemDocument parse_problem(std::string_view text) {
  json doc;
  try {
    doc = json::parse(text.begin(), text.end());
  } catch (const json::parse_error& e) {
    // e.byte is the 1-based offset of the offending character.
    const std::size_t end = std::min<std::size_t>(e.byte == 0 ? 0 : e.byte - 1, text.size());
    std::size_t line = 1;
    std::size_t column = 1;
    for (std::size_t i = 0; i < end; ++i) {
      if (text[i] == '\n') {
        ++line;
        column = 1;
      } else {
        ++column;
      }
    }
    std::string msg = e.what();
    // Drop nlohmann's "[json.exception.parse_error.101] parse error at ..." prefix.
    if (const auto colon = msg.find(": "); colon != std::string::npos) msg = msg.substr(colon + 2);
    throw SyntaxError(msg, line, column);
  }
  return build(doc);
}

ProblemDocument parse_problem(std::istream& in) {
  const std::string text(std::istreambuf_iterator<char>(in), {});
  return parse_problem(text);
}

}  // namespace qdt
