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

#include "qdt/action_algebra.hpp"

#include <algorithm>
#include <iterator>
#include <limits>
#include <unordered_set>

#include "qdt/errors.hpp"

namespace qdt {

std::string to_string(const MultiIndex& n) {
  std::string out = "(";
  for (std::size_t i = 0; i < n.size(); ++i) {
    if (i) out += ",";
    out += std::to_string(n[i]);
  }
  return out + ")";
}

ActionRing::ActionRing(std::vector<Action> actions) : actions_(std::move(actions)) {
  if (actions_.empty()) throw ValidationError("action ring needs at least one action");

  std::unordered_set<std::string> seen;
  grid_size_ = 1;
  for (const auto& a : actions_) {
    if (a.name.empty()) throw ValidationError("action name must not be empty");
    if (!seen.insert(a.name).second) throw ValidationError("duplicate action name '" + a.name + "'");
    if (a.modes.empty()) throw ValidationError("action '" + a.name + "' has no modes");
    std::unordered_set<std::string> modes;
    for (const auto& m : a.modes) {
      if (m.empty()) throw ValidationError("action '" + a.name + "' has an empty mode name");
      if (!modes.insert(m).second)
        throw ValidationError("duplicate mode '" + m + "' in action '" + a.name + "'");
    }
    const std::size_t dim = a.modes.size();
    if (grid_size_ > std::numeric_limits<std::size_t>::max() / dim)
      throw ValidationError("elementary prospect grid is too large to index");
    grid_size_ *= dim;
    dims_.push_back(dim);
  }

  // First action slowest: stride_i = prod_{k>i} M_k.
  strides_.assign(dims_.size(), 1);
  for (std::size_t i = dims_.size() - 1; i > 0; --i) strides_[i - 1] = strides_[i] * dims_[i];
}

ActionRing ActionRing::from_dims(std::span<const std::size_t> dims) {
  std::vector<Action> actions;
  actions.reserve(dims.size());
  for (std::size_t i = 0; i < dims.size(); ++i) {
    Action a{"A" + std::to_string(i + 1), {}};
    for (std::size_t m = 1; m <= dims[i]; ++m) a.modes.push_back(std::to_string(m));
    actions.push_back(std::move(a));
  }
  return ActionRing(std::move(actions));
}

ActionRing ActionRing::from_dims(std::initializer_list<std::size_t> dims) {
  return from_dims(std::span<const std::size_t>(dims.begin(), dims.size()));
}

std::size_t ActionRing::action_index(std::string_view name) const {
  for (std::size_t i = 0; i < actions_.size(); ++i)
    if (actions_[i].name == name) return i;
  throw ValidationError("unknown action '" + std::string(name) + "'");
}

std::size_t ActionRing::mode_index(std::size_t action, std::string_view mode) const {
  const auto& modes = actions_.at(action).modes;
  const auto it = std::find(modes.begin(), modes.end(), mode);
  if (it == modes.end())
    throw ValidationError("unknown mode '" + std::string(mode) + "' for action '" +
                          actions_[action].name + "'");
  return static_cast<std::size_t>(it - modes.begin()) + 1;
}

bool ActionRing::contains(const MultiIndex& n) const noexcept {
  if (n.size() != dims_.size()) return false;
  for (std::size_t i = 0; i < dims_.size(); ++i)
    if (n[i] < 1 || n[i] > dims_[i]) return false;
  return true;
}

std::size_t ActionRing::flat_index(const MultiIndex& n) const {
  if (!contains(n))
    throw ValidationError("multi-index " + to_string(n) + " is outside the prospect grid");
  std::size_t flat = 0;
  for (std::size_t i = 0; i < dims_.size(); ++i) flat += (n[i] - 1) * strides_[i];
  return flat;
}

MultiIndex ActionRing::multi_index(std::size_t flat) const {
  if (flat >= grid_size_)
    throw ValidationError("flat index " + std::to_string(flat) + " is outside the prospect grid");
  std::vector<std::size_t> nu(dims_.size());
  for (std::size_t i = 0; i < dims_.size(); ++i) {
    nu[i] = flat / strides_[i] + 1;
    flat %= strides_[i];
  }
  return MultiIndex(std::move(nu));
}

std::string ActionRing::label(const MultiIndex& n) const {
  if (!contains(n)) throw ValidationError("multi-index " + to_string(n) + " is outside the prospect grid");
  std::string out = "(";
  for (std::size_t i = 0; i < dims_.size(); ++i) {
    if (i) out += ", ";
    out += actions_[i].name + "=" + actions_[i].modes[n[i] - 1];
  }
  return out + ")";
}

bool ActionRing::names_equal(const ActionRing& other) const {
  if (actions_.size() != other.actions_.size()) return false;
  for (std::size_t i = 0; i < actions_.size(); ++i)
    if (actions_[i].name != other.actions_[i].name || actions_[i].modes != other.actions_[i].modes)
      return false;
  return true;
}

std::vector<MultiIndex> enumerate_elementary(const ActionRing& ring) {
  const auto& dims = ring.dims();
  std::vector<MultiIndex> out;
  out.reserve(ring.grid_size());
  // Odometer with the last action fastest.
  std::vector<std::size_t> nu(dims.size(), 1);
  for (std::size_t k = 0; k < ring.grid_size(); ++k) {
    out.emplace_back(nu);
    for (std::size_t i = dims.size(); i-- > 0;) {
      if (++nu[i] <= dims[i]) break;
      nu[i] = 1;
    }
  }
  return out;
}

// ---------------------------------------------------------------------------
// Event

Event::Event(const ActionRing& ring) : dims_(ring.dims()) {}

Event::Event(const ActionRing& ring, std::span<const MultiIndex> members) : dims_(ring.dims()) {
  flat_.reserve(members.size());
  for (const auto& n : members) flat_.push_back(ring.flat_index(n));
  std::sort(flat_.begin(), flat_.end());
  flat_.erase(std::unique(flat_.begin(), flat_.end()), flat_.end());
}

Event::Event(const ActionRing& ring, std::initializer_list<MultiIndex> members)
    : Event(ring, std::span<const MultiIndex>(members.begin(), members.size())) {}

Event Event::identity(const ActionRing& ring) {
  std::vector<std::size_t> flat(ring.grid_size());
  for (std::size_t i = 0; i < flat.size(); ++i) flat[i] = i;
  return Event(ring.dims(), std::move(flat));
}

Event Event::from_flat(const ActionRing& ring, std::vector<std::size_t> flat) {
  if (!std::is_sorted(flat.begin(), flat.end()) ||
      std::adjacent_find(flat.begin(), flat.end()) != flat.end())
    throw ValidationError("event members must be sorted and unique");
  if (!flat.empty() && flat.back() >= ring.grid_size())
    throw ValidationError("event member outside the prospect grid");
  return Event(ring.dims(), std::move(flat));
}

bool Event::contains_flat(std::size_t flat) const noexcept {
  return std::binary_search(flat_.begin(), flat_.end(), flat);
}

bool Event::contains(const MultiIndex& n) const {
  // Rebuild the ring shape only for indexing; names are irrelevant here.
  return contains_flat(ActionRing::from_dims(dims_).flat_index(n));
}

std::vector<MultiIndex> Event::members() const {
  const auto ring = ActionRing::from_dims(dims_);
  std::vector<MultiIndex> out;
  out.reserve(flat_.size());
  for (auto f : flat_) out.push_back(ring.multi_index(f));
  return out;
}

static void require_same_ring(const Event& a, const Event& b) {
  if (a.dims() != b.dims()) throw StructuralError("events belong to different action rings");
}

Event event_conjunction(const Event& a, const Event& b) {
  require_same_ring(a, b);
  std::vector<std::size_t> out;
  std::set_intersection(a.flat_.begin(), a.flat_.end(), b.flat_.begin(), b.flat_.end(),
                        std::back_inserter(out));
  return Event(a.dims_, std::move(out));
}

Event event_union(const Event& a, const Event& b) {
  require_same_ring(a, b);
  std::vector<std::size_t> out;
  std::set_union(a.flat_.begin(), a.flat_.end(), b.flat_.begin(), b.flat_.end(),
                 std::back_inserter(out));
  return Event(a.dims_, std::move(out));
}

Event prospect_support(const ActionRing& ring, std::span<const std::vector<std::size_t>> subsets) {
  if (subsets.size() != ring.num_actions())
    throw ValidationError("expected " + std::to_string(ring.num_actions()) +
                          " mode subsets, got " + std::to_string(subsets.size()));

  std::vector<std::vector<std::size_t>> sorted(subsets.begin(), subsets.end());
  for (std::size_t i = 0; i < sorted.size(); ++i) {
    auto& s = sorted[i];
    const auto& name = ring.action(i).name;
    if (s.empty()) throw ValidationError("mode subset for action '" + name + "' is empty");
    std::sort(s.begin(), s.end());
    if (std::adjacent_find(s.begin(), s.end()) != s.end())
      throw ValidationError("mode subset for action '" + name + "' repeats a mode");
    if (s.front() < 1 || s.back() > ring.dims()[i])
      throw ValidationError("mode subset for action '" + name + "' is out of range");
  }

  // Odometer over the product; sorted subsets keep the output sorted.
  std::vector<std::size_t> flat;
  std::vector<std::size_t> pos(sorted.size(), 0);
  std::vector<std::size_t> nu(sorted.size());
  for (;;) {
    for (std::size_t i = 0; i < sorted.size(); ++i) nu[i] = sorted[i][pos[i]];
    flat.push_back(ring.flat_index(MultiIndex(nu)));
    std::size_t i = sorted.size();
    while (i-- > 0) {
      if (++pos[i] < sorted[i].size()) break;
      pos[i] = 0;
    }
    if (i == static_cast<std::size_t>(-1)) break;
  }
  return Event::from_flat(ring, std::move(flat));
}

Event prospect_support(const ActionRing& ring, std::span<const std::vector<std::string>> subsets) {
  if (subsets.size() != ring.num_actions())
    throw ValidationError("expected " + std::to_string(ring.num_actions()) +
                          " mode subsets, got " + std::to_string(subsets.size()));
  std::vector<std::vector<std::size_t>> numeric(subsets.size());
  for (std::size_t i = 0; i < subsets.size(); ++i)
    for (const auto& mode : subsets[i]) numeric[i].push_back(ring.mode_index(i, mode));
  return prospect_support(ring, std::span<const std::vector<std::size_t>>(numeric));
}

}  // namespace qdt
