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

#pragma once

/**
 * @file
 * Actions, action modes, elementary prospects and the classical event
 * algebra over them.
 *
 * Every action i carries M_i mutually incompatible modes. An elementary
 * prospect picks exactly one mode per action and is labelled by a
 * MultiIndex (nu_1, ..., nu_N) with 1 <= nu_i <= M_i. The grid of all
 * elementary prospects is enumerated lexicographically with the first
 * action varying slowest; the position in that enumeration is the flat
 * basis index used by every other module.
 */

#include <compare>
#include <cstddef>
#include <initializer_list>
#include <span>
#include <string>
#include <string_view>
#include <vector>

namespace qdt {

struct Action {
  std::string name;
  std::vector<std::string> modes;
};

/// Exactly one 1-based mode index per action.
class MultiIndex {
 public:
  MultiIndex() = default;
  explicit MultiIndex(std::vector<std::size_t> nu) : nu_(std::move(nu)) {}
  MultiIndex(std::initializer_list<std::size_t> nu) : nu_(nu) {}

  std::size_t size() const noexcept { return nu_.size(); }
  std::size_t operator[](std::size_t i) const { return nu_[i]; }
  std::span<const std::size_t> values() const noexcept { return nu_; }

  friend bool operator==(const MultiIndex&, const MultiIndex&) = default;
  friend auto operator<=>(const MultiIndex&, const MultiIndex&) = default;

 private:
  std::vector<std::size_t> nu_;
};

std::string to_string(const MultiIndex& n);

/// The declared actions and their modes. Immutable once built.
class ActionRing {
 public:
  /// Throws ValidationError on an empty action list, an action without
  /// modes, duplicate action names, duplicate mode names within an
  /// action, or a grid too large to index.
  explicit ActionRing(std::vector<Action> actions);

  /// Anonymous ring with actions "A1".."AN" and modes "1".."M_i".
  static ActionRing from_dims(std::span<const std::size_t> dims);
  static ActionRing from_dims(std::initializer_list<std::size_t> dims);

  std::size_t num_actions() const noexcept { return actions_.size(); }
  const Action& action(std::size_t i) const { return actions_.at(i); }
  const std::vector<Action>& actions() const noexcept { return actions_; }

  /// M_1..M_N
  const std::vector<std::size_t>& dims() const noexcept { return dims_; }
  /// prod_i M_i
  std::size_t grid_size() const noexcept { return grid_size_; }

  /// 0-based action position; ValidationError if unknown.
  std::size_t action_index(std::string_view name) const;
  /// 1-based mode index within action `action`; ValidationError if unknown.
  std::size_t mode_index(std::size_t action, std::string_view mode) const;

  /// Position of `n` in the lexicographic enumeration.
  std::size_t flat_index(const MultiIndex& n) const;
  MultiIndex multi_index(std::size_t flat) const;
  bool contains(const MultiIndex& n) const noexcept;

  /// "(A=a1, B=b2)" style label using declared names.
  std::string label(const MultiIndex& n) const;

  friend bool operator==(const ActionRing& a, const ActionRing& b) {
    return a.dims_ == b.dims_ && a.names_equal(b);
  }

 private:
  bool names_equal(const ActionRing& other) const;

  std::vector<Action> actions_;
  std::vector<std::size_t> dims_;
  std::vector<std::size_t> strides_;
  std::size_t grid_size_ = 0;
};

/// Every elementary prospect of `ring` in flat-index order.
std::vector<MultiIndex> enumerate_elementary(const ActionRing& ring);

/// A set of elementary prospects: the classical support of an element of
/// the action ring. The empty event is the impossible action, the full
/// grid the identity action.
class Event {
 public:
  /// The impossible event over `ring`.
  explicit Event(const ActionRing& ring);
  /// ValidationError if a member lies outside the grid.
  Event(const ActionRing& ring, std::span<const MultiIndex> members);
  Event(const ActionRing& ring, std::initializer_list<MultiIndex> members);

  static Event impossible(const ActionRing& ring) { return Event(ring); }
  static Event identity(const ActionRing& ring);
  /// Built from sorted, unique, in-range flat indices.
  static Event from_flat(const ActionRing& ring, std::vector<std::size_t> flat);

  bool empty() const noexcept { return flat_.empty(); }
  std::size_t size() const noexcept { return flat_.size(); }
  bool contains_flat(std::size_t flat) const noexcept;
  bool contains(const MultiIndex& n) const;

  /// Sorted ascending flat indices.
  const std::vector<std::size_t>& flat_members() const noexcept { return flat_; }
  std::vector<MultiIndex> members() const;
  const std::vector<std::size_t>& dims() const noexcept { return dims_; }

  friend bool operator==(const Event&, const Event&) = default;

 private:
  Event(std::vector<std::size_t> dims, std::vector<std::size_t> flat)
      : dims_(std::move(dims)), flat_(std::move(flat)) {}

  friend Event event_conjunction(const Event& a, const Event& b);
  friend Event event_union(const Event& a, const Event& b);

  std::vector<std::size_t> dims_;
  std::vector<std::size_t> flat_;
};

/// Joint action AB: set intersection. StructuralError on ring mismatch.
Event event_conjunction(const Event& a, const Event& b);
/// A + B: set union. StructuralError on ring mismatch.
Event event_union(const Event& a, const Event& b);

/// Cartesian product of per-action mode subsets (1-based indices).
/// ValidationError for a wrong subset count, an empty subset, a repeated
/// mode or an out-of-range mode.
Event prospect_support(const ActionRing& ring,
                       std::span<const std::vector<std::size_t>> subsets);
/// Same, with subsets given by mode name.
Event prospect_support(const ActionRing& ring,
                       std::span<const std::vector<std::string>> subsets);

}  // namespace qdt
