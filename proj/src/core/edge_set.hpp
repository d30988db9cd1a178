// Copyright 2026 The cubic2ec Authors
// Licensed under the Apache License, Version 2.0 (the "License");
// you may not use this file except in compliance with the License.
// You may obtain a copy of the License at
//
//     http://www.apache.org/licenses/LICENSE-2.0
//
// Unless required by applicable law or agreed to in writing, software
// distributed under the License is distributed on an "AS IS" BASIS,
// WITHOUT WARRANTIES OR CONDITIONS OF ANY KIND, either express or implied.
// See the License for the specific language governing permissions and
// limitations under the License.

#ifndef CUBIC2EC_CORE_EDGE_SET_HPP_
#define CUBIC2EC_CORE_EDGE_SET_HPP_

#include <bit>
#include <compare>
#include <cstdint>
#include <functional>
#include <vector>

namespace cubic2ec {

using VertexId = int;
using EdgeId = int;

// Edge subsets of graphs with at most 64 edges. Every exact routine in this
// library (certification, oracles) works well below that ceiling.
inline constexpr int kMaxEdges = 64;

class EdgeSet {
 public:
  constexpr EdgeSet() = default;
  constexpr explicit EdgeSet(std::uint64_t bits) : bits_(bits) {}

  static constexpr EdgeSet all(int edge_count) {
    return EdgeSet(edge_count >= 64 ? ~std::uint64_t{0}
                                    : (std::uint64_t{1} << edge_count) - 1);
  }
  template <typename Range>
  static EdgeSet from_ids(const Range& ids) {
    EdgeSet s;
    for (EdgeId e : ids) s.insert(e);
    return s;
  }

  constexpr bool contains(EdgeId e) const { return (bits_ >> e) & 1U; }
  constexpr void insert(EdgeId e) { bits_ |= std::uint64_t{1} << e; }
  constexpr void erase(EdgeId e) { bits_ &= ~(std::uint64_t{1} << e); }
  constexpr int size() const { return std::popcount(bits_); }
  constexpr bool empty() const { return bits_ == 0; }
  constexpr std::uint64_t bits() const { return bits_; }

  constexpr EdgeSet operator|(EdgeSet o) const { return EdgeSet(bits_ | o.bits_); }
  constexpr EdgeSet operator&(EdgeSet o) const { return EdgeSet(bits_ & o.bits_); }
  constexpr EdgeSet minus(EdgeSet o) const { return EdgeSet(bits_ & ~o.bits_); }
  constexpr bool is_subset_of(EdgeSet o) const { return (bits_ & ~o.bits_) == 0; }

  std::vector<EdgeId> ids() const {
    std::vector<EdgeId> out;
    out.reserve(size());
    for (std::uint64_t b = bits_; b != 0; b &= b - 1) {
      out.push_back(std::countr_zero(b));
    }
    return out;
  }

  // Lexicographic order of the sorted id lists.
  friend bool lex_less(EdgeSet a, EdgeSet b) {
    const std::uint64_t diff = a.bits_ ^ b.bits_;
    if (diff == 0) return false;
    const int first = std::countr_zero(diff);
    // The set holding the first differing id sorts first, unless the other
    // set has run out of ids (then it is a prefix and sorts first).
    const std::uint64_t above = first == 63 ? 0 : ~std::uint64_t{0} << (first + 1);
    if (a.contains(first)) return (b.bits_ & above) != 0;
    return (a.bits_ & above) == 0;
  }

  friend constexpr bool operator==(EdgeSet, EdgeSet) = default;
  friend constexpr auto operator<=>(EdgeSet a, EdgeSet b) { return a.bits_ <=> b.bits_; }

 private:
  std::uint64_t bits_ = 0;
};

struct EdgeSetHash {
  std::size_t operator()(EdgeSet s) const { return std::hash<std::uint64_t>{}(s.bits()); }
};

}  // namespace cubic2ec

#endif  // CUBIC2EC_CORE_EDGE_SET_HPP_
