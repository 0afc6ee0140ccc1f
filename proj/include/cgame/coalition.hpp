// Copyright 2026 The cgame Authors
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
#ifndef CGAME_COALITION_HPP_
#define CGAME_COALITION_HPP_

#include <bit>
#include <cstddef>
#include <cstdint>
#include <vector>

namespace cgame {

// Subset of the ordered player list, bit i standing for player i.
class Coalition {
 public:
  static constexpr std::size_t kMaxPlayers = 63;

  constexpr Coalition() = default;
  constexpr explicit Coalition(std::uint64_t bits) : bits_(bits) {}

  static constexpr Coalition singleton(std::size_t i) { return Coalition(std::uint64_t{1} << i); }
  static constexpr Coalition grand(std::size_t n) {
    return Coalition(n == 64 ? ~std::uint64_t{0} : (std::uint64_t{1} << n) - 1);
  }
  static Coalition of(const std::vector<std::size_t>& members) {
    std::uint64_t b = 0;
    for (auto i : members) b |= std::uint64_t{1} << i;
    return Coalition(b);
  }

  constexpr std::uint64_t bits() const { return bits_; }
  constexpr bool contains(std::size_t i) const { return (bits_ >> i) & 1u; }
  constexpr bool empty() const { return bits_ == 0; }
  constexpr std::size_t size() const { return static_cast<std::size_t>(std::popcount(bits_)); }
  constexpr bool subset_of(Coalition o) const { return (bits_ & ~o.bits_) == 0; }

  std::vector<std::size_t> members() const {
    std::vector<std::size_t> out;
    for (std::uint64_t b = bits_; b != 0; b &= b - 1) {
      out.push_back(static_cast<std::size_t>(std::countr_zero(b)));
    }
    return out;
  }

  constexpr Coalition with(std::size_t i) const { return Coalition(bits_ | (std::uint64_t{1} << i)); }
  constexpr Coalition without(std::size_t i) const { return Coalition(bits_ & ~(std::uint64_t{1} << i)); }

  friend constexpr Coalition operator|(Coalition a, Coalition b) { return Coalition(a.bits_ | b.bits_); }
  friend constexpr Coalition operator&(Coalition a, Coalition b) { return Coalition(a.bits_ & b.bits_); }
  // Set difference.
  friend constexpr Coalition operator-(Coalition a, Coalition b) { return Coalition(a.bits_ & ~b.bits_); }
  friend constexpr bool operator==(Coalition a, Coalition b) = default;
  friend constexpr auto operator<=>(Coalition a, Coalition b) = default;

 private:
  std::uint64_t bits_ = 0;
};

}  // namespace cgame

#endif  // CGAME_COALITION_HPP_
