// Copyright 2026 The ramsey-approx Authors
//
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

#pragma once

#include <compare>
#include <cstdint>
#include <string>
#include <string_view>

namespace ramsey {

/// An ordinal below omega^2, written omega*q + r.
struct Ordinal {
  std::uint32_t q = 0;  // coefficient of omega
  std::uint32_t r = 0;  // finite part

  constexpr Ordinal() = default;
  constexpr Ordinal(std::uint32_t finite) : r(finite) {}  // NOLINT: finite ordinals convert implicitly
  constexpr Ordinal(std::uint32_t omega_coeff, std::uint32_t finite_part)
      : q(omega_coeff), r(finite_part) {}

  static constexpr Ordinal omega(std::uint32_t times = 1) { return {times, 0}; }

  constexpr bool is_zero() const { return q == 0 && r == 0; }
  constexpr bool is_limit() const { return r == 0 && q != 0; }
  constexpr bool is_successor() const { return r > 0; }
  constexpr bool is_finite() const { return q == 0; }

  constexpr Ordinal succ() const { return {q, r + 1}; }
  /// Immediate predecessor; only meaningful for successor ordinals.
  constexpr Ordinal pred() const { return {q, r - 1}; }

  friend constexpr auto operator<=>(const Ordinal&, const Ordinal&) = default;
  friend constexpr bool operator==(const Ordinal&, const Ordinal&) = default;
};

enum class Cmp { LT, EQ, GT };

Cmp ord_compare(const Ordinal& a, const Ordinal& b);

/// The fixed cofinal map of a limit alpha = omega*(n+1): i -> omega*n + i.
Ordinal cofinal_map(const Ordinal& alpha, std::uint32_t i);

/// Renders as "w*q+r" ("3", "w", "w*2+1").
std::string to_string(const Ordinal& a);

/// Accepts "k", "w", "w+k", "w*q", "w*q+k".
Ordinal parse_ordinal(std::string_view text);

std::string to_string(Cmp c);

}  // namespace ramsey
