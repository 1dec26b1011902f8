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

#include "ramsey/ordinal.hpp"

#include <charconv>

#include "ramsey/errors.hpp"

namespace ramsey {

Cmp ord_compare(const Ordinal& a, const Ordinal& b) {
  if (a < b) return Cmp::LT;
  if (b < a) return Cmp::GT;
  return Cmp::EQ;
}

Ordinal cofinal_map(const Ordinal& alpha, std::uint32_t i) {
  if (!alpha.is_limit()) {
    throw NotALimit("cofinal_map: " + to_string(alpha) + " is not a limit ordinal");
  }
  return {alpha.q - 1, i};
}

std::string to_string(const Ordinal& a) {
  if (a.q == 0) return std::to_string(a.r);
  std::string s = "w";
  if (a.q != 1) s += "*" + std::to_string(a.q);
  if (a.r != 0) s += "+" + std::to_string(a.r);
  return s;
}

std::string to_string(Cmp c) {
  switch (c) {
    case Cmp::LT: return "LT";
    case Cmp::EQ: return "EQ";
    case Cmp::GT: return "GT";
  }
  return "?";
}

namespace {

std::uint32_t parse_nat(std::string_view s, std::string_view whole) {
  std::uint32_t v = 0;
  if (s.empty()) throw ParseError("bad ordinal: '" + std::string(whole) + "'");
  auto [ptr, ec] = std::from_chars(s.data(), s.data() + s.size(), v);
  if (ec != std::errc() || ptr != s.data() + s.size()) {
    throw ParseError("bad ordinal: '" + std::string(whole) + "'");
  }
  return v;
}

}  // namespace

Ordinal parse_ordinal(std::string_view text) {
  if (text.empty()) throw ParseError("empty ordinal");
  if (text.front() != 'w') return Ordinal(parse_nat(text, text));

  std::string_view rest = text.substr(1);
  std::uint32_t q = 1;
  if (!rest.empty() && rest.front() == '*') {
    auto plus = rest.find('+');
    q = parse_nat(rest.substr(1, plus == std::string_view::npos ? std::string_view::npos : plus - 1), text);
    rest = plus == std::string_view::npos ? std::string_view{} : rest.substr(plus);
  }
  std::uint32_t r = 0;
  if (!rest.empty()) {
    if (rest.front() != '+') throw ParseError("bad ordinal: '" + std::string(text) + "'");
    r = parse_nat(rest.substr(1), text);
  }
  if (q == 0) throw ParseError("bad ordinal: '" + std::string(text) + "'");
  return {q, r};
}

}  // namespace ramsey
