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

#include <cstdint>
#include <optional>
#include <stdexcept>
#include <string>

#include "ramsey/serialize.hpp"

namespace ramsey::cli {

enum Exit : int {
  kOk = 0,
  kIoError = 1,
  kInvalid = 2,
  kViolation = 3,
  kInfeasible = 4,
  kNoWitness = 5,
};

class IoError : public std::runtime_error {
  using std::runtime_error::runtime_error;
};

struct Globals {
  std::string format = "json";
  std::string out;
  unsigned jobs = 1;
  std::optional<std::uint64_t> budget;
};

/// Writes text to --out or stdout.
void emit(const Globals& g, const std::string& text);
/// Wraps data and meta sections into a versioned report.
Json report(const std::string& command, Json data, Json meta);
void progress(const std::string& line);

struct TreeArgs {
  std::string alpha;
  std::uint32_t n = 0;
  std::string kind = "T";
};
int cmd_tree(const Globals& g, const TreeArgs& a);

struct CountArgs {
  std::uint32_t k = 1;
  std::uint32_t n = 0;
  std::string what = "R";
};
int cmd_count(const Globals& g, const CountArgs& a);

struct EnumerateArgs {
  std::string what;
  std::string alpha;
  std::uint32_t n = 0;
  std::uint32_t m = 0;
};
int cmd_enumerate(const Globals& g, const EnumerateArgs& a);

struct CanonizeArgs {
  std::string input;
  std::optional<std::uint32_t> k;  // defaults to m for R, n for AR
};
int cmd_canonize(const Globals& g, const CanonizeArgs& a);

struct VerifyArgs {
  std::string suite;
  std::string alpha = "1";
  std::uint32_t n = 0;
  std::uint32_t k = 1;
  std::optional<std::uint32_t> max_m;
  std::string gamma = "0";
  std::string beta = "1";
  std::string l = "0..3";
};
int cmd_verify(const Globals& g, const VerifyArgs& a);

struct OrderArgs {
  std::string alpha;
  std::uint32_t n = 0;
  std::uint32_t m = 0;
};
int cmd_order(const Globals& g, const OrderArgs& a);

}  // namespace ramsey::cli
