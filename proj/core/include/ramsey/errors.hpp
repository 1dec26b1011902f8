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

#include <stdexcept>
#include <string>

namespace ramsey {

/// Base class for every error raised by the library.
class Error : public std::runtime_error {
 public:
  using std::runtime_error::runtime_error;
};

#define RAMSEY_DEFINE_ERROR(Name)          \
  class Name : public Error {              \
   public:                                 \
    using Error::Error;                    \
  }

RAMSEY_DEFINE_ERROR(OutOfRange);
RAMSEY_DEFINE_ERROR(NotALimit);
RAMSEY_DEFINE_ERROR(NotAMember);
RAMSEY_DEFINE_ERROR(HostMismatch);
RAMSEY_DEFINE_ERROR(LevelMismatch);
RAMSEY_DEFINE_ERROR(DomainMismatch);
RAMSEY_DEFINE_ERROR(InfiniteFamily);
RAMSEY_DEFINE_ERROR(Unsupported);
RAMSEY_DEFINE_ERROR(ParseError);

/// A search or construction would exceed its configured budget.
RAMSEY_DEFINE_ERROR(Infeasible);

#undef RAMSEY_DEFINE_ERROR

}  // namespace ramsey
