// Copyright 2026 The noisyhg Authors
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

#ifndef NHG_CORE_ERRORS_HPP
#define NHG_CORE_ERRORS_HPP

#include <stdexcept>
#include <string>

namespace nhg {

enum class ErrorCode {
  invalid_argument,
  parse_error,
  missing_value,
  agent_not_member,
  coverage_insufficient,
  instance_too_large,
  enumeration_too_large,
  missing_assignment,
  empty_sample,
  overflow,
  tie_encountered,
  unsupported_game,
  boundary_point,
  io_error,
};

class Error : public std::runtime_error {
 public:
  Error(ErrorCode code, const std::string& what)
      : std::runtime_error(what), code_(code) {}
  ErrorCode code() const noexcept { return code_; }

 private:
  ErrorCode code_;
};

inline void require(bool cond, ErrorCode code, const std::string& what) {
  if (!cond) throw Error(code, what);
}

}  // namespace nhg

#endif  // NHG_CORE_ERRORS_HPP
