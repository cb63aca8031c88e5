// Copyright 2026 The fskill Authors.
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

namespace fskill {

enum class ErrorKind {
  kInvalidArgument,  // caller violated a precondition
  kUndefinedMetric,  // metric has no value for this input (e.g. zero sentences)
  kIo,               // file could not be read or written
  kParse,            // input did not match its declared schema
};

// All library failures are reported as fskill::Error. The CLI maps kIo and
// kParse to data errors and everything else to usage errors.
class Error : public std::runtime_error {
 public:
  Error(ErrorKind kind, const std::string& what)
      : std::runtime_error(what), kind_(kind) {}

  ErrorKind kind() const { return kind_; }

 private:
  ErrorKind kind_;
};

[[noreturn]] inline void fail(ErrorKind kind, const std::string& what) {
  throw Error(kind, what);
}

inline void require(bool ok, const std::string& what) {
  if (!ok) fail(ErrorKind::kInvalidArgument, what);
}

}  // namespace fskill
