// Copyright 2026 The chiralq Authors
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

// Line-oriented gate scripts for a qubit chain:
//
//   RESET q v          v is +1 or -1
//   GATE q name        see gates::named
//   LINK i j ON|OFF
//   XCHG i j theta     exchange pulse of area theta over the link (i, j)
//   CNOT c t
//   RF q amp duration  selective pulse resonant with qubit q
//   MEASURE q
//
// '#' starts a comment. Keywords are case-insensitive.

#include <string>
#include <string_view>
#include <variant>
#include <vector>

namespace chiralq::script {

struct Reset { int q; int value; };
struct Gate { int q; std::string name; };
struct Link { int i; int j; bool on; };
struct Exchange { int i; int j; double theta; };
struct Cnot { int control; int target; };
struct Rf { int q; double amp; double duration; };
struct Measure { int q; };

using Op = std::variant<Reset, Gate, Link, Exchange, Cnot, Rf, Measure>;

struct Instruction {
  int line = 0;
  /// Source text with comments and surrounding blanks removed.
  std::string text;
  Op op;
};

/// Throws ScriptError with the offending line number.
std::vector<Instruction> parse(std::string_view source);

/// Largest qubit index any instruction touches, or -1 for an empty script.
int max_qubit(const std::vector<Instruction>& program);

}  // namespace chiralq::script
